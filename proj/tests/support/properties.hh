#ifndef PBWGB_TESTS_PROPERTIES_HH
#define PBWGB_TESTS_PROPERTIES_HH

// Randomized law suites shared by the unit tests and the acceptance runner.
// Every suite runs a fixed seed and reports case/failure counts so callers
// can assert zero failures and a minimum case count.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pbwgb/pbwgb.hh"

namespace testsupport {

struct SuiteReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string note;  // first failure, for the log

  void fail(const std::string& what) {
    ++failures;
    if (note.empty()) note = what;
  }
};

using Rng = std::mt19937_64;

inline pbwgb::Exponent random_exponent(Rng& rng, std::size_t n, std::uint32_t cap) {
  pbwgb::Exponent e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = rng() % (cap + 1);
  return e;
}

inline pbwgb::Scalar random_scalar(Rng& rng, const pbwgb::Field& k, bool allow_zero = false) {
  auto small = [&]() {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = 1 + static_cast<long>(rng() % 3);
    mpq_class q(num, den);
    q.canonicalize();  // mpq_class(n, d) stores the raw pair
    return q;
  };
  while (true) {
    pbwgb::Scalar s(small(), k.extension ? small() : mpq_class(0));
    if (allow_zero || !s.is_zero()) return s;
  }
}

inline pbwgb::Poly random_poly(Rng& rng, const pbwgb::Presentation& p, std::uint32_t cap,
                               std::size_t terms, bool allow_zero = false) {
  std::vector<pbwgb::Term> t;
  for (std::size_t i = 0; i < terms; ++i)
    t.push_back(pbwgb::Term{random_exponent(rng, p.n(), cap), random_scalar(rng, p.field(), true)});
  pbwgb::Poly f = p.canonical(std::move(t));
  if (!allow_zero && f.is_zero()) return p.one();
  return f;
}

inline pbwgb::Vec random_vec(Rng& rng, const pbwgb::Presentation& p, std::size_t s,
                             std::uint32_t cap, std::size_t terms) {
  pbwgb::Vec v(s);
  for (std::size_t i = 0; i < s; ++i) v.c[i] = random_poly(rng, p, cap, terms, true);
  if (v.is_zero()) v.c[0] = p.one();
  return v;
}

inline std::vector<pbwgb::Presentation> sample_algebras() {
  using namespace pbwgb;
  std::vector<Presentation> out;
  out.push_back(make_preset("qplane", "I*sqrt2"));
  out.push_back(make_preset("qplane", "3/5"));
  out.push_back(make_preset("mq2", "I*sqrt2"));
  out.push_back(make_preset("weyl", "1"));
  out.push_back(make_preset("poly", "3"));
  // a tailed three-variable algebra: z*y = y*z + x, other pairs commute
  {
    Presentation p(rationals(), {"x", "y", "z"}, glex_order());
    Exponent ex(3);
    ex[0] = 1;
    p.set_relation(1, 2, Scalar(1), p.monomial(ex));
    out.push_back(std::move(p));
  }
  return out;
}

// --- order laws -------------------------------------------------------------

inline SuiteReport admissible_order_laws() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0xA11CE5);
  struct Probe {
    OrderSpec spec;
    std::size_t dim;
  };
  std::vector<Probe> probes = {
      {lex_order(), 3},
      {glex_order(), 3},
      {wlex_order({1, 3}), 2},
      {wlex_order({2, 1}), 2},
      {block_order(glex_order(), 2, lex_order(), false), 4},
      {opposite_order(lex_order()), 3},
      {comp_up_order(glex_order()), 6},
      {comp_down_order(glex_order()), 6},
      {elim_up_order(wlex_order({1, 3})), 4},
      {elim_down_order(glex_order()), 6},
  };
  for (const auto& pr : probes) {
    for (int c = 0; c < 40; ++c) {
      ++rep.cases;
      Exponent a = random_exponent(rng, pr.dim, 4);
      Exponent b = random_exponent(rng, pr.dim, 4);
      Exponent g = random_exponent(rng, pr.dim, 4);
      Exponent zero(pr.dim);
      auto c1 = cmp(pr.spec, a, b), c2 = cmp(pr.spec, b, a);
      if ((c1 == std::strong_ordering::less) != (c2 == std::strong_ordering::greater))
        rep.fail("antisymmetry broke under " + format_order(pr.spec));
      if ((c1 == std::strong_ordering::equal) != (a == b))
        rep.fail("equality must mean identical exponents under " + format_order(pr.spec));
      if (cmp(pr.spec, zero, a) == std::strong_ordering::greater)
        rep.fail("zero is not minimal under " + format_order(pr.spec));
      if (c1 == std::strong_ordering::less &&
          cmp(pr.spec, a + g, b + g) != std::strong_ordering::less)
        rep.fail("translation invariance broke under " + format_order(pr.spec));
      // transitivity probe on a sorted triple
      std::vector<Exponent> tri = {a, b, g};
      std::sort(tri.begin(), tri.end(), [&](const Exponent& x, const Exponent& y) {
        return cmp(pr.spec, x, y) == std::strong_ordering::less;
      });
      if (cmp(pr.spec, tri[0], tri[2]) == std::strong_ordering::greater)
        rep.fail("transitivity broke under " + format_order(pr.spec));
    }
    std::vector<Exponent> samples;
    for (int c = 0; c < 12; ++c) samples.push_back(random_exponent(rng, pr.dim, 3));
    if (!is_admissible_witness(pr.spec, samples).empty())
      rep.fail("witness reported violations for " + format_order(pr.spec));
    ++rep.cases;
  }
  return rep;
}

// --- products ---------------------------------------------------------------

inline SuiteReport pbw_associativity() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0xBEEF01);
  for (const auto& p : sample_algebras()) {
    for (int c = 0; c < 20; ++c) {
      ++rep.cases;
      Poly a = p.monomial(random_exponent(rng, p.n(), 2));
      Poly b = p.monomial(random_exponent(rng, p.n(), 2));
      Poly cc = p.monomial(random_exponent(rng, p.n(), 2));
      if (!p.sub(p.mul(p.mul(a, b), cc), p.mul(a, p.mul(b, cc))).is_zero())
        rep.fail("monomial associativity broke");
    }
    for (int c = 0; c < 6; ++c) {
      ++rep.cases;
      Poly a = random_poly(rng, p, 2, 2);
      Poly b = random_poly(rng, p, 2, 2);
      Poly cc = random_poly(rng, p, 2, 2);
      if (!p.sub(p.mul(p.mul(a, b), cc), p.mul(a, p.mul(b, cc))).is_zero())
        rep.fail("polynomial associativity broke");
      if (!p.sub(p.mul(a, p.add(b, cc)), p.add(p.mul(a, b), p.mul(a, cc))).is_zero())
        rep.fail("left distributivity broke");
    }
  }
  return rep;
}

inline SuiteReport env_centrality() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0xCE17A1);
  for (const auto& r : sample_algebras()) {
    for (EnvKind kind : {EnvKind::comp_up, EnvKind::comp_down, EnvKind::elim_up, EnvKind::elim_down}) {
      Presentation env = enveloping(r, kind);
      std::size_t n = r.n();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ++rep.cases;
          const Relation& rel = env.rel(i, n + j);
          if (!(rel.q == Scalar(1)) || !rel.p.is_zero())
            rep.fail("mixed relation block is not plain commutation");
          Poly left = env.variable(i), right = env.variable(n + j);
          if (!env.sub(env.mul(left, right), env.mul(right, left)).is_zero())
            rep.fail("left and right copies do not commute");
        }
      // random mixed products, once per kind
      ++rep.cases;
      Poly a = random_poly(rng, r, 2, 2);
      Poly b = random_poly(rng, r, 2, 2);
      Poly ea = embed_left(env, a), eb = embed_right(env, b);
      if (!env.sub(env.mul(ea, eb), env.mul(eb, ea)).is_zero())
        rep.fail("embedded copies do not commute");
    }
  }
  return rep;
}

// --- Buchberger identities ---------------------------------------------------

inline SuiteReport spoly_cancellation() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0x5B0715);
  auto algebras = sample_algebras();
  while (rep.cases < 120) {
    const Presentation& p = algebras[rng() % algebras.size()];
    std::size_t s = 1 + rng() % 3;
    ModOrder mo{(rng() & 1) ? ModKind::top : ModKind::pot, p.order()};
    Vec gi = random_vec(rng, p, s, 2, 2);
    Vec gj = random_vec(rng, p, s, 2, 2);
    if (leading_exp(mo, gi).comp != leading_exp(mo, gj).comp) continue;
    ++rep.cases;
    SPair sp = s_polynomial(p, gi, gj, mo);
    Vec check = sub(p, lmul(p, sp.rij, gi), lmul(p, sp.rji, gj));
    if (!sub(p, sp.sp, check).is_zero()) rep.fail("s-polynomial identity broke");
    if (!sp.sp.is_zero()) {
      ModExp l = leading_exp(mo, sp.sp);
      ModExp li = leading_exp(mo, gi);
      Exponent gamma = cw_max(li.exp, leading_exp(mo, gj).exp);
      if (l.comp == li.comp && l.exp == gamma)
        rep.fail("s-polynomial did not cancel the lcm term");
    }
  }
  return rep;
}

inline SuiteReport cofactor_identities() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0xC0F4C7);
  auto algebras = sample_algebras();
  int run = 0;
  while (rep.cases < 110) {
    const Presentation& p = algebras[run++ % algebras.size()];
    std::size_t s = 1 + rng() % 2;
    ModOrder mo{(rng() & 1) ? ModKind::top : ModKind::pot, p.order()};
    std::vector<Vec> f;
    std::size_t t = 2 + rng() % 2;
    for (std::size_t i = 0; i < t; ++i) f.push_back(random_vec(rng, p, s, 2, 2));
    GBOptions opts;
    opts.track_records = (run & 1) != 0;
    opts.interreduce = !opts.track_records;
    GBResult gb = buchberger_left(p, f, mo, opts);
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
      ++rep.cases;
      Vec acc(s);
      for (auto& c : acc.c) c = p.zero();
      for (std::size_t i = 0; i < f.size(); ++i) acc = add(p, acc, lmul(p, gb.q[k][i], f[i]));
      if (!sub(p, acc, gb.basis[k]).is_zero()) rep.fail("cofactor matrix identity broke");
    }
    for (const auto& rec : gb.records) {
      ++rep.cases;
      Vec lhs = sub(p, lmul(p, rec.rij, gb.basis[rec.i]), lmul(p, rec.rji, gb.basis[rec.j]));
      Vec rhs(s);
      for (auto& c : rhs.c) c = p.zero();
      for (const auto& [k, h] : rec.h) rhs = add(p, rhs, lmul(p, h, gb.basis[k]));
      if (!sub(p, lhs, rhs).is_zero()) rep.fail("s-pair reduction record broke");
    }
  }
  return rep;
}

// --- enveloping-module laws ---------------------------------------------------

inline SuiteReport mult_map_law() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0x317CAB);
  auto algebras = sample_algebras();
  for (const auto& r : algebras) {
    for (EnvKind kind : {EnvKind::comp_up, EnvKind::elim_up}) {
      Presentation env = enveloping(r, kind);
      for (int c = 0; c < 10; ++c) {
        ++rep.cases;
        std::size_t s = 1 + rng() % 2;
        Vec h(s);
        for (std::size_t i = 0; i < s; ++i) {
          Poly acc = env.zero();
          for (int tcount = 0; tcount < 2; ++tcount)
            acc = env.add(acc, tensor_poly(env, random_poly(rng, r, 2, 1, true),
                                           random_poly(rng, r, 2, 1, true)));
          h.c[i] = acc;
        }
        Poly a = random_poly(rng, r, 2, 2);
        Poly b = random_poly(rng, r, 2, 2);
        Vec moved = lmul(env, tensor_poly(env, a, b), h);
        Vec lhs = mult_map(r, env, moved);
        Vec rhs = act(r, a, mult_map(r, env, h), b);
        if (!sub(r, lhs, rhs).is_zero()) rep.fail("multiplication map is not a bimodule map");
      }
    }
  }
  return rep;
}

inline SuiteReport exponent_lemma_shape() {
  using namespace pbwgb;
  SuiteReport rep;
  Rng rng(0xE1E333);
  auto algebras = sample_algebras();
  for (const auto& r : algebras) {
    for (EnvKind kind : {EnvKind::comp_up, EnvKind::elim_up, EnvKind::comp_down, EnvKind::elim_down}) {
      bool left_pure = (kind == EnvKind::comp_up || kind == EnvKind::elim_up);
      Presentation env = enveloping(r, kind);
      ModOrder envmo{ModKind::top, env.order()};
      ModOrder rmo{ModKind::top, r.order()};
      for (int c = 0; c < 5; ++c) {
        ++rep.cases;
        std::size_t s = 1 + rng() % 2;
        std::size_t comp = rng() % s;
        Exponent alpha = random_exponent(rng, r.n(), 3);
        Poly head = left_pure ? embed_left(env, r.monomial(alpha))
                              : embed_right(env, r.monomial(alpha));
        Vec h = unit_vec(env, s, comp, head);
        ModExp lead = leading_exp(envmo, h);
        // sprinkle junk strictly below the lead
        for (int extra = 0; extra < 6; ++extra) {
          std::size_t ec = rng() % s;
          Exponent l = random_exponent(rng, r.n(), 2), rr = random_exponent(rng, r.n(), 2);
          Exponent cand = join_env_exponent(env, l, rr);
          ModExp me{cand, ec};
          if (cmp_module(envmo, me, lead) != std::strong_ordering::less) continue;
          h.c[ec] = env.add(h.c[ec], env.monomial(cand, random_scalar(rng, env.field())));
        }
        if (!(leading_exp(envmo, h) == lead)) continue;  // junk spoiled the shape; skip
        Vec img = mult_map(r, env, h);
        if (img.is_zero()) {
          rep.fail("pure-sided lead still mapped to zero");
          continue;
        }
        auto [lft, rgt] = split_env_exponent(env, lead.exp);
        Exponent expect = left_pure ? lft : rgt;
        ModExp got = leading_exp(rmo, img);
        if (!(got.comp == lead.comp && got.exp == expect))
          rep.fail("projected leading exponent moved");
      }
    }
  }
  return rep;
}

}  // namespace testsupport

#endif
