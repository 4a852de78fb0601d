#ifndef PBWGB_GROEBNER_HH
#define PBWGB_GROEBNER_HH

// Left Groebner bases of submodules of P^s for a PBW presentation P, by
// Buchberger completion. Division tracks exact left cofactors; the run can
// additionally record, for every treated S-pair, the standard representation
// of the S-vector over the final basis, which is what the syzygy extraction
// consumes. For record-producing runs no pairs may be skipped and the basis
// is not inter-reduced, so the inputs stay as a positional prefix.

#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <vector>

#include "error.hh"
#include "free_module.hh"
#include "order.hh"
#include "pbw.hh"

namespace pbwgb {

struct NFResult {
  std::vector<Poly> cof;  // aligned with the divisor list: f = sum cof_k g_k + rem
  Vec rem;
};

// Total left normal form: every term of the remainder has a module exponent
// outside the leading-exponent cone of G. Divisor choice: first match in
// list order.
inline NFResult left_normal_form(const Presentation& p, const Vec& f, const std::vector<Vec>& g,
                                 const ModOrder& mo) {
  NFResult res;
  res.cof.assign(g.size(), p.zero());
  res.rem = Vec(f.size());
  for (auto& comp : res.rem.c) comp = p.zero();

  std::vector<ModExp> glead;
  std::vector<Scalar> glc;
  glead.reserve(g.size());
  for (const auto& v : g) {
    glead.push_back(leading_exp(mo, v));
    glc.push_back(v.c[glead.back().comp].lt().c);
  }

  Vec work = f;
  while (!work.is_zero()) {
    ModExp le = leading_exp(mo, work);
    const Term& lead = work.c[le.comp].lt();
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (glead[k].comp != le.comp || !divides(glead[k].exp, le.exp)) continue;
      Exponent u = le.exp - glead[k].exp;
      // leading coefficient of x^u * x^beta is the q-twist lambda
      Scalar lambda = p.mul_monomials(u, glead[k].exp).lt().c;
      Scalar cf = div(p.field(), lead.c, pbwgb::mul(p.field(), glc[k], lambda));
      Term t{u, cf};
      work = sub(p, work, lmul(p, t, g[k]));
      res.cof[k].t.push_back(t);  // u strictly decreases per divisor, stays sorted
      reduced = true;
      break;
    }
    if (!reduced) {
      res.rem.c[le.comp].t.push_back(lead);
      work.c[le.comp].t.erase(work.c[le.comp].t.begin());
    }
  }
  return res;
}

struct SPair {
  Vec sp;
  Term rij, rji;  // sp = rij * gi - rji * gj
};

// S-vector of two elements whose leading exponents share a component; both
// sides are scaled so the lcm term appears with coefficient one.
inline SPair s_polynomial(const Presentation& p, const Vec& gi, const Vec& gj, const ModOrder& mo) {
  ModExp ei = leading_exp(mo, gi), ej = leading_exp(mo, gj);
  if (ei.comp != ej.comp)
    throw math_error("s-polynomial of elements with different leading components");
  Exponent gamma = cw_max(ei.exp, ej.exp);
  Exponent ui = gamma - ei.exp, uj = gamma - ej.exp;
  Scalar li = p.mul_monomials(ui, ei.exp).lt().c;
  Scalar lj = p.mul_monomials(uj, ej.exp).lt().c;
  Term rij{ui, inv(p.field(), pbwgb::mul(p.field(), gi.c[ei.comp].lt().c, li))};
  Term rji{uj, inv(p.field(), pbwgb::mul(p.field(), gj.c[ej.comp].lt().c, lj))};
  SPair out{sub(p, lmul(p, rij, gi), lmul(p, rji, gj)), rij, rji};
  return out;
}

// One treated S-pair: sp(i,j) = rij g_i - rji g_j = sum_k h_k g_k over the
// final basis (the last h entry is the freshly added element when the
// reduction did not vanish).
struct SPairRecord {
  std::size_t i = 0, j = 0;
  Term rij, rji;
  std::vector<std::pair<std::size_t, Poly>> h;
};

struct GBOptions {
  bool interreduce = true;
  bool track_records = false;   // forces interreduce off and criteria off
  bool use_product_criterion = false;  // honored only for commutative presentations
};

struct GBResult {
  std::vector<Vec> basis;
  // basis[k] = sum_f q[k][f] * input[f], exactly.
  std::vector<std::vector<Poly>> q;
  std::vector<SPairRecord> records;
  std::size_t input_count = 0;
  std::size_t pairs_treated = 0;
  std::size_t pairs_skipped = 0;
};

namespace detail {
struct PairEntry {
  ModExp lcm;
  std::size_t i, j;
};
struct PairCmp {
  const ModOrder* mo;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    auto c = cmp_module(*mo, a.lcm, b.lcm);
    if (c != 0) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};
}  // namespace detail

inline GBResult buchberger_left(const Presentation& p, const std::vector<Vec>& f,
                                const ModOrder& mo, const GBOptions& opts = {}) {
  if (f.empty()) throw validation_error("empty generating family");
  for (const auto& v : f)
    if (v.is_zero()) throw validation_error("zero generator in input family");

  GBResult res;
  res.input_count = f.size();
  res.basis = f;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<Poly> row(f.size(), p.zero());
    row[k] = p.one();
    res.q.push_back(std::move(row));
  }

  std::vector<ModExp> lead;
  for (const auto& v : res.basis) lead.push_back(leading_exp(mo, v));

  detail::PairCmp pc{&mo};
  std::set<detail::PairEntry, detail::PairCmp> queue(pc);
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (lead[i].comp == lead[j].comp)
        queue.insert({ModExp{cw_max(lead[i].exp, lead[j].exp), lead[i].comp}, i, j});
  };
  for (std::size_t j = 1; j < res.basis.size(); ++j) push_pairs(j);

  bool criteria_ok = opts.use_product_criterion && !opts.track_records && p.is_commutative();

  const bool dbg = std::getenv("PBWGB_DEBUG") != nullptr;
  while (!queue.empty()) {
    detail::PairEntry e = *queue.begin();
    queue.erase(queue.begin());
    if (dbg && res.pairs_treated % 200 == 0)
      std::fprintf(stderr, "[gb] pairs=%zu basis=%zu queue=%zu\n", res.pairs_treated,
                   res.basis.size(), queue.size());
    if (criteria_ok && e.lcm.exp == lead[e.i].exp + lead[e.j].exp) {
      ++res.pairs_skipped;
      continue;
    }
    SPair sp = s_polynomial(p, res.basis[e.i], res.basis[e.j], mo);
    ++res.pairs_treated;
    NFResult nf = left_normal_form(p, sp.sp, res.basis, mo);
    SPairRecord rec;
    if (opts.track_records) {
      rec.i = e.i;
      rec.j = e.j;
      rec.rij = sp.rij;
      rec.rji = sp.rji;
      for (std::size_t k = 0; k < nf.cof.size(); ++k)
        if (!nf.cof[k].is_zero()) rec.h.emplace_back(k, nf.cof[k]);
    }
    if (!nf.rem.is_zero()) {
      std::size_t newk = res.basis.size();
      std::vector<Poly> row(f.size(), p.zero());
      for (std::size_t ff = 0; ff < f.size(); ++ff) {
        Poly acc = p.sub(p.mul(Poly{{sp.rij}}, res.q[e.i][ff]),
                         p.mul(Poly{{sp.rji}}, res.q[e.j][ff]));
        for (std::size_t k = 0; k < nf.cof.size(); ++k)
          if (!nf.cof[k].is_zero()) acc = p.sub(acc, p.mul(nf.cof[k], res.q[k][ff]));
        row[ff] = std::move(acc);
      }
      res.basis.push_back(nf.rem);
      res.q.push_back(std::move(row));
      lead.push_back(leading_exp(mo, nf.rem));
      if (opts.track_records) rec.h.emplace_back(newk, p.one());
      push_pairs(newk);
    }
    if (opts.track_records) res.records.push_back(std::move(rec));
  }

  if (opts.interreduce && !opts.track_records) {
    // drop elements whose leading exponent is divisible by another's
    std::vector<std::size_t> order_idx(res.basis.size());
    for (std::size_t k = 0; k < order_idx.size(); ++k) order_idx[k] = k;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      auto c = cmp_module(mo, lead[a], lead[b]);
      if (c != 0) return c == std::strong_ordering::less;
      return a < b;
    });
    std::vector<std::size_t> keep;
    for (std::size_t k : order_idx) {
      bool redundant = false;
      for (std::size_t l : keep)
        if (lead[l].comp == lead[k].comp && divides(lead[l].exp, lead[k].exp)) {
          redundant = true;
          break;
        }
      if (!redundant) keep.push_back(k);
    }
    std::sort(keep.begin(), keep.end());
    std::vector<Vec> nb;
    std::vector<std::vector<Poly>> nq;
    for (std::size_t k : keep) {
      nb.push_back(std::move(res.basis[k]));
      nq.push_back(std::move(res.q[k]));
    }
    res.basis = std::move(nb);
    res.q = std::move(nq);
    // tail-reduce each element against the others
    for (std::size_t k = 0; k < res.basis.size(); ++k) {
      std::vector<Vec> others;
      std::vector<std::size_t> omap;
      for (std::size_t l = 0; l < res.basis.size(); ++l)
        if (l != k) {
          others.push_back(res.basis[l]);
          omap.push_back(l);
        }
      if (others.empty()) break;
      NFResult nf = left_normal_form(p, res.basis[k], others, mo);
      res.basis[k] = nf.rem;
      for (std::size_t o = 0; o < others.size(); ++o) {
        if (nf.cof[o].is_zero()) continue;
        for (std::size_t ff = 0; ff < res.input_count; ++ff)
          res.q[k][ff] = p.sub(res.q[k][ff], p.mul(nf.cof[o], res.q[omap[o]][ff]));
      }
    }
  }
  return res;
}

inline bool is_left_groebner(const Presentation& p, const std::vector<Vec>& g, const ModOrder& mo) {
  if (g.empty()) return true;
  std::vector<ModExp> lead;
  for (const auto& v : g) {
    if (v.is_zero()) return false;
    lead.push_back(leading_exp(mo, v));
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (lead[i].comp != lead[j].comp) continue;
      SPair sp = s_polynomial(p, g[i], g[j], mo);
      if (sp.sp.is_zero()) continue;
      if (!left_normal_form(p, sp.sp, g, mo).rem.is_zero()) return false;
    }
  return true;
}

// Reduce to zero test without cofactors.
inline bool reduces_to_zero(const Presentation& p, const Vec& f, const std::vector<Vec>& g,
                            const ModOrder& mo) {
  if (f.is_zero()) return true;
  return left_normal_form(p, f, g, mo).rem.is_zero();
}

}  // namespace pbwgb

#endif
