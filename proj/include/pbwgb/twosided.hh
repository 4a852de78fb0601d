#ifndef PBWGB_TWOSIDED_HH
#define PBWGB_TWOSIDED_HH

// Two-sided Groebner bases of sub-bimodules of R^s. The main route lifts the
// generators to the enveloping algebra, runs a single left Buchberger pass
// there, and maps the result back through the multiplication map. The legacy
// route alternates left completion with closure under right multiplication
// by the generators until stable; it is kept for comparison.

#include <cstddef>
#include <vector>

#include "free_module.hh"
#include "groebner.hh"
#include "order.hh"
#include "pbw.hh"

namespace pbwgb {

// Monic, sorted descending by leading module exponent, duplicates removed.
inline std::vector<Vec> canonical_family(const Presentation& p, std::vector<Vec> v,
                                         const ModOrder& mo) {
  std::vector<Vec> out;
  for (auto& x : v) {
    if (x.is_zero()) continue;
    out.push_back(smul(p, inv(p.field(), leading_coeff(mo, x)), x));
  }
  auto vec_less = [&](const Vec& a, const Vec& b) {
    // descending by leading exponent, structural tiebreak for determinism
    auto la = leading_exp(mo, a), lb = leading_exp(mo, b);
    if (auto c = cmp_module(mo, la, lb); c != 0) return c == std::strong_ordering::greater;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& ta = a.c[i].t;
      const auto& tb = b.c[i].t;
      for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
        if (!(ta[k].exp == tb[k].exp))
          return cmp(mo.base, ta[k].exp, tb[k].exp) == std::strong_ordering::greater;
        if (ta[k].c != tb[k].c) {
          if (ta[k].c.a != tb[k].c.a) return ta[k].c.a < tb[k].c.a;
          return ta[k].c.b < tb[k].c.b;
        }
      }
      if (ta.size() != tb.size()) return ta.size() < tb.size();
    }
    return false;
  };
  std::sort(out.begin(), out.end(), vec_less);
  out.erase(std::unique(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return a == b; }),
            out.end());
  return out;
}

// Drop elements whose leading exponent lies in the cone of another's, then
// tail-reduce each survivor against the rest. Keeps the Groebner property
// and the generated bimodule.
inline std::vector<Vec> minimalize_family(const Presentation& p, std::vector<Vec> g,
                                          const ModOrder& mo) {
  std::vector<ModExp> lead;
  for (const auto& v : g) lead.push_back(leading_exp(mo, v));
  std::vector<std::size_t> idx(g.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = cmp_module(mo, lead[a], lead[b]); c != 0) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<std::size_t> keep;
  for (std::size_t k : idx) {
    bool redundant = false;
    for (std::size_t l : keep)
      if (lead[l].comp == lead[k].comp && divides(lead[l].exp, lead[k].exp)) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(k);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<Vec> kept;
  for (std::size_t k : keep) kept.push_back(std::move(g[k]));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<Vec> others;
    for (std::size_t l = 0; l < kept.size(); ++l)
      if (l != k) others.push_back(kept[l]);
    if (others.empty()) break;
    kept[k] = left_normal_form(p, kept[k], others, mo).rem;
  }
  return kept;
}

struct TwoSidedResult {
  std::vector<Vec> basis;
  std::size_t buchberger_calls = 0;
  std::size_t outer_iterations = 0;  // legacy loop count; 0 for the lifted route
  std::size_t env_basis_size = 0;    // size of the upstairs left basis (lifted route)
};

// One left Buchberger run in (R^env)^s over the lifted generators, then the
// multiplication map.
inline TwoSidedResult twosided_gb(const Presentation& r, const std::vector<Vec>& f,
                                  const ModOrder& mo, EnvKind envk, bool minimalize = true) {
  if (f.empty()) throw validation_error("empty generating family");
  std::size_t s = f.front().size();
  for (const auto& v : f)
    if (v.size() != s) throw validation_error("mixed ranks in generating family");
  Presentation env = enveloping(r, envk);
  ModOrder envmo{mo.kind, env.order()};
  std::vector<Vec> b = lift_generators(r, env, f, s);
  GBOptions opts;
  opts.interreduce = true;
  GBResult gb = buchberger_left(env, b, envmo, opts);
  std::vector<Vec> images;
  for (const auto& w : gb.basis) {
    Vec img = mult_map(r, env, w);
    if (!img.is_zero()) images.push_back(std::move(img));
  }
  TwoSidedResult res;
  res.buchberger_calls = 1;
  res.env_basis_size = gb.basis.size();
  if (minimalize && !images.empty()) images = minimalize_family(r, std::move(images), mo);
  res.basis = canonical_family(r, std::move(images), mo);
  return res;
}

// Alternate left completion and closure under right multiplication by the
// variables until no new remainders appear.
inline TwoSidedResult twosided_gb_legacy(const Presentation& r, const std::vector<Vec>& f,
                                         const ModOrder& mo) {
  if (f.empty()) throw validation_error("empty generating family");
  TwoSidedResult res;
  std::vector<Vec> current = f;
  for (;;) {
    ++res.outer_iterations;
    ++res.buchberger_calls;
    GBResult gb = buchberger_left(r, current, mo);
    std::vector<Vec> fresh;
    for (const auto& g : gb.basis)
      for (std::size_t i = 0; i < r.n(); ++i) {
        Vec gx = act(r, r.one(), g, r.variable(i));
        if (gx.is_zero()) continue;
        Vec rem = left_normal_form(r, gx, gb.basis, mo).rem;
        if (!rem.is_zero()) fresh.push_back(std::move(rem));
      }
    if (fresh.empty()) {
      res.basis = canonical_family(r, minimalize_family(r, gb.basis, mo), mo);
      return res;
    }
    current = gb.basis;
    for (auto& v : fresh) current.push_back(std::move(v));
  }
}

// Left Groebner and closed under right multiplication by every variable.
inline bool is_twosided_gb(const Presentation& r, const std::vector<Vec>& g, const ModOrder& mo) {
  if (g.empty()) return true;
  if (!is_left_groebner(r, g, mo)) return false;
  for (const auto& v : g)
    for (std::size_t i = 0; i < r.n(); ++i)
      if (!reduces_to_zero(r, act(r, r.one(), v, r.variable(i)), g, mo)) return false;
  return true;
}

// Membership in the bimodule generated by a two-sided Groebner basis.
inline bool member(const Presentation& r, const Vec& f, const std::vector<Vec>& gb,
                   const ModOrder& mo) {
  return reduces_to_zero(r, f, gb, mo);
}

}  // namespace pbwgb

#endif
