#ifndef PBWGB_INTERSECT_HH
#define PBWGB_INTERSECT_HH

// Intersection of finitely many sub-bimodules of R^s via one syzygy
// computation: stack the diagonal rows (e_k, ..., e_k) over the family
// blocks, then each family's generators in its own block; the heads of the
// syzygies of that stack, pushed through the multiplication map, generate
// the intersection.

#include <cstddef>
#include <vector>

#include "free_module.hh"
#include "order.hh"
#include "pbw.hh"
#include "syzygy.hh"
#include "twosided.hh"

namespace pbwgb {

struct Stack {
  std::vector<Vec> rows;  // s + sum t_j rows in R^(r*s)
  std::size_t s = 0;      // ambient rank
  std::size_t r = 0;      // number of families
};

inline Stack build_stack(const Presentation& p, const std::vector<std::vector<Vec>>& families) {
  if (families.size() < 2) throw validation_error("intersection needs at least two families");
  std::size_t s = 0;
  for (const auto& fam : families) {
    if (fam.empty()) throw validation_error("empty family in intersection");
    for (const auto& v : fam) {
      if (s == 0) s = v.size();
      if (v.size() != s) throw validation_error("mixed ranks across intersection families");
    }
  }
  Stack st;
  st.s = s;
  st.r = families.size();
  for (std::size_t k = 0; k < s; ++k) {
    Vec row(st.r * s);
    for (std::size_t b = 0; b < st.r; ++b)
      for (std::size_t c = 0; c < s; ++c) row.c[b * s + c] = (c == k) ? p.one() : p.zero();
    st.rows.push_back(std::move(row));
  }
  for (std::size_t b = 0; b < st.r; ++b)
    for (const auto& g : families[b]) {
      Vec row(st.r * s);
      for (std::size_t c = 0; c < st.r * s; ++c) row.c[c] = p.zero();
      for (std::size_t c = 0; c < s; ++c) row.c[b * s + c] = g.c[c];
      st.rows.push_back(std::move(row));
    }
  return st;
}

struct IntersectionResult {
  std::vector<Vec> raw;    // images of syzygy heads, unprocessed
  std::vector<Vec> basis;  // two-sided basis of the intersection (empty <=> zero module)
};

inline IntersectionResult intersect_bimodules(const Presentation& p,
                                              const std::vector<std::vector<Vec>>& families,
                                              const ModOrder& mo, EnvKind envk,
                                              bool postprocess = true) {
  Stack st = build_stack(p, families);
  BimoduleSyzygies sz = syzygy_bimodule(p, st.rows, mo, envk);
  IntersectionResult out;
  for (const auto& g : sz.gens) {
    Vec head = project_head(g, st.s);
    Vec img = mult_map(p, sz.env, head);
    if (!img.is_zero()) out.raw.push_back(std::move(img));
  }
  if (out.raw.empty()) return out;
  if (postprocess)
    out.basis = twosided_gb(p, out.raw, mo, envk).basis;
  else
    out.basis = canonical_family(p, out.raw, mo);
  return out;
}

// Does some h'' complete (h (x) 1, h'') into a syzygy of the stack? That is
// exactly membership of (h, ..., h) in the bimodule spanned by the family
// rows, which characterizes membership in the intersection.
inline bool check_condition_ii(const Presentation& p, const Vec& h,
                               const std::vector<std::vector<Vec>>& families, const ModOrder& mo,
                               EnvKind envk) {
  Stack st = build_stack(p, families);
  if (h.size() != st.s) throw math_error("rank mismatch in intersection membership");
  Vec v(st.r * st.s);
  for (std::size_t c = 0; c < v.size(); ++c) v.c[c] = p.zero();
  for (std::size_t k = 0; k < st.s; ++k)
    v = add(p, v, lmul(p, h.c[k], st.rows[k]));
  if (v.is_zero()) return true;
  std::vector<Vec> bottom(st.rows.begin() + st.s, st.rows.end());
  ModOrder stmo{mo.kind, mo.base};
  TwoSidedResult gb = twosided_gb(p, bottom, stmo, envk);
  return member(p, v, gb.basis, stmo);
}

}  // namespace pbwgb

#endif
