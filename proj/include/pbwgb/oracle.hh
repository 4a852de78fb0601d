#ifndef PBWGB_ORACLE_HH
#define PBWGB_ORACLE_HH

// Degree-truncated cross checks, kept deliberately independent of the
// Buchberger machinery: spans and kernels are handled by exact Gaussian
// elimination over the coefficient field, and monomial products can be
// recomputed by a word rewriter that applies relations at randomly chosen
// inversions with no caching.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "error.hh"
#include "free_module.hh"
#include "order.hh"
#include "pbw.hh"
#include "scalar.hh"

namespace pbwgb {

namespace lin {

// Column identity for echelon rows: an optional tag section (used to read
// off kernel combinations) ordered after all value columns.
struct Col {
  int section = 0;  // 0 = value, 1 = tag
  std::size_t comp = 0;
  Exponent exp;

  bool operator<(const Col& o) const {
    if (section != o.section) return section < o.section;
    if (comp != o.comp) return comp < o.comp;
    if (exp.size() != o.exp.size()) return exp.size() < o.exp.size();
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] != o.exp[i]) return exp[i] > o.exp[i];
    return false;
  }
  bool operator==(const Col& o) const {
    return section == o.section && comp == o.comp && exp == o.exp;
  }
};

using Row = std::map<Col, Scalar>;

inline void axpy(const Field& k, Row& dst, const Scalar& c, const Row& src) {
  for (const auto& [col, v] : src) {
    Scalar nv = dst.count(col) ? dst[col] + mul(k, c, v) : mul(k, c, v);
    if (nv.is_zero())
      dst.erase(col);
    else
      dst[col] = nv;
  }
}

// Rows kept in echelon form (distinct pivots, pivot-normalized).
class Echelon {
 public:
  explicit Echelon(Field k) : k_(std::move(k)) {}

  // Reduce r against the stored rows; returns the residue.
  Row residue(Row r) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto hit = rows_.find(it->first);
      if (hit == rows_.end()) {
        ++it;
        continue;
      }
      Scalar c = -it->second;
      axpy(k_, r, c, hit->second);
      it = r.upper_bound(hit->first);
    }
    return r;
  }

  bool contains(const Row& r) const { return residue(r).empty(); }

  // Insert if independent; true when the row enlarged the space.
  bool add(Row r) {
    r = residue(std::move(r));
    if (r.empty()) return false;
    Scalar piv = inv(k_, r.begin()->second);
    Row norm;
    for (auto& [col, v] : r) norm[col] = mul(k_, piv, v);
    rows_.emplace(norm.begin()->first, std::move(norm));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::map<Col, Row>& rows() const { return rows_; }

 private:
  Field k_;
  std::map<Col, Row> rows_;  // pivot column -> row
};

inline bool same_span(const Echelon& a, const Echelon& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& [piv, row] : a.rows())
    if (!b.contains(row)) return false;
  return true;
}

// Zassenhaus: rows [u|u] for a, [w|0] for b; after elimination the rows whose
// value block died carry a basis of the intersection in the tag block.
inline Echelon intersect_spans(const Field& k, const Echelon& a, const Echelon& b) {
  Echelon comb(k);
  for (const auto& [piv, row] : a.rows()) {
    Row r;
    for (const auto& [c, v] : row) {
      r[c] = v;
      r[Col{1, c.comp, c.exp}] = v;
    }
    comb.add(std::move(r));
  }
  for (const auto& [piv, row] : b.rows()) comb.add(row);
  Echelon out(k);
  for (const auto& [piv, row] : comb.rows()) {
    if (piv.section != 1) continue;
    Row r;
    for (const auto& [c, v] : row) r[Col{0, c.comp, c.exp}] = v;
    out.add(std::move(r));
  }
  return out;
}

}  // namespace lin

inline lin::Row row_of_vec(const Vec& v) {
  lin::Row r;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& tm : v.c[i].t) r[lin::Col{0, i, tm.exp}] = tm.c;
  return r;
}

inline void enumerate_exponents(std::size_t n, std::uint64_t maxdeg,
                                std::vector<Exponent>& out) {
  Exponent cur(n);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, left - e);
      cur[pos] = 0;
    }
  };
  rec(rec, 0, maxdeg);
}

// Span of { x^a f x^b : deg a + deg f + deg b <= D } inside R^s.
struct TruncatedBasis {
  std::uint64_t degree = 0;
  lin::Echelon space;

  TruncatedBasis(const Field& k, std::uint64_t d) : degree(d), space(k) {}
  std::size_t dim() const { return space.dim(); }
};

inline TruncatedBasis truncated_span(const Presentation& r, const std::vector<Vec>& f,
                                     std::uint64_t degree) {
  TruncatedBasis tb(r.field(), degree);
  for (const auto& g : f) {
    if (g.is_zero()) continue;
    std::uint64_t dg = 0;
    for (const auto& p : g.c)
      if (!p.is_zero() && p.deg() > dg) dg = p.deg();
    if (dg > degree)
      throw validation_error("truncation degree below a generator degree");
    std::vector<Exponent> pairs;
    enumerate_exponents(2 * r.n(), degree - dg, pairs);
    for (const auto& ab : pairs) {
      Exponent a(r.n()), b(r.n());
      for (std::size_t i = 0; i < r.n(); ++i) a[i] = ab[i];
      for (std::size_t i = 0; i < r.n(); ++i) b[i] = ab[r.n() + i];
      tb.space.add(row_of_vec(act(r, r.monomial(a), g, r.monomial(b))));
    }
  }
  return tb;
}

// Span of { x^a f : deg a + deg f <= D }.
inline TruncatedBasis truncated_left_span(const Presentation& r, const std::vector<Vec>& f,
                                          std::uint64_t degree) {
  TruncatedBasis tb(r.field(), degree);
  for (const auto& g : f) {
    if (g.is_zero()) continue;
    std::uint64_t dg = 0;
    for (const auto& p : g.c)
      if (!p.is_zero() && p.deg() > dg) dg = p.deg();
    if (dg > degree) throw validation_error("truncation degree below a generator degree");
    std::vector<Exponent> mons;
    enumerate_exponents(r.n(), degree - dg, mons);
    for (const auto& a : mons) tb.space.add(row_of_vec(lmul(r, r.monomial(a), g)));
  }
  return tb;
}

inline bool member_up_to_degree(const TruncatedBasis& tb, const Vec& v) {
  return tb.space.contains(row_of_vec(v));
}

inline bool equal_up_to_degree(const TruncatedBasis& a, const TruncatedBasis& b) {
  return lin::same_span(a.space, b.space);
}

// Exact kernel of w |-> sum_i w_i f_i on the degree-<=D slice of (R^env)^t,
// returned as env vectors. Unit tags ride along through the elimination;
// rows whose value part vanished hand us kernel combinations.
inline std::vector<Vec> truncated_syzygy_kernel(const Presentation& r, const Presentation& env,
                                                const std::vector<Vec>& f, std::uint64_t degree) {
  if (f.empty()) return {};
  std::size_t t = f.size();
  std::vector<Exponent> mons;
  enumerate_exponents(env.n(), degree, mons);
  struct Unknown {
    std::size_t i;
    Exponent e;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& e : mons) unknowns.push_back({i, e});
  lin::Echelon ech(r.field());
  std::vector<lin::Row> leftovers;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    Vec img = env_act(r, env, env.monomial(unknowns[u].e), f[unknowns[u].i]);
    lin::Row row = row_of_vec(img);
    row[lin::Col{1, u, Exponent(0)}] = Scalar(1);
    ech.add(std::move(row));
  }
  std::vector<Vec> kernel;
  for (const auto& [piv, row] : ech.rows()) {
    if (piv.section != 1) continue;  // value part survived; not a kernel row
    Vec w(t);
    for (std::size_t i = 0; i < t; ++i) w.c[i] = env.zero();
    std::vector<std::vector<Term>> collect(t);
    for (const auto& [col, v] : row) collect[unknowns[col.comp].i].push_back(
        Term{unknowns[col.comp].e, v});
    for (std::size_t i = 0; i < t; ++i) w.c[i] = env.canonical(std::move(collect[i]));
    kernel.push_back(std::move(w));
  }
  return kernel;
}

// Left span over the enveloping algebra of a family of env vectors, degree
// truncated; rows that escape the slice are dropped.
inline lin::Echelon truncated_env_left_span(const Presentation& env, const std::vector<Vec>& h,
                                            std::uint64_t degree) {
  lin::Echelon ech(env.field());
  for (const auto& g : h) {
    if (g.is_zero()) continue;
    std::uint64_t dg = 0;
    for (const auto& p : g.c)
      if (!p.is_zero() && p.deg() > dg) dg = p.deg();
    if (dg > degree) continue;
    std::vector<Exponent> mons;
    enumerate_exponents(env.n(), degree - dg, mons);
    for (const auto& m : mons) {
      Vec row = lmul(env, env.monomial(m), g);
      bool fits = true;
      for (const auto& p : row.c)
        if (!p.is_zero() && p.deg() > degree) fits = false;
      if (fits) ech.add(row_of_vec(row));
    }
  }
  return ech;
}

// ---------------------------------------------------------------------------
// Word-rewriting product: normalizes x^a x^b by repeatedly firing the
// relation at a randomly chosen inversion. No caching, no sharing with the
// production multiplier.

inline Poly naive_mul(const Presentation& r, const Exponent& a, const Exponent& b,
                      std::uint64_t seed, std::uint64_t step_cap = 2'000'000) {
  std::mt19937_64 rng(seed);
  using Word = std::vector<std::uint32_t>;
  auto word_of = [&](const Exponent& e) {
    Word w;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) w.push_back(static_cast<std::uint32_t>(i));
    return w;
  };
  Word start = word_of(a);
  for (auto x : word_of(b)) start.push_back(x);

  std::map<Word, Scalar> acc;
  acc[start] = Scalar(1);
  std::uint64_t steps = 0;
  for (;;) {
    // find all (word, position) inversions
    std::vector<std::pair<const Word*, std::size_t>> inversions;
    for (const auto& [w, c] : acc)
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) inversions.emplace_back(&w, k);
    if (inversions.empty()) break;
    if (++steps > step_cap) throw guard_error("word rewriting step cap exceeded");
    auto [wp, k] = inversions[rng() % inversions.size()];
    Word w = *wp;
    Scalar c = acc[w];
    acc.erase(w);
    std::uint32_t j = w[k], i = w[k + 1];
    const Relation& rel = r.rel(i, j);
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    Scalar cq = mul(r.field(), c, rel.q);
    if (!cq.is_zero()) {
      auto it = acc.find(swapped);
      if (it == acc.end())
        acc[swapped] = cq;
      else {
        it->second = it->second + cq;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    for (const auto& tm : rel.p.t) {
      Word mid = word_of(tm.exp);
      Word nw(w.begin(), w.begin() + k);
      for (auto x : mid) nw.push_back(x);
      nw.insert(nw.end(), w.begin() + k + 2, w.end());
      Scalar cc = mul(r.field(), c, tm.c);
      auto it = acc.find(nw);
      if (it == acc.end())
        acc[nw] = cc;
      else {
        it->second = it->second + cc;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  std::vector<Term> out;
  for (const auto& [w, c] : acc) {
    Exponent e(r.n());
    for (auto x : w) ++e[x];
    out.push_back(Term{std::move(e), c});
  }
  return r.canonical(std::move(out));
}

}  // namespace pbwgb

#endif
