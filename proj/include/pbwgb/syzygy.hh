#ifndef PBWGB_SYZYGY_HH
#define PBWGB_SYZYGY_HH

// Syzygies. Left syzygies of a family in P^s come out of an instrumented
// Buchberger run: every treated S-pair contributes the relation
// rij e_i - rji e_j - sum_k h_k e_k among the completed basis, and pushing
// that through the cofactor matrix gives a generating family of left
// syzygies of the inputs. The bimodule syzygies of F in R^s are the left
// syzygies, over the enveloping algebra, of the lifted family, projected to
// the first |F| coordinates.

#include <cstddef>
#include <vector>

#include "free_module.hh"
#include "groebner.hh"
#include "order.hh"
#include "pbw.hh"

namespace pbwgb {

struct LeftSyzygies {
  std::vector<Vec> gens;  // vectors of length |F| over P
  GBResult gb;            // the instrumented run they came from
};

inline LeftSyzygies left_syzygy(const Presentation& p, const std::vector<Vec>& f,
                                const ModOrder& mo) {
  GBOptions opts;
  opts.track_records = true;
  opts.interreduce = false;
  LeftSyzygies out;
  out.gb = buchberger_left(p, f, mo, opts);
  const GBResult& gb = out.gb;
  for (const auto& rec : gb.records) {
    // p_rec = rij e_i - rji e_j - sum h_k e_k, a syzygy of the basis
    std::vector<Poly> pv(gb.basis.size(), p.zero());
    pv[rec.i] = p.add(pv[rec.i], Poly{{rec.rij}});
    pv[rec.j] = p.sub(pv[rec.j], Poly{{rec.rji}});
    for (const auto& [k, hk] : rec.h) pv[k] = p.sub(pv[k], hk);
    // compose with the cofactor matrix to land on the inputs
    Vec s(f.size());
    for (std::size_t ff = 0; ff < f.size(); ++ff) {
      Poly acc = p.zero();
      for (std::size_t k = 0; k < pv.size(); ++k)
        if (!pv[k].is_zero()) acc = p.add(acc, p.mul(pv[k], gb.q[k][ff]));
      s.c[ff] = std::move(acc);
    }
    if (!s.is_zero()) out.gens.push_back(std::move(s));
  }
  return out;
}

// Does h annihilate F under the bimodule action, i.e. sum_i h_i f_i = 0?
inline bool verify_syzygy(const Presentation& r, const Presentation& env, const Vec& h,
                          const std::vector<Vec>& f) {
  if (h.size() != f.size()) throw math_error("syzygy arity mismatch");
  if (f.empty()) return true;
  std::size_t s = f.front().size();
  Vec acc(s);
  for (std::size_t i = 0; i < s; ++i) acc.c[i] = r.zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (h.c[i].is_zero()) continue;
    acc = add(r, acc, env_act(r, env, h.c[i], f[i]));
  }
  return acc.is_zero();
}

struct BimoduleSyzygies {
  Presentation env;
  std::vector<Vec> gens;  // vectors of length |F| over R^env
};

inline BimoduleSyzygies syzygy_bimodule(const Presentation& r, const std::vector<Vec>& f,
                                        const ModOrder& mo, EnvKind envk) {
  if (f.empty()) throw validation_error("empty generating family");
  std::size_t s = f.front().size();
  for (const auto& v : f)
    if (v.size() != s) throw validation_error("mixed ranks in generating family");
  BimoduleSyzygies out{enveloping(r, envk), {}};
  ModOrder envmo{mo.kind, out.env.order()};
  std::vector<Vec> b = lift_generators(r, out.env, f, s);
  LeftSyzygies ls = left_syzygy(out.env, b, envmo);
  for (const auto& g : ls.gens) {
    Vec head = project_head(g, f.size());
    if (!head.is_zero()) out.gens.push_back(std::move(head));
  }
  return out;
}

}  // namespace pbwgb

#endif
