#ifndef PBWGB_FREE_MODULE_HH
#define PBWGB_FREE_MODULE_HH

// Vectors over a presentation (rows of R^s or of (R^env)^s), leading module
// exponents, the bimodule action, and the passage between R^s and its
// enveloping cover: embeddings f |-> f(x)1, the multiplication map m_s, and
// the generator lift used to compute two-sided bases by one left Buchberger
// run upstairs.

#include <cstddef>
#include <vector>

#include "error.hh"
#include "order.hh"
#include "pbw.hh"

namespace pbwgb {

struct Vec {
  std::vector<Poly> c;

  Vec() = default;
  explicit Vec(std::size_t s) : c(s) {}
  std::size_t size() const { return c.size(); }
  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
  bool operator==(const Vec& o) const {
    if (c.size() != o.c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
};

// Leading module exponent: the largest (exp, comp) across components.
inline ModExp leading_exp(const ModOrder& mo, const Vec& v) {
  bool found = false;
  ModExp best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.c[i].is_zero()) continue;
    ModExp cand{v.c[i].lt().exp, i};
    if (!found || cmp_module(mo, cand, best) == std::strong_ordering::greater) {
      best = cand;
      found = true;
    }
  }
  if (!found) throw math_error("leading exponent of zero vector");
  return best;
}

inline const Scalar& leading_coeff(const ModOrder& mo, const Vec& v) {
  ModExp e = leading_exp(mo, v);
  return v.c[e.comp].lt().c;
}

inline Vec add(const Presentation& p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = p.add(a.c[i], b.c[i]);
  return r;
}

inline Vec sub(const Presentation& p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = p.sub(a.c[i], b.c[i]);
  return r;
}

inline Vec smul(const Presentation& p, const Scalar& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = p.smul(s, a.c[i]);
  return r;
}

// Left multiplication by a ring element, componentwise.
inline Vec lmul(const Presentation& p, const Poly& f, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = p.mul(f, a.c[i]);
  return r;
}

inline Vec lmul(const Presentation& p, const Term& t, const Vec& a) {
  return lmul(p, Poly{{t}}, a);
}

// The two-sided action r * v * r'.
inline Vec act(const Presentation& p, const Poly& r, const Vec& v, const Poly& rp) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.c[i] = p.mul(p.mul(r, v.c[i]), rp);
  return out;
}

inline Vec unit_vec(const Presentation& p, std::size_t s, std::size_t comp, const Poly& val) {
  Vec r(s);
  for (std::size_t i = 0; i < s; ++i) r.c[i] = p.zero();
  r.c[comp] = val;
  return r;
}

// --- enveloping-algebra plumbing -------------------------------------------

namespace detail {
inline const TensorInfo& env_info(const Presentation& env) {
  if (!env.tensor_info() || !env.tensor_info()->right_reversed)
    throw math_error("presentation is not an enveloping algebra");
  return *env.tensor_info();
}
}  // namespace detail

// Split an enveloping exponent into (left part, right part), the right part
// in natural variable order.
inline std::pair<Exponent, Exponent> split_env_exponent(const Presentation& env, const Exponent& e) {
  std::size_t n = env.tensor_info() ? env.tensor_info()->left_n : e.size() / 2;
  Exponent a(n), b(e.size() - n);
  for (std::size_t k = 0; k < n; ++k) a[k] = e[k];
  for (std::size_t k = 0; k < e.size() - n; ++k) b[k] = e[n + k];
  if (env.tensor_info() && env.tensor_info()->right_reversed) b = reversed(b);
  return {std::move(a), std::move(b)};
}

inline Exponent join_env_exponent(const Presentation& env, const Exponent& left,
                                  const Exponent& right) {
  const TensorInfo& ti = detail::env_info(env);
  if (left.size() != ti.left_n || right.size() != env.n() - ti.left_n)
    throw math_error("tensor exponent arity mismatch");
  Exponent e(env.n());
  for (std::size_t k = 0; k < left.size(); ++k) e[k] = left[k];
  Exponent r = reversed(right);
  for (std::size_t k = 0; k < r.size(); ++k) e[left.size() + k] = r[k];
  return e;
}

// f (x) g as an element of R^env; standard monomials map to standard
// monomials, so no rewriting happens here.
inline Poly tensor_poly(const Presentation& env, const Poly& f, const Poly& g) {
  std::vector<Term> out;
  for (const auto& tf : f.t)
    for (const auto& tg : g.t)
      out.push_back(Term{join_env_exponent(env, tf.exp, tg.exp),
                         pbwgb::mul(env.field(), tf.c, tg.c)});
  return env.canonical(std::move(out));
}

inline Poly embed_left(const Presentation& env, const Poly& f) {
  std::vector<Term> out;
  const TensorInfo& ti = detail::env_info(env);
  Exponent zero(env.n() - ti.left_n);
  for (const auto& tf : f.t) out.push_back(Term{join_env_exponent(env, tf.exp, zero), tf.c});
  return env.canonical(std::move(out));
}

inline Poly embed_right(const Presentation& env, const Poly& f) {
  std::vector<Term> out;
  const TensorInfo& ti = detail::env_info(env);
  Exponent zero(ti.left_n);
  for (const auto& tf : f.t) out.push_back(Term{join_env_exponent(env, zero, tf.exp), tf.c});
  return env.canonical(std::move(out));
}

inline Vec embed_left(const Presentation& env, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.c[i] = embed_left(env, v.c[i]);
  return r;
}

// m: R^env -> R, x^a (x) x^b |-> x^a x^b.
inline Poly mult_map(const Presentation& r, const Presentation& env, const Poly& h) {
  Poly acc = r.zero();
  for (const auto& tm : h.t) {
    auto [a, b] = split_env_exponent(env, tm.exp);
    acc = r.add(acc, r.smul(tm.c, r.mul_monomials(a, b)));
  }
  return acc;
}

// m^s: (R^env)^s -> R^s, componentwise.
inline Vec mult_map(const Presentation& r, const Presentation& env, const Vec& w) {
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.c[i] = mult_map(r, env, w.c[i]);
  return out;
}

// The left action of h in R^env on f in R^s: sum over terms of h of
// c * x^a f x^b.
inline Vec env_act(const Presentation& r, const Presentation& env, const Poly& h, const Vec& f) {
  Vec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.c[i] = r.zero();
  for (const auto& tm : h.t) {
    auto [a, b] = split_env_exponent(env, tm.exp);
    out = add(r, out, act(r, r.monomial(a, tm.c), f, r.monomial(b)));
  }
  return out;
}

// Generators of N_M <= (R^env)^s for M generated by F: the lifted inputs
// f_i (x) 1 followed by the kernel generators x_j e_k (x) 1 - 1 (x) x_j e_k
// (k outer, j inner). |result| = |F| + s*n.
inline std::vector<Vec> lift_generators(const Presentation& r, const Presentation& env,
                                        const std::vector<Vec>& f, std::size_t s) {
  std::vector<Vec> out;
  for (const auto& v : f) {
    if (v.size() != s) throw math_error("generator rank mismatch in lift");
    out.push_back(embed_left(env, v));
  }
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t j = 0; j < r.n(); ++j) {
      Poly xj = r.variable(j);
      Poly d = env.sub(embed_left(env, xj), embed_right(env, xj));
      out.push_back(unit_vec(env, s, k, d));
    }
  return out;
}

inline Vec project_head(const Vec& v, std::size_t a) {
  if (a > v.size()) throw math_error("projection rank exceeds vector size");
  Vec r(a);
  for (std::size_t i = 0; i < a; ++i) r.c[i] = v.c[i];
  return r;
}

}  // namespace pbwgb

#endif
