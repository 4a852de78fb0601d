#ifndef PBWGB_PBW_HH
#define PBWGB_PBW_HH

// PBW algebra presentations k{x1..xn; Q, <=} and exact arithmetic in the
// standard-monomial basis. A presentation stores, for every pair i < j, the
// rewriting rule x_j x_i = q_ji x_i x_j + p_ji with q_ji nonzero and
// exp(p_ji) strictly below eps_i + eps_j under the admissible order; products
// are normalized by peeling the trailing variable of the left word, which
// terminates for exactly these bounded presentations.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hh"
#include "order.hh"
#include "scalar.hh"

namespace pbwgb {

struct Term {
  Exponent exp;
  Scalar c;
};

// Terms sorted strictly descending under the presentation's order, zero
// coefficients dropped. The empty term list is the zero polynomial.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lt() const {
    if (t.empty()) throw math_error("leading term of zero");
    return t.front();
  }
  std::uint64_t deg() const {
    std::uint64_t d = 0;
    for (const auto& x : t)
      if (x.exp.deg() > d) d = x.exp.deg();
    return d;
  }
  bool operator==(const Poly& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!(t[i].exp == o.t[i].exp) || t[i].c != o.t[i].c) return false;
    return true;
  }
};

namespace detail {
struct VarKey {
  Exponent e;
  std::size_t var;
  bool operator==(const VarKey& o) const { return var == o.var && e == o.e; }
};
struct VarKeyHash {
  std::size_t operator()(const VarKey& k) const {
    return ExponentHash{}(k.e) * 1000003u + k.var;
  }
};
struct PairKey {
  Exponent a, b;
  bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return ExponentHash{}(k.a) * 2654435761u + ExponentHash{}(k.b);
  }
};
}  // namespace detail

// Set on a presentation to bound the number of rewrite expansions a single
// public product may perform; exceeding it raises guard_error instead of
// spinning on a (buggy or hostile) presentation.
inline constexpr std::uint64_t kDefaultStepCap = 50'000'000;

struct Relation {
  Scalar q = Scalar(1);
  Poly p;
};

// Extra bookkeeping for presentations built as tensor products: how the
// generator list splits and whether the second block stores its exponents in
// reversed variable order (as the enveloping construction does).
struct TensorInfo {
  std::size_t left_n = 0;
  bool right_reversed = false;
  std::vector<std::string> left_names, right_names;
};

class Presentation {
 public:
  Presentation(Field field, std::vector<std::string> names, OrderSpec order)
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
    rel_.assign(names_.size() * (names_.size() - 1) / 2, Relation{});
  }

  Presentation(const Presentation& o)
      : field_(o.field_),
        names_(o.names_),
        order_(o.order_),
        rel_(o.rel_),
        tensor_(o.tensor_),
        step_cap_(o.step_cap_) {}
  Presentation(Presentation&&) = default;
  Presentation& operator=(const Presentation& o) {
    if (this != &o) {
      field_ = o.field_;
      names_ = o.names_;
      order_ = o.order_;
      rel_ = o.rel_;
      tensor_ = o.tensor_;
      step_cap_ = o.step_cap_;
      clear_caches();
    }
    return *this;
  }
  Presentation& operator=(Presentation&&) = default;

  std::size_t n() const { return names_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const OrderSpec& order() const { return order_; }
  const std::optional<TensorInfo>& tensor_info() const { return tensor_; }

  // i < j, both 0-based: the rule x_j x_i = q x_i x_j + p.
  const Relation& rel(std::size_t i, std::size_t j) const { return rel_[pair_index(i, j)]; }

  void set_relation(std::size_t i, std::size_t j, Scalar q, Poly p) {
    rel_[pair_index(i, j)] = Relation{std::move(q), std::move(p)};
    clear_caches();
  }
  void set_tensor_info(TensorInfo ti) { tensor_ = std::move(ti); }
  void set_step_cap(std::uint64_t cap) { step_cap_ = cap; }  // 0 disables the guard
  std::uint64_t step_cap() const { return step_cap_; }

  bool operator==(const Presentation& o) const {
    if (!(field_ == o.field_) || names_ != o.names_) return false;
    if (format_order(order_) != format_order(o.order_)) return false;
    for (std::size_t idx = 0; idx < rel_.size(); ++idx)
      if (rel_[idx].q != o.rel_[idx].q || !(rel_[idx].p == o.rel_[idx].p)) return false;
    return true;
  }

  // --- polynomial construction -------------------------------------------

  Poly zero() const { return Poly{}; }
  Poly constant(const Scalar& c) const {
    if (c.is_zero()) return Poly{};
    return Poly{{Term{Exponent(n()), c}}};
  }
  Poly one() const { return constant(Scalar(1)); }
  Poly monomial(const Exponent& e, const Scalar& c = Scalar(1)) const {
    if (c.is_zero()) return Poly{};
    if (e.size() != n()) throw math_error("monomial exponent size mismatch");
    return Poly{{Term{e, c}}};
  }
  Poly variable(std::size_t i) const { return monomial(unit_exponent(n(), i)); }

  // Sort descending, merge duplicates, drop zeros.
  Poly canonical(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
      return cmp(order_, x.exp, y.exp) == std::strong_ordering::greater;
    });
    Poly r;
    for (auto& tm : terms) {
      if (tm.c.is_zero()) continue;
      if (!r.t.empty() && r.t.back().exp == tm.exp)
        r.t.back().c = r.t.back().c + tm.c;
      else
        r.t.push_back(std::move(tm));
      if (!r.t.empty() && r.t.back().c.is_zero()) r.t.pop_back();
    }
    return r;
  }

  // --- arithmetic ---------------------------------------------------------

  Poly add(const Poly& f, const Poly& g) const {
    Poly r;
    std::size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
      auto c = cmp(order_, f.t[i].exp, g.t[j].exp);
      if (c == std::strong_ordering::greater) {
        r.t.push_back(f.t[i++]);
      } else if (c == std::strong_ordering::less) {
        r.t.push_back(g.t[j++]);
      } else {
        Scalar s = f.t[i].c + g.t[j].c;
        if (!s.is_zero()) r.t.push_back(Term{f.t[i].exp, s});
        ++i, ++j;
      }
    }
    for (; i < f.t.size(); ++i) r.t.push_back(f.t[i]);
    for (; j < g.t.size(); ++j) r.t.push_back(g.t[j]);
    return r;
  }

  Poly neg(const Poly& f) const {
    Poly r = f;
    for (auto& tm : r.t) tm.c = -tm.c;
    return r;
  }

  Poly sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

  Poly smul(const Scalar& c, const Poly& f) const {
    if (c.is_zero()) return Poly{};
    Poly r = f;
    for (auto& tm : r.t) tm.c = pbwgb::mul(field_, c, tm.c);
    return r;
  }

  // Normal form of x^a * x^b.
  Poly mul_monomials(const Exponent& a, const Exponent& b) const {
    MulCtx ctx{step_cap_};
    return mono_mul(a, b, ctx);
  }

  Poly mul(const Poly& f, const Poly& g) const {
    MulCtx ctx{step_cap_};
    std::vector<Term> out;
    for (const auto& tf : f.t)
      for (const auto& tg : g.t) {
        Scalar c = pbwgb::mul(field_, tf.c, tg.c);
        Poly m = mono_mul(tf.exp, tg.exp, ctx);
        for (const auto& tm : m.t) out.push_back(Term{tm.exp, pbwgb::mul(field_, c, tm.c)});
      }
    return canonical(std::move(out));
  }

  bool is_commutative() const {
    for (const auto& r : rel_)
      if (r.q != Scalar(1) || !r.p.is_zero()) return false;
    return true;
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    if (names_.empty()) bad.push_back("no generators");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) bad.push_back("duplicate generator name " + names_[i]);
    if (!order_fits(order_, n()))
      bad.push_back("order does not fit " + std::to_string(n()) + " variables");
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = i + 1; j < n(); ++j) {
        const auto& r = rel(i, j);
        std::string where = names_[j] + "*" + names_[i];
        if (r.q.is_zero()) bad.push_back("zero q coefficient in relation for " + where);
        if (!field_.extension && (!r.q.is_rational() || [&] {
              for (const auto& tm : r.p.t)
                if (!tm.c.is_rational()) return true;
              return false;
            }()))
          bad.push_back("extension scalar in relation for " + where +
                        " but the field is the rationals");
        if (!r.p.is_zero()) {
          for (const auto& tm : r.p.t)
            if (tm.exp.size() != n()) {
              bad.push_back("wrong exponent arity in tail for " + where);
              return bad;
            }
          Exponent bound = unit_exponent(n(), i) + unit_exponent(n(), j);
          if (order_fits(order_, n()) &&
              cmp(order_, r.p.lt().exp, bound) != std::strong_ordering::less)
            bad.push_back("tail of relation for " + where +
                          " is not below " + names_[i] + "*" + names_[j] + " in the order");
        }
      }
    return bad;
  }

  std::uint64_t cache_size() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->var.size() + cache_->pair.size();
  }

 private:
  struct MulCtx {
    std::uint64_t cap;
    std::uint64_t steps = 0;
    void tick() {
      if (cap && ++steps > cap) throw guard_error("rewrite step cap exceeded");
    }
  };

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (!(i < j && j < n())) throw math_error("relation index out of range");
    return j * (j - 1) / 2 + i;
  }

  void clear_caches() {
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->var.clear();
    cache_->pair.clear();
  }

  // Normal form of x^g * x_i, memoized. Peels the largest variable of g: with
  // g = g' + eps_j, x^g x_i = q_ji (x^{g'} x_i) x_j + x^{g'} p_ji.
  Poly var_mul(const Exponent& g, std::size_t i, MulCtx& ctx) const {
    std::size_t jmax = g.size();
    for (std::size_t j = g.size(); j-- > 0;)
      if (g[j] > 0) {
        jmax = j;
        break;
      }
    if (jmax == g.size() || jmax <= i) return monomial(g + unit_exponent(n(), i));

    detail::VarKey key{g, i};
    {
      std::lock_guard<std::mutex> lk(cache_->mu);
      auto it = cache_->var.find(key);
      if (it != cache_->var.end()) return it->second;
    }
    ctx.tick();
    std::size_t j = jmax;
    Exponent gp = g - unit_exponent(n(), j);
    const Relation& r = rel(i, j);
    Poly a = var_mul(gp, i, ctx);
    std::vector<Term> out;
    for (const auto& tm : a.t) {
      Poly aj = var_mul(tm.exp, j, ctx);
      Scalar c = pbwgb::mul(field_, tm.c, r.q);
      for (const auto& tj : aj.t) out.push_back(Term{tj.exp, pbwgb::mul(field_, c, tj.c)});
    }
    if (!r.p.is_zero()) {
      for (const auto& tp : r.p.t) {
        Poly gpp = mono_mul(gp, tp.exp, ctx);
        for (const auto& tg : gpp.t) out.push_back(Term{tg.exp, pbwgb::mul(field_, tp.c, tg.c)});
      }
    }
    Poly res = canonical(std::move(out));
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->var.emplace(std::move(key), std::move(res)).first->second;
  }

  Poly mono_mul(const Exponent& a, const Exponent& b, MulCtx& ctx) const {
    if (a.size() != n() || b.size() != n()) throw math_error("monomial exponent size mismatch");
    if (b.is_zero()) return monomial(a);
    detail::PairKey key{a, b};
    {
      std::lock_guard<std::mutex> lk(cache_->mu);
      auto it = cache_->pair.find(key);
      if (it != cache_->pair.end()) return it->second;
    }
    Poly acc = monomial(a);
    for (std::size_t idx = 0; idx < n(); ++idx)
      for (std::uint32_t rep = 0; rep < b[idx]; ++rep) {
        std::vector<Term> out;
        for (const auto& tm : acc.t) {
          Poly m = var_mul(tm.exp, idx, ctx);
          for (const auto& tv : m.t) out.push_back(Term{tv.exp, pbwgb::mul(field_, tm.c, tv.c)});
        }
        acc = canonical(std::move(out));
      }
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->pair.emplace(std::move(key), std::move(acc)).first->second;
  }

  struct CacheBox {
    std::mutex mu;
    std::unordered_map<detail::VarKey, Poly, detail::VarKeyHash> var;
    std::unordered_map<detail::PairKey, Poly, detail::PairKeyHash> pair;
  };

  Field field_;
  std::vector<std::string> names_;
  OrderSpec order_;
  std::vector<Relation> rel_;
  std::optional<TensorInfo> tensor_;
  std::uint64_t step_cap_ = kDefaultStepCap;
  mutable std::unique_ptr<CacheBox> cache_ = std::make_unique<CacheBox>();
};

inline const Exponent& exp_of(const Poly& f) { return f.lt().exp; }
inline const Scalar& lc_of(const Poly& f) { return f.lt().c; }

// ---------------------------------------------------------------------------
// Constructions.

// Same generators and relations under a different admissible order. The
// relation tails must still be bounded by the new order; validate() after.
inline Presentation with_order(const Presentation& r, OrderSpec order) {
  Presentation out(r.field(), r.names(), std::move(order));
  for (std::size_t i = 0; i < r.n(); ++i)
    for (std::size_t j = i + 1; j < r.n(); ++j)
      out.set_relation(i, j, r.rel(i, j).q, r.rel(i, j).p);
  if (r.tensor_info()) out.set_tensor_info(*r.tensor_info());
  return out;
}

// R (x) S with generators x1(x)1,..,xm(x)1, 1(x)y1,..,1(x)yn, every mixed
// pair commuting, under the caller-chosen order on N^(m+n).
inline Presentation tensor_product(const Presentation& r, const Presentation& s, OrderSpec order) {
  require_same_field(r.field(), s.field());
  std::size_t m = r.n(), n = s.n();
  std::vector<std::string> names;
  for (const auto& nm : r.names()) names.push_back(nm + "#1");
  for (const auto& nm : s.names()) names.push_back("1#" + nm);
  if (!order_fits(order, m + n))
    throw validation_error("tensor product order does not fit " + std::to_string(m + n) +
                           " variables");
  Presentation t(r.field(), std::move(names), std::move(order));
  auto pad_left = [&](const Poly& p) {
    std::vector<Term> out;
    for (const auto& tm : p.t) {
      Exponent e(m + n);
      for (std::size_t k = 0; k < m; ++k) e[k] = tm.exp[k];
      out.push_back(Term{std::move(e), tm.c});
    }
    return t.canonical(std::move(out));
  };
  auto pad_right = [&](const Poly& p) {
    std::vector<Term> out;
    for (const auto& tm : p.t) {
      Exponent e(m + n);
      for (std::size_t k = 0; k < n; ++k) e[m + k] = tm.exp[k];
      out.push_back(Term{std::move(e), tm.c});
    }
    return t.canonical(std::move(out));
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      t.set_relation(i, j, r.rel(i, j).q, pad_left(r.rel(i, j).p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      t.set_relation(m + i, m + j, s.rel(i, j).q, pad_right(s.rel(i, j).p));
  TensorInfo ti;
  ti.left_n = m;
  ti.right_reversed = false;
  ti.left_names = r.names();
  ti.right_names = s.names();
  t.set_tensor_info(std::move(ti));
  return t;
}

// R^op: same underlying space, reversed multiplication. Generators are
// listed in reversed order so that the presentation is again bounded, with
// the opposite admissible order.
inline Presentation opposite(const Presentation& r) {
  std::size_t n = r.n();
  std::vector<std::string> names(r.names().rbegin(), r.names().rend());
  Presentation s(r.field(), std::move(names), opposite_order(r.order()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      // slots a < b of the opposite hold x_{n-1-a} > x_{n-1-b}
      std::size_t i = n - 1 - b, j = n - 1 - a;
      const Relation& rr = r.rel(i, j);
      std::vector<Term> tail;
      for (const auto& tm : rr.p.t) tail.push_back(Term{reversed(tm.exp), tm.c});
      s.set_relation(a, b, rr.q, s.canonical(std::move(tail)));
    }
  return s;
}

enum class EnvKind { comp_up, comp_down, elim_up, elim_down };

inline OrderSpec enveloping_order(const OrderSpec& base, EnvKind kind) {
  switch (kind) {
    case EnvKind::comp_up:
      return comp_up_order(base);
    case EnvKind::comp_down:
      return comp_down_order(base);
    case EnvKind::elim_up:
      return elim_up_order(base);
    case EnvKind::elim_down:
      return elim_down_order(base);
  }
  throw math_error("unreachable env order kind");
}

// R^env = R (x) R^op on 2n generators x1(x)1,..,xn(x)1,1(x)xn,..,1(x)x1; the
// second exponent block therefore stores right factors reversed.
inline Presentation enveloping(const Presentation& r, EnvKind kind) {
  Presentation env = tensor_product(r, opposite(r), enveloping_order(r.order(), kind));
  TensorInfo ti;
  ti.left_n = r.n();
  ti.right_reversed = true;
  ti.left_names = r.names();
  ti.right_names = r.names();
  env.set_tensor_info(std::move(ti));
  return env;
}

}  // namespace pbwgb

#endif
