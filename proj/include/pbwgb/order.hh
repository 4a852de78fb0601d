#ifndef PBWGB_ORDER_HH
#define PBWGB_ORDER_HH

// Exponent vectors and admissible orders on N^n, plus the derived orders
// used on N^(2n) when working inside an enveloping algebra, and TOP/POT
// orders on exponents of free modules.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "error.hh"

namespace pbwgb {

struct Exponent {
  std::vector<std::uint32_t> v;

  Exponent() = default;
  explicit Exponent(std::size_t n) : v(n, 0) {}
  Exponent(std::initializer_list<std::uint32_t> init) : v(init) {}

  std::size_t size() const { return v.size(); }
  std::uint32_t operator[](std::size_t i) const { return v[i]; }
  std::uint32_t& operator[](std::size_t i) { return v[i]; }
  bool is_zero() const {
    for (auto x : v)
      if (x) return false;
    return true;
  }
  std::uint64_t deg() const { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }
  bool operator==(const Exponent& o) const { return v == o.v; }
};

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw math_error("exponent size mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// a - b, requiring b to divide a componentwise.
inline Exponent operator-(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw math_error("exponent size mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw math_error("exponent subtraction underflow");
    r[i] = a[i] - b[i];
  }
  return r;
}

inline bool divides(const Exponent& b, const Exponent& a) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

inline Exponent cw_max(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw math_error("exponent size mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Exponent reversed(const Exponent& a) {
  Exponent r = a;
  std::reverse(r.v.begin(), r.v.end());
  return r;
}

inline Exponent unit_exponent(std::size_t n, std::size_t i) {
  Exponent r(n);
  r[i] = 1;
  return r;
}

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e.v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Admissible orders.
//
// lex / glex / wlex compare within N^n (lex with x1 < x2 < ... < xn, so the
// last variable dominates; glex by total degree first; wlex by a positive
// weighted degree first, ties lex).
//
// block splits N^n at `split` and compares the two halves under `first` and
// `second`; `back_first` gives the block elimination order that prioritizes
// the second half.
//
// comp_up / comp_down / elim_up / elim_down act on N^(2n) as used for an
// enveloping algebra whose second half stores the right-factor exponent in
// reversed variable order: with (A, B) the two halves and B~ the reversal of
// B, comp_up compares A + B~ under the base order and breaks ties by B~,
// comp_down breaks ties by A instead; elim_up compares B~ first then A,
// elim_down compares A first then B~.
//
// opposite compares reversed vectors under the base order.

struct OrderSpec;
using OrderPtr = std::shared_ptr<const OrderSpec>;

struct OrderSpec {
  enum class Kind { lex, glex, wlex, block, comp_up, comp_down, elim_up, elim_down, opposite };
  Kind kind = Kind::lex;
  std::vector<long long> weights;  // wlex only
  OrderPtr first, second;          // block; first doubles as the base elsewhere
  std::size_t split = 0;           // block only
  bool back_first = false;         // block only
};

inline OrderSpec lex_order() { return OrderSpec{OrderSpec::Kind::lex, {}, nullptr, nullptr, 0, false}; }
inline OrderSpec glex_order() { return OrderSpec{OrderSpec::Kind::glex, {}, nullptr, nullptr, 0, false}; }

inline OrderSpec wlex_order(std::vector<long long> w) {
  for (auto x : w)
    if (x <= 0) throw validation_error("wlex weights must be positive");
  return OrderSpec{OrderSpec::Kind::wlex, std::move(w), nullptr, nullptr, 0, false};
}

inline OrderSpec block_order(const OrderSpec& first, std::size_t split, const OrderSpec& second,
                             bool back_first = false) {
  return OrderSpec{OrderSpec::Kind::block, {}, std::make_shared<OrderSpec>(first),
                   std::make_shared<OrderSpec>(second), split, back_first};
}

inline OrderSpec comp_up_order(const OrderSpec& base) {
  return OrderSpec{OrderSpec::Kind::comp_up, {}, std::make_shared<OrderSpec>(base), nullptr, 0, false};
}
inline OrderSpec comp_down_order(const OrderSpec& base) {
  return OrderSpec{OrderSpec::Kind::comp_down, {}, std::make_shared<OrderSpec>(base), nullptr, 0, false};
}
inline OrderSpec elim_up_order(const OrderSpec& base) {
  return OrderSpec{OrderSpec::Kind::elim_up, {}, std::make_shared<OrderSpec>(base), nullptr, 0, false};
}
inline OrderSpec elim_down_order(const OrderSpec& base) {
  return OrderSpec{OrderSpec::Kind::elim_down, {}, std::make_shared<OrderSpec>(base), nullptr, 0, false};
}

// opposite(opposite(o)) collapses back to o, making the involution visible
// structurally.
inline OrderSpec opposite_order(const OrderSpec& base) {
  if (base.kind == OrderSpec::Kind::opposite) return *base.first;
  return OrderSpec{OrderSpec::Kind::opposite, {}, std::make_shared<OrderSpec>(base), nullptr, 0, false};
}

inline bool order_fits(const OrderSpec& o, std::size_t n) {
  switch (o.kind) {
    case OrderSpec::Kind::lex:
    case OrderSpec::Kind::glex:
      return true;
    case OrderSpec::Kind::wlex:
      return o.weights.size() == n;
    case OrderSpec::Kind::block:
      return o.split <= n && order_fits(*o.first, o.split) && order_fits(*o.second, n - o.split);
    case OrderSpec::Kind::comp_up:
    case OrderSpec::Kind::comp_down:
    case OrderSpec::Kind::elim_up:
    case OrderSpec::Kind::elim_down:
      return n % 2 == 0 && order_fits(*o.first, n / 2);
    case OrderSpec::Kind::opposite:
      return order_fits(*o.first, n);
  }
  return false;
}

namespace detail {
// Generators are indexed so that later ones dominate: x1 < x2 < ... < xn.
// Hence lex compares the last coordinate first.
inline std::strong_ordering lex_cmp(const Exponent& a, const Exponent& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}
inline void split_halves(const Exponent& x, Exponent& front, Exponent& backrev) {
  std::size_t n = x.size() / 2;
  front.v.assign(x.v.begin(), x.v.begin() + n);
  backrev.v.assign(x.v.rbegin(), x.v.rbegin() + n);
}
}  // namespace detail

inline std::strong_ordering cmp(const OrderSpec& o, const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw math_error("exponent size mismatch in order comparison");
  switch (o.kind) {
    case OrderSpec::Kind::lex:
      return detail::lex_cmp(a, b);
    case OrderSpec::Kind::glex: {
      if (auto c = a.deg() <=> b.deg(); c != 0) return c;
      return detail::lex_cmp(a, b);
    }
    case OrderSpec::Kind::wlex: {
      if (o.weights.size() != a.size()) throw math_error("wlex weight count mismatch");
      __int128 wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += static_cast<__int128>(o.weights[i]) * a[i];
        wb += static_cast<__int128>(o.weights[i]) * b[i];
      }
      if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
      return detail::lex_cmp(a, b);
    }
    case OrderSpec::Kind::block: {
      Exponent a1, a2, b1, b2;
      a1.v.assign(a.v.begin(), a.v.begin() + o.split);
      a2.v.assign(a.v.begin() + o.split, a.v.end());
      b1.v.assign(b.v.begin(), b.v.begin() + o.split);
      b2.v.assign(b.v.begin() + o.split, b.v.end());
      if (o.back_first) {
        if (auto c = cmp(*o.second, a2, b2); c != 0) return c;
        return cmp(*o.first, a1, b1);
      }
      if (auto c = cmp(*o.first, a1, b1); c != 0) return c;
      return cmp(*o.second, a2, b2);
    }
    case OrderSpec::Kind::comp_up:
    case OrderSpec::Kind::comp_down: {
      Exponent a1, a2r, b1, b2r;
      detail::split_halves(a, a1, a2r);
      detail::split_halves(b, b1, b2r);
      if (auto c = cmp(*o.first, a1 + a2r, b1 + b2r); c != 0) return c;
      if (o.kind == OrderSpec::Kind::comp_up) return cmp(*o.first, a2r, b2r);
      return cmp(*o.first, a1, b1);
    }
    case OrderSpec::Kind::elim_up:
    case OrderSpec::Kind::elim_down: {
      Exponent a1, a2r, b1, b2r;
      detail::split_halves(a, a1, a2r);
      detail::split_halves(b, b1, b2r);
      if (o.kind == OrderSpec::Kind::elim_up) {
        if (auto c = cmp(*o.first, a2r, b2r); c != 0) return c;
        return cmp(*o.first, a1, b1);
      }
      if (auto c = cmp(*o.first, a1, b1); c != 0) return c;
      return cmp(*o.first, a2r, b2r);
    }
    case OrderSpec::Kind::opposite:
      return cmp(*o.first, reversed(a), reversed(b));
  }
  throw math_error("unreachable order kind");
}

inline std::string format_order(const OrderSpec& o) {
  switch (o.kind) {
    case OrderSpec::Kind::lex:
      return "lex";
    case OrderSpec::Kind::glex:
      return "glex";
    case OrderSpec::Kind::wlex: {
      std::string s = "wlex:";
      for (std::size_t i = 0; i < o.weights.size(); ++i)
        s += (i ? "," : "") + std::to_string(o.weights[i]);
      return s;
    }
    case OrderSpec::Kind::block:
      return "block(" + format_order(*o.first) + ";" + std::to_string(o.split) + ";" +
             format_order(*o.second) + (o.back_first ? ";back" : "") + ")";
    case OrderSpec::Kind::comp_up:
      return "comp-up(" + format_order(*o.first) + ")";
    case OrderSpec::Kind::comp_down:
      return "comp-down(" + format_order(*o.first) + ")";
    case OrderSpec::Kind::elim_up:
      return "elim-up(" + format_order(*o.first) + ")";
    case OrderSpec::Kind::elim_down:
      return "elim-down(" + format_order(*o.first) + ")";
    case OrderSpec::Kind::opposite:
      return "opposite(" + format_order(*o.first) + ")";
  }
  return "?";
}

// Report-only admissibility probe over a finite sample: zero must be the
// minimum, and the order must survive translation. The comparator form
// exists so tests can feed a deliberately broken order.
template <class Cmp>
  requires(!std::same_as<std::remove_cvref_t<Cmp>, OrderSpec>)
inline std::vector<std::string> is_admissible_witness(Cmp&& less_than,
                                                      const std::vector<Exponent>& samples) {
  std::vector<std::string> bad;
  auto name = [](const Exponent& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
  };
  for (const auto& a : samples) {
    Exponent zero(a.size());
    if (less_than(a, zero)) bad.push_back(name(a) + " compares below zero");
  }
  for (const auto& a : samples)
    for (const auto& b : samples) {
      if (!less_than(a, b)) continue;
      for (const auto& c : samples) {
        if (less_than(b + c, a + c))
          bad.push_back(name(a) + " < " + name(b) + " flips when translated by " + name(c));
      }
    }
  return bad;
}

inline std::vector<std::string> is_admissible_witness(const OrderSpec& o,
                                                      const std::vector<Exponent>& samples) {
  return is_admissible_witness(
      [&](const Exponent& a, const Exponent& b) { return cmp(o, a, b) == std::strong_ordering::less; },
      samples);
}

// ---------------------------------------------------------------------------
// Module orders. A module exponent is a ring exponent plus a component
// index; under both TOP and POT a *larger* component index means a smaller
// module exponent.

struct ModExp {
  Exponent exp;
  std::size_t comp = 0;
  bool operator==(const ModExp& o) const { return comp == o.comp && exp == o.exp; }
};

enum class ModKind { top, pot };

struct ModOrder {
  ModKind kind = ModKind::top;
  OrderSpec base;
};

inline std::strong_ordering cmp_module(const ModOrder& mo, const ModExp& x, const ModExp& y) {
  if (mo.kind == ModKind::top) {
    if (auto c = cmp(mo.base, x.exp, y.exp); c != 0) return c;
    return y.comp <=> x.comp;
  }
  if (x.comp != y.comp) return y.comp <=> x.comp;
  return cmp(mo.base, x.exp, y.exp);
}

// ---------------------------------------------------------------------------
// Sampled admissibility check: zero is minimal and the order is translation
// invariant. Used as a witness on generated sample sets, not a proof.

struct OrderReport {
  bool ok = true;
  std::vector<std::string> violations;
};

inline std::string format_exponent_raw(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

inline OrderReport check_admissible(const OrderSpec& o, const std::vector<Exponent>& samples) {
  OrderReport rep;
  if (samples.empty()) return rep;
  Exponent zero(samples.front().size());
  for (const auto& a : samples) {
    if (cmp(o, zero, a) == std::strong_ordering::greater) {
      rep.ok = false;
      rep.violations.push_back("zero exceeds " + format_exponent_raw(a));
    }
  }
  for (const auto& a : samples)
    for (const auto& b : samples) {
      auto ab = cmp(o, a, b);
      if ((ab == std::strong_ordering::equal) != (a == b)) {
        rep.ok = false;
        rep.violations.push_back("order not antisymmetric on " + format_exponent_raw(a) + " vs " +
                                 format_exponent_raw(b));
        continue;
      }
      if (ab != std::strong_ordering::less) continue;
      for (const auto& g : samples) {
        if (cmp(o, a + g, b + g) != std::strong_ordering::less) {
          rep.ok = false;
          rep.violations.push_back("translation by " + format_exponent_raw(g) +
                                   " breaks " + format_exponent_raw(a) + " < " +
                                   format_exponent_raw(b));
        }
      }
    }
  return rep;
}

}  // namespace pbwgb

#endif
