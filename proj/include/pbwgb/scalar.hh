#ifndef PBWGB_SCALAR_HH
#define PBWGB_SCALAR_HH

// Exact coefficient arithmetic: Q, or a quadratic extension Q(theta) with
// theta^2 = d for a fixed non-square rational d. Elements are kept in the
// canonical form a + b*theta with reduced rationals (positive denominators
// via GMP canonicalization).

#include <gmpxx.h>

#include <string>

#include "error.hh"

namespace pbwgb {

inline bool is_rational_square(const mpq_class& x) {
  if (sgn(x) < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(x.get_den().get_mpz_t());
}

// The coefficient field: Q itself, or Q(theta), theta^2 = d.
struct Field {
  bool extension = false;
  mpq_class d = 0;

  bool operator==(const Field& o) const {
    return extension == o.extension && (!extension || d == o.d);
  }
};

inline Field rationals() { return Field{}; }

inline Field quadratic(const mpq_class& d) {
  if (is_rational_square(d))
    throw validation_error("field discriminant " + d.get_str() +
                           " is a rational square; Q(theta) would not be a field");
  return Field{true, d};
}

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw validation_error("mixing elements of different coefficient fields");
}

// a + b*theta. For the rationals field b must stay 0 (checked where values
// enter: parsing and presentation validation).
struct Scalar {
  mpq_class a = 0;
  mpq_class b = 0;

  Scalar() = default;
  Scalar(long v) : a(v) {}                           // NOLINT: implicit by design
  Scalar(const mpq_class& ra) : a(ra) {}             // NOLINT
  Scalar(const mpq_class& ra, const mpq_class& rb) : a(ra), b(rb) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool operator==(const Scalar& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

inline Scalar theta() { return Scalar(0, 1); }

inline Scalar operator+(const Scalar& x, const Scalar& y) { return Scalar(x.a + y.a, x.b + y.b); }
inline Scalar operator-(const Scalar& x, const Scalar& y) { return Scalar(x.a - y.a, x.b - y.b); }
inline Scalar operator-(const Scalar& x) { return Scalar(-x.a, -x.b); }

inline Scalar mul(const Field& k, const Scalar& x, const Scalar& y) {
  if (x.b == 0 && y.b == 0) return Scalar(x.a * y.a);
  // (a + b t)(c + e t) = ac + be d + (ae + bc) t
  return Scalar(x.a * y.a + x.b * y.b * k.d, x.a * y.b + x.b * y.a);
}

inline Scalar inv(const Field& k, const Scalar& x) {
  if (x.is_zero()) throw math_error("inverse of zero");
  if (x.b == 0) return Scalar(1 / x.a);
  // 1/(a + b t) = (a - b t)/(a^2 - b^2 d); the norm is nonzero since d is
  // not a square.
  mpq_class n = x.a * x.a - x.b * x.b * k.d;
  return Scalar(x.a / n, -x.b / n);
}

inline Scalar div(const Field& k, const Scalar& x, const Scalar& y) {
  return mul(k, x, inv(k, y));
}

// True for values that print with a leading minus: negative rationals and
// negative pure theta-multiples. Mixed a+b*theta values always get wrapped
// in parentheses by the polynomial formatter, so their "sign" never shows.
inline bool formats_negative(const Scalar& s) {
  return (s.b == 0 && s.a < 0) || (s.a == 0 && s.b < 0);
}

inline std::string theta_symbol(const Field& k) {
  return (k.extension && k.d == -2) ? "I*sqrt2" : "theta";
}

inline std::string format_scalar(const Field& k, const Scalar& s) {
  if (s.b == 0) return s.a.get_str();
  std::string tpart;
  if (s.b == 1)
    tpart = theta_symbol(k);
  else if (s.b == -1)
    tpart = "-" + theta_symbol(k);
  else
    tpart = s.b.get_str() + "*" + theta_symbol(k);
  if (s.a == 0) return tpart;
  if (s.b > 0) return s.a.get_str() + "+" + tpart;
  return s.a.get_str() + tpart;  // tpart carries its own minus sign
}

}  // namespace pbwgb

#endif
