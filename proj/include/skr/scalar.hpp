#pragma once

#include "skr/errors.hpp"
#include "skr/poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

namespace skr {

enum class LimitDir { toZero, toInfinity };

// Element of Q(q, a, b, kappa, z, w, ...). Stored as c * n / d with c rational,
// n and d primitive integer polynomials with positive leading coefficients and
// gcd(n, d) = 1. Immutable; copies share storage.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Int& num, const Int& den);
  static Scalar var(std::string_view name);
  static Scalar var(int index);
  static Scalar fromPoly(const Poly& p);
  static Scalar parse(std::string_view text);

  bool isZero() const { return !rep_; }
  bool isOne() const;
  bool isPolynomial() const { return !rep_ || rep_->d.isOne(); }
  bool isConstant() const;
  bool dependsOn(int v) const;
  uint32_t varMask() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }
  Scalar inv() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  // Total order on canonical forms (not an ordering of the field).
  friend bool operator<(const Scalar& x, const Scalar& y);
  size_t hash() const { return rep_ ? rep_->hash : 0; }

  Scalar numerator() const;
  Scalar denominator() const;
  // Rational coefficient c in the canonical form c * n / d.
  std::pair<Int, Int> coefficient() const;
  const Poly& numPoly() const;
  const Poly& denPoly() const;

  Scalar substitute(int v, const Scalar& value) const;
  Scalar substitute(std::string_view name, const Scalar& value) const { return substitute(varIndex(name), value); }
  Scalar limit(int v, LimitDir dir) const;
  std::pair<int, int> laurentDegreeRange(int v) const;
  // Coefficients of v^k when the denominator is a monomial in v times a v-free factor.
  std::map<int, Scalar> laurentCoefficients(int v) const;
  // The v-dependent factor of the denominator, as a polynomial Scalar.
  Scalar denominatorPartIn(int v) const;

  std::string str() const;

 private:
  struct Rep {
    Int cn;
    Int cd;
    Poly n;
    Poly d;
    size_t hash = 0;
  };
  static Scalar make(Int cn, Int cd, Poly n, Poly d);
  static Scalar makeReduced(Int cn, Int cd, Poly n, Poly d);
  std::shared_ptr<const Rep> rep_;
};

Scalar lcmPoly(const Scalar& x, const Scalar& y);

struct ScalarHash {
  size_t operator()(const Scalar& s) const { return s.hash(); }
};

// Common shorthand used throughout: q, q^-1, and q^k.
Scalar qPow(int k);

}  // namespace skr
