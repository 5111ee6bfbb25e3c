#pragma once

#include "skr/bigint.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skr {

constexpr int kMaxVars = 16;

// Global indeterminate universe. The first six slots are fixed:
// q, a, b, kappa, z, w. Further names are appended on first use.
int varIndex(std::string_view name);
std::optional<int> findVar(std::string_view name);
const std::string& varName(int index);
int varCount();

namespace var {
inline constexpr int q = 0;
inline constexpr int a = 1;
inline constexpr int b = 2;
inline constexpr int kappa = 3;
inline constexpr int z = 4;
inline constexpr int w = 5;
}  // namespace var

struct Mono {
  std::array<int16_t, kMaxVars> e{};
  int deg = 0;

  static Mono of(int v, int power = 1);
  bool isOne() const { return deg == 0; }
  bool divides(const Mono& o) const;
  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divisibility
  friend bool operator==(const Mono& x, const Mono& y) { return x.deg == y.deg && x.e == y.e; }
  friend bool operator!=(const Mono& x, const Mono& y) { return !(x == y); }
};

// Graded lexicographic comparison, q > a > b > kappa > z > w > extensions.
int grlexCompare(const Mono& x, const Mono& y);
Mono monoMin(const Mono& x, const Mono& y);

struct Term {
  Mono m;
  Int c;
};

// Multivariate polynomial over Z, terms sorted decreasingly in grlex order.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Int& c);
  static Poly variable(int v, int power = 1);
  static Poly monomial(const Mono& m, const Int& c);
  static Poly fromTerms(std::vector<Term> terms);  // sorts and combines
  static Poly fromSortedTerms(std::vector<Term> terms);  // already strictly decreasing, nonzero

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.isOne()); }
  bool isMonomial() const { return terms_.size() == 1; }
  bool isOne() const { return isConstant() && !terms_.empty() && terms_[0].c.isOne(); }
  const Int& lc() const { return terms_.front().c; }
  const Mono& lm() const { return terms_.front().m; }
  Int constantTerm() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const Int& c) const;
  Poly mulMono(const Mono& m) const;
  Poly divMono(const Mono& m) const;
  Poly divInt(const Int& c) const;  // exact

  Int content() const;
  // Primitive over Z with positive leading coefficient; returns the factor removed.
  Poly primitive(Int* removed = nullptr) const;

  uint32_t varMask() const;
  int degreeIn(int v) const;
  int minDegreeIn(int v) const;
  Mono minMono() const;
  std::vector<Poly> coeffsIn(int v) const;
  static Poly fromCoeffsIn(int v, const std::vector<Poly>& coeffs);

  std::optional<Poly> divExact(const Poly& d) const;
  bool dividedBy(const Poly& d) const { return divExact(d).has_value(); }

  friend bool operator==(const Poly& x, const Poly& y);
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }
  friend int compare(const Poly& x, const Poly& y);
  size_t hash() const;
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Content with respect to v: gcd of the coefficients of the powers of v.
Poly contentIn(const Poly& p, int v);

// Greatest common divisor over Q, returned primitive over Z with positive leading coefficient.
Poly gcd(const Poly& x, const Poly& y);

}  // namespace skr
