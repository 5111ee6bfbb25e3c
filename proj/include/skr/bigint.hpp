#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace skr {

// Arbitrary-precision integer with an inline int64 fast path.
// Values that fit in int64 never touch the heap.
class Int {
 public:
  Int() = default;
  Int(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Int(const mpz_class& v) { assign(v); }

  Int(const Int& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  static Int parse(std::string_view text);

  bool isSmall() const { return !big_; }
  long long small() const { return small_; }
  mpz_class toMpz() const;

  int sign() const;
  bool isZero() const { return !big_ && small_ == 0; }
  bool isOne() const { return !big_ && small_ == 1; }

  Int operator-() const;
  friend Int operator+(const Int& x, const Int& y);
  friend Int operator-(const Int& x, const Int& y);
  friend Int operator*(const Int& x, const Int& y);
  Int& operator+=(const Int& y) { return *this = *this + y; }
  Int& operator-=(const Int& y) { return *this = *this - y; }
  Int& operator*=(const Int& y) { return *this = *this * y; }

  // Exact quotient; the caller guarantees y divides x.
  friend Int divExact(const Int& x, const Int& y);
  // Floor-free truncating quotient and remainder test.
  friend bool divides(const Int& d, const Int& x);
  friend Int gcd(const Int& x, const Int& y);
  Int abs() const { return sign() < 0 ? -*this : *this; }

  friend int compare(const Int& x, const Int& y);
  friend bool operator==(const Int& x, const Int& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Int& x, const Int& y) { return compare(x, y) != 0; }
  friend bool operator<(const Int& x, const Int& y) { return compare(x, y) < 0; }

  std::string str() const;
  size_t hash() const;

 private:
  void assign(const mpz_class& v);

  long long small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Int divExact(const Int& x, const Int& y);
bool divides(const Int& d, const Int& x);
Int gcd(const Int& x, const Int& y);
int compare(const Int& x, const Int& y);

}  // namespace skr
