#include "skr/bigint.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>

namespace skr {

namespace {

mpz_class fromLL(long long v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

void Int::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

Int Int::parse(std::string_view text) {
  mpz_class v;
  if (v.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad integer literal: " + std::string(text));
  return Int(v);
}

mpz_class Int::toMpz() const { return big_ ? *big_ : fromLL(small_); }

int Int::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
  if (!big_ && small_ != LLONG_MIN) return Int(-small_);
  return Int(mpz_class(-toMpz()));
}

Int operator+(const Int& x, const Int& y) {
  long long r;
  if (!x.big_ && !y.big_ && !__builtin_add_overflow(x.small_, y.small_, &r)) return Int(r);
  return Int(mpz_class(x.toMpz() + y.toMpz()));
}

Int operator-(const Int& x, const Int& y) {
  long long r;
  if (!x.big_ && !y.big_ && !__builtin_sub_overflow(x.small_, y.small_, &r)) return Int(r);
  return Int(mpz_class(x.toMpz() - y.toMpz()));
}

Int operator*(const Int& x, const Int& y) {
  long long r;
  if (!x.big_ && !y.big_ && !__builtin_mul_overflow(x.small_, y.small_, &r)) return Int(r);
  return Int(mpz_class(x.toMpz() * y.toMpz()));
}

Int divExact(const Int& x, const Int& y) {
  if (!x.big_ && !y.big_ && !(x.small_ == LLONG_MIN && y.small_ == -1)) return Int(x.small_ / y.small_);
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), x.toMpz().get_mpz_t(), y.toMpz().get_mpz_t());
  return Int(r);
}

bool divides(const Int& d, const Int& x) {
  if (!x.big_ && !d.big_) {
    if (d.small_ == 0) return x.small_ == 0;
    if (d.small_ == -1) return true;
    return x.small_ % d.small_ == 0;
  }
  return mpz_divisible_p(x.toMpz().get_mpz_t(), d.toMpz().get_mpz_t()) != 0;
}

Int gcd(const Int& x, const Int& y) {
  if (!x.big_ && !y.big_ && x.small_ != LLONG_MIN && y.small_ != LLONG_MIN) {
    return Int(std::gcd(x.small_, y.small_));
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), x.toMpz().get_mpz_t(), y.toMpz().get_mpz_t());
  return Int(r);
}

int compare(const Int& x, const Int& y) {
  if (!x.big_ && !y.big_) return (x.small_ > y.small_) - (x.small_ < y.small_);
  int c = cmp(x.toMpz(), y.toMpz());
  return (c > 0) - (c < 0);
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

size_t Int::hash() const {
  if (!big_) return std::hash<long long>()(small_);
  return std::hash<std::string>()(big_->get_str(16));
}

}  // namespace skr
