#include "skr/scalar.hpp"

#include <cctype>
#include <vector>

namespace skr {

namespace {

void reduceRational(Int& n, Int& d) {
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd(n, d);
  if (!g.isOne() && !g.isZero()) {
    n = divExact(n, g);
    d = divExact(d, g);
  }
}

const Poly& onePoly() {
  static const Poly p = Poly::constant(Int(1));
  return p;
}

const Poly& zeroPoly() {
  static const Poly p;
  return p;
}

}  // namespace

Scalar Scalar::make(Int cn, Int cd, Poly n, Poly d) {
  if (cn.isZero() || n.isZero()) return Scalar();
  if (d.isZero()) throw Error("division by zero");
  Int kn, kd;
  n = n.primitive(&kn);
  d = d.primitive(&kd);
  cn = cn * kn;
  cd = cd * kd;
  reduceRational(cn, cd);
  auto rep = std::make_shared<Rep>();
  rep->cn = std::move(cn);
  rep->cd = std::move(cd);
  rep->n = std::move(n);
  rep->d = std::move(d);
  size_t h = rep->cn.hash() * 7919u ^ rep->cd.hash();
  h = h * 1000003u ^ rep->n.hash();
  h = h * 1000003u ^ rep->d.hash();
  rep->hash = h;
  Scalar s;
  s.rep_ = std::move(rep);
  return s;
}

Scalar Scalar::makeReduced(Int cn, Int cd, Poly n, Poly d) {
  if (cn.isZero() || n.isZero()) return Scalar();
  if (d.isZero()) throw Error("division by zero");
  if (!d.isConstant() && !n.isConstant()) {
    Poly g = gcd(n, d);
    if (!g.isConstant()) {
      n = *n.divExact(g);
      d = *d.divExact(g);
    }
  }
  return make(std::move(cn), std::move(cd), std::move(n), std::move(d));
}

Scalar::Scalar(long long v) {
  if (v != 0) *this = make(Int(v), Int(1), onePoly(), onePoly());
}

Scalar::Scalar(const Int& num, const Int& den) {
  if (den.isZero()) throw Error("division by zero");
  if (!num.isZero()) *this = make(num, den, onePoly(), onePoly());
}

Scalar Scalar::var(std::string_view name) { return var(varIndex(name)); }

Scalar Scalar::var(int index) { return make(Int(1), Int(1), Poly::variable(index), onePoly()); }

Scalar Scalar::fromPoly(const Poly& p) { return make(Int(1), Int(1), p, onePoly()); }

bool Scalar::isOne() const {
  return rep_ && rep_->cn.isOne() && rep_->cd.isOne() && rep_->n.isOne() && rep_->d.isOne();
}

bool Scalar::isConstant() const { return !rep_ || (rep_->n.isConstant() && rep_->d.isConstant()); }

uint32_t Scalar::varMask() const { return rep_ ? (rep_->n.varMask() | rep_->d.varMask()) : 0u; }

bool Scalar::dependsOn(int v) const { return (varMask() >> v) & 1u; }

Scalar Scalar::operator-() const {
  if (!rep_) return *this;
  return make(-rep_->cn, rep_->cd, rep_->n, rep_->d);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (!x.rep_) return y;
  if (!y.rep_) return x;
  const auto& X = *x.rep_;
  const auto& Y = *y.rep_;
  Int l = divExact(X.cd, gcd(X.cd, Y.cd)) * Y.cd;
  Int fx = X.cn * divExact(l, X.cd);
  Int fy = Y.cn * divExact(l, Y.cd);
  if (X.d == Y.d) {
    Poly t = X.n.scaled(fx) + Y.n.scaled(fy);
    if (X.d.isOne()) return Scalar::make(Int(1), l, std::move(t), X.d);
    return Scalar::makeReduced(Int(1), l, std::move(t), X.d);
  }
  if (X.d.isOne() || Y.d.isOne()) {
    // One side is a polynomial: no common factor can appear with the other denominator.
    const Poly& den = X.d.isOne() ? Y.d : X.d;
    Poly t = X.d.isOne() ? X.n.scaled(fx) * Y.d + Y.n.scaled(fy) : X.n.scaled(fx) + Y.n.scaled(fy) * X.d;
    return Scalar::make(Int(1), l, std::move(t), den);
  }
  Poly g = gcd(X.d, Y.d);
  Poly dx = g.isOne() ? X.d : *X.d.divExact(g);
  Poly dy = g.isOne() ? Y.d : *Y.d.divExact(g);
  Poly t = X.n.scaled(fx) * dy + Y.n.scaled(fy) * dx;
  Poly den = X.d * dy;
  if (!g.isConstant() && !t.isZero()) {
    Poly g2 = gcd(t, g);
    if (!g2.isConstant()) {
      t = *t.divExact(g2);
      den = *den.divExact(g2);
    }
  }
  return Scalar::make(Int(1), l, std::move(t), std::move(den));
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (!x.rep_ || !y.rep_) return Scalar();
  const auto& X = *x.rep_;
  const auto& Y = *y.rep_;
  Poly xn = X.n, xd = X.d, yn = Y.n, yd = Y.d;
  if (!yd.isOne() && !xn.isConstant()) {
    Poly g = gcd(xn, yd);
    if (!g.isConstant()) {
      xn = *xn.divExact(g);
      yd = *yd.divExact(g);
    }
  }
  if (!xd.isOne() && !yn.isConstant()) {
    Poly g = gcd(yn, xd);
    if (!g.isConstant()) {
      yn = *yn.divExact(g);
      xd = *xd.divExact(g);
    }
  }
  return Scalar::make(X.cn * Y.cn, X.cd * Y.cd, xn * yn, xd * yd);
}

Scalar Scalar::inv() const {
  if (!rep_) throw Error("division by zero");
  return make(rep_->cd, rep_->cn, rep_->d, rep_->n);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.rep_ == y.rep_) return true;
  if (!x.rep_ || !y.rep_) return false;
  const auto& X = *x.rep_;
  const auto& Y = *y.rep_;
  return X.hash == Y.hash && X.cn == Y.cn && X.cd == Y.cd && X.n == Y.n && X.d == Y.d;
}

bool operator<(const Scalar& x, const Scalar& y) {
  if (!x.rep_ || !y.rep_) return !x.rep_ && y.rep_;
  const auto& X = *x.rep_;
  const auto& Y = *y.rep_;
  if (int c = compare(X.n, Y.n); c != 0) return c < 0;
  if (int c = compare(X.d, Y.d); c != 0) return c < 0;
  if (int c = compare(X.cn, Y.cn); c != 0) return c < 0;
  return compare(X.cd, Y.cd) < 0;
}

Scalar Scalar::numerator() const {
  if (!rep_) return Scalar();
  return make(rep_->cn, Int(1), rep_->n, onePoly());
}

Scalar Scalar::denominator() const {
  if (!rep_) return Scalar(1);
  return make(rep_->cd, Int(1), rep_->d, onePoly());
}

std::pair<Int, Int> Scalar::coefficient() const {
  if (!rep_) return {Int(0), Int(1)};
  return {rep_->cn, rep_->cd};
}

const Poly& Scalar::numPoly() const { return rep_ ? rep_->n : zeroPoly(); }
const Poly& Scalar::denPoly() const { return rep_ ? rep_->d : onePoly(); }

namespace {

Scalar hornerAt(const Poly& p, int v, const Scalar& value) {
  auto cs = p.coeffsIn(v);
  Scalar acc;
  for (size_t k = cs.size(); k-- > 0;) {
    acc = acc * value + Scalar::fromPoly(cs[k]);
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(int v, const Scalar& value) const {
  if (!dependsOn(v)) return *this;
  Scalar num = hornerAt(rep_->n, v, value);
  Scalar den = hornerAt(rep_->d, v, value);
  if (den.isZero()) throw PoleError("pole under substitution", 0);
  return Scalar(rep_->cn, rep_->cd) * num / den;
}

Scalar Scalar::limit(int v, LimitDir dir) const {
  if (!dependsOn(v)) return *this;
  const auto& R = *rep_;
  if (dir == LimitDir::toInfinity) {
    int dn = R.n.degreeIn(v);
    int dd = R.d.degreeIn(v);
    if (dn > dd) throw PoleError("pole of order " + std::to_string(dn - dd) + " at infinity in " + varName(v), dn - dd);
    if (dn < dd) return Scalar();
    return Scalar(R.cn, R.cd) * Scalar::fromPoly(R.n.coeffsIn(v).back()) / Scalar::fromPoly(R.d.coeffsIn(v).back());
  }
  int md = R.d.minDegreeIn(v);
  if (md > 0) throw PoleError("pole of order " + std::to_string(md) + " at zero in " + varName(v), md);
  return substitute(v, Scalar());
}

std::pair<int, int> Scalar::laurentDegreeRange(int v) const {
  if (!rep_) throw Error("zero has no exponent range");
  const auto& R = *rep_;
  int m = R.d.minDegreeIn(v);
  if (R.d.degreeIn(v) != m) throw Error("not Laurent in " + varName(v));
  return {R.n.minDegreeIn(v) - m, R.n.degreeIn(v) - m};
}

std::map<int, Scalar> Scalar::laurentCoefficients(int v) const {
  std::map<int, Scalar> out;
  if (!rep_) return out;
  const auto& R = *rep_;
  int m = R.d.minDegreeIn(v);
  if (R.d.degreeIn(v) != m) throw Error("not Laurent in " + varName(v));
  Scalar rest = Scalar(R.cn, R.cd) / Scalar::fromPoly(R.d.divMono(Mono::of(v, m)));
  auto cs = R.n.coeffsIn(v);
  for (size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].isZero()) continue;
    out.emplace(static_cast<int>(k) - m, Scalar::fromPoly(cs[k]) * rest);
  }
  return out;
}

Scalar Scalar::denominatorPartIn(int v) const {
  if (!rep_ || !rep_->d.varMask()) return Scalar(1);
  if (!((rep_->d.varMask() >> v) & 1u)) return Scalar(1);
  Poly c = contentIn(rep_->d, v);
  return Scalar::fromPoly(c.isOne() ? rep_->d : *rep_->d.divExact(c));
}

Scalar lcmPoly(const Scalar& x, const Scalar& y) {
  const Poly& a = x.numPoly();
  const Poly& b = y.numPoly();
  if (a.isOne()) return Scalar::fromPoly(b);
  if (b.isOne()) return Scalar::fromPoly(a);
  Poly g = gcd(a, b);
  return Scalar::fromPoly(*a.divExact(g) * b);
}

Scalar qPow(int k) { return Scalar::var(var::q).pow(k); }

// ---------------------------------------------------------------- text

namespace {

std::string ratStr(Int n, Int d) {
  reduceRational(n, d);
  return d.isOne() ? n.str() : n.str() + "/" + d.str();
}

// Prints sum (cn/cd * t.c) * t.m with rational coefficients.
std::string polyStr(const Poly& p, const Int& cn, const Int& cd) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Int n = t.c * cn;
    Int d = cd;
    reduceRational(n, d);
    bool neg = n.sign() < 0;
    if (neg) n = -n;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool needStar = false;
    if (!(n.isOne() && d.isOne()) || t.m.isOne()) {
      out += ratStr(n, d);
      needStar = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i] == 0) continue;
      if (needStar) out += "*";
      out += varName(i);
      if (t.m.e[i] != 1) out += "^" + std::to_string(t.m.e[i]);
      needStar = true;
    }
  }
  return out;
}

}  // namespace

std::string Scalar::str() const {
  if (!rep_) return "0";
  const auto& R = *rep_;
  const Int& lam = R.d.lc();
  if (R.d.isConstant()) return polyStr(R.n, R.cn, R.cd * lam);
  std::string num = polyStr(R.n, R.cn, R.cd * lam);
  std::string den = polyStr(R.d, Int(1), lam);
  return "(" + num + ")/(" + den + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at " + std::to_string(pos_) + ": " + msg + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.isZero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  int exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    if (!neg) eat('+');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      int e = exponent();
      if (e < 0 && base.isZero()) fail("zero to a negative power");
      return base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Int::parse(s_.substr(start, pos_ - start)), Int(1));
    }
    if (s_.substr(pos_, 2) == "κ") {
      pos_ += 2;
      return Scalar::var(var::kappa);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Scalar::var(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace skr
