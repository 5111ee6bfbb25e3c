#include "skr/poly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace skr {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names{"q", "a", "b", "kappa", "z", "w"};
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::optional<int> findVar(std::string_view name) {
  if (name == "κ") name = "kappa";
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int varIndex(std::string_view name) {
  if (name == "κ") name = "kappa";
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<int>(i);
  }
  if (r.names.size() >= kMaxVars) throw std::runtime_error("too many indeterminates (limit 16)");
  r.names.emplace_back(name);
  return static_cast<int>(r.names.size() - 1);
}

const std::string& varName(int index) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(static_cast<size_t>(index));
}

int varCount() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return static_cast<int>(r.names.size());
}

Mono Mono::of(int v, int power) {
  Mono m;
  m.e[v] = static_cast<int16_t>(power);
  m.deg = power;
  return m;
}

bool Mono::divides(const Mono& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] > o.e[i]) return false;
  }
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
  r.deg = deg + o.deg;
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
  r.deg = deg - o.deg;
  return r;
}

int grlexCompare(const Mono& x, const Mono& y) {
  if (x.deg != y.deg) return x.deg < y.deg ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i) {
    if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
  }
  return 0;
}

Mono monoMin(const Mono& x, const Mono& y) {
  Mono r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(x.e[i], y.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

Poly Poly::constant(const Int& c) {
  Poly p;
  if (!c.isZero()) p.terms_.push_back({Mono{}, c});
  return p;
}

Poly Poly::variable(int v, int power) { return monomial(Mono::of(v, power), Int(1)); }

Poly Poly::monomial(const Mono& m, const Int& c) {
  Poly p;
  if (!c.isZero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlexCompare(x.m, y.m) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.isZero()) p.terms_.pop_back();
    } else if (!t.c.isZero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::fromSortedTerms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Int Poly::constantTerm() const {
  if (!terms_.empty() && terms_.back().m.isOne()) return terms_.back().c;
  return Int(0);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

Poly merge(const Poly& x, const Poly& y, bool subtract) {
  std::vector<Term> out;
  out.reserve(x.terms().size() + y.terms().size());
  auto i = x.terms().begin();
  auto j = y.terms().begin();
  while (i != x.terms().end() || j != y.terms().end()) {
    int c;
    if (i == x.terms().end()) {
      c = -1;
    } else if (j == y.terms().end()) {
      c = 1;
    } else {
      c = grlexCompare(i->m, j->m);
    }
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->m, subtract ? -j->c : j->c});
      ++j;
    } else {
      Int s = subtract ? i->c - j->c : i->c + j->c;
      if (!s.isZero()) out.push_back({i->m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Poly::fromSortedTerms(std::move(out));
}

}  // namespace

Poly operator+(const Poly& x, const Poly& y) {
  if (x.isZero()) return y;
  if (y.isZero()) return x;
  return merge(x, y, false);
}

Poly operator-(const Poly& x, const Poly& y) {
  if (y.isZero()) return x;
  if (x.isZero()) return -y;
  return merge(x, y, true);
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.isZero() || y.isZero()) return Poly();
  if (x.isConstant()) return y.scaled(x.lc());
  if (y.isConstant()) return x.scaled(y.lc());
  if (x.isMonomial()) return y.mulMono(x.lm()).scaled(x.lc());
  if (y.isMonomial()) return x.mulMono(y.lm()).scaled(y.lc());
  std::vector<Term> out;
  out.reserve(x.terms().size() * y.terms().size());
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) out.push_back({s.m * t.m, s.c * t.c});
  }
  return Poly::fromTerms(std::move(out));
}

Poly Poly::scaled(const Int& c) const {
  if (c.isZero()) return Poly();
  if (c.isOne()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::mulMono(const Mono& m) const {
  if (m.isOne()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

Poly Poly::divMono(const Mono& m) const {
  if (m.isOne()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.m = t.m / m;
  return r;
}

Poly Poly::divInt(const Int& c) const {
  if (c.isOne()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.c = skr::divExact(t.c, c);
  return r;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : terms_) {
    g = gcd(g, t.c);
    if (g.isOne()) break;
  }
  return g;
}

Poly Poly::primitive(Int* removed) const {
  if (terms_.empty()) {
    if (removed) *removed = Int(0);
    return Poly();
  }
  Int g = content();
  if (lc().sign() < 0) g = -g;
  if (removed) *removed = g;
  return divInt(g);
}

uint32_t Poly::varMask() const {
  uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i] != 0) mask |= (1u << i);
    }
  }
  return mask;
}

int Poly::degreeIn(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.e[v]));
  return d;
}

int Poly::minDegreeIn(int v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().m.e[v];
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.m.e[v]));
  return d;
}

Mono Poly::minMono() const {
  if (terms_.empty()) return Mono{};
  Mono m = terms_.front().m;
  for (const auto& t : terms_) m = monoMin(m, t.m);
  return m;
}

std::vector<Poly> Poly::coeffsIn(int v) const {
  int d = degreeIn(v);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<size_t>(d) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    int k = s.m.e[v];
    s.m.e[v] = 0;
    s.m.deg -= k;
    buckets[static_cast<size_t>(k)].push_back(std::move(s));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::fromTerms(std::move(b)));
  return out;
}

Poly Poly::fromCoeffsIn(int v, const std::vector<Poly>& coeffs) {
  std::vector<Term> all;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term s = t;
      s.m.e[v] = static_cast<int16_t>(s.m.e[v] + static_cast<int>(k));
      s.m.deg += static_cast<int>(k);
      all.push_back(std::move(s));
    }
  }
  return fromTerms(std::move(all));
}

std::optional<Poly> Poly::divExact(const Poly& d) const {
  if (d.isZero()) throw std::domain_error("polynomial division by zero");
  if (isZero()) return Poly();
  if (d.isConstant()) {
    for (const auto& t : terms_) {
      if (!divides(d.lc(), t.c)) return std::nullopt;
    }
    return divInt(d.lc());
  }
  if (d.isMonomial()) {
    for (const auto& t : terms_) {
      if (!d.lm().divides(t.m) || !divides(d.lc(), t.c)) return std::nullopt;
    }
    return divMono(d.lm()).divInt(d.lc());
  }
  if (!d.lm().divides(lm())) return std::nullopt;
  Poly r = *this;
  std::vector<Term> quotient;
  while (!r.isZero()) {
    const Term& lt = r.terms_.front();
    if (!d.lm().divides(lt.m) || !divides(d.lc(), lt.c)) return std::nullopt;
    Term qt{lt.m / d.lm(), skr::divExact(lt.c, d.lc())};
    if (qt.m.deg < 0) return std::nullopt;
    r = r - d.mulMono(qt.m).scaled(qt.c);
    quotient.push_back(std::move(qt));
  }
  Poly q;
  q.terms_ = std::move(quotient);
  return q;
}

bool operator==(const Poly& x, const Poly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].m != y.terms_[i].m || x.terms_[i].c != y.terms_[i].c) return false;
  }
  return true;
}

int compare(const Poly& x, const Poly& y) {
  size_t n = std::min(x.terms_.size(), y.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = grlexCompare(x.terms_[i].m, y.terms_[i].m);
    if (c != 0) return c;
    c = compare(x.terms_[i].c, y.terms_[i].c);
    if (c != 0) return c;
  }
  if (x.terms_.size() == y.terms_.size()) return 0;
  return x.terms_.size() < y.terms_.size() ? -1 : 1;
}

size_t Poly::hash() const {
  size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (int i = 0; i < kMaxVars; ++i) h = h * 31 + static_cast<size_t>(t.m.e[i]);
    h = h * 1000003u ^ t.c.hash();
  }
  return h;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Int c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool needStar = false;
    if (!c.isOne() || t.m.isOne()) {
      out += c.str();
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

// ---------------------------------------------------------------- gcd

namespace {

// Pseudo-remainder of a by b as polynomials in v.
Poly pseudoRemainder(const Poly& a, const Poly& b, int v) {
  std::vector<Poly> r = a.coeffsIn(v);
  std::vector<Poly> d = b.coeffsIn(v);
  const size_t db = d.size() - 1;
  const Poly& lb = d.back();
  while (!r.empty() && r.size() - 1 >= db) {
    size_t da = r.size() - 1;
    Poly la = r.back();
    size_t shift = da - db;
    for (auto& c : r) c = c * lb;
    for (size_t j = 0; j <= db; ++j) r[j + shift] = r[j + shift] - la * d[j];
    while (!r.empty() && r.back().isZero()) r.pop_back();
  }
  return Poly::fromCoeffsIn(v, r);
}

Poly gcdImpl(const Poly& x, const Poly& y);

}  // namespace

Poly contentIn(const Poly& p, int v) {
  auto cs = p.coeffsIn(v);
  // Start with the coefficient with fewest terms; it bounds the gcd quickly.
  std::sort(cs.begin(), cs.end(), [](const Poly& s, const Poly& t) { return s.terms().size() < t.terms().size(); });
  Poly g;
  for (const auto& c : cs) {
    if (c.isZero()) continue;
    g = g.isZero() ? c.primitive() : gcdImpl(g, c);
    if (g.isConstant()) return Poly::constant(Int(1));
  }
  return g.isZero() ? Poly::constant(Int(1)) : g;
}

namespace {

Poly gcdImpl(const Poly& x0, const Poly& y0) {
  if (x0.isZero()) return y0.primitive();
  if (y0.isZero()) return x0.primitive();
  if (x0.isConstant() || y0.isConstant()) return Poly::constant(Int(1));

  Mono mx = x0.minMono();
  Mono my = y0.minMono();
  Mono mg = monoMin(mx, my);
  Poly x = x0.divMono(mx).primitive();
  Poly y = y0.divMono(my).primitive();
  Poly unitMono = Poly::monomial(mg, Int(1));
  if (x.isConstant() || y.isConstant()) return unitMono;
  if (x == y) return x.mulMono(mg);

  if (y.terms().size() <= x.terms().size()) {
    if (x.dividedBy(y)) return y.mulMono(mg);
  } else if (y.dividedBy(x)) {
    return x.mulMono(mg);
  }

  uint32_t mx_ = x.varMask();
  uint32_t my_ = y.varMask();
  uint32_t onlyX = mx_ & ~my_;
  uint32_t onlyY = my_ & ~mx_;
  if (onlyX != 0 || onlyY != 0) {
    const Poly& withExtra = onlyX != 0 ? x : y;
    const Poly& other = onlyX != 0 ? y : x;
    int v = __builtin_ctz(onlyX != 0 ? onlyX : onlyY);
    Poly g = other;
    for (const auto& c : withExtra.coeffsIn(v)) {
      if (c.isZero()) continue;
      g = gcdImpl(g, c);
      if (g.isConstant()) break;
    }
    return g.primitive().mulMono(mg);
  }

  int best = -1;
  int bestDeg = 1 << 30;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(mx_ & (1u << v))) continue;
    int d = std::max(x.degreeIn(v), y.degreeIn(v));
    if (d < bestDeg) {
      bestDeg = d;
      best = v;
    }
  }
  const int v = best;

  Poly cx = contentIn(x, v);
  Poly cy = contentIn(y, v);
  Poly px = cx.isOne() ? x : *x.divExact(cx);
  Poly py = cy.isOne() ? y : *y.divExact(cy);
  Poly gc = (cx.isOne() || cy.isOne()) ? Poly::constant(Int(1)) : gcdImpl(cx, cy);

  Poly r0 = px;
  Poly r1 = py;
  if (r0.degreeIn(v) < r1.degreeIn(v)) std::swap(r0, r1);
  while (true) {
    Poly r = pseudoRemainder(r0, r1, v);
    if (r.isZero()) break;
    if (r.degreeIn(v) == 0) {
      r1 = Poly::constant(Int(1));
      break;
    }
    Poly c = contentIn(r, v);
    r = c.isOne() ? r.primitive() : r.divExact(c)->primitive();
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  Poly g = r1.isConstant() ? gc : gc * r1;
  return g.primitive().mulMono(mg);
}

}  // namespace

Poly gcd(const Poly& x, const Poly& y) { return gcdImpl(x, y); }

}  // namespace skr
