#include "skr/lweights.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <set>

namespace skr {

namespace {

const Scalar& zSym() {
  static const Scalar z = Scalar::var(var::z);
  return z;
}

// k with x = q^k, if any.
std::optional<int> qExponent(const Scalar& x) {
  if (x.isZero()) return std::nullopt;
  auto [lo, hi] = x.laurentDegreeRange(var::q);
  if (lo != hi || x != qPow(lo)) return std::nullopt;
  return lo;
}

// Exponents of (1 - z base q^m) in h, keyed by (base, m), plus what is left over.
struct LatticeFactors {
  std::map<std::pair<Scalar, int>, int> mult;
  Scalar rest;
};

Scalar monomialTerm(const Term& t, const Scalar& coeff, const Poly& den) {
  return coeff * Scalar::fromPoly(Poly::monomial(t.m, t.c)) / Scalar::fromPoly(den);
}

// Peels linear factors (1 - z x) off a polynomial in z, with x read off the ratio of the
// two lowest coefficients.
void peel(Scalar P, int sign, std::map<std::pair<Scalar, int>, int>& mult) {
  for (int guard = 0; guard < 256; ++guard) {
    if (!P.dependsOn(var::z)) return;
    auto coeffs = P.laurentCoefficients(var::z);
    auto c0 = coeffs.find(0), c1 = coeffs.find(1);
    if (c0 == coeffs.end() || c1 == coeffs.end()) return;
    Scalar cand = -(c1->second / c0->second);
    if (!cand.denPoly().isMonomial()) return;
    auto [cn, cd] = cand.coefficient();
    Scalar coeff(cn, cd);
    bool progress = false;
    for (const auto& t : cand.numPoly().terms()) {
      Scalar x = monomialTerm(t, coeff, cand.denPoly());
      for (int k = 1; k <= 8 && !progress; ++k) {
        Scalar xk = x / Scalar(k);
        Scalar Q = P / (Scalar(1) - zSym() * xk);
        if (Q.denominator().dependsOn(var::z)) continue;
        mult[splitBase(xk)] += sign;
        P = Q;
        progress = true;
      }
      if (progress) break;
    }
    if (!progress) return;
  }
}

LatticeFactors latticeFactor(const Scalar& h) {
  LatticeFactors out;
  peel(h.numerator(), 1, out.mult);
  peel(h.denominator(), -1, out.mult);
  for (auto it = out.mult.begin(); it != out.mult.end();) it = it->second == 0 ? out.mult.erase(it) : std::next(it);
  Scalar L(1);
  for (const auto& [key, e] : out.mult) {
    L *= (Scalar(1) - zSym() * key.first * qPow(key.second)).pow(e);
  }
  out.rest = h / L;
  return out;
}

std::string baseLabel(const Scalar& base, int n) {
  std::string b = base.isOne() ? "" : base.str();
  if (n == 0) return b.empty() ? "1" : b;
  std::string qs = n == 1 ? "q" : fmt::format("q^{}", n);
  return b.empty() ? qs : b + "*" + qs;
}

}  // namespace

bool operator<(const XKey& x, const XKey& y) {
  if (x.i != y.i) return x.i < y.i;
  if (x.base != y.base) return x.base < y.base;
  return x.n < y.n;
}

Scalar xFactor(const Scalar& x) {
  Scalar q = qPow(1);
  return q * (Scalar(1) - zSym() * x * qPow(-1)) / (Scalar(1) - zSym() * x * q);
}

std::pair<Scalar, int> splitBase(const Scalar& x) {
  if (x.isZero() || !x.numPoly().isMonomial() || !x.denPoly().isMonomial()) {
    throw Error("spectral parameter " + x.str() + " is not a monomial");
  }
  auto [lo, hi] = x.laurentDegreeRange(var::q);
  (void)hi;
  return {x * qPow(-lo), lo};
}

// ---------------------------------------------------------------- EllWeight

EllWeight EllWeight::unit(int M, int N, Kind kind) {
  EllWeight w;
  w.M = M;
  w.N = N;
  w.kind = kind;
  return w;
}

EllWeight EllWeight::x(int M, int N, int i, const Scalar& base, int n, int e) {
  EllWeight w = unit(M, N);
  auto [b, m] = splitBase(base);
  if (e != 0) w.exps[{i, b, n + m}] = e;
  return w;
}

EllWeight EllWeight::a(int M, int N, int i, const Scalar& base, int n, int e) {
  EllWeight w = unit(M, N, Kind::A);
  auto [b, m] = splitBase(base);
  if (e != 0) w.exps[{i, b, n + m}] = e;
  return w;
}

std::vector<Scalar> EllWeight::value() const {
  std::vector<Scalar> f(size(), Scalar(1));
  for (const auto& [key, e] : exps) {
    Scalar phi = xFactor(key.base * qPow(key.n)).pow(e);
    if (kind == Kind::X) {
      for (int j = key.i; j <= size(); ++j) f[j - 1] *= phi;
    } else {
      f[key.i - 1] *= phi;
    }
  }
  if (!prefactor.empty()) {
    for (int j = 0; j < size(); ++j) f[j] *= prefactor[j];
  }
  return f;
}

std::vector<Scalar> EllWeight::weightTuple() const {
  auto f = value();
  for (auto& x : f) x = x.substitute(var::z, Scalar());
  return f;
}

std::optional<Weight> EllWeight::weight() const {
  auto t = weightTuple();
  Weight w(M, N);
  int prev = 0;
  for (int j = 1; j <= size(); ++j) {
    auto e = qExponent(t[j - 1]);
    if (!e) return std::nullopt;
    w[j] = *e - prev;
    prev = *e;
  }
  return w;
}

EllWeight EllWeight::inv() const {
  EllWeight w = *this;
  for (auto& [k, e] : w.exps) e = -e;
  for (auto& p : w.prefactor) p = p.inv();
  return w;
}

EllWeight operator*(const EllWeight& x, const EllWeight& y) {
  if (x.kind != y.kind || x.M != y.M || x.N != y.N) throw Error("l-weights of different kinds");
  if (x.prefactor.empty() && y.prefactor.empty()) {
    EllWeight w = x;
    for (const auto& [k, e] : y.exps) {
      int& v = w.exps[k];
      v += e;
      if (v == 0) w.exps.erase(k);
    }
    return w;
  }
  if (x.kind == EllWeight::Kind::A) throw Error("A-monomials carry no prefactor");
  auto fx = x.value(), fy = y.value();
  for (size_t j = 0; j < fx.size(); ++j) fx[j] *= fy[j];
  return factorEll(x.M, x.N, fx);
}

bool operator==(const EllWeight& x, const EllWeight& y) {
  return x.kind == y.kind && x.exps == y.exps && x.prefactor == y.prefactor;
}

bool operator<(const EllWeight& x, const EllWeight& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.exps != y.exps) return x.exps < y.exps;
  return x.prefactor < y.prefactor;
}

std::string EllWeight::str() const {
  if (isUnit()) return "1";
  std::string out;
  const char* sym = kind == Kind::X ? "X" : "A";
  for (const auto& [k, e] : exps) {
    if (!out.empty()) out += " ";
    out += fmt::format("[{}_{{{},{}}}]", sym, k.i, baseLabel(k.base, k.n));
    if (e != 1) out += fmt::format("^{}", e);
  }
  if (!prefactor.empty()) {
    std::vector<std::string> ps;
    for (const auto& p : prefactor) ps.push_back(p.str());
    if (!out.empty()) out += " ";
    out += fmt::format("({})", fmt::join(ps, ", "));
  }
  return out;
}

std::string EllWeight::json() const {
  nlohmann::json j;
  j["kind"] = kind == Kind::X ? "X" : "A";
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& [k, e] : exps) ts.push_back({k.i, k.base.str(), k.n, e});
  j["factors"] = ts;
  if (!prefactor.empty()) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : prefactor) ps.push_back(p.str());
    j["prefactor"] = ps;
  }
  return j.dump();
}

EllWeight factorEll(int M, int N, const std::vector<Scalar>& f) {
  int n = M + N;
  if (static_cast<int>(f.size()) != n) throw Error("l-weight tuple has the wrong length");
  EllWeight w = EllWeight::unit(M, N);
  std::vector<Scalar> leftover(n);
  bool trivial = true;
  Scalar prev(1);
  for (int i = 1; i <= n; ++i) {
    Scalar h = f[i - 1] / prev;
    prev = f[i - 1];
    auto lf = latticeFactor(h);
    // Group by (base, parity of m); only balanced classes come from X's.
    std::map<std::pair<Scalar, int>, std::map<int, int>> classes;
    for (const auto& [key, e] : lf.mult) classes[{key.first, ((key.second % 2) + 2) % 2}][key.second] = e;
    Scalar lattice(1);
    for (const auto& [cls, ms] : classes) {
      int total = 0;
      for (const auto& [m, e] : ms) total += e;
      if (total != 0) continue;
      int s = 0;
      for (int m = ms.begin()->first; m <= ms.rbegin()->first; m += 2) {
        auto it = ms.find(m);
        if (it != ms.end()) s += it->second;
        if (s != 0) {
          w.exps[{i, cls.first, m + 1}] = s;
          lattice *= xFactor(cls.first * qPow(m + 1)).pow(s);
        }
      }
    }
    leftover[i - 1] = h / lattice;
    trivial = trivial && leftover[i - 1].isOne();
  }
  if (!trivial) {
    w.prefactor.assign(n, Scalar(1));
    Scalar acc(1);
    for (int i = 0; i < n; ++i) {
      acc *= leftover[i];
      w.prefactor[i] = acc;
    }
  }
  return w;
}

// ---------------------------------------------------------------- QCharacter

QCharacter QCharacter::unit(int M, int N) {
  QCharacter c;
  c.M = M;
  c.N = N;
  c.terms[EllWeight::unit(M, N)] = 1;
  return c;
}

void QCharacter::add(const EllWeight& w, long m) {
  long& v = terms[w];
  v += m;
  if (v == 0) terms.erase(w);
}

long QCharacter::coefficient(const EllWeight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

std::map<Weight, long> QCharacter::character() const {
  std::map<Weight, long> out;
  for (const auto& [w, m] : terms) {
    auto wt = w.weight();
    if (!wt) throw Error("term " + w.str() + " has no weight in P");
    out[*wt] += m;
  }
  return out;
}

std::string QCharacter::str() const {
  if (terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [w, m] : terms) parts.push_back(m == 1 ? w.str() : fmt::format("{} {}", m, w.str()));
  return fmt::format("{}", fmt::join(parts, " + "));
}

std::string QCharacter::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [w, m] : terms) {
    auto t = nlohmann::json::parse(w.json());
    t["multiplicity"] = m;
    j.push_back(t);
  }
  return j.dump();
}

QCharacter operator*(const QCharacter& x, const QCharacter& y) {
  QCharacter out;
  out.M = x.M;
  out.N = x.N;
  for (const auto& [a, m] : x.terms) {
    for (const auto& [b, k] : y.terms) out.add(a * b, m * k);
  }
  return out;
}

QCharacter operator+(const QCharacter& x, const QCharacter& y) {
  QCharacter out = x;
  for (const auto& [b, k] : y.terms) out.add(b, k);
  return out;
}

QCharacter qcharEval(const Weight& lambda, const Scalar& a) {
  int M = lambda.M, N = lambda.N;
  QCharacter out;
  out.M = M;
  out.N = N;
  auto [base, n0] = splitBase(a);
  for (const auto& f : enumerateTableaux(diagramOf(lambda))) {
    EllWeight w = EllWeight::unit(M, N);
    for (auto [i, j] : f.shape.cellList()) {
      int& e = w.exps[{f.at(i, j), base, n0 + 2 * (i - j) - 1}];
      e += 1;
    }
    out.add(w);
  }
  return out;
}

namespace {

// x >= y in the order given by Q_{>=0}: x / y = (q^{n_1}, ..., q^{n_{M+N-1}}, 1), n_j >= 0.
bool dominates(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  for (size_t j = 0; j < x.size(); ++j) {
    auto e = qExponent(x[j] / y[j]);
    if (!e) return false;
    if (j + 1 == x.size() ? *e != 0 : *e < 0) return false;
  }
  return true;
}

}  // namespace

QCharacter normalize(const QCharacter& chi) {
  if (chi.terms.empty()) throw Error("cannot normalize the zero q-character");
  std::vector<std::pair<EllWeight, std::vector<Scalar>>> ws;
  for (const auto& [w, m] : chi.terms) ws.emplace_back(w, w.weightTuple());
  std::optional<size_t> top;
  for (size_t i = 0; i < ws.size(); ++i) {
    bool all = true;
    for (size_t j = 0; j < ws.size() && all; ++j) all = dominates(ws[i].second, ws[j].second);
    if (all) {
      if (top && ws[*top].second != ws[i].second) throw Error("ambiguous maximal weight");
      if (top) throw Error("maximal weight space is not one-dimensional");
      top = i;
    }
  }
  if (!top) throw Error("no term of maximal weight");
  if (chi.coefficient(ws[*top].first) != 1) throw Error("maximal weight space is not one-dimensional");
  QCharacter out;
  out.M = chi.M;
  out.N = chi.N;
  for (const auto& [w, m] : chi.terms) out.add(w / ws[*top].first, m);
  return out;
}

QCharacter toAMonomials(const QCharacter& chi) {
  QCharacter out;
  out.M = chi.M;
  out.N = chi.N;
  int n = chi.M + chi.N;
  for (const auto& [w, m] : chi.terms) {
    if (w.kind == EllWeight::Kind::A) {
      out.add(w, m);
      continue;
    }
    if (!w.prefactor.empty()) throw Error("monomial " + w.str() + " is not in the A-sublattice");
    std::map<std::pair<Scalar, int>, std::vector<int>> cols;
    for (const auto& [k, e] : w.exps) {
      auto& v = cols[{k.base, k.n}];
      v.resize(n + 1, 0);
      v[k.i] += e;
    }
    EllWeight a = EllWeight::unit(chi.M, chi.N, EllWeight::Kind::A);
    for (const auto& [key, v] : cols) {
      int c = 0;
      for (int i = 1; i <= n; ++i) {
        c += v[i];
        if (i < n && c != 0) a.exps[{i, key.first, key.second}] = c;
      }
      if (c != 0) throw Error("monomial " + w.str() + " is not in the A-sublattice");
    }
    out.add(a, m);
  }
  return out;
}

QCharacter qcharDualEval(const Weight& lambda, const Scalar& a) {
  int M = lambda.M, N = lambda.N, n = M + N;
  QCharacter out;
  out.M = M;
  out.N = N;
  Scalar z = zSym();
  for (const auto& p : gtPatterns(lambda)) {
    std::vector<Scalar> f(n);
    for (int i = 1; i <= n; ++i) {
      auto [Mi, Ni] = chainRank(M, N, i);
      const Weight& li = p.levels[i - 1];
      Weight low = lowestWeight(Weight(Mi, Ni, std::vector<int>(li.c.begin(), li.c.begin() + i)));
      Scalar v(1);
      for (int s = 1; s <= Mi; ++s) v *= qPow(-low[s]) - z * a * qPow(2 * (s - 1) + low[s]);
      for (int l = 1; l <= Ni; ++l) {
        int y = low[M + l];
        v /= qPow(y) - z * a * qPow(2 * (M - l) - y);
      }
      f[i - 1] = v;
    }
    out.add(factorEll(M, N, f));
  }
  return out;
}

QCharacter krNormalized(int M, int N, int r, int k, const Scalar& a) {
  if (r < 1 || r >= M + N) throw Error("r outside I_0");
  if (r <= M) return normalize(qcharEval(Weight::kVarpi(M, N, r, k), a * qPow(2 * k)));
  Weight mu = ymInverse(Diagram{M, N, std::vector<int>(k, M + N - r)}, M, N);
  return normalize(qcharDualEval(mu, a));
}

LimitSeries limitQChar(int M, int N, int r, const Scalar& a, int kMax) {
  if (kMax < 1) throw Error("kmax must be positive");
  LimitSeries out;
  QCharacter prev;
  for (int k = 1; k <= kMax; ++k) {
    QCharacter cur = toAMonomials(krNormalized(M, N, r, k, a));
    out.termCounts.push_back(cur.size());
    for (const auto& [w, m] : cur.terms) {
      if (m != 1) out.stable = false;
    }
    for (const auto& [w, m] : prev.terms) {
      if (cur.coefficient(w) != m) out.stable = false;
    }
    prev = cur;
  }
  out.series = prev;
  return out;
}

ObstructionReport factorizationObstruction(int M, int N, int r, int k, const Scalar& a, const Scalar& b) {
  if (r < 1 || r > M) throw Error("the factorization scan needs 1 <= r <= M");
  Weight l = Weight::kVarpi(M, N, r, k);
  QCharacter c = normalize(qcharEval(l, a));
  QCharacter d = normalize(qcharEval(l, a * b * b));
  ObstructionReport rep;
  for (const auto& [p1, m1] : c.terms) {
    for (const auto& [p2, m2] : d.terms) {
      ++rep.triples;
      if (p2.isUnit()) continue;
      EllWeight p = p1 * p2;
      if (c.coefficient(p) == 1 && m1 == 1 && m2 == 1) {
        rep.pass = false;
        rep.witnesses.push_back(fmt::format("Phi_1 = {}; Phi_2 = {}", p1.str(), p2.str()));
      }
    }
  }
  return rep;
}

bool isFiniteDimCriterion(int M, int N, const std::vector<Scalar>& f) {
  if (static_cast<int>(f.size()) != M + N - 1) throw Error("f must be indexed by I_0");
  for (int i = 1; i < M + N; ++i) {
    if (i == M) continue;
    const Scalar& fi = f[i - 1];
    if (fi.isOne()) continue;
    auto lf = latticeFactor(fi);
    if (!lf.rest.isOne()) return false;
    int d = dOf(M, i);
    // mu_m = nu_{m+d} - nu_{m-d}: solve for the roots nu of P along each string.
    std::map<std::pair<Scalar, int>, std::map<int, int>> classes;
    for (const auto& [key, e] : lf.mult) classes[{key.first, ((key.second % 2) + 2) % 2}][key.second] = e;
    for (const auto& [cls, ms] : classes) {
      int s = 0;
      if (d > 0) {
        for (const auto& [m, e] : ms) {
          s += e;
          if (s < 0) return false;
        }
      } else {
        for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
          s += it->second;
          if (s < 0) return false;
        }
      }
      if (s != 0) return false;
    }
  }
  return true;
}

bool extendsToFullAlgebra(const std::vector<Scalar>& f) {
  for (const auto& fi : f) {
    try {
      if (fi.limit(var::z, LimitDir::toInfinity).isZero()) return false;
    } catch (const PoleError&) {
      return false;
    }
  }
  return true;
}

QCharacter ellDecompose(const Representation& rep) {
  QCharacter out;
  out.M = rep.M;
  out.N = rep.N;
  for (const auto& e : ellSpaces(rep)) out.add(factorEll(rep.M, rep.N, e.values), e.dim);
  return out;
}

}  // namespace skr
