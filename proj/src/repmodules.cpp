#include "skr/repmodules.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <optional>
#include <fmt/format.h>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

namespace skr {

namespace {

const Scalar& zSym() {
  static const Scalar z = Scalar::var(var::z);
  return z;
}

int sgn(int e) { return (e & 1) ? -1 : 1; }

GradedMatrix mapMatrix(const GradedMatrix& m, const std::function<Scalar(const Scalar&)>& f) { return m.map(f); }

Scalar atZero(const Scalar& x) { return x.substitute(var::z, Scalar()); }
Scalar atInfinity(const Scalar& x) { return x.limit(var::z, LimitDir::toInfinity); }

// Coordinates of v (in the span of sub) in the reduced echelon basis.
Vec coordinates(const SubspaceBasis& sub, const Vec& v) {
  Vec c;
  for (int p : sub.pivots()) c.push_back(v[p]);
  return c;
}

Vec unitVec(int dim, int i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

// ---------------------------------------------------------------- basics

Representation Representation::mapEntries(const std::function<Scalar(const Scalar&)>& f) const {
  Representation r = *this;
  for (auto& m : r.s) m = mapMatrix(m, f);
  for (auto& m : r.t) m = mapMatrix(m, f);
  return r;
}

Representation Representation::substitute(int v, const Scalar& value) const {
  return mapEntries([&](const Scalar& x) { return x.substitute(v, value); });
}

std::string Representation::json() const {
  nlohmann::json j;
  j["M"] = M;
  j["N"] = N;
  j["dim"] = dim();
  j["finite"] = finite;
  j["parities"] = space->parities();
  if (space->hasWeights()) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : space->weights()) ws.push_back(w.c);
    j["weights"] = ws;
  }
  auto dump = [&](const std::vector<GradedMatrix>& ms, const char* name) {
    nlohmann::json g = nlohmann::json::object();
    for (int i = 1; i <= n(); ++i) {
      for (int k = 1; k <= n(); ++k) {
        const GradedMatrix& m = ms[(i - 1) * n() + (k - 1)];
        if (m.isZero()) continue;
        g[fmt::format("{},{}", i, k)] = nlohmann::json::parse(m.json());
      }
    }
    j[name] = g;
  };
  dump(s, "s");
  if (hasT) dump(t, "t");
  return j.dump();
}

Representation Representation::fromJson(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int M = j.at("M"), N = j.at("N");
  std::vector<int> ps = j.at("parities");
  std::vector<Weight> ws;
  if (j.contains("weights")) {
    for (const auto& w : j["weights"]) ws.emplace_back(M, N, w.get<std::vector<int>>());
  }
  auto V = makeSpace(SuperSpace(ps, ws));
  Representation r = blankRep(M, N, V, j.value("finite", false), j.contains("t"));
  auto load = [&](const nlohmann::json& g, std::vector<GradedMatrix>& ms) {
    for (const auto& [key, m] : g.items()) {
      int i = 0, k = 0;
      if (std::sscanf(key.c_str(), "%d,%d", &i, &k) != 2 || i < 1 || k < 1 || i > M + N || k > M + N) {
        throw Error("bad generator key " + key);
      }
      GradedMatrix& x = ms[(i - 1) * (M + N) + (k - 1)];
      for (const auto& e : m.at("entries")) x.set(e.at(0), e.at(1), Scalar::parse(e.at(2).get<std::string>()));
    }
  };
  if (j.contains("s")) load(j["s"], r.s);
  if (j.contains("t")) load(j["t"], r.t);
  return r;
}

Representation blankRep(int M, int N, SpacePtr V, bool finite, bool hasT) {
  Representation r;
  r.M = M;
  r.N = N;
  r.space = V;
  r.finite = finite;
  r.hasT = hasT;
  r.s.assign((M + N) * (M + N), GradedMatrix(V));
  r.t.assign((M + N) * (M + N), GradedMatrix(V));
  return r;
}

int dimensionCap() {
  if (const char* e = std::getenv("SKR_DIM_CAP")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 256;
}

Representation naturalRepFinite(int M, int N) {
  auto V = makeSpace(SuperSpace::natural(M, N));
  Representation r = blankRep(M, N, V, true);
  int n = M + N;
  for (int i = 1; i <= n; ++i) {
    Scalar q = qi(M, i);
    GradedMatrix si = GradedMatrix::identity(V), ti = GradedMatrix::identity(V);
    si.set(i - 1, i - 1, q);
    ti.set(i - 1, i - 1, q.inv());
    r.S(i, i) = si;
    r.T(i, i) = ti;
    for (int j = i + 1; j <= n; ++j) {
      r.S(i, j) = GradedMatrix::unit(V, i - 1, j - 1, q - q.inv());
      r.T(j, i) = GradedMatrix::unit(V, j - 1, i - 1, q.inv() - q);
    }
  }
  return r;
}

Representation trivialRep(int M, int N, bool finite) {
  auto V = makeSpace(SuperSpace({0}, {Weight(M, N)}));
  Representation r = blankRep(M, N, V, finite);
  for (int i = 1; i <= M + N; ++i) {
    r.S(i, i) = GradedMatrix::identity(V);
    r.T(i, i) = GradedMatrix::identity(V);
  }
  return r;
}

Representation evaluate(const Representation& fin, const Scalar& a) {
  if (!fin.finite) throw Error("evaluate expects a module of the finite quantum superalgebra");
  Representation r = blankRep(fin.M, fin.N, fin.space, false);
  Scalar za = zSym() * a, inv = za.inv();
  for (size_t k = 0; k < fin.s.size(); ++k) {
    r.s[k] = fin.s[k] - za * fin.t[k];
    r.t[k] = fin.t[k] - inv * fin.s[k];
  }
  return r;
}

Representation twistBySeries(const Representation& rep, const Scalar& g, const Scalar& f) {
  Representation r = rep;
  for (auto& m : r.s) m = g * m;
  for (auto& m : r.t) m = f * m;
  return r;
}

Representation tensor(const Representation& V, const Representation& W) {
  if (V.M != W.M || V.N != W.N) throw Error("tensor factors have different (M, N)");
  int M = V.M, n = V.n();
  auto VW = makeSpace(tensor(*V.space, *W.space));
  Representation r = blankRep(M, V.N, VW, V.finite && W.finite, V.hasT && W.hasT);
  auto product = [&](const std::vector<GradedMatrix>& a, const std::vector<GradedMatrix>& b, int i, int j) {
    GradedMatrix out(VW);
    for (int k = 1; k <= n; ++k) {
      const GradedMatrix& x = a[(i - 1) * n + (k - 1)];
      const GradedMatrix& y = b[(k - 1) * n + (j - 1)];
      if (x.isZero() || y.isZero()) continue;
      int e = (parityOf(M, i) + parityOf(M, k)) * (parityOf(M, k) + parityOf(M, j));
      GradedMatrix g = gradedTensor(x, y);
      out += sgn(e) < 0 ? -g : g;
    }
    return out;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      r.S(i, j) = product(V.s, W.s, i, j);
      if (r.hasT) r.T(i, j) = product(V.t, W.t, i, j);
    }
  }
  return r;
}

Vec tensorVector(const Vec& v, const Vec& w) {
  Vec out;
  out.reserve(v.size() * w.size());
  for (const auto& x : v) {
    for (const auto& y : w) out.push_back(x * y);
  }
  return out;
}

// ---------------------------------------------------------------- RTT

RttReport checkRTT(const Representation& rep0) {
  const Representation rep = rep0.finite ? evaluate(rep0, Scalar(1)) : rep0;
  int M = rep.M, n = rep.n();
  auto V = rep.space;
  RttReport report;
  auto fail = [&](const std::string& rel, std::array<int, 4> idx, const std::string& res) {
    report.pass = false;
    report.relation = rel;
    report.index = idx;
    report.residual = res;
  };
  auto firstEntry = [](const GradedMatrix& d) {
    for (int r = 0; r < d.rows(); ++r) {
      if (!d.row(r).empty()) return fmt::format("({}, {}): {}", r, d.row(r).front().first, d.row(r).front().second.str());
    }
    return std::string();
  };

  // Grading: parity |i|+|j| and weight eps_i - eps_j.
  auto gradingOk = [&](const GradedMatrix& m, int i, int j) {
    for (int r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) {
        if ((V->parity(r) ^ V->parity(c)) != ((parityOf(M, i) + parityOf(M, j)) & 1)) return false;
        if (V->hasWeights() && V->weight(r) - V->weight(c) != Weight::eps(M, rep.N, i) - Weight::eps(M, rep.N, j)) {
          return false;
        }
      }
    }
    return true;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!gradingOk(rep.S(i, j), i, j) || (rep.hasT && !gradingOk(rep.T(i, j), i, j))) {
        fail("grading", {i, j, 0, 0}, "entry of the wrong parity or weight");
        return report;
      }
    }
  }

  // Zero and invertibility conditions on constant terms.
  std::vector<GradedMatrix> s0(n * n), t0(n * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      s0[(i - 1) * n + (j - 1)] = rep.S(i, j).map(atZero);
      if (rep.hasT) t0[(i - 1) * n + (j - 1)] = rep.T(i, j).map(atInfinity);
    }
  }
  GradedMatrix id = GradedMatrix::identity(V);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!s0[(j - 1) * n + (i - 1)].isZero()) {
        fail("zero", {j, i, 0, 0}, "s_ji^(0) != 0");
        return report;
      }
      if (rep.hasT && !t0[(i - 1) * n + (j - 1)].isZero()) {
        fail("zero", {i, j, 0, 0}, "t_ij^(0) != 0");
        return report;
      }
    }
    const GradedMatrix& sii = s0[(i - 1) * n + (i - 1)];
    if (rep.hasT) {
      const GradedMatrix& tii = t0[(i - 1) * n + (i - 1)];
      if (sii * tii != id || tii * sii != id) {
        fail("invertible", {i, i, 0, 0}, "s_ii^(0) t_ii^(0) != 1");
        return report;
      }
    } else if (rank(sii) != V->dim()) {
      fail("invertible", {i, i, 0, 0}, "s_ii^(0) is singular");
      return report;
    }
  }
  // Cartan relations.
  for (int i = 1; i <= n; ++i) {
    const GradedMatrix& sii = s0[(i - 1) * n + (i - 1)];
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        Scalar c = qPow(dOf(M, i) * ((i == j) - (i == k)));
        auto check = [&](const GradedMatrix& x) { return sii * x == c * (x * sii); };
        if (!check(rep.S(j, k)) || (rep.hasT && !check(rep.T(j, k)))) {
          fail("cartan", {i, j, k, 0}, "weight grading relation");
          return report;
        }
      }
    }
  }

  RMatrix R = perkSchultz(M, rep.N);
  auto toW = [](const Scalar& x) { return x.substitute(var::z, Scalar::var(var::w)); };
  std::vector<GradedMatrix> Sw(n * n), Tw(n * n);
  for (int k = 0; k < n * n; ++k) {
    Sw[k] = rep.s[k].map(toW);
    if (rep.hasT) Tw[k] = rep.t[k].map(toW);
  }
  struct Rel {
    const char* name;
    const std::vector<GradedMatrix>* X;  // in z
    const std::vector<GradedMatrix>* Y;  // in w
  };
  std::vector<Rel> rels = {{"SS", &rep.s, &Sw}};
  if (rep.hasT) {
    rels.push_back({"TT", &rep.t, &Tw});
    rels.push_back({"TS", &rep.t, &Sw});
  }
  auto p = [&](int a) { return parityOf(M, a); };
  for (const auto& rel : rels) {
    const auto& X = *rel.X;
    const auto& Y = *rel.Y;
    auto x = [&](int a, int b) -> const GradedMatrix& { return X[(a - 1) * n + (b - 1)]; };
    auto y = [&](int a, int b) -> const GradedMatrix& { return Y[(a - 1) * n + (b - 1)]; };
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            GradedMatrix lhs(V), rhs(V);
            for (int a = 1; a <= n; ++a) {
              for (int b = 1; b <= n; ++b) {
                Scalar c = R.get(k, l, a, b);
                if (c.isZero() || x(a, i).isZero() || y(b, j).isZero()) continue;
                lhs += (sgn(p(a) * (p(b) + p(j))) * c) * (x(a, i) * y(b, j));
              }
            }
            for (int c = 1; c <= n; ++c) {
              for (int d = 1; d <= n; ++d) {
                Scalar co = R.get(c, d, i, j);
                if (co.isZero() || y(l, d).isZero() || x(k, c).isZero()) continue;
                rhs += (sgn(p(c) * (p(d) + p(l))) * co) * (y(l, d) * x(k, c));
              }
            }
            if (lhs != rhs) {
              fail(rel.name, {i, j, k, l}, firstEntry(lhs - rhs));
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- submodules

std::vector<GradedMatrix> coefficientOperators(const GradedMatrix& series) {
  if (series.isZero()) return {};
  Scalar L(1);
  for (int r = 0; r < series.rows(); ++r) {
    for (const auto& [c, v] : series.row(r)) L = lcmPoly(L, v.denominatorPartIn(var::z));
  }
  std::map<int, GradedMatrix> coeffs;
  for (int r = 0; r < series.rows(); ++r) {
    for (const auto& [c, v] : series.row(r)) {
      for (const auto& [deg, x] : (v * L).laurentCoefficients(var::z)) {
        auto it = coeffs.find(deg);
        if (it == coeffs.end()) it = coeffs.emplace(deg, GradedMatrix(series.target(), series.source())).first;
        it->second.set(r, c, x);
      }
    }
  }
  std::vector<GradedMatrix> out;
  for (auto& [d, m] : coeffs) out.push_back(std::move(m));
  return out;
}

std::vector<GradedMatrix> generatorOperators(const Representation& rep, int level) {
  if (level < 0) level = rep.n();
  std::vector<GradedMatrix> out;
  for (int i = 1; i <= level; ++i) {
    for (int j = 1; j <= level; ++j) {
      for (auto& m : coefficientOperators(rep.S(i, j))) out.push_back(std::move(m));
      if (rep.hasT) {
        for (auto& m : coefficientOperators(rep.T(i, j))) out.push_back(std::move(m));
      }
    }
  }
  return out;
}

namespace {

std::vector<GradedMatrix> raisingOperators(const Representation& rep, int level) {
  std::vector<GradedMatrix> out;
  for (int i = 1; i <= level; ++i) {
    for (int j = i + 1; j <= level; ++j) {
      for (auto& m : coefficientOperators(rep.S(i, j))) out.push_back(std::move(m));
      if (rep.hasT) {
        for (auto& m : coefficientOperators(rep.T(i, j))) out.push_back(std::move(m));
      }
    }
  }
  return out;
}

// Common kernel of ops restricted to the columns idx, as full-length vectors.
std::vector<Vec> commonKernel(const std::vector<GradedMatrix>& ops, const std::vector<int>& idx, int dim) {
  std::vector<SparseRow> rows;
  std::map<int, int> local;
  for (size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<int>(k);
  for (const auto& m : ops) {
    for (int r = 0; r < m.rows(); ++r) {
      SparseRow row;
      for (const auto& [c, v] : m.row(r)) {
        auto it = local.find(c);
        if (it != local.end()) row.emplace_back(it->second, v);
      }
      if (!row.empty()) {
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
    }
  }
  int m = static_cast<int>(idx.size());
  Echelon e = rowReduce(std::move(rows), m);
  std::vector<bool> isPivot(m, false);
  for (int p : e.pivots) isPivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m; ++f) {
    if (isPivot[f]) continue;
    Vec v(dim);
    v[idx[f]] = Scalar(1);
    for (size_t i = 0; i < e.rows.size(); ++i) {
      for (const auto& [c, x] : e.rows[i]) {
        if (c == f) v[idx[e.pivots[i]]] = -x;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

// lambda with A v = lambda v, if v is an eigenvector.
std::optional<Scalar> eigenvalueOf(const GradedMatrix& A, const Vec& v) {
  Vec w = A.apply(v);
  int p = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].isZero()) {
      p = static_cast<int>(i);
      break;
    }
  }
  if (p < 0) return std::nullopt;
  Scalar lam = w[p] / v[p];
  for (size_t i = 0; i < v.size(); ++i) {
    if (w[i] != lam * v[i]) return std::nullopt;
  }
  return lam;
}

}  // namespace

std::map<Weight, std::vector<int>> weightSpaces(const Representation& rep) {
  std::map<Weight, std::vector<int>> out;
  for (int i = 0; i < rep.dim(); ++i) {
    out[rep.space->hasWeights() ? rep.space->weight(i) : Weight(rep.M, rep.N)].push_back(i);
  }
  return out;
}

std::vector<HighestVector> highestLWeightVectors(const Representation& rep) {
  auto ops = raisingOperators(rep, rep.n());
  std::vector<HighestVector> out;
  for (const auto& [w, idx] : weightSpaces(rep)) {
    for (const auto& v : commonKernel(ops, idx, rep.dim())) {
      HighestVector h{v, w, {}, {}};
      bool ok = true;
      for (int i = 1; i <= rep.n() && ok; ++i) {
        auto s = eigenvalueOf(rep.S(i, i), v);
        ok = s.has_value();
        if (ok) h.sDiag.push_back(*s);
        if (ok && rep.hasT) {
          auto t = eigenvalueOf(rep.T(i, i), v);
          ok = t.has_value();
          if (ok) h.tDiag.push_back(*t);
        }
      }
      if (ok) out.push_back(std::move(h));
    }
  }
  return out;
}

SubspaceBasis closure(const Representation& rep, const std::vector<Vec>& seeds, int level) {
  auto ops = generatorOperators(rep, level);
  SubspaceBasis sub(rep.dim());
  std::deque<Vec> queue;
  int cap = dimensionCap();
  for (const auto& v : seeds) {
    if (sub.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : ops) {
      Vec w = m.apply(v);
      if (isZeroVec(w)) continue;
      if (sub.insert(w)) {
        if (sub.dim() > cap) throw CapExceeded(fmt::format("submodule closure exceeds dimension cap {}", cap));
        queue.push_back(std::move(w));
      }
    }
  }
  return sub;
}

Representation restrictToSubspace(const Representation& rep, const SubspaceBasis& sub) {
  auto basis = sub.basis();
  auto piv = sub.pivots();
  std::vector<int> par;
  std::vector<Weight> wts;
  for (int p : piv) {
    par.push_back(rep.space->parity(p));
    if (rep.space->hasWeights()) wts.push_back(rep.space->weight(p));
  }
  auto U = makeSpace(SuperSpace(par, wts));
  Representation r = blankRep(rep.M, rep.N, U, rep.finite, rep.hasT);
  auto restrict = [&](const GradedMatrix& G) {
    GradedMatrix out(U);
    if (G.isZero()) return out;
    for (size_t k = 0; k < basis.size(); ++k) {
      Vec img = G.apply(basis[k]);
      Vec c = coordinates(sub, img);
      for (size_t m = 0; m < c.size(); ++m) {
        if (!c[m].isZero()) out.set(static_cast<int>(m), static_cast<int>(k), c[m]);
      }
    }
    return out;
  };
  for (size_t k = 0; k < rep.s.size(); ++k) {
    r.s[k] = restrict(rep.s[k]);
    if (rep.hasT) r.t[k] = restrict(rep.t[k]);
  }
  return r;
}

Representation generatedSubmodule(const Representation& rep, const Vec& seed) {
  if (isZeroVec(seed)) throw Error("seed vector is zero");
  return restrictToSubspace(rep, closure(rep, {seed}));
}

bool cyclicityCheck(const Representation& rep, const Vec& seed) {
  if (isZeroVec(seed)) throw Error("seed vector is zero");
  return closure(rep, {seed}).dim() == rep.dim();
}

Representation simpleFinite(const Weight& lambda) {
  static std::map<std::vector<int>, Representation> cache;
  int M = lambda.M, N = lambda.N;
  if (!isDominant(lambda)) throw Error("weight " + lambda.str() + " is not dominant");
  std::vector<int> key = lambda.c;
  key.push_back(M);
  key.push_back(N);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (lambda.height() == 0) return cache[key] = trivialRep(M, N, true);
  // Remove a box so that the remaining weight stays dominant: L(lambda) sits in L(lambda') (x) V.
  Representation base;
  bool found = false;
  for (int i = M + N; i >= 1 && !found; --i) {
    if (lambda[i] == 0) continue;
    Weight smaller = lambda;
    smaller[i] -= 1;
    if (isDominant(smaller)) {
      base = simpleFinite(smaller);
      found = true;
    }
  }
  if (!found) throw Error("no removable box for " + lambda.str());
  Representation big = tensor(base, naturalRepFinite(M, N));
  std::vector<GradedMatrix> raising;
  for (int i = 1; i <= M + N; ++i) {
    for (int j = i + 1; j <= M + N; ++j) raising.push_back(big.S(i, j));
  }
  auto spaces = weightSpaces(big);
  auto it = spaces.find(lambda);
  if (it == spaces.end()) throw Error("weight space is empty");
  auto ker = commonKernel(raising, it->second, big.dim());
  if (ker.empty()) throw Error("no highest weight vector of weight " + lambda.str());
  Representation L = generatedSubmodule(big, ker.front());
  if (L.dim() != character(lambda).dim()) {
    throw Error(fmt::format("generated module has dimension {}, character says {}", L.dim(), character(lambda).dim()));
  }
  return cache[key] = L;
}

std::vector<std::pair<Weight, Vec>> finiteHighestVectors(const Representation& fin) {
  if (!fin.finite) throw Error("finite module expected");
  std::vector<GradedMatrix> raising;
  for (int i = 1; i <= fin.n(); ++i) {
    for (int j = i + 1; j <= fin.n(); ++j) raising.push_back(fin.S(i, j));
  }
  std::vector<std::pair<Weight, Vec>> out;
  for (const auto& [w, idx] : weightSpaces(fin)) {
    for (auto& v : commonKernel(raising, idx, fin.dim())) out.emplace_back(w, std::move(v));
  }
  return out;
}

std::vector<std::pair<Weight, Representation>> simpleConstituents(const Representation& fin) {
  std::vector<std::pair<Weight, Representation>> out;
  for (const auto& [w, v] : finiteHighestVectors(fin)) out.emplace_back(w, generatedSubmodule(fin, v));
  return out;
}

Representation evaluationModule(const Weight& lambda, const Scalar& a) { return evaluate(simpleFinite(lambda), a); }

Representation krModule(int M, int N, int r, int k, const Scalar& a) {
  if (r < 1 || r >= M + N) throw Error("r outside I_0");
  if (r <= M) return evaluationModule(Weight::kVarpi(M, N, r, k), a);
  // L(k varpi_r) = L(mu)^* with Y^mu the k x (M+N-r) rectangle.
  Weight mu = ymInverse(Diagram{M, N, std::vector<int>(k, M + N - r)}, M, N);
  return evaluate(dual(simpleFinite(mu)), a);
}

Vec topVector(const Representation& rep) {
  auto hv = highestLWeightVectors(rep);
  if (hv.size() != 1) throw Error(fmt::format("expected one highest l-weight vector, found {}", hv.size()));
  return hv.front().v;
}

namespace {

TensorChain chainOf(const std::vector<Representation>& factors) {
  TensorChain c{factors.front(), topVector(factors.front())};
  for (size_t i = 1; i < factors.size(); ++i) {
    c.top = tensorVector(c.top, topVector(factors[i]));
    c.rep = tensor(c.rep, factors[i]);
  }
  return c;
}

}  // namespace

TensorChain fundamentalChain(int M, int N, int r, int k, const Scalar& a) {
  if (k < 1) throw Error("k must be positive");
  std::vector<Representation> fs;
  for (int j = 1; j <= k; ++j) fs.push_back(krModule(M, N, r, 1, a * qPow(-2 * j * dOf(M, r))));
  return chainOf(fs);
}

TensorChain krChain(int M, int N, int r, const std::array<int, 3>& l, const Scalar& a) {
  if (!(0 < l[0] && l[0] < l[1] && l[1] < l[2])) throw Error("need 0 < l1 < l2 < l3");
  std::vector<Representation> fs = {krModule(M, N, r, l[0], a), krModule(M, N, r, l[1] - l[0], a * qPow(-2 * l[0])),
                                    krModule(M, N, r, l[2] - l[1], a * qPow(-2 * l[1]))};
  if (r > M) std::reverse(fs.begin(), fs.end());
  return chainOf(fs);
}

// ---------------------------------------------------------------- duals

namespace {

// Block matrix B_ij = rho(x_ij) Pi^{|i|+|j|} on the even space of dimension n * dim.
GradedMatrix blockMatrix(const Representation& rep, const std::vector<GradedMatrix>& x) {
  int n = rep.n(), d = rep.dim(), M = rep.M;
  auto big = makeSpace(SuperSpace::even(n * d));
  GradedMatrix B(big);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GradedMatrix& m = x[(i - 1) * n + (j - 1)];
      bool twist = (parityOf(M, i) + parityOf(M, j)) & 1;
      for (int r = 0; r < d; ++r) {
        for (const auto& [c, v] : m.row(r)) {
          bool flip = twist && rep.space->parity(c) == 1;
          B.set((i - 1) * d + r, (j - 1) * d + c, flip ? -v : v);
        }
      }
    }
  }
  return B;
}

// rho(S(x_ij)) from the inverse block matrix.
std::vector<GradedMatrix> antipodeImages(const Representation& rep, const std::vector<GradedMatrix>& x) {
  int n = rep.n(), d = rep.dim(), M = rep.M;
  GradedMatrix Binv = inverse(blockMatrix(rep, x));
  std::vector<GradedMatrix> out(n * n, GradedMatrix(rep.space));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool twist = (parityOf(M, i) + parityOf(M, j)) & 1;
      GradedMatrix& m = out[(i - 1) * n + (j - 1)];
      for (int r = 0; r < d; ++r) {
        for (const auto& [c, v] : Binv.row((i - 1) * d + r)) {
          if (c < (j - 1) * d || c >= j * d) continue;
          int cc = c - (j - 1) * d;
          bool flip = twist && rep.space->parity(cc) == 1;
          m.set(r, cc, flip ? -v : v);
        }
      }
    }
  }
  return out;
}

}  // namespace

Representation dual(const Representation& rep) {
  int n = rep.n(), M = rep.M;
  std::vector<Weight> w;
  if (rep.space->hasWeights()) {
    for (const auto& x : rep.space->weights()) w.push_back(-x);
  }
  auto Vd = makeSpace(SuperSpace(rep.space->parities(), w));
  Representation r = blankRep(M, rep.N, Vd, rep.finite, rep.hasT);
  auto transposeDual = [&](const GradedMatrix& A, int par) {
    // rho*(y)_{kl} = (-1)^{|y||l|} rho(S(y))_{lk}
    GradedMatrix out(Vd);
    for (int l = 0; l < A.rows(); ++l) {
      for (const auto& [k, v] : A.row(l)) {
        bool flip = par == 1 && rep.space->parity(l) == 1;
        out.set(k, l, flip ? -v : v);
      }
    }
    return out;
  };
  auto sImg = antipodeImages(rep, rep.s);
  std::vector<GradedMatrix> tImg;
  if (rep.hasT) tImg = antipodeImages(rep, rep.t);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int par = (parityOf(M, i) + parityOf(M, j)) & 1;
      r.S(i, j) = transposeDual(sImg[(i - 1) * n + (j - 1)], par);
      if (rep.hasT) r.T(i, j) = transposeDual(tImg[(i - 1) * n + (j - 1)], par);
    }
  }
  return r;
}

Representation twistedDual(const Representation& rep) {
  if (rep.finite || !rep.hasT) throw Error("twisted dual needs a module of the quantum affine superalgebra");
  Representation D = dual(rep);
  int n = rep.n(), M = rep.M;
  // Psi reverses weights, so the labels of V^vee are those of V.
  Representation r = blankRep(M, rep.N, rep.space, false);
  Scalar zinv = zSym().inv();
  auto flipZ = [&](const Scalar& x) { return x.substitute(var::z, zinv); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int eps = sgn(parityOf(M, j) * (parityOf(M, j) + parityOf(M, i)));
      r.S(i, j) = Scalar(eps) * D.T(j, i).map(flipZ);
      r.T(i, j) = Scalar(eps) * D.S(j, i).map(flipZ);
    }
  }
  return r;
}

// ---------------------------------------------------------------- Gauss decomposition

std::vector<GradedMatrix> gaussDecompose(const Representation& rep) {
  int n = rep.n(), d = rep.dim(), M = rep.M;
  // Work with the Pi-twisted blocks B_ij = s_ij(z) Pi^{|i|+|j|}.
  std::vector<GradedMatrix> B(n * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GradedMatrix& m = rep.S(i, j);
      bool twist = (parityOf(M, i) + parityOf(M, j)) & 1;
      GradedMatrix b(rep.space);
      for (int r = 0; r < d; ++r) {
        for (const auto& [c, v] : m.row(r)) b.set(r, c, twist && rep.space->parity(c) == 1 ? -v : v);
      }
      B[(i - 1) * n + (j - 1)] = b;
    }
  }
  auto at = [&](int i, int j) -> GradedMatrix& { return B[(i - 1) * n + (j - 1)]; };
  std::vector<GradedMatrix> K;
  for (int p = 1; p <= n; ++p) {
    K.push_back(at(p, p));
    if (p == n) break;
    GradedMatrix inv;
    try {
      inv = inverse(at(p, p));
    } catch (const Error&) {
      throw Error(fmt::format("Gauss decomposition: block {} is singular", p));
    }
    for (int a = p + 1; a <= n; ++a) {
      if (at(a, p).isZero()) continue;
      GradedMatrix left = at(a, p) * inv;
      for (int b = p + 1; b <= n; ++b) {
        if (at(p, b).isZero()) continue;
        at(a, b) = at(a, b) - left * at(p, b);
      }
    }
  }
  return K;
}

std::vector<GradedMatrix> berezinians(const Representation& rep) {
  auto K = gaussDecompose(rep);
  auto th = thetas(rep.M, rep.N);
  std::vector<GradedMatrix> C;
  GradedMatrix acc = GradedMatrix::identity(rep.space);
  for (int j = 1; j <= rep.n(); ++j) {
    Scalar arg = zSym() * th[j].inv();
    GradedMatrix k = K[j - 1].map([&](const Scalar& x) { return x.substitute(var::z, arg); });
    if (dOf(rep.M, j) < 0) k = inverse(k);
    acc = acc * k;
    C.push_back(acc);
  }
  return C;
}

GradedMatrix berezinian(const Representation& rep, int i) { return berezinians(rep).at(i - 1); }

CentralityReport checkCentrality(const Representation& rep, int k) {
  CentralityReport out;
  auto C = berezinians(rep);
  const GradedMatrix& Ck = C.at(k - 1);
  auto toW = [](const Scalar& x) { return x.substitute(var::z, Scalar::var(var::w)); };
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      GradedMatrix sw = rep.S(i, j).map(toW);
      if (Ck * sw != sw * Ck) {
        out.pass = false;
        out.failure = fmt::format("C_{}(z) does not commute with s_{}{}(w)", k, i, j);
        return out;
      }
      if (rep.hasT) {
        GradedMatrix tw = rep.T(i, j).map(toW);
        if (Ck * tw != tw * Ck) {
          out.pass = false;
          out.failure = fmt::format("C_{}(z) does not commute with t_{}{}(w)", k, i, j);
          return out;
        }
      }
    }
  }
  GradedMatrix c0 = GradedMatrix::identity(rep.space);
  for (int j = 1; j <= k; ++j) {
    GradedMatrix sjj = rep.S(j, j).map(atZero);
    c0 = c0 * (dOf(rep.M, j) < 0 ? inverse(sjj) : sjj);
  }
  if (Ck.map(atZero) != c0) {
    out.pass = false;
    out.failure = fmt::format("C_{},0 differs from the product of s_jj^(0)", k);
  }
  return out;
}

// ---------------------------------------------------------------- restriction

Representation restrictToSubalgebra(const Representation& rep, int k) {
  auto [a, b] = chainRank(rep.M, rep.N, k);
  std::vector<Weight> w;
  if (rep.space->hasWeights()) {
    for (const auto& x : rep.space->weights()) w.push_back(Weight(a, b, std::vector<int>(x.c.begin(), x.c.begin() + k)));
  }
  auto U = makeSpace(SuperSpace(rep.space->parities(), w));
  Representation r = blankRep(a, b, U, rep.finite, rep.hasT);
  auto retarget = [&](const GradedMatrix& m) {
    GradedMatrix out(U);
    for (int i = 0; i < m.rows(); ++i) out.setRow(i, m.row(i));
    return out;
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      r.S(i, j) = retarget(rep.S(i, j));
      if (rep.hasT) r.T(i, j) = retarget(rep.T(i, j));
    }
  }
  return r;
}

RestrictionReport decomposeRestriction(const Representation& rep0, int k) {
  Representation rep = restrictToSubalgebra(rep0, k);
  int d = rep.dim();
  RestrictionReport out;
  for (const auto& [w, idx] : weightSpaces(rep)) out.exact = out.exact && idx.size() == 1;
  // Closure of each basis vector, recorded as the set of basis indices it touches.
  std::vector<std::set<int>> reach(d);
  std::vector<int> closDim(d);
  for (int i = 0; i < d; ++i) {
    SubspaceBasis sub = closure(rep, {unitVec(d, i)});
    closDim[i] = sub.dim();
    for (const auto& v : sub.basis()) {
      for (int c = 0; c < d; ++c) {
        if (!v[c].isZero()) reach[i].insert(c);
      }
    }
  }
  // Connected components of the reachability graph.
  std::vector<int> comp(d, -1);
  int nc = 0;
  for (int i = 0; i < d; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < d; ++v) {
        bool linked = reach[u].count(v) || reach[v].count(u);
        if (linked && comp[v] < 0) {
          comp[v] = nc;
          q.push_back(v);
        }
      }
    }
    ++nc;
  }
  out.summands.assign(nc, {});
  for (int i = 0; i < d; ++i) out.summands[comp[i]].push_back(i);
  std::vector<std::map<Weight, int>> chars;
  for (const auto& s : out.summands) {
    bool simple = true;
    for (int i : s) simple = simple && closDim[i] == static_cast<int>(s.size());
    out.summandSimple.push_back(simple);
    out.semisimple = out.semisimple && simple;
    std::map<Weight, int> ch;
    for (int i : s) ch[rep.space->hasWeights() ? rep.space->weight(i) : Weight(rep.M, rep.N)] += 1;
    chars.push_back(ch);
  }
  for (size_t a = 0; a < chars.size(); ++a) {
    for (size_t b = a + 1; b < chars.size(); ++b) out.multiplicityFree = out.multiplicityFree && chars[a] != chars[b];
  }
  return out;
}

// ---------------------------------------------------------------- l-weight spaces

namespace {

using Dense = std::vector<Vec>;  // row-major square matrix

GradedMatrix denseToMatrix(const Dense& A) {
  auto V = makeSpace(SuperSpace::even(static_cast<int>(A.size())));
  GradedMatrix m(V);
  for (size_t r = 0; r < A.size(); ++r) {
    for (size_t c = 0; c < A.size(); ++c) {
      if (!A[r][c].isZero()) m.set(static_cast<int>(r), static_cast<int>(c), A[r][c]);
    }
  }
  return m;
}

// Matrix of C on the invariant subspace sub, in its echelon coordinates.
Dense restrictedMatrix(const GradedMatrix& C, const SubspaceBasis& sub) {
  auto basis = sub.basis();
  size_t m = basis.size();
  Dense A(m, Vec(m));
  for (size_t k = 0; k < m; ++k) {
    Vec c = coordinates(sub, C.apply(basis[k]));
    for (size_t r = 0; r < m; ++r) A[r][k] = c[r];
  }
  return A;
}

// Eigenvalues readable without factoring: 1x1, scalar, or triangular up to a permutation.
std::vector<Scalar> obviousEigenvalues(const Dense& A) {
  size_t m = A.size();
  std::vector<Scalar> out;
  if (m == 0) return out;
  bool scalar = true;
  for (size_t r = 0; r < m && scalar; ++r) {
    for (size_t c = 0; c < m && scalar; ++c) {
      if (r != c && !A[r][c].isZero()) scalar = false;
      if (r == c && A[r][c] != A[0][0]) scalar = false;
    }
  }
  if (scalar) return {A[0][0]};
  // Acyclic off-diagonal graph means triangular after a permutation.
  std::vector<int> indeg(m, 0);
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < m; ++c) {
      if (r != c && !A[r][c].isZero()) ++indeg[r];
    }
  }
  std::vector<bool> done(m, false);
  std::deque<size_t> q;
  for (size_t r = 0; r < m; ++r) {
    if (indeg[r] == 0) q.push_back(r);
  }
  size_t seen = 0;
  while (!q.empty()) {
    size_t c = q.front();
    q.pop_front();
    done[c] = true;
    ++seen;
    for (size_t r = 0; r < m; ++r) {
      if (r != c && !A[r][c].isZero() && --indeg[r] == 0) q.push_back(r);
    }
  }
  if (seen == m) {
    for (size_t r = 0; r < m; ++r) out.push_back(A[r][r]);
  }
  return out;
}

// Dimension of ker (A - lam)^m, and whether it equals ker (A - lam).
std::pair<SubspaceBasis, bool> generalizedKernel(const Dense& A, const Scalar& lam, const SubspaceBasis& within) {
  size_t m = A.size();
  Dense B = A;
  for (size_t i = 0; i < m; ++i) B[i][i] = B[i][i] - lam;
  GradedMatrix Bm = denseToMatrix(B);
  GradedMatrix P = Bm;
  auto ker1 = kernel(P);
  size_t prev = ker1.size();
  std::vector<Vec> ker = ker1;
  while (prev > 0) {
    P = P * Bm;
    auto k2 = kernel(P);
    if (k2.size() == prev) break;
    prev = k2.size();
    ker = k2;
  }
  // Map coordinates back to the ambient space.
  auto basis = within.basis();
  SubspaceBasis out(within.ambientDim());
  for (const auto& c : ker) {
    Vec v(within.ambientDim());
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k].isZero()) continue;
      for (size_t i = 0; i < v.size(); ++i) {
        if (!basis[k][i].isZero()) v[i] = v[i] + c[k] * basis[k][i];
      }
    }
    out.insert(v);
  }
  return {out, ker.size() == ker1.size()};
}

struct Block {
  SubspaceBasis sub;
  std::vector<Scalar> values;
  bool semisimple = true;
};

}  // namespace

std::vector<EllSpace> ellSpaces(const Representation& rep) {
  int n = rep.n(), d = rep.dim();
  auto C = berezinians(rep);
  auto spaces = weightSpaces(rep);
  std::map<Weight, std::vector<Block>> blocks;
  for (const auto& [w, idx] : spaces) {
    SubspaceBasis sub(d);
    for (int i : idx) sub.insert(unitVec(d, i));
    blocks[w].push_back(Block{sub, {}, true});
  }
  for (int lvl = 1; lvl <= n; ++lvl) {
    const GradedMatrix& Ci = C[lvl - 1];
    // Candidate eigenvalues from level-lvl highest vectors in every weight space.
    std::vector<Scalar> cand;
    auto addCand = [&](const Scalar& x) {
      if (std::find(cand.begin(), cand.end(), x) == cand.end()) cand.push_back(x);
    };
    auto raise = raisingOperators(rep, lvl);
    for (const auto& [w, idx] : spaces) {
      auto hv = commonKernel(raise, idx, d);
      if (hv.empty()) continue;
      SubspaceBasis H(d);
      for (const auto& v : hv) H.insert(v);
      for (const auto& x : obviousEigenvalues(restrictedMatrix(Ci, H))) addCand(x);
    }
    for (auto& [w, list] : blocks) {
      std::vector<Block> next;
      for (auto& blk : list) {
        Dense A = restrictedMatrix(Ci, blk.sub);
        for (const auto& x : obviousEigenvalues(A)) addCand(x);
        for (size_t r = 0; r < A.size(); ++r) addCand(A[r][r]);
        int found = 0;
        std::vector<Block> parts;
        for (const auto& lam : cand) {
          auto [g, ss] = generalizedKernel(A, lam, blk.sub);
          if (g.dim() == 0) continue;
          Block part{g, blk.values, blk.semisimple && ss};
          part.values.push_back(lam);
          found += g.dim();
          parts.push_back(std::move(part));
        }
        if (found != blk.sub.dim()) {
          throw Error(fmt::format("unresolved l-weight decomposition at level {} in weight {}", lvl, w.str()));
        }
        for (auto& p : parts) next.push_back(std::move(p));
      }
      list = std::move(next);
    }
  }
  std::vector<EllSpace> out;
  for (const auto& [w, list] : blocks) {
    for (const auto& b : list) out.push_back(EllSpace{w, b.values, b.sub.dim(), b.semisimple});
  }
  return out;
}

}  // namespace skr
