#include "skr/asymptotics.hpp"

#include <fmt/format.h>

namespace skr {

namespace {

const Scalar& kappa() {
  static const Scalar k = Scalar::var(var::kappa);
  return k;
}

GradedMatrix E(const SpacePtr& V, int i, int j, const Scalar& c) { return GradedMatrix::unit(V, i - 1, j - 1, c); }

GradedMatrix onSpace(const GradedMatrix& m, const SpacePtr& V) {
  GradedMatrix out(V, V);
  for (int r = 0; r < m.rows(); ++r) out.setRow(r, m.row(r));
  return out;
}

Scalar atZero(const Scalar& x) { return x.substitute(var::z, Scalar()); }

Representation withLabels(const Representation& rep, const Weight& shift, int k) {
  std::vector<Weight> ws;
  for (const auto& w : rep.space->weights()) ws.push_back(w + shift * k);
  auto V = makeSpace(SuperSpace(rep.space->parities(), ws));
  Representation out = rep;
  out.space = V;
  for (auto& m : out.s) m = onSpace(m, V);
  for (auto& m : out.t) m = onSpace(m, V);
  return out;
}

// diag(q^{(eps_i, wt)}) on the labels.
GradedMatrix cartanPart(const Representation& rep, int i) {
  GradedMatrix D(rep.space, rep.space);
  for (int b = 0; b < rep.dim(); ++b) D.set(b, b, qPow(rep.space->weight(b).formWithEps(i)));
  return D;
}

std::vector<GradedMatrix> limitOf(const std::vector<GradedMatrix>& ms, LimitDir dir) {
  std::vector<GradedMatrix> out;
  for (const auto& m : ms) {
    try {
      out.push_back(m.map([&](const Scalar& x) { return x.limit(var::kappa, dir); }));
    } catch (const PoleError&) {
      throw Error("kappa-regularity violated");
    }
  }
  return out;
}

}  // namespace

ParametricRep gl21Family(Variant variant, const Scalar& a) {
  auto V = makeSpace(SuperSpace({0, 1, 1, 0}, {Weight(2, 1, {0, 0, 0}), Weight(2, 1, {0, -1, 1}),
                                               Weight(2, 1, {-1, 0, 1}), Weight(2, 1, {-1, -1, 2})}));
  Representation rep = blankRep(2, 1, V, false, true);
  const Scalar& K = kappa();
  Scalar Ki = K.inv(), z = Scalar::var(var::z), q = qPow(1), qi = qPow(-1), d = q - qi;
  Scalar za = z * a;
  if (variant == Variant::minus) {
    Scalar top = K - za * Ki, low = K * qi - za * q * Ki;
    rep.S(1, 1) = E(V, 1, 1, top) + E(V, 2, 2, top) + E(V, 3, 3, low) + E(V, 4, 4, low);
    rep.S(2, 2) = E(V, 1, 1, top) + E(V, 3, 3, top) + E(V, 2, 2, low) + E(V, 4, 4, low);
    rep.S(3, 3) = E(V, 1, 1, Scalar(1) - za) + E(V, 2, 2, qi - za * q) + E(V, 3, 3, qi - za * q) +
                  E(V, 4, 4, qPow(-2) - za * qPow(2));
    rep.S(1, 2) = E(V, 2, 3, K);
    rep.S(1, 3) = E(V, 2, 4, qi / d) + E(V, 1, 3, -qi / d);
    rep.S(2, 3) = E(V, 1, 2, qi) + E(V, 3, 4, qPow(-2));
    rep.S(2, 1) = E(V, 3, 2, za * d * d * Ki);
    rep.S(3, 1) = E(V, 4, 2, za * q * d * d * (q * K - qi * Ki)) + E(V, 3, 1, -za * q * d * d * (K - Ki));
    rep.S(3, 2) = E(V, 2, 1, za * q * d * (K - Ki)) + E(V, 4, 3, za * qPow(2) * d * (q * K - qi * Ki));
  } else {
    Scalar top = K - za * K, low = K * qi - za * q * K, K2 = K * K;
    rep.S(1, 1) = E(V, 1, 1, top) + E(V, 2, 2, top) + E(V, 3, 3, low) + E(V, 4, 4, low);
    rep.S(2, 2) = E(V, 1, 1, top) + E(V, 3, 3, top) + E(V, 2, 2, low) + E(V, 4, 4, low);
    rep.S(3, 3) = E(V, 1, 1, Scalar(1) - za * K2) + E(V, 2, 2, qi - za * q * K2) + E(V, 3, 3, qi - za * q * K2) +
                  E(V, 4, 4, qPow(-2) - za * qPow(2) * K2);
    rep.S(1, 2) = E(V, 2, 3, K);
    rep.S(1, 3) = E(V, 2, 4, K * q / d) + E(V, 1, 3, -K / d);
    rep.S(2, 3) = E(V, 1, 2, K) + E(V, 3, 4, K);
    rep.S(2, 1) = E(V, 3, 2, za * K * d * d);
    rep.S(3, 1) = E(V, 4, 2, za * K * qi * d * d * (q * K - qi * Ki)) + E(V, 3, 1, -za * K * d * d * (K - Ki));
    rep.S(3, 2) = E(V, 2, 1, za * K * d * (K - Ki)) + E(V, 4, 3, za * K * d * (q * K - qi * Ki));
  }
  // ev at a' gives t(z) = -z^-1 a'^-1 s(z); a' = a or a kappa^2.
  Scalar f = -(z * a).inv();
  if (variant == Variant::plus) f = f * Ki * Ki;
  for (int k = 0; k < 9; ++k) rep.t[k] = f * rep.s[k];
  ParametricRep p;
  p.rep = std::move(rep);
  p.r = 2;
  p.a = a;
  p.variant = variant;
  p.shift = Weight(2, 1, {1, 1, 0});
  return p;
}

Representation gl11Family(const Scalar& a, const Scalar& b) {
  auto V = makeSpace(SuperSpace({0, 1}, {Weight(1, 1, {0, 0}), Weight(1, 1, {-1, 1})}));
  Representation r = blankRep(1, 1, V, false, false);
  Scalar z = Scalar::var(var::z), q = qPow(1), qi = qPow(-1);
  Scalar d = Scalar(1) - z * b;
  r.S(1, 1) = E(V, 1, 1, (Scalar(1) - z * a) / d) + E(V, 2, 2, (qi - z * a * q) / d);
  r.S(1, 2) = E(V, 1, 2, (qi - q) * (b - a) / d);
  r.S(2, 1) = E(V, 2, 1, -z / d);
  r.S(2, 2) = E(V, 1, 1, Scalar(1)) + E(V, 2, 2, (qi - z * b * q) / d);
  return r;
}

Representation atLevel(const ParametricRep& p, int k) {
  return withLabels(p.rep.substitute(var::kappa, qPow(k)), p.shift, k);
}

std::vector<GradedMatrix> tildeGenerators(const ParametricRep& p) {
  const auto& rep = p.rep;
  int n = rep.n();
  std::vector<GradedMatrix> out(n * n);
  for (int j = 1; j <= n; ++j) {
    GradedMatrix d0 = rep.S(j, j).map(atZero);
    if (rank(d0) != rep.dim()) throw Error(fmt::format("s_{}{}^(0) is singular", j, j));
    GradedMatrix inv = inverse(d0);
    for (int i = 1; i <= n; ++i) out[(i - 1) * n + (j - 1)] = rep.S(i, j) * inv;
  }
  return out;
}

std::vector<GradedMatrix> hatGenerators(const ParametricRep& p) {
  const auto& rep = p.rep;
  int n = rep.n();
  std::vector<GradedMatrix> out(n * n);
  for (int i = 1; i <= n; ++i) {
    GradedMatrix d0 = rep.S(i, i).map(atZero);
    if (rank(d0) != rep.dim()) throw Error(fmt::format("s_{}{}^(0) is singular", i, i));
    GradedMatrix inv = inverse(d0);
    for (int j = 1; j <= n; ++j) out[(i - 1) * n + (j - 1)] = inv * rep.S(i, j);
  }
  return out;
}

std::set<int> kappaExponents(const std::vector<GradedMatrix>& ms) {
  std::set<int> out;
  for (const auto& m : ms) {
    for (int r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) {
        for (const auto& [e, coeff] : v.laurentCoefficients(var::kappa)) out.insert(e);
      }
    }
  }
  return out;
}

Representation limitMinus(const ParametricRep& p) {
  auto A = limitOf(tildeGenerators(p), LimitDir::toInfinity);
  const auto& rep = p.rep;
  int n = rep.n();
  Representation out = blankRep(rep.M, rep.N, rep.space, false, false);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.S(i, j) = A[(i - 1) * n + (j - 1)] * cartanPart(rep, j);
  }
  return out;
}

Representation limitPlus(const ParametricRep& p) {
  auto A = limitOf(hatGenerators(p), LimitDir::toZero);
  const auto& rep = p.rep;
  int n = rep.n();
  Representation out = blankRep(rep.M, rep.N, rep.space, false, false);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.S(i, j) = cartanPart(rep, i) * A[(i - 1) * n + (j - 1)];
  }
  return out;
}

Representation genericEval(const ParametricRep& p, const Scalar& b) {
  if (b.isZero()) throw Error("b must be invertible");
  try {
    return p.rep.substitute(var::kappa, b);
  } catch (const Error& e) {
    throw Error(std::string("pole under kappa -> b: ") + e.what());
  }
}

KappaAudit kappaDegreeAudit(const ParametricRep& p) {
  KappaAudit rep;
  rep.windowHi = p.odd ? 1 : 3;
  bool first = true;
  auto scan = [&](const std::vector<GradedMatrix>& ms, const char* name) {
    int n = p.rep.n();
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const auto& m = ms[(i - 1) * n + (j - 1)];
        if (m.isZero()) continue;
        auto ex = kappaExponents({m});
        if (ex.empty()) continue;
        int lo = *ex.begin(), hi = *ex.rbegin();
        rep.lo = first ? lo : std::min(rep.lo, lo);
        rep.hi = first ? hi : std::max(rep.hi, hi);
        first = false;
        if (lo < rep.windowLo || hi > rep.windowHi) {
          rep.pass = false;
          rep.offending.push_back(fmt::format("{}_{}{}: kappa^{}..kappa^{}", name, i, j, lo, hi));
        }
      }
    }
  };
  scan(p.rep.s, "s");
  if (p.rep.hasT) scan(p.rep.t, "t");
  return rep;
}

Representation flipMN(const Representation& rep) {
  int M = rep.M, N = rep.N, n = rep.n();
  std::vector<Weight> ws;
  for (const auto& w : rep.space->weights()) {
    Weight v(N, M);
    for (int i = 1; i <= n; ++i) v[i] = -w[n + 1 - i];
    ws.push_back(v);
  }
  auto V = makeSpace(SuperSpace(rep.space->parities(), ws));
  Representation out = blankRep(N, M, V, rep.finite, rep.hasT);
  // |i|^J = 0 for i <= N: the parities of gl(N,M).
  auto eps = [&](int j, int i) { return signOf(parityOf(N, j) * (parityOf(N, j) + parityOf(N, i))); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Scalar c(eps(j, i));
      out.S(i, j) = c * onSpace(rep.S(n + 1 - j, n + 1 - i), V);
      if (rep.hasT) out.T(i, j) = c * onSpace(rep.T(n + 1 - j, n + 1 - i), V);
    }
  }
  return out;
}

ParametricRep flipMN(const ParametricRep& p) {
  ParametricRep out = p;
  out.rep = flipMN(p.rep);
  int n = p.rep.n();
  out.r = n - p.r;
  Weight s(p.rep.N, p.rep.M);
  for (int i = 1; i <= n; ++i) s[i] = -p.shift[n + 1 - i];
  out.shift = s;
  // W_{k,a} without the q^{2k} shift is the setting of the r > M construction.
  out.odd = p.variant == Variant::minus;
  return out;
}

}  // namespace skr
