#include "skr/rmatrix.hpp"

#include <fmt/format.h>

namespace skr {

Scalar qi(int M, int i) { return qPow(dOf(M, i)); }

Scalar RMatrix::get(int a, int b, int c, int d) const {
  auto it = coeff.find({a, b, c, d});
  return it == coeff.end() ? Scalar() : it->second;
}

void RMatrix::recomputeCoefficients() {
  coeff.clear();
  // (E_ij (x) E_kl)(v_j (x) v_l) = (-1)^{|E_kl||v_j|} v_i (x) v_k.
  for (const auto& t : terms) {
    int s = ((parityOf(M, t.k) + parityOf(M, t.l)) * parityOf(M, t.j)) & 1;
    Scalar v = s ? -t.coeff : t.coeff;
    Index4 key{t.i, t.k, t.j, t.l};
    Scalar sum = get(t.i, t.k, t.j, t.l) + v;
    if (sum.isZero()) {
      coeff.erase(key);
    } else {
      coeff[key] = sum;
    }
  }
}

GradedMatrix RMatrix::matrix(const SpacePtr& VV) const {
  int n = dim();
  GradedMatrix m(VV);
  for (const auto& [k, v] : coeff) {
    auto [a, b, c, d] = k;
    m.set((a - 1) * n + (b - 1), (c - 1) * n + (d - 1), v);
  }
  return m;
}

RMatrix RMatrix::at(const Scalar& zv, const Scalar& wv) const {
  RMatrix r = *this;
  auto f = [&](const Scalar& x) { return x.substitute(zVar, zv).substitute(wVar, wv); };
  r.terms.clear();
  for (const auto& t : terms) {
    Scalar c = f(t.coeff);
    if (!c.isZero()) r.terms.push_back({c, t.i, t.j, t.k, t.l});
  }
  r.recomputeCoefficients();
  return r;
}

RMatrix perkSchultz(int M, int N, int zVar, int wVar) {
  RMatrix R;
  R.M = M;
  R.N = N;
  R.zVar = zVar;
  R.wVar = wVar;
  Scalar z = Scalar::var(zVar), w = Scalar::var(wVar);
  int n = M + N;
  for (int i = 1; i <= n; ++i) {
    Scalar q = qi(M, i);
    R.terms.push_back({z * q - w * q.inv(), i, i, i, i});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) R.terms.push_back({z - w, i, i, j, j});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Scalar q = qi(M, i), qj = qi(M, j);
      R.terms.push_back({z * (q - q.inv()), j, i, i, j});
      R.terms.push_back({w * (qj - qj.inv()), i, j, j, i});
    }
  }
  R.recomputeCoefficients();
  return R;
}

RMatrix rConstant(const RMatrix& R) { return R.at(Scalar(1), Scalar()); }

RMatrix rPrimeConstant(const RMatrix& R) {
  RMatrix r = R.at(Scalar(), Scalar(1));
  for (auto& t : r.terms) t.coeff = -t.coeff;
  r.recomputeCoefficients();
  return r;
}

IceReport checkIceRule(const RMatrix& R) {
  IceReport rep;
  int n = R.dim();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = 1; d <= n; ++d) {
          if (R.get(a, b, c, d).isZero()) continue;
          Weight lhs = Weight::eps(R.M, R.N, a) + Weight::eps(R.M, R.N, b);
          Weight rhs = Weight::eps(R.M, R.N, c) + Weight::eps(R.M, R.N, d);
          if (lhs != rhs) {
            rep.pass = false;
            rep.violations.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  return rep;
}

namespace {

// R acting in factors (x, y) of V^{(x)3} with spectral values (u, v).
GradedMatrix embed(const RMatrix& R, int x, int y, const Scalar& u, const Scalar& v, SignConvention conv,
                   const SpacePtr& V) {
  RMatrix Ruv = R.at(u, v);
  int n = R.dim();
  auto V3 = makeSpace(tensor(tensor(*V, *V), *V));
  if (conv == SignConvention::graded) {
    GradedMatrix out(V3);
    GradedMatrix id = GradedMatrix::identity(V);
    for (const auto& t : Ruv.terms) {
      GradedMatrix f[3] = {id, id, id};
      f[x - 1] = GradedMatrix::unit(V, t.i - 1, t.j - 1);
      f[y - 1] = GradedMatrix::unit(V, t.k - 1, t.l - 1);
      out += t.coeff * gradedTensor(gradedTensor(f[0], f[1]), f[2]);
    }
    return out;
  }
  // Plain placement of the coefficient matrix R_{ab,cd} into the chosen factors.
  GradedMatrix out(V3);
  int other = 6 - x - y;
  for (const auto& [key, c] : Ruv.coeff) {
    auto [a, b, cc, d] = key;
    for (int m = 1; m <= n; ++m) {
      int row[3], col[3];
      row[x - 1] = a;
      row[y - 1] = b;
      row[other - 1] = m;
      col[x - 1] = cc;
      col[y - 1] = d;
      col[other - 1] = m;
      auto flat = [n](const int* e) { return ((e[0] - 1) * n + (e[1] - 1)) * n + (e[2] - 1); };
      out.addTo(flat(row), flat(col), c);
    }
  }
  return out;
}

bool ybeHolds(const RMatrix& R, SignConvention conv, std::string* witness) {
  auto V = makeSpace(SuperSpace::natural(R.M, R.N));
  Scalar z1 = Scalar::var("z1"), z2 = Scalar::var("z2"), z3 = Scalar::var("z3");
  GradedMatrix R12 = embed(R, 1, 2, z1, z2, conv, V);
  GradedMatrix R13 = embed(R, 1, 3, z1, z3, conv, V);
  GradedMatrix R23 = embed(R, 2, 3, z2, z3, conv, V);
  GradedMatrix lhs = R12 * R13 * R23;
  GradedMatrix rhs = R23 * R13 * R12;
  if (lhs == rhs) return true;
  if (witness) {
    GradedMatrix d = lhs - rhs;
    for (int r = 0; r < d.rows(); ++r) {
      if (!d.row(r).empty()) {
        *witness = fmt::format("entry ({}, {}) residual {}", r, d.row(r).front().first, d.row(r).front().second.str());
        break;
      }
    }
  }
  return false;
}

}  // namespace

YbeReport probeYangBaxter(const RMatrix& R) {
  YbeReport rep;
  std::string wg, wp;
  rep.gradedPass = ybeHolds(R, SignConvention::graded, &wg);
  rep.plainPass = ybeHolds(R, SignConvention::plain, &wp);
  if (rep.gradedPass) {
    rep.convention = SignConvention::graded;
  } else if (rep.plainPass) {
    rep.convention = SignConvention::plain;
  } else {
    rep.witness = "graded: " + wg + "; plain: " + wp;
  }
  return rep;
}

YbeReport checkYangBaxter(const RMatrix& R) {
  YbeReport rep = probeYangBaxter(R);
  if (!rep.convention) throw Error("no YBE convention: " + rep.witness);
  return rep;
}

bool checkLinearDecomposition(const RMatrix& R) {
  RMatrix R0 = rConstant(R), R1 = rPrimeConstant(R);
  Scalar z = Scalar::var(R.zVar), w = Scalar::var(R.wVar);
  int n = R.dim();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = 1; d <= n; ++d) {
          if (R.get(a, b, c, d) != z * R0.get(a, b, c, d) - w * R1.get(a, b, c, d)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Scalar> thetas(int M, int N) {
  std::vector<Scalar> th(M + N + 1);
  th[1] = Scalar(1);
  for (int i = 1; i < M + N; ++i) th[i + 1] = qi(M, i + 1).inv() * qi(M, i).inv() * th[i];
  return th;
}

GradedMatrix mMatrix(int M, int N) {
  auto V = makeSpace(SuperSpace::even(M + N));
  GradedMatrix m(V);
  Scalar za = Scalar::var(var::z) * Scalar::var(var::a);
  for (int i = 1; i <= M + N; ++i) {
    for (int j = 1; j <= M + N; ++j) {
      Scalar q = qi(M, j);
      Scalar v;
      if (i < j) {
        v = q - q.inv();
      } else if (i == j) {
        v = q - za * q.inv();
      } else {
        v = za * (q - q.inv());
      }
      m.set(i - 1, j - 1, v);
    }
  }
  return m;
}

GradedMatrix mInverseClosedForm(int M, int N) {
  auto V = makeSpace(SuperSpace::even(M + N));
  GradedMatrix m(V);
  Scalar za = Scalar::var(var::z) * Scalar::var(var::a);
  Scalar shift = qPow(-2 * M + 2 * N);
  Scalar pre = ((Scalar(1) - za) * (Scalar(1) - za * shift)).inv();
  auto th = thetas(M, N);
  for (int i = 1; i <= M + N; ++i) {
    for (int j = 1; j <= M + N; ++j) {
      Scalar q = qi(M, j);
      Scalar v;
      if (i < j) {
        v = q.inv() - q;
      } else if (i == j) {
        v = q.inv() - za * shift * q;
      } else {
        v = (q.inv() - q) * za * shift;
      }
      m.set(i - 1, j - 1, th[i].inv() * th[j] * pre * v);
    }
  }
  return m;
}

}  // namespace skr
