#pragma once

#include "skr/superlinalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skr {

// q_i = q^{d_i}.
Scalar qi(int M, int i);

using Index4 = std::array<int, 4>;  // 1-based (a, b, c, d)

// Perk-Schultz R(z, w). Stored two ways: as the formal sum of x * E_ij (x) E_kl, and as
// the coefficients R_{ab,cd} of its action on V (x) V (graded action).
struct RMatrix {
  int M = 0;
  int N = 0;
  int zVar = var::z;
  int wVar = var::w;
  struct Term {
    Scalar coeff;
    int i, j, k, l;  // coeff * E_ij (x) E_kl
  };
  std::vector<Term> terms;
  std::map<Index4, Scalar> coeff;

  int dim() const { return M + N; }
  Scalar get(int a, int b, int c, int d) const;
  // Operator on V (x) V (row-major basis), entries R_{ab,cd}.
  GradedMatrix matrix(const SpacePtr& VV) const;
  // Specialize z, w to the given Scalars (both terms and coefficients).
  RMatrix at(const Scalar& zv, const Scalar& wv) const;
  // Rebuild the coefficient table from the formal terms.
  void recomputeCoefficients();
};

RMatrix perkSchultz(int M, int N, int zVar = var::z, int wVar = var::w);
// R = R(1, 0) and R' = -R(0, 1).
RMatrix rConstant(const RMatrix& R);
RMatrix rPrimeConstant(const RMatrix& R);

struct IceReport {
  bool pass = true;
  std::vector<Index4> violations;
};
IceReport checkIceRule(const RMatrix& R);

struct YbeReport {
  bool gradedPass = false;
  bool plainPass = false;
  std::optional<SignConvention> convention;  // the unique passing convention, if any
  std::string witness;                       // first failing entry when neither passes
};
// Throws Error("no YBE convention") with a witness when both conventions fail.
YbeReport checkYangBaxter(const RMatrix& R);
YbeReport probeYangBaxter(const RMatrix& R);  // same, without throwing

// R(z, w) == z R - w R' on every coefficient.
bool checkLinearDecomposition(const RMatrix& R);

// theta_1 = 1, theta_{i+1} = q_{i+1}^{-1} q_i^{-1} theta_i. Index 1-based, entry 0 unused.
std::vector<Scalar> thetas(int M, int N);
// (M+N) x (M+N) matrices over Q(q, a, z).
GradedMatrix mMatrix(int M, int N);
GradedMatrix mInverseClosedForm(int M, int N);

}  // namespace skr
