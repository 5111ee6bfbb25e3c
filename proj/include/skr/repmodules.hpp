#pragma once

#include "skr/rmatrix.hpp"
#include "skr/superlinalg.hpp"
#include "skr/youngcomb.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skr {

// Matrices of the generator series on a weight-labelled superspace. Entries are rational
// in z: s_ij(z) expands at z = 0 and t_ij(z) at z = infinity. For a module of the finite
// quantum superalgebra the entries are constant, s_ij = 0 for i > j and t_ij = 0 for i < j.
struct Representation {
  int M = 0;
  int N = 0;
  SpacePtr space;
  bool finite = false;
  bool hasT = true;  // false for modules of the q-Yangian only
  std::vector<GradedMatrix> s;  // (M+N)^2 entries, s[(i-1)(M+N) + (j-1)]
  std::vector<GradedMatrix> t;

  int n() const { return M + N; }
  int dim() const { return space->dim(); }
  const GradedMatrix& S(int i, int j) const { return s[(i - 1) * n() + (j - 1)]; }
  GradedMatrix& S(int i, int j) { return s[(i - 1) * n() + (j - 1)]; }
  const GradedMatrix& T(int i, int j) const { return t[(i - 1) * n() + (j - 1)]; }
  GradedMatrix& T(int i, int j) { return t[(i - 1) * n() + (j - 1)]; }

  // Apply f to every generator matrix entry.
  Representation mapEntries(const std::function<Scalar(const Scalar&)>& f) const;
  Representation substitute(int var, const Scalar& value) const;
  std::string json() const;
  static Representation fromJson(const std::string& text);
};

// Empty representation with zero generator matrices on V.
Representation blankRep(int M, int N, SpacePtr V, bool finite, bool hasT = true);

// Dimension cap for brute-force closures; SKR_DIM_CAP overrides the default 256.
int dimensionCap();

Representation naturalRepFinite(int M, int N);
Representation trivialRep(int M, int N, bool finite = false);
// ev_a: s_ij(z) -> s_ij - z a t_ij, t_ij(z) -> t_ij - z^-1 a^-1 s_ij.
Representation evaluate(const Representation& fin, const Scalar& a);
// s_ij(z) -> g s_ij(z), t_ij(z) -> f t_ij(z).
Representation twistBySeries(const Representation& rep, const Scalar& g, const Scalar& f);
// Graded coproduct; works for finite and affine modules alike.
Representation tensor(const Representation& V, const Representation& W);
Vec tensorVector(const Vec& v, const Vec& w);

struct RttReport {
  bool pass = true;
  std::string relation;  // "SS", "TT", "TS", "zero", "invertible", "cartan", "grading"
  std::array<int, 4> index{};
  std::string residual;
};
// Exact coefficient RTT identities plus the zero, invertibility, Cartan and grading checks.
// Finite modules are checked through their evaluation at a = 1.
RttReport checkRTT(const Representation& rep);

// z-free coefficient operators of a generator series (after clearing z-denominators).
std::vector<GradedMatrix> coefficientOperators(const GradedMatrix& series);
// All coefficient operators of all generators present in the module.
std::vector<GradedMatrix> generatorOperators(const Representation& rep, int level = -1);

struct HighestVector {
  Vec v;
  Weight weight;
  std::vector<Scalar> sDiag;  // s_ii(z) v = sDiag[i-1] v
  std::vector<Scalar> tDiag;
};
// Weight vectors killed by all s_ij, t_ij with i < j (all coefficients) that are eigen for
// the diagonal series. Only 1-dimensional joint solutions per weight are reported.
std::vector<HighestVector> highestLWeightVectors(const Representation& rep);

// Closure of the seeds under all generator coefficient operators (levels <= level).
SubspaceBasis closure(const Representation& rep, const std::vector<Vec>& seeds, int level = -1);
// Module structure on an invariant subspace, in its reduced echelon basis.
Representation restrictToSubspace(const Representation& rep, const SubspaceBasis& sub);
Representation generatedSubmodule(const Representation& rep, const Vec& seed);
bool cyclicityCheck(const Representation& rep, const Vec& seed);

// L(lambda) for the finite quantum superalgebra, as the submodule of V^{(x) ht(lambda)}
// generated by a highest weight vector of weight lambda.
Representation simpleFinite(const Weight& lambda);
// For a finite module: a basis of the vectors killed by every s_ij, i < j, weight by weight.
std::vector<std::pair<Weight, Vec>> finiteHighestVectors(const Representation& fin);
// Submodules generated by those vectors; simple when the module is semisimple.
std::vector<std::pair<Weight, Representation>> simpleConstituents(const Representation& fin);
// ev_a^* L(lambda).
Representation evaluationModule(const Weight& lambda, const Scalar& a);
// W^{(r)}_{k,a} for r <= M.
Representation krModule(int M, int N, int r, int k, const Scalar& a);

// Unique highest l-weight vector; throws when there is none or several.
Vec topVector(const Representation& rep);
struct TensorChain {
  Representation rep;
  Vec top;  // tensor product of the factors' top vectors
};
// (x)_{j=1}^k W^{(r)}_{1, a q_r^{-2j}}.
TensorChain fundamentalChain(int M, int N, int r, int k, const Scalar& a);
// W_{l1,a} (x) W_{l2-l1,aq^{-2l1}} (x) W_{l3-l2,aq^{-2l2}} for r <= M, reversed for r > M.
TensorChain krChain(int M, int N, int r, const std::array<int, 3>& l, const Scalar& a);

// V^* through the antipode (finite or affine), and V^vee = Psi^* V^*.
Representation dual(const Representation& rep);
Representation twistedDual(const Representation& rep);

// K_1(z), ..., K_{M+N}(z) of the Gauss decomposition of S(z).
std::vector<GradedMatrix> gaussDecompose(const Representation& rep);
// C_i(z) = prod_{j <= i} K_j(z theta_j^-1)^{d_j}.
GradedMatrix berezinian(const Representation& rep, int i);
std::vector<GradedMatrix> berezinians(const Representation& rep);
struct CentralityReport {
  bool pass = true;
  std::string failure;
};
// C_k(z) commutes with s_ij(w), t_ij(w) for i, j <= k, and C_{k,0} = prod (s_jj^(0))^{d_j}.
CentralityReport checkCentrality(const Representation& rep, int k);

// Representation of Y_q(g_k) / U_q(g_k-hat) obtained by keeping generators with i, j <= k.
Representation restrictToSubalgebra(const Representation& rep, int k);

struct RestrictionReport {
  bool exact = true;  // all weight spaces 1-dimensional, so the brute force is exhaustive
  std::vector<std::vector<int>> summands;  // basis indices of the indecomposable summands
  std::vector<bool> summandSimple;
  bool semisimple = true;
  bool multiplicityFree = true;
};
RestrictionReport decomposeRestriction(const Representation& rep, int k);

// Weight spaces from the space labels: weight -> basis indices.
std::map<Weight, std::vector<int>> weightSpaces(const Representation& rep);

// Joint generalized eigenspaces of C_1, ..., C_{M+N}.
struct EllSpace {
  Weight weight;
  std::vector<Scalar> values;  // eigenvalue of C_i(z) for i = 1..M+N
  int dim = 0;
  bool semisimple = true;      // C_i acts diagonally on the block
};
std::vector<EllSpace> ellSpaces(const Representation& rep);

}  // namespace skr
