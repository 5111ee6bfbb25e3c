#pragma once

#include "skr/repmodules.hpp"

#include <set>
#include <string>
#include <vector>

namespace skr {

enum class Variant { minus, plus };

// A KR family rho^k written with kappa = q^k. Weight labels are those at k = 0; the
// member at level k has labels shifted by k * shift.
struct ParametricRep {
  Representation rep;
  int r = 0;
  Scalar a;
  Variant variant = Variant::minus;
  Weight shift;
  bool odd = false;  // audit against the r > M window
};

// W^{(2)}_{k,a} (minus) or W^{(2)}_{k,aq^{2k}} (plus) for gl(2,1), on the basis v_1..v_4.
ParametricRep gl21Family(Variant variant, const Scalar& a);
// The prime module V((1-za)/(1-zb)) of the q-Yangian of gl(1,1).
Representation gl11Family(const Scalar& a, const Scalar& b);

// kappa -> q^k with the labels moved to level k.
Representation atLevel(const ParametricRep& p, int k);

// s~_ij(z) = s_ij(z) (s_jj^(0))^-1 and s^_ij(z) = (s_ii^(0))^-1 s_ij(z), indexed like rep.s.
std::vector<GradedMatrix> tildeGenerators(const ParametricRep& p);
std::vector<GradedMatrix> hatGenerators(const ParametricRep& p);
// Exponents of kappa that occur in the entries.
std::set<int> kappaExponents(const std::vector<GradedMatrix>& ms);

// rho^- from the kappa-free part of the tilde generators (kappa -> infinity) and rho^+ from
// that of the hat generators (kappa -> 0). q-Yangian modules; s_ii^(0) comes from the labels.
Representation limitMinus(const ParametricRep& p);
Representation limitPlus(const ParametricRep& p);
// kappa -> b in every S and T matrix.
Representation genericEval(const ParametricRep& p, const Scalar& b);

struct KappaAudit {
  bool pass = true;
  int lo = 0;
  int hi = 0;
  int windowLo = -2;
  int windowHi = 3;
  std::vector<std::string> offending;
};
// kappa-degree window of every S and T entry: [-2, 3], or [-2, 1] for odd families.
KappaAudit kappaDegreeAudit(const ParametricRep& p);

// Pullback along the transposition gl(N,M) -> gl(M,N): s_ij -> eps_ji s_{j' i'},
// i' = M+N+1-i. Weights are reversed and negated, parities kept.
Representation flipMN(const Representation& rep);
ParametricRep flipMN(const ParametricRep& p);

}  // namespace skr
