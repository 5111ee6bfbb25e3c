#pragma once

#include "skr/repmodules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skr {

// Index of X_{i, base q^n} (or A_{i, base q^n}); base is a q-free monomial.
struct XKey {
  int i = 0;
  Scalar base;
  int n = 0;
  friend bool operator==(const XKey& x, const XKey& y) { return x.i == y.i && x.n == y.n && x.base == y.base; }
  friend bool operator<(const XKey& x, const XKey& y);
};

// prod X_{i,x}^e (kind X) or prod A_{i,x}^e (kind A), times an optional prefactor tuple
// holding whatever does not sit on the lattice. Kept in the canonical form of factorEll.
struct EllWeight {
  enum class Kind { X, A };
  int M = 0;
  int N = 0;
  Kind kind = Kind::X;
  std::map<XKey, int> exps;
  std::vector<Scalar> prefactor;  // empty when trivial, else one series per i in I

  static EllWeight unit(int M, int N, Kind kind = Kind::X);
  static EllWeight x(int M, int N, int i, const Scalar& base, int n, int e = 1);
  static EllWeight a(int M, int N, int i, const Scalar& base, int n, int e = 1);

  int size() const { return M + N; }
  bool isUnit() const { return exps.empty() && prefactor.empty(); }
  // (f_1(z), ..., f_{M+N}(z)).
  std::vector<Scalar> value() const;
  // Value at z = 0, an element of (C^x)^I.
  std::vector<Scalar> weightTuple() const;
  // The weight in P when the constant terms are powers of q.
  std::optional<Weight> weight() const;
  EllWeight inv() const;
  std::string str() const;
  std::string json() const;

  friend EllWeight operator*(const EllWeight& x, const EllWeight& y);
  friend EllWeight operator/(const EllWeight& x, const EllWeight& y) { return x * y.inv(); }
  friend bool operator==(const EllWeight& x, const EllWeight& y);
  friend bool operator!=(const EllWeight& x, const EllWeight& y) { return !(x == y); }
  friend bool operator<(const EllWeight& x, const EllWeight& y);
};

// q (1 - z x q^-1) / (1 - z x q).
Scalar xFactor(const Scalar& x);
// x = base * q^n with base free of q. Throws unless x is a monomial.
std::pair<Scalar, int> splitBase(const Scalar& x);
// Canonical l-weight of a tuple of rational functions in z.
EllWeight factorEll(int M, int N, const std::vector<Scalar>& f);

struct QCharacter {
  int M = 0;
  int N = 0;
  std::map<EllWeight, long> terms;

  static QCharacter unit(int M, int N);
  void add(const EllWeight& w, long m = 1);
  long coefficient(const EllWeight& w) const;
  size_t size() const { return terms.size(); }
  // varpi of every term, summed: the ordinary character.
  std::map<Weight, long> character() const;
  std::string str() const;
  std::string json() const;

  friend QCharacter operator*(const QCharacter& x, const QCharacter& y);
  friend QCharacter operator+(const QCharacter& x, const QCharacter& y);
  friend bool operator==(const QCharacter& x, const QCharacter& y) { return x.terms == y.terms; }
  friend bool operator!=(const QCharacter& x, const QCharacter& y) { return !(x == y); }
};

// sum over tableaux f of prod X_{f(i,j), a q^{2(i-j)-1}}.
QCharacter qcharEval(const Weight& lambda, const Scalar& a);
// Division by the unique term of maximal weight.
QCharacter normalize(const QCharacter& chi);
// Rewrite normalized X-monomials as A-monomials; throws off the A-sublattice.
QCharacter toAMonomials(const QCharacter& chi);
// q-character of ev_a^* L(lambda)^* from the dual Gelfand-Tsetlin eigenvalues.
QCharacter qcharDualEval(const Weight& lambda, const Scalar& a);

// Normalized q-character of W^{(r)}_{k,aq^{2k}} (r <= M) or W^{(r)}_{k,a} (r > M).
QCharacter krNormalized(int M, int N, int r, int k, const Scalar& a);

struct LimitSeries {
  QCharacter series;                // kMax truncation, in A-monomials
  std::vector<size_t> termCounts;   // per k = 1..kMax
  bool stable = true;               // terms at k are terms at k+1
};
LimitSeries limitQChar(int M, int N, int r, const Scalar& a, int kMax);

struct ObstructionReport {
  bool pass = true;        // every admissible triple has Phi_2 = 1
  long triples = 0;        // (Phi_1, Phi_2) pairs examined
  std::vector<std::string> witnesses;
};
// Scan Phi = Phi_1 Phi_2 over the terms of chi~(W^{(r)}_{k,a}) and chi~(W^{(r)}_{k,ab^2}).
ObstructionReport factorizationObstruction(int M, int N, int r, int k, const Scalar& a, const Scalar& b);

// f indexed by I_0 (size M+N-1).
bool isFiniteDimCriterion(int M, int N, const std::vector<Scalar>& f);
bool extendsToFullAlgebra(const std::vector<Scalar>& f);

// q-character of a finite-dimensional module from the joint eigenvalues of the C_i(z).
QCharacter ellDecompose(const Representation& rep);

}  // namespace skr
