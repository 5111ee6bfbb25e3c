#pragma once

#include "skr/weight.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace skr {

// (M_k, N_k) along the chain gl(1,0) < ... < gl(M,0) < gl(M,1) < ... < gl(M,N).
std::pair<int, int> chainRank(int M, int N, int k);

// Young diagram by row lengths, for gl(a,b) with a hook constraint r_{a+1} <= b.
struct Diagram {
  int M = 0;
  int N = 0;
  std::vector<int> rows;  // nonincreasing, no trailing zeros

  bool contains(int i, int j) const;  // 1-based cell
  int cells() const;
  int columnLength(int j) const;
  std::vector<std::pair<int, int>> cellList() const;  // row-major
  bool valid() const;
  friend bool operator==(const Diagram& x, const Diagram& y) { return x.rows == y.rows; }
};

struct Tableau {
  Diagram shape;
  std::vector<int> entries;  // aligned with shape.cellList()

  int at(int i, int j) const;
  Weight content(int M, int N) const;  // sum of eps_{f(i,j)}
  friend bool operator==(const Tableau& x, const Tableau& y) { return x.entries == y.entries && x.shape == y.shape; }
  friend bool operator<(const Tableau& x, const Tableau& y) { return x.entries < y.entries; }
};

// lambda^{(k)} stored as full-length weights with zeros past index k.
struct GTPattern {
  std::vector<Weight> levels;  // levels[k-1] = lambda^{(k)}
  friend bool operator==(const GTPattern& x, const GTPattern& y) { return x.levels == y.levels; }
  friend bool operator<(const GTPattern& x, const GTPattern& y) { return x.levels < y.levels; }
};

constexpr int kDefaultCellCap = 64;

bool isDominant(const Weight& lambda);
// Dominance for gl(M_k, N_k), reading the first k coordinates.
bool isDominantAt(const Weight& lambda, int k);

// Ym and its inverse at level k (k = M+N by default).
Diagram diagramOf(const Weight& lambda, int k = -1);
Weight ymInverse(const Diagram& Y, int M, int N, int k = -1);

// Tableaux with entries in {1..k}, lexicographic in row-major entry order.
std::vector<Tableau> enumerateTableaux(const Diagram& Y, int k = -1, int cellCap = kDefaultCellCap);
bool isTableau(const Tableau& t, int k = -1);

struct Character {
  std::map<Weight, long> mult;
  long multiplicity(const Weight& w) const;
  long dim() const;
};
Character character(const Weight& lambda, int cellCap = kDefaultCellCap);

std::vector<GTPattern> gtPatterns(const Weight& lambda, int cellCap = kDefaultCellCap);
GTPattern tableauToGT(const Tableau& f, int M, int N);
// Throws Error when the pattern does not come from a tableau.
Tableau gtToTableau(const GTPattern& p, int M, int N);

// S_k(lambda) for lambda dominant at level k, sorted.
std::vector<Weight> branching(const Weight& lambda, int k);

// lambda_b, and the highest weight -lambda_b of L(lambda)^*.
Weight lowestWeight(const Weight& lambda);
Weight dualHighest(const Weight& lambda);

// beta - 0 in the cone spanned by the simple roots.
bool inPositiveRootCone(const Weight& beta);

struct StabilizationReport {
  bool pass = true;
  std::vector<std::pair<int, long>> multiplicities;  // (k, dim of the weight space)
};
// Compares dim L(k varpi_r)_{k varpi_r - beta} for k in [r l, r l + 3].
StabilizationReport stabilizationCheck(int M, int N, int r, const Weight& beta, int l);

// Finite window of a semi-infinite tableau in B_k^{(r)}.
// r <= M: rows 1..r, columns -k..-1 stored left to right; outside the window f(i,j) = i.
// r > M: rows 1..k+1, columns 1..M+N-r; below the window f(i,j) = r+j.
struct SemiInfiniteTableau {
  int r = 0;
  int k = 0;
  std::vector<std::vector<int>> grid;
  friend bool operator==(const SemiInfiniteTableau& x, const SemiInfiniteTableau& y) { return x.grid == y.grid; }
  friend bool operator<(const SemiInfiniteTableau& x, const SemiInfiniteTableau& y) { return x.grid < y.grid; }
};
// The tableau's shape for B_k^{(r)}: r x k for r <= M, k x (M+N-r) for r > M.
Diagram semiInfiniteShape(int M, int N, int r, int k);
SemiInfiniteTableau piK(const Tableau& g, int M, int N, int r, int k);
std::vector<SemiInfiniteTableau> semiInfiniteTableaux(int M, int N, int r, int k);
// The B_l -> B_k inclusion (l <= k).
SemiInfiniteTableau embedSemiInfinite(const SemiInfiniteTableau& f, int M, int N, int k);

}  // namespace skr
