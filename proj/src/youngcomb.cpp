#include "skr/youngcomb.hpp"

#include "skr/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <set>

namespace skr {

std::pair<int, int> chainRank(int M, int N, int k) {
  if (k < 1 || k > M + N) throw Error(fmt::format("level {} outside 1..{}", k, M + N));
  return k <= M ? std::pair{k, 0} : std::pair{M, k - M};
}

bool Diagram::contains(int i, int j) const {
  return i >= 1 && j >= 1 && i <= static_cast<int>(rows.size()) && j <= rows[i - 1];
}

int Diagram::cells() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

int Diagram::columnLength(int j) const {
  int c = 0;
  for (int r : rows) c += r >= j ? 1 : 0;
  return c;
}

std::vector<std::pair<int, int>> Diagram::cellList() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 1; j <= rows[i]; ++j) out.emplace_back(static_cast<int>(i) + 1, j);
  }
  return out;
}

bool Diagram::valid() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return static_cast<int>(rows.size()) <= M || rows[M] <= N;
}

int Tableau::at(int i, int j) const {
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += shape.rows[a - 1];
  return entries[idx + j - 1];
}

Weight Tableau::content(int M, int N) const {
  Weight w(M, N);
  for (int e : entries) w[e] += 1;
  return w;
}

bool isDominantAt(const Weight& l, int k) {
  int M = l.M, N = l.N;
  auto [a, b] = chainRank(M, N, k);
  for (int i = k + 1; i <= M + N; ++i) {
    if (l[i] != 0) return false;
  }
  for (int i = 1; i <= k; ++i) {
    if (l[i] < 0) return false;
  }
  for (int i = 1; i < k; ++i) {
    if (i != M && l[i] < l[i + 1]) return false;
  }
  for (int j = 1; j <= b; ++j) {
    if (l[M + j] > 0 && l[M] < j) return false;
  }
  (void)a;
  return true;
}

bool isDominant(const Weight& l) { return isDominantAt(l, l.M + l.N); }

Diagram diagramOf(const Weight& l, int k) {
  if (k < 0) k = l.M + l.N;
  if (!isDominantAt(l, k)) throw Error("weight " + l.str() + " is not dominant");
  auto [a, b] = chainRank(l.M, l.N, k);
  Diagram Y{l.M, l.N, {}};
  for (int i = 1; i <= a; ++i) {
    if (l[i] > 0) Y.rows.push_back(l[i]);
  }
  if (b > 0 && static_cast<int>(Y.rows.size()) == a) {
    for (int i = a + 1;; ++i) {
      int r = 0;
      for (int j = 1; j <= b; ++j) r += l[l.M + j] >= i - a ? 1 : 0;
      if (r == 0) break;
      Y.rows.push_back(r);
    }
  }
  return Y;
}

Weight ymInverse(const Diagram& Y, int M, int N, int k) {
  if (k < 0) k = M + N;
  auto [a, b] = chainRank(M, N, k);
  Diagram check{a, b, Y.rows};
  if (!check.valid()) throw Error("not a Young diagram for this level");
  Weight l(M, N);
  for (int i = 1; i <= std::min<int>(a, Y.rows.size()); ++i) l[i] = Y.rows[i - 1];
  for (int j = 1; j <= b; ++j) l[M + j] = std::max(Y.columnLength(j) - a, 0);
  return l;
}

bool isTableau(const Tableau& t, int k) {
  int M = t.shape.M, N = t.shape.N;
  if (k < 0) k = M + N;
  for (auto [i, j] : t.shape.cellList()) {
    int v = t.at(i, j);
    if (v < 1 || v > k) return false;
    if (j > 1) {
      int left = t.at(i, j - 1);
      if (left > v || (left >= M + 1 && left == v)) return false;
    }
    if (i > 1) {
      int up = t.at(i - 1, j);
      if (up > v || (up <= M && up == v)) return false;
    }
  }
  return true;
}

std::vector<Tableau> enumerateTableaux(const Diagram& Y, int k, int cellCap) {
  int M = Y.M;
  if (k < 0) k = Y.M + Y.N;
  if (Y.cells() > cellCap) throw CapExceeded(fmt::format("diagram has {} cells, cap is {}", Y.cells(), cellCap));
  auto cells = Y.cellList();
  std::vector<std::vector<int>> grid(Y.rows.size());
  for (size_t i = 0; i < Y.rows.size(); ++i) grid[i].assign(Y.rows[i], 0);
  std::vector<Tableau> out;
  std::vector<int> cur(cells.size());
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == cells.size()) {
      out.push_back(Tableau{Y, cur});
      return;
    }
    auto [i, j] = cells[pos];
    int lo = 1;
    if (j > 1) {
      int left = grid[i - 1][j - 2];
      lo = std::max(lo, left >= M + 1 ? left + 1 : left);
    }
    if (i > 1) {
      int up = grid[i - 2][j - 1];
      lo = std::max(lo, up <= M ? up + 1 : up);
    }
    for (int v = lo; v <= k; ++v) {
      grid[i - 1][j - 1] = v;
      cur[pos] = v;
      self(self, pos + 1);
    }
    grid[i - 1][j - 1] = 0;
  };
  rec(rec, 0);
  return out;
}

long Character::multiplicity(const Weight& w) const {
  auto it = mult.find(w);
  return it == mult.end() ? 0 : it->second;
}

long Character::dim() const {
  long d = 0;
  for (const auto& [w, m] : mult) d += m;
  return d;
}

Character character(const Weight& l, int cellCap) {
  Character ch;
  for (const auto& f : enumerateTableaux(diagramOf(l), -1, cellCap)) ch.mult[f.content(l.M, l.N)] += 1;
  return ch;
}

namespace {

Diagram subDiagram(const Tableau& f, int k) {
  Diagram Y{f.shape.M, f.shape.N, {}};
  for (size_t i = 0; i < f.shape.rows.size(); ++i) {
    int r = 0;
    for (int j = 1; j <= f.shape.rows[i]; ++j) r += f.at(static_cast<int>(i) + 1, j) <= k ? 1 : 0;
    if (r == 0) break;
    Y.rows.push_back(r);
  }
  return Y;
}

}  // namespace

GTPattern tableauToGT(const Tableau& f, int M, int N) {
  GTPattern p;
  for (int k = 1; k <= M + N; ++k) p.levels.push_back(ymInverse(subDiagram(f, k), M, N, k));
  return p;
}

Tableau gtToTableau(const GTPattern& p, int M, int N) {
  if (static_cast<int>(p.levels.size()) != M + N) throw Error("pattern has the wrong length");
  Diagram top = diagramOf(p.levels.back());
  Tableau f{top, std::vector<int>(top.cells(), 0)};
  auto cells = top.cellList();
  Diagram prev{M, N, {}};
  for (int k = 1; k <= M + N; ++k) {
    Diagram Y = diagramOf(p.levels[k - 1], k);
    for (size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      bool inY = Y.contains(i, j), inPrev = prev.contains(i, j);
      if (inPrev && !inY) throw Error("pattern levels are not nested");
      if (inY && !inPrev) f.entries[c] = k;
    }
    for (size_t i = 0; i < Y.rows.size(); ++i) {
      if (!top.contains(static_cast<int>(i) + 1, Y.rows[i])) throw Error("pattern levels are not nested");
    }
    prev = Y;
  }
  if (!isTableau(f)) throw Error("pattern does not come from a tableau");
  return f;
}

std::vector<GTPattern> gtPatterns(const Weight& l, int cellCap) {
  std::vector<GTPattern> out;
  for (const auto& f : enumerateTableaux(diagramOf(l), -1, cellCap)) out.push_back(tableauToGT(f, l.M, l.N));
  return out;
}

std::vector<Weight> branching(const Weight& l, int k) {
  if (k < 2) throw Error("branching needs k >= 2");
  std::set<Weight> s;
  for (const auto& f : enumerateTableaux(diagramOf(l, k), k)) s.insert(ymInverse(subDiagram(f, k - 1), l.M, l.N, k - 1));
  return {s.begin(), s.end()};
}

Weight lowestWeight(const Weight& l) {
  int M = l.M, N = l.N;
  Diagram Y = diagramOf(l);
  auto r = [&](int i) { return i <= static_cast<int>(Y.rows.size()) ? Y.rows[i - 1] : 0; };
  Weight b(M, N);
  for (int i = 1; i <= M; ++i) b[i] = std::max(r(M + 1 - i) - N, 0);
  for (int j = 1; j <= N; ++j) b[M + j] = Y.columnLength(N + 1 - j);
  return b;
}

Weight dualHighest(const Weight& l) { return -lowestWeight(l); }

bool inPositiveRootCone(const Weight& beta) {
  int s = 0;
  for (int i = 1; i <= beta.size(); ++i) {
    s += beta[i];
    if (s < 0) return false;
  }
  return s == 0;
}

StabilizationReport stabilizationCheck(int M, int N, int r, const Weight& beta, int l) {
  if (r < 1 || r > M) throw Error("stabilization needs 1 <= r <= M");
  if (!inPositiveRootCone(beta)) throw Error("beta is not in the positive root cone");
  if (character(Weight::kVarpi(M, N, r, l)).multiplicity(Weight::kVarpi(M, N, r, l) - beta) == 0) {
    throw Error("weight space of L(l varpi_r) is zero");
  }
  StabilizationReport rep;
  for (int k = r * l; k <= r * l + 3; ++k) {
    Weight top = Weight::kVarpi(M, N, r, k);
    rep.multiplicities.emplace_back(k, character(top).multiplicity(top - beta));
  }
  for (const auto& [k, m] : rep.multiplicities) rep.pass = rep.pass && m == rep.multiplicities.front().second;
  return rep;
}

Diagram semiInfiniteShape(int M, int N, int r, int k) {
  if (r < 1 || r >= M + N) throw Error("r outside I_0");
  Diagram Y{M, N, {}};
  if (r <= M) {
    Y.rows.assign(r, k);
  } else {
    Y.rows.assign(k, M + N - r);
  }
  return Y;
}

SemiInfiniteTableau piK(const Tableau& g, int M, int N, int r, int k) {
  if (!(g.shape == semiInfiniteShape(M, N, r, k))) throw Error("tableau has the wrong shape");
  SemiInfiniteTableau f{r, k, {}};
  for (size_t i = 0; i < g.shape.rows.size(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= g.shape.rows[i]; ++j) row.push_back(g.at(static_cast<int>(i) + 1, j));
    f.grid.push_back(row);
  }
  if (r > M) {
    std::vector<int> last;
    for (int j = 1; j <= M + N - r; ++j) last.push_back(r + j);
    f.grid.push_back(last);
  }
  return f;
}

std::vector<SemiInfiniteTableau> semiInfiniteTableaux(int M, int N, int r, int k) {
  std::vector<SemiInfiniteTableau> out;
  for (const auto& g : enumerateTableaux(semiInfiniteShape(M, N, r, k))) out.push_back(piK(g, M, N, r, k));
  return out;
}

SemiInfiniteTableau embedSemiInfinite(const SemiInfiniteTableau& f, int M, int N, int k) {
  if (k < f.k) throw Error("cannot embed into a smaller window");
  SemiInfiniteTableau g = f;
  g.k = k;
  if (f.r <= M) {
    for (int i = 0; i < f.r; ++i) g.grid[i].insert(g.grid[i].begin(), k - f.k, i + 1);
  } else {
    std::vector<int> last = g.grid.back();
    g.grid.insert(g.grid.end(), k - f.k, last);
  }
  (void)N;
  return g;
}

}  // namespace skr
