#include "doctest.h"

#include "skr/errors.hpp"
#include "skr/youngcomb.hpp"

#include <algorithm>
#include <set>

using namespace skr;

namespace {

Weight W(int M, int N, std::vector<int> c) { return Weight(M, N, std::move(c)); }

// Every weight of height h that is dominant.
std::vector<Weight> dominantOfHeight(int M, int N, int h) {
  std::vector<Weight> out;
  Weight w(M, N);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > M + N) {
      if (left == 0 && isDominant(w)) out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[i] = v;
      self(self, i + 1, left - v);
    }
    w[i] = 0;
  };
  rec(rec, 1, h);
  return out;
}

// All maps Y -> {1..n}, filtered by (T1)-(T3) read off literally, T1 over all comparable pairs.
std::vector<std::vector<int>> bruteTableaux(const Diagram& Y, int M, int n) {
  auto cells = Y.cellList();
  std::vector<std::vector<int>> out;
  std::vector<int> f(cells.size(), 1);
  while (true) {
    bool ok = true;
    for (size_t a = 0; a < cells.size() && ok; ++a) {
      for (size_t b = 0; b < cells.size() && ok; ++b) {
        auto [i, j] = cells[a];
        auto [i2, j2] = cells[b];
        if (i <= i2 && j <= j2 && f[a] > f[b]) ok = false;
        if (i2 == i + 1 && j2 == j && f[a] <= M && f[a] >= f[b]) ok = false;
        if (i2 == i && j2 == j + 1 && f[a] >= M + 1 && f[a] >= f[b]) ok = false;
      }
    }
    if (ok) out.push_back(f);
    size_t p = 0;
    while (p < f.size() && f[p] == n) f[p++] = 1;
    if (p == f.size()) break;
    ++f[p];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of standard Young tableaux (hook length formula).
long standardCount(const Diagram& Y) {
  long num = 1, den = 1;
  int n = Y.cells();
  for (int i = 2; i <= n; ++i) num *= i;
  for (auto [i, j] : Y.cellList()) {
    int arm = Y.rows[i - 1] - j, leg = Y.columnLength(j) - i;
    den *= arm + leg + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("dominance") {
  CHECK(isDominant(W(2, 1, {2, 0, 0})));
  CHECK_FALSE(isDominant(W(2, 1, {0, 0, 1})));
  CHECK(isDominant(W(2, 1, {0, 0, 0})));
  CHECK(isDominant(W(2, 1, {1, 1, 3})));
  CHECK_FALSE(isDominant(W(1, 2, {1, 1, 2})));
}

TEST_CASE("diagrams") {
  Diagram Y = diagramOf(Weight::kVarpi(2, 1, 2, 3));
  CHECK(Y.rows == std::vector<int>{3, 3});
  CHECK(diagramOf(Weight(2, 2)).rows.empty());
  for (auto [M, N] : {std::pair{2, 2}, {1, 1}, {2, 1}}) {
    for (int h = 0; h <= 6; ++h) {
      for (const auto& l : dominantOfHeight(M, N, h)) {
        Diagram D = diagramOf(l);
        CHECK(D.valid());
        CHECK(D.cells() == h);
        CHECK(ymInverse(D, M, N) == l);
      }
    }
  }
}

TEST_CASE("tableau enumeration against brute force") {
  for (auto [M, N] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    for (int h = 0; h <= 4; ++h) {
      for (const auto& l : dominantOfHeight(M, N, h)) {
        Diagram Y = diagramOf(l);
        std::vector<std::vector<int>> got;
        for (const auto& t : enumerateTableaux(Y)) got.push_back(t.entries);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got == bruteTableaux(Y, M, M + N));
      }
    }
  }
  CHECK(enumerateTableaux(Diagram{2, 1, {}}).size() == 1);
  CHECK_THROWS_AS(enumerateTableaux(Diagram{2, 1, {40, 40}}), CapExceeded);
}

TEST_CASE("column of height k for gl(1,2)") {
  for (int k = 1; k <= 6; ++k) {
    Diagram Y{1, 2, std::vector<int>(k, 1)};
    CHECK(enumerateTableaux(Y).size() == static_cast<size_t>(2 * k + 1));
  }
}

TEST_CASE("gl(2,1) rectangles of two rows have four tableaux") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(enumerateTableaux(diagramOf(Weight::kVarpi(2, 1, 2, k))).size() == 4);
    CHECK(character(Weight::kVarpi(2, 1, 2, k)).dim() == 4);
  }
}

TEST_CASE("characters") {
  auto ch = character(W(2, 1, {1, 0, 0}));
  CHECK(ch.mult.size() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(ch.multiplicity(Weight::eps(2, 1, i)) == 1);
  auto c0 = character(Weight(2, 1));
  CHECK(c0.dim() == 1);
  CHECK(c0.multiplicity(Weight(2, 1)) == 1);
  // Highest weight has multiplicity one.
  for (int h = 1; h <= 5; ++h) {
    for (const auto& l : dominantOfHeight(2, 2, h)) CHECK(character(l).multiplicity(l) == 1);
  }
}

TEST_CASE("Schur-Weyl dimension count") {
  // sum over dominant lambda of height s of f^lambda dim L(lambda) = (M+N)^s.
  for (auto [M, N] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (int s = 1; s <= 5; ++s) {
      long total = 0, expect = 1;
      for (int i = 0; i < s; ++i) expect *= M + N;
      for (const auto& l : dominantOfHeight(M, N, s)) total += standardCount(diagramOf(l)) * character(l).dim();
      CHECK(total == expect);
    }
  }
}

TEST_CASE("GT patterns of 2 eps_1 for gl(2,1)") {
  auto ps = gtPatterns(W(2, 1, {2, 0, 0}));
  auto e = [](int a, int b, int c) { return W(2, 1, {a, b, c}); };
  std::set<std::vector<Weight>> got;
  for (const auto& p : ps) got.insert(p.levels);
  std::set<std::vector<Weight>> expect = {
      {e(2, 0, 0), e(2, 0, 0), e(2, 0, 0)}, {e(1, 0, 0), e(2, 0, 0), e(2, 0, 0)},
      {e(1, 0, 0), e(1, 0, 0), e(2, 0, 0)}, {e(0, 0, 0), e(2, 0, 0), e(2, 0, 0)},
      {e(0, 0, 0), e(1, 0, 0), e(2, 0, 0)}};
  CHECK(ps.size() == 5);
  CHECK(got == expect);
  CHECK(got.count({e(0, 0, 0), e(0, 0, 0), e(2, 0, 0)}) == 0);
  CHECK_THROWS_AS(gtToTableau(GTPattern{{e(0, 0, 0), e(0, 0, 0), e(2, 0, 0)}}, 2, 1), Error);
}

TEST_CASE("GT bijection round trip") {
  for (auto [M, N] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
    for (int h = 0; h <= 4; ++h) {
      for (const auto& l : dominantOfHeight(M, N, h)) {
        auto ts = enumerateTableaux(diagramOf(l));
        auto ps = gtPatterns(l);
        CHECK(ts.size() == ps.size());
        CHECK(std::set<GTPattern>(ps.begin(), ps.end()).size() == ps.size());
        for (const auto& t : ts) CHECK(gtToTableau(tableauToGT(t, M, N), M, N) == t);
        for (const auto& p : ps) {
          for (int k = 2; k <= M + N; ++k) {
            auto S = branching(p.levels[k - 1], k);
            CHECK(std::binary_search(S.begin(), S.end(), p.levels[k - 2]));
          }
        }
      }
    }
  }
}

TEST_CASE("classical interlacing when N = 0") {
  for (const auto& l : dominantOfHeight(3, 0, 5)) {
    for (const auto& p : gtPatterns(l)) {
      for (int k = 2; k <= 3; ++k) {
        for (int i = 1; i < k; ++i) {
          CHECK(p.levels[k - 1][i] >= p.levels[k - 2][i]);
          CHECK(p.levels[k - 2][i] >= p.levels[k - 1][i + 1]);
        }
      }
    }
  }
}

TEST_CASE("branching") {
  // Projection of the five patterns: level 2 is never 0.
  CHECK(branching(W(2, 1, {2, 0, 0}), 3) == std::vector<Weight>{W(2, 1, {1, 0, 0}), W(2, 1, {2, 0, 0})});
  CHECK(branching(W(2, 1, {2, 0, 0}), 2) == std::vector<Weight>{W(2, 1, {0, 0, 0}), W(2, 1, {1, 0, 0}), W(2, 1, {2, 0, 0})});
  CHECK(branching(Weight(2, 2), 3) == std::vector<Weight>{Weight(2, 2)});
}

TEST_CASE("lowest weights") {
  CHECK(lowestWeight(W(2, 1, {1, 0, 0})) == W(2, 1, {0, 0, 1}));
  CHECK(lowestWeight(W(2, 1, {2, 0, 0})) == W(2, 1, {0, 1, 1}));
  CHECK(lowestWeight(W(2, 1, {2, 0, 0})) != lowestWeight(W(2, 1, {1, 0, 0})) * 2);
  CHECK(dualHighest(W(2, 1, {1, 0, 0})) == W(2, 1, {0, 0, -1}));
  for (const auto& l : dominantOfHeight(3, 0, 4)) {
    Weight rev(3, 0, {l[3], l[2], l[1]});
    CHECK(lowestWeight(l) == rev);
  }
  // lambda_b is a weight of L(lambda), and every weight lies above it.
  for (auto [M, N] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
    for (int h = 1; h <= 4; ++h) {
      for (const auto& l : dominantOfHeight(M, N, h)) {
        auto ch = character(l);
        Weight b = lowestWeight(l);
        CHECK(ch.multiplicity(b) == 1);
        for (const auto& [w, m] : ch.mult) CHECK(inPositiveRootCone(w - b));
      }
    }
  }
}

TEST_CASE("stabilization of weight multiplicities") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& [w, m] : character(Weight::kVarpi(2, 1, 1, k)).mult) CHECK(m == 1);
  }
  auto rep = stabilizationCheck(2, 1, 2, Weight::alpha(2, 1, 2), 1);
  CHECK(rep.pass);
  CHECK(rep.multiplicities.size() == 4);
  CHECK(stabilizationCheck(2, 2, 1, Weight(2, 2), 1).pass);
  CHECK_THROWS_AS(stabilizationCheck(2, 1, 1, Weight::alpha(2, 1, 1) * 3, 1), Error);
}

TEST_CASE("semi-infinite tableaux") {
  for (int k = 1; k <= 5; ++k) {
    auto B = semiInfiniteTableaux(2, 1, 2, k);
    CHECK(B.size() == 4);
    SemiInfiniteTableau f0{2, k, {std::vector<int>(k, 1), std::vector<int>(k, 2)}};
    CHECK(std::find(B.begin(), B.end(), f0) != B.end());
  }
  for (auto [r, M, N] : {std::array{1, 2, 1}, {2, 2, 1}, {2, 1, 2}, {3, 2, 2}}) {
    auto B1 = semiInfiniteTableaux(M, N, r, 1);
    auto B2 = semiInfiniteTableaux(M, N, r, 2);
    std::set<SemiInfiniteTableau> s2(B2.begin(), B2.end());
    for (const auto& f : B1) CHECK(s2.count(embedSemiInfinite(f, M, N, 2)) == 1);
  }
  // r > M: column of height k+1 for gl(1,2), r = 2, ends in r+1 = 3.
  auto B = semiInfiniteTableaux(1, 2, 2, 3);
  CHECK(B.size() == 7);
  for (const auto& f : B) CHECK(f.grid.back() == std::vector<int>{3});
}
