#include "doctest.h"

#include "skr/superlinalg.hpp"

#include <random>

using namespace skr;

namespace {

SpacePtr natural(int M, int N) { return makeSpace(SuperSpace::natural(M, N)); }

GradedMatrix E(const SpacePtr& V, int i, int j) { return GradedMatrix::unit(V, i - 1, j - 1); }

// Brute-force expansion of (a (x) b)(v_j (x) w_l) straight from the sign rule.
GradedMatrix tensorByHand(const GradedMatrix& a, const GradedMatrix& b) {
  int n = a.cols(), m = b.cols();
  auto VW = makeSpace(tensor(*a.source(), *b.source()));
  GradedMatrix out(VW);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < m; ++l) {
      int sign = 1;
      if (b.parity() == 1 && a.source()->parity(j) == 1) sign = -1;
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
          Scalar v = a.get(i, j) * b.get(k, l);
          if (!v.isZero()) out.set(i * m + k, j * m + l, Scalar(sign) * v);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("matmul examples") {
  auto V = makeSpace(SuperSpace::natural(2, 1));
  CHECK(E(V, 1, 2) * E(V, 2, 3) == E(V, 1, 3));
  CHECK((E(V, 1, 2) * E(V, 1, 2)).isZero());
  auto W = natural(1, 1);
  Scalar q = Scalar::var("q");
  GradedMatrix A = q * E(W, 1, 1) + E(W, 2, 2);
  GradedMatrix B = q.inv() * E(W, 1, 1) + E(W, 2, 2);
  CHECK(A * B == GradedMatrix::identity(W));
}

TEST_CASE("graded action on tensors") {
  auto V = natural(1, 1);
  GradedMatrix e11 = E(V, 1, 1);
  auto VV = makeSpace(tensor(*V, *V));
  CHECK(gradedTensor(e11, e11) == GradedMatrix::unit(VV, 0, 0));

  GradedMatrix id = GradedMatrix::identity(V);
  GradedMatrix t = gradedTensor(id, E(V, 2, 1));
  // v_2 (x) v_1 is basis index 2; it maps to -(v_2 (x) v_2) = index 3.
  CHECK(t.get(3, 2) == Scalar(-1));
  CHECK(t.get(1, 0) == Scalar(1));
  CHECK(t.nonzeros() == 2);
  CHECK(t == tensorByHand(id, E(V, 2, 1)));

  GradedMatrix s = gradedTensor(E(V, 1, 2), E(V, 1, 2));
  CHECK((s * s).isZero());
  CHECK(s == tensorByHand(E(V, 1, 2), E(V, 1, 2)));
}

TEST_CASE("super interchange law on random unit matrices") {
  std::mt19937 rng(3);
  for (auto [M, N] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto V = natural(M, N);
    std::uniform_int_distribution<int> idx(1, M + N);
    for (int t = 0; t < 60; ++t) {
      GradedMatrix a = E(V, idx(rng), idx(rng)), b = E(V, idx(rng), idx(rng));
      GradedMatrix c = E(V, idx(rng), idx(rng)), d = E(V, idx(rng), idx(rng));
      int sign = (b.parity() * c.parity()) ? -1 : 1;
      CHECK(gradedTensor(a, b) * gradedTensor(c, d) == Scalar(sign) * gradedTensor(a * c, b * d));
      CHECK(gradedTensor(a, b) == tensorByHand(a, b));
    }
  }
}

TEST_CASE("kernel") {
  auto V = makeSpace(SuperSpace::even(2));
  CHECK(kernel(GradedMatrix::identity(V)).empty());
  CHECK(kernel(GradedMatrix(V)).size() == 2);
  auto k = kernel(GradedMatrix::unit(V, 0, 1));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{Scalar(1), Scalar()});
}

TEST_CASE("kernel and rank are consistent") {
  auto V = makeSpace(SuperSpace::even(4));
  GradedMatrix A(V);
  Scalar q = Scalar::var("q"), z = Scalar::var("z");
  A.set(0, 0, q);
  A.set(0, 1, z);
  A.set(1, 0, q * q);
  A.set(1, 1, q * z);
  A.set(2, 3, Scalar(1) - z);
  auto ker = kernel(A);
  CHECK(static_cast<int>(ker.size()) + rank(A) == 4);
  for (const auto& v : ker) CHECK(isZeroVec(A.apply(v)));
}

TEST_CASE("inverse") {
  auto V = makeSpace(SuperSpace::even(3));
  GradedMatrix A(V);
  Scalar q = Scalar::var("q"), z = Scalar::var("z");
  A.set(0, 0, q);
  A.set(0, 2, z);
  A.set(1, 1, Scalar(1) - z * q);
  A.set(2, 0, Scalar(2));
  A.set(2, 2, q * q);
  CHECK(A * inverse(A) == GradedMatrix::identity(V));
  CHECK_THROWS_AS(inverse(GradedMatrix(V)), Error);
}

TEST_CASE("subspace basis") {
  SubspaceBasis B(3);
  CHECK(B.insert({Scalar(1), Scalar(2), Scalar()}));
  CHECK(B.insert({Scalar(), Scalar(1), Scalar(1)}));
  CHECK_FALSE(B.insert({Scalar(1), Scalar(3), Scalar(1)}));
  CHECK(B.dim() == 2);
  CHECK(B.contains({Scalar(2), Scalar(4), Scalar()}));
}
