#include "doctest.h"

#include "skr/asymptotics.hpp"
#include "skr/lweights.hpp"

#include <fmt/format.h>

using namespace skr;

namespace {
Scalar P(const char* s) { return Scalar::parse(s); }
const Scalar kA = Scalar::var(var::a);

std::string why(const RttReport& r) {
  return fmt::format("{} {},{},{},{} {}", r.relation, r.index[0], r.index[1], r.index[2], r.index[3], r.residual);
}

// sum of c * E_ij over a 4-dimensional space, 1-based
GradedMatrix mat(const SpacePtr& V, std::initializer_list<std::tuple<int, int, const char*>> entries) {
  GradedMatrix m(V, V);
  for (auto [i, j, c] : entries) m.addTo(i - 1, j - 1, P(c));
  return m;
}

void checkMatrix(const Representation& rep, int i, int j, const GradedMatrix& expected) {
  CAPTURE(i);
  CAPTURE(j);
  INFO(rep.S(i, j).json());
  CHECK(rep.S(i, j) == expected);
}
}  // namespace

TEST_CASE("gl(2,1) families satisfy RTT for kappa = q, q^2 and symbolic kappa") {
  for (auto v : {Variant::minus, Variant::plus}) {
    auto p = gl21Family(v, kA);
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(k);
      auto r = checkRTT(atLevel(p, k));
      INFO(why(r));
      CHECK(r.pass);
    }
    auto r = checkRTT(p.rep);
    INFO(why(r));
    CHECK(r.pass);
  }
}

TEST_CASE("displayed entries of the families") {
  auto m = gl21Family(Variant::minus, kA);
  auto V = m.rep.space;
  checkMatrix(m.rep, 2, 1, mat(V, {{3, 2, "z*a*(q - q^-1)^2*kappa^-1"}}));
  auto p = gl21Family(Variant::plus, kA);
  checkMatrix(p.rep, 2, 3, mat(p.rep.space, {{1, 2, "kappa"}, {3, 4, "kappa"}}));
  // T = -z^-1 a^-1 kappa^-2 S for the shifted family
  CHECK(p.rep.T(1, 1) == P("-z^-1*a^-1*kappa^-2") * p.rep.S(1, 1));
  CHECK(atLevel(p, 2).space->weight(0) == Weight(2, 1, {2, 2, 0}));
}

TEST_CASE("members of the plus family have the k-free normalized q-character") {
  auto p = gl21Family(Variant::plus, kA);
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    auto chi = normalize(ellDecompose(atLevel(p, k)));
    CHECK(chi == krNormalized(2, 1, 2, k, kA));
  }
  auto m = gl21Family(Variant::minus, kA);
  for (int k = 1; k <= 2; ++k) {
    CHECK(normalize(ellDecompose(atLevel(m, k))) == normalize(ellDecompose(krModule(2, 1, 2, k, kA))));
  }
}

TEST_CASE("tilde and hat generators") {
  auto m = gl21Family(Variant::minus, kA);
  CHECK(kappaExponents(tildeGenerators(m)) == std::set<int>{-2, 0});
  auto p = gl21Family(Variant::plus, kA);
  CHECK(kappaExponents(hatGenerators(p)) == std::set<int>{0, 2});
  auto tl = tildeGenerators(m);
  auto hat = hatGenerators(p);
  for (int i = 1; i <= 3; ++i) {
    auto id = GradedMatrix::identity(m.rep.space);
    CHECK(tl[(i - 1) * 3 + (i - 1)].map([](const Scalar& x) { return x.substitute(var::z, Scalar()); }) == id);
    CHECK(hat[(i - 1) * 3 + (i - 1)].map([](const Scalar& x) { return x.substitute(var::z, Scalar()); }) == id);
  }
}

TEST_CASE("the negative limit") {
  auto rm = limitMinus(gl21Family(Variant::minus, kA));
  auto V = rm.space;
  checkMatrix(rm, 1, 1, mat(V, {{1, 1, "1"}, {2, 2, "1"}, {3, 3, "q^-1"}, {4, 4, "q^-1"}}));
  checkMatrix(rm, 2, 2, mat(V, {{1, 1, "1"}, {3, 3, "1"}, {2, 2, "q^-1"}, {4, 4, "q^-1"}}));
  checkMatrix(rm, 3, 3, mat(V, {{1, 1, "1 - z*a"}, {2, 2, "q^-1 - z*a*q"}, {3, 3, "q^-1 - z*a*q"}, {4, 4, "q^-2 - z*a*q^2"}}));
  checkMatrix(rm, 1, 2, mat(V, {{2, 3, "1"}}));
  checkMatrix(rm, 1, 3, mat(V, {{2, 4, "q^-1/(q - q^-1)"}, {1, 3, "-q^-1/(q - q^-1)"}}));
  checkMatrix(rm, 2, 3, mat(V, {{1, 2, "q^-1"}, {3, 4, "q^-2"}}));
  checkMatrix(rm, 2, 1, GradedMatrix(V, V));
  checkMatrix(rm, 3, 1, mat(V, {{4, 2, "z*a*q^2*(q - q^-1)^2"}, {3, 1, "-z*a*q*(q - q^-1)^2"}}));
  checkMatrix(rm, 3, 2, mat(V, {{2, 1, "z*a*q*(q - q^-1)"}, {4, 3, "z*a*q^3*(q - q^-1)"}}));
  auto r = checkRTT(rm);
  INFO(why(r));
  CHECK(r.pass);
}

TEST_CASE("the positive limit") {
  auto rp = limitPlus(gl21Family(Variant::plus, kA));
  auto V = rp.space;
  checkMatrix(rp, 1, 1, mat(V, {{1, 1, "1 - z*a"}, {2, 2, "1 - z*a"}, {3, 3, "q^-1 - z*a*q"}, {4, 4, "q^-1 - z*a*q"}}));
  checkMatrix(rp, 2, 2, mat(V, {{1, 1, "1 - z*a"}, {3, 3, "1 - z*a"}, {2, 2, "q^-1 - z*a*q"}, {4, 4, "q^-1 - z*a*q"}}));
  checkMatrix(rp, 3, 3, mat(V, {{1, 1, "1"}, {2, 2, "q^-1"}, {3, 3, "q^-1"}, {4, 4, "q^-2"}}));
  checkMatrix(rp, 1, 2, mat(V, {{2, 3, "1"}}));
  checkMatrix(rp, 1, 3, mat(V, {{2, 4, "q/(q - q^-1)"}, {1, 3, "-1/(q - q^-1)"}}));
  checkMatrix(rp, 2, 3, mat(V, {{1, 2, "1"}, {3, 4, "1"}}));
  checkMatrix(rp, 2, 1, mat(V, {{3, 2, "z*a*(q - q^-1)^2"}}));
  checkMatrix(rp, 3, 1, mat(V, {{4, 2, "-z*a*q^-2*(q - q^-1)^2"}, {3, 1, "z*a*(q - q^-1)^2"}}));
  checkMatrix(rp, 3, 2, mat(V, {{2, 1, "-z*a*(q - q^-1)"}, {4, 3, "-z*a*q^-1*(q - q^-1)"}}));
  auto r = checkRTT(rp);
  INFO(why(r));
  CHECK(r.pass);
  // highest l-weight (1 - za, 1 - za, 1)
  auto hv = highestLWeightVectors(rp);
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].sDiag == std::vector<Scalar>{P("1 - z*a"), P("1 - z*a"), Scalar(1)});
}

TEST_CASE("generic evaluation") {
  auto p = gl21Family(Variant::plus, kA);
  auto b = Scalar::var(var::b);
  auto rb = genericEval(p, b);
  auto r = checkRTT(rb);
  INFO(why(r));
  CHECK(r.pass);
  auto hv = highestLWeightVectors(rb);
  REQUIRE(hv.size() == 1);
  CHECK(hv[0].sDiag == std::vector<Scalar>{P("b - z*a*b"), P("b - z*a*b"), P("1 - z*a*b^2")});
  // b = q is the first member
  auto k1 = atLevel(p, 1);
  auto bq = genericEval(p, qPow(1));
  for (int i = 0; i < 9; ++i) CHECK(bq.s[i].json() == k1.s[i].json());
  CHECK(normalize(ellDecompose(rb)) == normalize(ellDecompose(limitPlus(p))));
  CHECK(normalize(ellDecompose(rb)) == normalize(ellDecompose(k1)));
}

TEST_CASE("restriction to the gl(2) part") {
  auto rm = limitMinus(gl21Family(Variant::minus, kA));
  auto dm = decomposeRestriction(rm, 2);
  CHECK_FALSE(dm.semisimple);
  CHECK(dm.summands == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
  auto rp = limitPlus(gl21Family(Variant::plus, kA));
  CHECK(decomposeRestriction(rp, 2).semisimple);
}

TEST_CASE("kappa degree windows") {
  auto p = gl21Family(Variant::plus, kA);
  auto au = kappaDegreeAudit(p);
  CHECK(au.pass);
  CHECK(au.lo >= -2);
  CHECK(au.hi <= 3);
  auto diag = kappaExponents({p.rep.S(1, 1), p.rep.S(2, 2), p.rep.S(3, 3)});
  CHECK(diag == std::set<int>{0, 1, 2});
  auto odd = kappaDegreeAudit(flipMN(gl21Family(Variant::minus, kA)));
  CHECK(odd.windowHi == 1);
  CHECK(odd.pass);
  auto bad = p;
  bad.rep.S(1, 2) = P("kappa^4") * bad.rep.S(1, 2);
  auto ba = kappaDegreeAudit(bad);
  CHECK_FALSE(ba.pass);
  CHECK_FALSE(ba.offending.empty());
}

TEST_CASE("transposition of gl(M,N)") {
  auto nat = evaluate(naturalRepFinite(2, 1), kA);
  auto f = flipMN(nat);
  CHECK(f.M == 1);
  CHECK(f.N == 2);
  auto r = checkRTT(f);
  INFO(why(r));
  CHECK(r.pass);
  auto ff = flipMN(f);
  for (int i = 0; i < 9; ++i) {
    CHECK(ff.s[i] == nat.s[i]);
    CHECK(ff.t[i] == nat.t[i]);
  }
  // the image of rho^- has an L^+ type highest l-weight at r = 1
  auto fm = flipMN(limitMinus(gl21Family(Variant::minus, kA)));
  auto r2 = checkRTT(fm);
  INFO(why(r2));
  CHECK(r2.pass);
  auto hv = highestLWeightVectors(fm);
  REQUIRE(hv.size() == 1);
  std::vector<Scalar> shape;
  for (const auto& s : hv[0].sDiag) shape.push_back(s / s.substitute(var::z, Scalar()));
  CHECK(shape == std::vector<Scalar>{P("1 - z*a"), Scalar(1), Scalar(1)});
}

TEST_CASE("gl(1,1) prime family") {
  auto V = gl11Family(kA, P("b"));
  CHECK(V.S(2, 1) == GradedMatrix::unit(V.space, 1, 0, P("-z/(1 - z*b)")));
  CHECK(checkRTT(V).pass);
  auto W = gl11Family(P("c"), P("d"));
  auto chi = toAMonomials(normalize(ellDecompose(tensor(V, W))));
  auto one = EllWeight::unit(1, 1, EllWeight::Kind::A);
  auto x = EllWeight::a(1, 1, 1, kA, 1, -1), y = EllWeight::a(1, 1, 1, P("c"), 1, -1);
  QCharacter expected;
  expected.M = 1;
  expected.N = 1;
  for (const auto& w : {one, x, y, x * y}) expected.add(w);
  CHECK(chi == expected);
}
