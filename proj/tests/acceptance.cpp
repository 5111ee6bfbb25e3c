// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "skr/asymptotics.hpp"
#include "skr/lweights.hpp"
#include "skr/repmodules.hpp"
#include "skr/rmatrix.hpp"
#include "skr/youngcomb.hpp"

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace skr;

namespace {

const std::vector<std::pair<int, int>> kSizes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

Scalar P(const char* s) { return Scalar::parse(s); }
const Scalar kA = Scalar::var(var::a);
const Scalar kB = Scalar::var(var::b);

struct Tally {
  int checks = 0;
  int failed = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed++ == 0) first = what;
  }
  std::string summary() const {
    return failed == 0 ? fmt::format("{} checks", checks) : fmt::format("{}/{} failed, first: {}", failed, checks, first);
  }
};

QCharacter sumOf(int M, int N, const std::vector<EllWeight>& ws) {
  QCharacter c;
  c.M = M;
  c.N = N;
  for (const auto& w : ws) c.add(w);
  return c;
}

EllWeight Ainv(int M, int N, int i, const Scalar& x, int n) { return EllWeight::a(M, N, i, x, n, -1); }

GradedMatrix mat(const SpacePtr& V, std::initializer_list<std::tuple<int, int, const char*>> entries) {
  GradedMatrix m(V, V);
  for (auto [i, j, c] : entries) m.addTo(i - 1, j - 1, P(c));
  return m;
}

// ---------------------------------------------------------------- 1

void rMatrixSuite(Tally& t) {
  std::set<int> conventions;
  for (auto [M, N] : kSizes) {
    auto R = perkSchultz(M, N);
    t.expect(checkIceRule(R).pass, fmt::format("ice rule ({},{})", M, N));
    auto y = probeYangBaxter(R);
    t.expect(y.gradedPass != y.plainPass, fmt::format("exactly one YBE convention ({},{})", M, N));
    if (y.convention) conventions.insert(static_cast<int>(*y.convention));
    t.expect(checkLinearDecomposition(R), fmt::format("R = zR - wR' ({},{})", M, N));
  }
  t.expect(conventions.size() == 1, "same convention for all sizes");
}

// ---------------------------------------------------------------- 2

void inverseSuite(Tally& t) {
  for (auto [M, N] : kSizes) {
    auto m = mMatrix(M, N);
    t.expect(m * mInverseClosedForm(M, N) == GradedMatrix::identity(m.target()), fmt::format("M M^-1 ({},{})", M, N));
    auto th = thetas(M, N);
    t.expect(th[1].isOne(), "theta_1 = 1");
    for (int i = 1; i < M + N; ++i) {
      t.expect(th[i + 1] == (qi(M, i + 1) * qi(M, i)).inv() * th[i], fmt::format("theta_{} ({},{})", i + 1, M, N));
    }
  }
}

// ---------------------------------------------------------------- 3, 9

struct Named {
  std::string name;
  Representation rep;
};

std::vector<Named> rttModules() {
  std::vector<Named> out;
  for (auto [M, N] : kSizes) {
    auto fin = naturalRepFinite(M, N);
    auto Va = evaluate(fin, kA);
    out.push_back({fmt::format("V_a ({},{})", M, N), Va});
    out.push_back({fmt::format("V_a (x) V_b ({},{})", M, N), tensor(Va, evaluate(fin, kB))});
    out.push_back({fmt::format("V_a (x) V_a ({},{})", M, N), tensor(Va, Va)});
  }
  out.push_back({"gl(1,1) prime", gl11Family(kA, kB)});
  for (auto v : {Variant::minus, Variant::plus}) {
    auto p = gl21Family(v, kA);
    std::string tag = v == Variant::minus ? "minus" : "plus";
    out.push_back({"gl(2,1) " + tag + " kappa=q", atLevel(p, 1)});
    out.push_back({"gl(2,1) " + tag + " kappa=q^2", atLevel(p, 2)});
    out.push_back({"gl(2,1) " + tag + " kappa symbolic", p.rep});
  }
  out.push_back({"rho^-", limitMinus(gl21Family(Variant::minus, kA))});
  out.push_back({"rho^+", limitPlus(gl21Family(Variant::plus, kA))});
  out.push_back({"rho^b", genericEval(gl21Family(Variant::plus, kA), kB)});
  return out;
}

void rttSuite(Tally& t, const std::vector<Named>& mods) {
  for (const auto& m : mods) {
    auto r = checkRTT(m.rep);
    t.expect(r.pass, fmt::format("{}: {} {}", m.name, r.relation, r.residual));
  }
}

void centralitySuite(Tally& t, std::vector<Named> mods) {
  for (int k = 1; k <= 3; ++k) mods.push_back({fmt::format("W^(1)_{}", k), krModule(2, 1, 1, k, kA)});
  for (int k = 1; k <= 2; ++k) mods.push_back({fmt::format("W^(2)_{}", k), krModule(2, 1, 2, k, kA)});
  mods.push_back({"gl(1,2) W^(2)_2", krModule(1, 2, 2, 2, kA)});
  mods.push_back({"ev L(2eps1)^*", evaluate(dual(simpleFinite(Weight(2, 1, {2, 0, 0}))), kA)});
  mods.push_back({"flipped rho^-", flipMN(limitMinus(gl21Family(Variant::minus, kA)))});
  for (const auto& m : mods) {
    for (int k = 1; k <= m.rep.n(); ++k) {
      auto c = checkCentrality(m.rep, k);
      t.expect(c.pass, fmt::format("{} C_{}: {}", m.name, k, c.failure));
    }
  }
}

// ---------------------------------------------------------------- 4

void combinatoricsSuite(Tally& t) {
  Weight twoEps(2, 1, {2, 0, 0});
  auto gt = gtPatterns(twoEps);
  auto W = [](std::vector<int> c) { return Weight(2, 1, std::move(c)); };
  std::vector<GTPattern> listed = {
      {{W({2, 0, 0}), W({2, 0, 0}), W({2, 0, 0})}}, {{W({1, 0, 0}), W({2, 0, 0}), W({2, 0, 0})}},
      {{W({1, 0, 0}), W({1, 0, 0}), W({2, 0, 0})}}, {{W({0, 0, 0}), W({2, 0, 0}), W({2, 0, 0})}},
      {{W({0, 0, 0}), W({1, 0, 0}), W({2, 0, 0})}}};
  std::set<GTPattern> got(gt.begin(), gt.end());
  t.expect(gt.size() == 5, "|GT(2eps1)| = 5");
  t.expect(got == std::set<GTPattern>(listed.begin(), listed.end()), "the five listed patterns");
  t.expect(got.count(GTPattern{{W({0, 0, 0}), W({0, 0, 0}), W({2, 0, 0})}}) == 0, "(0,0,2eps1) absent");

  for (int k = 1; k <= 6; ++k) {
    auto ts = enumerateTableaux(Diagram{1, 2, std::vector<int>(k, 1)});
    t.expect(static_cast<int>(ts.size()) == 2 * k + 1, fmt::format("column of height {} for gl(1,2)", k));
  }
  t.expect(lowestWeight(Weight::eps(2, 1, 1)) == Weight::eps(2, 1, 3), "(eps1)_b = eps3");
  t.expect(lowestWeight(twoEps) == Weight(2, 1, {0, 1, 1}), "(2eps1)_b = eps2 + eps3");

  for (auto [M, N] : kSizes) {
    int n = M + N;
    for (int r = 1; r <= M; ++r) {
      // beta = sum n_i alpha_i with sum n_i <= 3
      std::vector<int> c(n - 1, 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
          Weight beta(M, N);
          for (int j = 1; j < n; ++j) beta = beta + Weight::alpha(M, N, j) * c[j - 1];
          for (int l = 1; l <= 2; ++l) {
            if (character(Weight::kVarpi(M, N, r, l)).multiplicity(Weight::kVarpi(M, N, r, l) - beta) == 0) continue;
            auto s = stabilizationCheck(M, N, r, beta, l);
            t.expect(s.pass, fmt::format("stabilization ({},{}) r={} beta={} l={}", M, N, r, beta.str(), l));
          }
          return;
        }
        for (int v = 0; v <= left; ++v) {
          c[i] = v;
          rec(i + 1, left - v);
        }
        c[i] = 0;
      };
      rec(0, 3);
    }
  }
}

// ---------------------------------------------------------------- 5

void qcharSuite(Tally& t) {
  auto one21 = EllWeight::unit(2, 1, EllWeight::Kind::A);
  for (int k = 1; k <= 4; ++k) {
    auto a23 = Ainv(2, 1, 2, kA, 3), a11 = Ainv(2, 1, 1, kA, 1), a21 = Ainv(2, 1, 2, kA, 1);
    t.expect(toAMonomials(krNormalized(2, 1, 2, k, kA)) == sumOf(2, 1, {one21, a23, a11 * a23, a11 * a21 * a23}),
             fmt::format("gl(2,1) r=2 k={}", k));
    std::vector<EllWeight> ws{one21};
    EllWeight chain = one21;
    for (int l = 1; l <= k; ++l) {
      chain = chain * Ainv(2, 1, 1, kA, 2 * l - 1);
      ws.push_back(chain);
      ws.push_back(chain * a21);
    }
    t.expect(toAMonomials(krNormalized(2, 1, 1, k, kA)) == sumOf(2, 1, ws), fmt::format("gl(2,1) r=1 k={}", k));
    // the same from the C_i(z) eigenvalues on W^{(r)}_{k, a q^{2k}}
    if (k <= 3) {
      for (int r = 1; r <= 2; ++r) {
        t.expect(normalize(ellDecompose(krModule(2, 1, r, k, kA * qPow(2 * k)))) == krNormalized(2, 1, r, k, kA),
                 fmt::format("gl(2,1) module r={} k={}", r, k));
      }
    }
  }

  // gl(1,1): 1 + A_{1,aq}^-1 from tableaux and from the module
  auto one11 = EllWeight::unit(1, 1, EllWeight::Kind::A);
  auto prime = [&](const Scalar& x) { return sumOf(1, 1, {one11, Ainv(1, 1, 1, x, 1)}); };
  t.expect(toAMonomials(normalize(qcharEval(Weight::eps(1, 1, 1), kA * qPow(2)))) == prime(kA), "gl(1,1) prime, tableaux");
  t.expect(toAMonomials(normalize(ellDecompose(gl11Family(kA, kB)))) == prime(kA), "gl(1,1) prime, module");
  t.expect(toAMonomials(normalize(ellDecompose(gl11Family(kA, kA * qPow(5))))) == prime(kA), "prime depends on a only");
  Scalar c = P("c"), d = P("d"), e = P("e");
  struct Case {
    std::vector<Scalar> as, bs;
  };
  for (const auto& cs : std::vector<Case>{{{kA, c}, {kB, d}}, {{kA, c}, {kB, Scalar()}}, {{kA, c, e}, {kB, d, Scalar()}},
                                          {{kA, kA}, {kB, d}}}) {
    QCharacter formula = QCharacter::unit(1, 1), tableaux = QCharacter::unit(1, 1);
    formula = toAMonomials(formula);
    Representation V = gl11Family(cs.as[0], cs.bs[0]);
    for (size_t i = 0; i < cs.as.size(); ++i) {
      formula = formula * prime(cs.as[i]);
      tableaux = tableaux * normalize(qcharEval(Weight::eps(1, 1, 1), cs.as[i] * qPow(2)));
      if (i > 0) V = tensor(V, gl11Family(cs.as[i], cs.bs[i]));
    }
    std::string tag = fmt::format("gl(1,1) general, {} factors", cs.as.size());
    t.expect(toAMonomials(tableaux) == formula, tag + ", tableaux");
    t.expect(toAMonomials(normalize(ellDecompose(V))) == formula, tag + ", module");
  }

  // gl(1,2), r = 2: from the dual Gelfand-Tsetlin eigenvalues and from the module
  auto one12 = EllWeight::unit(1, 2, EllWeight::Kind::A);
  for (int k = 1; k <= 4; ++k) {
    std::vector<EllWeight> ws{one12};
    EllWeight chain = one12;
    for (int l = 1; l <= k; ++l) {
      chain = chain * Ainv(1, 2, 2, kA, -2 * l + 1);
      ws.push_back(chain);
      ws.push_back(chain * Ainv(1, 2, 1, kA, 1));
    }
    t.expect(toAMonomials(krNormalized(1, 2, 2, k, kA)) == sumOf(1, 2, ws), fmt::format("gl(1,2) dual k={}", k));
    t.expect(normalize(ellDecompose(krModule(1, 2, 2, k, kA))) == krNormalized(1, 2, 2, k, kA),
             fmt::format("gl(1,2) module k={}", k));
  }
}

// ---------------------------------------------------------------- 6

void oracleSuite(Tally& t) {
  const Scalar twist = (Scalar(1) - P("z*a")).inv(), twistT = (Scalar(1) - P("z^-1*a^-1")).inv();
  for (auto [M, N] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    auto T = naturalRepFinite(M, N);
    for (int p = 1; T.dim() <= 81; ++p) {
      int total = 0;
      for (const auto& [w, S] : simpleConstituents(T)) {
        total += S.dim();
        auto tw = twistBySeries(evaluate(S, kA), twist, twistT);
        t.expect(ellDecompose(tw) == qcharEval(w, kA), fmt::format("({},{}) power {} constituent {}", M, N, p, w.str()));
      }
      t.expect(total == T.dim(), fmt::format("({},{}) power {} is exhausted", M, N, p));
      T = tensor(T, naturalRepFinite(M, N));
    }
  }
}

// ---------------------------------------------------------------- 7

void asymptoticSuite(Tally& t) {
  auto entry = [&](const Representation& rep, int i, int j, const GradedMatrix& m, const char* tag) {
    t.expect(rep.S(i, j) == m, fmt::format("{} s_{}{}", tag, i, j));
  };
  auto rm = limitMinus(gl21Family(Variant::minus, kA));
  auto V = rm.space;
  entry(rm, 1, 1, mat(V, {{1, 1, "1"}, {2, 2, "1"}, {3, 3, "q^-1"}, {4, 4, "q^-1"}}), "rho^-");
  entry(rm, 2, 2, mat(V, {{1, 1, "1"}, {3, 3, "1"}, {2, 2, "q^-1"}, {4, 4, "q^-1"}}), "rho^-");
  entry(rm, 3, 3, mat(V, {{1, 1, "1 - z*a"}, {2, 2, "q^-1 - z*a*q"}, {3, 3, "q^-1 - z*a*q"}, {4, 4, "q^-2 - z*a*q^2"}}),
        "rho^-");
  entry(rm, 1, 2, mat(V, {{2, 3, "1"}}), "rho^-");
  entry(rm, 1, 3, mat(V, {{2, 4, "q^-1/(q - q^-1)"}, {1, 3, "-q^-1/(q - q^-1)"}}), "rho^-");
  entry(rm, 2, 3, mat(V, {{1, 2, "q^-1"}, {3, 4, "q^-2"}}), "rho^-");
  entry(rm, 2, 1, GradedMatrix(V, V), "rho^-");
  entry(rm, 3, 1, mat(V, {{4, 2, "z*a*q^2*(q - q^-1)^2"}, {3, 1, "-z*a*q*(q - q^-1)^2"}}), "rho^-");
  entry(rm, 3, 2, mat(V, {{2, 1, "z*a*q*(q - q^-1)"}, {4, 3, "z*a*q^3*(q - q^-1)"}}), "rho^-");

  auto rp = limitPlus(gl21Family(Variant::plus, kA));
  V = rp.space;
  entry(rp, 1, 1, mat(V, {{1, 1, "1 - z*a"}, {2, 2, "1 - z*a"}, {3, 3, "q^-1 - z*a*q"}, {4, 4, "q^-1 - z*a*q"}}), "rho^+");
  entry(rp, 2, 2, mat(V, {{1, 1, "1 - z*a"}, {3, 3, "1 - z*a"}, {2, 2, "q^-1 - z*a*q"}, {4, 4, "q^-1 - z*a*q"}}), "rho^+");
  entry(rp, 3, 3, mat(V, {{1, 1, "1"}, {2, 2, "q^-1"}, {3, 3, "q^-1"}, {4, 4, "q^-2"}}), "rho^+");
  entry(rp, 1, 2, mat(V, {{2, 3, "1"}}), "rho^+");
  entry(rp, 1, 3, mat(V, {{2, 4, "q/(q - q^-1)"}, {1, 3, "-1/(q - q^-1)"}}), "rho^+");
  entry(rp, 2, 3, mat(V, {{1, 2, "1"}, {3, 4, "1"}}), "rho^+");
  entry(rp, 2, 1, mat(V, {{3, 2, "z*a*(q - q^-1)^2"}}), "rho^+");
  entry(rp, 3, 1, mat(V, {{4, 2, "-z*a*q^-2*(q - q^-1)^2"}, {3, 1, "z*a*(q - q^-1)^2"}}), "rho^+");
  entry(rp, 3, 2, mat(V, {{2, 1, "-z*a*(q - q^-1)"}, {4, 3, "-z*a*q^-1*(q - q^-1)"}}), "rho^+");

  auto p = gl21Family(Variant::plus, kA);
  auto rb = genericEval(p, kB);
  auto k1 = atLevel(p, 1), bq = genericEval(p, qPow(1));
  bool same = true;
  for (size_t i = 0; i < k1.s.size(); ++i) same = same && bq.s[i] == k1.s[i] && bq.t[i] == k1.t[i];
  t.expect(same, "rho^b at b = q is the first member");
  auto hv = highestLWeightVectors(rb);
  t.expect(hv.size() == 1, "rho^b has one highest l-weight vector");
  if (hv.size() == 1) {
    t.expect(hv[0].sDiag == std::vector<Scalar>{P("b - z*a*b"), P("b - z*a*b"), P("1 - z*a*b^2")}, "rho^b s_ii(z) v");
    t.expect(hv[0].tDiag == std::vector<Scalar>{P("b^-1 - z^-1*a^-1*b^-1"), P("b^-1 - z^-1*a^-1*b^-1"),
                                                P("1 - z^-1*a^-1*b^-2")},
             "rho^b t_ii(z) v");
  }

  for (auto v : {Variant::minus, Variant::plus}) {
    auto au = kappaDegreeAudit(gl21Family(v, kA));
    t.expect(au.pass && au.windowLo == -2 && au.windowHi == 3, fmt::format("even window [{}, {}]", au.lo, au.hi));
  }
  auto odd = kappaDegreeAudit(flipMN(gl21Family(Variant::minus, kA)));
  t.expect(odd.pass && odd.windowLo == -2 && odd.windowHi == 1, fmt::format("odd window [{}, {}]", odd.lo, odd.hi));
  auto bad = p;
  bad.rep.S(1, 2) = P("kappa^4") * bad.rep.S(1, 2);
  t.expect(!kappaDegreeAudit(bad).pass, "the audit rejects kappa^4");
}

// ---------------------------------------------------------------- 8

void restrictionSuite(Tally& t) {
  auto dm = decomposeRestriction(limitMinus(gl21Family(Variant::minus, kA)), 2);
  t.expect(dm.exact, "rho^- brute force exhaustive");
  t.expect(!dm.semisimple, "rho^- not semisimple");
  t.expect(dm.summands == std::vector<std::vector<int>>{{0}, {1, 2}, {3}}, "rho^- summands v1 | v2,v3 | v4");
  t.expect(dm.summandSimple == std::vector<bool>{true, false, true}, "rho^- summand v2,v3 is not simple");
  auto dp = decomposeRestriction(limitPlus(gl21Family(Variant::plus, kA)), 2);
  t.expect(dp.exact && dp.semisimple, "rho^+ semisimple");
}

// ---------------------------------------------------------------- 10

void factorizationSuite(Tally& t) {
  for (int k = 1; k <= 3; ++k) {
    auto g = factorizationObstruction(2, 1, 2, k, kA, kB);
    t.expect(g.pass && g.triples > 0, fmt::format("generic b, k={}", k));
  }
  // b = q^-s with 1 <= s < r <= M breaks the factorization
  for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
    for (int r = 2; r <= M; ++r) {
      for (int s = 1; s < r; ++s) {
        for (int k = 1; k <= 3; ++k) {
          auto c = factorizationObstruction(M, N, r, k, kA, qPow(-s));
          t.expect(!c.pass && !c.witnesses.empty(), fmt::format("({},{}) r={} s={} k={}", M, N, r, s, k));
        }
      }
    }
  }
}

// ---------------------------------------------------------------- 11

void cyclicitySuite(Tally& t) {
  for (auto [M, N] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    for (int r = 1; r < M + N; ++r) {
      for (int k = 1; k <= 3; ++k) {
        auto c = fundamentalChain(M, N, r, k, kA);
        t.expect(cyclicityCheck(c.rep, c.top), fmt::format("fundamental ({},{}) r={} k={}", M, N, r, k));
      }
      auto c = krChain(M, N, r, {1, 2, 3}, kA);
      t.expect(cyclicityCheck(c.rep, c.top), fmt::format("kr ({},{}) r={}", M, N, r));
    }
  }
}

}  // namespace

int main() {
  std::vector<Named> mods;
  std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"R-matrix suite", rMatrixSuite},
      {"closed-form inverse", inverseSuite},
      {"RTT suite",
       [&](Tally& t) {
         mods = rttModules();
         rttSuite(t, mods);
       }},
      {"combinatorics", combinatoricsSuite},
      {"q-character identities", qcharSuite},
      {"oracle equivalence", oracleSuite},
      {"asymptotic limits", asymptoticSuite},
      {"restriction structure", restrictionSuite},
      {"Berezinian centrality",
       [&](Tally& t) { centralitySuite(t, mods.empty() ? rttModules() : mods); }},
      {"factorization scan", factorizationSuite},
      {"cyclicity", cyclicitySuite},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.expect(false, fmt::format("exception: {}", e.what()));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.failed == 0;
    if (!ok) ++failed;
    std::cout << fmt::format("{} {:>2} {:<24} {:7.2f}s  {}\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                             t.summary())
              << std::flush;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
