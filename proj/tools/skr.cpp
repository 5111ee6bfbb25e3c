// skr: command-line front end. JSON by default, --format table for aligned text.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "skr/asymptotics.hpp"
#include "skr/lweights.hpp"
#include "skr/repmodules.hpp"
#include "skr/rmatrix.hpp"
#include "skr/youngcomb.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace skr;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int M = 0;
  int N = 0;
  std::string format = "json";
  std::string a = "a";
  std::string b = "b";
  std::vector<std::string> lambda;
  int r = 0;
  int k = 0;
  int kmax = 4;
  int level = 0;
  int cap = kDefaultCellCap;
  bool dual = false;
  bool normalize = false;
  bool aBasis = false;
  bool twisted = false;
  bool check = false;
  bool flip = false;
  std::vector<std::string> modules;
  std::string family = "gl21";
  std::string variant;
  std::string limit;
  std::string chain;
  std::string l;
  std::string f;
};

struct Outcome {
  Json out;
  bool ok = true;
};

// ---------------------------------------------------------------- parsing

void needSize(const Options& o) {
  if (o.M < 1 || o.N < 1) throw UsageError("--m and --n must both be given and at least 1");
}

std::vector<int> intList(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("malformed {} '{}': expected comma-separated integers", what, s));
    }
  }
  if (out.empty()) throw UsageError(fmt::format("empty {}", what));
  return out;
}

Scalar symbol(const std::string& s) {
  try {
    return Scalar::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(fmt::format("cannot parse '{}': {}", s, e.what()));
  }
}

Weight parseWeight(const Options& o, const std::string& s) {
  auto c = intList(s, "lambda");
  if (static_cast<int>(c.size()) != o.M + o.N)
    throw UsageError(fmt::format("lambda '{}' needs M+N = {} entries", s, o.M + o.N));
  return Weight(o.M, o.N, c);
}

// "k-rect r=R [k=K]"
struct Rect {
  int r = 0;
  int k = 1;
};
std::optional<Rect> parseRect(const Options& o) {
  if (o.lambda.empty() || o.lambda[0] != "k-rect") return std::nullopt;
  Rect rc{o.r, o.k > 0 ? o.k : 1};
  for (size_t i = 1; i < o.lambda.size(); ++i) {
    const auto& t = o.lambda[i];
    if (t.rfind("r=", 0) == 0) rc.r = intList(t.substr(2), "r").front();
    else if (t.rfind("k=", 0) == 0) rc.k = intList(t.substr(2), "k").front();
    else throw UsageError(fmt::format("unexpected '{}' after k-rect; use r=R and k=K", t));
  }
  if (rc.r < 1 || rc.r >= o.M + o.N) throw UsageError(fmt::format("r must lie in 1..{}", o.M + o.N - 1));
  if (rc.k < 1) throw UsageError("k must be positive");
  return rc;
}

Weight dominantLambda(const Options& o) {
  needSize(o);
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  Weight w;
  if (auto rc = parseRect(o)) {
    if (rc->r > o.M) throw UsageError("k-rect with r > M has no tableau weight; use qcharacter");
    w = Weight::kVarpi(o.M, o.N, rc->r, rc->k);
  } else {
    if (o.lambda.size() != 1) throw UsageError("--lambda takes one comma-separated list");
    w = parseWeight(o, o.lambda[0]);
  }
  if (!isDominant(w)) throw UsageError(fmt::format("lambda {} is not a dominant hook weight", w.str()));
  return w;
}

Json weightJson(const Weight& w) { return Json(w.c); }

// Module specs: natural, natural-finite, eval:L, kr:r,k, gl11[:a,b], gl21-minus[:k],
// gl21-plus[:k], limit-minus, limit-plus, generic[:b], file:path. A suffix @x replaces the
// spectral label, e.g. kr:1,1@a*q^-2.
Representation parseModule(const Options& o, const std::string& full) {
  auto at = full.find('@');
  std::string spec = full.substr(0, at);
  Scalar a = symbol(at == std::string::npos ? o.a : full.substr(at + 1));
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto level = [&](const std::string& s) -> std::optional<int> {
    if (s.empty()) return std::nullopt;
    int k = intList(s, "level").front();
    if (k < 1) throw UsageError("family level must be positive");
    return k;
  };
  if (head == "natural" || head == "natural-finite") {
    needSize(o);
    auto fin = naturalRepFinite(o.M, o.N);
    return head == "natural" ? evaluate(fin, a) : fin;
  }
  if (head == "eval") {
    needSize(o);
    Weight w = parseWeight(o, arg);
    if (!isDominant(w)) throw UsageError(fmt::format("{} is not dominant", w.str()));
    return evaluationModule(w, a);
  }
  if (head == "kr") {
    needSize(o);
    auto rk = intList(arg, "kr:r,k");
    if (rk.size() != 2 || rk[0] < 1 || rk[0] >= o.M + o.N || rk[1] < 1)
      throw UsageError("kr needs r,k with 1 <= r < M+N and k >= 1");
    return krModule(o.M, o.N, rk[0], rk[1], a);
  }
  if (head == "gl11") {
    Scalar x = a, y = symbol(o.b);
    if (!arg.empty()) {
      auto c = arg.find(',');
      if (c == std::string::npos) throw UsageError("gl11 takes a,b");
      x = symbol(arg.substr(0, c));
      y = symbol(arg.substr(c + 1));
    }
    return gl11Family(x, y);
  }
  if (head == "gl21-minus" || head == "gl21-plus") {
    auto p = gl21Family(head == "gl21-minus" ? Variant::minus : Variant::plus, a);
    if (auto k = level(arg)) return atLevel(p, *k);
    return p.rep;
  }
  if (head == "limit-minus") return limitMinus(gl21Family(Variant::minus, a));
  if (head == "limit-plus") return limitPlus(gl21Family(Variant::plus, a));
  if (head == "generic") return genericEval(gl21Family(Variant::plus, a), symbol(arg.empty() ? o.b : arg));
  if (head == "file") {
    std::ifstream in(arg);
    if (!in) throw UsageError(fmt::format("cannot open '{}'", arg));
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return Representation::fromJson(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(fmt::format("'{}' is not a module file: {}", arg, e.what()));
    }
  }
  throw UsageError(fmt::format(
      "unknown module '{}'; expected natural, natural-finite, eval:L, kr:r,k, gl11[:a,b], gl21-minus[:k], "
      "gl21-plus[:k], limit-minus, limit-plus, generic[:b] or file:path, optionally followed by @label",
      spec));
}

Representation oneModule(const Options& o) {
  if (o.modules.size() != 1) throw UsageError("exactly one --module is required");
  return parseModule(o, o.modules[0]);
}

// ---------------------------------------------------------------- output helpers

Json qcharJson(const QCharacter& chi) {
  Json terms = Json::array();
  for (const auto& [w, m] : chi.terms) {
    Json t;
    t["monomial"] = w.str();
    t["multiplicity"] = m;
    Json raw = Json::parse(w.json());
    t["kind"] = raw["kind"];
    t["factors"] = raw["factors"];
    if (raw.contains("prefactor")) t["prefactor"] = raw["prefactor"];
    terms.push_back(t);
  }
  return terms;
}

Json rttJson(const RttReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (!r.pass) {
    j["relation"] = r.relation;
    j["index"] = r.index;
    j["residual"] = r.residual;
  }
  return j;
}

Json scalars(const std::vector<Scalar>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x.str());
  return j;
}

Json highestJson(const Representation& rep) {
  Json j = Json::array();
  for (const auto& h : highestLWeightVectors(rep)) {
    Json e;
    e["weight"] = weightJson(h.weight);
    e["s_diag"] = scalars(h.sDiag);
    j.push_back(e);
  }
  return j;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool isRecordArray(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void renderRecords(const Json& rows, std::ostream& os) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    }
  }
  std::vector<size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> text;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    text.push_back(line);
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (size_t c = 0; c < line.size(); ++c) {
      s += c + 1 == line.size() ? line[c] : fmt::format("{:<{}}  ", line[c], width[c]);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << "  " << s << "\n";
  };
  emit(cols);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& line : text) emit(line);
}

void renderTable(const Json& j, std::ostream& os) {
  if (!j.is_object()) {
    renderTable(Json{{"result", j}}, os);
    return;
  }
  size_t keyWidth = 0;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!isRecordArray(it.value()) && !it.value().is_object()) keyWidth = std::max(keyWidth, it.key().size());
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (isRecordArray(v)) {
      os << it.key() << ":\n";
      renderRecords(v, os);
    } else if (v.is_object() && !v.empty()) {
      os << it.key() << ":\n";
      std::stringstream sub;
      renderTable(v, sub);
      std::string line;
      while (std::getline(sub, line)) os << "  " << line << "\n";
    } else {
      os << fmt::format("{:<{}}  {}\n", it.key(), keyWidth, cell(v));
    }
  }
}

// ---------------------------------------------------------------- commands

Outcome cmdTableaux(const Options& o) {
  Weight lam = dominantLambda(o);
  Diagram Y = diagramOf(lam);
  auto ts = enumerateTableaux(Y, -1, o.cap);
  Json rows = Json::array();
  for (const auto& t : ts) {
    Json grid = Json::array();
    for (int i = 1; i <= static_cast<int>(Y.rows.size()); ++i) {
      std::vector<int> row;
      for (int j = 1; j <= Y.rows[i - 1]; ++j) row.push_back(t.at(i, j));
      grid.push_back(row);
    }
    rows.push_back(Json{{"rows", grid}, {"content", weightJson(t.content(o.M, o.N))}});
  }
  Json out;
  out["lambda"] = weightJson(lam);
  out["shape"] = Y.rows;
  out["count"] = ts.size();
  out["tableaux"] = rows;
  return {out};
}

Outcome cmdGtPatterns(const Options& o) {
  Weight lam = dominantLambda(o);
  auto ps = gtPatterns(lam, o.cap);
  Json rows = Json::array();
  for (const auto& p : ps) {
    Json lv = Json::array();
    for (size_t k = 0; k < p.levels.size(); ++k) {
      lv.push_back(std::vector<int>(p.levels[k].c.begin(), p.levels[k].c.begin() + static_cast<long>(k) + 1));
    }
    rows.push_back(Json{{"levels", lv}});
  }
  Json out;
  out["lambda"] = weightJson(lam);
  out["count"] = ps.size();
  out["patterns"] = rows;
  return {out};
}

Outcome cmdCharacter(const Options& o) {
  Weight lam = dominantLambda(o);
  auto ch = character(lam, o.cap);
  Json ws = Json::array();
  for (const auto& [w, m] : ch.mult) ws.push_back(Json{{"weight", weightJson(w)}, {"multiplicity", m}});
  Json out;
  out["lambda"] = weightJson(lam);
  out["dim"] = ch.dim();
  out["weights"] = ws;
  return {out};
}

Outcome cmdBranching(const Options& o) {
  Weight lam = dominantLambda(o);
  int k = o.level > 0 ? o.level : o.M + o.N - 1;
  if (k < 1 || k > o.M + o.N) throw UsageError(fmt::format("--level must lie in 1..{}", o.M + o.N));
  Json ws = Json::array();
  for (const auto& w : branching(lam, k)) {
    ws.push_back(std::vector<int>(w.c.begin(), w.c.begin() + k));
  }
  Json out;
  out["lambda"] = weightJson(lam);
  out["level"] = k;
  out["components"] = ws;
  return {out};
}

Outcome cmdLowestWeight(const Options& o) {
  Weight lam = dominantLambda(o);
  Json out;
  out["lambda"] = weightJson(lam);
  out["lowest"] = weightJson(lowestWeight(lam));
  out["dual_highest"] = weightJson(dualHighest(lam));
  return {out};
}

Outcome cmdQCharacter(const Options& o) {
  needSize(o);
  Scalar a = symbol(o.a);
  QCharacter chi;
  Json out;
  std::optional<Rect> rc;
  if (o.lambda.empty()) {
    if (o.r < 1) throw UsageError("give --lambda, or --r (with --k) for a KR module");
    rc = Rect{o.r, o.k > 0 ? o.k : 1};
    if (rc->r >= o.M + o.N) throw UsageError(fmt::format("r must lie in 1..{}", o.M + o.N - 1));
  } else {
    rc = parseRect(o);
  }
  if (rc) {
    int M = o.M, N = o.N, r = rc->r, k = rc->k;
    if (r <= M) {
      chi = qcharEval(Weight::kVarpi(M, N, r, k), a * qPow(2 * k));
    } else {
      chi = qcharDualEval(ymInverse(Diagram{M, N, std::vector<int>(k, M + N - r)}, M, N), a);
    }
    out["module"] = fmt::format("W^({})_{{{},{}}}", r, k, r <= M ? fmt::format("{}*q^{}", o.a, 2 * k) : o.a);
  } else {
    Weight lam = dominantLambda(o);
    chi = o.dual ? qcharDualEval(lam, a) : qcharEval(lam, a);
    out["module"] = fmt::format("ev_a^* L({}){}", lam.str(), o.dual ? "^*" : "");
  }
  if (o.normalize || o.aBasis) chi = normalize(chi);
  std::string basis = "X";
  if (o.aBasis || o.normalize) {
    try {
      chi = toAMonomials(chi);
      basis = "A";
    } catch (const Error&) {
      if (o.aBasis) throw;
    }
  }
  out["normalized"] = o.normalize || o.aBasis;
  out["basis"] = basis;
  out["size"] = chi.size();
  out["terms"] = qcharJson(chi);
  return {out};
}

Outcome cmdLimitQCharacter(const Options& o) {
  needSize(o);
  if (o.r < 1 || o.r >= o.M + o.N) throw UsageError(fmt::format("--r must lie in 1..{}", o.M + o.N - 1));
  if (o.kmax < 1) throw UsageError("--kmax must be positive");
  auto L = limitQChar(o.M, o.N, o.r, symbol(o.a), o.kmax);
  Json out;
  out["r"] = o.r;
  out["kmax"] = o.kmax;
  out["term_counts"] = L.termCounts;
  out["stable"] = L.stable;
  out["terms"] = qcharJson(L.series);
  return {out, L.stable};
}

Outcome cmdVerifyYbe(const Options& o) {
  needSize(o);
  auto R = perkSchultz(o.M, o.N);
  auto y = probeYangBaxter(R);
  bool lin = checkLinearDecomposition(R);
  Json out;
  out["graded"] = y.gradedPass;
  out["plain"] = y.plainPass;
  out["convention"] = y.convention ? (*y.convention == SignConvention::graded ? "graded" : "plain") : "none";
  out["linear_decomposition"] = lin;
  if (!y.witness.empty()) out["witness"] = y.witness;
  return {out, y.convention.has_value() && lin};
}

Outcome cmdVerifyIce(const Options& o) {
  needSize(o);
  auto rep = checkIceRule(perkSchultz(o.M, o.N));
  int n = o.M + o.N;
  Json bad = Json::array();
  for (const auto& v : rep.violations) bad.push_back(v);
  Json out;
  out["slots"] = n * n * n * n;
  out["pass"] = rep.pass;
  out["violations"] = bad;
  return {out, rep.pass};
}

Outcome cmdVerifyRtt(const Options& o) {
  auto rep = oneModule(o);
  auto r = checkRTT(rep);
  Json out;
  out["module"] = o.modules[0];
  out["dim"] = rep.dim();
  out["rtt"] = rttJson(r);
  return {out, r.pass};
}

Outcome cmdMInverse(const Options& o) {
  needSize(o);
  auto m = mMatrix(o.M, o.N);
  auto inv = mInverseClosedForm(o.M, o.N);
  bool ok = m * inv == GradedMatrix::identity(m.target());
  auto th = thetas(o.M, o.N);
  th.erase(th.begin());
  Json out;
  out["thetas"] = scalars(th);
  out["identity"] = ok;
  out["inverse"] = Json::parse(inv.json());
  return {out, ok};
}

Outcome cmdBerezinian(const Options& o) {
  auto rep = oneModule(o);
  int n = rep.n();
  int lo = o.level > 0 ? o.level : 1, hi = o.level > 0 ? o.level : n;
  if (hi > n) throw UsageError(fmt::format("--level must lie in 1..{}", n));
  bool ok = true;
  Json rows = Json::array();
  for (int k = lo; k <= hi; ++k) {
    auto c = checkCentrality(rep, k);
    ok = ok && c.pass;
    Json e{{"level", k}, {"central", c.pass}};
    if (!c.pass) e["failure"] = c.failure;
    rows.push_back(e);
  }
  Json out;
  out["module"] = o.modules[0];
  out["dim"] = rep.dim();
  out["levels"] = rows;
  return {out, ok};
}

Outcome cmdEllDecompose(const Options& o) {
  auto rep = oneModule(o);
  Json spaces = Json::array();
  for (const auto& s : ellSpaces(rep)) {
    spaces.push_back(Json{{"weight", weightJson(s.weight)}, {"dim", s.dim}, {"semisimple", s.semisimple},
                          {"values", scalars(s.values)}});
  }
  auto chi = ellDecompose(rep);
  std::string basis = "X";
  if (o.normalize || o.aBasis) {
    chi = normalize(chi);
    try {
      chi = toAMonomials(chi);
      basis = "A";
    } catch (const Error&) {
      if (o.aBasis) throw;
    }
  }
  Json out;
  out["module"] = o.modules[0];
  out["dim"] = rep.dim();
  out["spaces"] = spaces;
  out["basis"] = basis;
  out["terms"] = qcharJson(chi);
  return {out};
}

Outcome cmdDual(const Options& o) {
  auto rep = oneModule(o);
  auto d = o.twisted ? twistedDual(rep) : dual(rep);
  Json out;
  out["module"] = o.modules[0];
  out["twisted"] = o.twisted;
  bool ok = true;
  if (o.check) {
    auto r = checkRTT(d);
    ok = r.pass;
    out["rtt"] = rttJson(r);
  }
  out["representation"] = Json::parse(d.json());
  return {out, ok};
}

Outcome cmdTensor(const Options& o) {
  if (o.modules.size() < 2) throw UsageError("tensor needs at least two --module options");
  Representation t = parseModule(o, o.modules[0]);
  for (size_t i = 1; i < o.modules.size(); ++i) {
    auto next = parseModule(o, o.modules[i]);
    if (next.M != t.M || next.N != t.N) throw UsageError("tensor factors must have the same (M, N)");
    if (static_cast<long>(t.dim()) * next.dim() > dimensionCap())
      throw CapExceeded(fmt::format("tensor dimension {} exceeds the cap {}", t.dim() * next.dim(), dimensionCap()));
    t = tensor(t, next);
  }
  Json out;
  out["modules"] = o.modules;
  out["dim"] = t.dim();
  bool ok = true;
  if (o.check) {
    auto r = checkRTT(t);
    ok = r.pass;
    out["rtt"] = rttJson(r);
  }
  out["representation"] = Json::parse(t.json());
  return {out, ok};
}

Outcome cmdCyclicity(const Options& o) {
  Scalar a = symbol(o.a);
  TensorChain c;
  Json out;
  if (!o.chain.empty()) {
    needSize(o);
    if (o.r < 1 || o.r >= o.M + o.N) throw UsageError(fmt::format("--r must lie in 1..{}", o.M + o.N - 1));
    if (o.chain == "fundamental") {
      int k = o.k > 0 ? o.k : 2;
      c = fundamentalChain(o.M, o.N, o.r, k, a);
      out["chain"] = fmt::format("fundamental r={} k={}", o.r, k);
    } else if (o.chain == "kr") {
      auto l = intList(o.l.empty() ? "1,2,3" : o.l, "--l");
      if (l.size() != 3) throw UsageError("--l takes l1,l2,l3");
      c = krChain(o.M, o.N, o.r, {l[0], l[1], l[2]}, a);
      out["chain"] = fmt::format("kr r={} l={},{},{}", o.r, l[0], l[1], l[2]);
    } else {
      throw UsageError("--chain is fundamental or kr");
    }
  } else {
    if (o.modules.empty()) throw UsageError("give --chain, or --module factors in tensor order");
    std::vector<Representation> fs;
    for (const auto& m : o.modules) fs.push_back(parseModule(o, m));
    c = {fs[0], topVector(fs[0])};
    for (size_t i = 1; i < fs.size(); ++i) {
      c.top = tensorVector(c.top, topVector(fs[i]));
      c.rep = tensor(c.rep, fs[i]);
    }
    out["chain"] = o.modules;
  }
  auto cl = closure(c.rep, {c.top});
  bool ok = cl.dim() == c.rep.dim();
  out["dim"] = c.rep.dim();
  out["closure_dim"] = cl.dim();
  out["cyclic"] = ok;
  return {out, ok};
}

Outcome cmdRestrict(const Options& o) {
  auto rep = oneModule(o);
  int k = o.level > 0 ? o.level : rep.n() - 1;
  if (k < 1 || k > rep.n()) throw UsageError(fmt::format("--level must lie in 1..{}", rep.n()));
  auto d = decomposeRestriction(rep, k);
  Json sums = Json::array();
  for (size_t i = 0; i < d.summands.size(); ++i) {
    std::vector<int> basis;
    for (int b : d.summands[i]) basis.push_back(b + 1);
    sums.push_back(Json{{"basis", basis}, {"simple", static_cast<bool>(d.summandSimple[i])}});
  }
  Json out;
  out["module"] = o.modules[0];
  out["level"] = k;
  out["exact"] = d.exact;
  out["semisimple"] = d.semisimple;
  out["multiplicity_free"] = d.multiplicityFree;
  out["summands"] = sums;
  return {out};
}

Variant variantOf(const std::string& v) {
  if (v == "minus") return Variant::minus;
  if (v == "plus") return Variant::plus;
  throw UsageError(fmt::format("--variant is minus or plus, not '{}'", v));
}

Outcome cmdAsymptotic(const Options& o) {
  Scalar a = symbol(o.a);
  Json out;
  Representation rep;
  if (o.family == "gl11") {
    rep = gl11Family(a, symbol(o.b));
    out["family"] = "gl11";
  } else if (o.family == "gl21") {
    std::string lim = o.limit;
    std::string var = o.variant;
    if (var.empty()) var = lim == "minus" ? "minus" : "plus";
    auto p = gl21Family(variantOf(var), a);
    if (o.flip) p = flipMN(p);
    out["family"] = "gl21";
    out["variant"] = var;
    if (o.flip) out["flipped"] = true;
    if (lim.empty()) {
      rep = o.k > 0 ? atLevel(p, o.k) : p.rep;
      out["level"] = o.k > 0 ? Json(o.k) : Json("kappa");
    } else if (lim == "minus") {
      rep = limitMinus(p);
    } else if (lim == "plus") {
      rep = limitPlus(p);
    } else if (lim.rfind("generic", 0) == 0) {
      auto c = lim.find(':');
      rep = genericEval(p, symbol(c == std::string::npos ? o.b : lim.substr(c + 1)));
    } else {
      throw UsageError("--limit is minus, plus or generic:b");
    }
    if (!lim.empty()) out["limit"] = lim;
  } else {
    throw UsageError("--family is gl21 or gl11");
  }
  auto r = checkRTT(rep);
  out["dim"] = rep.dim();
  out["rtt"] = rttJson(r);
  out["highest"] = highestJson(rep);
  out["representation"] = Json::parse(rep.json());
  return {out, r.pass};
}

Outcome cmdKappaAudit(const Options& o) {
  if (o.family != "gl21") throw UsageError("kappa-audit supports --family gl21");
  auto p = gl21Family(variantOf(o.variant.empty() ? "plus" : o.variant), symbol(o.a));
  if (o.flip) p = flipMN(p);
  auto au = kappaDegreeAudit(p);
  Json out;
  out["variant"] = o.variant.empty() ? "plus" : o.variant;
  out["flipped"] = o.flip;
  out["window"] = {au.windowLo, au.windowHi};
  out["observed"] = {au.lo, au.hi};
  out["pass"] = au.pass;
  out["offending"] = au.offending;
  return {out, au.pass};
}

Outcome cmdCriteria(const Options& o) {
  needSize(o);
  std::vector<Scalar> f;
  std::stringstream ss(o.f);
  std::string tok;
  while (std::getline(ss, tok, ';')) f.push_back(symbol(tok));
  if (static_cast<int>(f.size()) != o.M + o.N - 1)
    throw UsageError(fmt::format("--f needs M+N-1 = {} functions separated by ';'", o.M + o.N - 1));
  Json out;
  out["f"] = scalars(f);
  out["finite_dimensional"] = isFiniteDimCriterion(o.M, o.N, f);
  out["extends_to_full_algebra"] = extendsToFullAlgebra(f);
  return {out};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skr: KR modules of quantum affine superalgebras"};
  app.require_subcommand(1);
  Options o;

  auto sub = [&](const char* name, const char* help, bool sized = true) {
    auto* s = app.add_subcommand(name, help);
    if (sized) {
      s->add_option("--m", o.M, "even rank M");
      s->add_option("--n", o.N, "odd rank N");
    }
    s->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    s->add_option("--a", o.a, "spectral label");
    return s;
  };
  auto lambdaOpt = [&](CLI::App* s) {
    s->add_option("--lambda", o.lambda, "weight as a,b,c or k-rect r=R [k=K]")->expected(1, 3);
    s->add_option("--cap", o.cap, "cell cap");
  };
  auto moduleOpt = [&](CLI::App* s) { s->add_option("--module", o.modules, "module spec"); };

  using Fn = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Fn>> cmds;

  auto* c = sub("tableaux", "hook tableaux of shape Ym(lambda)");
  lambdaOpt(c);
  cmds.emplace_back(c, cmdTableaux);
  c = sub("gt-patterns", "Gelfand-Tsetlin patterns of lambda");
  lambdaOpt(c);
  cmds.emplace_back(c, cmdGtPatterns);
  c = sub("character", "weight multiplicities of L(lambda)");
  lambdaOpt(c);
  cmds.emplace_back(c, cmdCharacter);
  c = sub("branching", "highest weights of the restriction to level k");
  lambdaOpt(c);
  c->add_option("--level", o.level, "subalgebra level");
  cmds.emplace_back(c, cmdBranching);
  c = sub("lowest-weight", "lowest weight and dual highest weight");
  lambdaOpt(c);
  cmds.emplace_back(c, cmdLowestWeight);
  c = sub("qcharacter", "q-character of an evaluation or KR module");
  lambdaOpt(c);
  c->add_option("--r", o.r, "node");
  c->add_option("--k", o.k, "level");
  c->add_flag("--dual", o.dual, "q-character of the dual");
  c->add_flag("--normalize", o.normalize, "divide by the highest term");
  c->add_flag("--a-basis", o.aBasis, "write normalized terms in A-monomials");
  cmds.emplace_back(c, cmdQCharacter);
  c = sub("limit-qcharacter", "normalized KR q-characters as k grows");
  c->add_option("--r", o.r, "node");
  c->add_option("--kmax", o.kmax, "largest level");
  cmds.emplace_back(c, cmdLimitQCharacter);
  c = sub("verify-ybe", "graded Yang-Baxter equation and R = zR - wR'");
  cmds.emplace_back(c, cmdVerifyYbe);
  c = sub("verify-ice", "ice rule of the R-matrix");
  cmds.emplace_back(c, cmdVerifyIce);
  c = sub("verify-rtt", "RTT relations on a module");
  moduleOpt(c);
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdVerifyRtt);
  c = sub("m-inverse", "closed-form inverse of M and the theta_i");
  cmds.emplace_back(c, cmdMInverse);
  c = sub("berezinian", "centrality of the quantum Berezinians");
  moduleOpt(c);
  c->add_option("--level", o.level, "single level");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdBerezinian);
  c = sub("ell-decompose", "l-weight spaces and q-character of a module");
  moduleOpt(c);
  c->add_flag("--normalize", o.normalize, "divide by the highest term");
  c->add_flag("--a-basis", o.aBasis, "write normalized terms in A-monomials");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdEllDecompose);
  c = sub("dual", "dual module through the antipode");
  moduleOpt(c);
  c->add_flag("--twisted", o.twisted, "twisted dual");
  c->add_flag("--check", o.check, "verify RTT on the result");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdDual);
  c = sub("tensor", "tensor product of modules in the given order");
  moduleOpt(c);
  c->add_flag("--check", o.check, "verify RTT on the result");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdTensor);
  c = sub("cyclicity-check", "is the tensor product generated by its top vector");
  moduleOpt(c);
  c->add_option("--chain", o.chain, "fundamental or kr");
  c->add_option("--r", o.r, "node");
  c->add_option("--k", o.k, "number of fundamental factors");
  c->add_option("--l", o.l, "l1,l2,l3 for the kr chain");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdCyclicity);
  c = sub("restrict", "restriction to the level-k subalgebra");
  moduleOpt(c);
  c->add_option("--level", o.level, "subalgebra level");
  c->add_option("--b", o.b, "second label");
  cmds.emplace_back(c, cmdRestrict);
  c = sub("asymptotic", "kappa families and their limits", false);
  c->add_option("--family", o.family, "gl21 or gl11");
  c->add_option("--variant", o.variant, "minus or plus");
  c->add_option("--limit", o.limit, "minus, plus or generic:b");
  c->add_option("--k", o.k, "level (family only)");
  c->add_option("--b", o.b, "second label");
  c->add_flag("--flip", o.flip, "transpose to gl(1,2)");
  cmds.emplace_back(c, cmdAsymptotic);
  c = sub("kappa-audit", "kappa-degree window of a family", false);
  c->add_option("--family", o.family, "gl21");
  c->add_option("--variant", o.variant, "minus or plus");
  c->add_flag("--flip", o.flip, "transpose to gl(1,2)");
  cmds.emplace_back(c, cmdKappaAudit);
  c = sub("criteria", "finite-dimensionality test for a tuple f_i(z)");
  c->add_option("--f", o.f, "f_1;...;f_{M+N-1}")->required();
  cmds.emplace_back(c, cmdCriteria);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& [cmd, fn] : cmds) {
    if (!cmd->parsed()) continue;
    try {
      Outcome r = fn(o);
      if (o.format == "table") {
        renderTable(r.out, std::cout);
      } else {
        std::cout << r.out.dump(2) << "\n";
      }
      return r.ok ? 0 : 1;
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const CapExceeded& e) {
      std::cerr << "error: " << e.what() << " (raise SKR_DIM_CAP or --cap)\n";
      return 2;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
