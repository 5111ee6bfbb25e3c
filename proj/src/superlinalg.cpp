#include "skr/superlinalg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace skr {

// ---------------------------------------------------------------- weights

Weight Weight::kVarpi(int M, int N, int r, int k) {
  Weight w(M, N);
  if (r <= M) {
    for (int j = 1; j <= r; ++j) w[j] = k;
  } else {
    for (int j = r + 1; j <= M + N; ++j) w[j] = -k;
  }
  return w;
}

int Weight::parity() const {
  int p = 0;
  for (int i = M + 1; i <= M + N; ++i) p += c[i - 1];
  return p & 1;
}

int Weight::height() const {
  int h = 0;
  for (int v : c) h += v;
  return h;
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < c.size(); ++i) w.c[i] += o.c[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < c.size(); ++i) w.c[i] -= o.c[i];
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& v : w.c) v = -v;
  return w;
}

Weight Weight::operator*(int k) const {
  Weight w = *this;
  for (auto& v : w.c) v *= k;
  return w;
}

int Weight::form(const Weight& o) const {
  int s = 0;
  for (int i = 1; i <= size(); ++i) s += dOf(M, i) * c[i - 1] * o.c[i - 1];
  return s;
}

std::string Weight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- spaces

SuperSpace::SuperSpace(std::vector<int> parities, std::vector<Weight> weights)
    : parity_(std::move(parities)), weight_(std::move(weights)) {
  if (!weight_.empty() && weight_.size() != parity_.size()) throw Error("weight labels must cover every basis vector");
}

SuperSpace SuperSpace::natural(int M, int N) {
  std::vector<int> p;
  std::vector<Weight> w;
  for (int i = 1; i <= M + N; ++i) {
    p.push_back(parityOf(M, i));
    w.push_back(Weight::eps(M, N, i));
  }
  return SuperSpace(p, w);
}

SuperSpace SuperSpace::even(int dim) { return SuperSpace(std::vector<int>(dim, 0)); }

SuperSpace SuperSpace::parityShifted(int s) const {
  SuperSpace r = *this;
  for (auto& p : r.parity_) p ^= (s & 1);
  return r;
}

SuperSpace SuperSpace::subspace(const std::vector<int>& indices) const {
  std::vector<int> p;
  std::vector<Weight> w;
  for (int i : indices) {
    p.push_back(parity_[i]);
    if (hasWeights()) w.push_back(weight_[i]);
  }
  return SuperSpace(p, w);
}

SuperSpace tensor(const SuperSpace& V, const SuperSpace& W) {
  std::vector<int> p;
  std::vector<Weight> w;
  bool labels = V.hasWeights() && W.hasWeights();
  for (int i = 0; i < V.dim(); ++i) {
    for (int j = 0; j < W.dim(); ++j) {
      p.push_back(V.parity(i) ^ W.parity(j));
      if (labels) w.push_back(V.weight(i) + W.weight(j));
    }
  }
  return SuperSpace(p, w);
}

// ---------------------------------------------------------------- matrices

namespace {

SparseRow addRows(const SparseRow& x, const SparseRow& y, const Scalar& cy) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = cy * y[j].second;
      if (!v.isZero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = x[i].second + cy * y[j].second;
      if (!v.isZero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Scalar rowGet(const SparseRow& r, int c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, int k) { return e.first < k; });
  if (it != r.end() && it->first == c) return it->second;
  return Scalar();
}

}  // namespace

GradedMatrix::GradedMatrix(SpacePtr target, SpacePtr source)
    : target_(std::move(target)), source_(std::move(source)) {
  data_.resize(target_ ? target_->dim() : 0);
}

GradedMatrix GradedMatrix::identity(SpacePtr space) { return scalarMatrix(space, Scalar(1)); }

GradedMatrix GradedMatrix::scalarMatrix(SpacePtr space, const Scalar& c) {
  GradedMatrix m(space);
  if (c.isZero()) return m;
  for (int i = 0; i < m.rows(); ++i) m.data_[i].emplace_back(i, c);
  return m;
}

GradedMatrix GradedMatrix::unit(SpacePtr space, int row, int col, const Scalar& c) {
  GradedMatrix m(space);
  m.set(row, col, c);
  return m;
}

Scalar GradedMatrix::get(int r, int c) const { return rowGet(data_[r], c); }

void GradedMatrix::set(int r, int c, const Scalar& v) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
  if (it != row.end() && it->first == c) {
    if (v.isZero()) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (!v.isZero()) {
    row.insert(it, {c, v});
  }
}

void GradedMatrix::addTo(int r, int c, const Scalar& v) {
  if (!v.isZero()) set(r, c, get(r, c) + v);
}

bool GradedMatrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

size_t GradedMatrix::nonzeros() const {
  size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

int GradedMatrix::parity() const {
  int p = -2;
  for (int r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) {
      int e = target_->parity(r) ^ source_->parity(c);
      if (p == -2) {
        p = e;
      } else if (p != e) {
        return -1;
      }
    }
  }
  if (p == -2) return declaredParity.value_or(0);
  return p;
}

GradedMatrix GradedMatrix::operator-() const { return Scalar(-1) * *this; }

GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("dimension mismatch in matrix sum");
  GradedMatrix out(x.target_, x.source_);
  for (int r = 0; r < x.rows(); ++r) out.data_[r] = addRows(x.data_[r], y.data_[r], Scalar(1));
  return out;
}

GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("dimension mismatch in matrix difference");
  GradedMatrix out(x.target_, x.source_);
  for (int r = 0; r < x.rows(); ++r) out.data_[r] = addRows(x.data_[r], y.data_[r], Scalar(-1));
  return out;
}

GradedMatrix operator*(const GradedMatrix& x, const GradedMatrix& y) {
  if (x.cols() != y.rows()) throw Error("dimension mismatch in matrix product");
  GradedMatrix out(x.target_, y.source_);
  std::map<int, Scalar> acc;
  for (int r = 0; r < x.rows(); ++r) {
    if (x.data_[r].empty()) continue;
    acc.clear();
    for (const auto& [k, xv] : x.data_[r]) {
      for (const auto& [c, yv] : y.data_[k]) {
        auto [it, fresh] = acc.try_emplace(c, xv * yv);
        if (!fresh) it->second += xv * yv;
      }
    }
    SparseRow row;
    for (auto& [c, v] : acc) {
      if (!v.isZero()) row.emplace_back(c, std::move(v));
    }
    out.data_[r] = std::move(row);
  }
  return out;
}

GradedMatrix operator*(const Scalar& c, const GradedMatrix& x) {
  GradedMatrix out(x.target_, x.source_);
  if (c.isZero()) return out;
  for (int r = 0; r < x.rows(); ++r) {
    SparseRow row;
    row.reserve(x.data_[r].size());
    for (const auto& [k, v] : x.data_[r]) row.emplace_back(k, c * v);
    out.data_[r] = std::move(row);
  }
  return out;
}

bool operator==(const GradedMatrix& x, const GradedMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (int r = 0; r < x.rows(); ++r) {
    const auto& a = x.data_[r];
    const auto& b = y.data_[r];
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    }
  }
  return true;
}

Vec GradedMatrix::apply(const Vec& v) const {
  Vec out(rows());
  for (int r = 0; r < rows(); ++r) {
    Scalar s;
    for (const auto& [c, m] : data_[r]) {
      if (!v[c].isZero()) s += m * v[c];
    }
    out[r] = s;
  }
  return out;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix out(source_, target_);
  for (int r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  }
  return out;
}

GradedMatrix GradedMatrix::map(const std::function<Scalar(const Scalar&)>& f) const {
  GradedMatrix out(target_, source_);
  for (int r = 0; r < rows(); ++r) {
    SparseRow row;
    for (const auto& [c, v] : data_[r]) {
      Scalar w = f(v);
      if (!w.isZero()) row.emplace_back(c, std::move(w));
    }
    out.data_[r] = std::move(row);
  }
  out.declaredParity = declaredParity;
  return out;
}

GradedMatrix GradedMatrix::block(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
  auto tgt = makeSpace(target_->subspace(rowIdx));
  auto src = makeSpace(source_->subspace(colIdx));
  GradedMatrix out(tgt, src);
  std::map<int, int> colPos;
  for (size_t i = 0; i < colIdx.size(); ++i) colPos[colIdx[i]] = static_cast<int>(i);
  for (size_t i = 0; i < rowIdx.size(); ++i) {
    for (const auto& [c, v] : data_[rowIdx[i]]) {
      auto it = colPos.find(c);
      if (it != colPos.end()) out.data_[i].emplace_back(it->second, v);
    }
    std::sort(out.data_[i].begin(), out.data_[i].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

uint32_t GradedMatrix::varMask() const {
  uint32_t m = 0;
  for (const auto& row : data_) {
    for (const auto& e : row) m |= e.second.varMask();
  }
  return m;
}

std::string GradedMatrix::json() const {
  nlohmann::json j;
  j["dims"] = {rows(), cols()};
  int p = parity();
  j["parity"] = p < 0 ? nlohmann::json(nullptr) : nlohmann::json(p == 0 ? "even" : "odd");
  auto entries = nlohmann::json::array();
  for (int r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) entries.push_back({r, c, v.str()});
  }
  j["entries"] = entries;
  return j.dump();
}

GradedMatrix gradedTensor(const GradedMatrix& a, const GradedMatrix& b, SignConvention conv) {
  int pb = b.parity();
  if (pb < 0 && conv == SignConvention::graded) throw Error("inhomogeneous factor in graded tensor action");
  auto tgt = makeSpace(tensor(*a.target(), *b.target()));
  auto src = makeSpace(tensor(*a.source(), *b.source()));
  GradedMatrix out(tgt, src);
  int bc = b.cols();
  int br = b.rows();
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < br; ++k) {
      SparseRow row;
      for (const auto& [j, av] : a.row(i)) {
        // (-1)^{|b||v_j|}: the sign depends on the source vector in the first factor.
        bool flip = conv == SignConvention::graded && pb == 1 && a.source()->parity(j) == 1;
        for (const auto& [l, bv] : b.row(k)) {
          Scalar v = av * bv;
          row.emplace_back(j * bc + l, flip ? -v : v);
        }
      }
      out.setRow(i * br + k, std::move(row));
    }
  }
  return out;
}

// ---------------------------------------------------------------- elimination

Echelon rowReduce(std::vector<SparseRow> rows, int cols) {
  (void)cols;
  Echelon e;
  // Each incoming row is reduced against the stored pivots, which stay fully reduced.
  std::map<int, SparseRow> byPivot;
  for (auto& r : rows) {
    SparseRow cur = std::move(r);
    for (const auto& [q, other] : byPivot) {
      Scalar c = rowGet(cur, q);
      if (!c.isZero()) cur = addRows(cur, other, -c);
    }
    if (cur.empty()) continue;
    Scalar inv = cur.front().second.inv();
    for (auto& entry : cur) entry.second = entry.second * inv;
    int p = cur.front().first;
    // Back-substitute into rows already stored so the form stays reduced.
    for (auto& [q, other] : byPivot) {
      Scalar c = rowGet(other, p);
      if (!c.isZero()) other = addRows(other, cur, -c);
    }
    byPivot.emplace(p, std::move(cur));
  }
  for (auto& [p, r] : byPivot) {
    e.pivots.push_back(p);
    e.rows.push_back(std::move(r));
  }
  return e;
}

Echelon rowReduce(const GradedMatrix& A) {
  std::vector<SparseRow> rows;
  rows.reserve(A.rows());
  for (int r = 0; r < A.rows(); ++r) rows.push_back(A.row(r));
  return rowReduce(std::move(rows), A.cols());
}

std::vector<Vec> kernel(const GradedMatrix& A) {
  Echelon e = rowReduce(A);
  int n = A.cols();
  std::vector<bool> isPivot(n, false);
  for (int p : e.pivots) isPivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (size_t i = 0; i < e.rows.size(); ++i) {
      Scalar c = rowGet(e.rows[i], f);
      if (!c.isZero()) v[e.pivots[i]] = -c;
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank(const GradedMatrix& A) { return static_cast<int>(rowReduce(A).rows.size()); }

GradedMatrix inverse(const GradedMatrix& A) {
  int n = A.rows();
  if (n != A.cols()) throw Error("inverse of a non-square matrix");
  std::vector<SparseRow> rows;
  for (int r = 0; r < n; ++r) {
    SparseRow row = A.row(r);
    row.emplace_back(n + r, Scalar(1));
    rows.push_back(std::move(row));
  }
  Echelon e = rowReduce(std::move(rows), 2 * n);
  if (static_cast<int>(e.rows.size()) < n || e.pivots[n - 1] != n - 1) throw Error("singular matrix");
  GradedMatrix out(A.source(), A.target());
  for (int i = 0; i < n; ++i) {
    SparseRow row;
    for (const auto& [c, v] : e.rows[i]) {
      if (c >= n) row.emplace_back(c - n, v);
    }
    out.setRow(i, std::move(row));
  }
  return out;
}

SparseRow toSparse(const Vec& v) {
  SparseRow r;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].isZero()) r.emplace_back(static_cast<int>(i), v[i]);
  }
  return r;
}

Vec toDense(const SparseRow& r, int dim) {
  Vec v(dim);
  for (const auto& [i, s] : r) v[i] = s;
  return v;
}

bool isZeroVec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}

// ---------------------------------------------------------------- subspaces

Vec SubspaceBasis::reduce(const Vec& v) const {
  SparseRow cur = toSparse(v);
  for (const auto& [p, row] : rows_) {
    Scalar c = rowGet(cur, p);
    if (!c.isZero()) cur = addRows(cur, row, -c);
  }
  return toDense(cur, dim_);
}

bool SubspaceBasis::contains(const Vec& v) const { return isZeroVec(reduce(v)); }

bool SubspaceBasis::insert(const Vec& v) {
  SparseRow cur = toSparse(reduce(v));
  if (cur.empty()) return false;
  Scalar inv = cur.front().second.inv();
  for (auto& e : cur) e.second = e.second * inv;
  int p = cur.front().first;
  for (auto& [q, row] : rows_) {
    Scalar c = rowGet(row, p);
    if (!c.isZero()) row = addRows(row, cur, -c);
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), p, [](const auto& e, int k) { return e.first < k; });
  rows_.insert(it, {p, std::move(cur)});
  return true;
}

std::vector<Vec> SubspaceBasis::basis() const {
  std::vector<Vec> out;
  for (const auto& [p, row] : rows_) out.push_back(toDense(row, dim_));
  return out;
}

std::vector<int> SubspaceBasis::pivots() const {
  std::vector<int> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

}  // namespace skr
