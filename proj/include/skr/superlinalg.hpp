#pragma once

#include "skr/scalar.hpp"
#include "skr/weight.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skr {

// Z2-graded space with a distinguished basis; optional weight label per basis vector.
class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<int> parities, std::vector<Weight> weights = {});
  static SuperSpace natural(int M, int N);
  static SuperSpace even(int dim);

  int dim() const { return static_cast<int>(parity_.size()); }
  int parity(int i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  bool hasWeights() const { return !weight_.empty(); }
  const Weight& weight(int i) const { return weight_[i]; }
  const std::vector<Weight>& weights() const { return weight_; }

  SuperSpace parityShifted(int s) const;
  SuperSpace subspace(const std::vector<int>& indices) const;
  friend SuperSpace tensor(const SuperSpace& V, const SuperSpace& W);
  friend bool operator==(const SuperSpace& x, const SuperSpace& y) {
    return x.parity_ == y.parity_ && x.weight_ == y.weight_;
  }

 private:
  std::vector<int> parity_;
  std::vector<Weight> weight_;
};

using SpacePtr = std::shared_ptr<const SuperSpace>;
inline SpacePtr makeSpace(SuperSpace s) { return std::make_shared<const SuperSpace>(std::move(s)); }

using Vec = std::vector<Scalar>;
using SparseRow = std::vector<std::pair<int, Scalar>>;  // sorted by column, nonzero entries

// Sparse matrix over Scalar, mapping source -> target.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(SpacePtr target, SpacePtr source);
  explicit GradedMatrix(SpacePtr space) : GradedMatrix(space, space) {}

  static GradedMatrix identity(SpacePtr space);
  static GradedMatrix unit(SpacePtr space, int row, int col, const Scalar& c = Scalar(1));
  static GradedMatrix scalarMatrix(SpacePtr space, const Scalar& c);

  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return source_ ? source_->dim() : 0; }
  const SpacePtr& target() const { return target_; }
  const SpacePtr& source() const { return source_; }

  Scalar get(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  void addTo(int r, int c, const Scalar& v);
  const SparseRow& row(int r) const { return data_[r]; }
  void setRow(int r, SparseRow row) { data_[r] = std::move(row); }

  bool isZero() const;
  size_t nonzeros() const;
  // 0 or 1 when homogeneous (zero counts as even), -1 otherwise.
  int parity() const;
  // Declared parity used when the matrix is zero or when a caller insists.
  std::optional<int> declaredParity;

  GradedMatrix operator-() const;
  friend GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y);
  friend GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y);
  friend GradedMatrix operator*(const GradedMatrix& x, const GradedMatrix& y);
  friend GradedMatrix operator*(const Scalar& c, const GradedMatrix& x);
  GradedMatrix& operator+=(const GradedMatrix& y) { return *this = *this + y; }
  friend bool operator==(const GradedMatrix& x, const GradedMatrix& y);
  friend bool operator!=(const GradedMatrix& x, const GradedMatrix& y) { return !(x == y); }

  Vec apply(const Vec& v) const;
  GradedMatrix transpose() const;
  GradedMatrix map(const std::function<Scalar(const Scalar&)>& f) const;
  // Restriction to the coordinate block (rowIdx x colIdx).
  GradedMatrix block(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const;
  uint32_t varMask() const;

  std::string json() const;

 private:
  SpacePtr target_;
  SpacePtr source_;
  std::vector<SparseRow> data_;
};

enum class SignConvention { graded, plain };

// Matrix of (a (x) b) on V (x) W, row-major tensor basis.
// graded: (a (x) b)(v (x) w) = (-1)^{|b||v|} av (x) bw.
GradedMatrix gradedTensor(const GradedMatrix& a, const GradedMatrix& b,
                          SignConvention conv = SignConvention::graded);

// Row-reduced echelon form with leftmost pivots, rows processed in index order.
struct Echelon {
  std::vector<SparseRow> rows;  // reduced rows, pivot coefficient 1
  std::vector<int> pivots;      // pivot column per row
};
Echelon rowReduce(const GradedMatrix& A);
Echelon rowReduce(std::vector<SparseRow> rows, int cols);

std::vector<Vec> kernel(const GradedMatrix& A);
int rank(const GradedMatrix& A);
// Inverse of a square matrix; throws Error when singular.
GradedMatrix inverse(const GradedMatrix& A);

SparseRow toSparse(const Vec& v);
Vec toDense(const SparseRow& r, int dim);
bool isZeroVec(const Vec& v);

// Incrementally maintained reduced echelon basis of a subspace of Q(...)^dim.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(int dim) : dim_(dim) {}
  // Returns true when v was not already in the span.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambientDim() const { return dim_; }
  // Basis vectors sorted by pivot position.
  std::vector<Vec> basis() const;
  std::vector<int> pivots() const;

 private:
  int dim_;
  std::vector<std::pair<int, SparseRow>> rows_;  // (pivot, row), kept sorted by pivot
};

}  // namespace skr
