#pragma once

// Exact rational linear algebra: dense matrices, row reduction, kernels,
// linear solves and quotient spaces. Everything downstream (tensor products,
// duals, law checks) reduces to these routines.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coring {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Raised on inconsistent dimensions anywhere in the library.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Scalar& s);
/// Parses "p", "p/q" or "-p/q"; the result is canonicalized.
Scalar parse_scalar(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// out += c v
void add_into(Vector& out, const Vector& v, const Scalar& c = 1);

/// Sorted (index, nonzero value) pairs.
struct SparseVector {
  std::vector<std::pair<std::size_t, Scalar>> entries;

  bool empty() const { return entries.empty(); }
  static SparseVector from_dense(const Vector& v);
  Vector to_dense(std::size_t n) const;
  /// out += factor * this
  void add_to(Vector& out, const Scalar& factor) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  /// Columns whose entries are not all zero.
  std::vector<std::size_t> nonzero_columns() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the null space, one vector per free column (free entry = 1).
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with m * x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Ambient space modulo the span of a relation set. The canonical basis is
/// the set of non-pivot coordinates of the reduced relation matrix, in
/// ascending order, so projections are reproducible.
class QuotientSpace {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return free_.size(); }

  /// Ambient coordinate of canonical basis vector k.
  std::size_t representative(std::size_t k) const { return free_[k]; }
  const std::vector<std::size_t>& representatives() const { return free_; }

  /// Quotient coordinates of ambient basis vector j.
  const SparseVector& project_basis(std::size_t j) const { return projection_[j]; }
  Vector project(const Vector& ambient) const;
  Vector project(const SparseVector& ambient) const;
  /// Ambient vector representing quotient vector q.
  Vector section(const Vector& q) const;

  /// Reduced relation rows, pivot first.
  const std::vector<SparseVector>& relation_basis() const { return relations_; }
  Matrix projection_matrix() const;

 private:
  friend QuotientSpace quotient(std::size_t, std::span<const SparseVector>);
  std::size_t ambient_dim_ = 0;
  std::vector<std::size_t> free_;
  std::vector<SparseVector> relations_;
  std::vector<SparseVector> projection_;
};

QuotientSpace quotient(std::size_t ambient_dim, std::span<const SparseVector> relations);
QuotientSpace quotient(std::size_t ambient_dim, const std::vector<Vector>& relations);

}  // namespace coring
