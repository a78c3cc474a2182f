#include "coring/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace coring {

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar s(mpz_class(num), d);
  s.canonicalize();
  return s;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

void add_into(Vector& out, const Vector& v, const Scalar& c) {
  if (out.size() != v.size()) throw DimensionError("add_into: length mismatch");
  for (std::size_t i = 0; i < out.size(); ++i)
    if (sgn(v[i]) != 0) out[i] += c * v[i];
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.entries.emplace_back(i, v[i]);
  return s;
}

Vector SparseVector::to_dense(std::size_t n) const {
  Vector v(n);
  for (const auto& [i, x] : entries) v.at(i) = x;
  return v;
}

void SparseVector::add_to(Vector& out, const Scalar& factor) const {
  if (sgn(factor) == 0) return;
  for (const auto& [i, x] : entries) out[i] += factor * x;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

std::vector<std::size_t> Matrix::nonzero_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn((*this)(r, c)) != 0) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  // Row-sparse product: the matrices met here are mostly structural zeros.
  std::vector<std::vector<std::size_t>> b_nz(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (sgn(b(k, j)) != 0) b_nz[k].push_back(j);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j : b_nz[k]) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  Vector out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

// ---------------------------------------------------------------- reduction

RrefResult rref(Matrix m) {
  RrefResult result;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(p, j), m(lead_row, j));
    Scalar inv = 1 / m(lead_row, c);
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (sgn(m(lead_row, j)) != 0) {
        m(lead_row, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t j : nz) m(r, j) -= f * m(lead_row, j);
    }
    result.pivots.push_back(c);
    ++lead_row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

// ---------------------------------------------------------------- quotients

Vector QuotientSpace::project(const Vector& ambient) const {
  if (ambient.size() != ambient_dim_) throw DimensionError("quotient projection length mismatch");
  Vector q(dim());
  for (std::size_t j = 0; j < ambient.size(); ++j)
    if (sgn(ambient[j]) != 0) projection_[j].add_to(q, ambient[j]);
  return q;
}

Vector QuotientSpace::project(const SparseVector& ambient) const {
  Vector q(dim());
  for (const auto& [j, x] : ambient.entries) projection_.at(j).add_to(q, x);
  return q;
}

Vector QuotientSpace::section(const Vector& q) const {
  if (q.size() != dim()) throw DimensionError("quotient section length mismatch");
  Vector v(ambient_dim_);
  for (std::size_t k = 0; k < q.size(); ++k) v[free_[k]] = q[k];
  return v;
}

Matrix QuotientSpace::projection_matrix() const {
  Matrix p(dim(), ambient_dim_);
  for (std::size_t j = 0; j < ambient_dim_; ++j)
    for (const auto& [k, x] : projection_[j].entries) p(k, j) = x;
  return p;
}

QuotientSpace quotient(std::size_t ambient_dim, std::span<const SparseVector> relations) {
  // Incremental sparse echelon form, then back substitution to RREF.
  std::vector<long> row_of_pivot(ambient_dim, -1);
  std::vector<SparseVector> rows;
  Vector work(ambient_dim);
  for (const auto& rel : relations) {
    for (const auto& [j, x] : rel.entries) {
      if (j >= ambient_dim) throw DimensionError("relation index out of range");
      work[j] += x;
    }
    std::size_t lead = ambient_dim;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (sgn(work[j]) == 0) continue;
      if (row_of_pivot[j] < 0) {
        lead = j;
        break;
      }
      Scalar f = work[j];
      rows[static_cast<std::size_t>(row_of_pivot[j])].add_to(work, -f);
    }
    if (lead == ambient_dim) continue;  // dependent relation; work is all zero
    Scalar inv = 1 / work[lead];
    SparseVector row;
    for (std::size_t j = lead; j < ambient_dim; ++j) {
      if (sgn(work[j]) != 0) {
        row.entries.emplace_back(j, work[j] * inv);
        work[j] = 0;
      }
    }
    row_of_pivot[lead] = static_cast<long>(rows.size());
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (row_of_pivot[j] >= 0) pivots.push_back(j);

  std::vector<SparseVector> reduced(ambient_dim);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::size_t p = *it;
    const auto& src = rows[static_cast<std::size_t>(row_of_pivot[p])];
    for (const auto& [j, x] : src.entries) work[j] = x;
    for (std::size_t j = p + 1; j < ambient_dim; ++j) {
      if (sgn(work[j]) == 0 || row_of_pivot[j] < 0) continue;
      Scalar f = work[j];
      reduced[j].add_to(work, -f);
    }
    SparseVector row;
    for (std::size_t j = p; j < ambient_dim; ++j) {
      if (sgn(work[j]) != 0) {
        row.entries.emplace_back(j, work[j]);
        work[j] = 0;
      }
    }
    reduced[p] = std::move(row);
  }

  QuotientSpace q;
  q.ambient_dim_ = ambient_dim;
  std::vector<long> free_index(ambient_dim, -1);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (row_of_pivot[j] < 0) {
      free_index[j] = static_cast<long>(q.free_.size());
      q.free_.push_back(j);
    }
  }
  q.projection_.resize(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (free_index[j] >= 0) {
      q.projection_[j].entries.emplace_back(static_cast<std::size_t>(free_index[j]), Scalar(1));
    } else {
      for (const auto& [c, x] : reduced[j].entries) {
        if (c == j) continue;
        q.projection_[j].entries.emplace_back(static_cast<std::size_t>(free_index[c]), -x);
      }
    }
  }
  for (auto p : pivots) q.relations_.push_back(reduced[p]);
  return q;
}

QuotientSpace quotient(std::size_t ambient_dim, const std::vector<Vector>& relations) {
  std::vector<SparseVector> sparse;
  sparse.reserve(relations.size());
  for (const auto& r : relations) {
    if (r.size() != ambient_dim) throw DimensionError("relation vector has wrong length");
    sparse.push_back(SparseVector::from_dense(r));
  }
  return quotient(ambient_dim, std::span<const SparseVector>(sparse));
}

}  // namespace coring
