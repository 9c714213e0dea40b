#include "exactla/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace conetensor {

namespace {

void require_same_length(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

Vector make_vector(std::initializer_list<long> entries) {
  Vector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Vector zero_vector(std::size_t dim) { return Vector(dim, Rational(0)); }

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v = zero_vector(dim);
  v.at(index) = 1;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_length(a, b, "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  require_same_length(a, b, "add");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  require_same_length(a, b, "subtract");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Vector& v, const Rational& factor) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
  return r;
}

Vector negate(const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int compare_lex(const Vector& a, const Vector& b) {
  require_same_length(a, b, "compare_lex");
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Vector primitive(const Vector& v) {
  if (is_zero(v)) return v;
  Integer lcm_den = 1;
  for (const auto& q : v) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

Vector sign_normalized(const Vector& v) {
  Vector p = primitive(v);
  for (const auto& q : p) {
    if (sgn(q) < 0) return negate(p);
    if (sgn(q) > 0) break;
  }
  return p;
}

bool positively_parallel(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return primitive(a) == primitive(b);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("matrix row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(make_vector(r));
  std::size_t cols = vs.empty() ? 0 : vs.front().size();
  return from_rows(vs, cols);
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

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                         std::to_string(x.size()));
  }
  Vector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) s += a * x[c];
    }
    y[r] = s;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimensions differ");
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

// ---------------------------------------------------------------- elimination

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    raw.push_back(std::move(v));
  }
  return Subspace::span(raw, m.cols()).basis();
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  RowEchelon e = rref(Matrix::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < e.rank(); ++r) s.basis_.push_back(primitive(e.reduced.row(r)));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vector(ambient, i));
  return s;
}

Subspace Subspace::kernel(const Matrix& m) {
  Subspace s(m.cols());
  s.basis_ = kernel_basis(m);
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace membership: dimension mismatch");
  if (conetensor::is_zero(v)) return true;
  if (basis_.empty()) return false;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace inclusion: dimension mismatch");
  if (other.dim() > dim()) return false;
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  if (rows.empty()) return true;
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

Subspace Subspace::orthogonal_complement() const {
  if (basis_.empty()) return whole(ambient_);
  return kernel(basis_matrix());
}

Vector Subspace::project_out(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("projection: dimension mismatch");
  if (basis_.empty()) return v;
  // Solve (B B^T) c = B v, then subtract B^T c.
  const std::size_t k = basis_.size();
  Matrix aug(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = dot(basis_[i], basis_[j]);
    aug(i, k) = dot(basis_[i], v);
  }
  RowEchelon e = rref(aug);
  Vector out = v;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& c = e.reduced(i, k);
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] -= c * basis_[i][j];
  }
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace sum: dimension mismatch");
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(rows, a.ambient());
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace intersection: dimension mismatch");
  std::vector<Vector> rows = a.orthogonal_complement().basis();
  const auto bc = b.orthogonal_complement().basis();
  rows.insert(rows.end(), bc.begin(), bc.end());
  if (rows.empty()) return Subspace::whole(a.ambient());
  return Subspace::kernel(Matrix::from_rows(rows, a.ambient()));
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) { return outer.contains(inner); }

}  // namespace conetensor
