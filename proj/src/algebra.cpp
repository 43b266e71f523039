#include "idemarith/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace idemarith {

namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kInverseResidual = 1e-9;

std::string shape_string(std::size_t dim, int offset) {
  return "(dim " + std::to_string(dim) + ", offset " + std::to_string(offset) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// DiagonalOperator

DiagonalOperator::DiagonalOperator(int offset, std::vector<Complex> entries)
    : offset_(offset), entries_(std::move(entries)) {
  if (entries_.empty()) throw ShapeError("diagonal operator: dimension must be positive");
  if (offset_ != 0 && offset_ != 1) throw ShapeError("diagonal operator: offset must be 0 or 1");
}

DiagonalOperator DiagonalOperator::identity(std::size_t dim, int offset) {
  return DiagonalOperator(offset, std::vector<Complex>(dim, Complex(1.0)));
}

DiagonalOperator DiagonalOperator::zero(std::size_t dim, int offset) {
  return DiagonalOperator(offset, std::vector<Complex>(dim, Complex(0.0)));
}

const Complex& DiagonalOperator::at_basis(Integer k) const {
  const Integer i = k - offset_;
  if (i < 0 || i >= static_cast<Integer>(dim())) {
    throw std::out_of_range("diagonal operator: basis index " + std::to_string(k) +
                            " outside the truncated window");
  }
  return entries_[static_cast<std::size_t>(i)];
}

void DiagonalOperator::require_shape(const DiagonalOperator& other) const {
  if (!same_shape(other)) {
    throw ShapeError("diagonal operator shape mismatch: " + shape_string(dim(), offset_) +
                     " vs " + shape_string(other.dim(), other.offset_));
  }
}

DiagonalOperator& DiagonalOperator::operator+=(const DiagonalOperator& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

DiagonalOperator& DiagonalOperator::operator-=(const DiagonalOperator& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

DiagonalOperator& DiagonalOperator::operator*=(const DiagonalOperator& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] *= rhs.entries_[i];
  return *this;
}

DiagonalOperator& DiagonalOperator::operator*=(Complex c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

DiagonalOperator& DiagonalOperator::operator/=(double c) {
  for (auto& x : entries_) x /= c;
  return *this;
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw ShapeError("dense matrix: dimension must be positive");
  if (entries_.size() != dim_ * dim_) throw ShapeError("dense matrix: entry count is not dim^2");
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix out = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::zero(std::size_t dim) {
  return DenseMatrix(dim, std::vector<Complex>(dim * dim, Complex(0.0)));
}

DenseMatrix DenseMatrix::from_diagonal(const DiagonalOperator& d) {
  DenseMatrix out = zero(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) out(i, i) = d[i];
  return out;
}

void DenseMatrix::require_shape(const DenseMatrix& other) const {
  if (!same_shape(other)) {
    throw ShapeError("dense matrix shape mismatch: " + std::to_string(dim_) + " vs " +
                     std::to_string(other.dim_));
  }
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  a.require_shape(b);
  const std::size_t n = a.dim_;
  DenseMatrix out = DenseMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traits

double ElementTraits<Integer>::distance(Integer a, Integer b) {
  return std::abs(static_cast<double>(a - b));
}

Integer ElementTraits<Integer>::invert(Integer x) {
  if (x == 1 || x == -1) return x;
  throw NonInvertibleError("integer " + std::to_string(x) + " has no integer inverse");
}

double ElementTraits<Rational>::distance(const Rational& a, const Rational& b) {
  return std::abs(boost::rational_cast<double>(a - b));
}

Rational ElementTraits<Rational>::invert(const Rational& x) {
  if (x == 0) throw NonInvertibleError("rational zero is not invertible");
  return Rational(1) / x;
}

double ElementTraits<Complex>::distance(Complex a, Complex b) { return std::abs(a - b); }

Complex ElementTraits<Complex>::invert(Complex x) {
  if (std::abs(x) <= kPivotTolerance) throw NonInvertibleError("complex zero is not invertible");
  return 1.0 / x;
}

double ElementTraits<DiagonalOperator>::distance(const DiagonalOperator& a,
                                                 const DiagonalOperator& b) {
  if (!a.same_shape(b)) throw ShapeError("distance: diagonal operator shape mismatch");
  double out = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

DiagonalOperator ElementTraits<DiagonalOperator>::invert(const DiagonalOperator& x) {
  std::vector<Complex> inv(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (std::abs(x[i]) <= kPivotTolerance) {
      throw NonInvertibleError("diagonal operator has a zero entry at position " +
                               std::to_string(i));
    }
    inv[i] = 1.0 / x[i];
  }
  return DiagonalOperator(x.offset(), std::move(inv));
}

double ElementTraits<DenseMatrix>::distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.same_shape(b)) throw ShapeError("distance: dense matrix shape mismatch");
  double out = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) out = std::max(out, std::abs(ea[i] - eb[i]));
  return out;
}

// Gauss-Jordan with partial pivoting.
DenseMatrix ElementTraits<DenseMatrix>::invert(const DenseMatrix& x) {
  const std::size_t n = x.dim();
  DenseMatrix work = x;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (std::abs(work(pivot, col)) <= kPivotTolerance) {
      throw NonInvertibleError("dense matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex scale = 1.0 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = work(r, col);
      if (factor == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  const DenseMatrix e = DenseMatrix::identity(n);
  if (distance(DenseMatrix(x * inv), e) > kInverseResidual ||
      distance(DenseMatrix(inv * x), e) > kInverseResidual) {
    throw NonInvertibleError("dense matrix inverse failed the residual check");
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Trace, determinant, norm

Complex trace(const DiagonalOperator& x) {
  Complex out{0.0, 0.0};
  for (const Complex& v : x.entries()) out += v;
  return out;
}

Complex trace(const DenseMatrix& x) {
  Complex out{0.0, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) out += x(i, i);
  return out;
}

Complex determinant(const DiagonalOperator& x) {
  Complex out{1.0, 0.0};
  for (const Complex& v : x.entries()) out *= v;
  return out;
}

Complex determinant(const DenseMatrix& x) {
  const std::size_t n = x.dim();
  DenseMatrix lu = x;
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (std::abs(lu(pivot, col)) <= kPivotTolerance) return {0.0, 0.0};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

double operator_norm(const DiagonalOperator& x) {
  double out = 0.0;
  for (const Complex& v : x.entries()) out = std::max(out, std::abs(v));
  return out;
}

double operator_norm(const DenseMatrix& x) {
  double out = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) row += std::abs(x(i, j));
    out = std::max(out, row);
  }
  return out;
}

}  // namespace idemarith
