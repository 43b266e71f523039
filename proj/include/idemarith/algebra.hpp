#pragma once

// The unital associative algebra abstraction and its concrete carriers:
// exact integers, exact rationals, complex scalars, diagonal operators on a
// truncated monomial basis and dense complex matrices.

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "idemarith/arith.hpp"

namespace idemarith {

inline constexpr double kDefaultTolerance = 1e-9;

// Arithmetic between elements of different dimension or basis offset.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Truncated diagonal operator. Entry i acts on basis vector e_{offset + i}.
class DiagonalOperator {
 public:
  DiagonalOperator(int offset, std::vector<Complex> entries);

  static DiagonalOperator identity(std::size_t dim, int offset);
  static DiagonalOperator zero(std::size_t dim, int offset);

  // Builds entries from fn(k) evaluated at each basis index k.
  template <class Fn>
  static DiagonalOperator from_index(std::size_t dim, int offset, Fn&& fn) {
    std::vector<Complex> entries(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      entries[i] = Complex(fn(static_cast<Integer>(i) + offset));
    }
    return DiagonalOperator(offset, std::move(entries));
  }

  std::size_t dim() const { return entries_.size(); }
  int offset() const { return offset_; }
  std::span<const Complex> entries() const { return entries_; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  // Entry attached to basis vector e_k.
  const Complex& at_basis(Integer k) const;

  bool same_shape(const DiagonalOperator& other) const {
    return dim() == other.dim() && offset_ == other.offset_;
  }

  DiagonalOperator& operator+=(const DiagonalOperator& rhs);
  DiagonalOperator& operator-=(const DiagonalOperator& rhs);
  DiagonalOperator& operator*=(const DiagonalOperator& rhs);
  DiagonalOperator& operator*=(Complex c);
  DiagonalOperator& operator/=(double c);

  friend DiagonalOperator operator+(DiagonalOperator a, const DiagonalOperator& b) { return a += b; }
  friend DiagonalOperator operator-(DiagonalOperator a, const DiagonalOperator& b) { return a -= b; }
  friend DiagonalOperator operator*(DiagonalOperator a, const DiagonalOperator& b) { return a *= b; }
  friend DiagonalOperator operator*(Complex c, DiagonalOperator a) { return a *= c; }
  friend DiagonalOperator operator*(DiagonalOperator a, Complex c) { return a *= c; }
  friend DiagonalOperator operator/(DiagonalOperator a, double c) { return a /= c; }
  friend DiagonalOperator operator-(DiagonalOperator a) { return a *= Complex(-1.0); }

  friend bool operator==(const DiagonalOperator&, const DiagonalOperator&) = default;

 private:
  void require_shape(const DiagonalOperator& other) const;

  int offset_;
  std::vector<Complex> entries_;
};

// Square complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t dim, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix zero(std::size_t dim);
  static DenseMatrix from_diagonal(const DiagonalOperator& d);

  std::size_t dim() const { return dim_; }
  std::span<const Complex> entries() const { return entries_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  bool same_shape(const DenseMatrix& other) const { return dim_ == other.dim_; }

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Complex c);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(Complex c, DenseMatrix a) { return a *= c; }
  friend DenseMatrix operator*(DenseMatrix a, Complex c) { return a *= c; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= Complex(-1.0); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  void require_shape(const DenseMatrix& other) const;

  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Per-carrier hooks used by the generic algorithms. Scalars have no shape,
// so unit_like/zero_like take a prototype element.
template <class T>
struct ElementTraits;

template <>
struct ElementTraits<Integer> {
  static Integer unit_like(Integer) { return 1; }
  static Integer zero_like(Integer) { return 0; }
  static bool same_shape(Integer, Integer) { return true; }
  static double distance(Integer a, Integer b);
  static Integer invert(Integer x);
};

template <>
struct ElementTraits<Rational> {
  static Rational unit_like(const Rational&) { return Rational(1); }
  static Rational zero_like(const Rational&) { return Rational(0); }
  static bool same_shape(const Rational&, const Rational&) { return true; }
  static double distance(const Rational& a, const Rational& b);
  static Rational invert(const Rational& x);
};

template <>
struct ElementTraits<Complex> {
  static Complex unit_like(Complex) { return {1.0, 0.0}; }
  static Complex zero_like(Complex) { return {0.0, 0.0}; }
  static bool same_shape(Complex, Complex) { return true; }
  static double distance(Complex a, Complex b);
  static Complex invert(Complex x);
};

template <>
struct ElementTraits<DiagonalOperator> {
  static DiagonalOperator unit_like(const DiagonalOperator& x) {
    return DiagonalOperator::identity(x.dim(), x.offset());
  }
  static DiagonalOperator zero_like(const DiagonalOperator& x) {
    return DiagonalOperator::zero(x.dim(), x.offset());
  }
  static bool same_shape(const DiagonalOperator& a, const DiagonalOperator& b) {
    return a.same_shape(b);
  }
  // Max entrywise modulus of the difference.
  static double distance(const DiagonalOperator& a, const DiagonalOperator& b);
  static DiagonalOperator invert(const DiagonalOperator& x);
};

template <>
struct ElementTraits<DenseMatrix> {
  static DenseMatrix unit_like(const DenseMatrix& x) { return DenseMatrix::identity(x.dim()); }
  static DenseMatrix zero_like(const DenseMatrix& x) { return DenseMatrix::zero(x.dim()); }
  static bool same_shape(const DenseMatrix& a, const DenseMatrix& b) { return a.same_shape(b); }
  static double distance(const DenseMatrix& a, const DenseMatrix& b);
  static DenseMatrix invert(const DenseMatrix& x);
};

template <class T>
concept AlgebraElement = requires(T& acc, const T& x, const T& y) {
  { x + y } -> std::convertible_to<T>;
  acc += y;
  { x - y } -> std::convertible_to<T>;
  { x * y } -> std::convertible_to<T>;
  { ElementTraits<T>::unit_like(x) } -> std::same_as<T>;
  { ElementTraits<T>::zero_like(x) } -> std::same_as<T>;
  { ElementTraits<T>::same_shape(x, y) } -> std::same_as<bool>;
  { ElementTraits<T>::distance(x, y) } -> std::convertible_to<double>;
  { ElementTraits<T>::invert(x) } -> std::same_as<T>;
};

template <AlgebraElement T>
T unit_like(const T& x) { return ElementTraits<T>::unit_like(x); }

template <AlgebraElement T>
T zero_like(const T& x) { return ElementTraits<T>::zero_like(x); }

template <AlgebraElement T>
bool same_shape(const T& x, const T& y) { return ElementTraits<T>::same_shape(x, y); }

template <AlgebraElement T>
double distance(const T& x, const T& y) { return ElementTraits<T>::distance(x, y); }

template <AlgebraElement T>
bool approx_equal(const T& x, const T& y, double tol = kDefaultTolerance) {
  return distance(x, y) <= tol;
}

// Throws NonInvertibleError when x has no inverse (or the residual check of
// x * inv = inv * x = e fails at 1e-9).
template <AlgebraElement T>
T invert(const T& x) { return ElementTraits<T>::invert(x); }

template <AlgebraElement T>
bool is_idempotent(const T& x, double tol = kDefaultTolerance) {
  return distance(T(x * x), x) <= tol;
}

Complex trace(const DiagonalOperator& x);
Complex trace(const DenseMatrix& x);

Complex determinant(const DiagonalOperator& x);
// LU with partial pivoting; pivots below 1e-12 give 0.
Complex determinant(const DenseMatrix& x);

// Max modulus of the entries.
double operator_norm(const DiagonalOperator& x);
// Max absolute row sum.
double operator_norm(const DenseMatrix& x);

}  // namespace idemarith
