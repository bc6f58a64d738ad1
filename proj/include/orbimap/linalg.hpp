#pragma once

// Dense exact linear algebra over the rationals (GMP mpq).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbimap {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0) into canonical form.
/// Throws Error(MalformedInput) on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
bool lex_less(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::span<const Rational> entries() const noexcept { return data_; }

  Matrix transpose() const;
  Rational trace() const;
  bool is_identity() const;
  /// Mᵀ·M = I exactly.
  bool is_orthogonal() const;

  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Canonical total order: shape first, then row-major entries lexicographically.
bool lex_less(const Matrix& a, const Matrix& b);

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const { return lex_less(a, b); }
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with exact pivoting.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Qⁿ stored by its reduced row echelon basis, so
/// equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace whole(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);
  /// {x : m·x = 0}
  static Subspace null_space(const Matrix& m);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// Orthogonal complement with respect to the standard dot product.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbimap
