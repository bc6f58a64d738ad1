#include "orbimap/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "orbimap/error.hpp"

namespace orbimap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonOrthogonalGenerator: return "NonOrthogonalGenerator";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::BundleMismatch: return "BundleMismatch";
    case ErrorCode::ThetaMismatch: return "ThetaMismatch";
    case ErrorCode::NoLifts: return "NoLifts";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorCode::MalformedInput, "not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> converted;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    converted.push_back(std::move(v));
  }
  return from_rows(converted);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_); }

bool Matrix::is_orthogonal() const { return is_square() && (transpose() * *this).is_identity(); }

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool lex_less(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Echelon rref(Matrix m) {
  Echelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  if (vectors.empty()) return Subspace(ambient);
  Matrix m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) fail(ErrorCode::DimensionMismatch, "spanning vector length");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  Echelon e = rref(m);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::null_space(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return span(m.cols(), vectors);
}

Matrix Subspace::basis_matrix() const {
  Matrix m(basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = basis_[r][c];
  return m;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "vector length vs subspace ambient");
  Vector rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational coeff = rest[pivots_[r]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) rest[c] -= coeff * basis_[r][c];
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(ambient_);
  return null_space(basis_matrix());
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::DimensionMismatch, "intersecting subspaces");
  std::vector<Vector> constraints = annihilator().basis_;
  const auto more = other.annihilator().basis_;
  constraints.insert(constraints.end(), more.begin(), more.end());
  if (constraints.empty()) return whole(ambient_);
  return null_space(Matrix::from_rows(constraints));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::DimensionMismatch, "summing subspaces");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

}  // namespace orbimap
