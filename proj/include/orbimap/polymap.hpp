#pragma once

// Exact polynomial maps Qⁿ → Qᵐ and the linear algebra of their
// coefficient spaces.

#include <cstddef>
#include <map>
#include <vector>

#include "orbimap/groups.hpp"
#include "orbimap/linalg.hpp"

namespace orbimap {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded-lex: lower total degree first; within a degree, exponent tuples in
/// descending lexicographic order (x₁ before x₂).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All monomials in `nvars` variables of total degree ≤ degree, graded-lex.
std::vector<Exponents> monomial_basis(std::size_t nvars, unsigned degree);

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  Rational coefficient(const Exponents& e) const;

  /// Adds c·x^e; zero results are erased so storage stays canonical.
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(const Vector& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

class PolyMap {
 public:
  PolyMap() = default;
  /// Throws DimensionMismatch if a component has the wrong variable count.
  PolyMap(std::size_t src_dim, std::vector<Polynomial> components);

  static PolyMap zero(std::size_t src_dim, std::size_t dst_dim);
  static PolyMap identity(std::size_t dim);
  /// x ↦ A·x + b
  static PolyMap affine(const Matrix& a, const Vector& b);

  std::size_t src_dim() const noexcept { return src_dim_; }
  std::size_t dst_dim() const noexcept { return components_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  unsigned degree() const;
  bool is_zero() const;

  /// Throws DimensionMismatch.
  Vector evaluate(const Vector& x) const;

  PolyMap& operator+=(const PolyMap& other);
  PolyMap& operator-=(const PolyMap& other);
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
  friend PolyMap operator*(const Rational& s, PolyMap p);
  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.src_dim_ == b.src_dim_ && a.components_ == b.components_;
  }

 private:
  std::size_t src_dim_ = 0;
  std::vector<Polynomial> components_;
};

/// x ↦ B·p(A·x). Throws DimensionMismatch.
PolyMap conjugate_by_linear(const PolyMap& p, const Matrix& a, const Matrix& b);
/// x ↦ B·p(x)
PolyMap post_compose(const Matrix& b, const PolyMap& p);
/// p ∘ q
PolyMap compose(const PolyMap& p, const PolyMap& q);

/// Flat coefficients in component-major order: entry c·N + i is the
/// coefficient of monomial i (graded-lex, degree ≤ d) in component c.
struct CoeffVector {
  std::size_t src_dim = 0;
  std::size_t dst_dim = 0;
  unsigned degree = 0;
  Vector coeffs;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

std::size_t coeff_space_dim(std::size_t src_dim, std::size_t dst_dim, unsigned degree);
/// Throws DimensionMismatch when p has a term above `degree`.
CoeffVector to_coeffs(const PolyMap& p, unsigned degree);
PolyMap from_coeffs(const CoeffVector& v);
PolyMap from_coeffs(std::size_t src_dim, std::size_t dst_dim, unsigned degree, const Vector& coeffs);

enum class EquivarianceCheck { Generators, FullGroup };

/// p(γ·x) = Θ(γ)·p(x) as a polynomial identity, for the generators of the
/// source group (sufficient by homomorphy) or for every element.
/// Throws DimensionMismatch.
bool is_equivariant(const PolyMap& p, const GroupHom& theta,
                    EquivarianceCheck mode = EquivarianceCheck::Generators);

inline constexpr std::size_t kDefaultCoeffSpaceCap = 4096;

/// Matrix of s ↦ B·(s∘A) on the degree-≤d coefficient space.
Matrix coefficient_action(const Matrix& a, const Matrix& b, unsigned degree);
/// (1/|Γ|)·Σ_γ Θ(γ)·s∘γ⁻¹ on the coefficient space; idempotent.
Matrix equivariant_reynolds(const GroupHom& theta, unsigned degree,
                            std::size_t cap = kDefaultCoeffSpaceCap);
/// Exact basis of the Θ-equivariant maps of degree ≤ d (in CoeffVector
/// coordinates). Throws CapExceeded when the coefficient space is too big.
Subspace equivariant_subspace(const GroupHom& theta, unsigned degree,
                              std::size_t cap = kDefaultCoeffSpaceCap);

}  // namespace orbimap
