#pragma once

// Fixture groups and independent oracles shared by the unit and acceptance
// tests. Oracles avoid the library's multiplication tables, Reynolds
// projectors and coefficient actions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbimap/fixtures.hpp"
#include "orbimap/groups.hpp"
#include "orbimap/polymap.hpp"

namespace support {

using namespace orbimap;

inline GroupPtr group_of(std::size_t dim, std::vector<Matrix> gens) { return close_group(dim, gens); }

inline Matrix perm(const std::vector<std::size_t>& images) {
  Matrix m(images.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) m(images[c], c) = 1;
  return m;
}

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// Groups of order ≤ 8 used by the enumeration property tests.
inline std::vector<NamedGroup> small_groups() {
  const Matrix q_i = Matrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  const Matrix q_j = Matrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  const Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}});
  const Matrix cyc = perm({1, 2, 0});
  return {
      {"trivial", group_of(1, {})},
      {"Z2", fixtures::line_z2().group},
      {"Z2xZ2", fixtures::z2xz2().group},
      {"Z2^3", fixtures::z2_cubed().group},
      {"S3", fixtures::s3().group},
      {"Z4", group_of(2, {rot})},
      {"D4", group_of(2, {rot, Matrix::diagonal({1, -1})})},
      {"Z3", group_of(3, {cyc})},
      {"Z6", group_of(3, {Rational(-1) * cyc})},
      {"Q8", group_of(4, {q_i, q_j})},
  };
}

/// Index of a matrix by linear search.
inline std::size_t find_element(const std::vector<Matrix>& elements, const Matrix& m) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return i;
  throw std::logic_error("element not found");
}

/// Product table computed by matrix multiplication and linear search.
inline std::vector<std::vector<std::size_t>> product_table(const std::vector<Matrix>& elements) {
  std::vector<std::vector<std::size_t>> t(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) t[a][b] = find_element(elements, elements[a] * elements[b]);
  return t;
}

/// Every map S → T (as element assignments) satisfying h(ab) = h(a)h(b),
/// found by exhaustive search over assignments with partial-product pruning.
inline std::vector<std::vector<std::size_t>> brute_force_homs(const FiniteMatrixGroup& s,
                                                               const FiniteMatrixGroup& t) {
  const auto st = product_table(s.elements());
  const auto tt = product_table(t.elements());
  const std::size_t n = s.order();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> h(n);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      out.push_back(h);
      return;
    }
    for (std::size_t img = 0; img < t.order(); ++img) {
      h[i] = img;
      bool ok = true;
      for (std::size_t a = 0; a <= i && ok; ++a)
        for (std::size_t b = 0; b <= i && ok; ++b) {
          const std::size_t ab = st[a][b];
          if (ab <= i && h[ab] != tt[h[a]][h[b]]) ok = false;
        }
      if (ok) extend(i + 1);
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// ∩ ker(h − I) over the members.
inline Subspace eigen_fixed(const Subgroup& h) {
  const auto& g = *h.parent();
  Subspace s = Subspace::whole(g.dim());
  for (auto m : h.members()) s = s.intersect(Subspace::null_space(g.element(m) - Matrix::identity(g.dim())));
  return s;
}

inline Rational monomial_value(const Exponents& e, const Vector& x) {
  Rational v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) v *= x[i];
  return v;
}

/// {s : s(γx) = Θ(γ)s(x)} by solving the equivariance equations at random
/// integer sample points for every group element.
inline Subspace equivariant_by_sampling(const GroupHom& theta, unsigned degree, std::uint64_t seed = 7) {
  const auto& src = *theta.source();
  const std::size_t n = src.dim();
  const std::size_t m = theta.target()->dim();
  const auto basis = monomial_basis(n, degree);
  const std::size_t nb = basis.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-7, 7);
  std::vector<Vector> rows;
  const std::size_t samples = 2 * nb + 4;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& c : x) c = coord(rng);
    for (std::size_t g = 0; g < src.order(); ++g) {
      const Vector gx = src.element(g).apply(x);
      const Matrix& t = theta.image_matrix(g);
      for (std::size_t c = 0; c < m; ++c) {
        Vector row = zero_vector(m * nb);
        for (std::size_t i = 0; i < nb; ++i) {
          row[c * nb + i] += monomial_value(basis[i], gx);
          for (std::size_t c2 = 0; c2 < m; ++c2) row[c2 * nb + i] -= t(c, c2) * monomial_value(basis[i], x);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return Subspace::null_space(Matrix::from_rows(rows));
}

/// Reynolds image computed map by map: (1/|Γ|)·Σ Θ(γ)·e∘γ⁻¹ for each
/// coefficient basis map e, via polynomial substitution.
inline Subspace reynolds_by_substitution(const GroupHom& theta, unsigned degree) {
  const auto& src = *theta.source();
  const std::size_t n = src.dim();
  const std::size_t m = theta.target()->dim();
  const std::size_t dim = coeff_space_dim(n, m, degree);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector e = zero_vector(dim);
    e[k] = 1;
    const PolyMap p = from_coeffs(n, m, degree, e);
    PolyMap sum = PolyMap::zero(n, m);
    for (std::size_t g = 0; g < src.order(); ++g)
      sum += conjugate_by_linear(p, src.element(src.inverse(g)), theta.image_matrix(g));
    images.push_back(to_coeffs(Rational(1, static_cast<unsigned long>(src.order())) * sum, degree).coeffs);
  }
  return Subspace::span(dim, images);
}

/// Equivariant-subspace dimension for ℤ₂ acting on ℝ by −1 and Θ(α) a
/// diagonal sign matrix: component c admits monomials y^e with (−1)^e = sign_c.
inline std::size_t parity_dim(const std::vector<int>& signs, unsigned degree) {
  std::size_t total = 0;
  for (int s : signs)
    for (unsigned e = 0; e <= degree; ++e)
      if ((e % 2 == 0 ? 1 : -1) == s) ++total;
  return total;
}

/// Searches for an invertible P with P·ρ₁(g) = ρ₂(g)·P for all g.
inline bool conjugate_by_solve(const FiniteMatrixGroup& g, const std::vector<Matrix>& r1,
                               const std::vector<Matrix>& r2) {
  const std::size_t d = r1.front().rows();
  if (r2.front().rows() != d) return false;
  std::vector<Vector> rows;
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // (P·A − B·P)_{ij} with P_{rc} at index r·d + c
        Vector row = zero_vector(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] += r1[e](k, j);
          row[k * d + j] -= r2[e](i, k);
        }
        rows.push_back(std::move(row));
      }
  const Subspace sol = Subspace::null_space(Matrix::from_rows(rows));
  if (sol.dim() == 0) return false;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> w(-5, 5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector p = zero_vector(d * d);
    for (const auto& b : sol.basis()) {
      const long c = attempt == 0 ? 1 : w(rng);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * b[i];
    }
    Matrix pm(d, d);
    for (std::size_t i = 0; i < d * d; ++i) pm(i / d, i % d) = p[i];
    if (rank(pm) == d) return true;
  }
  return false;
}

inline std::vector<Matrix> rep_of(const GroupHom& h) {
  std::vector<Matrix> out;
  for (std::size_t g = 0; g < h.source()->order(); ++g) out.push_back(h.image_matrix(g));
  return out;
}

}  // namespace support
