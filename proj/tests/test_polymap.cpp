#include <doctest.h>

#include <random>

#include "orbimap/error.hpp"
#include "support.hpp"

using namespace orbimap;

namespace {

Polynomial y_pow(unsigned e, const Rational& c = 1) {
  Polynomial p(1);
  p.add_term({e}, c);
  return p;
}

GroupHom alpha_to(const QuotientChart& dst, const Matrix& image) {
  const auto src = fixtures::line_z2().group;
  const std::vector<std::size_t> gen{dst.group->index_of(image).value()};
  return GroupHom::from_generator_images(src, dst.group, gen);
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(fixtures::axis_inclusion().evaluate({2}) == Vector{2, 0, 0});
  CHECK(is_zero(PolyMap::zero(2, 3).evaluate({5, -1})));
  const PolyMap p(1, {y_pow(3) - y_pow(1)});
  CHECK(p.evaluate({3}) == Vector{24});
  CHECK_THROWS_AS(p.evaluate({1, 2}), Error);
}

TEST_CASE("conjugate_by_linear") {
  const PolyMap f = fixtures::axis_inclusion();
  CHECK(conjugate_by_linear(f, Matrix::from_rows({{-1}}), fixtures::j_matrix()) == f);
  CHECK(conjugate_by_linear(f, Matrix::identity(1), Matrix::identity(3)) == f);
  const PolyMap sq(1, {y_pow(2)});
  CHECK(conjugate_by_linear(sq, Matrix::from_rows({{-1}}), Matrix::identity(1)) == sq);
  CHECK_THROWS_AS(conjugate_by_linear(f, Matrix::identity(2), Matrix::identity(3)), Error);
}

TEST_CASE("polynomial arithmetic keeps canonical storage") {
  Polynomial p = y_pow(2) + y_pow(1);
  p -= y_pow(2);
  CHECK(p == y_pow(1));
  CHECK(p.terms().size() == 1);
  CHECK((y_pow(1) * y_pow(2)) == y_pow(3));
  CHECK((Rational(0) * p).is_zero());
}

TEST_CASE("coefficient vectors round-trip and use graded-lex order") {
  const auto basis = monomial_basis(2, 2);
  const std::vector<Exponents> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(basis == expected);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Vector v(coeff_space_dim(2, 3, 3));
    for (auto& x : v) {
      x = Rational(c(rng), 1 + trial % 3);
      x.canonicalize();
    }
    const PolyMap p = from_coeffs(2, 3, 3, v);
    CHECK(to_coeffs(p, 3).coeffs == v);
  }
  CHECK_THROWS_AS(to_coeffs(PolyMap(1, {y_pow(4)}), 3), Error);
}

TEST_CASE("is_equivariant examples") {
  const auto v4 = fixtures::z2xz2();
  const PolyMap f = fixtures::axis_inclusion();
  CHECK(is_equivariant(f, alpha_to(v4, fixtures::j_matrix())));
  CHECK_FALSE(is_equivariant(f, alpha_to(v4, fixtures::j_matrix() * fixtures::k_matrix())));
  CHECK(is_equivariant(PolyMap::zero(1, 3), alpha_to(v4, fixtures::k_matrix())));

  const QuotientChart flip{"flip", close_group(2, std::vector<Matrix>{Matrix::diagonal({1, -1})})};
  const PolyMap p(1, {y_pow(2), y_pow(1)});
  CHECK(is_equivariant(p, alpha_to(flip, Matrix::diagonal({1, -1}))));
}

TEST_CASE("generator mode agrees with full-group mode") {
  const auto groups = support::small_groups();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-2, 2);
  for (const auto& [sn, s] : groups) {
    if (s->dim() > 3) continue;
    for (const auto& [tn, t] : groups) {
      if (t->dim() > 3) continue;
      for (const auto& h : enumerate_homomorphisms(s, t)) {
        const Subspace w = equivariant_subspace(h, 2);
        Vector v = zero_vector(w.ambient());
        for (const auto& b : w.basis())
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += c(rng) * b[i];
        v[0] += 1;  // often pushes v out of W
        const PolyMap p = from_coeffs(s->dim(), t->dim(), 2, v);
        CHECK(is_equivariant(p, h, EquivarianceCheck::Generators) ==
              is_equivariant(p, h, EquivarianceCheck::FullGroup));
      }
    }
  }
}

TEST_CASE("equivariant_subspace examples") {
  const auto v4 = fixtures::z2xz2();
  const GroupHom tj = alpha_to(v4, fixtures::j_matrix());
  const GroupHom tk = alpha_to(v4, fixtures::k_matrix());
  const Subspace wj = equivariant_subspace(tj, 3);
  const Subspace wk = equivariant_subspace(tk, 3);
  CHECK(wj.dim() == 6);
  CHECK(wj.dim() == support::parity_dim({-1, 1, -1}, 3));
  CHECK(wk.dim() == support::parity_dim({-1, -1, 1}, 3));
  CHECK(wj.intersect(wk).dim() == 2);

  const auto triv = fixtures::trivial_chart(2);
  const GroupHom id = GroupHom::identity(triv.group);
  CHECK(equivariant_subspace(GroupHom::trivial(triv.group, fixtures::trivial_chart(3).group), 3).dim() ==
        3 * monomial_basis(2, 3).size());
  CHECK(equivariant_subspace(id, 2).dim() == coeff_space_dim(2, 2, 2));
  CHECK_THROWS_AS(equivariant_subspace(id, 40, 100), Error);
}

TEST_CASE("equivariant subspaces match the sampling and substitution oracles") {
  const auto groups = support::small_groups();
  for (const auto& [sn, s] : groups) {
    if (s->dim() > 3) continue;
    for (const auto& [tn, t] : groups) {
      if (t->dim() > 3 || (s->order() > 4 && t->order() > 4)) continue;
      for (const auto& h : enumerate_homomorphisms(s, t)) {
        INFO(sn << " -> " << tn);
        const Subspace w = equivariant_subspace(h, 2);
        CHECK(w == support::equivariant_by_sampling(h, 2));
        CHECK(w == support::reynolds_by_substitution(h, 2));
        for (const auto& b : w.basis()) CHECK(is_equivariant(from_coeffs(s->dim(), t->dim(), 2, b), h));
      }
    }
  }
}

TEST_CASE("vectors outside the equivariant subspace fail the identity; sums stay inside") {
  const auto v4 = fixtures::z2xz2();
  const GroupHom tj = alpha_to(v4, fixtures::j_matrix());
  const Subspace w = equivariant_subspace(tj, 3);
  const Matrix r = equivariant_reynolds(tj, 3);
  CHECK(r * r == r);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-5, 5);
  for (std::size_t k = 0; k < w.ambient(); ++k) {
    Vector e = zero_vector(w.ambient());
    e[k] = 1;
    if (w.contains(e)) continue;
    Vector v = e;
    for (const auto& b : w.basis())
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c(rng) * b[i];
    CHECK_FALSE(is_equivariant(from_coeffs(1, 3, 3, v), tj));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Vector a = zero_vector(w.ambient()), b = a;
    for (const auto& bv : w.basis())
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += c(rng) * bv[i];
        b[i] += c(rng) * bv[i];
      }
    const PolyMap pa = from_coeffs(1, 3, 3, a), pb = from_coeffs(1, 3, 3, b);
    CHECK(is_equivariant(pa + pb, tj));
    CHECK(is_equivariant(Rational(c(rng), 7) * pa, tj));
  }
}
