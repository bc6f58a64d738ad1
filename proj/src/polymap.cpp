#include "orbimap/polymap.hpp"

#include <algorithm>
#include <numeric>

#include "orbimap/error.hpp"

namespace orbimap {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponents> monomial_basis(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents current(nvars, 0);
  // Depth-first over exponent tuples with bounded total degree.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == nvars) {
      out.push_back(current);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      current[var] = k;
      self(self, var + 1, remaining - k);
    }
    current[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorCode::DimensionMismatch, "variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) fail(ErrorCode::DimensionMismatch, "monomial has wrong variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(const Vector& x) const {
  if (x.size() != nvars_) fail(ErrorCode::DimensionMismatch, "point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) fail(ErrorCode::DimensionMismatch, "polynomial sum");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) fail(ErrorCode::DimensionMismatch, "polynomial difference");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomial product");
  Polynomial p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

// ---------------------------------------------------------------- PolyMap

PolyMap::PolyMap(std::size_t src_dim, std::vector<Polynomial> components)
    : src_dim_(src_dim), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.nvars() != src_dim_) fail(ErrorCode::DimensionMismatch, "component has wrong variable count");
}

PolyMap PolyMap::zero(std::size_t src_dim, std::size_t dst_dim) {
  return PolyMap(src_dim, std::vector<Polynomial>(dst_dim, Polynomial(src_dim)));
}

PolyMap PolyMap::identity(std::size_t dim) { return affine(Matrix::identity(dim), zero_vector(dim)); }

PolyMap PolyMap::affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "affine offset length");
  std::vector<Polynomial> comps;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Polynomial p = Polynomial::constant(a.cols(), b[r]);
    for (std::size_t c = 0; c < a.cols(); ++c) p += a(r, c) * Polynomial::variable(a.cols(), c);
    comps.push_back(std::move(p));
  }
  return PolyMap(a.cols(), std::move(comps));
}

unsigned PolyMap::degree() const {
  unsigned d = 0;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool PolyMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

Vector PolyMap::evaluate(const Vector& x) const {
  if (x.size() != src_dim_) fail(ErrorCode::DimensionMismatch, "point has wrong dimension");
  Vector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(x));
  return out;
}

PolyMap& PolyMap::operator+=(const PolyMap& other) {
  if (other.src_dim_ != src_dim_ || other.dst_dim() != dst_dim())
    fail(ErrorCode::DimensionMismatch, "polynomial map sum");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

PolyMap& PolyMap::operator-=(const PolyMap& other) {
  if (other.src_dim_ != src_dim_ || other.dst_dim() != dst_dim())
    fail(ErrorCode::DimensionMismatch, "polynomial map difference");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

PolyMap operator*(const Rational& s, PolyMap p) {
  for (auto& c : p.components_) c *= s;
  return p;
}

PolyMap post_compose(const Matrix& b, const PolyMap& p) {
  if (b.cols() != p.dst_dim()) fail(ErrorCode::DimensionMismatch, "target matrix vs map codomain");
  std::vector<Polynomial> comps(b.rows(), Polynomial(p.src_dim()));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (sgn(b(r, c)) != 0) comps[r] += b(r, c) * p.component(c);
  return PolyMap(p.src_dim(), std::move(comps));
}

PolyMap compose(const PolyMap& p, const PolyMap& q) {
  if (q.dst_dim() != p.src_dim()) fail(ErrorCode::DimensionMismatch, "composition dimensions");
  const std::size_t n = q.src_dim();
  // powers[i][k] = q_i^k, filled on demand.
  std::vector<std::vector<Polynomial>> powers(p.src_dim(), {Polynomial::constant(n, Rational(1))});
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * q.component(i));
    return powers[i][k];
  };
  std::vector<Polynomial> comps;
  for (const auto& comp : p.components()) {
    Polynomial out(n);
    for (const auto& [e, c] : comp.terms()) {
      Polynomial term = Polynomial::constant(n, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * power(i, e[i]);
      out += term;
    }
    comps.push_back(std::move(out));
  }
  return PolyMap(n, std::move(comps));
}

PolyMap conjugate_by_linear(const PolyMap& p, const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != p.src_dim())
    fail(ErrorCode::DimensionMismatch, "source matrix must be n x n");
  if (!b.is_square() || b.rows() != p.dst_dim())
    fail(ErrorCode::DimensionMismatch, "target matrix must be m x m");
  return post_compose(b, compose(p, PolyMap::affine(a, zero_vector(a.rows()))));
}

// ---------------------------------------------------------------- coefficients

std::size_t coeff_space_dim(std::size_t src_dim, std::size_t dst_dim, unsigned degree) {
  return dst_dim * monomial_basis(src_dim, degree).size();
}

CoeffVector to_coeffs(const PolyMap& p, unsigned degree) {
  if (p.degree() > degree) {
    fail(ErrorCode::DimensionMismatch, "map degree " + std::to_string(p.degree()) +
                                           " exceeds degree bound " + std::to_string(degree));
  }
  const auto basis = monomial_basis(p.src_dim(), degree);
  CoeffVector v{p.src_dim(), p.dst_dim(), degree, zero_vector(p.dst_dim() * basis.size())};
  for (std::size_t c = 0; c < p.dst_dim(); ++c)
    for (std::size_t i = 0; i < basis.size(); ++i)
      v.coeffs[c * basis.size() + i] = p.component(c).coefficient(basis[i]);
  return v;
}

PolyMap from_coeffs(std::size_t src_dim, std::size_t dst_dim, unsigned degree, const Vector& coeffs) {
  const auto basis = monomial_basis(src_dim, degree);
  if (coeffs.size() != dst_dim * basis.size())
    fail(ErrorCode::DimensionMismatch, "coefficient vector length");
  std::vector<Polynomial> comps(dst_dim, Polynomial(src_dim));
  for (std::size_t c = 0; c < dst_dim; ++c)
    for (std::size_t i = 0; i < basis.size(); ++i)
      comps[c].add_term(basis[i], coeffs[c * basis.size() + i]);
  return PolyMap(src_dim, std::move(comps));
}

PolyMap from_coeffs(const CoeffVector& v) {
  return from_coeffs(v.src_dim, v.dst_dim, v.degree, v.coeffs);
}

bool is_equivariant(const PolyMap& p, const GroupHom& theta, EquivarianceCheck mode) {
  const auto& src = *theta.source();
  const auto& dst = *theta.target();
  if (src.dim() != p.src_dim() || dst.dim() != p.dst_dim()) {
    fail(ErrorCode::DimensionMismatch, "map dimensions do not match the group actions");
  }
  std::vector<std::size_t> to_check;
  if (mode == EquivarianceCheck::Generators) {
    to_check = src.generators();
  } else {
    to_check.resize(src.order());
    std::iota(to_check.begin(), to_check.end(), std::size_t{0});
  }
  for (std::size_t g : to_check) {
    const PolyMap lhs = conjugate_by_linear(p, src.element(g), Matrix::identity(p.dst_dim()));
    const PolyMap rhs = post_compose(theta.image_matrix(g), p);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Matrix coefficient_action(const Matrix& a, const Matrix& b, unsigned degree) {
  const std::size_t n = a.cols();
  const std::size_t m = b.rows();
  const auto basis = monomial_basis(n, degree);
  const std::size_t nb = basis.size();
  // subst(i', i): coefficient of monomial i' in (A·x)^{basis[i]}.
  const PolyMap linear = PolyMap::affine(a, zero_vector(a.rows()));
  Matrix subst(nb, nb);
  for (std::size_t i = 0; i < nb; ++i) {
    Polynomial mono(n);
    mono.add_term(basis[i], Rational(1));
    const PolyMap image = compose(PolyMap(n, {mono}), linear);
    for (std::size_t k = 0; k < nb; ++k) subst(k, i) = image.component(0).coefficient(basis[k]);
  }
  Matrix action(m * nb, m * nb);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (sgn(b(r, c)) == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t i = 0; i < nb; ++i)
          if (sgn(subst(k, i)) != 0) action(r * nb + k, c * nb + i) = b(r, c) * subst(k, i);
    }
  return action;
}

Matrix equivariant_reynolds(const GroupHom& theta, unsigned degree, std::size_t cap) {
  const auto& src = *theta.source();
  const std::size_t dim = coeff_space_dim(src.dim(), theta.target()->dim(), degree);
  if (dim > cap) {
    fail(ErrorCode::CapExceeded, "coefficient space dimension " + std::to_string(dim) +
                                     " exceeds cap " + std::to_string(cap));
  }
  Matrix sum(dim, dim);
  for (std::size_t g = 0; g < src.order(); ++g) {
    sum = sum + coefficient_action(src.element(src.inverse(g)), theta.image_matrix(g), degree);
  }
  return Rational(1, static_cast<unsigned long>(src.order())) * sum;
}

Subspace equivariant_subspace(const GroupHom& theta, unsigned degree, std::size_t cap) {
  const Matrix r = equivariant_reynolds(theta, degree, cap);
  if (!(r * r == r)) throw std::logic_error("coefficient Reynolds operator is not idempotent");
  return Subspace::column_space(r);
}

}  // namespace orbimap
