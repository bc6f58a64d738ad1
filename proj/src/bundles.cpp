#include "orbimap/bundles.hpp"

#include <algorithm>

#include "orbimap/error.hpp"

namespace orbimap {

PullbackBundleData pullback(const CompleteMap& m) {
  PullbackBundleData b{m, m.dst.dim(), {}};
  const auto& src = *m.src.group;
  b.fiber_action.reserve(src.order());
  for (std::size_t g = 0; g < src.order(); ++g) b.fiber_action.push_back(m.theta.image_matrix(g));
  if (!combined_action_is_group_action(b)) {
    throw std::logic_error("pullback fiber action violates the group law");
  }
  return b;
}

PullbackBundleData tangent_bundle(const QuotientChart& chart) {
  return pullback(identity_complete_map(chart));
}

bool combined_action_is_group_action(const PullbackBundleData& b) {
  const auto& g = *b.base_group();
  if (b.fiber_action.size() != g.order()) return false;
  if (!b.fiber_action[g.identity()].is_identity()) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      // Base part is the group's own table; only the fiber part can fail.
      if (!(b.fiber_action[x] * b.fiber_action[y] == b.fiber_action[g.multiply(x, y)])) return false;
    }
  return true;
}

bool pullbacks_equivalent(const PullbackBundleData& a, const PullbackBundleData& b) {
  if (!(a.base.src == b.base.src)) fail(ErrorCode::BundleMismatch, "bundles over different base charts");
  if (a.fiber_dim != b.fiber_dim) fail(ErrorCode::BundleMismatch, "fiber dimensions differ");
  return representations_equivalent(*a.base_group(), a.fiber_action, b.fiber_action);
}

Subspace admissible_subspace(const PullbackBundleData& b, bool at_origin) {
  if (!at_origin) return Subspace::whole(b.fiber_dim);
  Matrix sum(b.fiber_dim, b.fiber_dim);
  for (const auto& m : b.fiber_action) sum = sum + m;
  const Matrix p = Rational(1, static_cast<unsigned long>(b.fiber_action.size())) * sum;
  return Subspace::column_space(p);
}

Orbisection make_orbisection(const PullbackBundleData& b, PolyMap s) {
  if (s.src_dim() != b.base.src.dim() || s.dst_dim() != b.fiber_dim) {
    fail(ErrorCode::DimensionMismatch, "section dimensions do not match the bundle");
  }
  if (!is_equivariant(s, b.base.theta)) {
    fail(ErrorCode::NotEquivariant, "section is not equivariant for the fiber action");
  }
  return Orbisection{b, std::move(s)};
}

Orbisection zero_section(const PullbackBundleData& b) {
  return Orbisection{b, PolyMap::zero(b.base.src.dim(), b.fiber_dim)};
}

Orbisection orbisection_add(const Orbisection& a, const Orbisection& b) {
  if (!(a.bundle.base == b.bundle.base)) fail(ErrorCode::BundleMismatch, "sections of different bundles");
  return make_orbisection(a.bundle, a.section + b.section);
}

Orbisection orbisection_scale(const Rational& lambda, const Orbisection& s) {
  return make_orbisection(s.bundle, lambda * s.section);
}

std::vector<std::vector<std::size_t>> nonempty_index_sets(std::size_t k) {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) j.push_back(i + 1);
    sets.push_back(std::move(j));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

Subspace glued_fiber(const std::vector<CompleteMap>& lifts, const std::vector<std::size_t>& positions) {
  const std::size_t m = lifts.front().dst.dim();
  if (positions.size() < 2) return Subspace::whole(m);
  const auto& src = *lifts.front().src.group;
  std::vector<Vector> rows;
  const auto& first = lifts.at(positions.front()).theta;
  for (std::size_t p = 1; p < positions.size(); ++p) {
    const auto& other = lifts.at(positions[p]).theta;
    for (std::size_t g = 0; g < src.order(); ++g) {
      const Matrix diff = first.image_matrix(g) - other.image_matrix(g);
      for (std::size_t r = 0; r < m; ++r) rows.push_back(diff.row(r));
    }
  }
  return Subspace::null_space(Matrix::from_rows(rows));
}

GluedPullbackReport glued_pullback(const OrbifoldMap& f, std::size_t max_lifts, std::size_t hom_cap) {
  GluedPullbackReport report;
  report.lifts = complete_lifts_over(f, hom_cap);
  report.fiber_dim = f.dst.dim();
  const std::size_t k = report.lifts.size();
  if (k == 0) fail(ErrorCode::NoLifts, "the map has no complete lifts");
  if (k > max_lifts) {
    fail(ErrorCode::CapExceeded,
         std::to_string(k) + " complete lifts exceed the cap of " + std::to_string(max_lifts));
  }
  const auto& src = *f.src.group;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      GluedPairRelation rel{i + 1, j + 1, {}};
      for (std::size_t b = 0; b < report.fiber_dim; ++b) {
        bool related = true;
        for (std::size_t g = 0; g < src.order() && related; ++g) {
          related = report.lifts[i].theta.image_matrix(g).column(b) ==
                    report.lifts[j].theta.image_matrix(g).column(b);
        }
        rel.basis_related.push_back(related);
      }
      report.pairs.push_back(std::move(rel));
    }
  for (const auto& indices : nonempty_index_sets(k)) {
    std::vector<std::size_t> positions;
    for (std::size_t i : indices) positions.push_back(i - 1);
    report.pieces.push_back(GluedPiece{indices, glued_fiber(report.lifts, positions)});
  }
  return report;
}

}  // namespace orbimap
