#pragma once

// Chart data of tangent and pullback orbibundles, orbisections, and the
// bundle glued from all complete lifts of an orbifold map.

#include <cstddef>
#include <vector>

#include "orbimap/groups.hpp"
#include "orbimap/maps.hpp"

namespace orbimap {

/// ★f*(T𝒫) over the source chart: γ·(ỹ, ṽ) = (γ·ỹ, Θ(γ)·ṽ). Target actions
/// are linear, so the fiber differential of Θ(γ) is Θ(γ) itself.
struct PullbackBundleData {
  CompleteMap base;
  std::size_t fiber_dim = 0;
  std::vector<Matrix> fiber_action;  // indexed by element of the source group

  const GroupPtr& base_group() const { return base.src.group; }
};

PullbackBundleData pullback(const CompleteMap& m);
PullbackBundleData tangent_bundle(const QuotientChart& chart);

/// The combined action on Ũ×ℝᵐ obeys the group law (checked on the table).
bool combined_action_is_group_action(const PullbackBundleData& b);

/// Fiber representations compared by character. Throws BundleMismatch when
/// the base charts or fiber dimensions differ.
bool pullbacks_equivalent(const PullbackBundleData& a, const PullbackBundleData& b);

/// Vectors an orbisection may take at a point: at the origin (full isotropy)
/// the fixed space of the fiber action; elsewhere the isotropy is trivial.
Subspace admissible_subspace(const PullbackBundleData& b, bool at_origin = true);

/// Equivariant section s(γ·ỹ) = Θ(γ)·s(ỹ); the homomorphism of an orbisection
/// is forced to be the identity, so it is not stored.
struct Orbisection {
  PullbackBundleData bundle;
  PolyMap section;
};

/// Throws DimensionMismatch or NotEquivariant.
Orbisection make_orbisection(const PullbackBundleData& b, PolyMap s);
Orbisection zero_section(const PullbackBundleData& b);
/// Throws BundleMismatch.
Orbisection orbisection_add(const Orbisection& a, const Orbisection& b);
Orbisection orbisection_scale(const Rational& lambda, const Orbisection& s);

struct GluedPiece {
  std::vector<std::size_t> indices;  // J, 1-based and sorted
  Subspace subspace;                 // (TṼ)_J
};

struct GluedPairRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  /// For each standard basis vector e_b: Θᵢ(γ)·e_b = Θⱼ(γ)·e_b for all γ.
  std::vector<bool> basis_related;
};

struct GluedPullbackReport {
  std::vector<CompleteMap> lifts;
  std::size_t fiber_dim = 0;
  std::vector<GluedPairRelation> pairs;
  std::vector<GluedPiece> pieces;  // every nonempty J, sorted
};

inline constexpr std::size_t kDefaultMaxLifts = 16;

/// Throws NoLifts or CapExceeded (more than `max_lifts` complete lifts).
GluedPullbackReport glued_pullback(const OrbifoldMap& f, std::size_t max_lifts = kDefaultMaxLifts,
                                   std::size_t hom_cap = kDefaultHomEnumerationCap);

/// {v : Θᵢ(γ)·v = Θⱼ(γ)·v for all i, j ∈ J and γ}; J holds 0-based positions.
Subspace glued_fiber(const std::vector<CompleteMap>& lifts, const std::vector<std::size_t>& positions);

/// Nonempty subsets of {1..k} in lexicographic order of their sorted index lists.
std::vector<std::vector<std::size_t>> nonempty_index_sets(std::size_t k);

}  // namespace orbimap
