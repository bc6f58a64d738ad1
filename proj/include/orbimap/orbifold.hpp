#pragma once

// Global-quotient charts ℝⁿ/Γ, atlas compatibility checks, singular strata
// and the group of lifts of the identity.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbimap/groups.hpp"
#include "orbimap/linalg.hpp"

namespace orbimap {

/// Chart domain is all of ℝⁿ with a linear action of `group`; the quotient
/// projection is implicit.
struct QuotientChart {
  std::string label;
  GroupPtr group;

  std::size_t dim() const { return group->dim(); }

  friend bool operator==(const QuotientChart& a, const QuotientChart& b) {
    return a.label == b.label && same_group(a.group, b.group);
  }
};

struct AffineMap {
  Matrix linear;
  Vector offset;

  Vector operator()(const Vector& x) const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// outer ∘ inner
AffineMap compose(const AffineMap& outer, const AffineMap& inner);
AffineMap left_multiply(const Matrix& m, const AffineMap& a);

/// ψ̃ : Ũ_from → Ũ_to with its injective homomorphism θ : Γ_from → Γ_to.
struct AtlasEmbedding {
  std::string from;
  std::string to;
  AffineMap map;
  GroupHom theta;
};

struct EmbeddingVerdict {
  std::string from;
  std::string to;
  bool injective_map = false;
  bool injective_theta = false;
  bool equivariant = false;
  bool ok() const { return injective_map && injective_theta && equivariant; }
};

struct TripleVerdict {
  std::array<std::string, 3> labels;  // z, y, x with U_z ⊂ U_y ⊂ U_x
  bool valid = false;
  std::optional<std::size_t> delta;   // index in Γ_x
  std::string detail;
};

struct AtlasReport {
  std::vector<EmbeddingVerdict> embeddings;
  std::vector<TripleVerdict> triples;
  bool valid() const;
};

/// ψ̃(γ·x) = θ(γ)·ψ̃(x) for all γ, i.e. A·γ = θ(γ)·A and θ(γ)·b = b.
bool embedding_equivariant(const AtlasEmbedding& e, const FiniteMatrixGroup& from);

/// For each triple, searches Γ_x for δ with δ·ψ̃_zx = ψ̃_yx∘ψ̃_zy and
/// δ·θ_zx(γ)·δ⁻¹ = θ_yx∘θ_zy(γ). Throws UnknownLabel.
AtlasReport verify_atlas(std::span<const QuotientChart> charts,
                         std::span<const AtlasEmbedding> embeddings,
                         std::span<const std::array<std::string, 3>> triples);

/// Fixed subspace of H in the chart domain. Throws NotASubgroup.
Subspace singular_stratum(const QuotientChart& chart, const Subgroup& h);

/// Lifts ỹ ↦ γ·ỹ of the identity, each with induced automorphism δ ↦ γδγ⁻¹.
struct IdentityLiftGroup {
  QuotientChart chart;
  std::vector<GroupHom> induced;   // indexed by element of Γ
  Subgroup center;
  /// Distinct induced automorphisms (the complete reduced lifts), sorted.
  std::vector<std::vector<std::size_t>> reduced;
  /// γ ↦ index into `reduced`.
  std::vector<std::size_t> quotient_map;

  std::size_t order() const { return induced.size(); }
  std::size_t reduced_order() const { return reduced.size(); }
};

IdentityLiftGroup identity_lift_group(const QuotientChart& chart);

struct SequenceCheck {
  bool order_identity = false;      // |𝓘𝓓| = |C(𝓘𝓓)|·|♦𝓘𝓓|
  bool quotient_homomorphism = false;
  bool quotient_surjective = false;
  bool kernel_is_center = false;
  bool ok() const {
    return order_identity && quotient_homomorphism && quotient_surjective && kernel_is_center;
  }
};

SequenceCheck sequence_check(const IdentityLiftGroup& id);

}  // namespace orbimap
