#pragma once

// Finite groups of exact orthogonal matrices: closure, subgroups,
// homomorphisms and the representation-theoretic queries built on them.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbimap/linalg.hpp"

namespace orbimap {

inline constexpr std::size_t kDefaultClosureCap = 10000;
inline constexpr std::size_t kDefaultHomEnumerationCap = 64;

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// Generates the group closed under products of `generators`.
/// Throws NonOrthogonalGenerator, DimensionMismatch or ClosureCapExceeded.
/// Redundant generators (duplicates or the identity) are dropped; a note is
/// appended to `warnings` when it is non-null.
GroupPtr close_group(std::size_t dim, std::span<const Matrix> generators,
                     std::size_t cap = kDefaultClosureCap,
                     std::vector<std::string>* warnings = nullptr);

/// A finite group of n×n rational orthogonal matrices. Elements are kept
/// sorted by the canonical matrix order, so element indices are stable for
/// a given set of matrices regardless of how the generators were listed.
class FiniteMatrixGroup {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }

  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// Conjugation a·b·a⁻¹.
  std::size_t conjugate(std::size_t a, std::size_t b) const {
    return multiply(multiply(a, b), inverse(a));
  }

  /// Indices of the (deduplicated, non-identity) generators, in input order.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  std::optional<std::size_t> index_of(const Matrix& m) const;

  bool is_abelian() const;

  /// Structural equality: same dimension and same element matrices.
  friend bool operator==(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
    return a.dim_ == b.dim_ && a.elements_ == b.elements_;
  }

 private:
  friend GroupPtr close_group(std::size_t, std::span<const Matrix>, std::size_t,
                              std::vector<std::string>*);

  std::size_t dim_ = 0;
  std::vector<Matrix> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> generators_;
};

/// Same group object identity or structurally equal groups.
bool same_group(const GroupPtr& a, const GroupPtr& b);

class Subgroup {
 public:
  /// Validates that `members` is closed under the parent's table.
  /// Throws NotASubgroup.
  static Subgroup from_members(GroupPtr parent, std::vector<std::size_t> members);
  static Subgroup generated_by(GroupPtr parent, std::span<const std::size_t> generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  /// Sorted element indices of the parent.
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(std::size_t element) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr parent, std::vector<std::size_t> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  GroupPtr parent_;
  std::vector<std::size_t> members_;
};

/// A homomorphism between two finite matrix groups, stored as the image
/// index of every source element.
class GroupHom {
 public:
  /// Validates the homomorphism law against both tables.
  /// Throws NotAHomomorphism or DimensionMismatch (wrong image count).
  GroupHom(GroupPtr source, GroupPtr target, std::vector<std::size_t> images);

  /// Extends generator images to the whole source group. Throws
  /// NotAHomomorphism when the assignment does not extend.
  static GroupHom from_generator_images(GroupPtr source, GroupPtr target,
                                        std::span<const std::size_t> generator_images);
  static GroupHom identity(GroupPtr group);
  static GroupHom trivial(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  std::size_t operator()(std::size_t element) const { return images_.at(element); }
  const Matrix& image_matrix(std::size_t element) const {
    return target_->element(images_.at(element));
  }

  Subgroup image() const;
  bool is_injective() const;
  /// γ ↦ η·Θ(γ)·η⁻¹
  GroupHom conjugated_by(std::size_t eta) const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return same_group(a.source_, b.source_) && same_group(a.target_, b.target_) &&
           a.images_ == b.images_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<std::size_t> images_;
};

/// For each element, a shortest word as (prefix element, generator) so that
/// element = prefix · generator; the identity maps to nullopt.
std::vector<std::optional<std::pair<std::size_t, std::size_t>>> generator_words(
    const FiniteMatrixGroup& g);

Subgroup center(const GroupPtr& g);
/// Throws NotASubgroup when h does not live in g.
Subgroup centralizer(const GroupPtr& g, const Subgroup& h);

/// All homomorphisms source → target, sorted by image index tuples.
/// Throws EnumerationCapExceeded when |source| > cap.
std::vector<GroupHom> enumerate_homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                              std::size_t cap = kDefaultHomEnumerationCap);

/// |G| / |Z(G)|
std::size_t inner_automorphism_count(const GroupPtr& g);
/// |G/N|; throws NotNormal.
std::size_t quotient_order(const GroupPtr& g, const Subgroup& n);

/// Reynolds projector (1/|H|)·Σ_{h∈H} h for the parent's matrices.
Matrix reynolds_projector(const Subgroup& h);
/// {v : h·v = v for all h ∈ H}, as the column space of the Reynolds projector.
Subspace fixed_subspace(const Subgroup& h);
Subspace fixed_subspace(const GroupHom& theta);

/// Throws NotARepresentation unless rho assigns one square matrix per element
/// of g, consistently with its multiplication table.
void check_representation(const FiniteMatrixGroup& g, std::span<const Matrix> rho);
/// Character comparison of two real representations of g.
bool representations_equivalent(const FiniteMatrixGroup& g, std::span<const Matrix> rho1,
                                std::span<const Matrix> rho2);

}  // namespace orbimap
