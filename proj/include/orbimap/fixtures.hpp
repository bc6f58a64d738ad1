#pragma once

// Charts and maps of the worked examples, available to the CLI and tests.

#include <string>
#include <vector>

#include "orbimap/maps.hpp"

namespace orbimap::fixtures {

QuotientChart trivial_chart(std::size_t dim);
/// ℝ/ℤ₂ with x ↦ −x.
QuotientChart line_z2();
/// ℝ³/(ℤ₂×ℤ₂) generated by j = diag(−1,1,−1) and k = diag(−1,−1,1).
QuotientChart z2xz2();
/// ℝ³/ℤ₂³, all diagonal sign changes.
QuotientChart z2_cubed();
/// ℝ³/S₃ by coordinate permutations.
QuotientChart s3();

Matrix j_matrix();
Matrix k_matrix();

/// y ↦ (y, 0, 0)
PolyMap axis_inclusion();

/// rz2-constant, z2xz2-inclusion, ocube-inclusion, identity-map
std::vector<std::string> example_names();
/// Throws UnknownLabel.
OrbifoldMap example_map(const std::string& name);

}  // namespace orbimap::fixtures
