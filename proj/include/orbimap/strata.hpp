#pragma once

// Flat exponential chart around a complete map and the stratification of its
// linearized neighborhood by compatible complete lifts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbimap/bundles.hpp"
#include "orbimap/maps.hpp"

namespace orbimap {

/// exp_z(v) = z + v. Orthogonal actions make it equivariant, and its domain
/// is the whole tangent space.
struct ExpChart {
  CompleteMap base;
  unsigned degree = 3;
};

/// Checks γ(z+v) = γz + γv on standard basis vectors of the target chart.
ExpChart make_exp_chart(CompleteMap base, unsigned degree);

/// Lift f̃ + s̃ with Θ unchanged. Throws BundleMismatch.
CompleteMap exp_push(const ExpChart& c, const Orbisection& sigma);
/// s̃ = g̃ − f̃. Throws ChartMismatch, ThetaMismatch or NotEquivariant.
Orbisection exp_pull(const ExpChart& c, const CompleteMap& g);

struct RoundtripReport {
  std::size_t samples = 0;
  std::size_t pull_after_push = 0;  // samples with exp_pull(exp_push(σ)) = σ
  std::size_t push_after_pull = 0;  // samples with exp_push(exp_pull(g)) = g
  std::size_t theta_preserved = 0;
  bool ok() const {
    return pull_after_push == samples && push_after_pull == samples && theta_preserved == samples;
  }
};

RoundtripReport exp_roundtrip_check(const ExpChart& c, const std::vector<Orbisection>& samples);

/// Integer combinations (entries in [-3, 3]) of the W basis of the chart's Θ.
std::vector<Orbisection> random_orbisections(const ExpChart& c, std::size_t count, std::uint64_t seed);

using IndexSet = std::vector<std::size_t>;  // 1-based, sorted

struct Stratum {
  IndexSet indices;
  Subspace subspace;  // W_J
  bool nonempty = false;
  std::optional<Vector> witness;  // in W_J and in no W_{J∪{i}}
};

struct StrataPoset {
  OrbifoldMap base;
  std::vector<CompleteMap> lifts;
  unsigned degree = 0;
  std::vector<Stratum> strata;  // every nonempty J ⊆ {1..k}, sorted
  /// Covering pairs (lower, upper) among nonempty strata: lower ⊂ upper.
  std::vector<std::pair<IndexSet, IndexSet>> covers;

  const Stratum& at(const IndexSet& j) const;
  std::vector<const Stratum*> nonempty_strata() const;
};

struct StrataOptions {
  std::size_t max_lifts = kDefaultMaxLifts;
  std::size_t hom_cap = kDefaultHomEnumerationCap;
  std::size_t coeff_cap = kDefaultCoeffSpaceCap;
  std::uint64_t seed = 0;
};

/// Throws NoLifts or CapExceeded.
StrataPoset strata_poset(const OrbifoldMap& f, unsigned degree, const StrataOptions& options = {});

/// {j : v ∈ W_j}
IndexSet membership(const StrataPoset& p, const Vector& v);

enum class PosetFormat { Dot, Json };

std::string export_poset(const StrataPoset& p, PosetFormat format);

/// ORBIMAP_SEED from the environment, 0 when unset or unparsable.
std::uint64_t seed_from_env();

}  // namespace orbimap
