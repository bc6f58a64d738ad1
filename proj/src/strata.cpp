#include "orbimap/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "orbimap/error.hpp"
#include "orbimap/io.hpp"

namespace orbimap {

namespace {

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string join(const IndexSet& j) {
  std::string out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(j[i]);
  }
  return out;
}

Vector combine(const std::vector<Vector>& basis, std::size_t ambient, const std::vector<long>& weights) {
  Vector v = zero_vector(ambient);
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < ambient; ++i) v[i] += weights[b] * basis[b][i];
  return v;
}

}  // namespace

ExpChart make_exp_chart(CompleteMap base, unsigned degree) {
  const auto& target = *base.dst.group;
  const std::size_t m = base.dst.dim();
  for (const Matrix& g : target.elements()) {
    if (!g.is_orthogonal()) fail(ErrorCode::NonOrthogonalGenerator, "exponential chart needs isometries");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vector z = zero_vector(m), v = zero_vector(m), sum = zero_vector(m);
        z[a] = 1;
        v[b] = 1;
        sum[a] += 1;
        sum[b] += 1;
        Vector lhs = g.apply(sum);
        Vector gz = g.apply(z), gv = g.apply(v);
        for (std::size_t i = 0; i < m; ++i) gz[i] += gv[i];
        if (lhs != gz) throw std::logic_error("flat exponential map is not equivariant");
      }
  }
  return ExpChart{std::move(base), degree};
}

CompleteMap exp_push(const ExpChart& c, const Orbisection& sigma) {
  if (!(sigma.bundle.base == c.base)) {
    fail(ErrorCode::BundleMismatch, "orbisection does not live on the pullback of the chart's map");
  }
  return make_complete(c.base.src, c.base.dst, c.base.lift + sigma.section, c.base.theta);
}

Orbisection exp_pull(const ExpChart& c, const CompleteMap& g) {
  if (!(g.src == c.base.src) || !(g.dst == c.base.dst)) {
    fail(ErrorCode::ChartMismatch, "map lives on different charts than the exponential chart");
  }
  if (!(g.theta == c.base.theta)) {
    fail(ErrorCode::ThetaMismatch, "map is not in the neighborhood of the chart's complete map");
  }
  return make_orbisection(pullback(c.base), g.lift - c.base.lift);
}

RoundtripReport exp_roundtrip_check(const ExpChart& c, const std::vector<Orbisection>& samples) {
  RoundtripReport r;
  r.samples = samples.size();
  for (const auto& sigma : samples) {
    const CompleteMap pushed = exp_push(c, sigma);
    if (pushed.theta == c.base.theta) ++r.theta_preserved;
    const Orbisection pulled = exp_pull(c, pushed);
    if (pulled.section == sigma.section) ++r.pull_after_push;
    if (exp_push(c, pulled) == pushed) ++r.push_after_pull;
  }
  return r;
}

std::vector<Orbisection> random_orbisections(const ExpChart& c, std::size_t count, std::uint64_t seed) {
  const Subspace w = equivariant_subspace(c.base.theta, c.degree);
  const PullbackBundleData bundle = pullback(c.base);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<Orbisection> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<long> weights(w.dim());
    for (auto& x : weights) x = coeff(rng);
    const Vector v = combine(w.basis(), w.ambient(), weights);
    out.push_back(make_orbisection(bundle, from_coeffs(c.base.src.dim(), c.base.dst.dim(), c.degree, v)));
  }
  return out;
}

const Stratum& StrataPoset::at(const IndexSet& j) const {
  for (const auto& s : strata)
    if (s.indices == j) return s;
  fail(ErrorCode::UnknownLabel, "no stratum {" + join(j) + "}");
}

std::vector<const Stratum*> StrataPoset::nonempty_strata() const {
  std::vector<const Stratum*> out;
  for (const auto& s : strata)
    if (s.nonempty) out.push_back(&s);
  return out;
}

IndexSet membership(const StrataPoset& p, const Vector& v) {
  IndexSet out;
  for (std::size_t j = 1; j <= p.lifts.size(); ++j)
    if (p.at({j}).subspace.contains(v)) out.push_back(j);
  return out;
}

StrataPoset strata_poset(const OrbifoldMap& f, unsigned degree, const StrataOptions& options) {
  StrataPoset p{f, complete_lifts_over(f, options.hom_cap), degree, {}, {}};
  const std::size_t k = p.lifts.size();
  if (k == 0) fail(ErrorCode::NoLifts, "the map has no complete lifts");
  if (k > options.max_lifts) {
    fail(ErrorCode::CapExceeded,
         std::to_string(k) + " complete lifts exceed the cap of " + std::to_string(options.max_lifts));
  }

  std::vector<Subspace> singles;
  for (const auto& lift : p.lifts) singles.push_back(equivariant_subspace(lift.theta, degree, options.coeff_cap));

  for (const auto& j : nonempty_index_sets(k)) {
    Subspace w = singles[j.front() - 1];
    for (std::size_t i = 1; i < j.size(); ++i) w = w.intersect(singles[j[i] - 1]);
    p.strata.push_back(Stratum{j, std::move(w), false, std::nullopt});
  }

  auto find = [&](const IndexSet& j) -> const Stratum& { return p.at(j); };
  for (auto& s : p.strata) {
    bool nonempty = true;
    for (std::size_t i = 1; i <= k && nonempty; ++i) {
      if (std::binary_search(s.indices.begin(), s.indices.end(), i)) continue;
      IndexSet bigger = s.indices;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), i), i);
      if (find(bigger).subspace.dim() >= s.subspace.dim()) nonempty = false;
    }
    s.nonempty = nonempty;
  }

  std::mt19937_64 rng(options.seed);
  for (auto& s : p.strata) {
    if (!s.nonempty) continue;
    const auto& basis = s.subspace.basis();
    std::vector<long> weights(basis.size(), 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
      Vector v = combine(basis, s.subspace.ambient(), weights);
      if (membership(p, v) == s.indices) {
        s.witness = std::move(v);
        break;
      }
      const long bound = 3 + attempt;
      std::uniform_int_distribution<long> coeff(-bound, bound);
      for (auto& x : weights) x = coeff(rng);
    }
    if (!s.witness) throw std::logic_error("no witness found for a nonempty stratum {" + join(s.indices) + "}");
  }

  for (const Stratum* lower : p.nonempty_strata())
    for (const Stratum* upper : p.nonempty_strata()) {
      if (lower == upper || !is_subset(lower->indices, upper->indices)) continue;
      bool covering = true;
      for (const Stratum* mid : p.nonempty_strata()) {
        if (mid == lower || mid == upper) continue;
        if (is_subset(lower->indices, mid->indices) && is_subset(mid->indices, upper->indices)) {
          covering = false;
          break;
        }
      }
      if (covering) p.covers.emplace_back(lower->indices, upper->indices);
    }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

std::string export_poset(const StrataPoset& p, PosetFormat format) {
  if (format == PosetFormat::Json) return poset_to_json(p).dump(2) + "\n";
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n";
  for (const Stratum* s : p.nonempty_strata()) {
    out << "  \"" << join(s->indices) << "\" [label=\"{" << join(s->indices) << "}:" << s->subspace.dim()
        << "\"];\n";
  }
  for (const auto& [lower, upper] : p.covers) out << "  \"" << join(lower) << "\" -> \"" << join(upper) << "\";\n";
  out << "}\n";
  return out.str();
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("ORBIMAP_SEED");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  return (end && *end == '\0') ? v : 0;
}

}  // namespace orbimap
