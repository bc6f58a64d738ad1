#include "orbimap/orbifold.hpp"

#include <algorithm>
#include <map>

#include "orbimap/error.hpp"

namespace orbimap {

Vector AffineMap::operator()(const Vector& x) const {
  Vector y = linear.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
  return y;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return AffineMap{outer.linear * inner.linear, outer(inner.offset)};
}

AffineMap left_multiply(const Matrix& m, const AffineMap& a) {
  return AffineMap{m * a.linear, m.apply(a.offset)};
}

bool AtlasReport::valid() const {
  return std::all_of(embeddings.begin(), embeddings.end(), [](const auto& e) { return e.ok(); }) &&
         std::all_of(triples.begin(), triples.end(), [](const auto& t) { return t.valid; });
}

bool embedding_equivariant(const AtlasEmbedding& e, const FiniteMatrixGroup& from) {
  for (std::size_t g = 0; g < from.order(); ++g) {
    const Matrix& target = e.theta.image_matrix(g);
    if (!(e.map.linear * from.element(g) == target * e.map.linear)) return false;
    if (!(target.apply(e.map.offset) == e.map.offset)) return false;
  }
  return true;
}

namespace {

const AtlasEmbedding* find_embedding(std::span<const AtlasEmbedding> embeddings,
                                     const std::string& from, const std::string& to) {
  for (const auto& e : embeddings)
    if (e.from == from && e.to == to) return &e;
  return nullptr;
}

}  // namespace

AtlasReport verify_atlas(std::span<const QuotientChart> charts,
                         std::span<const AtlasEmbedding> embeddings,
                         std::span<const std::array<std::string, 3>> triples) {
  std::map<std::string, const QuotientChart*> by_label;
  for (const auto& c : charts) by_label[c.label] = &c;
  auto chart = [&](const std::string& label) -> const QuotientChart& {
    const auto it = by_label.find(label);
    if (it == by_label.end()) fail(ErrorCode::UnknownLabel, "no chart labelled '" + label + "'");
    return *it->second;
  };

  AtlasReport report;
  for (const auto& e : embeddings) {
    const auto& from = chart(e.from);
    const auto& to = chart(e.to);
    if (!same_group(e.theta.source(), from.group) || !same_group(e.theta.target(), to.group)) {
      fail(ErrorCode::ChartMismatch, "theta of " + e.from + "->" + e.to + " uses other groups");
    }
    if (e.map.linear.rows() != to.dim() || e.map.linear.cols() != from.dim() ||
        e.map.offset.size() != to.dim()) {
      fail(ErrorCode::DimensionMismatch, "affine map of " + e.from + "->" + e.to);
    }
    EmbeddingVerdict v;
    v.from = e.from;
    v.to = e.to;
    v.injective_map = rank(e.map.linear) == from.dim();
    v.injective_theta = e.theta.is_injective();
    v.equivariant = embedding_equivariant(e, *from.group);
    report.embeddings.push_back(std::move(v));
  }

  for (const auto& t : triples) {
    const auto& [z, y, x] = t;
    (void)chart(z);
    (void)chart(y);
    const auto& top = *chart(x).group;
    TripleVerdict verdict;
    verdict.labels = t;
    const auto* zy = find_embedding(embeddings, z, y);
    const auto* yx = find_embedding(embeddings, y, x);
    const auto* zx = find_embedding(embeddings, z, x);
    if (!zy || !yx || !zx) {
      verdict.detail = "missing embedding among " + z + "->" + y + ", " + y + "->" + x + ", " +
                       z + "->" + x;
      report.triples.push_back(std::move(verdict));
      continue;
    }
    const AffineMap via = compose(yx->map, zy->map);
    const auto& source = *zx->theta.source();
    for (std::size_t delta = 0; delta < top.order() && !verdict.valid; ++delta) {
      if (!(left_multiply(top.element(delta), zx->map) == via)) continue;
      bool thetas_match = true;
      for (std::size_t g = 0; g < source.order() && thetas_match; ++g) {
        thetas_match = top.conjugate(delta, zx->theta(g)) == yx->theta(zy->theta(g));
      }
      if (thetas_match) {
        verdict.valid = true;
        verdict.delta = delta;
      }
    }
    if (!verdict.valid) verdict.detail = "no element of " + x + " reconciles the two routes";
    report.triples.push_back(std::move(verdict));
  }
  return report;
}

Subspace singular_stratum(const QuotientChart& chart, const Subgroup& h) {
  if (!same_group(chart.group, h.parent())) {
    fail(ErrorCode::NotASubgroup, "subgroup does not belong to chart '" + chart.label + "'");
  }
  return fixed_subspace(h);
}

IdentityLiftGroup identity_lift_group(const QuotientChart& chart) {
  const auto& g = chart.group;
  IdentityLiftGroup id{chart, {}, center(g), {}, {}};
  for (std::size_t gamma = 0; gamma < g->order(); ++gamma) {
    std::vector<std::size_t> images(g->order());
    for (std::size_t delta = 0; delta < g->order(); ++delta) images[delta] = g->conjugate(gamma, delta);
    id.induced.emplace_back(g, g, std::move(images));
  }
  for (const auto& hom : id.induced) id.reduced.push_back(hom.images());
  std::sort(id.reduced.begin(), id.reduced.end());
  id.reduced.erase(std::unique(id.reduced.begin(), id.reduced.end()), id.reduced.end());
  for (const auto& hom : id.induced) {
    const auto it = std::lower_bound(id.reduced.begin(), id.reduced.end(), hom.images());
    id.quotient_map.push_back(static_cast<std::size_t>(it - id.reduced.begin()));
  }
  return id;
}

SequenceCheck sequence_check(const IdentityLiftGroup& id) {
  const auto& g = *id.chart.group;
  SequenceCheck check;
  check.order_identity = id.order() == id.center.order() * id.reduced_order();

  // Automorphisms compose: the class of γδ is the composite of the classes.
  check.quotient_homomorphism = true;
  for (std::size_t a = 0; a < g.order() && check.quotient_homomorphism; ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto& fa = id.reduced[id.quotient_map[a]];
      const auto& fb = id.reduced[id.quotient_map[b]];
      std::vector<std::size_t> composite(g.order());
      for (std::size_t x = 0; x < g.order(); ++x) composite[x] = fa[fb[x]];
      if (composite != id.reduced[id.quotient_map[g.multiply(a, b)]]) {
        check.quotient_homomorphism = false;
        break;
      }
    }
  }

  std::vector<bool> hit(id.reduced_order(), false);
  for (std::size_t c : id.quotient_map) hit[c] = true;
  check.quotient_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  const std::size_t trivial_class = id.quotient_map[g.identity()];
  std::vector<std::size_t> kernel;
  for (std::size_t gamma = 0; gamma < g.order(); ++gamma)
    if (id.quotient_map[gamma] == trivial_class) kernel.push_back(gamma);
  check.kernel_is_center = kernel == id.center.members();
  return check;
}

}  // namespace orbimap
