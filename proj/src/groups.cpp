#include "orbimap/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "orbimap/error.hpp"

namespace orbimap {

GroupPtr close_group(std::size_t dim, std::span<const Matrix> generators, std::size_t cap,
                     std::vector<std::string>* warnings) {
  if (dim == 0) fail(ErrorCode::DimensionMismatch, "group dimension must be positive");
  const Matrix id = Matrix::identity(dim);

  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Matrix& g = generators[i];
    if (g.rows() != dim || g.cols() != dim) {
      fail(ErrorCode::DimensionMismatch,
           "generator " + std::to_string(i) + " is not " + std::to_string(dim) + "x" +
               std::to_string(dim));
    }
    if (!g.is_orthogonal()) {
      fail(ErrorCode::NonOrthogonalGenerator,
           "generator " + std::to_string(i) +
               " is not orthogonal; conjugate the action by the square root of "
               "the averaged Gram matrix sum_g g^T g first");
    }
    if (g == id) {
      if (warnings) warnings->push_back("generator " + std::to_string(i) + " is the identity; dropped");
      continue;
    }
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
      if (warnings) warnings->push_back("generator " + std::to_string(i) + " repeats an earlier one; dropped");
      continue;
    }
    gens.push_back(g);
  }

  std::map<Matrix, std::size_t, MatrixLess> seen;
  std::vector<Matrix> found{id};
  seen.emplace(id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const Matrix& g : gens) {
      Matrix next = found[cur] * g;
      if (seen.count(next)) continue;
      if (found.size() >= cap) {
        fail(ErrorCode::ClosureCapExceeded,
             "closure exceeds " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(next));
    }
  }

  auto group = std::make_shared<FiniteMatrixGroup>();
  group->dim_ = dim;
  group->elements_ = std::move(found);
  std::sort(group->elements_.begin(), group->elements_.end(), MatrixLess{});

  std::map<Matrix, std::size_t, MatrixLess> index;
  for (std::size_t i = 0; i < group->elements_.size(); ++i) index.emplace(group->elements_[i], i);

  const std::size_t n = group->elements_.size();
  group->table_.assign(n, std::vector<std::size_t>(n, 0));
  group->inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      group->table_[a][b] = index.at(group->elements_[a] * group->elements_[b]);
    }
  }
  group->identity_ = index.at(id);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (group->table_[a][b] == group->identity_) {
        group->inverse_[a] = b;
        break;
      }
    }
  }
  for (const Matrix& g : gens) group->generators_.push_back(index.at(g));
  return group;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const Matrix& m) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), m, MatrixLess{});
  if (it == elements_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto& g = *parent;
  auto has = [&](std::size_t x) { return std::binary_search(members.begin(), members.end(), x); };
  for (std::size_t m : members) {
    if (m >= g.order()) fail(ErrorCode::NotASubgroup, "element index out of range");
  }
  if (!has(g.identity())) fail(ErrorCode::NotASubgroup, "identity missing");
  for (std::size_t a : members) {
    if (!has(g.inverse(a))) fail(ErrorCode::NotASubgroup, "not closed under inverses");
    for (std::size_t b : members)
      if (!has(g.multiply(a, b))) fail(ErrorCode::NotASubgroup, "not closed under products");
  }
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const std::size_t> generators) {
  const auto& g = *parent;
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t gen : generators) {
      if (gen >= g.order()) fail(ErrorCode::NotASubgroup, "generator index out of range");
      const std::size_t next = g.multiply(members[i], gen);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<std::size_t> all(parent->order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const std::size_t e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

bool Subgroup::contains(std::size_t element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return same_group(parent_, other.parent_) &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool Subgroup::is_normal() const {
  for (std::size_t g = 0; g < parent_->order(); ++g)
    for (std::size_t n : members_)
      if (!contains(parent_->conjugate(g, n))) return false;
  return true;
}

// ---------------------------------------------------------------- GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<std::size_t> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const auto& s = *source_;
  const auto& t = *target_;
  if (images_.size() != s.order()) {
    fail(ErrorCode::DimensionMismatch, "homomorphism needs one image per source element");
  }
  for (std::size_t img : images_)
    if (img >= t.order()) fail(ErrorCode::NotAHomomorphism, "image index out of range");
  if (images_[s.identity()] != t.identity()) {
    fail(ErrorCode::NotAHomomorphism, "identity does not map to identity");
  }
  for (std::size_t a = 0; a < s.order(); ++a)
    for (std::size_t b = 0; b < s.order(); ++b)
      if (images_[s.multiply(a, b)] != t.multiply(images_[a], images_[b])) {
        fail(ErrorCode::NotAHomomorphism, "h(ab) != h(a)h(b) for elements " +
                                              std::to_string(a) + ", " + std::to_string(b));
      }
}

std::vector<std::optional<std::pair<std::size_t, std::size_t>>> generator_words(
    const FiniteMatrixGroup& g) {
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> words(g.order());
  std::vector<bool> reached(g.order(), false);
  std::deque<std::size_t> queue{g.identity()};
  reached[g.identity()] = true;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      const std::size_t next = g.multiply(cur, g.generators()[gi]);
      if (reached[next]) continue;
      reached[next] = true;
      words[next] = std::make_pair(cur, gi);
      queue.push_back(next);
    }
  }
  return words;
}

namespace {

// Extends generator images along shortest words; returns nullopt when the
// extension is not a homomorphism.
std::optional<std::vector<std::size_t>> extend_images(
    const FiniteMatrixGroup& s, const FiniteMatrixGroup& t,
    const std::vector<std::optional<std::pair<std::size_t, std::size_t>>>& words,
    std::span<const std::size_t> gen_images) {
  // Words are discovered breadth-first, so prefixes are resolved first when
  // we walk elements in BFS order.
  std::vector<std::size_t> order_bfs{s.identity()};
  std::vector<bool> done(s.order(), false);
  done[s.identity()] = true;
  for (std::size_t i = 0; i < order_bfs.size(); ++i) {
    for (std::size_t gen : s.generators()) {
      const std::size_t next = s.multiply(order_bfs[i], gen);
      if (!done[next]) {
        done[next] = true;
        order_bfs.push_back(next);
      }
    }
  }
  std::vector<std::size_t> images(s.order(), t.identity());
  for (std::size_t e : order_bfs) {
    if (!words[e]) continue;
    const auto [prefix, gi] = *words[e];
    images[e] = t.multiply(images[prefix], gen_images[gi]);
  }
  for (std::size_t a = 0; a < s.order(); ++a)
    for (std::size_t b = 0; b < s.order(); ++b)
      if (images[s.multiply(a, b)] != t.multiply(images[a], images[b])) return std::nullopt;
  return images;
}

}  // namespace

GroupHom GroupHom::from_generator_images(GroupPtr source, GroupPtr target,
                                         std::span<const std::size_t> generator_images) {
  if (generator_images.size() != source->generators().size()) {
    fail(ErrorCode::DimensionMismatch,
         "expected " + std::to_string(source->generators().size()) + " generator images, got " +
             std::to_string(generator_images.size()));
  }
  for (std::size_t img : generator_images)
    if (img >= target->order()) fail(ErrorCode::NotAHomomorphism, "image index out of range");
  auto images = extend_images(*source, *target, generator_words(*source), generator_images);
  if (!images) fail(ErrorCode::NotAHomomorphism, "generator images do not extend to a homomorphism");
  return GroupHom(std::move(source), std::move(target), std::move(*images));
}

GroupHom GroupHom::identity(GroupPtr group) {
  std::vector<std::size_t> images(group->order());
  std::iota(images.begin(), images.end(), std::size_t{0});
  return GroupHom(group, group, std::move(images));
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
  std::vector<std::size_t> images(source->order(), target->identity());
  return GroupHom(std::move(source), std::move(target), std::move(images));
}

Subgroup GroupHom::image() const {
  return Subgroup::from_members(target_, images_);
}

bool GroupHom::is_injective() const {
  std::vector<std::size_t> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroupHom GroupHom::conjugated_by(std::size_t eta) const {
  std::vector<std::size_t> conj(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) conj[i] = target_->conjugate(eta, images_[i]);
  return GroupHom(source_, target_, std::move(conj));
}

// ---------------------------------------------------------------- queries

Subgroup center(const GroupPtr& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(g, h.parent())) fail(ErrorCode::NotASubgroup, "subgroup of a different group");
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < g->order(); ++x) {
    const bool commutes = std::all_of(h.members().begin(), h.members().end(), [&](std::size_t y) {
      return g->multiply(x, y) == g->multiply(y, x);
    });
    if (commutes) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

std::vector<GroupHom> enumerate_homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                              std::size_t cap) {
  if (source->order() > cap) {
    fail(ErrorCode::EnumerationCapExceeded,
         "source group order " + std::to_string(source->order()) + " exceeds cap " +
             std::to_string(cap));
  }
  const auto words = generator_words(*source);
  const std::size_t k = source->generators().size();
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> assignment(k, 0);
  // Odometer over target^k.
  while (true) {
    if (auto images = extend_images(*source, *target, words, assignment)) {
      found.push_back(std::move(*images));
    }
    std::size_t pos = 0;
    while (pos < k && ++assignment[pos] == target->order()) assignment[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<GroupHom> homs;
  homs.reserve(found.size());
  for (auto& images : found) homs.emplace_back(source, target, std::move(images));
  return homs;
}

std::size_t inner_automorphism_count(const GroupPtr& g) { return g->order() / center(g).order(); }

std::size_t quotient_order(const GroupPtr& g, const Subgroup& n) {
  if (!same_group(g, n.parent())) fail(ErrorCode::NotASubgroup, "subgroup of a different group");
  if (!n.is_normal()) fail(ErrorCode::NotNormal, "subgroup is not normal");
  return g->order() / n.order();
}

Matrix reynolds_projector(const Subgroup& h) {
  const auto& g = *h.parent();
  Matrix sum(g.dim(), g.dim());
  for (std::size_t m : h.members()) sum = sum + g.element(m);
  return Rational(1, static_cast<unsigned long>(h.order())) * sum;
}

Subspace fixed_subspace(const Subgroup& h) {
  const Matrix p = reynolds_projector(h);
  if (!(p * p == p)) throw std::logic_error("Reynolds projector is not idempotent");
  return Subspace::column_space(p);
}

Subspace fixed_subspace(const GroupHom& theta) { return fixed_subspace(theta.image()); }

void check_representation(const FiniteMatrixGroup& g, std::span<const Matrix> rho) {
  if (rho.size() != g.order()) {
    fail(ErrorCode::NotARepresentation, "need one matrix per group element");
  }
  const std::size_t d = rho.empty() ? 0 : rho.front().rows();
  for (const Matrix& m : rho)
    if (m.rows() != d || m.cols() != d) fail(ErrorCode::NotARepresentation, "matrix shapes differ");
  if (!rho[g.identity()].is_identity()) fail(ErrorCode::NotARepresentation, "identity not sent to I");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(rho[a] * rho[b] == rho[g.multiply(a, b)])) {
        fail(ErrorCode::NotARepresentation, "assignment violates the multiplication table");
      }
}

bool representations_equivalent(const FiniteMatrixGroup& g, std::span<const Matrix> rho1,
                                std::span<const Matrix> rho2) {
  check_representation(g, rho1);
  check_representation(g, rho2);
  if (rho1.front().rows() != rho2.front().rows()) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (rho1[i].trace() != rho2[i].trace()) return false;
  return true;
}

}  // namespace orbimap
