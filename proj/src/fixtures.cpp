#include "orbimap/fixtures.hpp"

#include "orbimap/error.hpp"

namespace orbimap::fixtures {

namespace {

QuotientChart chart(std::string label, std::size_t dim, const std::vector<Matrix>& gens) {
  return QuotientChart{std::move(label), close_group(dim, gens)};
}

}  // namespace

QuotientChart trivial_chart(std::size_t dim) {
  return chart("R" + std::to_string(dim), dim, {});
}

QuotientChart line_z2() { return chart("R/Z2", 1, {Matrix::from_rows({{-1}})}); }

Matrix j_matrix() { return Matrix::diagonal({-1, 1, -1}); }
Matrix k_matrix() { return Matrix::diagonal({-1, -1, 1}); }

QuotientChart z2xz2() { return chart("R3/(Z2xZ2)", 3, {j_matrix(), k_matrix()}); }

QuotientChart z2_cubed() {
  return chart("R3/Z2^3", 3,
               {Matrix::diagonal({-1, 1, 1}), Matrix::diagonal({1, -1, 1}), Matrix::diagonal({1, 1, -1})});
}

QuotientChart s3() {
  return chart("R3/S3", 3,
               {Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})});
}

PolyMap axis_inclusion() {
  return PolyMap(1, {Polynomial::variable(1, 0), Polynomial(1), Polynomial(1)});
}

std::vector<std::string> example_names() {
  return {"rz2-constant", "z2xz2-inclusion", "ocube-inclusion", "identity-map"};
}

OrbifoldMap example_map(const std::string& name) {
  if (name == "rz2-constant") return make_orbifold_map(line_z2(), line_z2(), PolyMap::zero(1, 1));
  if (name == "z2xz2-inclusion") return make_orbifold_map(line_z2(), z2xz2(), axis_inclusion());
  if (name == "ocube-inclusion") return make_orbifold_map(line_z2(), z2_cubed(), axis_inclusion());
  if (name == "identity-map") return make_orbifold_map(s3(), s3(), PolyMap::identity(3));
  fail(ErrorCode::UnknownLabel, "unknown example '" + name + "'");
}

}  // namespace orbimap::fixtures
