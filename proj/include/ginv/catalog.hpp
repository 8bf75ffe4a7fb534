#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginv/group.hpp"

namespace ginv {

// One bundled or file-loaded group definition.
struct GroupSpec {
  std::string name;
  std::string label;                    // isomorphism-type label, informational
  unsigned degree = 0;                  // 0 => metadata-only
  std::vector<std::string> generators;  // cycle notation, 1-based points
  std::uint64_t expected_order = 0;
  std::vector<std::string> tags;
  std::optional<std::uint64_t> expected_a;
  std::optional<std::string> builder;   // constructor expression, if not raw gens

  bool has_tag(const std::string& t) const;
};

// Builds a group from a catalog name or a constructor expression.
// Expressions: Sym(n), Alt(n), Cyc(n), Dih(n), ElemAb(p,k), Q8,
// SL(2,q), PSL(2,q), PGL(2,q), PSigmaL(2,q), PSL(3,q), Sz(8), M10, M11, M22,
// Aut(A6), AGL(3,2), products with 'x' (e.g. "Cyc(3)xCyc(5)"), and the
// aliases S<n>, A<n>, Z<n>, D<n>. Throws UnknownName / CapExceeded.
GroupPtr build(const std::string& name_or_expr, std::uint64_t cap = kDefaultElementCap);

// The bundled catalog (order-verified on build).
const std::vector<GroupSpec>& builtin_catalog();
const GroupSpec* find_spec(const std::string& name);

// Builds a spec; verifies the expected order (OrderMismatch) unless the
// group is metadata-only or over the cap.
GroupPtr build_spec(const GroupSpec& spec, std::uint64_t cap = kDefaultElementCap);

// Group files: text format
//   group <name> degree=<d> order=<n> tags=<csv>
//   ( 1 2 )( 3 4 5 )      # one generator per line
// '#' starts a comment. A ".json" path expects the JSON mirror:
// [{"name":..,"degree":..,"order":..,"tags":[..],"generators":[..]}].
std::vector<GroupSpec> load_group_file(const std::string& path);
std::vector<GroupPtr> load(const std::string& path, std::uint64_t cap = kDefaultElementCap);

}  // namespace ginv
