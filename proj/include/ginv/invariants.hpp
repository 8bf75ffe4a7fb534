#pragma once

#include <cstdint>
#include <vector>

#include "ginv/exact.hpp"
#include "ginv/group.hpp"

namespace ginv {

// Class function with exact rational values, one per conjugacy class.
struct RationalClassFunction {
  const FiniteGroup* group = nullptr;
  std::vector<Rational> by_class;

  const Rational& at_element(std::uint32_t i) const { return by_class[group->class_of(i)]; }
};

// Elements whose order has >= 2 distinct prime divisors (indices, sorted).
std::vector<std::uint32_t> npp_elements(const FiniteGroup& G);

// a_G: number of real conjugacy classes of NPP elements.
std::uint64_t laitinen_number(const FiniteGroup& G);

// Element orders occurring among NPP elements (sorted, deduplicated).
std::vector<std::uint64_t> npp_orders(const FiniteGroup& G);

// b_{G/H}: real classes of cosets in G/H that contain NPP elements of G.
std::uint64_t b_invariant(const FiniteGroup& G, const SubgroupRef& H);

enum class RankKind { IO, IO_GG, IO_GH };
std::uint64_t rank(const FiniteGroup& G, RankKind kind, const SubgroupRef* H = nullptr);

struct LoBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;  // lower == upper, or the solvable residual pins it
};
LoBounds lo_rank_bounds(const FiniteGroup& G);

// (Fix^H f)(gH) = (1/|H|) sum_{h in H} f(gh), as a class function on G/H.
RationalClassFunction fix_pushforward(const FiniteGroup& G, const SubgroupRef& H,
                                      const RationalClassFunction& f);
RationalClassFunction fix_pushforward(const QuotientGroup& Q, const RationalClassFunction& f);

// Indicator of the real class with index r (value 1 on it, 0 elsewhere).
RationalClassFunction real_class_indicator(const FiniteGroup& G, std::uint32_t r);

// Rank over Q of Fix^H applied to all NPP real-class indicators;
// by the rank computation this must equal b_invariant(G, H).
std::uint64_t fix_rank_oracle(const FiniteGroup& G, const SubgroupRef& H);

struct BTableRow {
  std::uint64_t h_order;
  std::uint64_t b;
  std::uint64_t rk_io_gh;
};

struct InvariantReport {
  std::string group;
  std::uint64_t a_g = 0;
  std::vector<std::uint64_t> npp_orders;
  std::vector<BTableRow> b_table;  // one row per normal subgroup, by order
  std::uint64_t rk_io = 0;
  std::uint64_t rk_io_gg = 0;
  LoBounds lo;
};

InvariantReport invariant_report(const FiniteGroup& G);

}  // namespace ginv
