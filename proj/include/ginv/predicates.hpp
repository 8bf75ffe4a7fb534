#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ginv/chartab.hpp"
#include "ginv/group.hpp"

namespace ginv {

// A series P <| H <| G with |P| = p^m, G/H of order q^n, H/P cyclic.
struct IsthmusWitness {
  std::uint64_t p_order = 1;
  std::uint64_t h_order = 1;
  unsigned p = 0;  // 0 when the order is 1
  unsigned q = 0;
};

struct OliverResult {
  bool oliver = false;
  std::optional<IsthmusWitness> witness;
};

// Oliver <=> no isthmus series. Trivial P and H = G are allowed (m, n >= 0),
// which is what makes every cyclic group non-Oliver.
OliverResult is_oliver(const FiniteGroup& G);

bool is_cp(const FiniteGroup& G);  // every element has prime power order
// all NPP elements share one order, and every normal subgroup meeting
// NPP(G) contains all of it
bool is_ep(const FiniteGroup& G);

// H is large iff O^p(G) <= H for some prime p | |G|.
bool large_subgroup_test(const FiniteGroup& G, const SubgroupRef& H);
// P(G) n L(G) = empty <=> no O^q(G) has prime power order.
bool p_l_disjoint(const FiniteGroup& G);

enum class GapVerdict { Gap, NotGap, Unknown };
enum class GapMode { Sufficient, Exact };
std::string to_string(GapVerdict v);

struct GapOptions {
  std::uint64_t exact_order_cap = 10080;
  ChartabCaps chart_caps{};
};

GapVerdict gap_status(const FiniteGroup& G, GapMode mode, const GapOptions& opt = {});

struct CheckItem {
  std::string assertion;
  bool pass = false;
};

struct ClassificationVerdict {
  std::string group;
  bool oliver = false;
  std::uint64_t a_g = 0;
  int matched_case = 0;  // 0 = none
  std::vector<int> all_matches;
  std::vector<CheckItem> checks;
};

// Attempts to match one of the thirteen structural cases; only Oliver groups
// with a_G <= 1 are matched (otherwise the verdict records none, which the
// classification predicts to be correct).
ClassificationVerdict classification_match(const FiniteGroup& G);

}  // namespace ginv
