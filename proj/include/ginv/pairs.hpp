#pragma once

#include <vector>

#include "ginv/group.hpp"

namespace ginv {

// Pair P < H <= G with P of prime power order (P may be trivial).
struct ProperPair {
  SubgroupRef P;
  SubgroupRef H;
  bool odd;  // |H:P| = |H O^2 : P O^2| = 2 and P O^p(G) = G for all odd p
};

// Parity per the definition above. Throws BadPair unless |P| is a prime
// power (1 allowed) and P is a proper subgroup of H.
bool pair_is_odd(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& H);

// Representatives of the G-conjugacy classes of prime-power-order subgroups,
// including the trivial subgroup; built by closure under p-element extension.
std::vector<SubgroupRef> prime_power_subgroup_classes(const FiniteGroup& G);

// Reduced pair set: for each class representative P, the single-element
// extensions <P, x> with x running over N_G(P)-conjugacy orbit reps outside P.
// Sufficient for gap checks: dim V^H is antitone in H, so every pair (P, H')
// dominates some listed (P, <P,x>) with x in H'. Cached per group.
const std::vector<ProperPair>& reduced_proper_pairs(const FiniteGroup& G);

// Full subgroup lattice by closure of cyclic subgroups under joins.
// Intended for small groups (proof-obligation tests); guarded by `cap`.
std::vector<SubgroupRef> all_subgroups(const FiniteGroup& G, std::uint64_t cap = 5000);

}  // namespace ginv
