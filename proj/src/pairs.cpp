#include "ginv/pairs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ginv/errors.hpp"

namespace ginv {

bool pair_is_odd(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& H) {
  if (!is_prime_power_order(P.order())) throw BadPair("P must have prime power order");
  if (P.order() >= H.order() ||
      !std::includes(H.elements().begin(), H.elements().end(), P.elements().begin(),
                     P.elements().end()))
    throw BadPair("P must be a proper subgroup of H");
  if (H.order() != 2 * P.order()) return false;
  SubgroupRef o2 = op_residual(G, 2);
  auto ext_order = [&](const SubgroupRef& X) {
    return X.order() * o2.order() / subgroup_intersection(X, o2).order();
  };
  if (ext_order(H) != 2 * ext_order(P)) return false;
  for (unsigned p : G.prime_divisors()) {
    if (p == 2) continue;
    SubgroupRef op = op_residual(G, p);
    std::uint64_t prod = P.order() * op.order() / subgroup_intersection(P, op).order();
    if (prod != G.order()) return false;
  }
  return true;
}

namespace {

// canonical form of a subgroup under G-conjugacy: lex-smallest conjugate
// element vector
std::vector<std::uint32_t> canonical_conjugate(const FiniteGroup& G,
                                               const std::vector<std::uint32_t>& elems) {
  std::set<std::vector<std::uint32_t>> orbit;
  std::vector<std::vector<std::uint32_t>> todo{elems};
  orbit.insert(elems);
  while (!todo.empty()) {
    auto cur = std::move(todo.back());
    todo.pop_back();
    for (auto g : G.generator_indices()) {
      std::vector<std::uint32_t> img;
      img.reserve(cur.size());
      for (auto e : cur) img.push_back(G.conj(e, g));
      std::sort(img.begin(), img.end());
      if (orbit.insert(img).second) todo.push_back(img);
    }
  }
  return *orbit.begin();
}

struct PairsCache {
  std::vector<ProperPair> pairs;
};
constexpr int kPairsSlot = 2;

}  // namespace

std::vector<SubgroupRef> prime_power_subgroup_classes(const FiniteGroup& G) {
  G.require_enumerated("prime_power_subgroup_classes");
  std::vector<SubgroupRef> out;
  out.push_back(G.trivial_subgroup());
  for (unsigned p : G.prime_divisors()) {
    // BFS levels: order p^k -> p^{k+1} via normalizer extensions
    std::vector<SubgroupRef> level{G.trivial_subgroup()};
    std::set<std::vector<std::uint32_t>> seen_canon;
    while (!level.empty()) {
      std::vector<SubgroupRef> next;
      for (const auto& P : level) {
        SubgroupRef N = normalizer(G, P);
        std::set<std::vector<std::uint32_t>> local;
        for (auto y : N.elements()) {
          if (P.contains(y)) continue;
          std::uint64_t o = G.element_order(y);
          std::uint64_t q = o;
          while (q % p == 0) q /= p;
          if (q != 1) continue;
          // want yP of order p in N/P: y^p must land in P
          std::uint32_t yp = y;
          for (unsigned i = 1; i < p; ++i) yp = G.mult(yp, y);
          if (!P.contains(yp)) continue;
          std::vector<std::uint32_t> seed = P.generators();
          seed.push_back(y);
          auto Q = subgroup(G, seed);
          if (Q.order() != P.order() * p) continue;
          auto canon = canonical_conjugate(G, Q.elements());
          if (!seen_canon.insert(canon).second) continue;
          if (local.insert(canon).second)
            next.push_back(subgroup_from_elements(G, canon));
        }
      }
      for (const auto& s : next) out.push_back(s);
      level = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

const std::vector<ProperPair>& reduced_proper_pairs(const FiniteGroup& G) {
  if (auto c = std::static_pointer_cast<PairsCache>(G.ext_cache(kPairsSlot))) return c->pairs;
  auto cache = std::make_shared<PairsCache>();
  auto pclasses = prime_power_subgroup_classes(G);
  for (const auto& P : pclasses) {
    if (P.order() == G.order()) continue;
    SubgroupRef N = normalizer(G, P);
    // N-conjugation orbits on elements
    std::vector<std::uint32_t> orbit_of(G.size32(), UINT32_MAX);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < G.size32(); ++x) {
      if (orbit_of[x] != UINT32_MAX) continue;
      std::uint32_t id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
      std::vector<std::uint32_t> stack{x};
      orbit_of[x] = id;
      while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        for (auto g : N.generators()) {
          std::uint32_t y = G.conj(cur, g);
          if (orbit_of[y] == UINT32_MAX) {
            orbit_of[y] = id;
            stack.push_back(y);
          }
        }
      }
    }
    std::set<std::vector<std::uint32_t>> seen_H;
    for (auto x : reps) {
      if (P.contains(x)) continue;
      std::vector<std::uint32_t> seed = P.generators();
      seed.push_back(x);
      auto H = subgroup(G, seed);
      if (!seen_H.insert(H.elements()).second) continue;
      ProperPair pp{P, H, false};
      pp.odd = pair_is_odd(G, pp.P, pp.H);
      cache->pairs.push_back(std::move(pp));
    }
  }
  G.set_ext_cache(kPairsSlot, cache);
  return cache->pairs;
}

std::vector<SubgroupRef> all_subgroups(const FiniteGroup& G, std::uint64_t cap) {
  G.require_enumerated("all_subgroups");
  std::map<std::vector<std::uint32_t>, SubgroupRef> found;
  auto add = [&](SubgroupRef s) {
    auto key = s.elements();
    if (found.count(key)) return false;
    found.emplace(std::move(key), std::move(s));
    return true;
  };
  add(G.trivial_subgroup());
  for (std::uint32_t x = 1; x < G.size32(); ++x) add(subgroup(G, std::vector<std::uint32_t>{x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SubgroupRef> snapshot;
    for (const auto& kv : found) snapshot.push_back(kv.second);
    if (snapshot.size() > cap)
      throw CapExceeded("subgroup lattice larger than cap for " + G.name());
    for (const auto& A : snapshot) {
      if (A.is_whole_group()) continue;
      for (std::uint32_t x = 1; x < G.size32(); ++x) {
        if (A.contains(x)) continue;
        std::vector<std::uint32_t> seed = A.generators();
        seed.push_back(x);
        if (add(subgroup(G, seed))) grew = true;
      }
    }
  }
  std::vector<SubgroupRef> out;
  for (const auto& kv : found) out.push_back(kv.second);
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace ginv
