#include "ginv/invariants.hpp"

#include <algorithm>
#include <set>

#include "ginv/errors.hpp"

namespace ginv {

std::vector<std::uint32_t> npp_elements(const FiniteGroup& G) {
  G.require_enumerated("npp_elements");
  std::vector<std::uint32_t> out;
  for (const auto& rc : G.real_classes())
    if (rc.is_npp)
      for (auto c : rc.ordinary)
        for (auto m : G.classes()[c].members) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t laitinen_number(const FiniteGroup& G) {
  G.require_enumerated("laitinen_number");
  std::uint64_t a = 0;
  for (const auto& rc : G.real_classes())
    if (rc.is_npp) ++a;
  return a;
}

std::vector<std::uint64_t> npp_orders(const FiniteGroup& G) {
  std::set<std::uint64_t> s;
  for (const auto& rc : G.real_classes())
    if (rc.is_npp) s.insert(rc.element_order);
  return {s.begin(), s.end()};
}

std::uint64_t b_invariant(const FiniteGroup& G, const SubgroupRef& H) {
  auto Q = quotient(G, H);
  const std::uint32_t ncosets = static_cast<std::uint32_t>(Q->coset_rep.size());
  std::vector<bool> marked(ncosets, false);
  for (const auto& rc : G.real_classes()) {
    if (!rc.is_npp) continue;
    for (auto c : rc.ordinary)
      for (auto m : G.classes()[c].members) marked[Q->coset_of[m]] = true;
  }
  std::uint64_t b = 0;
  for (const auto& rc : Q->quot->real_classes()) {
    bool hit = false;
    for (auto c : rc.ordinary) {
      for (auto m : Q->quot->classes()[c].members)
        if (marked[Q->qelem_to_coset[m]]) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (hit) ++b;
  }
  return b;
}

std::uint64_t rank(const FiniteGroup& G, RankKind kind, const SubgroupRef* H) {
  std::uint64_t a = laitinen_number(G);
  switch (kind) {
    case RankKind::IO:
      return a;
    case RankKind::IO_GG:
      return a - std::min<std::uint64_t>(a, 1);
    case RankKind::IO_GH: {
      if (!H) throw std::invalid_argument("rank(IO_GH) needs a normal subgroup");
      return a - b_invariant(G, *H);
    }
  }
  return 0;
}

LoBounds lo_rank_bounds(const FiniteGroup& G) {
  std::uint64_t a = laitinen_number(G);
  SubgroupRef nil = residual(G, ResidualKind::Nilpotent);
  LoBounds lb;
  lb.lower = a - b_invariant(G, nil);
  lb.upper = UINT64_MAX;
  SubgroupRef sol = residual(G, ResidualKind::Solvable);
  bool sol_attains = false;
  for (unsigned p : G.prime_divisors()) {
    SubgroupRef op = op_residual(G, p);
    std::uint64_t up = a - b_invariant(G, op);
    bool is_sol = op.order() == sol.order() && op.same_elements(sol);
    if (up < lb.upper) {
      lb.upper = up;
      sol_attains = is_sol;
    } else if (up == lb.upper && is_sol) {
      sol_attains = true;
    }
  }
  if (lb.upper == UINT64_MAX) lb.upper = a - std::min<std::uint64_t>(a, 1);  // trivial group
  lb.exact = (lb.lower == lb.upper) || sol_attains;
  if (sol_attains && lb.lower != lb.upper) {
    // LO(G) = IO(G, G^{sol}) when the solvable residual is an O^p(G)
    lb.lower = lb.upper;
    lb.exact = true;
  }
  return lb;
}

RationalClassFunction real_class_indicator(const FiniteGroup& G, std::uint32_t r) {
  RationalClassFunction f;
  f.group = &G;
  f.by_class.assign(G.classes().size(), Rational(0));
  for (auto c : G.real_classes()[r].ordinary) f.by_class[c] = 1;
  return f;
}

RationalClassFunction fix_pushforward(const QuotientGroup& Q, const RationalClassFunction& f) {
  const FiniteGroup& G = *Q.base;
  const FiniteGroup& Qg = *Q.quot;
  const std::uint64_t h = G.order() / Qg.order();
  std::vector<Rational> per_coset(Q.coset_rep.size(), Rational(0));
  for (std::uint32_t i = 0; i < G.size32(); ++i) per_coset[Q.coset_of[i]] += f.at_element(i);
  RationalClassFunction out;
  out.group = &Qg;
  out.by_class.assign(Qg.classes().size(), Rational(0));
  for (std::uint32_t c = 0; c < Qg.classes().size(); ++c) {
    std::uint32_t qrep = Qg.classes()[c].rep;
    out.by_class[c] = per_coset[Q.qelem_to_coset[qrep]] / Rational(h);
  }
  return out;
}

RationalClassFunction fix_pushforward(const FiniteGroup& G, const SubgroupRef& H,
                                      const RationalClassFunction& f) {
  return fix_pushforward(*quotient(G, H), f);
}

std::uint64_t fix_rank_oracle(const FiniteGroup& G, const SubgroupRef& H) {
  auto Q = quotient(G, H);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (std::uint32_t r = 0; r < G.real_classes().size(); ++r) {
    if (!G.real_classes()[r].is_npp) continue;
    auto dense = fix_pushforward(*Q, real_class_indicator(G, r)).by_class;
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t c = 0; c < dense.size(); ++c)
      if (dense[c] != 0) row.emplace_back(c, std::move(dense[c]));
    rows.push_back(std::move(row));
  }
  return sparse_rational_rank(std::move(rows));
}

InvariantReport invariant_report(const FiniteGroup& G) {
  InvariantReport rep;
  rep.group = G.name();
  rep.a_g = laitinen_number(G);
  rep.npp_orders = npp_orders(G);
  for (const auto& N : normal_subgroups(G)) {
    BTableRow row;
    row.h_order = N.order();
    row.b = b_invariant(G, N);
    row.rk_io_gh = rep.a_g - row.b;
    rep.b_table.push_back(row);
  }
  rep.rk_io = rep.a_g;
  rep.rk_io_gg = rep.a_g - std::min<std::uint64_t>(rep.a_g, 1);
  rep.lo = lo_rank_bounds(G);
  return rep;
}

}  // namespace ginv
