#include "ginv/report.hpp"

#include <algorithm>
#include <ctime>
#include <random>
#include <set>
#include <sstream>

#include "ginv/errors.hpp"
#include "ginv/pairs.hpp"
#include "ginv/repmod.hpp"

namespace ginv {

void VerificationReport::add(Check c) {
  if (c.status == "pass")
    ++n_pass;
  else if (c.status == "fail")
    ++n_fail;
  else if (c.status == "warn")
    ++n_warn;
  else
    ++n_skip;
  checks.push_back(std::move(c));
}

RunContext RunContext::make(const VerifyOptions& opt) {
  RunContext ctx;
  ctx.opt = opt;
  std::vector<GroupSpec> specs = builtin_catalog();
  for (const auto& f : opt.catalog_files) {
    auto extra = load_group_file(f);
    specs.insert(specs.end(), extra.begin(), extra.end());
  }
  for (const auto& spec : specs) {
    if (spec.has_tag("heavy") && !opt.include_heavy) continue;
    GroupPtr g;
    try {
      g = build_spec(spec, opt.max_order);
    } catch (const CapExceeded&) {
      g = FiniteGroup::metadata_only(spec.name, spec.expected_order);
    }
    ctx.groups.emplace_back(spec, std::move(g));
  }
  return ctx;
}

const FiniteGroup* RunContext::find(const std::string& name) const {
  for (const auto& [spec, g] : groups)
    if (spec.name == name) return g.get();
  return nullptr;
}

namespace {

std::string u64s(std::uint64_t v) { return std::to_string(v); }

Check make_check(std::string id, std::string claim, bool pass, std::string got,
                 std::string expected) {
  return Check{std::move(id), std::move(claim), pass ? "pass" : "fail", std::move(got),
               std::move(expected)};
}

// -------- ranks suite --------

// printed a_G values being verified (the A9 entry disagrees with the
// computed value; see the warn emitted below)
const std::vector<std::pair<std::string, std::uint64_t>> kClaimedA = {
    {"A4", 0},  {"A5", 0},        {"A6", 0},        {"A7", 1},  {"A8", 3},
    {"A9", 6},  {"S3", 0},        {"S4", 0},        {"S5", 1},  {"S6", 2},
    {"S7", 5},  {"PSL(2,5)", 0},  {"PSL(2,7)", 0},  {"PSL(2,8)", 0},
    {"PSL(2,9)", 0}, {"PSL(2,17)", 0}, {"PSL(2,11)", 1}, {"PSL(2,13)", 1},
    {"PSL(3,3)", 1}, {"PSL(3,4)", 0}, {"Sz(8)", 0}, {"M11", 1}, {"M22", 1},
    {"SL(2,3)", 1},  {"Aut(A6)", 2},  {"PSigmaL(2,27)", 2}, {"M10", 0},
};

void ranks_suite(RunContext& ctx, VerificationReport& rep) {
  for (auto& [spec, gp] : ctx.groups) {
    if (!gp->enumerated()) {
      rep.add({"ranks:" + spec.name, "enumeration-based checks", "skip", "metadata-only", ""});
      continue;
    }
    const FiniteGroup& G = *gp;
    GroupEntry e;
    e.name = spec.name;
    e.order = G.order();
    e.enumerated = true;
    e.inv = invariant_report(G);

    if (spec.expected_a) {
      bool ok = e.inv.a_g == *spec.expected_a;
      rep.add(make_check("ranks:aG:" + spec.name, "a_G(" + spec.name + ") = " + u64s(*spec.expected_a),
                         ok, u64s(e.inv.a_g), u64s(*spec.expected_a)));
    }
    // rank identities
    bool ids_ok = e.inv.rk_io == e.inv.a_g &&
                  e.inv.rk_io_gg == e.inv.a_g - std::min<std::uint64_t>(e.inv.a_g, 1);
    rep.add(make_check("ranks:identities:" + spec.name,
                       "rk IO = a_G and rk IO(G,G) = max(a_G-1, 0)", ids_ok,
                       u64s(e.inv.rk_io) + "," + u64s(e.inv.rk_io_gg), "a_G, max(a_G-1,0)"));

    // dual-route: Fix^H matrix rank == coset-marking count, every normal H
    const auto& normals = normal_subgroups(G);
    bool dual_ok = true, chain_ok = true, lemma11_ok = true, lemma12_ok = true;
    for (const auto& H : normals) {
      std::uint64_t b = b_invariant(G, H);
      if (fix_rank_oracle(G, H) != b) dual_ok = false;
      auto Q = quotient(G, H);
      std::uint64_t a_quot = laitinen_number(*Q->quot);
      if (!(e.inv.a_g >= b && b >= a_quot)) chain_ok = false;
      // Lemma 1.1(1): some coset meets two NPP real classes <=> a_G > b
      std::vector<std::uint32_t> first(Q->coset_rep.size(), UINT32_MAX);
      bool two = false;
      for (const auto& rc : G.real_classes()) {
        if (!rc.is_npp) continue;
        std::uint32_t rid = G.real_class_of(rc.rep);
        for (auto oc : rc.ordinary)
          for (auto m : G.classes()[oc].members) {
            auto c = Q->coset_of[m];
            if (first[c] == UINT32_MAX)
              first[c] = rid;
            else if (first[c] != rid)
              two = true;
          }
      }
      if (two != (e.inv.a_g > b)) lemma11_ok = false;
      // Lemma 1.1(2): H holding two distinct NPP real classes forces a_G > b
      // Lemma 1.2 corollary: NPP elements of two orders inside H force a_G > b
      std::set<std::uint32_t> inside;
      std::set<std::uint64_t> inside_orders;
      for (const auto& rc : G.real_classes()) {
        if (!rc.is_npp) continue;
        bool contained = true;
        for (auto oc : rc.ordinary)
          for (auto m : G.classes()[oc].members)
            if (!H.contains(m)) {
              contained = false;
              break;
            }
        if (contained) {
          inside.insert(G.real_class_of(rc.rep));
          inside_orders.insert(rc.element_order);
        }
      }
      if (inside.size() >= 2 && !(e.inv.a_g > b)) lemma11_ok = false;
      if (inside_orders.size() >= 2 && !(e.inv.a_g > b)) lemma12_ok = false;
    }
    rep.add(make_check("ranks:fixrank:" + spec.name,
                       "Fix^H matrix rank equals the coset invariant b for every normal H",
                       dual_ok, dual_ok ? "agree" : "disagree", "agree"));
    rep.add(make_check("ranks:chain:" + spec.name, "a_G >= b_{G/H} >= a_{G/H} for every normal H",
                       chain_ok, chain_ok ? "holds" : "violated", "holds"));
    rep.add(make_check("ranks:coset-merge:" + spec.name,
                       "two NPP classes share a coset iff a_G > b_{G/H}", lemma11_ok,
                       lemma11_ok ? "holds" : "violated", "holds"));
    rep.add(make_check("ranks:order-split:" + spec.name,
                       "NPP elements of two orders inside H force a_G > b_{G/H}", lemma12_ok,
                       lemma12_ok ? "holds" : "violated", "holds"));
    // monotonicity over nested normal subgroups
    bool mono_ok = true;
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (i == j || normals[j].order() % normals[i].order() != 0) continue;
        if (!std::includes(normals[j].elements().begin(), normals[j].elements().end(),
                           normals[i].elements().begin(), normals[i].elements().end()))
          continue;
        if (b_invariant(G, normals[i]) < b_invariant(G, normals[j])) mono_ok = false;
      }
    rep.add(make_check("ranks:monotone:" + spec.name,
                       "H <= K normal implies b_{G/H} >= b_{G/K}", mono_ok,
                       mono_ok ? "holds" : "violated", "holds"));
    rep.groups.push_back(std::move(e));
  }

  // printed values; disagreements surface as warnings, not failures
  for (const auto& [name, claimed] : kClaimedA) {
    const FiniteGroup* G = ctx.find(name);
    if (!G || !G->enumerated()) {
      rep.add({"ranks:paperA:" + name, "a_G(" + name + ") = " + u64s(claimed), "skip",
               "group not in this run", u64s(claimed)});
      continue;
    }
    std::uint64_t got = laitinen_number(*G);
    if (got == claimed)
      rep.add(make_check("ranks:paperA:" + name, "a_G(" + name + ") = " + u64s(claimed), true,
                         u64s(got), u64s(claimed)));
    else
      rep.add({"ranks:paperA:" + name, "a_G(" + name + ") = " + u64s(claimed), "warn",
               u64s(got), u64s(claimed)});
  }
  // b values for the symmetric-group column
  struct BV {
    const char* g;
    const char* h_desc;
    std::uint64_t expect;
  };
  for (const BV& bv : {BV{"S6", "A6", 1}, BV{"S7", "A7", 2}}) {
    const FiniteGroup* G = ctx.find(bv.g);
    if (!G) continue;
    SubgroupRef alt = op_residual(*G, 2);
    std::uint64_t b = b_invariant(*G, alt);
    rep.add(make_check(std::string("ranks:b:") + bv.g, std::string("b_{G/H} for H = ") + bv.h_desc +
                                                           " equals " + u64s(bv.expect),
                       b == bv.expect, u64s(b), u64s(bv.expect)));
  }
  // the case-(5) style example: the literal definition yields b = 1 here
  if (const FiniteGroup* G = ctx.find("A5xZ3")) {
    SubgroupRef sol = residual(*G, ResidualKind::Solvable);
    std::uint64_t b = b_invariant(*G, sol);
    rep.add({"ranks:b:A5xZ3", "claimed a_G > b_{G/G^sol} > 1 for A5 x Z3; the literal coset "
                               "definition gives b = " + u64s(b),
             b > 1 ? "pass" : "warn", u64s(b), "> 1 (printed); 1 (literal definition)"});
  }
  // LO bounds
  struct LO {
    const char* g;
    std::uint64_t lo, hi;
  };
  for (const LO& t : {LO{"S6", 1, 1}, LO{"S7", 3, 3}, LO{"Aut(A6)", 0, 0}}) {
    const FiniteGroup* G = ctx.find(t.g);
    if (!G) continue;
    LoBounds lb = lo_rank_bounds(*G);
    bool ok = lb.lower == t.lo && lb.upper == t.hi;
    rep.add(make_check(std::string("ranks:lo:") + t.g, "LO rank bounds", ok,
                       u64s(lb.lower) + ".." + u64s(lb.upper), u64s(t.lo) + ".." + u64s(t.hi)));
  }
  // odd-order Oliver groups with only prime-power cyclic quotients:
  // a_G > b_{G/G^nil} >= 1
  for (auto& [spec, gp] : ctx.groups) {
    if (!gp->enumerated() || gp->order() % 2 == 0) continue;
    const FiniteGroup& G = *gp;
    if (!is_oliver(G).oliver) continue;
    bool all_pp = true;
    for (const auto& N : normal_subgroups(G)) {
      auto Q = quotient(G, N);
      if (is_cyclic(Q->quot->whole()) && !is_prime_power_order(Q->quot->order())) all_pp = false;
    }
    if (!all_pp) continue;
    std::uint64_t a = laitinen_number(G);
    std::uint64_t b = b_invariant(G, residual(G, ResidualKind::Nilpotent));
    bool ok = a > b && b >= 1;
    rep.add(make_check("ranks:odd-oliver:" + spec.name,
                       "odd-order Oliver with prime-power cyclic quotients: a_G > b_{G/G^nil} >= 1",
                       ok, "a=" + u64s(a) + " b=" + u64s(b), "a > b >= 1"));
  }
  // nonsolvable a_G = b_{G/G^sol} forces a_G <= 1 up to the two exceptions
  for (auto& [spec, gp] : ctx.groups) {
    if (!gp->enumerated()) continue;
    const FiniteGroup& G = *gp;
    if (is_solvable(G.whole())) continue;
    std::uint64_t a = laitinen_number(G);
    SubgroupRef sol = residual(G, ResidualKind::Solvable);
    std::uint64_t b = b_invariant(G, sol);
    bool exceptional = spec.name == "Aut(A6)" || spec.name == "PSigmaL(2,27)";
    bool ok = (a != b) || a <= 1 || (a == 2 && exceptional);
    rep.add(make_check("ranks:sol-equality:" + spec.name,
                       "nonsolvable with a_G = b_{G/G^sol} has a_G <= 1 or is one of the two "
                       "order-1440/29484 exceptions",
                       ok, "a=" + u64s(a) + " b=" + u64s(b), "a<=1 or exceptional a=2"));
    // rank IO(G, G^sol) = a - b vanishes exactly for a<=1 or the exceptions
    bool van = (a - b) == 0;
    bool expect_van = a <= 1 || exceptional;
    rep.add(make_check("ranks:io-sol:" + spec.name,
                       "IO(G, G^sol) = 0 exactly for a_G <= 1 or the two exceptions", van == expect_van,
                       van ? "zero" : "nonzero", expect_van ? "zero" : "nonzero"));
  }
}

// -------- classification suite --------

void classification_suite(RunContext& ctx, VerificationReport& rep) {
  for (auto& [spec, gp] : ctx.groups) {
    if (!gp->enumerated()) {
      rep.add({"class:" + spec.name, "structural checks", "skip", "metadata-only", ""});
      continue;
    }
    const FiniteGroup& G = *gp;
    OliverResult oliver = is_oliver(G);
    bool nonsolvable = !is_solvable(G.whole());
    if (nonsolvable)
      rep.add(make_check("class:oliver-nonsolvable:" + spec.name,
                         "every nonsolvable group is an Oliver group", oliver.oliver,
                         oliver.oliver ? "oliver" : "not oliver", "oliver"));
    if (spec.has_tag("oliver"))
      rep.add(make_check("class:oliver:" + spec.name, "tagged Oliver", oliver.oliver,
                         oliver.oliver ? "oliver" : "not", "oliver"));
    if (spec.has_tag("not-oliver"))
      rep.add(make_check("class:oliver:" + spec.name, "tagged non-Oliver", !oliver.oliver,
                         oliver.oliver ? "oliver" : "not", "not oliver"));
    if (is_nilpotent(G.whole())) {
      unsigned noncyclic = 0;
      for (unsigned p : G.prime_divisors())
        if (!is_cyclic(sylow(G, p))) ++noncyclic;
      bool expect = noncyclic >= 3;
      rep.add(make_check("class:nilpotent-criterion:" + spec.name,
                         "nilpotent: Oliver iff >= 3 noncyclic Sylow subgroups",
                         oliver.oliver == expect,
                         oliver.oliver ? "oliver" : "not", expect ? "oliver" : "not"));
    }
    if (is_cyclic(G.whole()) && G.order() > 1)
      rep.add(make_check("class:cyclic-not-oliver:" + spec.name, "cyclic groups are never Oliver",
                         !oliver.oliver, oliver.oliver ? "oliver" : "not", "not oliver"));
    if (oliver.oliver)
      rep.add(make_check("class:pl-disjoint:" + spec.name,
                         "Oliver groups have P(G) disjoint from L(G)", p_l_disjoint(G),
                         p_l_disjoint(G) ? "disjoint" : "meets", "disjoint"));
    if (spec.has_tag("cp"))
      rep.add(make_check("class:cp:" + spec.name, "tagged CP (all elements of prime power order)",
                         is_cp(G), is_cp(G) ? "cp" : "not cp", "cp"));

    ClassificationVerdict v = classification_match(G);
    if (oliver.oliver && v.a_g <= 1) {
      bool one = v.matched_case != 0 && v.all_matches.size() == 1;
      int tagged = 0;
      for (const auto& t : spec.tags)
        if (t.rfind("classification-", 0) == 0) tagged = std::stoi(t.substr(15));
      bool tag_ok = tagged == 0 || tagged == v.matched_case;
      rep.add(make_check("class:match:" + spec.name,
                         "Oliver group with a_G <= 1 matches exactly one structural case",
                         one && tag_ok,
                         "case " + std::to_string(v.matched_case) + " (" +
                             std::to_string(v.all_matches.size()) + " match(es))",
                         tagged ? "case " + std::to_string(tagged) : "exactly one case"));
    } else if (oliver.oliver && v.a_g >= 2) {
      rep.add(make_check("class:no-match:" + spec.name,
                         "Oliver group with a_G >= 2 matches no structural case",
                         v.all_matches.empty(),
                         v.all_matches.empty() ? "none" : "matched", "none"));
    }
  }

  // gap decisions
  GapOptions gopt;
  gopt.exact_order_cap = ctx.opt.exact_gap_cap;
  auto gap_of = [&](const char* name, GapMode mode) {
    const FiniteGroup* G = ctx.find(name);
    if (!G) return std::string("absent");
    return to_string(gap_status(*G, mode, gopt));
  };
  rep.add(make_check("gap:sufficient:A5", "A5 is a gap group (perfect route)",
                     gap_of("A5", GapMode::Sufficient) == "gap", gap_of("A5", GapMode::Sufficient),
                     "gap"));
  if (ctx.opt.exact_gap) {
    struct GV {
      const char* g;
      const char* expect;
    };
    std::vector<GV> exact = {{"A5", "gap"},   {"A6", "gap"},      {"S4", "not_gap"},
                             {"S5", "not_gap"}, {"S6", "gap"},      {"Aut(A6)", "not_gap"}};
    if (ctx.opt.include_heavy) exact.push_back({"PSigmaL(2,27)", "gap"});
    for (const auto& t : exact) {
      std::string got = gap_of(t.g, GapMode::Exact);
      rep.add(make_check(std::string("gap:exact:") + t.g,
                         std::string(t.g) + " exact gap decision = " + t.expect, got == t.expect,
                         got, t.expect));
    }
    // consistency: sufficient gap implies exact gap
    for (auto& [spec, gp] : ctx.groups) {
      if (!gp->enumerated() || gp->order() > gopt.exact_order_cap) continue;
      if (gap_status(*gp, GapMode::Sufficient, gopt) != GapVerdict::Gap) continue;
      GapVerdict ex = gap_status(*gp, GapMode::Exact, gopt);
      if (ex == GapVerdict::Unknown) continue;
      rep.add(make_check("gap:consistent:" + spec.name,
                         "sufficient-condition gap implies exact-mode gap", ex == GapVerdict::Gap,
                         to_string(ex), "gap"));
    }
  }
}

// -------- vgg suite --------

void vgg_suite(RunContext& ctx, VerificationReport& rep) {
  for (const char* name : {"S4", "S5", "S6", "A4", "A5", "SL(2,3)"}) {
    const FiniteGroup* G = ctx.find(name);
    if (!G) {
      rep.add({std::string("vgg:") + name, "dichotomy", "skip", "absent", ""});
      continue;
    }
    bool ok = true;
    std::size_t odd = 0, even = 0;
    for (const auto& pp : reduced_proper_pairs(*G)) {
      long long d = vg_gap_defect(*G, pp.P, pp.H);
      if (pp.odd) {
        ++odd;
        if (d != 0) ok = false;
      } else {
        ++even;
        if (d < 1) ok = false;
      }
    }
    rep.add(make_check(std::string("vgg:") + name,
                       "d_{V(G)} vanishes exactly on odd pairs and is >= 1 on even pairs", ok,
                       "odd=" + std::to_string(odd) + " even=" + std::to_string(even) +
                           (ok ? " all consistent" : " mismatch"),
                       "0 on odd, >=1 on even"));
  }
}

// -------- a2 suite --------

void a2_suite(RunContext& ctx, VerificationReport& rep) {
  const FiniteGroup* z15 = ctx.find("Z15");
  if (z15) {
    auto pair = construct_a2(*z15, z15->trivial_subgroup());
    bool ok = pair.a == 7 && pair.b == 11;
    rep.add(make_check("a2:crt:Z15", "CRT exponents for p=3, q=5 are a=7 and b=11", ok,
                       "a=" + std::to_string(pair.a) + " b=" + std::to_string(pair.b),
                       "a=7 b=11"));
  }
  for (auto& [spec, gp] : ctx.groups) {
    if (!gp->enumerated()) continue;
    const FiniteGroup& G = *gp;
    auto kernels = pq_cyclic_kernels(G);
    if (kernels.empty()) continue;
    bool all_ok = true;
    std::string detail;
    for (const auto& H : kernels) {
      try {
        A2Pair pr = construct_a2(G, H);
        VirtualCharacter d{pr.rU, pr.rV};
        bool ok = membership(d, MembershipKind::LO) && is_l_free(pr.rU) && is_l_free(pr.rV);
        bool differ = false;
        for (std::size_t c = 0; c < pr.rU.by_class.size(); ++c)
          if (std::abs(pr.rU.by_class[c] - pr.rV.by_class[c]) > 1e-6) differ = true;
        if (!(ok && differ)) all_ok = false;
        detail += "|G/H|=" + u64s(G.order() / H.order()) + " ";
      } catch (const std::exception& ex) {
        all_ok = false;
        detail += std::string("error: ") + ex.what();
      }
    }
    rep.add(make_check("a2:" + spec.name,
                       "order-pq construction yields an L-free nonzero element of LO(G)", all_ok,
                       detail + (all_ok ? "ok" : "failed"), "L-free, in IO, unequal characters"));
  }
}

// -------- key lemma suite --------

void keylemma_suite(RunContext& ctx, VerificationReport& rep) {
  std::mt19937 rng(20260810);
  for (const char* name : {"Z15", "S4", "SL(2,3)", "S5"}) {
    const FiniteGroup* Gp = ctx.find(name);
    if (!Gp) {
      rep.add({std::string("keylemma:") + name, "orientation suite", "skip", "absent", ""});
      continue;
    }
    const FiniteGroup& G = *Gp;
    // block library
    std::vector<MatrixModule> blocks;
    blocks.push_back(trivial_matrix_module(G));
    blocks.push_back(regular_matrix_module(G));
    for (unsigned p : G.prime_divisors()) blocks.push_back(perm_matrix_module(G, sylow(G, p)));
    std::uniform_int_distribution<std::uint32_t> del(0, G.size32() - 1);
    for (int i = 0; i < 3; ++i) {
      auto cyc = subgroup(G, std::vector<std::uint32_t>{del(rng)});
      blocks.push_back(perm_matrix_module(G, cyc));
    }
    // rotation blocks from the abelianization when cyclic
    SubgroupRef derived = derived_subgroup(G, G.whole());
    QuotientPtr ab = quotient(G, derived);
    std::vector<std::pair<QuotientPtr, unsigned>> rots;
    if (ab->quot->order() > 1 && is_cyclic(ab->quot->whole()))
      for (unsigned k = 1; k < ab->quot->order(); ++k) rots.push_back({ab, k});
    for (const auto& [q, k] : rots) blocks.push_back(rotation_matrix_module(G, *q, k));
    // a2 sides where a pq kernel exists
    std::vector<std::pair<MatrixModule, MatrixModule>> sides;
    for (const auto& H : pq_cyclic_kernels(G)) {
      auto Q = quotient(G, H);
      A2Pair pr = construct_a2(G, H);
      sides.emplace_back(
          direct_sum(rotation_matrix_module(G, *Q, 1), rotation_matrix_module(G, *Q, 2)),
          direct_sum(rotation_matrix_module(G, *Q, pr.a), rotation_matrix_module(G, *Q, pr.b)));
    }
    bool all_pass = true;
    unsigned trials = 50;
    std::uniform_int_distribution<std::size_t> bsel(0, blocks.size() - 1);
    for (unsigned t = 0; t < trials; ++t) {
      std::vector<std::size_t> picks;
      unsigned nblocks = 1 + (rng() % 3);
      for (unsigned i = 0; i < nblocks; ++i) picks.push_back(bsel(rng));
      MatrixModule U = blocks[picks[0]];
      for (std::size_t i = 1; i < picks.size(); ++i) U = direct_sum(U, blocks[picks[i]]);
      std::shuffle(picks.begin(), picks.end(), rng);
      MatrixModule V = blocks[picks[0]];
      for (std::size_t i = 1; i < picks.size(); ++i) V = direct_sum(V, blocks[picks[i]]);
      if (!sides.empty() && (rng() & 1)) {
        const auto& [su, sv] = sides[rng() % sides.size()];
        U = direct_sum(U, su);
        V = direct_sum(V, sv);
      }
      try {
        validate_matrix_module(U, 40);
        validate_matrix_module(V, 40);
        OrientationReport orep = orientation_check(U, V);
        if (!orep.pass) all_pass = false;
      } catch (const std::exception&) {
        all_pass = false;
      }
    }
    rep.add(make_check(std::string("keylemma:") + name,
                       "orientation check passes on 50 randomized module pairs with characters "
                       "agreeing on prime-power-order elements",
                       all_pass, all_pass ? "50/50 pass" : "failure observed", "all pass"));

    // determinant parity: cyclic 2-subgroups T with dim U^T = dim V^T (mod 2)
    bool det_ok = true;
    unsigned det_checked = 0;
    for (const auto& cls : G.classes()) {
      std::uint64_t o = cls.element_order;
      if (o < 2) continue;
      bool two_power = (o & (o - 1)) == 0;
      if (!two_power) continue;
      auto T = subgroup(G, std::vector<std::uint32_t>{cls.rep});
      for (unsigned t = 0; t < 10; ++t) {
        std::size_t i = bsel(rng), j = bsel(rng);
        const MatrixModule &A = blocks[i], &B = blocks[j];
        if (A.dim() != B.dim()) continue;
        long long da = rounded_fixed_dim(G, A.character().by_class, T);
        long long db = rounded_fixed_dim(G, B.character().by_class, T);
        if (((da - db) % 2 + 2) % 2 != 0) continue;
        double du = A.evaluate(cls.rep).determinant();
        double dv = B.evaluate(cls.rep).determinant();
        ++det_checked;
        if (std::abs(du - dv) > 1e-6) det_ok = false;
      }
    }
    rep.add(make_check(std::string("keylemma:det2:") + name,
                       "equal-dimension modules with congruent fixed dims mod 2 share det(t) on "
                       "2-power elements",
                       det_ok, std::to_string(det_checked) + " comparisons", "all agree"));
  }
  // dihedral realification pair
  if (const FiniteGroup* d15 = ctx.find("D15")) {
    // pull the rotation subgroup quotient trick: use the A2 pair of the
    // rotation subgroup realized inside D15 via its 2-dim irreducibles
    // (realified pair on the cyclic subgroup, checked on Z15 directly);
    // here check the Z15 matrix pair orientation as the named example
    const FiniteGroup* z15 = ctx.find("Z15");
    if (z15) {
      auto Q = quotient(*z15, z15->trivial_subgroup());
      A2Pair pr = construct_a2(*z15, z15->trivial_subgroup());
      MatrixModule U = direct_sum(rotation_matrix_module(*z15, *Q, 1),
                                  rotation_matrix_module(*z15, *Q, 2));
      MatrixModule V = direct_sum(rotation_matrix_module(*z15, *Q, pr.a),
                                  rotation_matrix_module(*z15, *Q, pr.b));
      OrientationReport orep = orientation_check(U, V);
      rep.add(make_check("keylemma:a2pair:Z15",
                         "matrix realization of the order-15 construction is P-oriented",
                         orep.pass, orep.pass ? "pass" : "fail", "pass"));
    }
    (void)d15;
  }
}

}  // namespace

VerificationReport verify_suite(const std::string& suite, RunContext& ctx) {
  VerificationReport rep;
  rep.suite = suite;
  bool known = false;
  if (suite == "ranks" || suite == "all") {
    ranks_suite(ctx, rep);
    known = true;
  }
  if (suite == "classification" || suite == "all") {
    classification_suite(ctx, rep);
    known = true;
  }
  if (suite == "vgg" || suite == "all") {
    vgg_suite(ctx, rep);
    known = true;
  }
  if (suite == "a2" || suite == "all") {
    a2_suite(ctx, rep);
    known = true;
  }
  if (suite == "keylemma" || suite == "all") {
    keylemma_suite(ctx, rep);
    known = true;
  }
  if (!known) throw UnknownName("unknown verify suite: " + suite);
  return rep;
}

Json group_entry_json(const GroupEntry& e) {
  Json j;
  j["group"] = e.name;
  j["order"] = e.order;
  j["a_g"] = e.inv.a_g;
  j["npp_orders"] = e.inv.npp_orders;
  Json bt = Json::array();
  for (const auto& row : e.inv.b_table)
    bt.push_back({{"h_order", row.h_order}, {"b", row.b}, {"rk_io_gh", row.rk_io_gh}});
  j["b_table"] = bt;
  j["ranks"] = {{"io", e.inv.rk_io}, {"io_gg", e.inv.rk_io_gg}};
  j["lo_bounds"] = {e.inv.lo.lower, e.inv.lo.upper};
  j["oliver"] = e.oliver;
  j["gap"] = e.gap;
  j["classification_case"] = e.classification_case;
  return j;
}

Json report_to_json(const VerificationReport& rep, bool with_timestamp) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  if (with_timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
  j["suite"] = rep.suite;
  Json groups = Json::array();
  for (const auto& e : rep.groups) groups.push_back(group_entry_json(e));
  j["groups"] = groups;
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"id", c.id},
                      {"paper_ref", c.paper_ref},
                      {"status", c.status},
                      {"got", c.got},
                      {"expected", c.expected}});
  j["checks"] = checks;
  j["summary"] = {{"pass", rep.n_pass}, {"fail", rep.n_fail}, {"warn", rep.n_warn},
                  {"skipped", rep.n_skip}};
  return j;
}

std::string report_to_tsv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "id\tstatus\tgot\texpected\n";
  for (const auto& c : rep.checks)
    os << c.id << '\t' << c.status << '\t' << c.got << '\t' << c.expected << '\n';
  return os.str();
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "suite: " << rep.suite << "\n";
  for (const auto& c : rep.checks) {
    os << "  [" << c.status << "] " << c.id;
    if (c.status != "pass") os << "  (got " << c.got << ", expected " << c.expected << ")";
    os << "\n";
  }
  os << "summary: " << rep.n_pass << " pass, " << rep.n_fail << " fail, " << rep.n_warn
     << " warn, " << rep.n_skip << " skipped\n";
  return os.str();
}

}  // namespace ginv
