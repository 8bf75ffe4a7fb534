#include "ginv/repmod.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ginv/chartab.hpp"
#include "ginv/errors.hpp"

namespace ginv {

long long dim_fixed(const RealModuleChar& V, const SubgroupRef& H) {
  return rounded_fixed_dim(*V.group, V.by_class, H);
}

bool is_l_free(const RealModuleChar& V) {
  const FiniteGroup& G = *V.group;
  for (unsigned p : G.prime_divisors())
    if (dim_fixed(V, op_residual(G, p)) != 0) return false;
  return true;
}

namespace {

bool chars_equal_on_prime_power(const RealModuleChar& u, const RealModuleChar& v) {
  const FiniteGroup& G = *u.group;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    if (!is_prime_power_order(G.classes()[c].element_order)) continue;
    if (std::abs(u.by_class[c] - v.by_class[c]) > 1e-6) return false;
  }
  return true;
}

}  // namespace

bool membership(const VirtualCharacter& d, MembershipKind kind, const SubgroupRef* H) {
  const FiniteGroup& G = *d.plus.group;
  bool io = chars_equal_on_prime_power(d.plus, d.minus);
  switch (kind) {
    case MembershipKind::IO:
      return io;
    case MembershipKind::IO_GG:
      return io && dim_fixed(d.plus, G.whole()) == dim_fixed(d.minus, G.whole());
    case MembershipKind::IO_GH: {
      if (!H) throw std::invalid_argument("membership(IO_GH) needs a normal subgroup");
      if (!io) return false;
      auto Q = quotient(G, *H);
      // compare the pushed-forward characters coset-wise
      std::vector<double> pu(Q->coset_rep.size(), 0.0), pv(Q->coset_rep.size(), 0.0);
      for (std::uint32_t i = 0; i < G.size32(); ++i) {
        pu[Q->coset_of[i]] += d.plus.at_element(i);
        pv[Q->coset_of[i]] += d.minus.at_element(i);
      }
      for (std::size_t c = 0; c < pu.size(); ++c)
        if (std::abs(pu[c] - pv[c]) > 1e-6 * static_cast<double>(H->order())) return false;
      return true;
    }
    case MembershipKind::LO:
      return io && is_l_free(d.plus) && is_l_free(d.minus);
  }
  return false;
}

RealModuleChar trivial_character(const FiniteGroup& G) {
  RealModuleChar r;
  r.group = &G;
  r.by_class.assign(G.classes().size(), 1.0);
  r.provenance = "trivial";
  return r;
}

RealModuleChar regular_character(const FiniteGroup& G) {
  RealModuleChar r;
  r.group = &G;
  r.by_class.assign(G.classes().size(), 0.0);
  r.by_class[0] = static_cast<double>(G.order());
  r.provenance = "regular";
  return r;
}

RealModuleChar permutation_character(const FiniteGroup& G, const SubgroupRef& H) {
  RealModuleChar r;
  r.group = &G;
  r.by_class.assign(G.classes().size(), 0.0);
  r.provenance = "perm[G/" + std::to_string(H.order()) + "]";
  if (H.is_normal_in_parent()) {
    // R[G]^N = R[G/N]: |G:N| on N, zero elsewhere
    double idx = static_cast<double>(G.order() / H.order());
    for (std::size_t c = 0; c < G.classes().size(); ++c)
      if (H.contains(G.classes()[c].rep)) r.by_class[c] = idx;
    return r;
  }
  // chi(g) = (1/|H|) #{x : x g x^-1 in H}
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    std::uint32_t g = G.classes()[c].rep;
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < G.size32(); ++x)
      if (H.contains(G.conj(g, G.inv(x)))) ++count;
    r.by_class[c] = static_cast<double>(count) / static_cast<double>(H.order());
  }
  return r;
}

VirtualCharacter v_g_character(const FiniteGroup& G) {
  VirtualCharacter v;
  v.plus = regular_character(G);
  v.minus = trivial_character(G);
  v.minus.provenance = "trivial";
  for (unsigned p : G.prime_divisors()) {
    SubgroupRef op = op_residual(G, p);
    if (op.is_whole_group()) continue;  // R[G]^G - R = 0
    RealModuleChar pc = permutation_character(G, op);
    for (std::size_t c = 0; c < pc.by_class.size(); ++c)
      v.minus.by_class[c] += pc.by_class[c] - 1.0;
  }
  v.plus.provenance = "V(G)+";
  v.minus.provenance = "V(G)-";
  return v;
}

long long vg_dim_fixed(const FiniteGroup& G, const SubgroupRef& K) {
  // dim V(G)^K = (|G|/|K| - 1) - sum_p ( |G:O^p| |K n O^p| / |K| - 1 )
  long long total = static_cast<long long>(G.order() / K.order()) - 1;
  for (unsigned p : G.prime_divisors()) {
    SubgroupRef op = op_residual(G, p);
    if (op.is_whole_group()) continue;
    std::uint64_t inter = subgroup_intersection(K, op).order();
    std::uint64_t orbits = (G.order() / op.order()) * inter / K.order();
    total -= static_cast<long long>(orbits) - 1;
  }
  return total;
}

long long vg_gap_defect(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& H) {
  if (!is_prime_power_order(P.order())) throw BadPair("P must have prime power order");
  if (P.order() >= H.order() ||
      !std::includes(H.elements().begin(), H.elements().end(), P.elements().begin(),
                     P.elements().end()))
    throw BadPair("P must be a proper subgroup of H");
  return vg_dim_fixed(G, P) - 2 * vg_dim_fixed(G, H);
}

long long gap_defect(const VirtualCharacter& V, const SubgroupRef& P, const SubgroupRef& H) {
  if (!is_prime_power_order(P.order())) throw BadPair("P must have prime power order");
  if (P.order() >= H.order() ||
      !std::includes(H.elements().begin(), H.elements().end(), P.elements().begin(),
                     P.elements().end()))
    throw BadPair("P must be a proper subgroup of H");
  long long dp = dim_fixed(V.plus, P) - dim_fixed(V.minus, P);
  long long dh = dim_fixed(V.plus, H) - dim_fixed(V.minus, H);
  return dp - 2 * dh;
}

bool is_gap_module(const VirtualCharacter& V) {
  const FiniteGroup& G = *V.plus.group;
  RealModuleChar net;
  net.group = &G;
  net.by_class.resize(G.classes().size());
  for (std::size_t c = 0; c < net.by_class.size(); ++c)
    net.by_class[c] = V.plus.by_class[c] - V.minus.by_class[c];
  if (!is_l_free(net)) return false;
  for (const auto& pp : reduced_proper_pairs(G))
    if (gap_defect(V, pp.P, pp.H) <= 0) return false;
  return true;
}

std::vector<SubgroupRef> pq_cyclic_kernels(const FiniteGroup& G) {
  std::vector<SubgroupRef> out;
  for (const auto& N : normal_subgroups(G)) {
    std::uint64_t idx = G.order() / N.order();
    auto primes = prime_divisors_of(idx);
    if (primes.size() != 2 || primes[0] == 2) continue;
    if (static_cast<std::uint64_t>(primes[0]) * primes[1] != idx) continue;
    auto Q = quotient(G, N);
    if (is_cyclic(Q->quot->whole())) out.push_back(N);
  }
  return out;
}

A2Pair construct_a2(const FiniteGroup& G, const SubgroupRef& H) {
  std::uint64_t n = G.order() / H.order();
  auto primes = prime_divisors_of(n);
  if (primes.size() != 2 || primes[0] == 2 ||
      static_cast<std::uint64_t>(primes[0]) * primes[1] != n)
    throw BadQuotient("construct_a2 needs |G/H| = pq with p != q odd primes");
  if (!H.is_normal_in_parent()) throw NotNormal("construct_a2: H is not normal");
  auto Q = quotient(G, H);
  if (!is_cyclic(Q->quot->whole()))
    throw BadQuotient("construct_a2 needs a cyclic quotient");
  A2Pair out;
  out.p = primes[0];
  out.q = primes[1];
  for (unsigned x = 1; x < n; ++x) {
    if (x % out.p == 1 % out.p && x % out.q == 2 % out.q) out.a = x;
    if (x % out.p == 2 % out.p && x % out.q == 1 % out.q) out.b = x;
  }
  // generator: smallest quotient element of full order; dlog over its powers
  const FiniteGroup& Qg = *Q->quot;
  std::uint32_t gen = 0;
  for (std::uint32_t i = 0; i < Qg.size32(); ++i)
    if (Qg.element_order(i) == n) {
      gen = i;
      break;
    }
  std::vector<unsigned> dlog(Qg.size32(), 0);
  std::uint32_t cur = 0;
  for (unsigned j = 0; j < n; ++j) {
    dlog[cur] = j;
    cur = Qg.mult(cur, gen);
  }
  const double two_pi = 6.283185307179586476925286766559;
  auto realified = [&](unsigned k1, unsigned k2, const std::string& tag) {
    RealModuleChar r;
    r.group = &G;
    r.by_class.resize(G.classes().size());
    r.provenance = tag;
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      std::uint32_t rep = G.classes()[c].rep;
      unsigned kk = dlog[Q->coset_to_qelem[Q->coset_of[rep]]];
      r.by_class[c] = 2.0 * std::cos(two_pi * double(k1) * double(kk) / double(n)) +
                      2.0 * std::cos(two_pi * double(k2) * double(kk) / double(n));
    }
    return r;
  };
  out.rU = realified(1, 2, "a2:rU");
  out.rV = realified(out.a, out.b, "a2:rV");
  // postconditions
  if (!is_l_free(out.rU) || !is_l_free(out.rV))
    throw NumericalFailure("a2 construction produced a non-L-free module");
  VirtualCharacter d{out.rU, out.rV};
  if (!membership(d, MembershipKind::LO))
    throw NumericalFailure("a2 construction not in LO");
  bool differs = false;
  for (std::size_t c = 0; c < out.rU.by_class.size(); ++c)
    if (std::abs(out.rU.by_class[c] - out.rV.by_class[c]) > 1e-6) differs = true;
  if (!differs) throw NumericalFailure("a2 construction produced equal characters");
  return out;
}

// ---------------- matrix modules ----------------

MatrixModule::MatrixModule(const FiniteGroup* G, std::vector<Eigen::MatrixXd> gen_mats,
                           std::string provenance)
    : group_(G), gen_mats_(std::move(gen_mats)), provenance_(std::move(provenance)) {
  dim_ = gen_mats_.empty() ? 0 : static_cast<unsigned>(gen_mats_[0].rows());
  cache_.emplace(0u, Eigen::MatrixXd::Identity(dim_, dim_));
}

MatrixModule::MatrixModule(const MatrixModule& o)
    : group_(o.group_), dim_(o.dim_), gen_mats_(o.gen_mats_), provenance_(o.provenance_) {
  cache_.emplace(0u, Eigen::MatrixXd::Identity(dim_, dim_));
}

MatrixModule& MatrixModule::operator=(const MatrixModule& o) {
  if (this != &o) {
    group_ = o.group_;
    dim_ = o.dim_;
    gen_mats_ = o.gen_mats_;
    provenance_ = o.provenance_;
    cache_.clear();
    cache_.emplace(0u, Eigen::MatrixXd::Identity(dim_, dim_));
  }
  return *this;
}

namespace {

// BFS factorization of each element as parent * generator
const std::vector<std::pair<std::uint32_t, std::uint32_t>>& bfs_tree(const FiniteGroup& G) {
  constexpr int kSlot = 3;
  struct Tree {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parent;
  };
  if (auto c = std::static_pointer_cast<Tree>(G.ext_cache(kSlot))) return c->parent;
  auto t = std::make_shared<Tree>();
  t->parent.assign(G.size32(), {UINT32_MAX, UINT32_MAX});
  t->parent[0] = {0, UINT32_MAX};
  std::vector<std::uint32_t> q{0};
  std::size_t head = 0;
  while (head < q.size()) {
    std::uint32_t cur = q[head++];
    for (std::uint32_t gi = 0; gi < G.generator_indices().size(); ++gi) {
      std::uint32_t nx = G.mult(cur, G.generator_indices()[gi]);
      if (t->parent[nx].first == UINT32_MAX) {
        t->parent[nx] = {cur, gi};
        q.push_back(nx);
      }
    }
  }
  G.set_ext_cache(kSlot, t);
  return t->parent;
}

}  // namespace

const Eigen::MatrixXd& MatrixModule::evaluate(std::uint32_t elem) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = cache_.find(elem);
  if (it != cache_.end()) return it->second;
  const auto& tree = bfs_tree(*group_);
  // walk up to a cached ancestor, then multiply back down
  std::vector<std::uint32_t> path;
  std::uint32_t cur = elem;
  while (cache_.find(cur) == cache_.end()) {
    path.push_back(cur);
    cur = tree[cur].first;
  }
  Eigen::MatrixXd acc = cache_.at(cur);
  for (auto itp = path.rbegin(); itp != path.rend(); ++itp) {
    acc = acc * gen_mats_[tree[*itp].second];
    cache_.emplace(*itp, acc);
  }
  return cache_.at(elem);
}

RealModuleChar MatrixModule::character() const {
  RealModuleChar r;
  r.group = group_;
  r.by_class.resize(group_->classes().size());
  r.provenance = "tr(" + provenance_ + ")";
  for (std::size_t c = 0; c < r.by_class.size(); ++c)
    r.by_class[c] = evaluate(group_->classes()[c].rep).trace();
  return r;
}

namespace {

// right-coset partition for an arbitrary subgroup
struct CosetData {
  std::vector<std::uint32_t> coset_of;
  std::vector<std::uint32_t> rep;
};

CosetData cosets_of(const FiniteGroup& G, const SubgroupRef& H) {
  CosetData cd;
  cd.coset_of.assign(G.size32(), UINT32_MAX);
  for (std::uint32_t i = 0; i < G.size32(); ++i) {
    if (cd.coset_of[i] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(cd.rep.size());
    cd.rep.push_back(i);
    for (auto h : H.elements()) cd.coset_of[G.mult(h, i)] = c;
  }
  return cd;
}

}  // namespace

MatrixModule perm_matrix_module(const FiniteGroup& G, const SubgroupRef& H) {
  CosetData cd = cosets_of(G, H);
  const std::size_t n = cd.rep.size();
  std::vector<Eigen::MatrixXd> mats;
  for (auto g : G.generator_indices()) {
    // rho(g) maps e_j -> e_{j . g^{-1}} so that rho(a b) = rho(a) rho(b)
    std::uint32_t gi = G.inv(g);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j)
      m(cd.coset_of[G.mult(cd.rep[j], gi)], j) = 1.0;
    mats.push_back(std::move(m));
  }
  return MatrixModule(&G, std::move(mats), "perm[G/" + std::to_string(H.order()) + "]");
}

MatrixModule regular_matrix_module(const FiniteGroup& G) {
  return perm_matrix_module(G, G.trivial_subgroup());
}

MatrixModule trivial_matrix_module(const FiniteGroup& G) {
  std::vector<Eigen::MatrixXd> mats;
  for (std::size_t i = 0; i < G.generator_indices().size(); ++i)
    mats.push_back(Eigen::MatrixXd::Identity(1, 1));
  return MatrixModule(&G, std::move(mats), "trivial");
}

MatrixModule rotation_matrix_module(const FiniteGroup& G, const QuotientGroup& Q, unsigned k) {
  const FiniteGroup& Qg = *Q.quot;
  std::uint64_t n = Qg.order();
  std::uint32_t gen = 0;
  for (std::uint32_t i = 0; i < Qg.size32(); ++i)
    if (Qg.element_order(i) == n) {
      gen = i;
      break;
    }
  std::vector<unsigned> dlog(Qg.size32(), 0);
  std::uint32_t cur = 0;
  for (unsigned j = 0; j < n; ++j) {
    dlog[cur] = j;
    cur = Qg.mult(cur, gen);
  }
  const double two_pi = 6.283185307179586476925286766559;
  std::vector<Eigen::MatrixXd> mats;
  for (auto g : G.generator_indices()) {
    unsigned kk = dlog[Q.coset_to_qelem[Q.coset_of[g]]];
    if (k == 0) {
      mats.push_back(Eigen::MatrixXd::Identity(1, 1));
    } else if (2ull * k == n) {
      Eigen::MatrixXd m(1, 1);
      m(0, 0) = kk % 2 == 0 ? 1.0 : -1.0;
      mats.push_back(std::move(m));
    } else {
      double ang = two_pi * double(k) * double(kk) / double(n);
      Eigen::MatrixXd m(2, 2);
      m << std::cos(ang), -std::sin(ang), std::sin(ang), std::cos(ang);
      mats.push_back(std::move(m));
    }
  }
  return MatrixModule(&G, std::move(mats), "rot[" + std::to_string(k) + "/" + std::to_string(n) + "]");
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
  std::vector<Eigen::MatrixXd> mats;
  const std::size_t ng = a.group().generator_indices().size();
  for (std::size_t i = 0; i < ng; ++i) {
    std::uint32_t g = a.group().generator_indices()[i];
    const auto& ma = a.evaluate(g);
    const auto& mb = b.evaluate(g);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    m.topLeftCorner(ma.rows(), ma.cols()) = ma;
    m.bottomRightCorner(mb.rows(), mb.cols()) = mb;
    mats.push_back(std::move(m));
  }
  return MatrixModule(&a.group(), std::move(mats), a.provenance() + "+" + b.provenance());
}

void validate_matrix_module(const MatrixModule& M, unsigned samples) {
  const FiniteGroup& G = M.group();
  for (auto g : G.generator_indices()) {
    const auto& m = M.evaluate(g);
    double err = (m * m.transpose() - Eigen::MatrixXd::Identity(M.dim(), M.dim()))
                     .cwiseAbs()
                     .maxCoeff();
    if (err > 1e-8) throw NumericalFailure("matrix module generator is not orthogonal");
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::uint32_t> d(0, G.size32() - 1);
  for (unsigned s = 0; s < samples; ++s) {
    std::uint32_t x = d(rng), y = d(rng);
    double err =
        (M.evaluate(x) * M.evaluate(y) - M.evaluate(G.mult(x, y))).cwiseAbs().maxCoeff();
    if (err > 1e-8) throw NumericalFailure("matrix module violates the multiplication table");
  }
}

OrientationReport orientation_check(const MatrixModule& U, const MatrixModule& V) {
  const FiniteGroup& G = U.group();
  RealModuleChar cu = U.character(), cv = V.character();
  if (!chars_equal_on_prime_power(cu, cv))
    throw std::invalid_argument(
        "orientation_check requires U - V in IO (characters differ on prime-power-order elements)");
  OrientationReport rep;
  rep.pass = true;
  auto fixed_basis = [](const MatrixModule& M, const SubgroupRef& P) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(M.dim(), M.dim());
    for (auto h : P.elements()) pi += M.evaluate(h);
    pi /= static_cast<double>(P.order());
    long long r = std::llround(pi.trace());
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(pi);
    Eigen::MatrixXd Q = qr.householderQ();
    return std::make_pair(Eigen::MatrixXd(Q.leftCols(r)), r);
  };
  for (const auto& P : prime_power_subgroup_classes(G)) {
    auto [bu, ru] = fixed_basis(U, P);
    auto [bv, rv] = fixed_basis(V, P);
    SubgroupRef N = normalizer(G, P);
    for (auto g : N.generators()) {
      Eigen::MatrixXd mu = bu.transpose() * U.evaluate(g) * bu;
      Eigen::MatrixXd mv = bv.transpose() * V.evaluate(g) * bv;
      double du = ru == 0 ? 1.0 : mu.determinant();
      double dv = rv == 0 ? 1.0 : mv.determinant();
      if (std::abs(std::abs(du) - 1.0) > 1e-6 || std::abs(std::abs(dv) - 1.0) > 1e-6)
        throw NumericalFailure("restricted determinant is not close to +-1");
      OrientationItem item;
      item.p_order = P.order();
      item.p_rep = P.generators().empty() ? "1" : G.element(P.generators()[0]).to_cycle_string();
      item.n_gen = G.element(g).to_cycle_string();
      item.det_u = du;
      item.det_v = dv;
      item.ok = std::abs(du * dv - 1.0) < 1e-6;
      if (!item.ok) rep.pass = false;
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

}  // namespace ginv
