#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ginv/group.hpp"
#include "ginv/pairs.hpp"

namespace ginv {

// A real G-module at character level: one real value per conjugacy class.
struct RealModuleChar {
  const FiniteGroup* group = nullptr;
  std::vector<double> by_class;
  std::string provenance;

  double dim() const { return by_class[0]; }  // class 0 is the identity class
  double at_element(std::uint32_t i) const { return by_class[group->class_of(i)]; }
};

// Formal difference plus - minus of real module characters.
struct VirtualCharacter {
  RealModuleChar plus;
  RealModuleChar minus;
};

long long dim_fixed(const RealModuleChar& V, const SubgroupRef& H);
bool is_l_free(const RealModuleChar& V);

enum class MembershipKind { IO, IO_GG, IO_GH, LO };
bool membership(const VirtualCharacter& d, MembershipKind kind, const SubgroupRef* H = nullptr);

RealModuleChar trivial_character(const FiniteGroup& G);
RealModuleChar regular_character(const FiniteGroup& G);
// chi(g) = number of right cosets of H fixed by g.
RealModuleChar permutation_character(const FiniteGroup& G, const SubgroupRef& H);

// V(G) = (R[G] - R) - sum_p (R[G]^{O^p(G)} - R)
VirtualCharacter v_g_character(const FiniteGroup& G);
// dim V(G)^K by exact coset-orbit counting (no floating point).
long long vg_dim_fixed(const FiniteGroup& G, const SubgroupRef& K);
long long vg_gap_defect(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& H);

// d_V(P, H) = dim V^P - 2 dim V^H for a proper pair. Throws BadPair.
long long gap_defect(const VirtualCharacter& V, const SubgroupRef& P, const SubgroupRef& H);
// L-free and positive defect over the reduced pair set.
bool is_gap_module(const VirtualCharacter& V);

// The two realified characters of the order-pq construction.
struct A2Pair {
  unsigned p = 0, q = 0;
  unsigned a = 0, b = 0;  // CRT exponents in (0, n), n = pq
  RealModuleChar rU, rV;
};
// Requires G/H cyclic of order pq with p != q odd primes; throws BadQuotient.
A2Pair construct_a2(const FiniteGroup& G, const SubgroupRef& H);
// Normal subgroups H with G/H cyclic of order pq (p != q odd primes).
std::vector<SubgroupRef> pq_cyclic_kernels(const FiniteGroup& G);

// ---- explicit orthogonal matrix modules ----

// One orthogonal matrix per group generator; rho(a*b) = rho(a) rho(b) under
// the left-to-right composition used by Permutation.
class MatrixModule {
 public:
  MatrixModule(const FiniteGroup* G, std::vector<Eigen::MatrixXd> gen_mats,
               std::string provenance);
  MatrixModule(const MatrixModule& o);
  MatrixModule& operator=(const MatrixModule& o);

  const FiniteGroup& group() const { return *group_; }
  unsigned dim() const { return dim_; }
  const std::string& provenance() const { return provenance_; }
  const Eigen::MatrixXd& evaluate(std::uint32_t elem) const;
  RealModuleChar character() const;

 private:
  const FiniteGroup* group_;
  unsigned dim_;
  std::vector<Eigen::MatrixXd> gen_mats_;
  std::string provenance_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint32_t, Eigen::MatrixXd> cache_;
};

MatrixModule perm_matrix_module(const FiniteGroup& G, const SubgroupRef& H);
MatrixModule regular_matrix_module(const FiniteGroup& G);
MatrixModule trivial_matrix_module(const FiniteGroup& G);
// Realified linear character of a cyclic quotient: 2x2 rotation blocks
// (1x1 for k = 0 or k = n/2).
MatrixModule rotation_matrix_module(const FiniteGroup& G, const QuotientGroup& Q, unsigned k);
MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);

// Orthogonality (1e-8), homomorphism property on sampled products, and
// trace/character agreement (1e-6). Throws NumericalFailure.
void validate_matrix_module(const MatrixModule& M, unsigned samples = 200);

struct OrientationItem {
  std::uint64_t p_order;
  std::string p_rep;      // cycle form of a generator of P (or "1")
  std::string n_gen;      // the normalizer generator tested
  double det_u, det_v;
  bool ok;
};
struct OrientationReport {
  bool pass = false;
  std::vector<OrientationItem> items;
};

// For every prime-power subgroup class P and every generator g of N_G(P):
// det(g | U^P) * det(g | V^P) must be +1 (within 1e-6). Requires the trace
// characters to agree on prime-power-order elements.
OrientationReport orientation_check(const MatrixModule& U, const MatrixModule& V);

}  // namespace ginv
