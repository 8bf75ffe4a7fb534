#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ginv/exact.hpp"
#include "ginv/group.hpp"

namespace ginv {

// Complex irreducible character table. Rows are aligned with the group's
// conjugacy class order; class 0 is the identity, so chars[i][0] is the degree.
struct CharacterTable {
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<std::complex<double>>> chars;
  std::vector<long long> degrees;
  std::vector<int> fs;  // Frobenius-Schur indicator per irreducible
};

struct ChartabCaps {
  std::uint64_t order_cap = 10080;
  std::size_t class_cap = 120;
};

// Dixon's modular method; cached on the group. Throws CapExceeded when the
// group is over the caps and NumericalFailure if orthogonality breaks down.
const CharacterTable& character_table(const FiniteGroup& G, ChartabCaps caps = {});

// nu(chi) = (1/|G|) sum_g chi(g^2), via the squaring map on class
// representatives weighted by class sizes. For irreducible input the result
// rounds to -1, 0 or 1 (NumericalFailure otherwise, tolerance 1e-6).
int frobenius_schur(const FiniteGroup& G, const std::vector<std::complex<double>>& by_class);
// Raw value of the indicator sum for arbitrary (possibly reducible) input.
double frobenius_schur_value(const FiniteGroup& G,
                             const std::vector<std::complex<double>>& by_class);

// One real irreducible character per conjugate pair: nu=+1 -> chi,
// nu=0 -> chi + conj(chi), nu=-1 -> 2 chi.
struct RealIrreducible {
  std::vector<double> by_class;
  std::vector<Rational> rational_values;  // rounded; residual recorded below
  double max_residual = 0.0;
  long long dim = 0;
  int type = 1;  // +1 real, 0 complex pair, -1 quaternionic (doubled)
};
const std::vector<RealIrreducible>& real_character_basis(const FiniteGroup& G,
                                                         ChartabCaps caps = {});

// round((1/|H|) sum_{h in H} f(h)) with an integrality check (1e-6).
long long rounded_fixed_dim(const FiniteGroup& G, const std::vector<double>& by_class,
                            const SubgroupRef& H);

}  // namespace ginv
