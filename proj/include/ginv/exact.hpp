#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ginv {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Rank over Q by fraction-free Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

// Rank over Q for sparse rows (column index -> value), eliminating
// fewest-entries rows first.
std::size_t sparse_rational_rank(std::vector<std::vector<std::pair<std::size_t, Rational>>> rows);

// Feasibility of { A x >= b, x >= 0 } over the rationals (phase-1 simplex
// with Bland's rule; exact arithmetic, no tolerances).
bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b);

}  // namespace ginv
