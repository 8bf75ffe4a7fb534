#pragma once

#include <cstdint>
#include <vector>

namespace ginv {

// Small finite field GF(p^k), elements encoded as 0..q-1 (base-p digit vectors
// of polynomial coefficients, low degree first). Bundled irreducible
// polynomials cover q in {2,3,4,5,7,8,9,11,13,16,17,25,27,32}:
//   GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1,
//   GF(25): x^2+3, GF(27): x^3+2x+1 (= x^3-x+1), GF(32): x^5+x^2+1.
class FiniteField {
 public:
  explicit FiniteField(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned k() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  unsigned primitive() const { return primitive_; }

  // Checks field axioms on random triples and cyclicity of the unit group.
  void spot_check(unsigned trials = 64) const;

 private:
  unsigned q_, p_, k_;
  unsigned primitive_ = 1;
  std::vector<unsigned> add_, mul_, neg_;
};

}  // namespace ginv
