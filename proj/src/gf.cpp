#include "ginv/gf.hpp"

#include <random>
#include <stdexcept>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

struct FieldDef {
  unsigned q, p, k;
  // monic irreducible x^k + c_{k-1} x^{k-1} + ... + c_0; coefficients low-first
  std::vector<unsigned> poly;
};

const FieldDef* find_def(unsigned q) {
  static const std::vector<FieldDef> defs = {
      {2, 2, 1, {}},        {3, 3, 1, {}},         {5, 5, 1, {}},
      {7, 7, 1, {}},        {11, 11, 1, {}},       {13, 13, 1, {}},
      {17, 17, 1, {}},      {4, 2, 2, {1, 1}},     {8, 2, 3, {1, 1, 0}},
      {9, 3, 2, {1, 0}},    {16, 2, 4, {1, 1, 0, 0}},
      {25, 5, 2, {3, 0}},   {27, 3, 3, {1, 2, 0}}, {32, 2, 5, {1, 0, 1, 0, 0}},
  };
  for (const auto& d : defs)
    if (d.q == q) return &d;
  return nullptr;
}

std::vector<unsigned> decode(unsigned a, unsigned p, unsigned k) {
  std::vector<unsigned> c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

unsigned encode(const std::vector<unsigned>& c, unsigned p) {
  unsigned v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

FiniteField::FiniteField(unsigned q) {
  const FieldDef* def = find_def(q);
  if (!def) throw UnknownName("no bundled field GF(" + std::to_string(q) + ")");
  q_ = q;
  p_ = def->p;
  k_ = def->k;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    auto ca = decode(a, p_, k_);
    std::vector<unsigned> nc(k_);
    for (unsigned i = 0; i < k_; ++i) nc[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(nc, p_);
    for (unsigned b = 0; b < q; ++b) {
      auto cb = decode(b, p_, k_);
      std::vector<unsigned> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = encode(s, p_);
      std::vector<unsigned> prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int d = static_cast<int>(2 * k_ - 2); d >= static_cast<int>(k_); --d) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k_; ++i)
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - def->poly[i] % p_) * c) % p_;
      }
      prod.resize(k_);
      mul_[a * q + b] = encode(prod, p_);
    }
  }
  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g, count = 1;
    while (x != 1) {
      x = mul(x, g);
      ++count;
    }
    if (count == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

unsigned FiniteField::pow(unsigned a, unsigned long long e) const {
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void FiniteField::spot_check(unsigned trials) const {
  std::mt19937 rng(q_ * 2654435761u);
  std::uniform_int_distribution<unsigned> d(0, q_ - 1);
  for (unsigned t = 0; t < trials; ++t) {
    unsigned a = d(rng), b = d(rng), c = d(rng);
    if (mul(a, mul(b, c)) != mul(mul(a, b), c))
      throw NumericalFailure("GF associativity failed");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      throw NumericalFailure("GF distributivity failed");
  }
  unsigned x = primitive_, count = 1;
  while (x != 1) {
    x = mul(x, primitive_);
    ++count;
  }
  if (count != q_ - 1) throw NumericalFailure("GF unit group not cyclic of order q-1");
}

}  // namespace ginv
