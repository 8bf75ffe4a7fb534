#include "ginv/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  auto factors = prime_divisors_of(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw NumericalFailure("no primitive root found");
}

u64 sqrtmod(u64 a, u64 p) {  // Tonelli-Shanks; p odd prime, a a QR
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) throw NumericalFailure("sqrtmod of non-residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) == 1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = powmod(c, u64(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// dense F_p matrix helpers
struct FpMat {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;
  u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// reduced row echelon; returns pivot column per row
std::vector<std::size_t> rref(FpMat& m, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    u64 inv = invmod(m.at(rank, c), p);
    for (std::size_t j = c; j < m.cols; ++j) m.at(rank, j) = mulmod(m.at(rank, j), inv, p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      u64 f = m.at(r, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(r, j) = (m.at(r, j) + p - mulmod(f, m.at(rank, j), p)) % p;
    }
    pivots.push_back(c);
    ++rank;
  }
  m.rows = rank;
  m.a.resize(rank * m.cols);
  return pivots;
}

// kernel basis of (square) m
std::vector<std::vector<u64>> kernel(FpMat m, u64 p) {
  std::size_t n = m.cols;
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - m.at(r, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// det(M - x I) coefficients by Lagrange interpolation on d+1 points
std::vector<u64> charpoly(const FpMat& M, u64 p) {
  std::size_t d = M.rows;
  std::vector<u64> xs(d + 1), ys(d + 1);
  for (std::size_t t = 0; t <= d; ++t) {
    xs[t] = t % p;
    FpMat A = M;
    for (std::size_t i = 0; i < d; ++i) A.at(i, i) = (A.at(i, i) + p - xs[t]) % p;
    // determinant by elimination
    u64 det = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (piv < d && A.at(piv, c) == 0) ++piv;
      if (piv == d) {
        det = 0;
        break;
      }
      if (piv != c) {
        for (std::size_t j = 0; j < d; ++j) std::swap(A.at(c, j), A.at(piv, j));
        det = p - det;
      }
      det = mulmod(det, A.at(c, c), p);
      u64 inv = invmod(A.at(c, c), p);
      for (std::size_t r = c + 1; r < d; ++r) {
        if (A.at(r, c) == 0) continue;
        u64 f = mulmod(A.at(r, c), inv, p);
        for (std::size_t j = c; j < d; ++j)
          A.at(r, j) = (A.at(r, j) + p - mulmod(f, A.at(c, j), p)) % p;
      }
    }
    ys[t] = det % p;
  }
  // Lagrange interpolation to coefficients
  std::vector<u64> coeff(d + 1, 0);
  for (std::size_t t = 0; t <= d; ++t) {
    // basis polynomial prod_{s!=t} (x - xs[s]) / (xs[t]-xs[s])
    std::vector<u64> poly{1};
    u64 denom = 1;
    for (std::size_t s = 0; s <= d; ++s) {
      if (s == t) continue;
      std::vector<u64> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = (next[i + 1] + poly[i]) % p;
        next[i] = (next[i] + mulmod(poly[i], (p - xs[s]) % p, p)) % p;
      }
      poly = std::move(next);
      denom = mulmod(denom, (xs[t] + p - xs[s]) % p, p);
    }
    u64 f = mulmod(ys[t], invmod(denom, p), p);
    for (std::size_t i = 0; i < poly.size(); ++i)
      coeff[i] = (coeff[i] + mulmod(f, poly[i], p)) % p;
  }
  return coeff;
}

u64 polyeval(const std::vector<u64>& c, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = (mulmod(r, x, p) + *it) % p;
  return r;
}

struct TableCache {
  CharacterTable table;
  std::vector<RealIrreducible> real_basis;
  bool real_ready = false;
};
constexpr int kChartabSlot = 1;

void build_table(const FiniteGroup& G, CharacterTable& tab) {
  const std::size_t r = G.classes().size();
  const u64 n = G.order();
  const u64 e = G.exponent();
  double maxdeg = std::sqrt(static_cast<double>(n));
  u64 p = e + 1;
  while (!(is_prime(p) && p > 2 * static_cast<u64>(maxdeg) + 1)) p += e;

  // class data
  std::vector<u64> csize(r);
  std::vector<std::size_t> cinv(r);
  for (std::size_t c = 0; c < r; ++c) {
    csize[c] = G.classes()[c].members.size();
    cinv[c] = G.inverse_class(static_cast<std::uint32_t>(c));
  }

  // simultaneous eigenvectors of the class-multiplication matrices
  std::vector<std::vector<std::vector<u64>>> spaces;  // each: list of basis vectors
  {
    std::vector<std::vector<u64>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool alldone = true;
    for (const auto& W : spaces)
      if (W.size() > 1) alldone = false;
    if (alldone) break;
    // M_i: (j,k) entry = #{x in C_i : x^{ -1} z_k in C_j} = a_{ijk}
    FpMat M;
    M.rows = M.cols = r;
    M.a.assign(r * r, 0);
    for (auto x : G.classes()[i].members) {
      std::uint32_t xi = G.inv(x);
      for (std::size_t k = 0; k < r; ++k) {
        std::uint32_t y = G.mult(xi, G.classes()[k].rep);
        M.at(G.class_of(y), k) = (M.at(G.class_of(y), k) + 1) % p;
      }
    }
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& W : spaces) {
      std::size_t d = W.size();
      if (d == 1) {
        next.push_back(std::move(W));
        continue;
      }
      // echelonize the basis so coordinates can be read off the pivots
      FpMat Bred;
      Bred.rows = d;
      Bred.cols = r;
      Bred.a.resize(d * r);
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t j = 0; j < r; ++j) Bred.at(t, j) = W[t][j];
      auto pivots = rref(Bred, p);
      if (Bred.rows != d) throw NumericalFailure("subspace basis degenerated");
      std::vector<std::vector<u64>> Wb;
      for (std::size_t s = 0; s < d; ++s) {
        std::vector<u64> v(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = Bred.at(s, j);
        Wb.push_back(std::move(v));
      }
      // restriction C2: M w_t = sum_s C2(s,t) w_s
      FpMat C2;
      C2.rows = C2.cols = d;
      C2.a.assign(d * d, 0);
      for (std::size_t t = 0; t < d; ++t) {
        std::vector<u64> img(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          if (Wb[t][j] == 0) continue;
          for (std::size_t jj = 0; jj < r; ++jj)
            img[jj] = (img[jj] + mulmod(Wb[t][j], M.at(jj, j), p)) % p;
        }
        std::vector<u64> coords(d, 0);
        for (std::size_t s = 0; s < pivots.size(); ++s) {
          u64 f = img[pivots[s]];
          coords[s] = f;
          if (f)
            for (std::size_t j = 0; j < r; ++j)
              img[j] = (img[j] + p - mulmod(f, Bred.at(s, j), p)) % p;
        }
        if (!std::all_of(img.begin(), img.end(), [](u64 v) { return v == 0; }))
          throw NumericalFailure("class matrix does not preserve subspace");
        for (std::size_t s = 0; s < d; ++s) C2.at(s, t) = coords[s];
      }
      auto cp = charpoly(C2, p);
      std::vector<std::vector<std::vector<u64>>> pieces;
      for (u64 lam = 0; lam < p; ++lam) {
        if (polyeval(cp, lam, p) != 0) continue;
        FpMat A = C2;
        for (std::size_t ii = 0; ii < d; ++ii) A.at(ii, ii) = (A.at(ii, ii) + p - lam) % p;
        auto ker = kernel(A, p);
        if (ker.empty()) continue;
        std::vector<std::vector<u64>> sub;
        for (auto& kv : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (kv[s])
              for (std::size_t j = 0; j < r; ++j)
                v[j] = (v[j] + mulmod(kv[s], Wb[s][j], p)) % p;
          sub.push_back(std::move(v));
        }
        pieces.push_back(std::move(sub));
      }
      std::size_t tot = 0;
      for (const auto& s : pieces) tot += s.size();
      if (tot != d) throw NumericalFailure("eigenspace split lost dimensions");
      for (auto& s : pieces) next.push_back(std::move(s));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw NumericalFailure("character split incomplete");

  // normalize omega vectors and recover degrees
  u64 theta = powmod(primitive_root(p), (p - 1) / e, p);
  std::vector<std::vector<u64>> chi_mod(r, std::vector<u64>(r, 0));
  std::vector<long long> degrees(r);
  for (std::size_t idx = 0; idx < r; ++idx) {
    std::vector<u64> v = spaces[idx][0];
    if (v[0] == 0) throw NumericalFailure("omega vector vanishes at the identity class");
    u64 scale = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, scale, p);
    u64 s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s = (s + mulmod(mulmod(v[j], v[cinv[j]], p), invmod(csize[j] % p, p), p)) % p;
    u64 d2 = mulmod(n % p, invmod(s, p), p);
    u64 d = sqrtmod(d2, p);
    if (d > p / 2) d = p - d;
    degrees[idx] = static_cast<long long>(d);
    for (std::size_t j = 0; j < r; ++j)
      chi_mod[idx][j] = mulmod(mulmod(v[j], d % p, p), invmod(csize[j] % p, p), p);
  }
  long long sum_sq = 0;
  for (auto d : degrees) sum_sq += d * d;
  if (sum_sq != static_cast<long long>(n))
    throw NumericalFailure("degree recovery failed: sum of squares != |G|");

  // lift to complex values via root-of-unity multiplicities
  const double two_pi = 6.283185307179586476925286766559;
  tab.chars.assign(r, std::vector<std::complex<double>>(r));
  for (std::size_t idx = 0; idx < r; ++idx) {
    for (std::size_t j = 0; j < r; ++j) {
      u64 m = G.classes()[j].element_order;
      u64 theta_m = powmod(theta, e / m, p);
      std::complex<double> val = 0.0;
      u64 minv = invmod(m % p, p);
      long long check = 0;
      for (u64 k = 0; k < m; ++k) {
        u64 acc = 0;
        for (u64 l = 0; l < m; ++l) {
          std::size_t pc = G.power_class(static_cast<std::uint32_t>(j), l);
          u64 t = powmod(theta_m, (m - k) * l % m, p);
          acc = (acc + mulmod(chi_mod[idx][pc], t, p)) % p;
        }
        u64 nk = mulmod(acc, minv, p);
        if (nk > static_cast<u64>(degrees[idx]))
          throw NumericalFailure("eigenvalue multiplicity out of range");
        check += static_cast<long long>(nk);
        val += static_cast<double>(nk) *
               std::complex<double>(std::cos(two_pi * double(k) / double(m)),
                                    std::sin(two_pi * double(k) / double(m)));
      }
      if (check != degrees[idx])
        throw NumericalFailure("eigenvalue multiplicities do not sum to the degree");
      tab.chars[idx][j] = val;
    }
  }
  tab.degrees = degrees;

  // row orthogonality within 1e-8
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      std::complex<double> ip = 0.0;
      for (std::size_t j = 0; j < r; ++j)
        ip += static_cast<double>(csize[j]) * tab.chars[a][j] * std::conj(tab.chars[b][j]);
      ip /= static_cast<double>(n);
      double expect = (a == b) ? 1.0 : 0.0;
      if (std::abs(ip - expect) > 1e-8)
        throw NumericalFailure("character row orthogonality violated");
    }

  // deterministic order: by degree, then lexicographic on (Re, Im) values
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (std::size_t j = 0; j < r; ++j) {
      double ra = tab.chars[a][j].real(), rb = tab.chars[b][j].real();
      if (std::abs(ra - rb) > 1e-9) return ra < rb;
      double ia = tab.chars[a][j].imag(), ib = tab.chars[b][j].imag();
      if (std::abs(ia - ib) > 1e-9) return ia < ib;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.group = tab.group;
  for (auto i : perm) {
    sorted.chars.push_back(std::move(tab.chars[i]));
    sorted.degrees.push_back(tab.degrees[i]);
  }
  tab.chars = std::move(sorted.chars);
  tab.degrees = std::move(sorted.degrees);

  tab.fs.clear();
  for (std::size_t idx = 0; idx < r; ++idx)
    tab.fs.push_back(frobenius_schur(G, tab.chars[idx]));
}

}  // namespace

double frobenius_schur_value(const FiniteGroup& G,
                             const std::vector<std::complex<double>>& by_class) {
  double s = 0;
  for (std::size_t j = 0; j < G.classes().size(); ++j) {
    std::size_t sq = G.power_class(static_cast<std::uint32_t>(j), 2);
    s += static_cast<double>(G.classes()[j].members.size()) * by_class[sq].real();
    // imaginary parts cancel over full classes; track anyway
  }
  return s / static_cast<double>(G.order());
}

int frobenius_schur(const FiniteGroup& G, const std::vector<std::complex<double>>& by_class) {
  double v = frobenius_schur_value(G, by_class);
  long long r = std::llround(v);
  if (std::abs(v - static_cast<double>(r)) > 1e-6 || r < -1 || r > 1)
    throw NumericalFailure("Frobenius-Schur indicator did not round to -1/0/1");
  return static_cast<int>(r);
}

const CharacterTable& character_table(const FiniteGroup& G, ChartabCaps caps) {
  G.require_enumerated("character_table");
  if (auto c = std::static_pointer_cast<TableCache>(G.ext_cache(kChartabSlot)))
    return c->table;
  if (G.order() > caps.order_cap)
    throw CapExceeded("character table order cap exceeded for " + G.name());
  if (G.classes().size() > caps.class_cap)
    throw CapExceeded("character table class cap exceeded for " + G.name());
  auto cache = std::make_shared<TableCache>();
  cache->table.group = &G;
  build_table(G, cache->table);
  G.set_ext_cache(kChartabSlot, cache);
  return cache->table;
}

const std::vector<RealIrreducible>& real_character_basis(const FiniteGroup& G,
                                                         ChartabCaps caps) {
  character_table(G, caps);
  auto cache = std::static_pointer_cast<TableCache>(G.ext_cache(kChartabSlot));
  if (cache->real_ready) return cache->real_basis;
  const auto& tab = cache->table;
  const std::size_t r = tab.chars.size();
  std::vector<bool> used(r, false);
  auto rationalize = [](double x, double& residual) {
    double rd = std::round(x);
    if (std::abs(x - rd) < 1e-8) {
      residual = std::max(residual, std::abs(x - rd));
      return Rational(static_cast<long long>(rd));
    }
    // continued fraction with denominator bound 10^6
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
      long long a = static_cast<long long>(std::floor(v));
      long long p2 = a * p1 + p0, q2 = a * q1 + q0;
      if (q2 > 1000000) break;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      double frac = v - static_cast<double>(a);
      if (frac < 1e-12) break;
      v = 1.0 / frac;
    }
    residual = std::max(residual, std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)));
    return Rational(p1, q1);
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (used[i]) continue;
    used[i] = true;
    RealIrreducible ri;
    if (tab.fs[i] == 1) {
      ri.type = 1;
      ri.dim = tab.degrees[i];
      ri.by_class.resize(r);
      for (std::size_t j = 0; j < r; ++j) ri.by_class[j] = tab.chars[i][j].real();
    } else if (tab.fs[i] == -1) {
      ri.type = -1;
      ri.dim = 2 * tab.degrees[i];
      ri.by_class.resize(r);
      for (std::size_t j = 0; j < r; ++j) ri.by_class[j] = 2.0 * tab.chars[i][j].real();
    } else {
      // find the conjugate partner: values composed with the inverse class map
      std::size_t partner = r;
      for (std::size_t k = 0; k < r; ++k) {
        if (used[k] || k == i) continue;
        bool match = true;
        for (std::size_t j = 0; j < r; ++j)
          if (std::abs(tab.chars[k][j] - std::conj(tab.chars[i][j])) > 1e-8) {
            match = false;
            break;
          }
        if (match) {
          partner = k;
          break;
        }
      }
      if (partner == r) throw NumericalFailure("conjugate character pair not found");
      used[partner] = true;
      ri.type = 0;
      ri.dim = 2 * tab.degrees[i];
      ri.by_class.resize(r);
      for (std::size_t j = 0; j < r; ++j)
        ri.by_class[j] = (tab.chars[i][j] + tab.chars[partner][j]).real();
    }
    // reality check
    for (std::size_t j = 0; j < r; ++j) {
      std::complex<double> v = tab.chars[i][j];
      if (ri.type == 1 && std::abs(v.imag()) > 1e-8)
        throw NumericalFailure("real-type character has nonreal value");
    }
    for (double v : ri.by_class) {
      ri.rational_values.push_back(rationalize(v, ri.max_residual));
    }
    cache->real_basis.push_back(std::move(ri));
  }
  cache->real_ready = true;
  return cache->real_basis;
}

long long rounded_fixed_dim(const FiniteGroup& G, const std::vector<double>& by_class,
                            const SubgroupRef& H) {
  double s = 0;
  for (auto h : H.elements()) s += by_class[G.class_of(h)];
  s /= static_cast<double>(H.order());
  long long r = std::llround(s);
  if (std::abs(s - static_cast<double>(r)) > 1e-6)
    throw NumericalFailure("fixed-space dimension is not integral");
  return r;
}

}  // namespace ginv
