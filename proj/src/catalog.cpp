#include "ginv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ginv/errors.hpp"
#include "ginv/gf.hpp"

namespace ginv {

namespace {

using Mat = std::vector<std::vector<unsigned>>;  // over a FiniteField

std::vector<unsigned> matvec(const FiniteField& F, const Mat& A, const std::vector<unsigned>& v) {
  std::vector<unsigned> out(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = F.add(out[i], F.mul(A[i][j], v[j]));
  return out;
}

Mat matmul(const FiniteField& F, const Mat& A, const Mat& B) {
  std::size_t n = A.size();
  Mat C(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!A[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
    }
  return C;
}

Mat matinv(const FiniteField& F, Mat A) {
  std::size_t n = A.size();
  Mat I(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !A[piv][c]) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(A[c], A[piv]);
    std::swap(I[c], I[piv]);
    unsigned inv = F.inv(A[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] = F.mul(A[c][j], inv);
      I[c][j] = F.mul(I[c][j], inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || !A[r][c]) continue;
      unsigned f = A[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] = F.sub(A[r][j], F.mul(f, A[c][j]));
        I[r][j] = F.sub(I[r][j], F.mul(f, I[c][j]));
      }
    }
  }
  return I;
}

// normalized projective points (first nonzero coordinate = 1), lex sorted
std::vector<std::vector<unsigned>> proj_points(const FiniteField& F, unsigned n) {
  std::vector<std::vector<unsigned>> pts;
  std::vector<unsigned> v(n, 0);
  while (true) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](unsigned x) { return x != 0; });
    if (nonzero) {
      std::size_t lead = 0;
      while (!v[lead]) ++lead;
      if (v[lead] == 1) pts.push_back(v);
    }
    std::size_t i = n;
    while (i > 0 && v[i - 1] == F.q() - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<unsigned> normalize(const FiniteField& F, std::vector<unsigned> v) {
  std::size_t lead = 0;
  while (lead < v.size() && !v[lead]) ++lead;
  unsigned c = F.inv(v[lead]);
  for (auto& x : v) x = F.mul(c, x);
  return v;
}

struct ProjAction {
  FiniteField F;
  std::vector<std::vector<unsigned>> pts;
  std::map<std::vector<unsigned>, Point> index;

  ProjAction(unsigned q, unsigned n) : F(q), pts(proj_points(F, n)) {
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<Point>(i);
  }
  Permutation perm_of(const Mat& A) const {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      img[i] = index.at(normalize(F, matvec(F, A, pts[i])));
    return Permutation(std::move(img));
  }
  Permutation frobenius() const {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<unsigned> v = pts[i];
      for (auto& x : v) x = F.frobenius(x);
      img[i] = index.at(normalize(F, v));
    }
    return Permutation(std::move(img));
  }
};

std::vector<Mat> sl_generators(const FiniteField& F, unsigned n) {
  std::vector<Mat> gens;
  unsigned w = F.primitive();
  for (unsigned i = 0; i < F.k(); ++i) {
    Mat t(n, std::vector<unsigned>(n, 0));
    for (unsigned d = 0; d < n; ++d) t[d][d] = 1;
    t[0][1] = i == 0 ? 1 : F.pow(w, i);
    gens.push_back(t);
  }
  Mat c(n, std::vector<unsigned>(n, 0));
  if (n == 2) {
    c[0][1] = F.neg(1);
    c[1][0] = 1;
  } else {
    for (unsigned d = 0; d + 1 < n; ++d) c[d + 1][d] = 1;
    c[0][n - 1] = 1;
  }
  gens.push_back(c);
  return gens;
}

std::vector<Permutation> psl_gens(unsigned q, unsigned n) {
  ProjAction act(q, n);
  std::vector<Permutation> out;
  for (const auto& m : sl_generators(act.F, n)) out.push_back(act.perm_of(m));
  return out;
}

Permutation pgl_extra(unsigned q) {
  ProjAction act(q, 2);
  Mat d{{act.F.primitive(), 0}, {0, 1}};
  return act.perm_of(d);
}

std::vector<Permutation> sl2_vector_gens(unsigned q) {
  FiniteField F(q);
  std::vector<std::vector<unsigned>> vecs;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      if (a || b) vecs.push_back({a, b});
  std::map<std::vector<unsigned>, Point> index;
  for (std::size_t i = 0; i < vecs.size(); ++i) index[vecs[i]] = static_cast<Point>(i);
  std::vector<Permutation> out;
  for (const auto& m : sl_generators(F, 2)) {
    std::vector<Point> img(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) img[i] = index.at(matvec(F, m, vecs[i]));
    out.push_back(Permutation(std::move(img)));
  }
  return out;
}

// translations + linear maps acting on the p^k vectors of F_p^k
std::vector<Permutation> affine_gens(unsigned p, unsigned k, const std::vector<Mat>& mats,
                                     unsigned extra_points = 0,
                                     const std::vector<Permutation>* carrier = nullptr) {
  FiniteField F(p);
  unsigned npts = 1;
  for (unsigned i = 0; i < k; ++i) npts *= p;
  auto decode = [&](unsigned v) {
    std::vector<unsigned> c(k);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    unsigned v = 0;
    for (unsigned i = k; i-- > 0;) v = v * p + c[i];
    return v;
  };
  std::vector<Permutation> out;
  unsigned total = npts + extra_points;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Point> img(total);
    for (unsigned v = 0; v < npts; ++v) {
      auto c = decode(v);
      c[i] = (c[i] + 1) % p;
      img[v] = static_cast<Point>(encode(c));
    }
    for (unsigned e = 0; e < extra_points; ++e) img[npts + e] = static_cast<Point>(npts + e);
    out.push_back(Permutation(std::move(img)));
  }
  for (std::size_t mi = 0; mi < mats.size(); ++mi) {
    std::vector<Point> img(total);
    for (unsigned v = 0; v < npts; ++v)
      img[v] = static_cast<Point>(encode(matvec(F, mats[mi], decode(v))));
    for (unsigned e = 0; e < extra_points; ++e) {
      Point t = carrier ? (*carrier)[mi](static_cast<Point>(e)) : static_cast<Point>(e);
      img[npts + e] = static_cast<Point>(npts + t);
    }
    out.push_back(Permutation(std::move(img)));
  }
  return out;
}

std::vector<Permutation> direct_product(const std::vector<Permutation>& a,
                                        const std::vector<Permutation>& b) {
  unsigned da = a.empty() ? 0 : a[0].degree();
  unsigned db = b.empty() ? 0 : b[0].degree();
  std::vector<Permutation> out;
  for (const auto& g : a) {
    std::vector<Point> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (unsigned i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    out.push_back(Permutation(std::move(img)));
  }
  for (const auto& g : b) {
    std::vector<Point> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (unsigned i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    out.push_back(Permutation(std::move(img)));
  }
  return out;
}

std::vector<Permutation> sym_gens(unsigned n) {
  if (n <= 1) return {Permutation::identity(std::max(n, 1u))};
  std::vector<Point> t(n), c(n);
  std::iota(t.begin(), t.end(), Point{0});
  std::swap(t[0], t[1]);
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return {Permutation(t), Permutation(c)};
}

std::vector<Permutation> alt_gens(unsigned n) {
  if (n <= 2) return {Permutation::identity(std::max(n, 1u))};
  std::vector<Point> three(n);
  std::iota(three.begin(), three.end(), Point{0});
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return {Permutation(three)};
  std::vector<Point> c(n);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  } else {
    c[0] = 0;
    for (unsigned i = 1; i < n; ++i) c[i] = static_cast<Point>(i % (n - 1) + 1);
  }
  return {Permutation(three), Permutation(c)};
}

std::vector<Permutation> cyc_gens(unsigned n) {
  std::vector<Point> c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return {Permutation(c)};
}

std::vector<Permutation> dih_gens(unsigned n) {
  std::vector<Point> c(n), s(n);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = static_cast<Point>((i + 1) % n);
    s[i] = static_cast<Point>((n - i) % n);
  }
  return {Permutation(c), Permutation(s)};
}

std::vector<Permutation> elemab_gens(unsigned p, unsigned k) {
  std::vector<Permutation> out;
  std::vector<Permutation> acc = cyc_gens(p);
  out = acc;
  for (unsigned i = 1; i < k; ++i) out = direct_product(out, cyc_gens(p));
  return out;
}

// Suzuki group Sz(q), q = 2^(2m+1), acting on the ovoid {inf} u F_q^2.
std::vector<Permutation> suzuki_gens(unsigned q) {
  FiniteField F(q);
  unsigned m = 0;
  {
    unsigned e = 0, t = q;
    while (t > 1) {
      t /= 2;
      ++e;
    }
    if (e % 2 == 0) throw UnknownName("Sz(q) needs q = 2^(2m+1)");
    m = (e - 1) / 2;
  }
  const unsigned long long theta_e = 1ull << (m + 1);
  auto theta = [&](unsigned x) { return F.pow(x, theta_e); };
  std::vector<std::pair<int, int>> pts;  // (-1,-1) = infinity
  pts.push_back({-1, -1});
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) pts.push_back({static_cast<int>(a), static_cast<int>(b)});
  auto index = [&](int a, int b) {
    if (a < 0) return static_cast<Point>(0);
    return static_cast<Point>(1 + static_cast<unsigned>(a) * q + static_cast<unsigned>(b));
  };
  auto T = [&](unsigned a, unsigned b) {
    std::vector<Point> img(pts.size());
    img[0] = 0;
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y) {
        unsigned nx = F.add(x, a);
        unsigned ny = F.add(F.add(y, b), F.mul(x, theta(a)));
        img[index(static_cast<int>(x), static_cast<int>(y))] = index(static_cast<int>(nx), static_cast<int>(ny));
      }
    return Permutation(std::move(img));
  };
  auto M = [&](unsigned kpp) {
    std::vector<Point> img(pts.size());
    img[0] = 0;
    unsigned kk = F.mul(theta(kpp), kpp);
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y)
        img[index(static_cast<int>(x), static_cast<int>(y))] =
            index(static_cast<int>(F.mul(kpp, x)), static_cast<int>(F.mul(kk, y)));
    return Permutation(std::move(img));
  };
  auto sigma = [&]() {
    std::vector<Point> img(pts.size());
    img[0] = index(0, 0);
    img[index(0, 0)] = 0;
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        unsigned f = F.add(F.add(F.mul(theta(x), F.mul(x, x)), F.mul(x, y)), theta(y));
        unsigned fi = F.inv(f);
        img[index(static_cast<int>(x), static_cast<int>(y))] =
            index(static_cast<int>(F.mul(y, fi)), static_cast<int>(F.mul(x, fi)));
      }
    return Permutation(std::move(img));
  };
  return {T(1, 0), T(0, 1), M(F.primitive()), sigma()};
}

// PSL(3,4) extended by the graph-field involution, acting on points + lines.
std::vector<Permutation> psl34_graph_field_gens() {
  ProjAction act(4, 3);
  const auto& F = act.F;
  const std::size_t n = act.pts.size();  // 21
  auto line_index = [&](const std::vector<unsigned>& l) {
    return static_cast<Point>(n + act.index.at(normalize(F, l)));
  };
  std::vector<Permutation> out;
  for (const auto& A : sl_generators(F, 3)) {
    Mat Ai = matinv(F, A);
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = act.index.at(normalize(F, matvec(F, A, act.pts[i])));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& l = act.pts[i];
      std::vector<unsigned> nl(3, 0);
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned r = 0; r < 3; ++r) nl[c] = F.add(nl[c], F.mul(l[r], Ai[r][c]));
      img[n + i] = line_index(nl);
    }
    out.push_back(Permutation(std::move(img)));
  }
  std::vector<Point> img(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> sq = act.pts[i];
    for (auto& x : sq) x = F.mul(x, x);
    img[i] = line_index(sq);
    img[n + i] = act.index.at(normalize(F, sq));
  }
  out.push_back(Permutation(std::move(img)));
  return out;
}

// SL(2,3) <= GL(2,5) found as the normalizer of a quaternion subgroup.
std::vector<Mat> sl23_in_gl25() {
  FiniteField F(5);
  Mat I{{1, 0}, {0, 1}};
  Mat negI{{4, 0}, {0, 4}};
  std::vector<Mat> sl;
  // enumerate SL(2,5)
  {
    std::vector<Mat> gens = sl_generators(F, 2);
    std::vector<Mat> todo{I};
    std::map<Mat, bool> seen;
    seen[I] = true;
    while (!todo.empty()) {
      Mat cur = todo.back();
      todo.pop_back();
      sl.push_back(cur);
      for (const auto& g : gens) {
        Mat nx = matmul(F, cur, g);
        if (!seen.count(nx)) {
          seen[nx] = true;
          todo.push_back(nx);
        }
      }
    }
  }
  auto mat_order = [&](Mat A) {
    unsigned o = 1;
    Mat cur = A;
    while (cur != I) {
      cur = matmul(F, cur, A);
      ++o;
    }
    return o;
  };
  // find a quaternion subgroup <i, j>
  Mat i_mat{{0, 4}, {1, 0}};
  std::vector<Mat> q8;
  for (const auto& A : sl) {
    if (mat_order(A) != 4 || matmul(F, A, A) != negI) continue;
    if (A == i_mat || A == matmul(F, matmul(F, i_mat, i_mat), i_mat)) continue;
    std::vector<Mat> cl{I};
    std::vector<Mat> st{I};
    while (!st.empty()) {
      Mat cur = st.back();
      st.pop_back();
      for (const Mat& g : {i_mat, A}) {
        Mat nx = matmul(F, cur, g);
        if (std::find(cl.begin(), cl.end(), nx) == cl.end()) {
          cl.push_back(nx);
          st.push_back(nx);
        }
      }
    }
    if (cl.size() == 8) {
      q8 = cl;
      break;
    }
  }
  if (q8.empty()) throw NumericalFailure("no quaternion subgroup in SL(2,5)");
  std::vector<Mat> norm;
  for (const auto& A : sl) {
    Mat Ai = matinv(F, A);
    bool ok = true;
    for (const auto& B : q8)
      if (std::find(q8.begin(), q8.end(), matmul(F, matmul(F, A, B), Ai)) == q8.end()) {
        ok = false;
        break;
      }
    if (ok) norm.push_back(A);
  }
  if (norm.size() != 24) throw NumericalFailure("N_SL(2,5)(Q8) is not SL(2,3)");
  // small generating set
  std::vector<Mat> gens;
  std::vector<Mat> closure{I};
  for (const auto& A : norm) {
    if (std::find(closure.begin(), closure.end(), A) != closure.end()) continue;
    gens.push_back(A);
    closure = {I};
    std::vector<Mat> st{I};
    while (!st.empty()) {
      Mat cur = st.back();
      st.pop_back();
      for (const auto& g : gens) {
        Mat nx = matmul(F, cur, g);
        if (std::find(closure.begin(), closure.end(), nx) == closure.end()) {
          closure.push_back(nx);
          st.push_back(nx);
        }
      }
    }
    if (closure.size() == 24) break;
  }
  return gens;
}

// matrix of a permutation of {1..m} acting on the deleted permutation
// module over F_p, basis f_i = e_i - e_{i+1}
Mat deleted_perm_matrix(const Permutation& g, unsigned m, unsigned p) {
  FiniteField F(p);
  // e_i -> e_{g(i)}; express f_i-image in the f-basis: partial sums trick:
  // sum of f_i over i in [a, b) equals e_a - e_b.
  Mat M(m - 1, std::vector<unsigned>(m - 1, 0));
  for (unsigned i = 0; i + 1 < m; ++i) {
    // image = e_{g(i)} - e_{g(i+1)} = sum_{j in [min,max)} sign f_j
    unsigned a = g(static_cast<Point>(i));
    unsigned b = g(static_cast<Point>(i + 1));
    bool neg = a > b;
    unsigned lo = std::min(a, b), hi = std::max(a, b);
    for (unsigned j = lo; j < hi; ++j) M[j][i] = neg ? F.neg(1) : 1;
  }
  return M;
}

// 4-dim F2 module of A6: sum-zero vectors of F2^6 modulo the all-ones vector.
Mat a6_heart_matrix(const Permutation& g) {
  // basis b_i = e_i + e_5 (i = 0..4) of the sum-zero subspace; quotient by
  // 1 = b_0+..+b_4; quotient basis: classes of b_0..b_3.
  auto to_b = [&](const std::array<int, 6>& vec6) {
    std::array<int, 5> c{};
    for (int j = 0; j < 5; ++j) c[j] = vec6[j];
    return c;
  };
  Mat M(4, std::vector<unsigned>(4, 0));
  for (unsigned i = 0; i < 4; ++i) {
    std::array<int, 6> vec{};
    vec[i] ^= 1;
    vec[5] ^= 1;  // b_i
    std::array<int, 6> img{};
    for (int j = 0; j < 6; ++j)
      if (vec[j]) img[g(static_cast<Point>(j))] ^= 1;
    auto c = to_b(img);
    for (unsigned r = 0; r < 4; ++r) M[r][i] = static_cast<unsigned>(c[r] ^ c[4]);
  }
  return M;
}

// SL(2,4) natural module F4^2 seen as F2^4 (basis 1, w per coordinate)
std::vector<Mat> sl24_as_f2_mats() {
  FiniteField F4(4);
  std::vector<Mat> out;
  for (const auto& A : sl_generators(F4, 2)) {
    Mat M(4, std::vector<unsigned>(4, 0));
    for (unsigned c = 0; c < 2; ++c)
      for (unsigned bit = 0; bit < 2; ++bit) {
        std::vector<unsigned> x{0, 0};
        x[c] = bit == 0 ? 1 : 2;  // 1 or w (encoded as 2)
        auto y = matvec(F4, A, x);
        for (unsigned r = 0; r < 2; ++r) {
          M[2 * r][2 * c + bit] = y[r] & 1;
          M[2 * r + 1][2 * c + bit] = (y[r] >> 1) & 1;
        }
      }
    out.push_back(M);
  }
  return out;
}

std::vector<Permutation> parse_gen_list(const std::vector<std::string>& strs, unsigned degree) {
  std::vector<Permutation> out;
  for (const auto& s : strs) out.push_back(parse_cycles(s, degree));
  return out;
}

// order-8 element of GL(2,3), found by search
Mat gl23_order8() {
  FiniteField F(3);
  Mat I{{1, 0}, {0, 1}};
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d) {
          unsigned det = F.sub(F.mul(a, d), F.mul(b, c));
          if (!det) continue;
          Mat A{{a, b}, {c, d}};
          Mat cur = A;
          unsigned o = 1;
          while (cur != I && o <= 8) {
            cur = matmul(F, cur, A);
            ++o;
          }
          if (o == 8 && cur == I) return A;
        }
  throw NumericalFailure("no order-8 element in GL(2,3)");
}

}  // namespace

bool GroupSpec::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

// ----- constructor expression evaluation -----

namespace {

std::vector<Permutation> build_term_gens(const std::string& term, std::uint64_t cap);

std::vector<Permutation> builder_gens(const std::string& fn, const std::vector<unsigned>& args,
                                      std::uint64_t cap) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UnknownName("constructor " + fn + " wants " + std::to_string(n) + " argument(s)");
  };
  if (fn == "Sym") {
    need(1);
    return sym_gens(args[0]);
  }
  if (fn == "Alt") {
    need(1);
    return alt_gens(args[0]);
  }
  if (fn == "Cyc") {
    need(1);
    return cyc_gens(args[0]);
  }
  if (fn == "Dih") {
    need(1);
    return dih_gens(args[0]);
  }
  if (fn == "ElemAb") {
    need(2);
    return elemab_gens(args[0], args[1]);
  }
  if (fn == "SL" && args.size() == 2 && args[0] == 2) return sl2_vector_gens(args[1]);
  if (fn == "PSL" && args.size() == 2) return psl_gens(args[1], args[0]);
  if (fn == "PGL" && args.size() == 2 && args[0] == 2) {
    auto g = psl_gens(args[1], 2);
    g.push_back(pgl_extra(args[1]));
    return g;
  }
  if (fn == "PSigmaL" && args.size() == 2 && args[0] == 2) {
    ProjAction act(args[1], 2);
    auto g = psl_gens(args[1], 2);
    g.push_back(act.frobenius());
    return g;
  }
  if (fn == "PGammaL" && args.size() == 2 && args[0] == 2) {
    ProjAction act(args[1], 2);
    auto g = psl_gens(args[1], 2);
    g.push_back(pgl_extra(args[1]));
    g.push_back(act.frobenius());
    return g;
  }
  if (fn == "Sz") {
    need(1);
    return suzuki_gens(args[0]);
  }
  if (fn == "AGL" && args.size() == 2) {
    // AGL(k, p): full affine group via GL generators (cyclic shift + transvection)
    unsigned k = args[0], p = args[1];
    FiniteField F(p);
    Mat shift(k, std::vector<unsigned>(k, 0));
    for (unsigned i = 0; i < k; ++i) shift[(i + 1) % k][i] = 1;
    Mat trans(k, std::vector<unsigned>(k, 0));
    for (unsigned i = 0; i < k; ++i) trans[i][i] = 1;
    trans[0][1] = 1;
    Mat diag(k, std::vector<unsigned>(k, 0));
    for (unsigned i = 0; i < k; ++i) diag[i][i] = 1;
    diag[0][0] = F.primitive();
    return affine_gens(p, k, {shift, trans, diag});
  }
  (void)cap;
  throw UnknownName("unknown constructor " + fn);
}

GroupPtr build_expr(const std::string& expr, std::uint64_t cap);

std::vector<Permutation> build_term_gens(const std::string& term, std::uint64_t cap) {
  // aliases first
  static const std::map<std::string, std::string> alias = {
      {"Q8", "Q8"},
  };
  (void)alias;
  if (term == "Q8") {
    // quaternion group inside SL(2,3) acting on the 8 nonzero vectors of F_3^2
    FiniteField F(3);
    std::vector<std::vector<unsigned>> vecs;
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b)
        if (a || b) vecs.push_back({a, b});
    std::map<std::vector<unsigned>, Point> index;
    for (std::size_t i = 0; i < vecs.size(); ++i) index[vecs[i]] = static_cast<Point>(i);
    auto matperm = [&](const Mat& m) {
      std::vector<Point> img(vecs.size());
      for (std::size_t i = 0; i < vecs.size(); ++i) img[i] = index.at(matvec(F, m, vecs[i]));
      return Permutation(std::move(img));
    };
    return {matperm({{0, 2}, {1, 0}}), matperm({{1, 1}, {1, 2}})};
  }
  if (!term.empty() && (term[0] == 'S' || term[0] == 'A' || term[0] == 'Z' || term[0] == 'D')) {
    bool digits = term.size() > 1 &&
                  std::all_of(term.begin() + 1, term.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
      unsigned n = static_cast<unsigned>(std::stoul(term.substr(1)));
      switch (term[0]) {
        case 'S':
          return sym_gens(n);
        case 'A':
          return alt_gens(n);
        case 'Z':
          return cyc_gens(n);
        case 'D':
          return dih_gens(n);
      }
    }
  }
  auto open = term.find('(');
  if (open != std::string::npos && term.back() == ')') {
    std::string fn = term.substr(0, open);
    std::string argstr = term.substr(open + 1, term.size() - open - 2);
    std::vector<unsigned> args;
    std::stringstream ss(argstr);
    std::string piece;
    bool numeric = true;
    while (std::getline(ss, piece, ',')) {
      try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(piece, &pos);
        while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
        if (pos != piece.size()) {
          numeric = false;
          break;
        }
        args.push_back(static_cast<unsigned>(v));
      } catch (...) {
        numeric = false;
        break;
      }
    }
    if (numeric) return builder_gens(fn, args, cap);
    if (fn == "Aut" && argstr == "A6") return builder_gens("PGammaL", {2, 9}, cap);
  }
  // fall back to a named catalog entry built recursively
  const GroupSpec* spec = find_spec(term);
  if (spec) {
    GroupPtr g = build_spec(*spec, cap);
    if (!g->enumerated()) throw CapExceeded("catalog entry " + term + " is metadata-only");
    return g->generators();
  }
  throw UnknownName("unknown group or constructor expression: " + term);
}

GroupPtr build_expr(const std::string& expr, std::uint64_t cap) {
  // split on top-level 'x' (product); parenthesis-aware
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char ch : expr) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);
  std::vector<Permutation> gens = build_term_gens(terms[0], cap);
  for (std::size_t i = 1; i < terms.size(); ++i)
    gens = direct_product(gens, build_term_gens(terms[i], cap));
  return FiniteGroup::generate(expr, gens, cap);
}

}  // namespace

// ----- builtin catalog -----

namespace {

std::vector<Permutation> stab_a7_123_gens() {
  GroupPtr a7 = FiniteGroup::generate("A7", alt_gens(7));
  std::vector<std::uint32_t> elems;
  for (std::uint32_t i = 0; i < a7->size32(); ++i) {
    const auto& g = a7->element(i);
    bool keeps = true;
    for (Point p : {Point{0}, Point{1}, Point{2}})
      if (g(p) > 2) {
        keeps = false;
        break;
      }
    if (keeps) elems.push_back(i);
  }
  auto H = subgroup_from_elements(*a7, elems);
  std::vector<Permutation> gens;
  for (auto g : H.generators()) gens.push_back(a7->element(g));
  return gens;
}

std::vector<Permutation> s4hat_gens() {
  // N_{SL(2,9)}(Q8): the double cover of S4 with a unique involution
  GroupPtr sl29 = FiniteGroup::generate("SL(2,9)", sl2_vector_gens(9));
  // central involution = unique element of order 2
  std::uint32_t center = UINT32_MAX;
  for (std::uint32_t i = 0; i < sl29->size32(); ++i)
    if (sl29->element_order(i) == 2) {
      center = i;
      break;
    }
  std::uint32_t x = UINT32_MAX, y = UINT32_MAX;
  for (std::uint32_t i = 0; i < sl29->size32() && x == UINT32_MAX; ++i)
    if (sl29->element_order(i) == 4) x = i;
  SubgroupRef cx = subgroup(*sl29, std::vector<std::uint32_t>{x});
  for (std::uint32_t i = 0; i < sl29->size32(); ++i) {
    if (sl29->element_order(i) != 4 || cx.contains(i)) continue;
    auto q = subgroup(*sl29, std::vector<std::uint32_t>{x, i});
    if (q.order() == 8 && !is_cyclic(q)) {
      y = i;
      break;
    }
  }
  auto q8 = subgroup(*sl29, std::vector<std::uint32_t>{x, y});
  auto N = normalizer(*sl29, q8);
  if (N.order() != 48) throw NumericalFailure("N_{SL(2,9)}(Q8) has unexpected order");
  (void)center;
  std::vector<Permutation> gens;
  for (auto g : N.generators()) gens.push_back(sl29->element(g));
  return gens;
}

const std::vector<std::string> kM11Gens = {
    "(1 2 3 4 5 6 7 8 9 10 11)",
    "(3 7 11 8)(4 10 5 6)",
};

// Verified against the point-line S(3,6,22) design built from PG(2,4).
const std::vector<std::string> kM22Gens = {
    "(2 10)(3 11)(4 12)(5 13)(14 18)(15 20)(16 21)(17 19)",
    "(2 18)(3 21)(4 19)(5 20)(10 14)(11 16)(12 17)(13 15)",
    "(1 6 2)(3 7 10)(4 9 14)(5 8 18)(12 21 15)(13 16 19)",
    "(1 2 3 4 22)(7 20 12 8 17)(9 11 13 18 19)(10 15 16 21 14)",
};

const std::vector<std::string> kA4A4C4Gens = {
    "(1 2 3)", "(1 2)(3 4)", "(5 6 7)", "(5 6)(7 8)", "(1 5 2 6)(3 7)(4 8)",
};

std::vector<GroupSpec> make_catalog() {
  std::vector<GroupSpec> v;
  auto add = [&](GroupSpec s) { v.push_back(std::move(s)); };
  auto expr = [](std::string name, std::string label, std::string builder, unsigned degree,
                 std::uint64_t order, std::vector<std::string> tags,
                 std::optional<std::uint64_t> a = std::nullopt) {
    GroupSpec s;
    s.name = std::move(name);
    s.label = std::move(label);
    s.builder = std::move(builder);
    s.degree = degree;
    s.expected_order = order;
    s.tags = std::move(tags);
    s.expected_a = a;
    return s;
  };

  // alternating / symmetric
  add(expr("A4", "A4", "Alt(4)", 4, 12, {"solvable"}, 0));
  add(expr("A5", "A5", "Alt(5)", 5, 60, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("A6", "A6", "Alt(6)", 6, 360, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("A7", "A7", "Alt(7)", 7, 2520, {"simple", "perfect", "oliver", "classification-2"}, 1));
  add(expr("A8", "A8", "Alt(8)", 8, 20160, {"simple", "perfect", "oliver"}, 3));
  add(expr("A9", "A9", "Alt(9)", 9, 181440, {"simple", "perfect", "oliver"}, 5));
  add(expr("S3", "S3", "Sym(3)", 3, 6, {"solvable"}, 0));
  add(expr("S4", "S4", "Sym(4)", 4, 24, {"solvable"}, 0));
  add(expr("S5", "S5", "Sym(5)", 5, 120, {"oliver", "classification-3"}, 1));
  add(expr("S6", "S6", "Sym(6)", 6, 720, {"oliver"}, 2));
  add(expr("S7", "S7", "Sym(7)", 7, 5040, {"oliver"}, 5));

  // abelian and small solvable
  add(expr("Z6", "C6", "Cyc(6)", 6, 6, {"solvable", "nilpotent", "abelian"}, 1));
  add(expr("Z8", "C8", "Cyc(8)", 8, 8, {"solvable", "nilpotent", "abelian", "cp"}, 0));
  add(expr("Z12", "C12", "Cyc(12)", 12, 12, {"solvable", "nilpotent", "abelian"}, 3));
  add(expr("Z15", "C15", "Cyc(15)", 15, 15, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 4));
  add(expr("Z21", "C21", "Cyc(21)", 21, 21, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 6));
  add(expr("Z30", "C30", "Cyc(30)", 30, 30, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 11));
  add(expr("Z35", "C35", "Cyc(35)", 35, 35, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 12));
  add(expr("Z105", "C105", "Cyc(105)", 105, 105, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 46));
  add(expr("Z2xZ2", "C2^2", "ElemAb(2,2)", 4, 4, {"solvable", "nilpotent", "abelian", "cp"}, 0));
  add(expr("Z3xZ5xZ2", "C30", "Z3xZ5xZ2", 10, 30, {"solvable", "nilpotent", "abelian", "pq-quotient"}, 11));
  add(expr("S3xZ5", "S3 x C5", "S3xZ5", 8, 30, {"solvable"}, 4));
  add(expr("D6", "D6 (order 12)", "Dih(6)", 6, 12, {"solvable"}, 1));
  add(expr("D15", "D15 (order 30)", "Dih(15)", 15, 30, {"solvable"}, 4));
  add(expr("Q8", "Q8", "Q8", 8, 8, {"solvable", "nilpotent", "cp"}, 0));
  add(expr("SL(2,3)", "SL(2,3)", "SL(2,3)", 8, 24, {"solvable"}, 1));
  add(expr("A5xZ3", "A5 x C3", "A5xZ3", 8, 180, {"oliver"}, 3));
  add(expr("Z2^2xZ3^2", "C2^2 x C3^2", "ElemAb(2,2)xElemAb(3,2)", 10, 36,
           {"solvable", "nilpotent", "abelian", "not-oliver"}, 12));
  add(expr("Z2^2xZ3^2xZ5^2", "C2^2 x C3^2 x C5^2", "ElemAb(2,2)xElemAb(3,2)xElemAb(5,2)", 20, 900,
           {"solvable", "nilpotent", "abelian", "oliver"}, 432));

  // linear and related groups
  add(expr("PSL(2,5)", "PSL(2,5) ~ A5", "PSL(2,5)", 6, 60, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("PSL(2,7)", "PSL(2,7) ~ PSL(3,2)", "PSL(2,7)", 8, 168, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("PSL(2,8)", "PSL(2,8)", "PSL(2,8)", 9, 504, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("PSL(2,9)", "PSL(2,9) ~ A6", "PSL(2,9)", 10, 360, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("PSL(2,11)", "PSL(2,11)", "PSL(2,11)", 12, 660, {"simple", "perfect", "oliver", "classification-1"}, 1));
  add(expr("PSL(2,13)", "PSL(2,13)", "PSL(2,13)", 14, 1092, {"simple", "perfect", "oliver", "classification-1"}, 1));
  add(expr("PSL(2,17)", "PSL(2,17)", "PSL(2,17)", 18, 2448, {"simple", "perfect", "oliver", "cp", "classification-1"}, 0));
  add(expr("PSL(3,3)", "PSL(3,3)", "PSL(3,3)", 13, 5616, {"simple", "perfect", "oliver", "classification-2"}, 1));
  add(expr("PSL(3,4)", "PSL(3,4)", "PSL(3,4)", 21, 20160, {"simple", "perfect", "oliver", "cp", "classification-2"}, 0));
  add(expr("PGL(2,5)", "PGL(2,5) ~ S5", "PGL(2,5)", 6, 120, {"oliver", "classification-3"}, 1));
  add(expr("PGL(2,7)", "PGL(2,7)", "PGL(2,7)", 8, 336, {"oliver", "classification-3"}, 1));
  add(expr("PGL(2,9)", "PGL(2,9)", "PGL(2,9)", 10, 720, {"oliver"}, 2));
  add(expr("PSigmaL(2,8)", "PSigmaL(2,8)", "PSigmaL(2,8)", 9, 1512, {"oliver", "classification-3"}, 1));
  add(expr("PSigmaL(2,27)", "PSigmaL(2,27)", "PSigmaL(2,27)", 28, 29484, {"oliver", "nonsolvable"}, 2));
  add(expr("Aut(A6)", "PGammaL(2,9)", "PGammaL(2,9)", 10, 1440, {"oliver", "nonsolvable"}, 2));
  add(expr("M10", "M10 = A6.2_3", "M10", 10, 720, {"oliver", "cp", "classification-3"}, 0));

  {
    GroupSpec s;
    s.name = "M11";
    s.label = "M11";
    s.degree = 11;
    s.generators = kM11Gens;
    s.expected_order = 7920;
    s.tags = {"simple", "perfect", "oliver", "classification-2"};
    s.expected_a = 1;
    add(s);
  }
  {
    GroupSpec s;
    s.name = "M22";
    s.label = "M22";
    s.degree = 22;
    s.generators = kM22Gens;
    s.expected_order = 443520;
    s.tags = {"simple", "perfect", "oliver", "classification-2", "heavy"};
    s.expected_a = 1;
    add(s);
  }
  add(expr("Sz(8)", "Sz(8)", "Sz(8)", 65, 29120, {"simple", "perfect", "oliver", "cp", "classification-2"}, 0));
  {
    GroupSpec s;
    s.name = "Sz(32)";
    s.label = "Sz(32)";
    s.degree = 0;  // metadata-only: order 32537600 exceeds the element cap
    s.expected_order = 32537600;
    s.tags = {"simple", "perfect", "oliver", "cp", "classification-2", "metadata-only"};
    s.expected_a = 0;
    add(s);
  }
  add(expr("PSL(3,4):2", "PSL(3,4) : graph-field 2", "PSL34GraphField", 42, 40320,
           {"oliver", "nonsolvable", "classification-4"}, 1));

  // classification case witnesses (solvable / affine)
  add(expr("StabA7_123", "Stab_A7({1,2,3})", "StabA7_123", 7, 72,
           {"solvable", "oliver", "classification-5"}, 1));
  add(expr("C2^2:D9", "C2^2 : D9", "C22D9", 13, 72, {"solvable", "not-oliver", "case5-candidate"}, 1));
  add(expr("C5^2:SL(2,3)", "C5^2 : SL(2,3)", "C52SL23", 25, 600,
           {"solvable", "oliver", "classification-6"}, 1));
  add(expr("C3^3:A4", "C3^3 : A4", "C33A4", 27, 324, {"solvable", "oliver", "classification-7"}, 1));
  {
    GroupSpec s;
    s.name = "(A4xA4):C4";
    s.label = "(A4 x A4) : C4";
    s.degree = 8;
    s.generators = kA4A4C4Gens;
    s.expected_order = 576;
    s.tags = {"solvable", "oliver", "classification-8"};
    s.expected_a = 1;
    add(s);
  }
  add(expr("AGL(3,2)", "C2^3 : GL(3,2)", "AGL(3,2)", 8, 1344,
           {"nonsolvable", "oliver", "classification-10"}, 1));
  add(expr("C2^4:A6", "C2^4 : A6", "C24A6", 16, 5760, {"nonsolvable", "oliver", "classification-11"}, 1));
  add(expr("C2^4:SL(2,4)", "C2^4 : SL(2,4)", "C24SL24", 16, 960,
           {"nonsolvable", "oliver", "cp", "classification-13"}, 0));
  add(expr("Frob75xFrob147", "(C5^2:C3) x (C7^2:C3)", "Frob75xFrob147", 74, 11025,
           {"solvable", "oliver", "odd-order"}, 88));

  return v;
}

std::vector<Permutation> special_builder(const std::string& key) {
  if (key == "SL(2,3)") return sl2_vector_gens(3);
  if (key == "M10") {
    ProjAction act(9, 2);
    auto g = psl_gens(9, 2);
    g.push_back(act.frobenius() * pgl_extra(9));
    return g;
  }
  if (key == "PSL34GraphField") return psl34_graph_field_gens();
  if (key == "StabA7_123") return stab_a7_123_gens();
  if (key == "C22D9") {
    auto d9 = dih_gens(9);
    Mat r{{0, 1}, {1, 1}};
    Mat s{{0, 1}, {1, 0}};
    std::vector<Permutation> carrier = {d9[0], d9[1]};
    return affine_gens(2, 2, {r, s}, 9, &carrier);
  }
  if (key == "C52SL23") return affine_gens(5, 2, sl23_in_gl25());
  if (key == "C33A4") {
    auto a4 = alt_gens(4);
    std::vector<Mat> mats;
    for (const auto& g : a4) mats.push_back(deleted_perm_matrix(g, 4, 3));
    return affine_gens(3, 3, mats);
  }
  if (key == "C24A6") {
    auto a6 = alt_gens(6);
    std::vector<Mat> mats;
    for (const auto& g : a6) mats.push_back(a6_heart_matrix(g));
    return affine_gens(2, 4, mats);
  }
  if (key == "C24SL24") return affine_gens(2, 4, sl24_as_f2_mats());
  if (key == "Frob75xFrob147") {
    Mat m5{{0, 4}, {1, 4}};  // order 3 in GL(2,5)
    Mat m7{{0, 6}, {1, 6}};  // order 3 in GL(2,7)
    return direct_product(affine_gens(5, 2, {m5}), affine_gens(7, 2, {m7}));
  }
  if (key == "S4hat") return s4hat_gens();
  if (key == "PSU(3,2)") {
    Mat i{{0, 2}, {1, 0}};
    Mat j{{1, 1}, {1, 2}};
    return affine_gens(3, 2, {i, j});
  }
  if (key == "C3^2:C8") return affine_gens(3, 2, {gl23_order8()});
  return {};
}

}  // namespace

const std::vector<GroupSpec>& builtin_catalog() {
  static const std::vector<GroupSpec> cat = make_catalog();
  return cat;
}

const GroupSpec* find_spec(const std::string& name) {
  for (const auto& s : builtin_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

GroupPtr build_spec(const GroupSpec& spec, std::uint64_t cap) {
  if (spec.degree == 0 || spec.has_tag("metadata-only"))
    return FiniteGroup::metadata_only(spec.name, spec.expected_order);
  GroupPtr g;
  if (!spec.generators.empty()) {
    g = FiniteGroup::generate(spec.name, parse_gen_list(spec.generators, spec.degree), cap);
  } else if (spec.builder) {
    auto gens = special_builder(*spec.builder);
    if (!gens.empty())
      g = FiniteGroup::generate(spec.name, gens, cap);
    else {
      GroupPtr e = build_expr(*spec.builder, cap);
      g = FiniteGroup::generate(spec.name, e->generators(), cap);
    }
  } else {
    throw UnknownName("catalog entry " + spec.name + " has no construction");
  }
  if (spec.expected_order && g->order() != spec.expected_order)
    throw OrderMismatch(spec.name + ": enumerated order " + std::to_string(g->order()) +
                        " != declared " + std::to_string(spec.expected_order));
  return g;
}

GroupPtr build(const std::string& name_or_expr, std::uint64_t cap) {
  if (const GroupSpec* spec = find_spec(name_or_expr)) return build_spec(*spec, cap);
  auto gens = special_builder(name_or_expr);
  if (!gens.empty()) return FiniteGroup::generate(name_or_expr, gens, cap);
  return build_expr(name_or_expr, cap);
}

// ----- group files -----

namespace {

GroupSpec parse_header(const std::string& line, int line_no) {
  GroupSpec s;
  std::istringstream is(line);
  std::string kw;
  is >> kw;  // "group"
  if (!(is >> s.name)) throw ParseError("missing group name", line_no, 7);
  std::string kv;
  while (is >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + kv + "'", line_no, 1);
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "degree")
      s.degree = static_cast<unsigned>(std::stoul(val));
    else if (key == "order")
      s.expected_order = std::stoull(val);
    else if (key == "tags") {
      std::stringstream ts(val);
      std::string t;
      while (std::getline(ts, t, ','))
        if (!t.empty()) s.tags.push_back(t);
    } else if (key == "a")
      s.expected_a = std::stoull(val);
    else if (key == "label")
      s.label = val;
    else
      throw ParseError("unknown key '" + key + "'", line_no, 1);
  }
  if (s.degree == 0 && !s.has_tag("metadata-only"))
    throw ParseError("group " + s.name + " needs degree=<n>", line_no, 1);
  return s;
}

std::vector<GroupSpec> load_text(std::istream& in) {
  std::vector<GroupSpec> out;
  std::string line;
  int line_no = 0;
  GroupSpec* cur = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.rfind("group ", 0) == 0 || line == "group") {
      out.push_back(parse_header(line, line_no));
      cur = &out.back();
    } else {
      if (!cur) throw ParseError("generator before any 'group' header", line_no, 1);
      parse_cycles(line, cur->degree, line_no);  // validate now for position info
      cur->generators.push_back(line);
    }
  }
  return out;
}

std::vector<GroupSpec> load_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what(),
                     static_cast<int>(e.byte), 1);
  }
  std::vector<GroupSpec> out;
  for (const auto& item : j) {
    GroupSpec s;
    s.name = item.at("name").get<std::string>();
    s.degree = item.value("degree", 0u);
    s.expected_order = item.value("order", 0ull);
    if (item.contains("tags"))
      for (const auto& t : item["tags"]) s.tags.push_back(t.get<std::string>());
    if (item.contains("label")) s.label = item["label"].get<std::string>();
    if (item.contains("a")) s.expected_a = item["a"].get<std::uint64_t>();
    if (item.contains("generators"))
      for (const auto& g : item["generators"]) {
        if (g.is_string())
          s.generators.push_back(g.get<std::string>());
        else {
          // image-list form: 0-based array
          std::string t = "[";
          for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) t += ",";
            t += std::to_string(g[i].get<unsigned>());
          }
          t += "]";
          std::vector<Point> img;
          for (const auto& x : g) img.push_back(static_cast<Point>(x.get<unsigned>()));
          s.generators.push_back(Permutation(img).to_cycle_string());
        }
      }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<GroupSpec> load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return load_json(in);
  return load_text(in);
}

std::vector<GroupPtr> load(const std::string& path, std::uint64_t cap) {
  std::vector<GroupPtr> out;
  for (const auto& s : load_group_file(path)) out.push_back(build_spec(s, cap));
  return out;
}

}  // namespace ginv
