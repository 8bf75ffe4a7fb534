#include "ginv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ginv/errors.hpp"

namespace ginv {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = other.images_[images_[i]];
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation Permutation::power(long long e) const {
  unsigned long long n = order();
  long long m = e % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (m > 0) {
    if (m & 1) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned long long Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  unsigned long long o = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned long long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> c;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j));
      j = images_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << (c[i] + 1);
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(const std::string& text, unsigned degree, int line_no) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing text after 'id'", line_no, static_cast<int>(i) + 1);
    return Permutation(std::move(img));
  }
  std::vector<bool> used(degree, false);
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw ParseError("expected '('", line_no, static_cast<int>(i) + 1);
    ++i;
    std::vector<Point> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("unterminated cycle", line_no, static_cast<int>(i) + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')'", line_no, static_cast<int>(i) + 1);
      unsigned long v = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree), line_no,
                         static_cast<int>(start) + 1);
      Point p = static_cast<Point>(v - 1);
      if (used[p])
        throw ParseError("point " + std::to_string(v) + " repeated", line_no,
                         static_cast<int>(start) + 1);
      used[p] = true;
      cyc.push_back(p);
      if (i < text.size() && text[i] == ',') ++i;
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  if (!any_cycle)
    throw ParseError("empty permutation (use '()' for the identity)", line_no, 1);
  return Permutation(std::move(img));
}

Permutation parse_image_list(const std::string& text, unsigned degree, int line_no) {
  std::vector<Point> img;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '['", line_no, static_cast<int>(i) + 1);
  ++i;
  while (true) {
    skip_ws();
    if (i >= text.size()) throw ParseError("unterminated image list", line_no, static_cast<int>(i) + 1);
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected digit", line_no, static_cast<int>(i) + 1);
    unsigned long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
    if (v >= degree)
      throw ParseError("image out of range", line_no, static_cast<int>(i));
    img.push_back(static_cast<Point>(v));
    skip_ws();
    if (i < text.size() && text[i] == ',') ++i;
  }
  if (img.size() != degree)
    throw ParseError("image list has wrong length", line_no, static_cast<int>(i));
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

}  // namespace ginv
