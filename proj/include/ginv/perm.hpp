#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ginv {

using Point = std::uint16_t;

// A permutation of {0..degree-1} stored as its image list.
// Composition is left-to-right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(long long e) const;
  // g^-1 * x * g
  Permutation conjugated_by(const Permutation& g) const;

  bool is_identity() const;
  unsigned long long order() const;  // lcm of cycle lengths
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles, sorted

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  // Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)"; identity is "()".
  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Parses cycle notation with 1-based points: "(1 2)(3 4 5)".
// `degree` fixes the carrier size; points above it are a ParseError.
// Accepts "()" and "id" for the identity. line_no is used for error reporting.
Permutation parse_cycles(const std::string& text, unsigned degree, int line_no = 1);

// Parses an explicit image list "[0,2,1,...]" (0-based) of length degree.
Permutation parse_image_list(const std::string& text, unsigned degree, int line_no = 1);

}  // namespace ginv
