#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cayley {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Acts on the left: p(x) is the image of x,
/// and (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Number of points moved.
  std::size_t support_size() const;
  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const;
  std::size_t fixed_points() const { return degree() - support_size(); }
  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;
  Permutation pow(std::int64_t e) const;
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Composition (p * q)(x) = p(q(x)). Throws InvalidArgument on degree mismatch.
Permutation operator*(const Permutation& p, const Permutation& q);

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

/// c^-1 * p * c, the conjugate of p by c (written p^c).
Permutation conjugate(const Permutation& p, const Permutation& c);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cayley

template <>
struct std::hash<cayley::Permutation> : cayley::PermutationHash {};
