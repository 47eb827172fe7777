#include "cayley/permutation.hpp"

#include <numeric>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> v;
  for (const auto& c : cycles) v.emplace_back(c);
  return from_cycles(degree, v);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x]) throw InvalidArgument("cycles are not disjoint or out of range");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t Permutation::support_size() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) moved += images_[i] != i;
  return moved;
}

Point Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  auto cs = cycles();
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("degree mismatch in composition");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images_[q.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  return c.inverse() * p * c;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cayley
