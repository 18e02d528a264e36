#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oortscan {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Products are read left to right: (a * b)[i] == b[a[i]], i.e. apply a
/// first, then b. Comparison is lexicographic on the image sequence, which is
/// the canonical element order used throughout the library.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws BadPermutation unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles over 0-based points.
  /// Throws BadPermutation on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by it.
  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; the identity is "()".
  std::string str() const;

  friend Permutation operator*(Permutation const &a, Permutation const &b);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace oortscan
