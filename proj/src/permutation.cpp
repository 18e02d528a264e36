#include "oortscan/permutation.hpp"

#include <numeric>
#include <sstream>

#include "oortscan/error.hpp"

namespace oortscan {

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw BadPermutation("image sequence is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw BadPermutation("point " + std::to_string(x) +
                             " out of range for degree " + std::to_string(degree));
      if (used[x])
        throw BadPermutation("point " + std::to_string(x) +
                             " appears in more than one cycle position");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    Point x = static_cast<Point>(start);
    while (!done[x]) {
      done[x] = true;
      cycle.push_back(x);
      x = images_[x];
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  std::vector<Point> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace oortscan
