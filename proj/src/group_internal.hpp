#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "oortscan/finite_group.hpp"

namespace oortscan::detail {

struct GroupData {
  std::size_t degree = 0u;
  std::vector<Permutation> elements;
  std::vector<Elem> generators;
  std::vector<std::uint16_t> table; // row-major, order x order
  std::vector<Elem> inverses;
  std::vector<std::uint32_t> orders;
  std::unordered_map<Permutation, Elem, PermutationHash> index;
  bool abelian = true;
};

/// Assembles a group from lexicographically sorted elements and a matching
/// multiplication table. The caller guarantees closure and consistency.
FiniteGroup make_group(std::size_t degree, std::vector<Permutation> elements,
                       std::vector<std::uint16_t> table, std::vector<Elem> generators);


} // namespace oortscan::detail
