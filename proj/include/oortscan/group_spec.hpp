#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oortscan/finite_group.hpp"

namespace oortscan {

/// Parsed form of the group-spec text format:
///
///   degree N
///   (0 1 2)(3 4)
///   # comment
///
/// One generator per line in 0-based cycle notation; `()` is the identity.
struct GroupSpec {
  std::size_t degree = 0u;
  std::vector<Permutation> generators;
};

/// Throws ParseError (1-based line/column) or BadPermutation.
GroupSpec parse_group_spec(std::string_view text);

std::string format_group_spec(GroupSpec const &spec);
std::string format_group_spec(FiniteGroup const &g);

FiniteGroup build_from_spec(GroupSpec const &spec, Limits const &limits = {});

/// Parses a single cycle-notation string such as "(0 1)(2 3 4)".
Permutation parse_cycles(std::size_t degree, std::string_view text);

} // namespace oortscan
