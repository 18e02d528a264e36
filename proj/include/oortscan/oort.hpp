#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oortscan/finite_group.hpp"
#include "oortscan/structure.hpp"

namespace oortscan {

using Details = std::vector<std::pair<std::string, std::string>>;

/// A forbidden type matched by a group (no kernel attached).
struct ForbiddenMatch {
  unsigned type_index = 0u;
  Details details;
};

struct ForbiddenTypeHit {
  std::uint64_t p = 0u;
  unsigned type_index = 0u;
  /// N with G/N of this type.
  Subgroup kernel;
  std::size_t quotient_order = 0u;
  Details details;
};

enum class Status { Pass, Fail, NotApplicable };
char const *status_name(Status s);

struct ShapeResult {
  bool pass = false;
  IsoType shape;
  /// Which allowed class matched, or why none did.
  std::string reason;
  std::vector<std::string> warnings;
};

struct CandidateResult {
  bool pass = true;
  /// Smallest failing cyclic-by-p subgroup.
  std::optional<Subgroup> witness;
  IsoType witness_shape;
  std::size_t subgroups_checked = 0u;
  std::size_t cyclic_by_p_count = 0u;
};

struct CorollaryCheck {
  /// sylow_cyclic, normalizer_inversion, sylow2_cyclic_or_dihedral,
  /// odd_normalizer_order3
  std::string key;
  Status status = Status::NotApplicable;
  std::string detail;
};

struct Verdict {
  std::string group_id;
  std::uint64_t p = 0u;
  std::size_t order = 0u;
  IsoType shape;
  std::vector<IsoType> shape_aliases;

  bool cyclic_by_p = false;
  std::size_t sylow_order = 0u;
  std::size_t complement_order = 0u;
  std::size_t action_order = 0u;

  Status local = Status::NotApplicable;
  std::string local_reason;
  std::vector<std::string> local_warnings;

  bool oort = false;
  CandidateResult candidate;

  bool pgl2_char0 = false;
  std::vector<ForbiddenTypeHit> forbidden_quotients;
  std::vector<CorollaryCheck> corollaries;
  std::vector<std::string> caveats;

  /// Both necessary conditions hold (local is n/a or pass).
  bool passes() const noexcept { return oort && local != Status::Fail; }
};

/// Throws NotCyclicByP.
ShapeResult allowed_local_shape(FiniteGroup const &g, std::uint64_t p);
ShapeResult allowed_global_shape_cyclic_by_p(FiniteGroup const &g, std::uint64_t p);

/// Shape tests on an already recognized group.
ShapeResult local_shape_of(IsoType const &shape, std::uint64_t p);
ShapeResult global_shape_of(IsoType const &shape, std::uint64_t p);

CandidateResult oort_candidate(FiniteGroup const &g, std::uint64_t p, Limits const &limits = {});

/// Type index and parameters of the first forbidden type Q matches.
std::optional<ForbiddenMatch> detect_forbidden_type(FiniteGroup const &q, std::uint64_t p);

/// Every forbidden quotient G/N, sorted by quotient order then type index.
std::vector<ForbiddenTypeHit> forbidden_quotient_scan(FiniteGroup const &g, std::uint64_t p,
                                                      Limits const &limits = {});

/// True for cyclic, dihedral, A4, S4 and A5.
bool embeds_in_pgl2_char0(FiniteGroup const &g);
bool embeds_in_pgl2_char0(IsoType const &shape);

std::vector<CorollaryCheck> corollary_checks(FiniteGroup const &g, std::uint64_t p,
                                             Limits const &limits = {});

Verdict classify(FiniteGroup const &g, std::uint64_t p, std::string group_id = {},
                 Limits const &limits = {});

} // namespace oortscan
