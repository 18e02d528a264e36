#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oortscan/finite_group.hpp"
#include "oortscan/group_spec.hpp"
#include "oortscan/structure.hpp"

namespace oortscan {

/// A named group family with parameters. Written in the mini-language
///
///   C:n  D:2n  SD:2^a  Q:2^a  EA:p^r  A4  S4  A5  SL23
///   prod(A,B)  sd(P,m,action)  fix(p,type[,param])
///
/// where action is `id`, `inv`, `pow:k` or `[i,j,...]`, the images of P's
/// generators given as indices into P's element table.
struct FamilySpec {
  enum class Kind {
    Cyclic,
    Dihedral,
    SemiDihedral,
    Quaternion,
    ElementaryAbelian,
    A4,
    S4,
    A5,
    SL23,
    DirectProduct,
    SemiDirect,
    Forbidden
  };

  Kind kind = Kind::Cyclic;
  /// Group order for C, D, SD, Q; the prime for EA and fix.
  std::uint64_t n = 1u;
  /// EA rank; forbidden type index.
  unsigned rank = 0u;
  /// SemiDirect complement order; forbidden parameter (0 = default).
  std::uint64_t m = 0u;
  std::string action;
  /// DirectProduct: two factors. SemiDirect: the normal factor.
  std::vector<FamilySpec> parts;

  static FamilySpec cyclic(std::uint64_t n);
  static FamilySpec dihedral(std::uint64_t order);
  static FamilySpec semidihedral(std::uint64_t order);
  static FamilySpec quaternion(std::uint64_t order);
  static FamilySpec elementary_abelian(std::uint64_t p, unsigned rank);
  static FamilySpec named(Kind k);
  static FamilySpec product(FamilySpec a, FamilySpec b);
  static FamilySpec semidirect(FamilySpec p, std::uint64_t m, std::string action);
  static FamilySpec forbidden(std::uint64_t p, unsigned type, std::uint64_t param = 0u);

  /// Canonical text in the mini-language; parse_family(str()) == *this.
  std::string str() const;

  friend bool operator==(FamilySpec const &, FamilySpec const &) = default;
};

/// Throws ParseError.
FamilySpec parse_family(std::string_view text);

/// Group order implied by the spec, without building it.
std::uint64_t family_order(FamilySpec const &spec);

/// Degree and generators of the permutation realization.
GroupSpec realize(FamilySpec const &spec);

/// Throws BadParameters, CapExceeded.
FiniteGroup build(FamilySpec const &spec, Limits const &limits = {});

/// The tag recognize() must return for build(spec), when the family has one.
std::optional<IsoType> expected_iso_type(FamilySpec const &spec);

/// The concrete family behind fix(p, type, param).
FamilySpec forbidden_fixture_spec(std::uint64_t p, unsigned type, std::uint64_t param = 0u);

/// Throws BadParameters for an invalid (p, type) pair.
FiniteGroup forbidden_fixture(std::uint64_t p, unsigned type, std::uint64_t param = 0u,
                              Limits const &limits = {});

// -- labeled corpus -------------------------------------------------------

enum class Profile { Smoke, Full };

/// Known answers for one prime. An empty optional means the value is open.
struct Expectation {
  std::uint64_t p = 0u;
  std::optional<bool> oort;
  std::optional<bool> local;
  std::string reason;

  bool known() const noexcept { return oort.has_value() || local.has_value(); }
  /// "oort=yes local=yes", "oort=no", or "necessary-conditions-only".
  std::string label() const;
};

struct CorpusEntry {
  FamilySpec spec;
  std::uint64_t order = 0u;
  std::vector<Expectation> expectations;
};

/// Primes the corpus is run against.
std::vector<std::uint64_t> corpus_primes(FamilySpec const &spec);

Expectation expected_labels(FamilySpec const &spec, std::uint64_t p);

/// Deterministic list of family instances up to the profile's order bound
/// (64 for smoke, 1024 for full), each within the degree cap.
std::vector<CorpusEntry> corpus(Profile profile);

Profile parse_profile(std::string_view name);
char const *profile_name(Profile p);

} // namespace oortscan
