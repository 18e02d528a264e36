#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oortscan/finite_group.hpp"

namespace oortscan {

/// Recognized isomorphism class. `order` is always the group order, so
/// Dihedral(2n) has order 2n and SemiDihedral(2^a) has order 2^a.
struct IsoType {
  enum class Kind {
    Cyclic,
    Dihedral,
    SemiDihedral,
    GeneralizedQuaternion,
    ElementaryAbelian,
    A4,
    S4,
    A5,
    SL23,
    Other
  };

  Kind kind = Kind::Other;
  std::size_t order = 1u;
  std::uint64_t p = 0u;  // ElementaryAbelian only
  unsigned rank = 0u;    // ElementaryAbelian only

  static IsoType cyclic(std::size_t n) { return {Kind::Cyclic, n}; }
  static IsoType dihedral(std::size_t order) { return {Kind::Dihedral, order}; }
  static IsoType semidihedral(std::size_t order) { return {Kind::SemiDihedral, order}; }
  static IsoType quaternion(std::size_t order) { return {Kind::GeneralizedQuaternion, order}; }
  static IsoType elementary_abelian(std::uint64_t p, unsigned rank);
  static IsoType a4() { return {Kind::A4, 12u}; }
  static IsoType s4() { return {Kind::S4, 24u}; }
  static IsoType a5() { return {Kind::A5, 60u}; }
  static IsoType sl23() { return {Kind::SL23, 24u}; }
  static IsoType other(std::size_t order) { return {Kind::Other, order}; }

  bool is(Kind k) const noexcept { return kind == k; }

  /// Short name: C12, D8, SD16, Q8, C3^2, A4, S4, A5, SL(2,3), Other(48).
  std::string str() const;

  friend bool operator==(IsoType const &, IsoType const &) = default;
};

/// The other tags that also describe the same group (Dihedral(4) is also
/// C2^2; Dihedral(2) and C_p^1 are also cyclic).
std::vector<IsoType> aliases(IsoType const &t);

char const *kind_name(IsoType::Kind k);

struct QuotientGroup {
  FiniteGroup parent;
  Subgroup kernel;
  /// Right-multiplication action on the cosets of the kernel.
  FiniteGroup model;
  /// projection[g] is the model element of the coset of g.
  std::vector<Elem> projection;
};

struct CyclicByPDecomposition {
  Subgroup P;
  Subgroup C;
  std::size_t m = 1u;
  Elem c_gen = 0u;
  /// Order of the automorphism of P induced by conjugation with c_gen.
  std::size_t action_order = 1u;
};

// -- characteristic subgroups ---------------------------------------------

Subgroup center(FiniteGroup const &g);
Subgroup centralizer(FiniteGroup const &g, Subgroup const &h);
Subgroup normalizer(FiniteGroup const &g, Subgroup const &h);
Subgroup derived_subgroup(FiniteGroup const &g);

/// Smallest normal subgroup containing `elems`.
Subgroup normal_closure(FiniteGroup const &g, std::vector<Elem> elems);

/// Intersection of the maximal subgroups. For p-groups the result is also
/// computed as <p-th powers, commutators> and the two are required to agree.
Subgroup frattini(FiniteGroup const &g, Limits const &limits = {});

/// <x^p, [x,y]> for a p-group; no subgroup enumeration.
Subgroup frattini_p_group(FiniteGroup const &g, std::uint64_t p);

std::vector<Subgroup> maximal_subgroups(FiniteGroup const &g, Limits const &limits = {});
std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &g,
                                               Limits const &limits = {});

/// A Sylow p-subgroup; the unique one when it is normal. Trivial if p does
/// not divide |g|.
Subgroup sylow(FiniteGroup const &g, std::uint64_t p);

/// Throws NotNormal.
QuotientGroup quotient(FiniteGroup const &g, Subgroup const &n);

// -- simple invariants ----------------------------------------------------

bool is_cyclic(FiniteGroup const &g);
bool is_p_group(FiniteGroup const &g, std::uint64_t p);
/// Abelian with every nonidentity element of order p (for some prime p).
bool is_elementary_abelian(FiniteGroup const &g);
std::size_t exponent(FiniteGroup const &g);
std::size_t involution_count(FiniteGroup const &g);

bool is_cyclic(Subgroup const &h);
bool is_elementary_abelian(Subgroup const &h);

// -- recognition ----------------------------------------------------------

IsoType recognize(FiniteGroup const &g);

/// Absent unless the Sylow p-subgroup is normal with a cyclic complement.
std::optional<CyclicByPDecomposition> cyclic_by_p_decompose(FiniteGroup const &g,
                                                            std::uint64_t p);

/// Subgroups H of g for which cyclic_by_p_decompose(H, p) succeeds.
std::vector<Subgroup> cyclic_by_p_subgroups(FiniteGroup const &g, std::uint64_t p,
                                            Limits const &limits = {});

// -- conjugation action on a subgroup P (all live in the same parent) -----

/// c x c^-1 = x^-1 for every x in P.
bool acts_by_inversion(FiniteGroup const &g, Elem c, Subgroup const &p);
/// Only the identity of C centralizes P.
bool acts_faithfully(FiniteGroup const &g, Subgroup const &c, Subgroup const &p);
/// Every element of C centralizes P.
bool acts_trivially(FiniteGroup const &g, Subgroup const &c, Subgroup const &p);
/// No subgroup 1 < T < P is C-invariant. P must be elementary abelian.
bool acts_irreducibly(FiniteGroup const &g, Subgroup const &c, Subgroup const &p);
/// No x != 1 in P is fixed by C. P must be elementary abelian.
bool acts_without_fixed_points(FiniteGroup const &g, Subgroup const &c, Subgroup const &p);

/// Elements of P fixed by conjugation with c.
Subgroup fixed_subgroup(FiniteGroup const &g, Elem c, Subgroup const &p);

/// Least k >= 1 such that c^k centralizes P.
std::size_t action_order(FiniteGroup const &g, Elem c, Subgroup const &p);

} // namespace oortscan
