#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oortscan/arith.hpp"

namespace oortscan {

/// Lower-numbering orders |G_0| >= |G_1| >= ... >= |G_r| > 1 at a totally
/// ramified point; G_i is trivial for i > r.
class RamificationFiltration {
public:
  /// Throws BadParameters unless each order divides the previous one,
  /// orders[1] is a power of p and orders[0]/orders[1] is prime to p.
  /// A single entry [e] is accepted for any e.
  RamificationFiltration(std::vector<std::uint64_t> orders, std::uint64_t p);

  std::vector<std::uint64_t> const &orders() const noexcept { return orders_; }
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t inertia_order() const noexcept { return orders_.front(); }
  /// |G_i|, 1 past the end.
  std::uint64_t at(std::size_t i) const noexcept { return i < orders_.size() ? orders_[i] : 1u; }

  std::string str() const;

  friend bool operator==(RamificationFiltration const &, RamificationFiltration const &) = default;

private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t p_;
};

struct BranchPoint {
  std::uint64_t inertia_order = 2u;
  /// Required when the characteristic divides inertia_order.
  std::optional<RamificationFiltration> filtration;
};

struct CoverSpec {
  std::uint64_t group_order = 1u;
  std::uint64_t base_genus = 0u;
  std::vector<BranchPoint> branch;
  /// 0 for characteristic zero / unspecified.
  std::uint64_t characteristic = 0u;
};

/// Text form:
///
///   order 8
///   base_genus 0
///   char 2
///   point e=8 filtration=8,8,2,2,2,2
///   point e=2 count=3
///
/// Throws ParseError.
CoverSpec parse_cover_spec(std::string_view text);
std::string format_cover_spec(CoverSpec const &cover);

/// Genus of w^p - w = f(u) with deg f = m prime to p.  Throws BadDegree.
BigInt artin_schreier_genus(std::uint64_t p, std::uint64_t m);

/// Throws InconsistentCover, BadParameters.
BigInt tame_rh_genus(CoverSpec const &cover);
BigInt wild_rh_genus(CoverSpec const &cover);

/// Sum of (|G_i| - 1).
BigInt different_exponent(RamificationFiltration const &f);

struct UpperJump {
  Rational u;
  /// |G^v| for v just above u.
  std::uint64_t order_after = 1u;

  friend bool operator==(UpperJump const &, UpperJump const &) = default;
};

/// Lower indices j with G_j != G_{j+1}.
std::vector<std::uint64_t> lower_jumps(RamificationFiltration const &f);

/// Herbrand phi of an integer lower index.
Rational herbrand_phi(RamificationFiltration const &f, std::uint64_t j);

std::vector<UpperJump> lower_to_upper(RamificationFiltration const &f);

/// Inverse of lower_to_upper.  Throws BadParameters when a jump does not land
/// on an integer lower index.
RamificationFiltration upper_to_lower(std::vector<UpperJump> const &jumps, std::uint64_t order0,
                                      std::uint64_t p);

/// The number of indices with |G_i| = sub_order is divisible by
/// orders[0]/sub_order.  Throws BadOrder if sub_order does not divide orders[0].
bool hasse_arf_check(RamificationFiltration const &f, std::uint64_t sub_order);

/// hasse_arf_check at every level present in f.
bool hasse_arf_all_levels(RamificationFiltration const &f);

bool upper_jumps_integral(RamificationFiltration const &f);

struct ParityCertificate {
  std::uint64_t n_order = 0u;
  std::string group;
  std::uint64_t group_order = 0u;
  std::vector<std::uint64_t> element_orders;
  /// |G|/d mod 4 for each element order d > 1.
  std::vector<std::uint64_t> residues;
  /// "odd" once every residue is 0.
  std::string genus_parity;
};

/// Parity of the genus of any characteristic-zero Galois cover of the line
/// with group the A4 extension by N of order n_order (2 or 4).
/// Throws BadParameters.
ParityCertificate char0_parity_obstruction_A4ext(std::uint64_t n_order);

/// True when 2(p+1) = (n-1)p has no integer solution; also checked for
/// 0 <= n <= n_max.  Throws BadParameters unless p is an odd prime.
bool odd_p_parity_equation(std::uint64_t p, std::uint64_t n_max = 1000u);

struct LiftBound {
  BigInt char0_lower_bound;
  BigInt charp_genus;
  bool contradiction = false;
};

/// Characteristic-zero lower bound (p-1)(l-1) against the characteristic-p
/// genus (p-1)(l-1)/2.  Throws BadParameters.
LiftBound dihedral_lift_bound(std::uint64_t p, std::uint64_t l);

/// Size of the preimage of a branch set, one fiber size per downstairs point.
/// Throws BadParameters if a fiber size does not divide the group order.
std::uint64_t branch_pullback_count(std::uint64_t subcover_group_order,
                                    std::vector<std::uint64_t> const &fiber_sizes);

/// Whether a group of this order with these element orders, acting with
/// cyclic stabilizers, only has orbits of even size.
bool char0_even_required(std::uint64_t group_order,
                         std::vector<std::uint64_t> const &element_orders);

struct ScenarioParams {
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> n_order;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  /// Intermediate quantities in computation order.
  std::vector<std::pair<std::string, std::string>> values;
  bool obstruction = false;
  std::string conclusion;
};

std::vector<std::string> const &scenario_names();

/// Throws UnknownScenario, BadParameters.
ScenarioReport scenario(std::string_view name, ScenarioParams const &params = {});

} // namespace oortscan
