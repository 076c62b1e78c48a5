#pragma once

#include <optional>
#include <string_view>

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/check_report.hpp"

namespace pfsemi {

// Structural checks. Each scans tuples in row-major order and reports the
// first violation.

/// Associativity of the product: "semigroup.associative", witness (x,y,z).
CheckReport is_semigroup(const AbstractSystem& s);

/// "semilattice.idempotent" (x), "semilattice.commutative" (x,y) and
/// "semilattice.associative" (x,y,z).
CheckReport is_semilattice(const AbstractSystem& s);

/// Both structural reports pass.
bool is_structurally_valid(const AbstractSystem& s);

/// x ≤ y iff x ⋏ y = x. Throws UsageError unless the meet is a semilattice.
Relation natural_order(const AbstractSystem& s);

/// A two-sided identity of the product, if G has one.
std::optional<std::size_t> find_identity(const AbstractSystem& s);

/// quasi-order, stable, left-regular, right-regular, left-ideal and
/// right-negative for `rho`, each id prefixed with `prefix`.
CheckReport relation_properties(const AbstractSystem& s, const Relation& rho,
                                std::string_view prefix = "");

// Identities. All require is_structurally_valid(s) and throw UsageError
// otherwise.

/// x(y⋏z) = xy⋏xz for x,y,z in G.
CheckReport check_left_distributive(const AbstractSystem& s);

/// (x⋏y⋏z)u ⋏ (y⋏z)v = (x⋏y)u ⋏ (y⋏z)v for x,y,z in G and u,v in G¹.
/// G¹ is G when G already has an identity, otherwise G with e adjoined.
CheckReport check_meet_exchange(const AbstractSystem& s);

/// (x⋏y)z = xz⋏yz for x,y,z in G.
CheckReport check_right_distributive(const AbstractSystem& s);

/// xv⋏uv⋏uy⋏xy = xv⋏uv⋏uy for x,y,u,v in G¹ such that all four products
/// lie in G.
CheckReport check_square_closure(const AbstractSystem& s);

/// Conditions for (G,·,⋏,χ) with the stored χ: χ is a left regular, right
/// negative quasi-order containing the natural order, left distributivity,
/// and the three χ/order conditions with u ranging over G and the empty
/// symbol. Throws UsageError if χ is absent.
CheckReport check_projection_conditions(const AbstractSystem& s);

/// check_projection_conditions plus right distributivity.
CheckReport check_projection_conditions_invertible(const AbstractSystem& s);

/// x ⊢ y iff x ⊏ xy, for all x, y. Throws UsageError if χ is absent.
CheckReport check_delta_chi_link(const AbstractSystem& s);

}  // namespace pfsemi
