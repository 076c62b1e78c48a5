#pragma once

// Per-condition scans shared by the report builders and the fast predicates.
// Each returns the first violating tuple in row-major order, or nullopt.

#include <optional>

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/check_report.hpp"

namespace pfsemi::scan {

std::optional<Witness> quasi_order(const Relation& r);
std::optional<Witness> stable(const AbstractSystem& s, const Relation& r);
std::optional<Witness> left_regular(const AbstractSystem& s, const Relation& r);
std::optional<Witness> right_regular(const AbstractSystem& s, const Relation& r);
std::optional<Witness> left_ideal(const AbstractSystem& s, const Relation& r);
std::optional<Witness> right_negative(const AbstractSystem& s, const Relation& r);

// order ⊆ r, where `order` is the natural order.
std::optional<Witness> contains(const Relation& r, const Relation& order);

// r(x, y⋏z) ∧ r(x, (z⋏v)u) → r(x, (y⋏z⋏v)u), u over G and e.
std::optional<Witness> chi_meet_product(const AbstractSystem& s,
                                        const Relation& r);

// δ(x, y) → r(x, xy).
std::optional<Witness> delta_implies_chi_product(const AbstractSystem& s,
                                                 const Relation& r);

// r(x, x⋏y) → x ≤ y.
std::optional<Witness> chi_meet_order(const AbstractSystem& s, const Relation& r,
                                      const Relation& order);

// (x⋏y)u ≤ yu; u over G, and additionally e when `with_e`.
std::optional<Witness> meet_product_order(const AbstractSystem& s,
                                          const Relation& order, bool with_e);

}  // namespace pfsemi::scan
