#pragma once

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/check_report.hpp"

namespace pfsemi {

/// Conditions for (G,·,⋏,δ) to be a ∩-semigroup of partial maps with δ as
/// semiadjacency: delta.left-ideal, left-distributive, meet-product-order
/// ((x⋏y)z ≤ yz), chi0-meet-order ((x, x⋏y) ∈ chi0 → x ≤ y) and
/// chi0-product-delta ((x, xy) ∈ chi0 → x ⊢ y). With `invertible`, adds
/// right-distributive. Requires a valid structure (UsageError otherwise).
CheckReport check_delta_conditions(const AbstractSystem& s,
                                   bool invertible = false);

/// Condition presets selectable from the command line.
enum class Preset {
  Intersection = 1,     // ∩-semigroup axioms
  Projection = 3,       // with χ as domain inclusion
  ProjectionInvertible = 4,
  ProjectionDelta = 5,  // with χ and δ
  Delta = 7,            // δ only; χ is synthesized
};

/// Structural records first; if they fail the preset's identities are not
/// evaluated. `invertible` adds the injective-map conditions to every preset.
/// Throws UsageError if the preset needs χ and the system has none.
CheckReport check_preset(const AbstractSystem& s, Preset preset, bool invertible);

/// Every preset that applies to `s` (those needing χ only when present).
CheckReport check_all(const AbstractSystem& s, bool invertible);

}  // namespace pfsemi
