#pragma once

#include <cstddef>
#include <vector>

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/bits.hpp"
#include "pfsemi/check_report.hpp"

namespace pfsemi {

// G* is G with a formal element e such that ee = e, e ≤ e, e ⊢ e, ex = xe = x
// and x ⊢ e. Nothing else involving e holds: e ≤ x and e ⊢ x are false for x
// in G.

/// x ≤ y on G*.
bool star_leq(const AbstractSystem& s, StarElement a, StarElement b);
/// x ⊢ y on G*.
bool star_delta(const AbstractSystem& s, StarElement a, StarElement b);
/// x ⊢ y and xy ≤ z.
bool boxdot_leq(const AbstractSystem& s, StarElement x, StarElement y,
                StarElement z);

struct ClosureResult {
  ElementSet set;
  // Number of closure steps that strictly enlarged the set.
  std::size_t iterations = 0;
};

/// The f-closure machinery over one system. Construction requires an
/// associative product and a semilattice meet (UsageError otherwise).
///
/// A set H is f-closed when
///   (u⋏v⋏w)x ⊢ y,  (u⋏v⋏w)xy ≤ zt,  u⋏v ∈ H,  (v⋏w)x ∈ H   imply  z ∈ H
/// for z,u,v,w in G and x,y,t in G*. One closure step maps H to the set of
/// all z for which the premise holds with some u,v,w,x,y,t.
class ClosureOperator {
 public:
  explicit ClosureOperator(const AbstractSystem& s);

  const AbstractSystem& system() const { return s_; }
  const Relation& order() const { return order_; }

  /// One closure step. H ⊆ step(H) for every H.
  ElementSet step(const ElementSet& h) const;

  /// Iterates step() to its fixpoint, the least f-closed superset of H.
  ClosureResult close(const ElementSet& h) const;

  /// The defining implication, checked over every tuple.
  bool is_closed(const ElementSet& h) const;

  /// The equivalent four-rule form:
  ///   xy ∈ H → x ∈ H;
  ///   g1 ⊢ g2 ∧ g1 ∈ H → g1g2 ∈ H;
  ///   g1 ≤ g2 ∧ g1 ∈ H → g2 ∈ H;
  ///   g1⋏g2 ∈ H ∧ (g2⋏g3)x ∈ H → (g1⋏g2⋏g3)x ∈ H, x in G*.
  bool satisfies_rules(const ElementSet& h) const;

  /// Row g is close({g}).
  Relation chi0() const;

 private:
  void require_universe(const ElementSet& h) const;

  AbstractSystem s_;
  Relation order_;
};

ElementSet closure_step(const AbstractSystem& s, const ElementSet& h);
ClosureResult f_closure(const AbstractSystem& s, const ElementSet& h);
bool is_f_closed(const AbstractSystem& s, const ElementSet& h);
bool is_f_closed_by_rules(const AbstractSystem& s, const ElementSet& h);
Relation chi0(const AbstractSystem& s);

/// The hypotheses under which chi0 is claimed to be a left regular, right
/// negative quasi-order: valid structure, left-ideal δ, left distributivity
/// and (x⋏y)z ≤ yz.
bool satisfies_closure_hypotheses(const AbstractSystem& s);

/// Records for `chi`: chi.quasi-order, chi.left-regular, chi.right-negative,
/// order-in-chi, delta-chi-product (g1 ⊢ g2 → g1 ⊏ g1g2) and
/// chi-meet-product (x ranging over G*).
CheckReport check_chi_conditions(const AbstractSystem& s, const Relation& chi);

/// Early-exit form of check_chi_conditions.
bool passes_chi_conditions(const AbstractSystem& s, const Relation& chi);

inline constexpr std::size_t kMaxMinimalityElements = 4;

/// Enumerates all 2^(m²) relations and checks that chi0 is contained in every
/// one passing check_chi_conditions. Single record "chi0-minimal"; a failure
/// carries the offending relation as row-major bits. m ≤ 4.
CheckReport check_chi0_minimality(const AbstractSystem& s);

/// Same, with an explicit candidate in place of chi0 (negative controls).
CheckReport check_minimality_of(const AbstractSystem& s, const Relation& candidate);

/// How the leaf conditions of the unrolled membership formula are read.
/// Indexed: leaf i requires u_i⋏v_i ∈ H and node 2i+1 targets (v_i⋏w_i)x_i.
/// Literal: leaves use u_1⋏v_i and node 2i+1 targets v_i x_i, as printed.
enum class UnrolledReading { Indexed, Literal };

inline constexpr int kMaxUnrolledDepth = 2;

/// Decides z ∈ F_n(H) (n applications of a closure step) by searching the
/// fully unrolled existential formula: a binary tree of 2^n - 1 premise
/// tuples, internal nodes feeding their children's targets and leaves
/// anchored in H. Independent of ClosureOperator. n must be 1 or 2.
bool unrolled_membership(const AbstractSystem& s, std::size_t z,
                         const ElementSet& h, int depth,
                         UnrolledReading reading = UnrolledReading::Indexed);

}  // namespace pfsemi
