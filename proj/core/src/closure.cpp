#include "pfsemi/closure.hpp"

#include <map>
#include <string>
#include <tuple>

#include "pfsemi/axioms.hpp"
#include "pfsemi/errors.hpp"
#include "scanners.hpp"

namespace pfsemi {

bool star_leq(const AbstractSystem& s, StarElement a, StarElement b) {
  if (a.is_e() || b.is_e()) {
    return a.is_e() && b.is_e();
  }
  return s.meet(a.index(), b.index()) == a.index();
}

bool star_delta(const AbstractSystem& s, StarElement a, StarElement b) {
  if (b.is_e()) {
    return true;
  }
  if (a.is_e()) {
    return false;
  }
  return s.delta().test(a.index(), b.index());
}

bool boxdot_leq(const AbstractSystem& s, StarElement x, StarElement y,
                StarElement z) {
  return star_delta(s, x, y) && star_leq(s, star_mul(s, x, y), z);
}

ClosureOperator::ClosureOperator(const AbstractSystem& s)
    : s_(s), order_(s.size()) {
  if (!is_structurally_valid(s_)) {
    throw UsageError(
        "closure: requires an associative product and a semilattice meet");
  }
  order_ = natural_order(s_);
}

void ClosureOperator::require_universe(const ElementSet& h) const {
  if (h.universe() != s_.size()) {
    throw UsageError("closure: element set is over " +
                     std::to_string(h.universe()) +
                     " elements, system has " + std::to_string(s_.size()));
  }
}

ElementSet ClosureOperator::step(const ElementSet& h) const {
  require_universe(h);
  const auto m = s_.size();
  const auto range = star_range(s_);

  // a = (u⋏v⋏w)x with both anchors in H.
  ElementSet anchored = ElementSet::none(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      auto uv = s_.meet(u, v);
      if (!h.contains(uv)) {
        continue;
      }
      for (std::size_t w = 0; w < m; ++w) {
        auto vw = StarElement::elem(s_.meet(v, w));
        auto uvw = StarElement::elem(s_.meet(uv, w));
        for (auto x : range) {
          if (h.contains(star_mul(s_, vw, x).index())) {
            anchored.insert(star_mul(s_, uvw, x).index());
          }
        }
      }
    }
  }

  // b = ay with a ⊢ y.
  ElementSet reached = ElementSet::none(m);
  for (auto a : anchored.members()) {
    for (auto y : range) {
      if (star_delta(s_, StarElement::elem(a), y)) {
        reached.insert(star_mul(s_, StarElement::elem(a), y).index());
      }
    }
  }

  // z with b ≤ zt for some t.
  ElementSet out = ElementSet::none(m);
  for (std::size_t z = 0; z < m; ++z) {
    for (auto t : range) {
      auto zt = star_mul(s_, StarElement::elem(z), t).index();
      bool hit = false;
      for (auto b : reached.members()) {
        if (order_.test(b, zt)) {
          hit = true;
          break;
        }
      }
      if (hit) {
        out.insert(z);
        break;
      }
    }
  }
  return out;
}

ClosureResult ClosureOperator::close(const ElementSet& h) const {
  ClosureResult result{h, 0};
  while (true) {
    auto next = step(result.set);
    if (next == result.set) {
      return result;
    }
    result.set = next;
    ++result.iterations;
  }
}

bool ClosureOperator::is_closed(const ElementSet& h) const {
  require_universe(h);
  const auto m = s_.size();
  const auto range = star_range(s_);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      if (!h.contains(s_.meet(u, v))) {
        continue;
      }
      for (std::size_t w = 0; w < m; ++w) {
        auto vw = StarElement::elem(s_.meet(v, w));
        auto uvw = StarElement::elem(s_.meet(s_.meet(u, v), w));
        for (auto x : range) {
          if (!h.contains(star_mul(s_, vw, x).index())) {
            continue;
          }
          auto a = star_mul(s_, uvw, x);
          for (auto y : range) {
            if (!star_delta(s_, a, y)) {
              continue;
            }
            auto b = star_mul(s_, a, y);
            for (std::size_t z = 0; z < m; ++z) {
              if (h.contains(z)) {
                continue;
              }
              for (auto t : range) {
                if (star_leq(s_, b, star_mul(s_, StarElement::elem(z), t))) {
                  return false;
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool ClosureOperator::satisfies_rules(const ElementSet& h) const {
  require_universe(h);
  const auto m = s_.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (h.contains(s_.mul(x, y)) && !h.contains(x)) {
        return false;
      }
      if (h.contains(x) && s_.delta().test(x, y) && !h.contains(s_.mul(x, y))) {
        return false;
      }
      if (h.contains(x) && order_.test(x, y) && !h.contains(y)) {
        return false;
      }
    }
  }
  const auto range = star_range(s_);
  for (std::size_t g1 = 0; g1 < m; ++g1) {
    for (std::size_t g2 = 0; g2 < m; ++g2) {
      if (!h.contains(s_.meet(g1, g2))) {
        continue;
      }
      for (std::size_t g3 = 0; g3 < m; ++g3) {
        auto g23 = StarElement::elem(s_.meet(g2, g3));
        auto g123 = StarElement::elem(s_.meet(s_.meet(g1, g2), g3));
        for (auto x : range) {
          if (h.contains(star_mul(s_, g23, x).index()) &&
              !h.contains(star_mul(s_, g123, x).index())) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Relation ClosureOperator::chi0() const {
  Relation out(s_.size());
  for (std::size_t g = 0; g < s_.size(); ++g) {
    out.set_row(g, close(ElementSet::singleton(s_.size(), g)).set);
  }
  return out;
}

ElementSet closure_step(const AbstractSystem& s, const ElementSet& h) {
  return ClosureOperator(s).step(h);
}

ClosureResult f_closure(const AbstractSystem& s, const ElementSet& h) {
  return ClosureOperator(s).close(h);
}

bool is_f_closed(const AbstractSystem& s, const ElementSet& h) {
  return ClosureOperator(s).is_closed(h);
}

bool is_f_closed_by_rules(const AbstractSystem& s, const ElementSet& h) {
  return ClosureOperator(s).satisfies_rules(h);
}

Relation chi0(const AbstractSystem& s) { return ClosureOperator(s).chi0(); }

bool satisfies_closure_hypotheses(const AbstractSystem& s) {
  if (!is_structurally_valid(s)) {
    return false;
  }
  auto order = natural_order(s);
  return !scan::left_ideal(s, s.delta()) &&
         check_left_distributive(s).all_pass() &&
         !scan::meet_product_order(s, order, false);
}

namespace {

void require_chi_size(const AbstractSystem& s, const Relation& chi) {
  if (chi.size() != s.size()) {
    throw UsageError("chi conditions: relation has the wrong size");
  }
  if (!is_structurally_valid(s)) {
    throw UsageError(
        "chi conditions: requires an associative product and a semilattice meet");
  }
}

}  // namespace

CheckReport check_chi_conditions(const AbstractSystem& s, const Relation& chi) {
  require_chi_size(s, chi);
  auto order = natural_order(s);
  CheckReport report;
  report.add("chi.quasi-order", scan::quasi_order(chi));
  report.add("chi.left-regular", scan::left_regular(s, chi));
  report.add("chi.right-negative", scan::right_negative(s, chi));
  report.add("order-in-chi", scan::contains(chi, order));
  report.add("delta-chi-product", scan::delta_implies_chi_product(s, chi));
  report.add("chi-meet-product", scan::chi_meet_product(s, chi));
  return report;
}

namespace {

bool passes_with_order(const AbstractSystem& s, const Relation& chi,
                       const Relation& order) {
  return !scan::contains(chi, order) && !scan::quasi_order(chi) &&
         !scan::delta_implies_chi_product(s, chi) &&
         !scan::right_negative(s, chi) && !scan::left_regular(s, chi) &&
         !scan::chi_meet_product(s, chi);
}

}  // namespace

bool passes_chi_conditions(const AbstractSystem& s, const Relation& chi) {
  require_chi_size(s, chi);
  return passes_with_order(s, chi, natural_order(s));
}

CheckReport check_minimality_of(const AbstractSystem& s,
                                const Relation& candidate) {
  const auto m = s.size();
  if (m > kMaxMinimalityElements) {
    throw UsageError("minimality check: system has " + std::to_string(m) +
                     " elements, limit is " +
                     std::to_string(kMaxMinimalityElements));
  }
  require_chi_size(s, candidate);
  auto order = natural_order(s);
  const std::uint64_t count = std::uint64_t{1} << (m * m);
  const std::uint64_t row_mask = (std::uint64_t{1} << m) - 1;

  std::uint64_t order_bits = 0;
  for (std::size_t x = 0; x < m; ++x) {
    order_bits |= order.row_bits(x) << (x * m);
  }

  CheckReport report;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if ((order_bits & ~bits) != 0) {
      continue;  // cannot contain the natural order
    }
    Relation r(m);
    for (std::size_t x = 0; x < m; ++x) {
      r.set_row(x, ElementSet(m, (bits >> (x * m)) & row_mask));
    }
    if (candidate.subset_of(r) || !passes_with_order(s, r, order)) {
      continue;
    }
    Witness w;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        w.push_back(r.test(x, y) ? 1 : 0);
      }
    }
    report.fail("chi0-minimal", std::move(w));
    return report;
  }
  report.pass("chi0-minimal");
  return report;
}

CheckReport check_chi0_minimality(const AbstractSystem& s) {
  if (s.size() > kMaxMinimalityElements) {
    throw UsageError("minimality check: system has " + std::to_string(s.size()) +
                     " elements, limit is " +
                     std::to_string(kMaxMinimalityElements));
  }
  return check_minimality_of(s, chi0(s));
}

namespace {

class UnrolledSearch {
 public:
  UnrolledSearch(const AbstractSystem& s, const ElementSet& h, int depth,
                 UnrolledReading reading)
      : s_(s), h_(h), reading_(reading), range_(star_range(s)),
        first_leaf_(1 << (depth - 1)) {}

  bool root(std::size_t z) { return node(1, z, 0); }

 private:
  bool leq(std::size_t a, std::size_t b) const { return s_.meet(a, b) == a; }

  // ∃ y, t in G*: a ⊢ y ∧ ay ≤ target·t.
  bool boxdot_reaches(StarElement a, std::size_t target) const {
    for (auto y : range_) {
      if (!star_delta(s_, a, y)) {
        continue;
      }
      auto ay = star_mul(s_, a, y).index();
      for (auto t : range_) {
        if (leq(ay, star_mul(s_, StarElement::elem(target), t).index())) {
          return true;
        }
      }
    }
    return false;
  }

  bool node(int index, std::size_t target, std::size_t root_u) {
    const bool leaf = index >= first_leaf_;
    auto key = std::make_tuple(leaf, target, root_u, index == 1);
    if (index != 1) {
      if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
      }
    }
    const auto m = s_.size();
    bool found = false;
    for (std::size_t u = 0; u < m && !found; ++u) {
      for (std::size_t v = 0; v < m && !found; ++v) {
        for (std::size_t w = 0; w < m && !found; ++w) {
          auto uvw = StarElement::elem(s_.meet(s_.meet(u, v), w));
          auto vw = StarElement::elem(s_.meet(v, w));
          for (auto x : range_) {
            auto a = star_mul(s_, uvw, x);
            if (!boxdot_reaches(a, target)) {
              continue;
            }
            const std::size_t anchor_u =
                index == 1 ? u : root_u;
            if (leaf) {
              auto first = reading_ == UnrolledReading::Literal
                               ? s_.meet(anchor_u, v)
                               : s_.meet(u, v);
              if (h_.contains(first) &&
                  h_.contains(star_mul(s_, vw, x).index())) {
                found = true;
                break;
              }
              continue;
            }
            auto second = reading_ == UnrolledReading::Literal
                              ? star_mul(s_, StarElement::elem(v), x).index()
                              : star_mul(s_, vw, x).index();
            if (node(2 * index, s_.meet(u, v), anchor_u) &&
                node(2 * index + 1, second, anchor_u)) {
              found = true;
              break;
            }
          }
        }
      }
    }
    if (index != 1) {
      memo_[key] = found;
    }
    return found;
  }

  const AbstractSystem& s_;
  const ElementSet& h_;
  UnrolledReading reading_;
  std::vector<StarElement> range_;
  int first_leaf_;
  std::map<std::tuple<bool, std::size_t, std::size_t, bool>, bool> memo_;
};

}  // namespace

bool unrolled_membership(const AbstractSystem& s, std::size_t z,
                         const ElementSet& h, int depth,
                         UnrolledReading reading) {
  if (depth < 1 || depth > kMaxUnrolledDepth) {
    throw UsageError("unrolled membership: depth must be 1 or 2, got " +
                     std::to_string(depth));
  }
  if (z >= s.size() || h.universe() != s.size()) {
    throw UsageError("unrolled membership: element or set outside the carrier");
  }
  if (!is_structurally_valid(s)) {
    throw UsageError(
        "unrolled membership: requires an associative product and a semilattice meet");
  }
  return UnrolledSearch(s, h, depth, reading).root(z);
}

}  // namespace pfsemi
