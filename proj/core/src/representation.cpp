#include "pfsemi/representation.hpp"

#include <algorithm>
#include <string>

#include "pfsemi/axioms.hpp"
#include "pfsemi/characterization.hpp"
#include "pfsemi/errors.hpp"

namespace pfsemi {

CheckReport verify_representation(const AbstractSystem& s,
                                  const Representation& r) {
  const auto m = s.size();
  if (r.assignment.size() != m) {
    throw UsageError("verify_representation: assignment has " +
                     std::to_string(r.assignment.size()) +
                     " maps, system has " + std::to_string(m) + " elements");
  }
  for (const auto& f : r.assignment) {
    if (f.base_size() != r.base_size) {
      throw UsageError("verify_representation: map " + to_literal(f) +
                       " is not on base size " + std::to_string(r.base_size));
    }
  }
  const auto& p = r.assignment;
  CheckReport report;

  auto scan_pairs = [&](auto&& broken) -> std::optional<Witness> {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (broken(x, y)) {
          return Witness{long(x), long(y)};
        }
      }
    }
    return std::nullopt;
  };

  report.add("rep.injective", scan_pairs([&](auto x, auto y) {
    return x < y && p[x] == p[y];
  }));
  report.add("rep.mul", scan_pairs([&](auto x, auto y) {
    return p[s.mul(x, y)] != compose(p[y], p[x]);
  }));
  report.add("rep.meet", scan_pairs([&](auto x, auto y) {
    return p[s.meet(x, y)] != meet(p[x], p[y]);
  }));
  report.add("rep.delta", scan_pairs([&](auto x, auto y) {
    return s.delta().test(x, y) != rel_delta(p[x], p[y]);
  }));
  if (s.chi()) {
    report.add("rep.chi", scan_pairs([&](auto x, auto y) {
      return s.chi()->test(x, y) != rel_chi(p[x], p[y]);
    }));
  }
  return report;
}

CheckReport representation_conditions(const AbstractSystem& s,
                                      bool invertible) {
  return check_preset(s, Preset::Delta, invertible);
}

namespace {

// Backtracking over candidate indices. Law tables are precomputed over the
// candidate list so the search never touches PartialMap values.
class Search {
 public:
  Search(const AbstractSystem& s, std::vector<PartialMap> candidates)
      : s_(s), cands_(std::move(candidates)), k_(cands_.size()) {
    then_.assign(k_ * k_, kNone);
    meet_.assign(k_ * k_, kNone);
    delta_.assign(k_ * k_, 0);
    chi_.assign(k_ * k_, 0);
    auto index = [&](const PartialMap& f) {
      auto it = std::lower_bound(cands_.begin(), cands_.end(), f);
      return (it != cands_.end() && *it == f)
                 ? static_cast<std::size_t>(it - cands_.begin())
                 : kNone;
    };
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = 0; b < k_; ++b) {
        then_[a * k_ + b] = index(compose(cands_[b], cands_[a]));
        meet_[a * k_ + b] = index(pfsemi::meet(cands_[a], cands_[b]));
        delta_[a * k_ + b] = rel_delta(cands_[a], cands_[b]);
        chi_[a * k_ + b] = rel_chi(cands_[a], cands_[b]);
      }
    }
  }

  std::optional<std::vector<PartialMap>> run() {
    assigned_.assign(s_.size(), kNone);
    used_.assign(k_, false);
    if (!extend(0)) {
      return std::nullopt;
    }
    std::vector<PartialMap> out;
    for (auto c : assigned_) {
      out.push_back(cands_[c]);
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Every law instance whose operands and result are among 0..k, and which
  // mentions k, holds.
  bool consistent(std::size_t k) const {
    const auto& a = assigned_;
    for (std::size_t x = 0; x <= k; ++x) {
      for (std::size_t y = 0; y <= k; ++y) {
        const std::size_t ax = a[x];
        const std::size_t ay = a[y];
        auto prod = s_.mul(x, y);
        if (prod <= k && (x == k || y == k || prod == k) &&
            then_[ax * k_ + ay] != a[prod]) {
          return false;
        }
        auto mt = s_.meet(x, y);
        if (mt <= k && (x == k || y == k || mt == k) &&
            meet_[ax * k_ + ay] != a[mt]) {
          return false;
        }
        if (x != k && y != k) {
          continue;
        }
        if (s_.delta().test(x, y) != static_cast<bool>(delta_[ax * k_ + ay])) {
          return false;
        }
        if (s_.chi() &&
            s_.chi()->test(x, y) != static_cast<bool>(chi_[ax * k_ + ay])) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == s_.size()) {
      return true;
    }
    for (std::size_t c = 0; c < k_; ++c) {
      if (used_[c]) {
        continue;
      }
      assigned_[k] = c;
      used_[c] = true;
      if (consistent(k) && extend(k + 1)) {
        return true;
      }
      used_[c] = false;
    }
    assigned_[k] = kNone;
    return false;
  }

  const AbstractSystem& s_;
  std::vector<PartialMap> cands_;
  std::size_t k_;
  std::vector<std::size_t> then_;
  std::vector<std::size_t> meet_;
  std::vector<std::uint8_t> delta_;
  std::vector<std::uint8_t> chi_;
  std::vector<std::size_t> assigned_;
  std::vector<bool> used_;
};

}  // namespace

SearchOutcome find_representation(const AbstractSystem& s,
                                  const SearchOptions& options) {
  if (options.max_base == 0 || options.max_base > kMaxSearchBase) {
    throw UsageError("find_representation: max base must be in 1.." +
                     std::to_string(kMaxSearchBase));
  }
  if (options.max_base * s.size() > kMaxSearchWork) {
    throw UsageError("find_representation: max base " +
                     std::to_string(options.max_base) + " times " +
                     std::to_string(s.size()) + " elements exceeds the limit " +
                     std::to_string(kMaxSearchWork));
  }
  SearchOutcome outcome;
  outcome.conditions = representation_conditions(s, options.invertible);
  if (!outcome.conditions.all_pass()) {
    outcome.status = SearchStatus::ConditionsFail;
    return outcome;
  }
  for (std::size_t n = 1; n <= options.max_base; ++n) {
    auto maps = all_maps(n);
    if (options.invertible) {
      std::erase_if(maps, [](const PartialMap& f) { return !is_invertible(f); });
    }
    if (maps.size() < s.size()) {
      continue;  // an injective assignment is impossible
    }
    if (auto found = Search(s, std::move(maps)).run()) {
      outcome.status = SearchStatus::Found;
      outcome.representation = Representation{n, std::move(*found)};
      return outcome;
    }
  }
  outcome.status = SearchStatus::NotFoundUpToBound;
  return outcome;
}

}  // namespace pfsemi
