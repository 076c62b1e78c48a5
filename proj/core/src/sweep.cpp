#include "pfsemi/sweep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pfsemi/axioms.hpp"
#include "pfsemi/characterization.hpp"
#include "pfsemi/closure.hpp"
#include "pfsemi/representation.hpp"
#include "pfsemi/trans_semigroup.hpp"

namespace pfsemi {

namespace {

class Tally {
 public:
  void record(const std::string& condition, bool passed) {
    auto it = index_.find(condition);
    if (it == index_.end()) {
      it = index_.emplace(condition, rows_.size()).first;
      rows_.push_back({condition, 0, 0});
    }
    auto& row = rows_[it->second];
    ++row.total;
    row.passed += passed ? 1 : 0;
  }

  void record(const std::string& prefix, const CheckReport& report) {
    for (const auto& rec : report.records()) {
      record(prefix + rec.condition, rec.passed());
    }
  }

  std::vector<SweepRow> rows() const { return rows_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<SweepRow> rows_;
};

// Intersection of domains over H must lie in the domain of everything in the
// closure of H.
bool domain_intersection_holds(const TransSemigroup& phi,
                               const ClosureOperator& op) {
  const auto m = phi.size();
  const auto full = PointSet((phi.base_size() >= 64)
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << phi.base_size()) - 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    ElementSet h(m, bits);
    PointSet common = full;
    for (auto i : h.members()) {
      common = common & phi[i].domain();
    }
    for (auto j : op.close(h).set.members()) {
      if (!common.subset_of(phi[j].domain())) {
        return false;
      }
    }
  }
  return true;
}

struct ClosureLaws {
  bool definition_matches_rules = true;
  bool chain_monotone = true;
  bool fixpoint_closed = true;
};

ClosureLaws closure_laws(const ClosureOperator& op) {
  ClosureLaws laws;
  const auto m = op.system().size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    ElementSet h(m, bits);
    bool closed = op.is_closed(h);
    if (closed != op.satisfies_rules(h)) {
      laws.definition_matches_rules = false;
    }
    if (closed && op.step(h) != h) {
      laws.fixpoint_closed = false;
    }
    auto current = h;
    while (true) {
      auto next = op.step(current);
      if (!current.subset_of(next)) {
        laws.chain_monotone = false;
        break;
      }
      if (next == current) {
        break;
      }
      current = next;
    }
    if (!op.is_closed(current)) {
      laws.fixpoint_closed = false;
    }
  }
  return laws;
}

std::vector<ElementSet> small_sets(std::size_t m, std::size_t max_members) {
  std::vector<ElementSet> out;
  for (std::size_t a = 0; a < m; ++a) {
    out.push_back(ElementSet::singleton(m, a));
    if (max_members < 2) {
      continue;
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      ElementSet h = ElementSet::singleton(m, a);
      h.insert(b);
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace

bool SweepSummary::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.passed == r.total; });
}

std::string SweepSummary::to_text() const {
  std::ostringstream out;
  out << "sweep base=" << base_size << " systems=" << systems
      << " invertible-systems=" << invertible_systems << '\n';
  std::size_t width = 9;
  for (const auto& r : rows) {
    width = std::max(width, r.condition.size());
  }
  out << "condition" << std::string(width - 9 + 2, ' ') << "pass/total\n";
  for (const auto& r : rows) {
    out << r.condition << std::string(width - r.condition.size() + 2, ' ')
        << r.passed << '/' << r.total
        << (r.passed == r.total ? "" : "  FAIL") << '\n';
  }
  for (const auto& n : notes) {
    out << "note " << n << '\n';
  }
  out << (all_pass() ? "result PASS" : "result FAIL") << '\n';
  return out.str();
}

SweepSummary run_sweep(std::size_t base_size, const SweepLimits& limits) {
  SweepSummary summary;
  summary.base_size = base_size;
  Tally tally;
  std::size_t literal_disagreements = 0;

  enumerate_all(base_size, true, false, [&](const TransSemigroup& phi) {
    ++summary.systems;
    const auto s = extract_abstract(phi);
    const auto m = s.size();

    tally.record("intersection/", check_preset(s, Preset::Intersection, false));
    tally.record("projection/", check_preset(s, Preset::ProjectionDelta, false));

    const ClosureOperator op(s);
    if (m <= limits.chi0) {
      tally.record("delta/", check_delta_conditions(s, false));
      auto least = op.chi0();
      tally.record("chi0/conditions", passes_chi_conditions(s, least));
      tally.record("chi0/within-chi", least.subset_of(*s.chi()));
    }
    if (m <= limits.domain_intersection) {
      tally.record("domain-intersection", domain_intersection_holds(phi, op));
    }
    if (m <= limits.closure_subsets) {
      auto laws = closure_laws(op);
      tally.record("closure/definition-vs-rules", laws.definition_matches_rules);
      tally.record("closure/monotone-chain", laws.chain_monotone);
      tally.record("closure/fixpoint-closed", laws.fixpoint_closed);
    }
    if (m <= limits.unrolled_depth1) {
      bool agree = true;
      for (const auto& h : small_sets(m, 2)) {
        auto stepped = op.step(h);
        for (std::size_t z = 0; z < m; ++z) {
          agree = agree && unrolled_membership(s, z, h, 1) == stepped.contains(z);
        }
      }
      tally.record("closure/unrolled-depth1", agree);
    }
    if (m <= limits.unrolled_depth2) {
      bool agree = true;
      for (const auto& h : small_sets(m, 1)) {
        auto twice = op.step(op.step(h));
        for (std::size_t z = 0; z < m; ++z) {
          agree = agree && unrolled_membership(s, z, h, 2) == twice.contains(z);
          if (unrolled_membership(s, z, h, 2, UnrolledReading::Literal) !=
              twice.contains(z)) {
            ++literal_disagreements;
          }
        }
      }
      tally.record("closure/unrolled-depth2", agree);
    }
    if (m <= limits.minimality) {
      tally.record("chi0/minimal", check_chi0_minimality(s).all_pass());
    }
    if (base_size * m <= kMaxSearchWork) {
      auto outcome = find_representation(s, {base_size, false});
      bool ok = outcome.status == SearchStatus::Found &&
                verify_representation(s, *outcome.representation).all_pass();
      tally.record("representation/round-trip", ok);
    }
  });

  enumerate_all(base_size, true, true, [&](const TransSemigroup& phi) {
    ++summary.invertible_systems;
    const auto s = extract_abstract(phi);
    tally.record("invertible/", check_preset(s, Preset::Intersection, true));
  });

  summary.rows = tally.rows();
  summary.notes.push_back("unrolled-depth2-literal-reading-disagreements=" +
                          std::to_string(literal_disagreements));
  return summary;
}

}  // namespace pfsemi
