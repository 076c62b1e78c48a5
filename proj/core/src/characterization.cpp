#include "pfsemi/characterization.hpp"

#include <set>
#include <string>

#include "pfsemi/axioms.hpp"
#include "pfsemi/closure.hpp"
#include "pfsemi/errors.hpp"
#include "scanners.hpp"

namespace pfsemi {

CheckReport check_delta_conditions(const AbstractSystem& s, bool invertible) {
  if (!is_structurally_valid(s)) {
    throw UsageError(
        "check_delta_conditions: requires an associative product and a "
        "semilattice meet");
  }
  auto order = natural_order(s);
  auto least = chi0(s);
  CheckReport report;
  report.add("delta.left-ideal", scan::left_ideal(s, s.delta()));
  report.append(check_left_distributive(s));
  report.add("meet-product-order", scan::meet_product_order(s, order, false));
  report.add("chi0-meet-order", scan::chi_meet_order(s, least, order));

  std::optional<Witness> bad;
  for (std::size_t x = 0; x < s.size() && !bad; ++x) {
    for (std::size_t y = 0; y < s.size() && !bad; ++y) {
      if (least.test(x, s.mul(x, y)) && !s.delta().test(x, y)) {
        bad = Witness{long(x), long(y)};
      }
    }
  }
  report.add("chi0-product-delta", bad);
  if (invertible) {
    report.append(check_right_distributive(s));
  }
  return report;
}

CheckReport check_preset(const AbstractSystem& s, Preset preset,
                         bool invertible) {
  const bool needs_chi = preset == Preset::Projection ||
                         preset == Preset::ProjectionInvertible ||
                         preset == Preset::ProjectionDelta;
  if (needs_chi && !s.chi()) {
    throw UsageError("preset " + std::to_string(static_cast<int>(preset)) +
                     " needs a chi block in the algebra file");
  }
  CheckReport report = is_semigroup(s);
  report.append(is_semilattice(s));
  if (!report.all_pass()) {
    return report;
  }
  switch (preset) {
    case Preset::Intersection:
      report.append(check_left_distributive(s));
      report.append(check_meet_exchange(s));
      if (invertible) {
        report.append(check_right_distributive(s));
        report.append(check_square_closure(s));
      }
      break;
    case Preset::Projection:
    case Preset::ProjectionInvertible:
      if (invertible || preset == Preset::ProjectionInvertible) {
        report.append(check_projection_conditions_invertible(s));
      } else {
        report.append(check_projection_conditions(s));
      }
      break;
    case Preset::ProjectionDelta:
      report.append(invertible ? check_projection_conditions_invertible(s)
                               : check_projection_conditions(s));
      report.append(check_delta_chi_link(s));
      break;
    case Preset::Delta:
      report.append(check_delta_conditions(s, invertible));
      break;
  }
  return report;
}

CheckReport check_all(const AbstractSystem& s, bool invertible) {
  std::vector<Preset> presets = {Preset::Intersection, Preset::Delta};
  if (s.chi()) {
    presets.push_back(Preset::ProjectionDelta);
  }
  CheckReport out;
  std::set<std::string> seen;
  for (auto p : presets) {
    auto report = check_preset(s, p, invertible);
    for (const auto& rec : report.records()) {
      if (seen.insert(rec.condition).second) {
        out.add(rec.condition, rec.witness);
      }
    }
  }
  return out;
}

}  // namespace pfsemi
