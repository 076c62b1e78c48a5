// pfsemi: command-line front end for the partial-map semigroup library.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pfsemi/abstract_system.hpp"
#include "pfsemi/characterization.hpp"
#include "pfsemi/closure.hpp"
#include "pfsemi/errors.hpp"
#include "pfsemi/partial_map.hpp"
#include "pfsemi/representation.hpp"
#include "pfsemi/sweep.hpp"
#include "pfsemi/trans_semigroup.hpp"

namespace {

using namespace pfsemi;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

ElementSet parse_set(const std::string& text, std::size_t m) {
  ElementSet h = ElementSet::none(m);
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string::npos ? std::string::npos
                                                               : comma - start);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw UsageError("--set: bad element index '" + field + "'");
    }
    if (v >= m) {
      throw UsageError("--set: element " + field + " out of range for size " +
                       std::to_string(m));
    }
    h.insert(v);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return h;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out;
}

int print_report(const CheckReport& report) {
  std::cout << report.to_text();
  return report.all_pass() ? 0 : kExitFail;
}

int run_check(const std::string& path, std::optional<int> theorem,
              bool invertible) {
  auto s = load_system(path);
  if (!theorem) {
    return print_report(check_all(s, invertible));
  }
  Preset preset;
  switch (*theorem) {
    case 1: preset = Preset::Intersection; break;
    case 3: preset = Preset::Projection; break;
    case 4: preset = Preset::ProjectionInvertible; break;
    case 5: preset = Preset::ProjectionDelta; break;
    case 7: preset = Preset::Delta; break;
    default:
      throw UsageError("--theorem must be one of 1, 3, 4, 5, 7");
  }
  return print_report(check_preset(s, preset, invertible));
}

int run_closure(const std::string& path, const std::string& set) {
  auto s = load_system(path);
  ClosureOperator op(s);
  auto result = op.close(parse_set(set, s.size()));
  std::cout << "closure " << join(result.set.members()) << '\n'
            << "iterations " << result.iterations << '\n';
  return 0;
}

int run_chi0(const std::string& path, bool minimality) {
  auto s = load_system(path);
  if (minimality && s.size() > kMaxMinimalityElements) {
    throw UsageError("--minimality: system has " + std::to_string(s.size()) +
                     " elements, limit is " +
                     std::to_string(kMaxMinimalityElements));
  }
  std::cout << "chi\n" << format_relation_rows(chi0(s));
  if (!minimality) {
    return 0;
  }
  return print_report(check_chi0_minimality(s));
}

int run_enumerate(std::size_t base, bool with_meet, bool invertible) {
  enumerate_all(base, with_meet, invertible, [](const TransSemigroup& phi) {
    std::cout << "begin\n";
    for (const auto& f : phi.elements()) {
      std::cout << to_literal(f) << '\n';
    }
    std::cout << "end\n";
  });
  return 0;
}

int run_extract(std::size_t base, const std::string& gens, bool with_meet) {
  auto generators = parse_map_list(gens);
  auto phi = generate(base, generators, with_meet);
  if (!with_meet) {
    // Reading off the meet table needs ∩-closure; this throws if absent.
    phi = TransSemigroup(phi.base_size(),
                         {phi.elements().begin(), phi.elements().end()}, true);
  }
  std::cout << serialize(extract_abstract(phi));
  return 0;
}

int run_find_rep(const std::string& path, std::size_t max_base, bool invertible) {
  auto s = load_system(path);
  auto outcome = find_representation(s, {max_base, invertible});
  switch (outcome.status) {
    case SearchStatus::Found:
      std::cout << "FOUND base=" << outcome.representation->base_size << '\n';
      for (const auto& f : outcome.representation->assignment) {
        std::cout << to_literal(f) << '\n';
      }
      return 0;
    case SearchStatus::NotFoundUpToBound:
      std::cout << "NOT-FOUND-UP-TO base=" << max_base << " (inconclusive)\n";
      return 0;
    case SearchStatus::ConditionsFail:
      std::cout << "CONDITIONS-FAIL\n" << outcome.conditions.to_text();
      return kExitFail;
  }
  return kExitError;
}

int run_sweep_command(std::size_t base) {
  auto summary = run_sweep(base);
  std::cout << summary.to_text();
  return summary.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-map semigroups: axiom checks, f-closure, representations"};
  app.require_subcommand(1);

  std::string file;
  std::optional<int> theorem;
  bool invertible = false;
  auto* check = app.add_subcommand("check", "Check a condition preset on an algebra file");
  check->add_option("file", file, "Algebra file")->required();
  check->add_option("--theorem", theorem, "Preset: 1, 3, 4, 5 or 7 (default: all applicable)");
  check->add_flag("--invertible", invertible, "Add the injective-map conditions");

  std::string set;
  auto* closure = app.add_subcommand("closure", "f-closure of an element set");
  closure->add_option("file", file, "Algebra file")->required();
  closure->add_option("--set", set, "Comma-separated element indices")->required();

  bool minimality = false;
  auto* chi0_cmd = app.add_subcommand("chi0", "Least chi relation synthesized from delta");
  chi0_cmd->add_option("file", file, "Algebra file")->required();
  chi0_cmd->add_flag("--minimality", minimality,
                     "Also verify minimality over all relations (at most 4 elements)");

  std::size_t base = 0;
  bool with_meet = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream all closed semigroups on a base set");
  enumerate->add_option("--base", base, "Base set size (1..3)")->required();
  enumerate->add_flag("--with-meet", with_meet, "Require closure under intersection");
  enumerate->add_flag("--invertible", invertible, "Injective maps only");

  std::string gens;
  auto* extract = app.add_subcommand("extract", "Algebra file of a generated semigroup");
  extract->add_option("--base", base, "Base set size")->required();
  extract->add_option("--gens", gens, "Generators, e.g. \"1,-;0,0\"")->required();
  extract->add_flag("--with-meet", with_meet, "Close under intersection as well");

  std::size_t max_base = 0;
  auto* find_rep = app.add_subcommand("find-rep", "Search for a concrete representation");
  find_rep->add_option("file", file, "Algebra file")->required();
  find_rep->add_option("--max-base", max_base, "Largest base set to try")->required();
  find_rep->add_flag("--invertible", invertible, "Injective maps only");

  auto* sweep = app.add_subcommand("sweep", "Run every property over the enumerated corpus");
  sweep->add_option("--base", base, "Base set size (1..3)")->required();

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) {
      known = known || sub->get_name() == argv[1];
    }
    if (!known) {
      std::cerr << "pfsemi: unknown subcommand '" << argv[1] << "'\n";
      return kExitError;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pfsemi: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (check->parsed()) return run_check(file, theorem, invertible);
    if (closure->parsed()) return run_closure(file, set);
    if (chi0_cmd->parsed()) return run_chi0(file, minimality);
    if (enumerate->parsed()) return run_enumerate(base, with_meet, invertible);
    if (extract->parsed()) return run_extract(base, gens, with_meet);
    if (find_rep->parsed()) return run_find_rep(file, max_base, invertible);
    if (sweep->parsed()) return run_sweep_command(base);
  } catch (const ParseError& e) {
    std::cerr << "pfsemi: " << file << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pfsemi: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
