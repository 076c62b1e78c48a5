#include "pfsemi/check_report.hpp"

#include <algorithm>

namespace pfsemi {

void CheckReport::add(std::string condition, std::optional<Witness> failure) {
  CheckRecord rec;
  rec.condition = std::move(condition);
  rec.verdict = failure ? Verdict::Fail : Verdict::Pass;
  rec.witness = std::move(failure);
  records_.push_back(std::move(rec));
}

void CheckReport::append(const CheckReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool CheckReport::all_pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.passed(); });
}

const CheckRecord* CheckReport::first_failure() const {
  auto it = std::find_if(records_.begin(), records_.end(),
                         [](const CheckRecord& r) { return !r.passed(); });
  return it == records_.end() ? nullptr : &*it;
}

const CheckRecord* CheckReport::find(std::string_view condition) const {
  auto it = std::find_if(
      records_.begin(), records_.end(),
      [&](const CheckRecord& r) { return r.condition == condition; });
  return it == records_.end() ? nullptr : &*it;
}

std::string format_witness(const Witness& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += w[i] == kWitnessE ? std::string("e") : std::to_string(w[i]);
  }
  out += ')';
  return out;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& r : records_) {
    out += r.condition;
    if (r.passed()) {
      out += " PASS\n";
    } else {
      out += " FAIL witness=" + format_witness(*r.witness) + "\n";
    }
  }
  return out;
}

}  // namespace pfsemi
