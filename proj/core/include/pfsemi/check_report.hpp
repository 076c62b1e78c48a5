#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfsemi {

// A witness is a tuple of element indices; kWitnessE stands for the adjoined
// element (printed as "e").
using Witness = std::vector<long>;
inline constexpr long kWitnessE = -1;

enum class Verdict { Pass, Fail };

struct CheckRecord {
  std::string condition;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;  // present iff verdict == Fail

  bool passed() const { return verdict == Verdict::Pass; }
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

class CheckReport {
 public:
  void add(std::string condition, std::optional<Witness> failure);
  void pass(std::string condition) { add(std::move(condition), std::nullopt); }
  void fail(std::string condition, Witness witness) {
    add(std::move(condition), std::move(witness));
  }
  void append(const CheckReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  bool all_pass() const;
  const CheckRecord* first_failure() const;
  const CheckRecord* find(std::string_view condition) const;

  /// One line per record: "<id> PASS" or "<id> FAIL witness=(i,j,...)".
  std::string to_text() const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;

 private:
  std::vector<CheckRecord> records_;
};

std::string format_witness(const Witness& w);

}  // namespace pfsemi
