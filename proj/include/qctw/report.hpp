#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qctw {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

/// Outcome of one verification check.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string name_, std::string ref) : name(std::move(name_)), paper_ref(std::move(ref)) {}

  std::string name;
  std::string paper_ref;  ///< short statement of the identity being checked
  CheckStatus status = CheckStatus::pass;
  std::size_t trials = 0;
  std::optional<double> max_abs_error;  ///< nullopt: exact comparison
  std::optional<std::string> counterexample;
  std::vector<std::string> warnings;

  bool passed() const { return status == CheckStatus::pass; }

  /// Records a failure; keeps the first counterexample.
  void fail(std::string example) {
    status = CheckStatus::fail;
    if (!counterexample) counterexample = std::move(example);
  }
  void fail_unless(bool ok, const std::string& example) {
    if (!ok) fail(example);
  }
};

}  // namespace qctw
