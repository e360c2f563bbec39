// report.hpp - outcome of a randomized property suite.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mualcq {

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  /// Cases whose premise held, for suites with a premise.
  std::size_t non_vacuous = 0;
  /// The first few violations, for diagnostics.
  std::vector<std::string> failures;

  void fail(std::string what) {
    ++violations;
    if (failures.size() < 10) failures.push_back(std::move(what));
  }
  bool ok() const noexcept { return violations == 0; }
};

}  // namespace mualcq
