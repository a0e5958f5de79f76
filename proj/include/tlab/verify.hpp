#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0 = hardware parallelism
};

/// The acceptance suites, numbered 1..10. Criteria that share work (the
/// exhaustive small-graph scan feeds 1, 3 and 5) compute it once per suite.
class AcceptanceSuite {
 public:
  explicit AcceptanceSuite(SuiteOptions options = {});
  ~AcceptanceSuite();
  AcceptanceSuite(const AcceptanceSuite&) = delete;
  AcceptanceSuite& operator=(const AcceptanceSuite&) = delete;

  static constexpr int kCount = 10;
  /// Runs one criterion; never throws for suite failures (they become a
  /// failed result whose detail carries the error message).
  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

  struct Cache;  // results shared between criteria

 private:
  SuiteOptions options_;
  std::unique_ptr<Cache> cache_;
};

/// "PASS  1  <title>  (<detail>)  <seconds>s"
std::string format_result(const CriterionResult& r);

}  // namespace tlab
