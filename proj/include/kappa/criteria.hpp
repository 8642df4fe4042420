// The acceptance criteria as runnable checks. Shared by the acceptance test
// binary and `kappa selftest`.

#ifndef KAPPA_CRITERIA_HPP_
#define KAPPA_CRITERIA_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kappa::criteria {

  struct Result {
    int         id;
    std::string name;
    bool        passed;
    std::string detail;
    double      seconds;
  };

  struct Options {
    std::uint64_t seed = 20261016;
    // Multiplies the instance counts; 1.0 gives the full suite.
    double scale = 1.0;
  };

  //! Runs all eleven criteria in order.
  std::vector<Result> run_all(Options const& options = {});

}  // namespace kappa::criteria

#endif  // KAPPA_CRITERIA_HPP_
