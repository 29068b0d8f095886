#ifndef DAGCODE_SELFTEST_HPP
#define DAGCODE_SELFTEST_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dagcode/counting.hpp"

namespace dagcode {

/// Trees are checked exhaustively up to this many vertices.
inline constexpr std::size_t kSelftestMaxTreeSize = 6;

struct SelftestReport {
  struct CountRow {
    std::size_t n = 0;
    BigCount robinson;
    std::size_t dags = 0;
    std::size_t sequences = 0;
  };

  struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
  };

  std::vector<CountRow> counts;
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs the counting oracles for n = 1..n_max, both codec round-trips over
/// the enumerated corpora, and the Prufer bridge over every tree with
/// 2..kSelftestMaxTreeSize vertices. Throws std::out_of_range unless
/// 1 <= n_max <= kMaxEnumeration.
SelftestReport run_selftest(std::size_t n_max);

/// Count table followed by one PASS/FAIL line per check.
std::string format_report(const SelftestReport& report);

}  // namespace dagcode

#endif  // DAGCODE_SELFTEST_HPP
