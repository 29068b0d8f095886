#include "dagcode/selftest.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dagcode/codec.hpp"
#include "dagcode/prufer.hpp"

namespace dagcode {

namespace {

// Sequences compared as sorted vectors of their sets.
using SeqKey = std::vector<LabelSet>;

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;

  void record(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }

  SelftestReport::Check as_check(std::string name) const {
    return {std::move(name), failed == 0,
            std::to_string(checked) + " checked, " + std::to_string(failed) + " failed"};
  }
};

// Every code of length n-2 over 1..n, as an odometer.
template <typename Visit>
void for_each_prufer_code(std::size_t n, Visit&& visit) {
  std::vector<Label> code(n - 2, 1);
  while (true) {
    visit(code);
    std::size_t pos = code.size();
    while (pos > 0 && code[pos - 1] == n) {
      code[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return;
    ++code[pos - 1];
  }
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SelftestReport run_selftest(std::size_t n_max) {
  if (n_max < 1 || n_max > kMaxEnumeration) {
    throw std::out_of_range("selftest supports 1 <= n_max <= " + std::to_string(kMaxEnumeration));
  }

  SelftestReport report;
  CountTable table;
  bool counts_agree = true;
  Tally round_trip_dag;
  Tally round_trip_seq;
  Tally encode_valid;
  Tally image_matches;

  for (std::size_t n = 1; n <= n_max; ++n) {
    SelftestReport::CountRow row;
    row.n = n;
    row.robinson = table.at(n);

    std::set<SeqKey> image;
    for_each_dag(n, [&](const LabeledDag& g) {
      ++row.dags;
      const SetSequence s = encode(g);
      encode_valid.record(validate_sequence(s));
      round_trip_dag.record(decode(s) == g);
      image.insert(s.sets());
    });

    std::set<SeqKey> sequences;
    for_each_sequence(n, [&](const SetSequence& s) {
      ++row.sequences;
      round_trip_seq.record(encode(decode(s)) == s);
      sequences.insert(s.sets());
    });

    // Injective (image has one entry per DAG) and onto the valid sequences.
    image_matches.record(image.size() == row.dags && image == sequences);

    counts_agree = counts_agree && row.robinson == row.dags && row.robinson == row.sequences;
    report.counts.push_back(std::move(row));
  }

  report.checks.push_back({"triple count", counts_agree, "recurrence = DAG oracle = sequence oracle"});
  report.checks.push_back(encode_valid.as_check("encode output valid"));
  report.checks.push_back(round_trip_dag.as_check("decode(encode(g)) = g"));
  report.checks.push_back(round_trip_seq.as_check("encode(decode(s)) = s"));
  report.checks.push_back(image_matches.as_check("encode image = valid sequences"));

  Tally cayley;
  Tally prufer_inverse;
  Tally bridge;
  for (std::size_t n = 2; n <= kSelftestMaxTreeSize; ++n) {
    std::set<std::vector<Edge>> trees;
    for_each_prufer_code(n, [&](const std::vector<Label>& code) {
      const LabeledTree t = prufer_decode(n, code);
      trees.insert(t.edges());
      prufer_inverse.record(prufer_encode(t).code == code && prufer_decode(n, prufer_encode(t).code) == t);
      bridge.record(encode(orient_tree(t)) == bridge_sequence(t));
    });
    cayley.record(trees.size() == power(n, n - 2));
  }
  report.checks.push_back(cayley.as_check("Cayley counts n^(n-2)"));
  report.checks.push_back(prufer_inverse.as_check("Prufer decode inverts encode"));
  report.checks.push_back(bridge.as_check("encode(orient(t)) = bridge sequence"));
  return report;
}

std::string format_report(const SelftestReport& report) {
  std::ostringstream os;
  os << "n\trecurrence\tdags\tsequences\n";
  for (const auto& row : report.counts) {
    os << row.n << '\t' << row.robinson << '\t' << row.dags << '\t' << row.sequences << '\n';
  }
  for (const auto& check : report.checks) {
    os << (check.passed ? "PASS" : "FAIL") << "  " << check.name << " (" << check.detail << ")\n";
  }
  os << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace dagcode
