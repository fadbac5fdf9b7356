// report.hpp -- stable text/JSON/CSV rendering of reports. Every renderer is
// deterministic; wall-clock fields are emitted as 0 unless timings is set.

#pragma once

#include <string>
#include <vector>

#include "fibwords/analysis.hpp"
#include "fibwords/partition.hpp"
#include "fibwords/verify.hpp"

namespace fibwords {

enum class OutputFormat { Text, Json, Csv };

/// Verify output: lines ordered by n first, then theorem id, followed by one
/// summary line per theorem.
std::string render_verify_text(const std::vector<TheoremReport>& reports, bool timings);

/// Single theorem: the report object
///   {"theorem": id, "range": [lo,hi], "results": [{"n","status","counterexample"}], "elapsed_ms": int}
/// Several theorems: a JSON array of those objects.
std::string render_verify_json(const std::vector<TheoremReport>& reports, bool timings);

std::string render_dist_text(const Dist& d);
std::string render_dist_text(const JointDist& d);
std::string render_dist_csv(const Dist& d);
std::string render_dist_csv(const JointDist& d);
std::string render_dist_json(const Dist& d);
std::string render_dist_json(const JointDist& d);

/// Words as JSON values: compact string when all letters are <= 9, array of
/// integers otherwise.
std::string word_json(const Word& w);

/// Partitions as decreasing integer arrays; the empty partition is [].
std::string partition_json(const Partition& p);

}  // namespace fibwords
