// verify.hpp -- the theorem verification harness: a dispatch table of
// exhaustive checks, per-n reports, and a deterministic parallel runner.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibwords/families.hpp"

namespace fibwords {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kBinaryGuard = 20;  // exhaustive 2^n sweeps
inline constexpr int kPermGuard = 8;     // exhaustive n! sweeps

enum class CheckStatus { Pass, Fail, DocumentedException };

std::string_view status_name(CheckStatus s);

/// Outcome of one theorem check at one n. counterexample is empty unless the
/// status is Fail, and then holds the lexicographically least witness. note
/// carries the explanation for documented exceptions (text output only).
struct NResult {
    int n = 0;
    CheckStatus status = CheckStatus::Pass;
    std::string counterexample;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int max_n = 0;       // 0 = table defaults; otherwise caps every range and raises guards
    int jobs = 1;
    int enum_guard = kDefaultEnumGuard;
};

struct TheoremReport {
    std::string id;
    int lo = 0;
    int hi = 0;
    std::vector<NResult> results;
    std::int64_t elapsed_ms = 0;

    bool failed() const;
};

/// One dispatch-table entry. The table is the single source of truth for the
/// CLI id list and help text.
struct TheoremSpec {
    std::string_view id;
    std::string_view summary;
    int default_lo;
    int default_hi;
    int guard;  // largest hi accepted without a --max-n override
    NResult (*check)(int n, const VerifyOptions& opts);
};

/// All theorem checks, ordered by id.
const std::vector<TheoremSpec>& theorem_table();
const TheoremSpec* find_theorem(std::string_view id);

/// Runs one theorem over [lo, hi]. Throws std::invalid_argument for unknown
/// ids or ranges beyond the effective guard (max(spec guard, opts.max_n)).
TheoremReport run_theorem(std::string_view id, int lo, int hi, const VerifyOptions& opts);

/// Runs every theorem in the table at its default range, capped at
/// opts.max_n when nonzero. Work is spread over opts.jobs threads; the
/// report vector and its contents do not depend on the scheduling.
std::vector<TheoremReport> run_all_theorems(const VerifyOptions& opts);

}  // namespace fibwords
