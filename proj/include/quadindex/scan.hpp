#ifndef QUADINDEX_SCAN_HPP
#define QUADINDEX_SCAN_HPP

#include <iosfwd>

#include "quadindex/report.hpp"

namespace quadindex::scan {

enum class ScanFilter { All, Monogenic, NonMonogenic, Unknown };
std::string to_string(ScanFilter f);

enum class ScanFormat { Jsonl, Csv };

struct ScanRange {
    long lo = 0, hi = -1;  // inclusive; empty when lo > hi
};

struct ScanOptions {
    ScanRange n, a, b, c;
    ScanFilter filter = ScanFilter::All;
    ScanFormat format = ScanFormat::Jsonl;
    int jobs = 1;  // 1 = serial reference path; > 1 = OpenMP
    std::uint64_t seed = 0;
    arith::FactorBudget budget;
    unsigned long degree_cap = zpoly::kDefaultDegreeCap;
};

struct ScanSummary {
    std::uint64_t tuples_considered = 0;  // scope-applicable tuples classified
    std::uint64_t records = 0;            // records emitted after filtering
    std::uint64_t monogenic = 0;
    std::uint64_t not_monogenic = 0;
    std::uint64_t unknown = 0;
};

/// Classifies every scope-applicable (n, a, b, c) tuple of the ranges in
/// lexicographic order and streams one record per tuple passing the filter,
/// followed by one summary line. Output bytes are identical for any `jobs`
/// value: work is parallelized per tuple, results are merged in order, and
/// per-tuple seeds depend only on `seed` and the tuple.
ScanSummary run_scan(const ScanOptions& opts, std::ostream& out);

}  // namespace quadindex::scan

#endif
