#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "znz/deadline.hpp"
#include "znz/integer.hpp"

namespace znz {

struct BenchConfig {
    std::vector<long> n_values;
    std::vector<long> s_values;     // |s| pinned per configuration
    long trials = 1;
    std::uint64_t seed = 0;
    std::int64_t coord_bound = 16;
    long phi_ops = 20;              // elementary operations building phi
};

struct BenchRecord {
    long n;
    long s;
    std::int64_t coord_bound;
    std::uint64_t seed;             // instance seed
    std::string outcome;            // "conjugate" | "not-conjugate"
    double wall_time_s;
};

/// Runs one conjugacy decision per (n, s, trial) in deterministic
/// order.  Instances come from a planted conjugator, so every decision
/// exercises the full search path; u's t-exponent is pinned to s so
/// the scaling in |s| is measured directly.  Rows are delivered
/// through `sink` as they complete; an expired deadline aborts with
/// the rows so far already delivered.
void run_bench(const BenchConfig& cfg, const Deadline* deadline,
               const std::function<void(const BenchRecord&)>& sink);

extern const char* const kBenchCsvHeader;  // "n,s,coord_bound,seed,outcome,wall_time_s"

void write_csv_row(std::ostream& out, const BenchRecord& r);

}  // namespace znz
