#include "znz/bench.hpp"

#include <chrono>

#include "znz/conjugacy.hpp"
#include "znz/oracle.hpp"
#include "znz/rng.hpp"

namespace znz {

const char* const kBenchCsvHeader = "n,s,coord_bound,seed,outcome,wall_time_s";

void run_bench(const BenchConfig& cfg, const Deadline* deadline,
               const std::function<void(const BenchRecord&)>& sink) {
    if (cfg.trials < 0) throw UsageError("trial count must be nonnegative");
    if (cfg.n_values.empty() || cfg.s_values.empty()) throw UsageError("bench ranges must be nonempty");
    for (long n : cfg.n_values) {
        for (long s : cfg.s_values) {
            if (n < 1 || s < 0) throw UsageError("bench requires n >= 1 and s >= 0");
            for (long trial = 0; trial < cfg.trials; ++trial) {
                std::uint64_t inst_seed = Rng::mix(cfg.seed, Rng::mix(static_cast<std::uint64_t>(n),
                                                  Rng::mix(static_cast<std::uint64_t>(s),
                                                           static_cast<std::uint64_t>(trial))));
                if (deadline) {
                    deadline->check("bench n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                    " trial=" + std::to_string(trial));
                }
                AbcGroup g(static_cast<std::size_t>(n),
                           random_unimodular(static_cast<std::size_t>(n), cfg.phi_ops,
                                             Rng::mix(inst_seed, 0x01)));
                GroupElement u = random_element(g, cfg.coord_bound, 0, Rng::mix(inst_seed, 0x02));
                u.k = s;
                GroupElement a = random_element(g, cfg.coord_bound, s > 0 ? s : 1,
                                                Rng::mix(inst_seed, 0x03));
                GroupElement v = conjugate(g, a, u);

                auto t0 = std::chrono::steady_clock::now();
                ConjugacyOutcome out = conjugacy(g, u, v, deadline);
                auto t1 = std::chrono::steady_clock::now();
                double secs = std::chrono::duration<double>(t1 - t0).count();

                sink(BenchRecord{n, s, cfg.coord_bound, inst_seed,
                                 out.conjugate() ? "conjugate" : "not-conjugate", secs});
            }
        }
    }
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
    out << r.n << ',' << r.s << ',' << r.coord_bound << ',' << r.seed << ',' << r.outcome << ','
        << r.wall_time_s << '\n';
}

}  // namespace znz
