#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lenscalc/rho_engine.hpp"

namespace lenscalc::cli
{
    enum class Suite
    {
        Eigenspace,
        Rationality,
        Transfer,
        Factorization,
        Splitting,
        ClosedFormRegression,
        SnfProperties
    };

    const char *to_string(Suite s);
    std::optional<Suite> suite_from_string(const std::string &s);
    const std::vector<Suite> &all_suites();

    struct SweepSpec
    {
        std::vector<long> Ns;
        long d_min = 2, d_max = 2;
        long k_min = 0, k_max = 0;
        std::vector<Suite> suites;
        bool mutate_scale_column = false;

        /// Throws std::invalid_argument when the grid or suite list is unusable.
        void validate() const;
    };

    struct TupleResult
    {
        long N = 0, d = 0, k = 0;
        Suite suite = Suite::Eigenspace;
        std::vector<CheckResult> checks;
        std::string error;

        bool passed() const;
    };

    struct Report
    {
        SweepSpec spec;
        std::vector<TupleResult> results;

        std::size_t passed_count() const;
        std::size_t failed_count() const;
        bool all_passed() const { return failed_count() == 0; }

        nlohmann::json to_json() const;
        std::string to_markdown() const;
    };

    /// Closed-form bookkeeping: generator counts, ranks, the structure-set
    /// identity S = F + K_N and source/kernel/image order consistency.
    VerificationReport verify_closed_form_regression(long N, long d, long k);

    /// U A V = D with unimodular U, V and a divisibility chain, for the rho
    /// matrix and the preimage block.
    VerificationReport verify_snf_properties(long N, long d, long k);

    /// LENSCALC_THREADS if set and positive, otherwise hardware concurrency.
    unsigned sweep_threads();

    /// Results are ordered by (N, d, k, suite) regardless of thread count.
    Report run_sweep(const SweepSpec &spec, unsigned threads = sweep_threads());
}
