#include "lenscalc/sweep.hpp"
#include "lenscalc/documents.hpp"
#include "lenscalc/smith.hpp"
#include "lenscalc/surgery_tables.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lenscalc::cli
{
    namespace
    {
        struct SuiteName
        {
            Suite suite;
            const char *name;
        };

        constexpr SuiteName kSuiteNames[] = {
            {Suite::Eigenspace, "eigenspace"},
            {Suite::Rationality, "rationality"},
            {Suite::Transfer, "transfer"},
            {Suite::Factorization, "factorization"},
            {Suite::Splitting, "splitting"},
            {Suite::ClosedFormRegression, "closed-form-regression"},
            {Suite::SnfProperties, "snf-properties"},
        };

        void add(VerificationReport &r, std::string name, bool ok, std::string expected, std::string actual)
        {
            r.checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
        }

        void add_eq(VerificationReport &r, std::string name, const Integer &expected, const Integer &actual)
        {
            add(r, std::move(name), expected == actual, expected.get_str(), actual.get_str());
        }

        void add_eq(VerificationReport &r, std::string name, const FinAbGroup &expected, const FinAbGroup &actual)
        {
            add(r, std::move(name), expected == actual, expected.to_string(), actual.to_string());
        }

        Integer two_power(unsigned long e)
        {
            Integer x;
            mpz_ui_pow_ui(x.get_mpz_t(), 2, e);
            return x;
        }

        bool is_unimodular(const IntMatrix &A)
        {
            return abs(determinant(A)) == 1;
        }

        void check_snf(VerificationReport &r, const std::string &label, const IntMatrix &A)
        {
            const SmithForm s = snf(A);
            add(r, label + ":UAV=D", s.U * A * s.V == s.D, "true", s.U * A * s.V == s.D ? "true" : "false");
            add(r, label + ":U-unimodular", is_unimodular(s.U), "|det U| = 1", determinant(s.U).get_str());
            add(r, label + ":V-unimodular", is_unimodular(s.V), "|det V| = 1", determinant(s.V).get_str());
            bool diag = is_diagonal(s.D);
            const auto inv = s.invariant_factors();
            bool chain = true;
            for (std::size_t i = 0; i < inv.size(); ++i)
            {
                if (inv[i] <= 0)
                    chain = false;
                if (i + 1 < inv.size() && inv[i + 1] % inv[i] != 0)
                    chain = false;
            }
            add(r, label + ":diagonal-chain", diag && chain, "diagonal with d_i | d_{i+1}",
                std::string(diag ? "diagonal" : "not diagonal") + (chain ? ", chain" : ", broken chain"));
        }
    }

    const char *to_string(Suite s)
    {
        for (const auto &n : kSuiteNames)
            if (n.suite == s)
                return n.name;
        return "?";
    }

    std::optional<Suite> suite_from_string(const std::string &s)
    {
        for (const auto &n : kSuiteNames)
            if (s == n.name)
                return n.suite;
        return std::nullopt;
    }

    const std::vector<Suite> &all_suites()
    {
        static const std::vector<Suite> all = [] {
            std::vector<Suite> v;
            for (const auto &n : kSuiteNames)
                v.push_back(n.suite);
            return v;
        }();
        return all;
    }

    void SweepSpec::validate() const
    {
        if (Ns.empty())
            throw std::invalid_argument("sweep needs at least one N");
        for (long N : Ns)
            if (N < 2)
                throw std::invalid_argument("every N must be at least 2");
        if (d_min < 2 || d_max < d_min)
            throw std::invalid_argument("d range must satisfy 2 <= d_min <= d_max");
        if (k_min < 0 || k_max < k_min)
            throw std::invalid_argument("k range must satisfy 0 <= k_min <= k_max");
        if (suites.empty())
            throw std::invalid_argument("no suites selected");
    }

    bool TupleResult::passed() const
    {
        return error.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) {
                   return c.passed;
               });
    }

    std::size_t Report::passed_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const TupleResult &t) { return t.passed(); }));
    }

    std::size_t Report::failed_count() const
    {
        return results.size() - passed_count();
    }

    nlohmann::json Report::to_json() const
    {
        using nlohmann::json;
        json suites = json::array();
        for (auto s : spec.suites)
            suites.push_back(cli::to_string(s));
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["tool_version"] = kToolVersion;
        doc["spec"] = json{{"N", spec.Ns},
                           {"d", {spec.d_min, spec.d_max}},
                           {"k", {spec.k_min, spec.k_max}},
                           {"suites", suites},
                           {"mutate", spec.mutate_scale_column ? json("scale-column") : json(nullptr)}};
        json results_json = json::array();
        for (const auto &t : results)
        {
            json checks = json::array();
            for (const auto &c : t.checks)
                checks.push_back(
                    json{{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
            json entry{{"N", t.N},
                       {"d", t.d},
                       {"k", t.k},
                       {"suite", cli::to_string(t.suite)},
                       {"passed", t.passed()},
                       {"checks", checks}};
            if (!t.error.empty())
                entry["error"] = t.error;
            results_json.push_back(entry);
        }
        doc["results"] = results_json;
        doc["summary"] = json{{"total", results.size()}, {"passed", passed_count()}, {"failed", failed_count()}};
        return doc;
    }

    std::string Report::to_markdown() const
    {
        std::ostringstream os;
        os << "# Verification report\n\n";
        os << "- tuples x suites: " << results.size() << "\n- passed: " << passed_count()
           << "\n- failed: " << failed_count() << "\n";
        if (spec.mutate_scale_column)
            os << "- mutation: scale-column\n";
        if (failed_count() == 0)
            return os.str();
        os << "\n| N | d | k | suite | check | expected | actual |\n|---|---|---|---|---|---|---|\n";
        for (const auto &t : results)
        {
            if (t.passed())
                continue;
            if (!t.error.empty())
                os << "| " << t.N << " | " << t.d << " | " << t.k << " | " << cli::to_string(t.suite)
                   << " | error | | " << t.error << " |\n";
            for (const auto &c : t.checks)
                if (!c.passed)
                    os << "| " << t.N << " | " << t.d << " | " << t.k << " | " << cli::to_string(t.suite) << " | "
                       << c.name << " | " << c.expected << " | " << c.actual << " |\n";
        }
        return os.str();
    }

    VerificationReport verify_closed_form_regression(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        VerificationReport r{N, d, k, {}};

        const RhoBasis basis = build_basis(d, k);
        const long expected_gens = c_N(d, k) + (p.k_even() ? 1 : 0);
        add_eq(r, "generator-count", Integer(expected_gens), Integer(static_cast<long>(basis.size())));

        const FinAbGroup kn = kernel_closed_form(N, d, k);
        add_eq(r, "kernel-free-rank", Integer(p.k_even() ? 1 : 0), Integer(static_cast<long>(kn.free_rank())));

        if (k >= 1)
        {
            const auto s = structure_set_disk(N, d, 2 * k);
            const std::size_t f_rank = reduced_eigenspace_rank(N, p.sign());
            add_eq(r, "structure-set-free-rank", Integer(static_cast<long>(f_rank + (p.k_even() ? 1 : 0))),
                   Integer(static_cast<long>(s.total().free_rank())));
            if (p.K >= 1)
            {
                add_eq(r, "structure-set=F+K_N", FinAbGroup::free(f_rank) + kn, s.total());
                add_eq(r, "t-prime-count", Integer(c_N(d, k)), Integer(static_cast<long>(s.t_prime_orders.size())));
            }
        }

        // |source torsion| = |kernel torsion| * |image|, with the odd source
        // part read off the normal invariants.
        const Integer predicted = predicted_image_order(N, d, k);
        Integer source_two = 1;
        Integer kernel_tors = 1;
        Integer source_odd = 1;
        if (p.k_even())
        {
            source_odd = normal_invariants(N, d + 2, 0).m_part_order;
            if (p.K >= 1)
            {
                const auto ni = normal_invariants(N, d, 2 * k);
                source_two = two_power(p.K) * pow(ni.t4_order, ni.t4_count) * two_power(ni.t2_count);
                kernel_tors = kbar_closed_form(N, d, k).torsion_order();
            }
        }
        else
        {
            source_odd = normal_invariants(N, d, 2 * k).m_part_order;
            if (p.K >= 1)
            {
                const auto ni = normal_invariants(N, d, 2 * k);
                source_two = pow(ni.t4_order, ni.t4_count) * two_power(ni.t2_count);
                kernel_tors = kn.torsion_order();
            }
        }
        add_eq(r, "order-consistency", source_two * source_odd, kernel_tors * predicted);

        if (p.k_even() && p.K >= 1)
        {
            const unsigned long top = std::min<unsigned long>(2 * (c_N(d, k) + 1), p.K);
            const FinAbGroup tors_kn = FinAbGroup::from_orders(kn.torsion(), 0);
            add_eq(r, "kbar-extension", tors_kn + FinAbGroup::cyclic(two_power(top)), kbar_closed_form(N, d, k));
        }
        return r;
    }

    VerificationReport verify_snf_properties(long N, long d, long k)
    {
        VerificationReport r{N, d, k, {}};
        const RhoMap rho = rho_columns(N, d, k);
        Integer den = 1;
        const IntMatrix A = clear_denominators(rho.matrix(), &den);
        check_snf(r, "rho", A);
        const IntMatrix B = rho.target.lattice.basis;
        IntMatrix block(A.rows(), A.cols() + B.cols());
        for (std::size_t i = 0; i < A.rows(); ++i)
        {
            for (std::size_t j = 0; j < A.cols(); ++j)
                block(i, j) = A(i, j);
            for (std::size_t j = 0; j < B.cols(); ++j)
                block(i, A.cols() + j) = -den * B(i, j);
        }
        check_snf(r, "preimage-block", block);

        const KernelResult res = kernel_and_image(rho);
        const Integer index = quotient_group(static_cast<std::size_t>(A.cols()), res.khat).torsion_order();
        add_eq(r, "image-order=index", index, res.image.torsion_order());
        const Lattice scaled_target = scale_lattice(rho.target.lattice, den);
        bool inside = true;
        for (std::size_t j = 0; j < res.khat.rank(); ++j)
        {
            const auto v = res.khat.basis_vector(j);
            if (!lattice_contains(scaled_target, A.apply(v)))
                inside = false;
        }
        add(r, "khat-maps-into-target", inside, "true", inside ? "true" : "false");
        return r;
    }

    unsigned sweep_threads()
    {
        if (const char *env = std::getenv("LENSCALC_THREADS"))
        {
            char *end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<unsigned>(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }

    namespace
    {
        TupleResult run_one(long N, long d, long k, Suite suite, bool mutate)
        {
            TupleResult t{N, d, k, suite, {}, {}};
            try
            {
                VerificationReport rep;
                switch (suite)
                {
                case Suite::Eigenspace:
                    rep = verify_eigenspace(N, d, k);
                    break;
                case Suite::Rationality:
                    rep = verify_rationality(N, d, k);
                    break;
                case Suite::Transfer:
                    for (long U = 2; U <= N; ++U)
                        if (N % U == 0)
                        {
                            auto part = verify_transfer_compat(N, U, d, k);
                            rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
                        }
                    break;
                case Suite::Factorization:
                {
                    RhoOptions opts;
                    opts.scale_first_column = mutate;
                    rep = verify_factorization(N, d, k, opts);
                    break;
                }
                case Suite::Splitting:
                    rep = verify_splitting(N, d, k);
                    break;
                case Suite::ClosedFormRegression:
                    rep = verify_closed_form_regression(N, d, k);
                    break;
                case Suite::SnfProperties:
                    rep = verify_snf_properties(N, d, k);
                    break;
                }
                t.checks = std::move(rep.checks);
            }
            catch (const std::exception &e)
            {
                t.error = e.what();
            }
            return t;
        }
    }

    Report run_sweep(const SweepSpec &spec, unsigned threads)
    {
        spec.validate();
        std::vector<long> Ns = spec.Ns;
        std::sort(Ns.begin(), Ns.end());
        Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
        std::vector<Suite> suites = spec.suites;
        std::sort(suites.begin(), suites.end());
        suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

        struct Job
        {
            long N, d, k;
            Suite suite;
        };
        std::vector<Job> jobs;
        for (long N : Ns)
            for (long d = spec.d_min; d <= spec.d_max; ++d)
                for (long k = spec.k_min; k <= spec.k_max; ++k)
                    for (Suite s : suites)
                        jobs.push_back({N, d, k, s});

        Report report;
        report.spec = spec;
        report.spec.Ns = Ns;
        report.spec.suites = suites;
        report.results.resize(jobs.size());

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++)
                report.results[i] = run_one(jobs[i].N, jobs[i].d, jobs[i].k, jobs[i].suite, spec.mutate_scale_column);
        };
        const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < n; ++i)
            pool.emplace_back(worker);
        worker();
        for (auto &t : pool)
            t.join();
        return report;
    }
}
