#include "lenscalc/app.hpp"
#include "lenscalc/documents.hpp"
#include "lenscalc/errors.hpp"
#include "lenscalc/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace lenscalc::cli
{
    namespace
    {
        constexpr int kExitOk = 0;
        constexpr int kExitFailed = 1;
        constexpr int kExitUsage = 2;

        struct UsageError : std::invalid_argument
        {
            using std::invalid_argument::invalid_argument;
        };

        long parse_long(const std::string &s)
        {
            std::size_t pos = 0;
            long v = 0;
            try
            {
                v = std::stol(s, &pos);
            }
            catch (const std::exception &)
            {
                throw UsageError("not an integer: '" + s + "'");
            }
            if (pos != s.size())
                throw UsageError("not an integer: '" + s + "'");
            return v;
        }

        /// "a", "a:b" or "a..b"
        std::pair<long, long> parse_range(const std::string &s)
        {
            auto split = [&](std::size_t at, std::size_t len) {
                return std::make_pair(parse_long(s.substr(0, at)), parse_long(s.substr(at + len)));
            };
            if (auto p = s.find(".."); p != std::string::npos)
                return split(p, 2);
            if (auto p = s.find(':'); p != std::string::npos)
                return split(p, 1);
            const long v = parse_long(s);
            return {v, v};
        }

        std::vector<long> range_values(const std::string &s)
        {
            const auto [lo, hi] = parse_range(s);
            if (hi < lo)
                throw UsageError("empty range '" + s + "'");
            std::vector<long> out;
            for (long v = lo; v <= hi; ++v)
                out.push_back(v);
            return out;
        }

        /// Comma-separated values, each an integer or a range.
        std::vector<long> list_values(const std::vector<std::string> &items)
        {
            std::vector<long> out;
            for (const auto &item : items)
            {
                std::stringstream ss(item);
                std::string part;
                while (std::getline(ss, part, ','))
                {
                    if (part.empty())
                        continue;
                    const auto vs = range_values(part);
                    out.insert(out.end(), vs.begin(), vs.end());
                }
            }
            return out;
        }

        std::vector<std::string> split_commas(const std::vector<std::string> &items)
        {
            std::vector<std::string> out;
            for (const auto &item : items)
            {
                std::stringstream ss(item);
                std::string part;
                while (std::getline(ss, part, ','))
                    if (!part.empty())
                        out.push_back(part);
            }
            return out;
        }

        int emit(const std::string &text, const std::string &out_path, std::ostream &out, std::ostream &err)
        {
            if (out_path.empty())
            {
                out << text;
                return kExitOk;
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f)
            {
                err << "error: cannot open '" << out_path << "' for writing\n";
                return kExitUsage;
            }
            f << text;
            return kExitOk;
        }

        struct ComputeOptions
        {
            std::string kind;
            long N = 0;
            std::optional<long> d, m, k, n;
            std::string format = "json";
            std::string out;
        };

        struct VerifyOptions
        {
            std::vector<std::string> Ns{"2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"};
            std::string d = "2:8";
            std::string k = "0:4";
            std::vector<std::string> suites;
            bool suites_given = false;
            std::string mutate;
            std::string format = "json";
            std::string out;
            unsigned threads = 0;
        };

        struct TableOptions
        {
            std::string which;
            std::vector<std::string> Ns{"2:16"};
            std::string d = "2:8";
            std::string m = "1:8";
            std::string format = "csv";
            std::string out;
        };

        int do_compute(const ComputeOptions &o, std::ostream &out, std::ostream &err)
        {
            const auto kind = compute_kind_from_string(o.kind);
            if (!kind)
                throw UsageError("unknown compute kind '" + o.kind + "'");
            ComputeRequest req{*kind, o.N, o.d, o.m, o.k, o.n};
            // --k stands for m = 2k on the subcommands whose native flag is --m.
            const bool m_native = *kind == ComputeKind::StructureSetDisk || *kind == ComputeKind::StructureSetSphere ||
                                  *kind == ComputeKind::NormalInvariants;
            if (m_native && o.k)
            {
                if (o.m && *o.m != 2 * *o.k)
                    throw UsageError("--m and --k disagree (m must equal 2k)");
                req.m = 2 * *o.k;
            }
            const json doc = compute_document(req);
            std::string text;
            if (o.format == "json")
                text = doc.dump(2) + "\n";
            else if (o.format == "text")
                text = render_text(doc);
            else if (o.format == "md")
                text = render_markdown(doc);
            else
                throw UsageError("unknown format '" + o.format + "' (json, text, md)");
            return emit(text, o.out, out, err);
        }

        int do_verify(const VerifyOptions &o, std::ostream &out, std::ostream &err)
        {
            SweepSpec spec;
            spec.Ns = list_values(o.Ns);
            const auto [dlo, dhi] = parse_range(o.d);
            const auto [klo, khi] = parse_range(o.k);
            spec.d_min = dlo;
            spec.d_max = dhi;
            spec.k_min = klo;
            spec.k_max = khi;
            if (o.suites_given)
            {
                for (const auto &s : split_commas(o.suites))
                {
                    if (s == "all")
                    {
                        spec.suites.insert(spec.suites.end(), all_suites().begin(), all_suites().end());
                        continue;
                    }
                    const auto suite = suite_from_string(s);
                    if (!suite)
                        throw UsageError("unknown suite '" + s + "'");
                    spec.suites.push_back(*suite);
                }
            }
            else
                spec.suites = all_suites();
            if (!o.mutate.empty())
            {
                if (o.mutate != "scale-column")
                    throw UsageError("unknown mutation '" + o.mutate + "'");
                spec.mutate_scale_column = true;
            }
            if (o.format != "json" && o.format != "md")
                throw UsageError("unknown format '" + o.format + "' (json, md)");
            try
            {
                spec.validate();
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
            const Report report = run_sweep(spec, o.threads > 0 ? o.threads : sweep_threads());
            const std::string text = o.format == "json" ? report.to_json().dump(2) + "\n" : report.to_markdown();
            const int rc = emit(text, o.out, out, err);
            if (rc != kExitOk)
                return rc;
            err << "verify: " << report.passed_count() << " passed, " << report.failed_count() << " failed\n";
            return report.all_passed() ? kExitOk : kExitFailed;
        }

        int do_table(const TableOptions &o, std::ostream &out, std::ostream &err)
        {
            const auto which = table_kind_from_string(o.which);
            if (!which)
                throw UsageError("unknown table '" + o.which + "' (main-theorem, sphere-corollary)");
            if (o.format != "json" && o.format != "csv" && o.format != "md")
                throw UsageError("unknown format '" + o.format + "' (json, csv, md)");
            const auto rows = table_rows(*which, list_values(o.Ns), range_values(o.d), range_values(o.m));
            std::string text;
            if (o.format == "csv")
                text = render_table_csv(rows);
            else if (o.format == "json")
                text = render_table_json(*which, rows);
            else
                text = render_table_markdown(*which, rows);
            return emit(text, o.out, out, err);
        }
    }

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Exact computations for structure sets of fake lens spaces times disks and spheres", "lenscalc"};
        app.set_version_flag("--version", std::string("lenscalc ") + kToolVersion);
        app.require_subcommand(1);

        ComputeOptions co;
        auto *compute = app.add_subcommand("compute", "Closed-form groups and rho images");
        compute->add_option("kind", co.kind,
                            "structure-set-disk | structure-set-sphere | l-group | normal-invariants | rho-image | "
                            "kernel-closed-form")
            ->required();
        compute->add_option("--N", co.N, "Order of the fundamental group")->required();
        compute->add_option("--d", co.d, "L has dimension 2d-1");
        compute->add_option("--m", co.m, "Dimension of the disk or sphere factor");
        compute->add_option("--k", co.k, "Half of an even m");
        compute->add_option("--n", co.n, "L-group degree");
        compute->add_option("--format", co.format, "json | text | md");
        compute->add_option("--out", co.out, "Write to FILE instead of stdout");

        VerifyOptions vo;
        auto *verify = app.add_subcommand("verify", "Run verification suites over a parameter sweep");
        verify->add_option("--N", vo.Ns, "List of N (comma separated, ranges a:b allowed)");
        verify->add_option("--d", vo.d, "Range of d, e.g. 2:8");
        verify->add_option("--k", vo.k, "Range of k, e.g. 0:4");
        auto *suites_opt = verify->add_option("--suites", vo.suites, "Comma separated suites, or 'all'");
        suites_opt->allow_extra_args(false);
        suites_opt->expected(0, 1);
        verify->add_option("--mutate", vo.mutate, "Fault injection: scale-column");
        verify->add_option("--format", vo.format, "json | md");
        verify->add_option("--out", vo.out, "Write the report to FILE instead of stdout");
        verify->add_option("--threads", vo.threads, "Worker threads (default LENSCALC_THREADS or all cores)");

        TableOptions to;
        auto *table = app.add_subcommand("table", "Tables of closed-form structure sets");
        table->add_option("which", to.which, "main-theorem | sphere-corollary")->required();
        table->add_option("--N", to.Ns, "List of N (comma separated, ranges a:b allowed)");
        table->add_option("--d", to.d, "Range of d");
        table->add_option("--m", to.m, "Range of m");
        table->add_option("--format", to.format, "json | csv | md");
        table->add_option("--out", to.out, "Write to FILE instead of stdout");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return kExitOk;
        }
        catch (const CLI::CallForVersion &)
        {
            out << "lenscalc " << kToolVersion << '\n';
            return kExitOk;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }

        try
        {
            if (compute->parsed())
                return do_compute(co, out, err);
            if (verify->parsed())
            {
                vo.suites_given = suites_opt->count() > 0;
                return do_verify(vo, out, err);
            }
            return do_table(to, out, err);
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitFailed;
        }
    }
}
