#include "lenscalc/documents.hpp"
#include "lenscalc/errors.hpp"

#include <map>
#include <sstream>

namespace lenscalc::cli
{
    json integer_to_json(const Integer &x)
    {
        if (auto v = to_int64(x))
            return *v;
        return x.get_str();
    }

    Integer integer_from_json(const json &j)
    {
        if (j.is_string())
            return Integer(j.get<std::string>());
        if (j.is_number_unsigned())
            return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
        if (j.is_number_integer())
            return Integer(static_cast<long>(j.get<std::int64_t>()));
        throw std::invalid_argument("expected an integer in JSON, got " + j.dump());
    }

    namespace
    {
        json integers_to_json(const std::vector<Integer> &xs)
        {
            json a = json::array();
            for (const auto &x : xs)
                a.push_back(integer_to_json(x));
            return a;
        }

        std::vector<Integer> integers_from_json(const json &j)
        {
            std::vector<Integer> out;
            for (const auto &x : j)
                out.push_back(integer_from_json(x));
            return out;
        }

        Sign sign_from_json(const json &j)
        {
            return j.get<int>() < 0 ? Sign::Minus : Sign::Plus;
        }

        ExtraSummand extra_from_string(const std::string &s)
        {
            if (s == "Z")
                return ExtraSummand::Z;
            if (s == "Z/2")
                return ExtraSummand::Z2;
            if (s == "none")
                return ExtraSummand::None;
            throw std::invalid_argument("unknown extra summand '" + s + "'");
        }

        std::string join(const std::vector<Integer> &xs, const char *sep)
        {
            std::string s;
            for (const auto &x : xs)
            {
                if (!s.empty())
                    s += sep;
                s += x.get_str();
            }
            return s;
        }

        long require_param(const std::optional<long> &v, const char *name, ComputeKind kind)
        {
            if (!v)
                throw std::invalid_argument(std::string("compute ") + to_string(kind) + " needs --" + name);
            return *v;
        }

        // m = 2k context: accept --k, or an even --m.
        long half_dimension(const ComputeRequest &r)
        {
            if (r.k && r.m && *r.m != 2 * *r.k)
                throw std::invalid_argument("--m and --k disagree (m must equal 2k)");
            if (r.k)
                return *r.k;
            if (r.m)
            {
                if (*r.m % 2 != 0)
                    throw std::invalid_argument(std::string("compute ") + to_string(r.kind) +
                                                " is defined for m = 2k; got odd m");
                return *r.m / 2;
            }
            throw std::invalid_argument(std::string("compute ") + to_string(r.kind) + " needs --k (or an even --m)");
        }

        json base_document(const ComputeRequest &r)
        {
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["kind"] = to_string(r.kind);
            json params;
            params["N"] = r.N;
            const Decomposition dec = decompose_N(r.N);
            params["K"] = dec.K;
            params["M"] = dec.M;
            doc["params"] = params;
            doc["notes"] = json::array();
            doc["declared_odd_order"] = 1;
            doc["case_label"] = nullptr;
            return doc;
        }

        void set_group(json &doc, const FinAbGroup &g)
        {
            doc["free_rank"] = g.free_rank();
            doc["invariant_factors"] = integers_to_json(g.torsion());
        }
    }

    json to_json(const FinAbGroup &g)
    {
        return json{{"free_rank", g.free_rank()}, {"invariant_factors", integers_to_json(g.torsion())}};
    }

    FinAbGroup fin_ab_group_from_json(const json &j)
    {
        const auto factors = integers_from_json(j.at("invariant_factors"));
        const FinAbGroup g = FinAbGroup::from_orders(factors, j.at("free_rank").get<std::size_t>());
        if (g.torsion() != factors)
            throw std::invalid_argument("invariant factors are not a canonical divisibility chain");
        return g;
    }

    json to_json(const StructureSetDescriptor &s)
    {
        return json{{"N", s.N},
                    {"d", s.d},
                    {"m", s.m},
                    {"case_label", to_string(s.case_label)},
                    {"derived_mode", s.derived_odd_n ? json("odd_N") : json(nullptr)},
                    {"f_sign", to_int(s.f_sign)},
                    {"f_rank", s.f_rank},
                    {"extra", to_string(s.extra)},
                    {"t_prime_orders", integers_to_json(s.t_prime_orders)},
                    {"t2_count", s.t2_count},
                    {"declared_odd_order", integer_to_json(s.declared_odd_order)}};
    }

    StructureSetDescriptor structure_set_from_json(const json &j)
    {
        StructureSetDescriptor s;
        s.N = j.at("N").get<long>();
        s.d = j.at("d").get<long>();
        s.m = j.at("m").get<long>();
        const auto label = case_label_from_string(j.at("case_label").get<std::string>());
        if (!label)
            throw std::invalid_argument("unknown case label " + j.at("case_label").dump());
        s.case_label = *label;
        s.derived_odd_n = !j.at("derived_mode").is_null();
        s.f_sign = sign_from_json(j.at("f_sign"));
        s.f_rank = j.at("f_rank").get<std::size_t>();
        s.extra = extra_from_string(j.at("extra").get<std::string>());
        s.t_prime_orders = integers_from_json(j.at("t_prime_orders"));
        s.t2_count = j.at("t2_count").get<std::size_t>();
        s.declared_odd_order = integer_from_json(j.at("declared_odd_order"));
        return s;
    }

    json to_json(const SphereStructureDescriptor &s)
    {
        return json{{"disk", to_json(s.disk)},
                    {"t2k_count", s.t2k_count},
                    {"t2k_order", integer_to_json(s.t2k_order)},
                    {"t2_count", s.t2_count},
                    {"declared_odd_order", integer_to_json(s.declared_odd_order)}};
    }

    SphereStructureDescriptor sphere_structure_from_json(const json &j)
    {
        SphereStructureDescriptor s;
        s.disk = structure_set_from_json(j.at("disk"));
        s.t2k_count = j.at("t2k_count").get<std::size_t>();
        s.t2k_order = integer_from_json(j.at("t2k_order"));
        s.t2_count = j.at("t2_count").get<std::size_t>();
        s.declared_odd_order = integer_from_json(j.at("declared_odd_order"));
        return s;
    }

    json to_json(const LGroupDescriptor &g)
    {
        return json{{"N", g.N},
                    {"n", g.n},
                    {"n_mod_4", g.n_mod_4},
                    {"free_rank", g.free_rank},
                    {"arf", g.arf},
                    {"codim1_arf", g.codim1_arf},
                    {"reduced_free_rank", g.reduced_free_rank ? json(*g.reduced_free_rank) : json(nullptr)}};
    }

    LGroupDescriptor l_group_from_json(const json &j)
    {
        LGroupDescriptor g;
        g.N = j.at("N").get<long>();
        g.n = j.at("n").get<long>();
        g.n_mod_4 = j.at("n_mod_4").get<int>();
        g.free_rank = j.at("free_rank").get<std::size_t>();
        g.arf = j.at("arf").get<bool>();
        g.codim1_arf = j.at("codim1_arf").get<bool>();
        if (!j.at("reduced_free_rank").is_null())
            g.reduced_free_rank = j.at("reduced_free_rank").get<std::size_t>();
        return g;
    }

    json to_json(const NormalInvariantDescriptor &n)
    {
        return json{{"N", n.N},
                    {"d", n.d},
                    {"m", n.m},
                    {"reduced", n.reduced},
                    {"tf_rank", n.tf_rank},
                    {"t4_count", n.t4_count},
                    {"t4_order", integer_to_json(n.t4_order)},
                    {"t2_count", n.t2_count},
                    {"m_part_order", integer_to_json(n.m_part_order)},
                    {"derived_mode", n.derived_odd_n ? json("odd_N") : json(nullptr)}};
    }

    NormalInvariantDescriptor normal_invariants_from_json(const json &j)
    {
        NormalInvariantDescriptor n;
        n.N = j.at("N").get<long>();
        n.d = j.at("d").get<long>();
        n.m = j.at("m").get<long>();
        n.reduced = j.at("reduced").get<bool>();
        n.tf_rank = j.at("tf_rank").get<std::size_t>();
        n.t4_count = j.at("t4_count").get<std::size_t>();
        n.t4_order = integer_from_json(j.at("t4_order"));
        n.t2_count = j.at("t2_count").get<std::size_t>();
        n.m_part_order = integer_from_json(j.at("m_part_order"));
        n.derived_odd_n = !j.at("derived_mode").is_null();
        return n;
    }

    std::optional<ComputeKind> compute_kind_from_string(const std::string &s)
    {
        for (auto k : {ComputeKind::StructureSetDisk, ComputeKind::StructureSetSphere, ComputeKind::LGroup,
                       ComputeKind::NormalInvariants, ComputeKind::RhoImage, ComputeKind::KernelClosedForm})
            if (s == to_string(k))
                return k;
        return std::nullopt;
    }

    const char *to_string(ComputeKind k)
    {
        switch (k)
        {
        case ComputeKind::StructureSetDisk:
            return "structure-set-disk";
        case ComputeKind::StructureSetSphere:
            return "structure-set-sphere";
        case ComputeKind::LGroup:
            return "l-group";
        case ComputeKind::NormalInvariants:
            return "normal-invariants";
        case ComputeKind::RhoImage:
            return "rho-image";
        case ComputeKind::KernelClosedForm:
            return "kernel-closed-form";
        }
        return "?";
    }

    json compute_document(const ComputeRequest &r)
    {
        if (r.N < 2)
            throw UnsupportedParams("--N must be at least 2");
        json doc = base_document(r);
        json &notes = doc["notes"];
        switch (r.kind)
        {
        case ComputeKind::StructureSetDisk:
        {
            const long d = require_param(r.d, "d", r.kind);
            const long m = require_param(r.m, "m", r.kind);
            const auto s = structure_set_disk(r.N, d, m);
            doc["params"]["d"] = d;
            doc["params"]["m"] = m;
            doc["case_label"] = to_string(s.case_label);
            set_group(doc, s.total());
            doc["components"] = s.components();
            doc["descriptor"] = to_json(s);
            if (s.derived_odd_n)
                notes.push_back("derived_mode: odd_N (assembled from the odd-order kernel facts)");
            break;
        }
        case ComputeKind::StructureSetSphere:
        {
            const long d = require_param(r.d, "d", r.kind);
            const long m = require_param(r.m, "m", r.kind);
            const auto s = structure_set_product_sphere(r.N, d, m);
            doc["params"]["d"] = d;
            doc["params"]["m"] = m;
            doc["case_label"] = to_string(s.disk.case_label);
            set_group(doc, s.total());
            doc["declared_odd_order"] = integer_to_json(s.declared_odd_order);
            doc["components"] = s.components();
            doc["descriptor"] = to_json(s);
            notes.push_back("T_M(d) is known only through its order");
            break;
        }
        case ComputeKind::LGroup:
        {
            const long n = require_param(r.n, "n", r.kind);
            const auto g = l_group(r.N, n);
            doc["params"]["n"] = n;
            doc["case_label"] = "n=" + std::to_string(g.n_mod_4) + " mod 4";
            set_group(doc, g.group());
            doc["descriptor"] = to_json(g);
            if (auto red = g.reduced_group())
                doc["reduced_group"] = to_json(*red);
            break;
        }
        case ComputeKind::NormalInvariants:
        {
            const long d = require_param(r.d, "d", r.kind);
            const long m = require_param(r.m, "m", r.kind);
            const auto ni = normal_invariants(r.N, d, m, true);
            doc["params"]["d"] = d;
            doc["params"]["m"] = m;
            doc["case_label"] = m % 2 == 0 ? "even-disk" : "odd-disk";
            set_group(doc, ni.known_part());
            doc["declared_odd_order"] = integer_to_json(ni.m_part_order);
            doc["descriptor"] = to_json(ni);
            doc["unreduced"] = to_json(normal_invariants(r.N, d, m, false));
            notes.push_back("reduced: kernel of theta into the L-group");
            break;
        }
        case ComputeKind::RhoImage:
        {
            const long d = require_param(r.d, "d", r.kind);
            const long k = half_dimension(r);
            const RhoMap rho = rho_columns(r.N, d, k);
            const KernelResult res = kernel_and_image(rho);
            doc["params"]["d"] = d;
            doc["params"]["k"] = k;
            doc["case_label"] = to_string(rho.basis.parity);
            set_group(doc, res.image);
            doc["declared_odd_order"] = integer_to_json(res.odd_order);
            json gens = json::array();
            for (const auto &g : rho.basis.generators)
                gens.push_back(json{{"index", g.index}, {"exponent", g.exponent}});
            doc["descriptor"] = json{{"generators", gens},
                                     {"sign", to_int(rho.sign)},
                                     {"image_order", integer_to_json(res.image.torsion_order())},
                                     {"predicted_image_order", integer_to_json(predicted_image_order(r.N, d, k))},
                                     {"two_exponent", integer_to_json(res.two_exponent)},
                                     {"odd_order", integer_to_json(res.odd_order)}};
            notes.push_back("image of Z(d,k) in Q R~/4 R~; the odd part is listed in invariant_factors as computed");
            break;
        }
        case ComputeKind::KernelClosedForm:
        {
            const long d = require_param(r.d, "d", r.kind);
            const long k = half_dimension(r);
            const FinAbGroup kn = kernel_closed_form(r.N, d, k);
            doc["params"]["d"] = d;
            doc["params"]["k"] = k;
            doc["case_label"] = k % 2 == 0 ? "k=2l" : "k=2l+1";
            set_group(doc, kn);
            doc["descriptor"] = json{{"kernel", to_json(kn)}, {"kbar", to_json(kbar_closed_form(r.N, d, k))}};
            if (decompose_N(r.N).K == 0)
                notes.push_back("derived_mode: odd_N");
            break;
        }
        }
        return doc;
    }

    namespace
    {
        std::string group_string(const json &doc)
        {
            return fin_ab_group_from_json(doc).to_string();
        }

        std::string params_string(const json &params)
        {
            std::string s;
            for (const auto &[key, value] : params.items())
            {
                if (!s.empty())
                    s += ", ";
                s += key + "=" + value.dump();
            }
            return s;
        }
    }

    std::string render_text(const json &doc)
    {
        std::ostringstream os;
        os << doc.at("kind").get<std::string>() << " (" << params_string(doc.at("params")) << ")\n";
        if (!doc.at("case_label").is_null())
            os << "  case:  " << doc.at("case_label").get<std::string>() << '\n';
        os << "  group: " << group_string(doc) << '\n';
        if (doc.contains("components"))
            os << "  parts: " << doc.at("components").get<std::string>() << '\n';
        if (integer_from_json(doc.at("declared_odd_order")) != 1)
            os << "  odd part of order " << integer_from_json(doc.at("declared_odd_order")).get_str() << '\n';
        for (const auto &n : doc.at("notes"))
            os << "  note: " << n.get<std::string>() << '\n';
        return os.str();
    }

    std::string render_markdown(const json &doc)
    {
        std::ostringstream os;
        os << "### " << doc.at("kind").get<std::string>() << "\n\n";
        os << "| field | value |\n|---|---|\n";
        os << "| params | " << params_string(doc.at("params")) << " |\n";
        if (!doc.at("case_label").is_null())
            os << "| case | " << doc.at("case_label").get<std::string>() << " |\n";
        os << "| group | " << group_string(doc) << " |\n";
        if (doc.contains("components"))
            os << "| components | " << doc.at("components").get<std::string>() << " |\n";
        os << "| declared odd order | " << integer_from_json(doc.at("declared_odd_order")).get_str() << " |\n";
        for (const auto &n : doc.at("notes"))
            os << "\n> " << n.get<std::string>() << '\n';
        return os.str();
    }

    std::optional<TableKind> table_kind_from_string(const std::string &s)
    {
        if (s == "main-theorem")
            return TableKind::MainTheorem;
        if (s == "sphere-corollary")
            return TableKind::SphereCorollary;
        return std::nullopt;
    }

    std::vector<TableRow> table_rows(TableKind which, const std::vector<long> &Ns, const std::vector<long> &ds,
                                     const std::vector<long> &ms)
    {
        std::vector<TableRow> rows;
        for (long N : Ns)
            for (long d : ds)
                for (long m : ms)
                {
                    TableRow row;
                    try
                    {
                        const Decomposition dec = decompose_N(N);
                        row.N = N;
                        row.K = dec.K;
                        row.M = dec.M;
                        row.d = d;
                        row.m = m;
                        if (which == TableKind::MainTheorem)
                        {
                            const auto s = structure_set_disk(N, d, m);
                            const FinAbGroup g = s.total();
                            row.case_label = to_string(s.case_label);
                            row.free_rank = g.free_rank();
                            row.invariant_factors = g.torsion();
                            row.odd_order = s.declared_odd_order;
                            row.components = s.components();
                        }
                        else
                        {
                            const auto s = structure_set_product_sphere(N, d, m);
                            const FinAbGroup g = s.total();
                            row.case_label = to_string(s.disk.case_label);
                            row.free_rank = g.free_rank();
                            row.invariant_factors = g.torsion();
                            row.odd_order = s.declared_odd_order;
                            row.components = s.components();
                        }
                    }
                    catch (const std::invalid_argument &)
                    {
                        continue;
                    }
                    rows.push_back(std::move(row));
                }
        return rows;
    }

    std::string render_table_csv(const std::vector<TableRow> &rows)
    {
        std::ostringstream os;
        os << "N,K,M,d,m,case,free_rank,invariant_factors,odd_order\n";
        for (const auto &r : rows)
            os << r.N << ',' << r.K << ',' << r.M << ',' << r.d << ',' << r.m << ',' << r.case_label << ','
               << r.free_rank << ',' << join(r.invariant_factors, ";") << ',' << r.odd_order.get_str() << '\n';
        return os.str();
    }

    std::string render_table_json(TableKind which, const std::vector<TableRow> &rows)
    {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["table"] = which == TableKind::MainTheorem ? "main-theorem" : "sphere-corollary";
        json arr = json::array();
        for (const auto &r : rows)
            arr.push_back(json{{"N", r.N},
                               {"K", r.K},
                               {"M", r.M},
                               {"d", r.d},
                               {"m", r.m},
                               {"case", r.case_label},
                               {"free_rank", r.free_rank},
                               {"invariant_factors", integers_to_json(r.invariant_factors)},
                               {"odd_order", integer_to_json(r.odd_order)},
                               {"components", r.components}});
        doc["rows"] = arr;
        return doc.dump(2) + "\n";
    }

    std::string render_table_markdown(TableKind which, const std::vector<TableRow> &rows)
    {
        static const std::vector<std::pair<std::string, std::string>> sections = {
            {"d=2e,k=2l", "F⁺ ⊕ Z ⊕ T'_{2^K} ⊕ T_2"},
            {"d=2e,k=2l+1", "F⁻ ⊕ Z/2 ⊕ T'_{2^K} ⊕ T_2"},
            {"d=2e+1,k=2l", "F⁻ ⊕ Z ⊕ T'_{2^K} ⊕ T_2"},
            {"d=2e+1,k=2l+1", "F⁺ ⊕ Z/2 ⊕ T'_{2^K} ⊕ T_2"},
            {"odd-disk", "T_2(odd), m = 2k+1, also k = 0"},
        };
        std::ostringstream os;
        os << (which == TableKind::MainTheorem ? "# Structure sets of L x D^m\n"
                                               : "# Structure sets of L x S^m\n");
        for (const auto &[label, shape] : sections)
        {
            std::vector<const TableRow *> in;
            for (const auto &r : rows)
                if (r.case_label == label)
                    in.push_back(&r);
            if (in.empty())
                continue;
            os << "\n## " << label << ": " << shape << "\n\n";
            os << "| N | K | M | d | m | components | group | odd order |\n";
            os << "|---|---|---|---|---|---|---|---|\n";
            for (const auto *r : in)
                os << "| " << r->N << " | " << r->K << " | " << r->M << " | " << r->d << " | " << r->m << " | "
                   << r->components << " | "
                   << FinAbGroup::from_orders(r->invariant_factors, r->free_rank).to_string() << " | "
                   << r->odd_order.get_str() << " |\n";
        }
        return os.str();
    }
}
