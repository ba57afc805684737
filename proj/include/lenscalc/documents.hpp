#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lenscalc/fin_ab_group.hpp"
#include "lenscalc/rho_engine.hpp"
#include "lenscalc/surgery_tables.hpp"

// JSON / CSV / Markdown renderings of the closed-form and computed groups.
namespace lenscalc::cli
{
    using json = nlohmann::json;

    inline constexpr int kSchemaVersion = 1;
    inline constexpr const char *kToolVersion = "0.1.0";

    /// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
    json integer_to_json(const Integer &x);
    Integer integer_from_json(const json &j);

    json to_json(const FinAbGroup &g);
    FinAbGroup fin_ab_group_from_json(const json &j);

    json to_json(const StructureSetDescriptor &s);
    StructureSetDescriptor structure_set_from_json(const json &j);

    json to_json(const SphereStructureDescriptor &s);
    SphereStructureDescriptor sphere_structure_from_json(const json &j);

    json to_json(const LGroupDescriptor &g);
    LGroupDescriptor l_group_from_json(const json &j);

    json to_json(const NormalInvariantDescriptor &n);
    NormalInvariantDescriptor normal_invariants_from_json(const json &j);

    enum class ComputeKind
    {
        StructureSetDisk,
        StructureSetSphere,
        LGroup,
        NormalInvariants,
        RhoImage,
        KernelClosedForm
    };

    std::optional<ComputeKind> compute_kind_from_string(const std::string &s);
    const char *to_string(ComputeKind k);

    struct ComputeRequest
    {
        ComputeKind kind = ComputeKind::StructureSetDisk;
        long N = 0;
        std::optional<long> d;
        std::optional<long> m;
        std::optional<long> k;
        std::optional<long> n;
    };

    /// {schema_version, kind, params, case_label, free_rank, invariant_factors,
    ///  declared_odd_order, notes, descriptor}. Throws UnsupportedParams /
    /// std::invalid_argument on bad parameters.
    json compute_document(const ComputeRequest &request);

    std::string render_text(const json &document);
    std::string render_markdown(const json &document);

    enum class TableKind
    {
        MainTheorem,
        SphereCorollary
    };

    std::optional<TableKind> table_kind_from_string(const std::string &s);

    struct TableRow
    {
        long N = 0;
        unsigned long K = 0;
        unsigned long M = 1;
        long d = 0;
        long m = 0;
        std::string case_label;
        std::size_t free_rank = 0;
        std::vector<Integer> invariant_factors;
        Integer odd_order = 1;
        std::string components;
    };

    /// Rows for every (N, d, m) in the grid that the closed forms cover;
    /// unsupported combinations are skipped.
    std::vector<TableRow> table_rows(TableKind which, const std::vector<long> &Ns, const std::vector<long> &ds,
                                     const std::vector<long> &ms);

    std::string render_table_csv(const std::vector<TableRow> &rows);
    std::string render_table_json(TableKind which, const std::vector<TableRow> &rows);
    std::string render_table_markdown(TableKind which, const std::vector<TableRow> &rows);
}
