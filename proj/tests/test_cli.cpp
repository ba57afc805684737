#include <doctest.h>

#include "lenscalc/app.hpp"
#include "lenscalc/documents.hpp"
#include "lenscalc/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace lenscalc;
using namespace lenscalc::cli;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    Outcome run_cli(std::vector<std::string> args)
    {
        args.insert(args.begin(), "lenscalc");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    int spawn(const std::string &args)
    {
        const std::string cmd = std::string(LENSCALC_BIN) + " " + args + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
}

TEST_CASE("compute documents")
{
    auto r = run_cli({"compute", "structure-set-disk", "--N", "6", "--d", "2", "--m", "4"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["free_rank"] == 4);
    CHECK(doc["invariant_factors"].empty());
    CHECK(doc["schema_version"] == kSchemaVersion);
    for (const char *field : {"params", "case_label", "free_rank", "invariant_factors", "declared_odd_order", "notes"})
        CHECK(doc.contains(field));

    r = run_cli({"compute", "l-group", "--N", "7", "--n", "3"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["free_rank"] == 0);
    CHECK(doc["invariant_factors"].empty());

    r = run_cli({"compute", "rho-image", "--N", "4", "--d", "5", "--k", "0"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["free_rank"] == 0);
    CHECK(doc["invariant_factors"].empty());

    r = run_cli({"compute", "rho-image", "--N", "5", "--d", "5", "--m", "0", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z/5 ⊕ Z/25") != std::string::npos);

    r = run_cli({"compute", "structure-set-sphere", "--N", "6", "--d", "5", "--m", "4", "--format", "md"});
    CHECK(r.code == 0);
    CHECK(r.out.find("| declared odd order | 9 |") != std::string::npos);

    r = run_cli({"compute", "kernel-closed-form", "--N", "4", "--d", "5", "--k", "0"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(fin_ab_group_from_json(doc) == fin_ab_from_orders(std::vector<Integer>{4, 4, 2, 2}, 1));

    r = run_cli({"compute", "normal-invariants", "--N", "6", "--d", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["params"]["m"] == 4);
}

TEST_CASE("invalid parameters exit with 2")
{
    CHECK(run_cli({"compute", "structure-set-disk", "--N", "1", "--d", "2", "--m", "4"}).code == 2);
    CHECK(run_cli({"compute", "structure-set-disk", "--N", "6", "--d", "2"}).code == 2);
    CHECK(run_cli({"compute", "structure-set-disk", "--N", "7", "--d", "3", "--m", "3"}).code == 2);
    CHECK(run_cli({"compute", "rho-image", "--N", "4", "--d", "5", "--m", "3"}).code == 2);
    CHECK(run_cli({"compute", "bogus", "--N", "4"}).code == 2);
    CHECK(run_cli({"compute", "l-group", "--N", "4", "--n", "2", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"table", "main-theorem", "--format", "xml"}).code == 2);
    CHECK(run_cli({"table", "nope"}).code == 2);
    CHECK(run_cli({"verify", "--N", "4", "--suites"}).code == 2);
    CHECK(run_cli({"verify", "--N", "4", "--suites", "nope"}).code == 2);
    CHECK(run_cli({"verify", "--N", "4", "--d", "1:3"}).code == 2);
    CHECK(run_cli({"verify", "--N", "4", "--k", "3:1"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify exit codes and report")
{
    auto r = run_cli({"verify", "--N", "4,8", "--d", "2:5", "--k", "0:2", "--threads", "3"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["results"].size() == 2 * 4 * 3 * all_suites().size());

    auto again = run_cli({"verify", "--N", "8,4", "--d", "2:5", "--k", "0:2", "--threads", "1"});
    CHECK(again.out == r.out);

    r = run_cli({"verify", "--N", "8", "--d", "2", "--k", "0", "--suites", "factorization", "--mutate",
                 "scale-column"});
    CHECK(r.code == 1);

    r = run_cli({"verify", "--N", "3", "--d", "4", "--k", "1", "--suites", "factorization,splitting", "--format",
                 "md"});
    CHECK(r.code == 1);
    CHECK(r.out.find("odd-order") != std::string::npos);
}

TEST_CASE("tables")
{
    auto r = run_cli({"table", "main-theorem", "--N", "4", "--d", "4", "--m", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "N,K,M,d,m,case,free_rank,invariant_factors,odd_order\n4,2,1,4,2,d=2e,k=2l+1,1,2;2;4;4,1\n");

    r = run_cli({"table", "main-theorem", "--N", "4", "--d", "4", "--m", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rows"][0]["components"] == "F⁻=Z¹; Z/2; Z/4⊕Z/4; Z/2");

    r = run_cli({"table", "sphere-corollary", "--N", "6", "--d", "5", "--m", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rows"][0]["odd_order"] == 9);

    r = run_cli({"table", "main-theorem", "--N", "2:8", "--d", "2:5", "--m", "1:4", "--format", "md"});
    REQUIRE(r.code == 0);
    for (const char *h : {"## d=2e,k=2l:", "## d=2e,k=2l+1:", "## d=2e+1,k=2l:", "## d=2e+1,k=2l+1:"})
        CHECK(r.out.find(h) != std::string::npos);
}

TEST_CASE("json round trips")
{
    for (long N : {2, 4, 6, 8, 9, 12})
        for (long d = 2; d <= 6; ++d)
            for (long m = 1; m <= 6; ++m)
            {
                try
                {
                    const auto s = structure_set_disk(N, d, m);
                    CHECK(structure_set_from_json(json::parse(to_json(s).dump())) == s);
                }
                catch (const std::invalid_argument &)
                {
                }
                try
                {
                    const auto s = structure_set_product_sphere(N, d, m);
                    CHECK(sphere_structure_from_json(json::parse(to_json(s).dump())) == s);
                }
                catch (const std::invalid_argument &)
                {
                }
            }
    const auto l = l_group(6, 2);
    const auto l2 = l_group_from_json(to_json(l));
    CHECK(l2.group() == l.group());
    CHECK(l2.reduced_free_rank == l.reduced_free_rank);
    const auto ni = normal_invariants(12, 5, 4);
    const auto ni2 = normal_invariants_from_json(to_json(ni));
    CHECK(ni2.known_part() == ni.known_part());
    CHECK(ni2.m_part_order == ni.m_part_order);

    Integer big("123456789012345678901234567890");
    CHECK(integer_from_json(integer_to_json(big)) == big);
    const auto g = fin_ab_from_orders(std::vector<Integer>{big, 6}, 2);
    CHECK(fin_ab_group_from_json(json::parse(to_json(g).dump())) == g);
    CHECK_THROWS(fin_ab_group_from_json(json{{"free_rank", 0}, {"invariant_factors", {4, 2}}}));
}

TEST_CASE("spawned binary exit codes")
{
    CHECK(spawn("compute structure-set-disk --N 6 --d 2 --m 4") == 0);
    CHECK(spawn("compute structure-set-disk --N 0 --d 2 --m 4") == 2);
    CHECK(spawn("verify --N 4 --d 2:4 --k 0:2") == 0);
    CHECK(spawn("verify --N 8 --d 2 --k 0 --mutate scale-column") == 1);
    CHECK(spawn("verify --N 4 --suites ''") == 2);
    CHECK(spawn("table main-theorem --format pdf") == 2);

    const std::string path = "lenscalc_cli_out.csv";
    CHECK(spawn("table main-theorem --N 4 --d 4 --m 2 --out " + path) == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("4,2,1,4,2,d=2e,k=2l+1,1,2;2;4;4,1") != std::string::npos);
    std::remove(path.c_str());
}
