#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ccn/verify.hpp"
#include "fixtures.hpp"

using ccn::Family;
using ccn::Verdict;

TEST_CASE("cycles confirm everywhere with the oracle in the loop")
{
    auto records = ccn::verifyFamily(Family::Cycle, 3, 10);
    REQUIRE(records.size() == 8);
    for (const auto& r : records) {
        CAPTURE(r.n);
        CHECK(r.verdict == Verdict::Confirmed);
        REQUIRE(r.oracleCn.has_value());
        CHECK(*r.oracleCn == r.computedCn);
        CHECK(*r.oracleCnc == r.computedCnc);
    }
    CHECK(ccn::verifyExitCode(records) == 0);
}

TEST_CASE("rows below the claim range are reported as skipped")
{
    auto records = ccn::verifyFamily(Family::Path, 1, 2);
    REQUIRE(records.size() == 2);
    CHECK(records[0].n == 1);
    CHECK(records[0].verdict == Verdict::Skipped);
    CHECK_FALSE(records[0].claimedCn.has_value());
    CHECK(records[1].verdict == Verdict::Confirmed);
}

TEST_CASE("a wrong claim is flagged against both engine and oracle")
{
    auto records = ccn::verifyFamily(Family::Antiprism, 6, 6);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.verdict == Verdict::PaperMismatch);
    CHECK(r.claimedCn == 3);
    CHECK(r.claimedCnc == 81);
    CHECK(r.computedCn == 4);
    CHECK(r.computedCnc == 64);
    REQUIRE(r.oracleCn.has_value());  // 12 vertices, inside the budget
    CHECK(*r.oracleCn == 4);
    CHECK(*r.oracleCnc == 64);
    CHECK(ccn::verifyExitCode(records) == 0);  // claim defects are reportable
}

TEST_CASE("oracle is skipped beyond the vertex budget")
{
    auto records = ccn::verifyFamily(Family::Blossom, 9, 9);
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == Verdict::PaperMismatch);
    CHECK_FALSE(records[0].oracleCn.has_value());

    ccn::VerifyOptions tight;
    tight.vertexBudget = 11;
    auto c12 = ccn::verifyFamily(Family::Cycle, 12, 12, tight);
    CHECK(c12[0].verdict == Verdict::Confirmed);
    CHECK_FALSE(c12[0].oracleCn.has_value());
}

TEST_CASE("flower adjudication at desk scale")
{
    auto records = ccn::verifyFamily(Family::Flower, 3, 5);
    REQUIRE(records.size() == 3);
    CHECK(records[0].verdict == Verdict::PaperMismatch);
    CHECK(records[0].computedCnc == 6);
    CHECK(records[0].claimedCnc == 3);
    CHECK(records[1].verdict == Verdict::Confirmed);
    CHECK(records[2].verdict == Verdict::Confirmed);
    for (const auto& r : records) CHECK(r.oracleCn.has_value());
}

TEST_CASE("witnessCheck accepts realizing colourings and rejects others")
{
    for (const auto& fx : fixtures::referenceColourings()) {
        ccn::ColourAssignment a{fx.colours, static_cast<int>(fx.theta.size())};
        CAPTURE(fx.name);
        CHECK(ccn::witnessCheck(fx.spec.family, fx.spec.n, a) == fx.claimWitness);
    }

    // proper but not extremal: all-distinct colours on the n=4 wheel
    ccn::ColourAssignment rainbow{{1, 2, 3, 4, 5}, 5};
    CHECK_FALSE(ccn::witnessCheck(Family::Wheel, 4, rainbow));

    ccn::ColourAssignment improper{{1, 1, 2, 3, 4}, 4};
    CHECK_THROWS_AS(ccn::witnessCheck(Family::Wheel, 4, improper),
                    ccn::ImproperColouringError);
}

TEST_CASE("transcribed colourings have exactly the stated class sizes")
{
    for (const auto& fx : fixtures::referenceColourings()) {
        ccn::Graph g = ccn::generate(fx.spec);
        ccn::ColourAssignment a{fx.colours, static_cast<int>(fx.theta.size())};
        auto sizes = ccn::classSizes(g, a);  // throws if not proper
        std::sort(sizes.rbegin(), sizes.rend());
        CAPTURE(fx.name);
        CHECK(sizes == fx.theta);
    }
}

TEST_CASE("renderers are deterministic and well formed")
{
    auto records = ccn::verifyFamily(Family::Helm, 3, 6);

    auto table = ccn::renderTable(records);
    CHECK(table == ccn::renderTable(records));
    CHECK(table.find("CONFIRMED") != std::string::npos);
    CHECK(table.find("helm/odd") != std::string::npos);

    auto csv = ccn::renderCsv(records);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
    CHECK(csv.starts_with("family,"));

    auto lines = ccn::renderJsonLines(records);
    std::istringstream in(lines);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["family"] == "helm");
        CHECK(j["verdict"] == "CONFIRMED");
        CHECK(j["claimedCn"].is_number());
        ++rows;
    }
    CHECK(rows == 4);

    auto claims = ccn::claimsCsv({Family::Path, Family::Cycle}, 3, 5);
    CHECK(claims == ccn::claimsCsv({Family::Path, Family::Cycle}, 3, 5));
    CHECK(std::count(claims.begin(), claims.end(), '\n') == 7);
}

TEST_CASE("null oracle columns serialize as JSON null")
{
    auto records = ccn::verifyFamily(Family::Blossom, 9, 9);
    auto j = nlohmann::json::parse(ccn::renderJsonLines(records));
    CHECK(j["oracleCn"].is_null());
    CHECK(j["oracleCnc"].is_null());
    CHECK(j["computedCn"] == 6);
}

TEST_CASE("exit code classifier")
{
    ccn::VerdictRecord ok{};
    ok.verdict = Verdict::Confirmed;
    ccn::VerdictRecord bad{};
    bad.verdict = Verdict::EngineOracleMismatch;
    ccn::VerdictRecord pm{};
    pm.verdict = Verdict::PaperMismatch;
    CHECK(ccn::verifyExitCode({ok, pm}) == 0);
    CHECK(ccn::verifyExitCode({ok, bad, pm}) == 2);
    CHECK(ccn::verifyExitCode({}) == 0);

    CHECK(ccn::verdictName(Verdict::PaperMismatch) == "PAPER_MISMATCH");
    CHECK(ccn::verdictName(Verdict::EngineOracleMismatch) ==
          "ENGINE_ORACLE_MISMATCH");
}
