#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccn/chroma.hpp"
#include "ccn/curling.hpp"
#include "ccn/families.hpp"
#include "ccn/formulas.hpp"
#include "ccn/oracle.hpp"
#include "ccn/selfcheck.hpp"
#include "ccn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFile = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;

// Anything wrong with an input file or stream (unreadable, bad JSON, bad
// graph data) — as opposed to bad arguments, which exit with 64.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ccn::Graph readGraphFile(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw FileError("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return ccn::fromJson(text);
    } catch (const std::exception& e) {
        throw FileError(std::string("bad graph input: ") + e.what());
    }
}

ccn::Family parseFamilyOrThrow(const std::string& name)
{
    auto f = ccn::parseFamily(name);
    if (!f) throw std::invalid_argument("unknown family: " + name);
    return *f;
}

// Shared input selection for the graph-consuming subcommands: a positional
// path / "-", or --family with --n. Exactly one source.
struct GraphInput {
    std::string path;
    std::string family;
    int n = 0;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("graph", path, "graph JSON file, or - for stdin");
        cmd->add_option("--family", family, "generate this family instead of reading");
        cmd->add_option("--n", n, "family parameter");
    }

    ccn::Graph resolve() const
    {
        const bool fromFile = !path.empty();
        const bool fromFamily = !family.empty();
        if (fromFile == fromFamily)
            throw std::invalid_argument(
                "need exactly one input: a graph file (or -) or --family with --n");
        if (fromFamily) {
            if (n == 0) throw std::invalid_argument("--family needs --n");
            return ccn::generate({parseFamilyOrThrow(family), n});
        }
        return readGraphFile(path);
    }
};

void emit(const nlohmann::ordered_json& j)
{
    std::cout << j.dump() << "\n";
}

std::vector<ccn::Family> allFamilies()
{
    std::vector<ccn::Family> out;
    for (int i = 0; i < 12; ++i) out.push_back(static_cast<ccn::Family>(i));
    return out;
}

int defaultSweepMax(ccn::Family f)
{
    return f == ccn::Family::Path ? 12 : 10;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"curling and chromatic curling numbers of graphs"};
    app.require_subcommand(1);

    // gen
    std::string genFamily;
    int genN = 0;
    bool genDot = false, genJson = false;
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("family", genFamily)->required();
    gen->add_option("n", genN)->required();
    auto* dotFlag = gen->add_flag("--dot", genDot, "DOT output");
    gen->add_flag("--json", genJson, "JSON output (default)")->excludes(dotFlag);

    // graph-consuming subcommands
    GraphInput curlIn, chiIn, chromIn, oracleIn;
    auto* curl = app.add_subcommand("curl", "degree-sequence curling numbers");
    curlIn.attach(curl);
    auto* chi = app.add_subcommand("chi", "chromatic number");
    chiIn.attach(chi);
    bool wantWitness = false;
    auto* chromcurl = app.add_subcommand("chromcurl", "chromatic curling numbers");
    chromIn.attach(chromcurl);
    chromcurl->add_flag("--witness", wantWitness, "include the colouring");
    int oracleBudget = ccn::kDefaultVertexBudget;
    auto* oracle = app.add_subcommand("oracle", "brute-force reference result");
    oracleIn.attach(oracle);
    oracle->add_option("--budget", oracleBudget, "max vertices the oracle accepts");

    // verify
    std::string familiesArg;
    int nMin = -1, nMax = -1, verifyBudget = ccn::kDefaultVertexBudget;
    bool asJson = false, asCsv = false, emitClaims = false;
    auto* verify = app.add_subcommand("verify", "adjudicate the claims table");
    verify->add_option("--families", familiesArg, "comma-separated family names");
    verify->add_option("--n-min", nMin, "sweep lower bound");
    verify->add_option("--n-max", nMax, "sweep upper bound");
    verify->add_option("--budget", verifyBudget, "oracle vertex budget");
    auto* jsonFlag = verify->add_flag("--json", asJson, "JSON-lines report");
    verify->add_flag("--csv", asCsv, "CSV report")->excludes(jsonFlag);
    verify->add_flag("--emit-claims", emitClaims, "print the claims table as CSV");

    // selfcheck
    ccn::SelfcheckOptions selfOpts;
    auto* self = app.add_subcommand("selfcheck", "engine vs oracle on random graphs");
    self->add_option("--count", selfOpts.count, "number of graphs");
    self->add_option("--seed", selfOpts.seed, "RNG seed");
    self->add_option("--max-n", selfOpts.maxN, "largest vertex count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            ccn::Graph g = ccn::generate({parseFamilyOrThrow(genFamily), genN});
            std::cout << (genDot ? ccn::toDot(g) : ccn::toJson(g) + "\n");
            return kExitOk;
        }
        if (curl->parsed()) {
            ccn::CurlingResult r = ccn::curlingNumbers(curlIn.resolve());
            nlohmann::ordered_json j;
            j["cn"] = r.cn;
            j["cnCompound"] = r.cnCompound;
            auto runs = nlohmann::ordered_json::array();
            for (const auto& run : r.runs.runs) runs.push_back({run.degree, run.count});
            j["runs"] = std::move(runs);
            emit(j);
            return kExitOk;
        }
        if (chi->parsed()) {
            nlohmann::ordered_json j;
            j["chi"] = ccn::chromaticNumber(chiIn.resolve());
            emit(j);
            return kExitOk;
        }
        if (chromcurl->parsed()) {
            ccn::ChromaticCurlingResult r = ccn::chiMinus(chromIn.resolve());
            nlohmann::ordered_json j;
            j["chi"] = r.chi;
            j["theta"] = r.theta;
            j["cnChi"] = r.cnChi;
            j["cncChi"] = r.cncChi;
            if (wantWitness) j["witness"] = r.witness.colours;
            emit(j);
            return kExitOk;
        }
        if (oracle->parsed()) {
            ccn::OracleResult r = ccn::oracleChromatic(oracleIn.resolve(), oracleBudget);
            nlohmann::ordered_json j;
            j["chi"] = r.chi;
            j["lexMaxTheta"] = r.lexMaxTheta;
            j["count"] = r.count;
            emit(j);
            return kExitOk;
        }
        if (verify->parsed()) {
            std::vector<ccn::Family> families;
            if (familiesArg.empty()) {
                families = allFamilies();
            } else {
                std::stringstream ss(familiesArg);
                std::string name;
                while (std::getline(ss, name, ','))
                    families.push_back(parseFamilyOrThrow(name));
            }
            if (emitClaims) {
                int lo = nMin < 0 ? 2 : nMin;
                int hi = nMax < 0 ? 10 : nMax;
                std::cout << ccn::claimsCsv(families, lo, hi);
                return kExitOk;
            }
            std::vector<ccn::VerdictRecord> records;
            for (ccn::Family f : families) {
                int lo = nMin < 0 ? ccn::claimMinimumN(f) : nMin;
                int hi = nMax < 0 ? defaultSweepMax(f) : nMax;
                auto part = ccn::verifyFamily(f, lo, hi, {verifyBudget});
                records.insert(records.end(), part.begin(), part.end());
            }
            if (asJson)
                std::cout << ccn::renderJsonLines(records);
            else if (asCsv)
                std::cout << ccn::renderCsv(records);
            else
                std::cout << ccn::renderTable(records);
            return ccn::verifyExitCode(records);
        }
        if (self->parsed()) {
            ccn::SelfcheckResult r = ccn::selfcheck(selfOpts);
            std::cout << r.report;
            return r.mismatches == 0 ? kExitOk : kExitMismatch;
        }
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    }
    return kExitUsage;
}
