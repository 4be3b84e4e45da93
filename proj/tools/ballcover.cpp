// ballcover: invariants, classification, Deligne-Mostow data and table
// reproduction for cyclic Calabi-Yau covers of products of projective spaces.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ballcover/cli.hpp"
#include "ballcover_golden.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ballcover::validation_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string embedded_golden(int which) {
    switch (which) {
        case 1: return std::string(ballcover::golden::kTable1);
        case 2: return std::string(ballcover::golden::kTable2);
        case 3: return std::string(ballcover::golden::kTable3);
        case 4: return std::string(ballcover::golden::kTable4);
        default: throw ballcover::validation_error("--which must be 1, 2, 3 or 4");
    }
}

}  // namespace

int main(int argc, char** argv) {
    namespace bc = ballcover::cli;
    CLI::App app{"Ball-type cyclic Calabi-Yau covers: invariants, classification, DM data, tables"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output, "write the report here instead of stdout");

    bc::HodgeOptions hodge;
    auto* hodge_cmd = app.add_subcommand("hodge", "Euler, Betti and Hodge data of one partition type");
    hodge_cmd->add_option("--ambient", hodge.ambient, "factor dimensions, e.g. 1,1,1")->required();
    hodge_cmd->add_option("--d", hodge.degree, "covering degree")->required();
    hodge_cmd->add_option("--parts", hodge.parts, "parts, e.g. \"3,3,0;0,0,3\"")->required();

    bc::ClassifyOptions classify;
    auto* classify_cmd = app.add_subcommand("classify", "list partition types of (3,...,3) on (P^1)^n");
    classify_cmd->add_option("--n", classify.n, "number of P^1 factors")->required();
    classify_cmd->add_flag("--all", classify.all, "every partition class, not only reduced ball types");
    classify_cmd->add_flag("--maximal", classify.maximal, "only maximal types in the refinement order");
    classify_cmd->add_flag("--complete", classify.complete, "only complete types");
    classify_cmd->add_flag("--no-half-twist", classify.no_half_twist, "drop Fermat half-twists");

    bc::DmOptions dm;
    int projection = 0;
    auto* dm_cmd = app.add_subcommand("dm", "Deligne-Mostow weights of the fibrations over P^1 factors");
    dm_cmd->add_option("--parts", dm.parts, "parts on (P^1)^n, e.g. \"3,1;0,2\"")->required();
    auto* projection_opt = dm_cmd->add_option("--projection", projection, "one-based factor index");
    dm_cmd->add_option("--node", dm.nodes, "part with one extra node (repeatable, n = 2)");
    dm_cmd->add_option("--tangent", dm.tangents, "two parts that are tangent, e.g. 1,2 (repeatable, n = 2)");

    int which = 0;
    std::string golden_path;
    auto* tables_cmd = app.add_subcommand("tables", "regenerate a reference table and diff it against the golden copy");
    tables_cmd->add_option("--which", which, "table number 1-4")->required()->check(CLI::Range(1, 4));
    tables_cmd->add_option("--golden", golden_path, "golden file to diff against instead of the embedded copy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bc::kExitValidation;
    }

    try {
        bc::Report report;
        if (*hodge_cmd) {
            report = bc::run_hodge(hodge);
        } else if (*classify_cmd) {
            report = bc::run_classify(classify);
        } else if (*dm_cmd) {
            if (*projection_opt) dm.projection = projection;
            report = bc::run_dm(dm);
        } else {
            report = bc::run_tables(which, golden_path.empty() ? embedded_golden(which) : read_file(golden_path));
        }
        const std::string rendered = bc::render(report, format);
        if (output.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(output);
            if (!out) throw ballcover::validation_error("cannot write " + output);
            out << rendered;
        }
        return report.exit_code;
    } catch (const ballcover::consistency_error& e) {
        std::cerr << "consistency check failed: " << e.what() << "\n";
        return bc::kExitConsistency;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bc::kExitValidation;
    }
}
