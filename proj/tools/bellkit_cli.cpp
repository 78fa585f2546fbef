// bellkit: one-shot verification commands for two-qubit Bell/CHSH and
// contextuality checks. Every subcommand prints a deterministic report
// (text or canonical JSON) and exits 0 on pass/info, 1 on a failed check,
// 2 on usage or input errors.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bellkit/commands.hpp"
#include "bellkit/json_io.hpp"

namespace {

struct GlobalOptions {
    std::string format = "text";
    bool tolerance_report = false;
};

int emit(bellkit::Report report, const GlobalOptions& options) {
    if (options.tolerance_report) bellkit::append_tolerance_report(report);
    if (options.format == "json") {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for two-qubit Bell/CHSH bounds and "
                 "Kochen-Specker contextuality"};
    app.require_subcommand(1);

    GlobalOptions options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--tolerance-report", options.tolerance_report,
                 "Append the numeric tolerances used by the checks");

    int exit_code = 0;
    const auto run = [&](const std::function<bellkit::Report()>& command) {
        exit_code = emit(command(), options);
    };

    app.add_subcommand("chsh-quantum",
                       "CHSH value of the phased Bell state under x/y settings")
        ->fallthrough()
        ->callback([&] { run(bellkit::cmd_chsh_quantum); });

    app.add_subcommand("chsh-lhv",
                       "Classical CHSH ceiling over all deterministic strategies")
        ->fallthrough()
        ->callback([&] { run(bellkit::cmd_chsh_lhv); });

    auto* ks = app.add_subcommand(
        "ks-square", "Verify a contextuality square and search for a coloring");
    ks->fallthrough();
    auto* instance_path =
        ks->add_option("--instance", "Load an instance from a JSON file instead of the built-in square");
    auto* dump_path = ks->add_option(
        "--dump-instance", "Write the built-in square to a JSON file and report on it");
    ks->callback([&] {
        if (!dump_path->results().empty()) {
            const std::string path = dump_path->results().front();
            std::ofstream out(path, std::ios::binary);
            if (!out) throw bellkit::ParseError("cannot write file '" + path + "'");
            out << bellkit::ks_instance_to_json(bellkit::mermin_peres_square());
        }
        if (!instance_path->results().empty()) {
            const std::string path = instance_path->results().front();
            run([&] { return bellkit::cmd_ks_instance(bellkit::load_ks_instance(path), path); });
        } else {
            run(bellkit::cmd_ks_square);
        }
    });

    auto* comm = app.add_subcommand(
        "commutator", "Commutator observable F(A,B) for Pauli product specs like x.x y.y");
    comm->fallthrough();
    std::string spec_a, spec_b;
    comm->add_option("a", spec_a, "First observable: <axis> or <axis>.<axis>, axes x|y|z|i")
        ->required();
    comm->add_option("b", spec_b, "Second observable")->required();
    comm->callback([&] { run([&] { return bellkit::cmd_commutator(spec_a, spec_b); }); });

    auto* logic = app.add_subcommand("logic-cases",
                                     "Consistency analysis for the two top-level theses");
    logic->fallthrough();
    int bt = 0, c = 0;
    logic->add_option("--bt", bt, "Truth value for the Bell theorem")
        ->required()
        ->check(CLI::Range(0, 1));
    logic->add_option("--c", c, "Truth value for the commutativity thesis")
        ->required()
        ->check(CLI::Range(0, 1));
    logic->callback([&] { run([&] { return bellkit::cmd_logic_cases(bt, c); }); });

    auto* lhv = app.add_subcommand("lhv-eval",
                                   "Correlations and CHSH value of a hidden-variable model");
    lhv->fallthrough();
    std::string model_path;
    lhv->add_option("file", model_path, "Model JSON file")->required();
    lhv->callback([&] { run([&] { return bellkit::cmd_lhv_eval(model_path); }); });

    app.add_subcommand("tsirelson",
                       "Bell operator maximum eigenvalue vs the state-achieved value")
        ->fallthrough()
        ->callback([&] { run(bellkit::cmd_tsirelson); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors and --help
    } catch (const bellkit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bellkit::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bellkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
