// Batch front end: parse a variety spec file, dispatch one analysis command,
// emit a canonical JSON report. Exit codes: 0 success, 1 tool/input error,
// 2 analysis-level negative verdict.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "workbench/errors.hpp"
#include "workbench/report.hpp"

namespace {

int classify_exit(const workbench::Error& e) {
    const std::string& code = e.code();
    if (code == "IdealNotPreserved" || code == "NotLND" || code == "NotOnVariety" ||
        code == "DifferentStrata" || code == "EmptySupport" || code == "NumericFailure")
        return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trinomial variety workbench"};
    app.require_subcommand(1);

    std::string spec_path, out_path;
    double epsilon = -1.0;
    int cap = -1, max_image_degree = -1;
    std::vector<long> degree;
    bool have_degree = false;

    const std::vector<std::string> commands = {
        "validate", "rigidity", "grading", "strata", "census",
        "lnd-check", "lnd-search", "exp", "transport", "example-hypersurface"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--spec", spec_path, "variety spec file (JSON)")->required();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--epsilon", epsilon, "numeric zero threshold (relative)");
        sub->add_option("--cap", cap, "nilpotency iteration cap");
        sub->add_option("--degree", degree, "target degree g0 (free lattice coordinates)")
            ->delimiter(',');
        sub->add_option("--max-image-degree", max_image_degree, "search image degree bound");
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    std::uint64_t seed = workbench::kDefaultSeed;
    if (const char* env = std::getenv("WORKBENCH_SEED")) seed = std::strtoull(env, nullptr, 10);
    have_degree = !degree.empty();

    try {
        workbench::SpecFile spec = workbench::parse_spec_file(spec_path);
        if (epsilon > 0) spec.options.epsilon = epsilon;
        if (cap >= 0) spec.options.cap = cap;
        if (max_image_degree > 0) spec.options.max_image_degree = max_image_degree;
        if (have_degree) {
            std::vector<mpz_class> g0;
            for (long v : degree) g0.emplace_back(v);
            spec.options.degree = std::move(g0);
        }
        workbench::Report report = workbench::run_command(command, spec, seed);
        workbench::emit_report(report, out_path);
        return report.exit_code;
    } catch (const workbench::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return classify_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
