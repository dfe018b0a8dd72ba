#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "runner.hpp"

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wlin: exact weighted linearization of formal vector fields"};
    app.require_subcommand(1);

    wlin::cli::JobSpec job;
    std::string vars_csv, weights_csv;

    auto add_common = [&](CLI::App* cmd, bool takes_field) {
        cmd->add_option("--vars", vars_csv, "comma-separated variable names")->required();
        cmd->add_option("--weights", weights_csv, "comma-separated positive integer weights")
            ->required();
        cmd->add_option("--order", job.order, "weighted-degree cutoff N (default 10)");
        cmd->add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", job.out_path, "write the report to a file");
        cmd->add_option("--threads", job.threads, "worker threads for per-degree analyses");
        cmd->add_flag("--permute-weights", job.permute_weights,
                      "sort a non-monotone weighting, relabelling the variables");
        if (takes_field) {
            cmd->add_option("field", job.field_text, "the vector field expression");
            cmd->add_option("--input", job.input_path,
                            "read the field from a file (expression or JSON document)");
        }
    };

    auto* analyze = app.add_subcommand(
        "analyze", "admissibility, graded slices, adjoint certificates, resonances");
    add_common(analyze, true);

    auto* linearize =
        app.add_subcommand("linearize", "construct the linearizing diffeomorphism");
    add_common(linearize, true);
    linearize->add_option("--method", job.method, "moser|euler|oracle")
        ->check(CLI::IsMember({"moser", "euler", "oracle"}));

    auto* flow = app.add_subcommand("flow", "flow isotopy of the field");
    add_common(flow, true);
    flow->add_option("--t-cap", [&job](const std::vector<std::string>& vals) {
        job.t_cap = std::stol(vals[0]);
        return true;
    }, "largest computed t exponent");
    flow->add_option("--at", job.eval_at, "evaluate the isotopy at t = TAU");

    auto* exp = app.add_subcommand("exp", "exponential flow coefficients");
    add_common(exp, true);
    exp->add_option("--t-cap", [&job](const std::vector<std::string>& vals) {
        job.t_cap = std::stol(vals[0]);
        return true;
    }, "largest computed t exponent");
    exp->add_option("--at", job.eval_at, "evaluate the isotopy at t = TAU");

    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
    add_common(bracket, true);
    bracket->add_option("--with", job.second_field_text, "the second field")->required();

    auto* pullback = app.add_subcommand("pullback", "pullback of a field along a map");
    add_common(pullback, true);
    pullback->add_option("--map", job.map_text, "coordinate tuple of the diffeomorphism")
        ->required();

    CLI11_PARSE(app, argc, argv);

    job.command = app.get_subcommands().front()->get_name();
    job.variables = split_names(vars_csv);
    for (const auto& w : split_names(weights_csv)) {
        try {
            job.weights.push_back(std::stoi(w));
        } catch (const std::exception&) {
            std::cerr << "bad weight '" << w << "'\n";
            return wlin::cli::kBadInput;
        }
    }
    return wlin::cli::run(job, std::cout);
}
