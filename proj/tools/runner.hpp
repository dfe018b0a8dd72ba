#ifndef WLIN_TOOLS_RUNNER_HPP
#define WLIN_TOOLS_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wlin::cli {

/// Exit codes, total over the pipeline's documented failure modes.
enum ExitCode : int {
    kOk = 0,
    kNotAdmissible = 2,
    kSingularAdjoint = 3,
    kBadInput = 4,
    kNonEvaluative = 5,
};

struct JobSpec {
    std::string command;  // analyze | linearize | flow | exp | bracket | pullback
    std::string field_text;              // inline expression, or
    std::string input_path;              // file with expression/JSON document
    std::string second_field_text;       // bracket: the second field
    std::string map_text;                // pullback: the coordinate tuple
    std::vector<std::string> variables;
    std::vector<int> weights;
    long order = 10;
    std::optional<long> t_cap;
    std::string eval_at;             // flow/exp: evaluate the isotopy at t = tau
    std::string method = "moser";        // moser | euler | oracle
    std::string format = "text";         // text | json
    std::string out_path;                // empty = stdout
    int threads = 1;
    bool permute_weights = false;
};

/// Runs the job, writing the report to `out`. Returns the exit code; all
/// documented failures produce a report and a nonzero code instead of
/// throwing.
int run(const JobSpec& job, std::ostream& out);

}  // namespace wlin::cli

#endif
