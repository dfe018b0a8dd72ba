#include "runner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "report.hpp"
#include "textio.hpp"
#include "wlin/errors.hpp"
#include "wlin/grading.hpp"
#include "wlin/linearize.hpp"
#include "wlin/spectral.hpp"

namespace wlin::cli {
namespace {

constexpr const char* kVersion = "1";
constexpr const char* kConventionNote =
    "phi_inverse gives the new coordinate functions";

/// Runs fn(k) for k in [0, n) on up to `threads` workers; results are keyed
/// by index so the outcome is identical regardless of the thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t per = (n + static_cast<std::size_t>(threads) - 1) /
                      static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * per;
        const std::size_t hi = std::min(n, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t k = lo; k < hi; ++k) fn(k);
        });
    }
    for (auto& th : pool) th.join();
}

struct PreparedJob {
    std::vector<std::string> variables;  // after any permutation
    SeriesContext ctx;                   // report-order context
    VectorField X;
    std::vector<std::string> notes;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

VectorField parse_any_field(const std::string& text, const std::vector<std::string>& vars,
                            const SeriesContext& ctx) {
    // Leading '{' selects the JSON document form.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json doc = json::parse(text);
        if (doc.contains("variables")) {
            std::vector<std::string> doc_vars =
                doc["variables"].get<std::vector<std::string>>();
            if (doc_vars != vars)
                throw std::invalid_argument(
                    "field document variables do not match --vars");
        }
        return field_from_json(doc, ctx);
    }
    return parse_field(text, vars, ctx);
}

PreparedJob prepare(const JobSpec& job) {
    if (job.variables.empty()) throw std::invalid_argument("--vars is required");
    if (job.weights.size() != job.variables.size())
        throw std::invalid_argument("--weights length must match --vars");
    if (job.order < 1) throw std::invalid_argument("--order must be >= 1");
    for (const auto& v : job.variables) {
        if (v == "d")
            throw std::invalid_argument("'d' cannot be used as a variable name");
        if (std::count(job.variables.begin(), job.variables.end(), v) != 1)
            throw std::invalid_argument("variable names must be distinct");
    }

    std::vector<std::string> vars = job.variables;
    std::vector<int> weights = job.weights;
    std::vector<std::string> notes;
    if (!std::is_sorted(weights.begin(), weights.end())) {
        if (!job.permute_weights)
            throw std::invalid_argument(
                "weights must be non-decreasing; pass --permute-weights to sort them "
                "and relabel the variables");
        std::vector<std::size_t> perm(weights.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
        std::vector<std::string> pv;
        std::vector<int> pw;
        std::ostringstream note;
        note << "applied coordinate permutation:";
        for (std::size_t i = 0; i < perm.size(); ++i) {
            pv.push_back(vars[perm[i]]);
            pw.push_back(weights[perm[i]]);
            note << " " << vars[perm[i]];
        }
        vars = std::move(pv);
        weights = std::move(pw);
        notes.push_back(note.str());
    }

    const SeriesContext ctx(Weighting(weights), job.order);
    std::string text = job.field_text;
    if (text.empty() && !job.input_path.empty()) text = slurp(job.input_path);
    if (text.empty()) throw std::invalid_argument("no input field given");
    VectorField X = parse_any_field(text, vars, ctx);
    return PreparedJob{std::move(vars), ctx, std::move(X), std::move(notes)};
}

json report_shell(const JobSpec& job, const PreparedJob& prep) {
    json doc;
    doc["version"] = kVersion;
    doc["command"] = job.command;
    doc["variables"] = prep.variables;
    doc["weighting"] = prep.ctx.weights().weights();
    doc["cutoff"] = prep.ctx.cutoff();
    doc["exactness"] = "exact";
    doc["notes"] = prep.notes;
    doc["certificates"] = json::array();
    return doc;
}

void emit(const JobSpec& job, const json& doc, std::ostream& out);

// ---------------------------------------------------------------- analyze

int run_analyze(const JobSpec& job, const PreparedJob& prep, json& doc) {
    const auto& ctx = prep.ctx;
    const auto& X = prep.X;
    json result;

    const AdmissibilityReport adm = is_admissible(X);
    result["admissible"] = adm.admissible;
    if (!adm.admissible) {
        json alpha = json::array();
        for (std::size_t i = 0; i < adm.witness->alpha.size(); ++i)
            alpha.push_back(adm.witness->alpha[i]);
        result["witness"] = {{"axis", adm.witness->axis + 1}, {"alpha", alpha}};
        doc["result"] = result;
        return kNotAdmissible;
    }

    const VectorField X0 = weighted_linear_approximation(X);
    result["weighted_linear_approximation"] = to_json(X0, prep.variables);
    result["weighted_euler_like"] = is_weighted_euler_like(X);

    json slices = json::array();
    for (long k = 0; k <= ctx.cutoff(); ++k) {
        const VectorField slice = graded_component_vf(X, k);
        if (slice.is_zero()) continue;
        slices.push_back({{"degree", k},
                          {"dimension", slice_dimension(ctx.weights(), k)},
                          {"field", to_json(slice, prep.variables)}});
    }
    result["graded_slices"] = slices;

    // Per-degree adjoint certificates, independent across degrees.
    const long degrees = ctx.cutoff();
    std::vector<DegreeCertificate> certs(static_cast<std::size_t>(degrees));
    parallel_for(static_cast<std::size_t>(degrees), job.threads, [&](std::size_t idx) {
        const long k = static_cast<long>(idx) + 1;
        const AdjointMatrix ad = adjoint_matrix(X0, k);
        const InvertibilityReport inv = is_adjoint_invertible(ad);
        certs[idx] = {k, ad.basis.size(), inv.invertible, inv.determinant};
    });
    for (const auto& c : certs) doc["certificates"].push_back(to_json(c));

    const LinearPart lp = weighted_linear_part(X);
    result["char_poly"] = [&] {
        std::ostringstream os;
        os << char_poly(lp);
        return os.str();
    }();
    result["hyperbolic"] = is_hyperbolic(lp);

    const CompatibleOrdering ordering = compatible_ordering(lp);
    if (ordering.supported) {
        json lambda = json::array();
        for (const auto& l : ordering.lambda) lambda.push_back(l.str());
        result["compatible_ordering"] = lambda;
        result["resonances"] = to_json(enumerate_resonances(ordering.lambda, ctx.weights(),
                                                            ctx.cutoff()));
    } else {
        json factors = json::array();
        for (const auto& f : ordering.unresolved) {
            std::ostringstream os;
            os << f;
            factors.push_back(os.str());
        }
        result["compatible_ordering"] = "unsupported";
        result["unresolved_factors"] = factors;
        result["resonances"] = to_json(enumerate_resonances_heuristic(lp, ctx.cutoff()));
        doc["exactness"] = "heuristic";
    }
    doc["result"] = result;
    return kOk;
}

// -------------------------------------------------------------- linearize

int run_linearize(const JobSpec& job, const PreparedJob& prep, json& doc) {
    const auto& X = prep.X;
    doc["notes"].push_back(kConventionNote);

    LinearizationResult result = [&] {
        if (job.method == "euler") return euler_like_linearize(X, prep.ctx.cutoff());
        if (job.method == "oracle") return iterative_linearize_oracle(X, prep.ctx.cutoff());
        // Default: Moser pipeline with the Euler-like fast path when it applies.
        if (is_weighted_euler_like(X.embedded(prep.ctx.padded())))
            return euler_like_linearize(X, prep.ctx.cutoff());
        return moser_linearize(X, prep.ctx.cutoff());
    }();

    doc["result"] = to_json(result, prep.variables, prep.ctx.cutoff());
    doc["certificates"] = doc["result"]["certificates"];
    return kOk;
}

// ------------------------------------------------------------- flow / exp

int run_flow(const JobSpec& job, const PreparedJob& prep, json& doc, bool exponential) {
    const long cap = job.t_cap.value_or(prep.ctx.cutoff());
    if (cap < 0) throw std::invalid_argument("--t-cap must be >= 0");
    const Isotopy iso = exponential
                            ? exponential_flow(prep.X, cap)
                            : flow(TimeVectorField::constant(prep.X), cap);
    doc["result"] = to_json(iso, prep.variables);
    if (!job.eval_at.empty()) {
        const Rational tau = Rational::parse(job.eval_at);
        const FormalDiffeo at_tau = evaluate_isotopy(iso, tau);
        doc["result"]["evaluation"] = {{"at", tau.str()},
                                       {"map", tuple_to_json(at_tau.components(), prep.variables)}};
    }
    return kOk;
}

// ---------------------------------------------------------------- bracket

int run_bracket(const JobSpec& job, const PreparedJob& prep, json& doc) {
    if (job.second_field_text.empty())
        throw std::invalid_argument("bracket requires --with <field>");
    const VectorField Y = parse_any_field(job.second_field_text, prep.variables, prep.ctx);
    doc["result"] = to_json(lie_bracket(prep.X, Y), prep.variables);
    return kOk;
}

// --------------------------------------------------------------- pullback

int run_pullback(const JobSpec& job, const PreparedJob& prep, json& doc) {
    if (job.map_text.empty())
        throw std::invalid_argument("pullback requires --map <tuple>");
    SeriesTuple tuple = parse_tuple(job.map_text, prep.variables, prep.ctx);
    const DiffeoCheck check = is_formal_diffeo(tuple);
    if (!check.ok)
        throw std::invalid_argument("--map is not a formal diffeomorphism: " + check.diagnostic);
    const FormalDiffeo phi = FormalDiffeo::create(std::move(tuple));
    doc["result"] = to_json(pullback_vf(phi, prep.X), prep.variables);
    return kOk;
}

// ------------------------------------------------------------- text shape

void render_text(const json& doc, std::ostream& out) {
    out << "wlin " << doc["command"].get<std::string>() << " report\n";
    out << "  variables:";
    for (const auto& v : doc["variables"]) out << " " << v.get<std::string>();
    out << "\n  weighting:";
    for (const auto& w : doc["weighting"]) out << " " << w.get<long>();
    out << "\n  cutoff: " << doc["cutoff"].get<long>();
    out << "\n  exactness: " << doc["exactness"].get<std::string>() << "\n";
    for (const auto& n : doc["notes"]) out << "  note: " << n.get<std::string>() << "\n";
    if (doc.contains("error")) {
        out << "  error: " << doc["error"]["message"].get<std::string>() << "\n";
        return;
    }
    out << doc["result"].dump(2) << "\n";
    if (!doc["certificates"].empty())
        out << "certificates: " << doc["certificates"].dump(2) << "\n";
}

void emit(const JobSpec& job, const json& doc, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!job.out_path.empty()) {
        file.open(job.out_path);
        if (!file) throw std::invalid_argument("cannot open output file '" + job.out_path + "'");
        sink = &file;
    }
    if (job.format == "json") {
        *sink << doc.dump(2) << "\n";
    } else {
        render_text(doc, *sink);
    }
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

}  // namespace

int run(const JobSpec& job, std::ostream& out) {
    json doc;
    int code = kOk;
    try {
        const PreparedJob prep = prepare(job);
        doc = report_shell(job, prep);
        if (job.command == "analyze") {
            code = run_analyze(job, prep, doc);
        } else if (job.command == "linearize") {
            code = run_linearize(job, prep, doc);
        } else if (job.command == "flow") {
            code = run_flow(job, prep, doc, false);
        } else if (job.command == "exp") {
            code = run_flow(job, prep, doc, true);
        } else if (job.command == "bracket") {
            code = run_bracket(job, prep, doc);
        } else if (job.command == "pullback") {
            code = run_pullback(job, prep, doc);
        } else {
            throw std::invalid_argument("unknown command '" + job.command + "'");
        }
    } catch (const NotAdmissibleError& e) {
        doc["error"] = error_json("not_admissible", e.what());
        code = kNotAdmissible;
    } catch (const SingularAdjointError& e) {
        json err = error_json("singular_adjoint", e.what());
        err["degree"] = e.degree();
        err["kernel"] = e.kernel();
        doc["error"] = err;
        code = kSingularAdjoint;
    } catch (const NonEvaluativeError& e) {
        doc["error"] = error_json("non_evaluative", e.what());
        code = kNonEvaluative;
    } catch (const ParseError& e) {
        json err = error_json("parse_error", e.what());
        err["line"] = e.line();
        err["column"] = e.column();
        doc["error"] = err;
        code = kBadInput;
    } catch (const json::exception& e) {
        doc["error"] = error_json("parse_error", e.what());
        code = kBadInput;
    } catch (const std::invalid_argument& e) {
        doc["error"] = error_json("bad_input", e.what());
        code = kBadInput;
    }

    if (!doc.contains("version")) {
        doc["version"] = kVersion;
        doc["command"] = job.command;
        doc["variables"] = job.variables;
        doc["weighting"] = job.weights;
        doc["cutoff"] = job.order;
        doc["exactness"] = "exact";
        doc["notes"] = json::array();
        doc["certificates"] = json::array();
    }
    try {
        emit(job, doc, out);
    } catch (const std::invalid_argument& e) {
        out << e.what() << "\n";
        return kBadInput;
    }
    return code;
}

}  // namespace wlin::cli
