#include "frameinv/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frameinv/digest.hpp"
#include "frameinv/immersion.hpp"
#include "frameinv/oracle.hpp"
#include "frameinv/parser.hpp"
#include "frameinv/stiefel.hpp"
#include "frameinv/version.hpp"

namespace frameinv {

namespace {

using ordered_json = nlohmann::ordered_json;
using steady_clock = std::chrono::steady_clock;

double ms_between(steady_clock::time_point a, steady_clock::time_point b) {
    double ms = std::chrono::duration<double, std::milli>(b - a).count();
    return std::round(ms * 1000.0) / 1000.0;
}

struct CommonFlags {
    std::string path;
    std::string json_path;
    std::string order_name = "degrevlex";
    std::uint64_t seed = 0;
    unsigned retries = 8;
    bool oracle = false;
    double tol = 1e-8;
    bool quiet = false;
    std::uint64_t max_spairs = 200000;
    bool timings = false;
    bool diagnostics = false;

    MonomialOrder order() const {
        return order_name == "lex" ? MonomialOrder::Lex : MonomialOrder::Degrevlex;
    }
    StiefelOptions stiefel_options() const {
        StiefelOptions o;
        o.order = order();
        o.max_spairs = max_spairs;
        o.seed = seed;
        o.retries = retries;
        return o;
    }
    GroebnerOptions groebner_options() const {
        GroebnerOptions o;
        o.order = order();
        o.max_spairs = max_spairs;
        return o;
    }
    OracleOptions oracle_options() const {
        OracleOptions o;
        o.tol = tol;
        o.seed = seed;
        return o;
    }
};

struct LoadedProblem {
    std::string kind;
    RingPtr ring;
    Polynomial f;
    std::optional<PolyMatrix> matrix; // stiefel kind
    std::vector<Polynomial> g;        // immersion kind
    std::string bytes;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polynomial parse_field(const nlohmann::json& node, const RingPtr& ring, const std::string& where) {
    if (!node.is_string())
        throw ValidationError(where + " must be a polynomial string");
    try {
        return parse_poly(node.get<std::string>(), ring);
    } catch (const ParseError& e) {
        throw ValidationError("in " + where + ": " + e.what());
    }
}

LoadedProblem load_problem(const std::string& path) {
    LoadedProblem lp;
    lp.bytes = read_file(path);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(lp.bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("problem file is not valid JSON (byte " + std::to_string(e.byte) +
                              "): " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ValidationError("problem file must be a JSON object");

    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ValidationError("field \"kind\" is required and must be \"stiefel\" or \"immersion\"");
    lp.kind = doc["kind"].get<std::string>();
    if (lp.kind != "stiefel" && lp.kind != "immersion")
        throw ValidationError("field \"kind\" must be \"stiefel\" or \"immersion\", got \"" +
                              lp.kind + "\"");

    const std::set<std::string> allowed = lp.kind == "stiefel"
                                              ? std::set<std::string>{"kind", "variables", "matrix", "f"}
                                              : std::set<std::string>{"kind", "variables", "g", "f"};
    for (const auto& item : doc.items())
        if (!allowed.count(item.key()))
            throw ValidationError("unknown field \"" + item.key() + "\" in problem file");

    if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty())
        throw ValidationError("field \"variables\" must be a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw ValidationError("every entry of \"variables\" must be a string");
        names.push_back(v.get<std::string>());
    }
    lp.ring = make_ring(std::move(names));

    if (!doc.contains("f")) throw ValidationError("field \"f\" is required");
    lp.f = parse_field(doc["f"], lp.ring, "field \"f\"");

    if (lp.kind == "stiefel") {
        if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].empty())
            throw ValidationError("field \"matrix\" must be a nonempty array of rows");
        const auto& rows = doc["matrix"];
        std::size_t n = rows.size();
        if (!rows[0].is_array() || rows[0].empty())
            throw ValidationError("every matrix row must be a nonempty array of polynomial strings");
        std::size_t k = rows[0].size();
        PolyMatrix m(n, k, lp.ring);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != k)
                throw ValidationError("matrix rows must all have the same length (row " +
                                      std::to_string(i) + " differs)");
            for (std::size_t j = 0; j < k; ++j)
                m.at(i, j) = parse_field(rows[i][j], lp.ring,
                                         "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
        lp.matrix = std::move(m);
    } else {
        if (!doc.contains("g") || !doc["g"].is_array() || doc["g"].empty())
            throw ValidationError("field \"g\" must be a nonempty array of polynomial strings");
        std::size_t i = 0;
        for (const auto& entry : doc["g"]) {
            lp.g.push_back(parse_field(entry, lp.ring, "g[" + std::to_string(i) + "]"));
            ++i;
        }
    }
    return lp;
}

// Builds the frame problem behind any file kind.
StiefelProblem to_stiefel(const LoadedProblem& lp) {
    if (lp.kind == "stiefel") return StiefelProblem(*lp.matrix, lp.f);
    return build_alpha(ImmersionProblem(lp.f, lp.g));
}

std::string joined_variables(const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        if (i) out += ",";
        out += ring.variable(i);
    }
    return out;
}

ordered_json base_report(const std::string& command, const CommonFlags& flags,
                         const LoadedProblem& lp) {
    ordered_json r;
    r["schema"] = "1";
    r["tool"] = ordered_json{{"name", tool_name}, {"version", tool_version}};
    r["command"] = command;
    r["input"] = ordered_json{
        {"path", flags.path}, {"sha256", sha256_hex(lp.bytes)}, {"kind", lp.kind}};
    r["settings"] = ordered_json{{"order", flags.order_name}, {"seed", flags.seed},
                                 {"retries", flags.retries},  {"max_spairs", flags.max_spairs},
                                 {"tol", flags.tol},          {"oracle", flags.oracle}};
    ordered_json vars = ordered_json::array();
    for (const auto& v : lp.ring->variables()) vars.push_back(v);
    if (lp.kind == "stiefel") {
        r["problem"] = ordered_json{
            {"n", lp.matrix->rows()}, {"k", lp.matrix->cols()}, {"variables", vars}};
    } else {
        r["problem"] = ordered_json{
            {"m", lp.g.size() / 2}, {"components", lp.g.size()}, {"variables", vars}};
    }
    r["status"] = "ok";
    return r;
}

ordered_json inertia_json(const Inertia& inertia) {
    return ordered_json{{"positives", inertia.positives},
                        {"negatives", inertia.negatives},
                        {"zeros", inertia.zeros}};
}

ordered_json hypotheses_json(const HypothesisReport& h) {
    ordered_json j;
    j["zero_dimensional"] = h.zero_dimensional;
    j["algebra_dim"] = h.algebra_dim;
    j["pivot_minor_invertible"] = h.pivot_minor_invertible;
    j["theta_delta_nondegenerate"] = h.theta_delta_nondegenerate;
    j["theta_f_delta_nondegenerate"] = h.theta_f_delta_nondegenerate;
    if (h.randomization) {
        j["randomization"] = ordered_json{{"seed", h.randomization->seed},
                                          {"attempts", h.randomization->attempts},
                                          {"matrix", h.randomization->matrix}};
    } else {
        j["randomization"] = nullptr;
    }
    return j;
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json poly_list_json(const std::vector<Polynomial>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : polys) arr.push_back(format_poly(p));
    return arr;
}

ordered_json basis_json(const QuotientAlgebra& algebra) {
    ordered_json arr = ordered_json::array();
    for (const auto& mono : algebra.basis())
        arr.push_back(format_poly(Polynomial::term(algebra.ring(), mono, Rational(1))));
    return arr;
}

ordered_json trace_vector_json(const QuotientAlgebra& algebra) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : algebra.trace_vector()) arr.push_back(to_string(t));
    return arr;
}

ordered_json lambda_result_json(const LambdaReport& rep) {
    const PipelineData& data = *rep.data;
    ordered_json j;
    j["lambda"] = rep.lambda;
    j["formula_sign"] = rep.formula_sign;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["signature_delta"] = rep.signature_delta;
    j["signature_f_delta"] = rep.signature_f_delta;
    j["inertia_delta"] = inertia_json(rep.inertia_delta);
    j["inertia_f_delta"] = inertia_json(rep.inertia_f_delta);
    j["algebra_dim"] = rep.algebra_dim;
    j["basis"] = basis_json(*data.algebra);
    j["trace_vector"] = trace_vector_json(*data.algebra);
    j["groebner_basis"] = poly_list_json(data.gb.generators);
    j["pivot_minor"] = format_poly(data.pivot);
    j["delta_residue"] = format_poly(data.delta_residue);
    j["f_delta_residue"] = format_poly(data.f_delta_residue);
    j["theta_delta"] = matrix_json(data.theta_delta);
    j["theta_f_delta"] = matrix_json(data.theta_f_delta);
    return j;
}

ordered_json points_json(const std::vector<RealPoint>& points, const Polynomial* delta,
                         const Polynomial* f) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : points) {
        ordered_json one;
        one["coords"] = p.coords;
        one["residual"] = p.residual;
        if (f) one["f"] = f->evaluate_double(p.coords);
        if (delta) one["delta"] = delta->evaluate_double(p.coords);
        arr.push_back(std::move(one));
    }
    return arr;
}

std::string format_point(const std::vector<double>& coords) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

void print_pipeline_stanzas(const CommonFlags& flags, const LoadedProblem& lp,
                            const LambdaReport& rep) {
    if (flags.quiet) return;
    const PipelineData& data = *rep.data;
    std::cout << "[input] kind=" << lp.kind << " n=" << rep.n << " k=" << rep.k
              << " variables=" << joined_variables(*lp.ring) << "\n";
    std::cout << "[groebner] order=" << order_name(data.gb.order)
              << " basis_size=" << data.gb.generators.size() << " algebra_dim=" << rep.algebra_dim
              << "\n";
    std::cout << "[hypotheses] zero_dimensional=yes pivot_minor_invertible=yes randomization=";
    if (rep.hypotheses.randomization)
        std::cout << "applied(attempts=" << rep.hypotheses.randomization->attempts
                  << ",seed=" << rep.hypotheses.randomization->seed << ")";
    else
        std::cout << "none";
    std::cout << "\n";
    std::cout << "[forms] signature_delta=" << rep.signature_delta
              << " signature_f_delta=" << rep.signature_f_delta << " algebra_dim=" << rep.algebra_dim
              << "\n";
}

// Optional extra checks: real singular points of the hypersurface, and the
// real rank-drop locus of the effective frame.
ordered_json diagnostics_json(const StiefelProblem& effective, const CommonFlags& flags) {
    ordered_json d;
    auto gopts = flags.groebner_options();

    auto zero_dim_count = [&](std::vector<Polynomial> gens, const char* label) -> ordered_json {
        ordered_json section;
        std::vector<Polynomial> nonzero;
        for (auto& g : gens)
            if (!g.is_zero()) nonzero.push_back(std::move(g));
        try {
            if (nonzero.empty()) {
                section["zero_dimensional"] = false;
                section["real_points"] = nullptr;
                section["note"] = std::string(label) + ": ideal is zero";
                return section;
            }
            GroebnerBasis gb = buchberger(nonzero, gopts);
            if (!is_zero_dimensional(gb)) {
                section["zero_dimensional"] = false;
                section["real_points"] = nullptr;
                return section;
            }
            QuotientAlgebra algebra = QuotientAlgebra::build(std::move(gb));
            section["zero_dimensional"] = true;
            section["real_points"] = count_real_points(algebra);
        } catch (const StepLimitError&) {
            section["zero_dimensional"] = nullptr;
            section["real_points"] = nullptr;
            section["note"] = "step limit exceeded";
        }
        return section;
    };

    // Singular points of M: common real zeros of f and its gradient.
    std::vector<Polynomial> singular;
    singular.push_back(effective.f);
    for (std::size_t v = 0; v < effective.f.ring()->arity(); ++v)
        singular.push_back(effective.f.derivative(v));
    d["m_singular_locus"] = zero_dim_count(std::move(singular), "m_singular_locus");

    // Rank-drop locus: minors ideal plus all (k-1) x (k-1) minors.
    std::vector<Polynomial> rank_drop = minors_ideal(effective.matrix);
    for (auto& m : minors_of_size(effective.matrix, effective.k() - 1))
        rank_drop.push_back(std::move(m));
    d["rank_drop_locus"] = zero_dim_count(std::move(rank_drop), "rank_drop_locus");
    return d;
}

void write_report(const CommonFlags& flags, const ordered_json& report) {
    if (flags.json_path.empty()) return;
    std::ofstream out(flags.json_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write report file '" + flags.json_path + "'");
    out << report.dump(2) << "\n";
}

using Timings = std::map<std::string, double>;
using CommandBody = std::function<int(const LoadedProblem&, ordered_json&, Timings&)>;

int fail_with(const CommonFlags& flags, ordered_json& report, const std::string& kind,
              const std::string& message, const HypothesisReport* hypotheses, int code) {
    report["status"] = code == 2 ? "hypothesis_failure" : "error";
    ordered_json error;
    error["kind"] = kind;
    error["message"] = message;
    report["error"] = std::move(error);
    if (hypotheses) report["hypotheses"] = hypotheses_json(*hypotheses);
    std::cerr << (code == 2 ? "hypothesis failure: " : "error: ") << kind << " - " << message
              << "\n";
    try {
        write_report(flags, report);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return code;
}

int run_command(const std::string& command, const CommonFlags& flags, const CommandBody& body) {
    const auto t_start = steady_clock::now();
    LoadedProblem lp;
    try {
        lp = load_problem(flags.path);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const auto t_loaded = steady_clock::now();

    ordered_json report = base_report(command, flags, lp);
    Timings timings;
    try {
        int code = body(lp, report, timings);
        if (flags.timings) {
            ordered_json t;
            t["load_ms"] = ms_between(t_start, t_loaded);
            for (const char* stage : {"compute_ms", "oracle_ms", "diagnostics_ms"})
                if (timings.count(stage)) t[stage] = timings.at(stage);
            t["total_ms"] = ms_between(t_start, steady_clock::now());
            report["timings"] = std::move(t);
        }
        write_report(flags, report);
        return code;
    } catch (const NotZeroDimensionalIdealError& e) {
        return fail_with(flags, report, "NotZeroDimensional", e.what(), &e.report, 2);
    } catch (const PivotMinorDegenerateError& e) {
        return fail_with(flags, report, "PivotMinorDegenerate", e.what(), &e.report, 2);
    } catch (const DegenerateFormError& e) {
        report["error_form"] = e.form_name;
        return fail_with(flags, report, "DegenerateForm",
                         e.form_name + ": " + std::string(e.what()), &e.report, 2);
    } catch (const SignTooCloseToZeroError& e) {
        return fail_with(flags, report, "SignTooCloseToZero", e.what(), nullptr, 2);
    } catch (const PointCountMismatchError& e) {
        return fail_with(flags, report, "PointCountMismatch", e.what(), nullptr, 2);
    } catch (const EigenSolverError& e) {
        return fail_with(flags, report, "EigenSolver", e.what(), nullptr, 2);
    } catch (const StepLimitError& e) {
        return fail_with(flags, report, "StepLimit", e.what(), nullptr, 4);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        return fail_with(flags, report, "Internal", e.what(), nullptr, 4);
    }
}

// Shared core of the lambda and intersect commands.
int run_lambda_like(bool as_intersection, const LoadedProblem& lp, const CommonFlags& flags,
                    ordered_json& report, Timings& timings) {
    const auto t0 = steady_clock::now();
    StiefelProblem problem = to_stiefel(lp);
    std::optional<IntersectionReport> intersection;
    LambdaReport rep;
    if (as_intersection) {
        intersection = intersection_number(ImmersionProblem(lp.f, lp.g), flags.stiefel_options());
        rep = intersection->lambda_report;
    } else {
        rep = lambda(problem, flags.stiefel_options());
    }
    timings["compute_ms"] = ms_between(t0, steady_clock::now());

    print_pipeline_stanzas(flags, lp, rep);
    report["hypotheses"] = hypotheses_json(rep.hypotheses);
    ordered_json result;
    if (as_intersection) {
        result["intersection_number"] = intersection->intersection_number;
        result["m"] = intersection->m;
    }
    result.update(lambda_result_json(rep));
    report["result"] = std::move(result);

    int code = 0;
    if (flags.oracle) {
        const auto t1 = steady_clock::now();
        const QuotientAlgebra& algebra = *rep.data->algebra;
        std::vector<RealPoint> points = solve_real_points(algebra, flags.oracle_options());
        long long count = count_real_points(algebra);
        long long by_points =
            lambda_by_points(algebra, rep.data->delta_residue, problem.f, flags.oracle_options());
        timings["oracle_ms"] = ms_between(t1, steady_clock::now());
        bool agrees = (by_points == rep.lambda);
        ordered_json oracle;
        oracle["lambda_by_points"] = by_points;
        if (as_intersection) oracle["implied_intersection_number"] = -by_points;
        oracle["count_real_points"] = count;
        oracle["located"] = points.size();
        oracle["agrees"] = agrees;
        oracle["points"] = points_json(points, &rep.data->delta_residue, &problem.f);
        report["oracle"] = std::move(oracle);
        if (!flags.quiet)
            std::cout << "[oracle] lambda_by_points=" << by_points << " located=" << points.size()
                      << " count_real_points=" << count << " agrees=" << (agrees ? "yes" : "no")
                      << "\n";
        if (!agrees) {
            report["status"] = "oracle_disagreement";
            std::cerr << "oracle disagreement: exact lambda = " << rep.lambda
                      << " but the located points give " << by_points << "\n";
            code = 2;
        }
    }
    if (flags.diagnostics) {
        const auto t2 = steady_clock::now();
        report["diagnostics"] = diagnostics_json(rep.data->effective, flags);
        timings["diagnostics_ms"] = ms_between(t2, steady_clock::now());
        if (!flags.quiet) {
            std::cout << "[diagnostics] m_singular_locus="
                      << report["diagnostics"]["m_singular_locus"].dump()
                      << " rank_drop_locus=" << report["diagnostics"]["rank_drop_locus"].dump()
                      << "\n";
        }
    }

    if (as_intersection)
        std::cout << "intersection_number = " << intersection->intersection_number << "\n";
    else
        std::cout << "lambda = " << rep.lambda << "\n";
    return code;
}

int cmd_lambda(const LoadedProblem& lp, const CommonFlags& flags, ordered_json& report,
               Timings& timings) {
    if (lp.kind != "stiefel")
        throw ValidationError(
            "the lambda command requires a stiefel-kind file (use intersect for immersion files)");
    return run_lambda_like(false, lp, flags, report, timings);
}

int cmd_intersect(const LoadedProblem& lp, const CommonFlags& flags, ordered_json& report,
                  Timings& timings) {
    if (lp.kind != "immersion")
        throw ValidationError(
            "the intersect command requires an immersion-kind file (use lambda for stiefel files)");
    return run_lambda_like(true, lp, flags, report, timings);
}

int cmd_solve(const LoadedProblem& lp, const CommonFlags& flags, ordered_json& report,
              Timings& timings) {
    const auto t0 = steady_clock::now();
    StiefelProblem problem = to_stiefel(lp);

    std::vector<Polynomial> minors = minors_ideal(problem.matrix);
    bool any_nonzero = false;
    for (const auto& m : minors)
        if (!m.is_zero()) any_nonzero = true;
    HypothesisReport empty_report;
    if (!any_nonzero)
        throw NotZeroDimensionalIdealError(
            "the minors ideal is the zero ideal (the frame has rank < k everywhere)", empty_report);
    GroebnerBasis gb = buchberger(minors, flags.groebner_options());
    if (!is_zero_dimensional(gb))
        throw NotZeroDimensionalIdealError("the minors ideal is not zero-dimensional", empty_report);
    QuotientAlgebra algebra = QuotientAlgebra::build(std::move(gb));

    std::vector<RealPoint> points = solve_real_points(algebra, flags.oracle_options());
    long long count = count_real_points(algebra);
    timings["compute_ms"] = ms_between(t0, steady_clock::now());
    bool agrees = static_cast<long long>(points.size()) == count;

    if (!flags.quiet) {
        std::cout << "[input] kind=" << lp.kind << " variables=" << joined_variables(*lp.ring)
                  << "\n";
        std::cout << "[groebner] order=" << order_name(algebra.order())
                  << " basis_size=" << algebra.groebner_basis().generators.size()
                  << " algebra_dim=" << algebra.dimension() << "\n";
        for (std::size_t i = 0; i < points.size(); ++i)
            std::cout << "point " << (i + 1) << ": " << format_point(points[i].coords)
                      << " residual=" << points[i].residual << "\n";
        std::cout << "count_real_points = " << count << "\n";
    }
    std::cout << "real_points = " << points.size() << "\n";

    ordered_json result;
    result["algebra_dim"] = algebra.dimension();
    result["count_real_points"] = count;
    result["located"] = points.size();
    result["agrees"] = agrees;
    result["points"] = points_json(points, nullptr, &problem.f);
    report["result"] = std::move(result);

    if (!agrees) {
        report["status"] = "count_mismatch";
        std::cerr << "error: located " << points.size() << " real points but the exact count is "
                  << count << "\n";
        return 2;
    }
    return 0;
}

int cmd_check(const LoadedProblem& lp, const CommonFlags& flags, ordered_json& report,
              Timings& timings) {
    const auto t0 = steady_clock::now();
    StiefelProblem problem = to_stiefel(lp);
    VerifiedProblem verified = verify_hypotheses(problem, flags.stiefel_options());
    timings["compute_ms"] = ms_between(t0, steady_clock::now());

    const HypothesisReport& h = verified.report;
    report["hypotheses"] = hypotheses_json(h);

    if (!flags.quiet) {
        std::cout << "[input] kind=" << lp.kind << " n=" << problem.n() << " k=" << problem.k()
                  << " variables=" << joined_variables(*lp.ring) << "\n";
        std::cout << "zero_dimensional = " << (h.zero_dimensional ? "yes" : "no") << "\n";
        std::cout << "algebra_dim = " << h.algebra_dim << "\n";
        std::cout << "pivot_minor_invertible = " << (h.pivot_minor_invertible ? "yes" : "no");
        if (h.randomization)
            std::cout << " (after randomization: attempts=" << h.randomization->attempts
                      << " seed=" << h.randomization->seed << ")";
        std::cout << "\n";
        std::cout << "theta_delta_nondegenerate = " << (h.theta_delta_nondegenerate ? "yes" : "no")
                  << "\n";
        std::cout << "theta_f_delta_nondegenerate = "
                  << (h.theta_f_delta_nondegenerate ? "yes" : "no") << "\n";
    }

    if (!h.theta_delta_nondegenerate || !h.theta_f_delta_nondegenerate) {
        const std::string form = !h.theta_delta_nondegenerate ? "theta_delta" : "theta_f_delta";
        report["status"] = "hypothesis_failure";
        report["error"] =
            ordered_json{{"kind", "DegenerateForm"},
                         {"message", form + " is degenerate"}};
        std::cout << "hypothesis failure: DegenerateForm - " << form << " is degenerate\n";
        return 2;
    }
    std::cout << "all hypotheses pass\n";
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"frame-map invariants of compact hypersurfaces via exact trace-form signatures"};
    app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
    app.require_subcommand(1);

    CommonFlags flags;
    auto add_common = [&flags](CLI::App* sub) {
        sub->add_option("file", flags.path, "problem file (JSON)")->required();
        sub->add_option("--json", flags.json_path, "write a JSON report to this path");
        sub->add_option("--order", flags.order_name, "monomial order (degrevlex|lex)")
            ->check(CLI::IsMember({"degrevlex", "lex"}))
            ->capture_default_str();
        sub->add_option("--seed", flags.seed,
                        "seed for randomized pivot repair and the floating-point oracle")
            ->capture_default_str();
        sub->add_option("--retries", flags.retries,
                        "random row transforms to try when the pivot minor is degenerate")
            ->capture_default_str();
        sub->add_flag("--oracle", flags.oracle, "append the floating-point cross-check");
        sub->add_option("--tol", flags.tol, "oracle residual and sign-guard tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_flag("--quiet", flags.quiet, "print only the final value");
        sub->add_option("--max-spairs", flags.max_spairs,
                        "cap on Groebner S-pair reductions before giving up")
            ->capture_default_str();
        sub->add_flag("--timings", flags.timings,
                      "include wall-clock stage timings in the JSON report (timings vary between "
                      "runs, so reports are no longer byte-identical)");
        sub->add_flag("--diagnostics", flags.diagnostics,
                      "append optional checks: real singular points of the hypersurface and the "
                      "real rank-drop locus of the frame");
    };

    CLI::App* sub_lambda =
        app.add_subcommand("lambda", "compute the frame invariant of a hypersurface problem");
    CLI::App* sub_intersect =
        app.add_subcommand("intersect", "compute the Whitney intersection number of an immersion");
    CLI::App* sub_solve =
        app.add_subcommand("solve", "list the real points where the frame degenerates");
    CLI::App* sub_check =
        app.add_subcommand("check", "verify the theorem's hypotheses without computing the invariant");
    for (CLI::App* sub : {sub_lambda, sub_intersect, sub_solve, sub_check}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (sub_lambda->parsed())
            return run_command("lambda", flags,
                               [&](const LoadedProblem& lp, ordered_json& r, Timings& t) {
                                   return cmd_lambda(lp, flags, r, t);
                               });
        if (sub_intersect->parsed())
            return run_command("intersect", flags,
                               [&](const LoadedProblem& lp, ordered_json& r, Timings& t) {
                                   return cmd_intersect(lp, flags, r, t);
                               });
        if (sub_solve->parsed())
            return run_command("solve", flags,
                               [&](const LoadedProblem& lp, ordered_json& r, Timings& t) {
                                   return cmd_solve(lp, flags, r, t);
                               });
        return run_command("check", flags,
                           [&](const LoadedProblem& lp, ordered_json& r, Timings& t) {
                               return cmd_check(lp, flags, r, t);
                           });
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace frameinv
