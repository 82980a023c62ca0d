// Command-line front end: parse bidiagonal matrices, run the trace engines,
// derive singular-value bounds, cross-check the formula families against the
// dense oracle, benchmark, and generate test matrices.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bidiag/bidiag.hpp"
#include "generators.hpp"
#include "report.hpp"

using namespace bidiag;
using cli::Cell;
using cli::json;
using cli::Report;

namespace {

struct CommonOpts {
    std::string input;
    std::string inline_spec;
    std::string format = "text";
    std::string output;
    std::string side = "auto";  // auto | upper | lower
    std::string z_direction = "forward";
    std::vector<std::string> method_labels;
    int max_order = 6;
    double budget = 1e7;
};

void add_matrix_options(CLI::App* cmd, CommonOpts& o) {
    auto* input = cmd->add_option("--input", o.input, "matrix file in the text format");
    auto* inl = cmd->add_option("--inline", o.inline_spec,
                                "inline matrix 'q1,q2,..;e1,e2,..' (no e part for order 1)");
    input->excludes(inl);
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output, "write the report to this file instead of stdout");
}

void add_method_option(CLI::App* cmd, CommonOpts& o, const char* help) {
    cmd->add_option("--method", o.method_labels, help);
}

void add_numeric_options(CLI::App* cmd, CommonOpts& o, int default_order) {
    o.max_order = default_order;
    cmd->add_option("--max-order", o.max_order, "largest inverse power M")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--side", o.side, "Gram side: upper = B^T B, lower = B B^T")
        ->check(CLI::IsMember({"auto", "upper", "lower"}))
        ->capture_default_str();
    cmd->add_option("--z-direction", o.z_direction, "accumulator direction (kyn11 only)")
        ->check(CLI::IsMember({"forward", "backward"}))
        ->capture_default_str();
    cmd->add_option("--budget", o.budget, "term budget for brute-force path enumerations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::string token;
    std::istringstream iss(text);
    while (std::getline(iss, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error("cannot parse '" + token + "' in " + what);
        }
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> values;
    for (double v : parse_double_list(text, what)) {
        if (v < 1 || v != std::floor(v)) throw Error(what + " entries must be positive integers");
        values.push_back(static_cast<int>(v));
    }
    if (values.empty()) throw Error(what + " must not be empty");
    return values;
}

BidiagonalMatrix load_matrix(const CommonOpts& o) {
    if (!o.input.empty()) return read_matrix_file(o.input);
    if (!o.inline_spec.empty()) {
        std::size_t semi = o.inline_spec.find(';');
        std::string q_part = o.inline_spec.substr(0, semi);
        std::string e_part = semi == std::string::npos ? "" : o.inline_spec.substr(semi + 1);
        return BidiagonalMatrix(parse_double_list(q_part, "--inline q list"),
                                parse_double_list(e_part, "--inline e list"));
    }
    throw Error("no matrix given: use --input FILE or --inline 'q1,..;e1,..'");
}

std::vector<Method> resolve_methods(const std::vector<std::string>& labels,
                                    const std::vector<Method>& defaults) {
    if (labels.empty()) return defaults;
    std::vector<Method> methods;
    for (const std::string& label : labels) {
        std::optional<Method> m = parse_method(label);
        if (!m)
            throw Error("unknown method '" + label +
                        "' (choose kyn11, ykn12, ykyy14, new, oracle)");
        methods.push_back(*m);
    }
    return methods;
}

TraceOptions trace_options(const CommonOpts& o) {
    TraceOptions opts;
    opts.z_direction =
        o.z_direction == "backward" ? ZDirection::backward : ZDirection::forward;
    if (o.side == "upper") opts.variant = Variant::plain;
    if (o.side == "lower") opts.variant = Variant::tilde;
    return opts;
}

double rel_dev(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

json base_config(const std::string& command, const CommonOpts& o) {
    json cfg;
    cfg["command"] = command;
    if (!o.input.empty()) cfg["input"] = o.input;
    if (!o.inline_spec.empty()) cfg["inline"] = o.inline_spec;
    return cfg;
}

void push_warning(Report& rep, const char* method, int m, const std::string& message) {
    json warn;
    warn["method"] = method;
    warn["m"] = m;
    warn["message"] = message;
    rep.warnings.push_back(warn);
    rep.footnotes.push_back(std::string(method) + " m=" + std::to_string(m) + ": " + message);
}

// ---------------------------------------------------------------- trace ----

int cmd_trace(const CommonOpts& o) {
    BidiagonalMatrix B = load_matrix(o);
    std::vector<Method> methods = resolve_methods(o.method_labels, {Method::unified});
    TraceOptions opts = trace_options(o);

    Report rep;
    rep.config = base_config("trace", o);
    rep.config["max_order"] = o.max_order;
    rep.config["n"] = B.order();
    rep.config["side"] = o.side;
    rep.config["z_direction"] = o.z_direction;

    std::vector<TraceTable> tables;
    rep.columns = {"m"};
    for (Method m : methods) {
        tables.push_back(trace_table(B, o.max_order, m, opts));
        rep.columns.push_back(to_string(m));
    }

    for (int m = 1; m <= o.max_order; ++m) {
        std::vector<Cell> row{Cell(m)};
        for (const TraceTable& table : tables) {
            const TraceCell& cell = table.cells[static_cast<std::size_t>(m - 1)];
            json record;
            record["method"] = to_string(table.method);
            record["m"] = m;
            if (cell.value) {
                record["value"] = *cell.value;
                row.emplace_back(*cell.value);
            } else {
                record["value"] = nullptr;
                record["error"] = cell.error;
                row.emplace_back();
                push_warning(rep, to_string(table.method), m, cell.error);
            }
            for (const std::string& w : cell.warnings)
                push_warning(rep, to_string(table.method), m, w);
            rep.results.push_back(record);
        }
        rep.rows.push_back(std::move(row));
    }
    cli::emit(rep, o.format, o.output);
    return 0;
}

// ----------------------------------------------------------------- diag ----

int cmd_diag(const CommonOpts& o) {
    BidiagonalMatrix B = load_matrix(o);
    std::vector<Method> methods = resolve_methods(o.method_labels, {Method::subfree});
    TraceOptions opts = trace_options(o);
    const std::size_t n = B.order();

    Report rep;
    rep.config = base_config("diag", o);
    rep.config["max_order"] = o.max_order;
    rep.config["n"] = n;
    rep.columns = {"method", "m", "i", "v", "w"};

    for (Method method : methods) {
        std::vector<std::vector<double>> v(static_cast<std::size_t>(o.max_order) + 1);
        std::vector<std::vector<double>> w(v.size());
        switch (method) {
            case Method::subtractive: {
                DiagTable t = diag_powers_subtractive(B, o.max_order, opts.z_direction);
                v = t.v;
                w = t.w;
                for (const CancellationWarning& warn : t.warnings)
                    push_warning(rep, to_string(method), warn.order, warn.describe());
                break;
            }
            case Method::subfree: {
                if (o.max_order == 1) {
                    FirstOrderDiagonals d = first_order_diagonals(B);
                    v[1] = d.v1;
                    w[1] = d.w1;
                } else {
                    DiagTable t = diag_powers_subfree(B, o.max_order);
                    v = t.v;
                    w = t.w;
                }
                break;
            }
            case Method::oracle: {
                for (int m = 1; m <= o.max_order; ++m) {
                    DenseMatrix vm = gram_inverse_power(B, Side::upper, m);
                    DenseMatrix wm = gram_inverse_power(B, Side::lower, m);
                    for (std::size_t i = 0; i < n; ++i) {
                        v[static_cast<std::size_t>(m)].push_back(vm.at(i, i));
                        w[static_cast<std::size_t>(m)].push_back(wm.at(i, i));
                    }
                }
                break;
            }
            default:
                throw Error(std::string("method '") + to_string(method) +
                            "' has no diagonal tables (choose kyn11, ykn12, oracle)");
        }
        for (int m = 1; m <= o.max_order; ++m)
            for (std::size_t i = 0; i < n; ++i) {
                double vi = v[static_cast<std::size_t>(m)][i];
                double wi = w[static_cast<std::size_t>(m)][i];
                json record;
                record["method"] = to_string(method);
                record["m"] = m;
                record["i"] = i + 1;
                record["v"] = vi;
                record["w"] = wi;
                rep.results.push_back(record);
                rep.rows.push_back({Cell(to_string(method)), Cell(m),
                                    Cell(static_cast<int>(i) + 1), Cell(vi), Cell(wi)});
            }
    }
    cli::emit(rep, o.format, o.output);
    return 0;
}

// --------------------------------------------------------------- bounds ----

int cmd_bounds(const CommonOpts& o) {
    BidiagonalMatrix B = load_matrix(o);
    std::vector<Method> methods = resolve_methods(o.method_labels, {Method::unified});
    TraceOptions opts = trace_options(o);

    BoundReport bounds = bound_report(B, o.max_order, methods, opts);

    Report rep;
    rep.config = base_config("bounds", o);
    rep.config["max_order"] = o.max_order;
    rep.config["n"] = B.order();
    rep.columns = {"m"};
    for (const BoundColumn& col : bounds.columns)
        rep.columns.push_back(std::string("theta(") + to_string(col.method) + ")");
    if (bounds.columns.size() > 1) rep.columns.push_back("max_dev");
    rep.columns.push_back("gap_rel");

    for (int m = 1; m <= o.max_order; ++m) {
        std::vector<Cell> row{Cell(m)};
        std::optional<double> first_theta;  // first column's value, for the gap cell
        for (const BoundColumn& col : bounds.columns) {
            const auto& th = col.thetas[static_cast<std::size_t>(m - 1)];
            json record;
            record["method"] = to_string(col.method);
            record["m"] = m;
            if (th) {
                if (&col == &bounds.columns.front()) first_theta = *th;
                record["theta"] = *th;
                record["gap_rel"] = (bounds.sigma_min - *th) / bounds.sigma_min;
                row.emplace_back(*th);
            } else {
                record["theta"] = nullptr;
                row.emplace_back();
            }
            rep.results.push_back(record);
        }
        if (bounds.columns.size() > 1)
            row.emplace_back(bounds.max_cross_deviation[static_cast<std::size_t>(m - 1)]);
        if (first_theta)
            row.emplace_back((bounds.sigma_min - *first_theta) / bounds.sigma_min);
        else
            row.emplace_back();
        rep.rows.push_back(std::move(row));
    }
    json sigma;
    sigma["sigma_min"] = bounds.sigma_min;
    rep.results.push_back(sigma);
    rep.footnotes.push_back("sigma_min = " + cli::format_double(bounds.sigma_min, 17));
    for (const BoundColumn& col : bounds.columns)
        for (const std::string& note : col.notes) {
            json warn;
            warn["method"] = to_string(col.method);
            warn["message"] = note;
            rep.warnings.push_back(warn);
            rep.footnotes.push_back(std::string(to_string(col.method)) + ": " + note);
        }
    cli::emit(rep, o.format, o.output);
    return 0;
}

// -------------------------------------------------------------- compare ----

int cmd_compare(const CommonOpts& o) {
    BidiagonalMatrix B = load_matrix(o);
    std::vector<Method> methods = resolve_methods(o.method_labels, all_methods());
    if (methods.size() < 2) throw Error("compare needs at least two methods");
    TraceOptions opts = trace_options(o);
    const std::size_t n = B.order();

    Report rep;
    rep.config = base_config("compare", o);
    rep.config["max_order"] = o.max_order;
    rep.config["n"] = n;
    rep.columns = {"m"};
    std::vector<TraceTable> tables;
    for (Method m : methods) {
        tables.push_back(trace_table(B, o.max_order, m, opts));
        rep.columns.push_back(to_string(m));
    }
    rep.columns.push_back("max_rel_dev");

    for (int m = 1; m <= o.max_order; ++m) {
        std::vector<Cell> row{Cell(m)};
        json record;
        record["m"] = m;
        json values = json::object();
        std::vector<double> present;
        for (const TraceTable& t : tables) {
            const TraceCell& cell = t.cells[static_cast<std::size_t>(m - 1)];
            if (cell.value) {
                values[to_string(t.method)] = *cell.value;
                present.push_back(*cell.value);
                row.emplace_back(*cell.value);
            } else {
                values[to_string(t.method)] = nullptr;
                row.emplace_back();
                push_warning(rep, to_string(t.method), m, cell.error);
            }
            for (const std::string& w : cell.warnings)
                push_warning(rep, to_string(t.method), m, w);
        }
        double dev = 0.0;
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = a + 1; b < present.size(); ++b)
                dev = std::max(dev, rel_dev(present[a], present[b]));
        record["values"] = values;
        record["max_rel_dev"] = dev;
        rep.results.push_back(record);
        row.emplace_back(dev);
        rep.rows.push_back(std::move(row));
    }

    // Transform identities between the factorial-scaled and factorial-free
    // table families.
    try {
        TransformReport tr = verify_transforms(B, std::min(o.max_order, 170));
        json record;
        record["check"] = "transforms";
        record["max_order"] = tr.order_max;
        record["max_rel_dev"] = tr.max_deviation();
        rep.results.push_back(record);
        rep.footnotes.push_back("transform identities: max relative deviation " +
                                cli::format_double(tr.max_deviation(), 6));
    } catch (const Error& err) {
        json warn;
        warn["check"] = "transforms";
        warn["message"] = err.what();
        rep.warnings.push_back(warn);
        rep.footnotes.push_back(std::string("transform identities skipped: ") + err.what());
    }

    // Path-sum cross-check of the convolution tables, bounded by --budget.
    const int path_order = std::min(o.max_order, 5);
    double worst_terms = 1.0;
    for (int k = 0; k < path_order - 1; ++k)
        worst_terms *= static_cast<double>(n > 1 ? n - 1 : 0);
    if (path_order >= 2 && worst_terms <= o.budget) {
        GTables g = g_tables(B, path_order);
        double dev = 0.0;
        for (int m = 2; m <= path_order; ++m)
            for (std::size_t i = 0; i < n; ++i) {
                dev = std::max(dev, rel_dev(g.g_tilde[static_cast<std::size_t>(m)][i],
                                            path_sum_gtilde(B, i, m, o.budget)));
                dev = std::max(dev, rel_dev(g.g[static_cast<std::size_t>(m)][i],
                                            path_sum_g(B, i, m, o.budget)));
            }
        json record;
        record["check"] = "path_sums";
        record["max_order"] = path_order;
        record["max_rel_dev"] = dev;
        rep.results.push_back(record);
        rep.footnotes.push_back("path sums: max relative deviation " +
                                cli::format_double(dev, 6));
    } else if (path_order >= 2) {
        json warn;
        warn["check"] = "path_sums";
        warn["message"] = "skipped: enumeration exceeds --budget";
        rep.warnings.push_back(warn);
        rep.footnotes.push_back("path sums skipped: enumeration exceeds --budget");
    }
    cli::emit(rep, o.format, o.output);
    return 0;
}

// --------------------------------------------------------------- oracle ----

int cmd_oracle(const CommonOpts& o) {
    BidiagonalMatrix B = load_matrix(o);
    Report rep;
    rep.config = base_config("oracle", o);
    rep.config["max_order"] = o.max_order;
    rep.config["n"] = B.order();
    rep.columns = {"m", "J"};
    for (int m = 1; m <= o.max_order; ++m) {
        try {
            double j = trace_oracle(B, m);
            json record;
            record["m"] = m;
            record["value"] = j;
            rep.results.push_back(record);
            rep.rows.push_back({Cell(m), Cell(j)});
        } catch (const Error& err) {
            push_warning(rep, "oracle", m, err.what());
            rep.rows.push_back({Cell(m), Cell()});
        }
    }
    double sigma = sigma_min_oracle(B);
    json record;
    record["sigma_min"] = sigma;
    rep.results.push_back(record);
    rep.footnotes.push_back("sigma_min = " + cli::format_double(sigma, 17));
    cli::emit(rep, o.format, o.output);
    return 0;
}

// ---------------------------------------------------------------- bench ----

struct BenchOpts {
    std::string n_list;
    std::string order_list = "2,4,8";
    std::string dist = "uniform:0.5:2";
    std::uint64_t seed = 0;
    int reps = 3;
    int reach_cap = 512;
};

int cmd_bench(const CommonOpts& o, const BenchOpts& b) {
    std::vector<int> ns = parse_int_list(b.n_list, "--n");
    std::vector<int> orders = parse_int_list(b.order_list, "--orders");
    cli::Distribution dist = cli::parse_distribution(b.dist);
    std::vector<Method> methods = resolve_methods(
        o.method_labels, {Method::subfree, Method::derivative, Method::unified});
    TraceOptions opts = trace_options(o);

    Report rep;
    rep.config = base_config("bench", o);
    rep.config["n"] = b.n_list;
    rep.config["orders"] = b.order_list;
    rep.config["dist"] = b.dist;
    rep.config["seed"] = b.seed;
    rep.config["reps"] = b.reps;
    rep.config["reach_cap"] = b.reach_cap;
    rep.columns = {"kind", "method", "n", "m", "value"};

    cli::Rng rng(b.seed);
    for (int n : ns) {
        BidiagonalMatrix B = cli::generate_matrix(dist, static_cast<std::size_t>(n), rng);
        for (Method method : methods) {
            for (int m : orders) {
                double best = 0.0;
                bool ok = true;
                for (int rep_i = 0; rep_i < b.reps && ok; ++rep_i) {
                    auto start = std::chrono::steady_clock::now();
                    try {
                        (void)trace(B, m, method, opts);
                    } catch (const Error& err) {
                        ok = false;
                        push_warning(rep, to_string(method), m,
                                     "n=" + std::to_string(n) + ": " + err.what());
                        break;
                    }
                    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
                    best = rep_i == 0 ? dt.count() : std::min(best, dt.count());
                }
                json record;
                record["kind"] = "time";
                record["method"] = to_string(method);
                record["n"] = n;
                record["m"] = m;
                if (ok) {
                    record["seconds"] = best;
                    rep.rows.push_back(
                        {Cell("time"), Cell(to_string(method)), Cell(n), Cell(m), Cell(best)});
                } else {
                    record["seconds"] = nullptr;
                    rep.rows.push_back(
                        {Cell("time"), Cell(to_string(method)), Cell(n), Cell(m), Cell()});
                }
                rep.results.push_back(record);
            }
            int reach = overflow_reach(B, method, b.reach_cap, opts);
            json record;
            record["kind"] = "reach";
            record["method"] = to_string(method);
            record["n"] = n;
            record["reach"] = reach;
            record["cap"] = b.reach_cap;
            rep.results.push_back(record);
            rep.rows.push_back(
                {Cell("reach"), Cell(to_string(method)), Cell(n), Cell(), Cell(reach)});
        }
    }
    cli::emit(rep, o.format, o.output);
    return 0;
}

// ------------------------------------------------------------------ gen ----

struct GenOpts {
    int n = 0;
    std::string dist = "uniform:0.5:2";
    std::uint64_t seed = 0;
    int count = 1;
    std::string output;
};

std::string indexed_path(const std::string& path, int index) {
    std::size_t dot = path.find_last_of('.');
    std::size_t slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "-" + std::to_string(index);
    return path.substr(0, dot) + "-" + std::to_string(index) + path.substr(dot);
}

int cmd_gen(const GenOpts& g) {
    cli::Distribution dist = cli::parse_distribution(g.dist);
    if (g.count > 1 && g.output.empty())
        throw Error("--count > 1 needs --output to name the files");
    cli::Rng rng(g.seed);
    for (int k = 0; k < g.count; ++k) {
        BidiagonalMatrix B = cli::generate_matrix(dist, static_cast<std::size_t>(g.n), rng);
        if (g.output.empty()) {
            write_matrix(std::cout, B);
        } else {
            std::string path = g.count == 1 ? g.output : indexed_path(g.output, k);
            std::ofstream out(path);
            if (!out) throw FileError("cannot open '" + path + "' for writing");
            write_matrix(out, B);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"traces of inverse powers of bidiagonal Gram matrices and "
                 "lower bounds of the minimal singular value"};
    app.require_subcommand(1);

    CommonOpts trace_o, diag_o, bounds_o, compare_o, oracle_o, bench_common;
    BenchOpts bench_o;
    GenOpts gen_o;

    CLI::App* trace_cmd = app.add_subcommand("trace", "inverse-power traces J_1..J_M");
    add_matrix_options(trace_cmd, trace_o);
    add_output_options(trace_cmd, trace_o);
    add_method_option(trace_cmd, trace_o, "trace method(s): kyn11 ykn12 ykyy14 new oracle");
    add_numeric_options(trace_cmd, trace_o, 6);

    CLI::App* diag_cmd = app.add_subcommand("diag", "diagonal entries of Gram inverse powers");
    add_matrix_options(diag_cmd, diag_o);
    add_output_options(diag_cmd, diag_o);
    add_method_option(diag_cmd, diag_o, "diagonal method(s): kyn11 ykn12 oracle");
    add_numeric_options(diag_cmd, diag_o, 3);

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "lower bounds theta_M of the minimal singular value");
    add_matrix_options(bounds_cmd, bounds_o);
    add_output_options(bounds_cmd, bounds_o);
    add_method_option(bounds_cmd, bounds_o, "trace backend(s) for theta");
    add_numeric_options(bounds_cmd, bounds_o, 10);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "cross-check trace methods and identities");
    add_matrix_options(compare_cmd, compare_o);
    add_output_options(compare_cmd, compare_o);
    add_method_option(compare_cmd, compare_o, "methods to compare (two or more)");
    add_numeric_options(compare_cmd, compare_o, 6);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "dense brute-force reference values");
    add_matrix_options(oracle_cmd, oracle_o);
    add_output_options(oracle_cmd, oracle_o);
    add_numeric_options(oracle_cmd, oracle_o, 6);

    CLI::App* bench_cmd = app.add_subcommand("bench", "wall-time and overflow reach per engine");
    add_output_options(bench_cmd, bench_common);
    add_method_option(bench_cmd, bench_common, "engines to benchmark");
    bench_cmd->add_option("--n", bench_o.n_list, "matrix orders, comma separated")->required();
    bench_cmd->add_option("--orders", bench_o.order_list, "inverse powers, comma separated")
        ->capture_default_str();
    bench_cmd->add_option("--dist", bench_o.dist, "entry distribution")->capture_default_str();
    bench_cmd->add_option("--seed", bench_o.seed, "generator seed")->capture_default_str();
    bench_cmd->add_option("--reps", bench_o.reps, "timing repetitions (best of)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--reach-cap", bench_o.reach_cap, "upper limit for reach probing")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate matrices in the text format");
    gen_cmd->add_option("--n", gen_o.n, "matrix order")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--dist", gen_o.dist, "uniform:lo:hi | loguniform:lo:hi | graded:ratio")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_o.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--count", gen_o.count, "number of matrices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen_cmd->add_option("--output", gen_o.output, "output file (indexed when --count > 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trace_cmd->parsed()) return cmd_trace(trace_o);
        if (diag_cmd->parsed()) return cmd_diag(diag_o);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_o);
        if (compare_cmd->parsed()) return cmd_compare(compare_o);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_o);
        if (bench_cmd->parsed()) return cmd_bench(bench_common, bench_o);
        if (gen_cmd->parsed()) return cmd_gen(gen_o);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
