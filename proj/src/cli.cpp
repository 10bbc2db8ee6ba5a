#include "weier/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "weier/cusp.hpp"
#include "weier/errors.hpp"

namespace weier::cli
{

namespace
{

using ordered_json = nlohmann::ordered_json;

const char *format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    default:
        return "text";
    }
}

const char *method_name(SumMethod m)
{
    return m == SumMethod::rows ? "rows" : "shells";
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ordered_json config_json(const RunConfig &c)
{
    ordered_json j;
    j["tolerance"] = c.eval.tol;
    j["shell_cap"] = c.eval.shell_cap;
    j["method"] = method_name(c.eval.method);
    j["format"] = format_name(c.format);
    j["seed"] = c.seed;
    j["convention"] = c.convention == Convention::paper_b ? "paper-b" : "standard-c";
    return j;
}

// Non-finite numbers have no JSON literal; they are written as strings.
ordered_json number(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        quoted += ch;
        if (ch == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

std::string joined_inputs(const Assertion &a)
{
    std::string s;
    for (const auto &[k, v] : a.inputs) {
        s += (s.empty() ? "" : ";") + k + "=" + v;
    }
    return s;
}

Assertion error_row(std::string id, std::vector<std::pair<std::string, std::string>> inputs, const std::string &what)
{
    Assertion a;
    a.id = std::move(id);
    a.inputs = std::move(inputs);
    a.status = "error";
    a.note = what;
    a.residual = std::numeric_limits<double>::quiet_NaN();
    return a;
}

void write_error(std::ostream &err, const std::string &command, const std::string &kind, const std::string &message)
{
    ordered_json j;
    j["command"] = command;
    j["error"] = {{"kind", kind}, {"message", message}};
    err << j.dump() << '\n';
}

void emit(std::ostream &out, const Report &report)
{
    switch (report.config.format) {
    case OutputFormat::json:
        write_json(out, report);
        break;
    case OutputFormat::csv:
        write_csv(out, report);
        break;
    default:
        write_text(out, report);
    }
}

// Complex arguments also accept an exact rational such as "1/2".
Complex parse_point(const std::string &text)
{
    if (text.find('/') != std::string::npos && text.find_first_of("ij") == std::string::npos) {
        return to_double(parse_rational(text));
    }
    return parse_complex(text);
}

RationalPair parse_label(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw domain_error("label '" + text + "' is not of the form s,t");
    }
    return RationalPair::parse(text.substr(0, comma), text.substr(comma + 1));
}

std::vector<std::pair<std::string, std::string>> plan_inputs(const TruncationPlan &plan)
{
    return {{"plan.method", method_name(plan.method)},
            {"plan.radius", std::to_string(plan.shell_radius)},
            {"plan.tail_bound", fmt(plan.tail_bound)},
            {"plan.shell_constant", fmt(plan.shell_constant)}};
}

struct EvalArgs
{
    std::string kind;
    std::string s = "0", t = "0", r = "2";
    std::vector<std::string> labels;
    std::string tau, omega1, omega2 = "1", z;
};

Assertion eval_row(const EvalArgs &a, const RunConfig &config)
{
    std::vector<std::pair<std::string, std::string>> inputs{{"kind", a.kind}};
    CertifiedValue value;
    TruncationPlan plan;
    if (a.kind == "wp" || a.kind == "zeta") {
        if (a.z.empty()) {
            throw domain_error("eval " + a.kind + " needs --z");
        }
        const Complex z = parse_point(a.z);
        const Lattice omega = a.tau.empty() ? Lattice(parse_point(a.omega1.empty() ? "i" : a.omega1),
                                                      parse_point(a.omega2))
                                            : TauLattice(parse_point(a.tau)).lattice();
        inputs.emplace_back("omega1", format_complex(omega.omega1()));
        inputs.emplace_back("omega2", format_complex(omega.omega2()));
        inputs.emplace_back("z", format_complex(z));
        const SeriesResult res = a.kind == "wp" ? wp_lattice_detailed(omega, z, config.eval)
                                                : wzeta_lattice_detailed(omega, z, config.eval);
        value = res.value;
        plan = res.plan;
    } else {
        if (a.tau.empty()) {
            throw domain_error("eval " + a.kind + " needs --tau");
        }
        const Complex tau = parse_point(a.tau);
        std::optional<FormSpec> form;
        if (a.kind == "f") {
            form = FormSpec::wp(RationalPair::parse(a.s, a.t));
        } else if (a.kind == "g") {
            form = FormSpec::zeta(RationalPair::parse(a.s, a.t));
        } else if (a.kind == "h") {
            const BigRational r = parse_rational(a.r);
            if (!is_integer(r)) {
                throw domain_error("r must be an integer");
            }
            form = FormSpec::h(static_cast<std::int64_t>(numerator(r)), RationalPair::parse(a.s, a.t));
        } else if (a.kind == "hU") {
            std::vector<RationalPair> labels;
            for (const auto &l : a.labels) {
                labels.push_back(parse_label(l));
            }
            form = FormSpec::hU(std::move(labels));
        } else {
            throw domain_error("unknown form kind '" + a.kind + "'");
        }
        inputs.emplace_back("form", form->str());
        inputs.emplace_back("tau", format_complex(tau));
        value = evaluate(*form, tau, config.eval);
        // The plan of the underlying lattice sum at the form's (first) point.
        const RationalPair first = std::visit(
            [](const auto &k) -> RationalPair {
                if constexpr (std::is_same_v<std::decay_t<decltype(k)>, HUForm>) {
                    return k.labels.front();
                } else {
                    return k.label;
                }
            },
            form->kind());
        plan = wp_lattice_detailed(TauLattice(tau).lattice(), first.canonical().point(tau), config.eval).plan;
    }
    const auto extra = plan_inputs(plan);
    inputs.insert(inputs.end(), extra.begin(), extra.end());
    Assertion row;
    row.id = "eval/" + a.kind;
    row.inputs = std::move(inputs);
    row.value = value.value;
    row.error = value.error;
    row.residual = value.error;
    row.bound = config.eval.tol;
    row.status = value.error <= config.eval.tol ? "pass" : "fail";
    row.note = format_complex(value.value);
    return row;
}

std::vector<Assertion> table_rows(const std::string &path, std::vector<double> ys, const RunConfig &config,
                                  double slack)
{
    std::ifstream in(path);
    if (!in) {
        return {error_row("table/file", {{"grid", path}}, "cannot read grid file")};
    }
    std::sort(ys.begin(), ys.end());
    std::vector<Assertion> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string w; fields >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        const std::string base = "table/" + std::to_string(lineno);
        std::optional<FormSpec> form;
        try {
            if (tok.size() < 3 || tok.size() > 4) {
                throw domain_error("expected 'kind s t [r]'");
            }
            const RationalPair p = RationalPair::parse(tok[1], tok[2]);
            if (tok[0] == "f" && tok.size() == 3) {
                form = FormSpec::wp(p);
            } else if (tok[0] == "h") {
                const BigRational r = parse_rational(tok.size() == 4 ? tok[3] : "2");
                if (!is_integer(r)) {
                    throw domain_error("r must be an integer");
                }
                form = FormSpec::h(static_cast<std::int64_t>(numerator(r)), p);
            } else {
                throw domain_error("unsupported kind '" + tok[0] + "'");
            }
            if (!closed_cusp_value(*form)) {
                throw domain_error("no closed cusp value for " + form->str());
            }
        } catch (const std::exception &e) {
            rows.push_back(error_row(base, {{"line", line}}, e.what()));
            continue;
        }
        for (double Y : ys) {
            const std::string id = base + "/Y=" + fmt(Y);
            try {
                const CuspValueReport r = cusp_report(*form, Y, config.eval);
                Assertion a;
                a.id = id;
                a.inputs = {{"form", form->str()}, {"Y", fmt(Y)}, {"closed", format_complex(r.closed_form)}};
                a.value = r.numeric_limit.value;
                a.error = r.numeric_limit.error;
                a.residual = r.residual;
                a.bound = r.numeric_limit.error + slack;
                a.status = r.valid(slack) ? "pass" : "fail";
                rows.push_back(std::move(a));
            } catch (const std::exception &e) {
                rows.push_back(error_row(id, {{"form", form->str()}, {"Y", fmt(Y)}}, e.what()));
            }
        }
    }
    return rows;
}

} // namespace

int exit_code(const Report &report)
{
    const bool bad = std::any_of(report.rows.begin(), report.rows.end(),
                                 [](const Assertion &a) { return a.status == "fail" || a.status == "error"; });
    return bad ? 1 : 0;
}

void write_json(std::ostream &out, const Report &report)
{
    ordered_json j;
    j["command"] = report.command;
    j["config"] = config_json(report.config);
    j["rows"] = ordered_json::array();
    for (const auto &a : report.rows) {
        ordered_json row;
        row["id"] = a.id;
        ordered_json inputs = ordered_json::object();
        for (const auto &[k, v] : a.inputs) {
            inputs[k] = v;
        }
        row["inputs"] = std::move(inputs);
        row["value"] = {{"re", number(a.value.real())}, {"im", number(a.value.imag())}};
        row["error"] = number(a.error);
        row["residual"] = number(a.residual);
        row["bound"] = number(a.bound);
        row["status"] = a.status;
        if (!a.note.empty()) {
            row["note"] = a.note;
        }
        j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

void write_csv(std::ostream &out, const Report &report)
{
    out << "id,inputs,re,im,error,residual,bound,status,note\r\n";
    for (const auto &a : report.rows) {
        out << csv_field(a.id) << ',' << csv_field(joined_inputs(a)) << ',' << fmt(a.value.real()) << ','
            << fmt(a.value.imag()) << ',' << fmt(a.error) << ',' << fmt(a.residual) << ',' << fmt(a.bound) << ','
            << a.status << ',' << csv_field(a.note) << "\r\n";
    }
}

void write_text(std::ostream &out, const Report &report)
{
    std::size_t counts[3] = {0, 0, 0};
    for (const auto &a : report.rows) {
        const bool failed = a.status == "fail" || a.status == "error";
        counts[a.status == "info" ? 2 : (failed ? 1 : 0)]++;
        // Passing property rows are summarized; everything else is listed in full.
        if (report.rows.size() > 20 && a.status == "pass") {
            continue;
        }
        out << (a.status == "pass" ? "PASS " : a.status == "info" ? "INFO " : a.status == "fail" ? "FAIL " : "ERROR")
            << ' ' << a.id << "  value=" << format_complex(a.value) << " error=" << fmt(a.error)
            << " residual=" << fmt(a.residual) << " bound=" << fmt(a.bound);
        if (!a.inputs.empty()) {
            out << "  [" << joined_inputs(a) << ']';
        }
        if (!a.note.empty()) {
            out << "  " << a.note;
        }
        out << '\n';
    }
    out << report.command << ": " << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " info\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Weierstrass functions, modular forms built from them, and checks of their identities", "weier"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file of option defaults");

    double tol = 1e-8;
    std::int64_t shell_cap = 1'000'000;
    std::string format = "text", convention = "paper-b", method = "rows";
    std::uint64_t seed = 1;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto *tol_opt = app.add_option("--tol", tol, "target absolute error")->check(CLI::PositiveNumber);
    app.add_option("--shell-cap", shell_cap, "largest admissible shell radius")->check(CLI::PositiveNumber);
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", seed, "seed for the property suites");
    app.add_option("--convention", convention, "congruence convention for Gamma0/Gamma1")
        ->check(CLI::IsMember({"paper-b", "standard-c"}));
    app.add_option("--method", method, "lattice summation")->check(CLI::IsMember({"rows", "shells"}));
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    EvalArgs ea;
    auto *eval = app.add_subcommand("eval", "evaluate a form or a raw Weierstrass function");
    eval->fallthrough();
    eval->add_option("kind", ea.kind, "f, g, h, hU, wp or zeta")
        ->required()
        ->check(CLI::IsMember({"f", "g", "h", "hU", "wp", "zeta"}));
    eval->add_option("--s", ea.s);
    eval->add_option("--t", ea.t);
    eval->add_option("--r", ea.r);
    eval->add_option("--label", ea.labels, "s,t entry of U (repeat)");
    eval->add_option("--tau", ea.tau);
    eval->add_option("--omega1", ea.omega1);
    eval->add_option("--omega2", ea.omega2);
    eval->add_option("--z", ea.z);

    std::string suite;
    auto *verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

    std::string grid;
    std::vector<double> ys{20.0};
    double slack = 1e-6;
    auto *table = app.add_subcommand("table", "tabulate cusp values against their closed forms");
    table->fallthrough();
    table->add_option("--grid", grid, "file with one 'kind s t [r]' per line")->required();
    table->add_option("--y", ys, "imaginary parts of tau")->delimiter(',');
    table->add_option("--slack", slack, "allowed residual beyond the certified error");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError &e) {
        write_error(err, "parse", "usage", e.what());
        return 2;
    }

    if (tol_opt->count() == 0) {
        if (const char *env = std::getenv("WEIER_TOL")) {
            try {
                tol = std::stod(env);
            } catch (const std::exception &) {
                write_error(err, "config", "usage", std::string("WEIER_TOL is not a number: ") + env);
                return 2;
            }
        }
    }
    if (!(tol >= min_tolerance)) {
        write_error(err, "config", "usage", "tolerance must be >= 1e-12");
        return 2;
    }

    Report report;
    report.config.eval = {tol, shell_cap, method == "rows" ? SumMethod::rows : SumMethod::shells};
    report.config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv
                                                                                     : OutputFormat::text;
    report.config.seed = seed;
    report.config.convention = convention == "paper-b" ? Convention::paper_b : Convention::standard_c;
    report.config.jobs = jobs;

    try {
        if (*eval) {
            report.command = "eval " + ea.kind;
            report.rows.push_back(eval_row(ea, report.config));
        } else if (*verify) {
            report.command = "verify " + suite;
            const VerifyConfig vc{report.config.eval, seed, report.config.convention, jobs};
            if (suite == "all") {
                for (const auto &name : suite_names()) {
                    auto part = run_suite(name, vc);
                    for (auto &row : part.rows) {
                        row.id = name + ":" + row.id;
                        report.rows.push_back(std::move(row));
                    }
                }
            } else {
                report.rows = run_suite(suite, vc).rows;
            }
        } else {
            report.command = "table";
            report.rows = table_rows(grid, ys, report.config, slack);
        }
    } catch (const pole_error &e) {
        write_error(err, report.command, "pole", e.what());
        return 2;
    } catch (const precision_error &e) {
        write_error(err, report.command, "precision", e.what());
        return 2;
    } catch (const std::exception &e) {
        write_error(err, report.command, "domain", e.what());
        return 2;
    }
    emit(out, report);
    return exit_code(report);
}

} // namespace weier::cli
