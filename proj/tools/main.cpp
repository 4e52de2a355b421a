#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "annealgap/errors.hpp"
#include "annealgap/gap_analysis.hpp"
#include "annealgap/grover.hpp"
#include "annealgap/instanton.hpp"
#include "annealgap/model.hpp"
#include "annealgap/parallel.hpp"
#include "annealgap/statics.hpp"
#include "output.hpp"

namespace {

using namespace annealgap;
using cli::CsvWriter;
using cli::fmt_double;
using cli::Manifest;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Common {
    std::string out = ".";
    std::string precision = "standard";
    std::string config_path;
    int threads = 0;
    double trotter_density = 200.0;
    int fit_min_n = 40;

    Precision precision_mode() const {
        return precision == "extended" ? Precision::Extended : Precision::Standard;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "output directory")->capture_default_str();
    sub->add_option("--precision", c.precision, "solver precision")
        ->check(CLI::IsMember({"standard", "extended"}))
        ->capture_default_str();
    sub->add_option("--config", c.config_path, "config file (key=value lines or JSON)");
    sub->add_option("--threads", c.threads, "sweep parallelism cap (overrides ANNEALGAP_THREADS)");
}

json parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot open config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string body = ss.str();
    auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') return json::parse(body);
    json j = json::object();
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        char* end = nullptr;
        double num = std::strtod(val.c_str(), &end);
        if (end && *end == '\0' && end != val.c_str())
            j[key] = num;
        else
            j[key] = val;
    }
    return j;
}

// Config presets apply only where the command line stayed silent.
json resolve_config(CLI::App* sub, Common& c) {
    json resolved;
    if (!c.config_path.empty()) {
        json j = parse_config_file(c.config_path);
        if (j.contains("precision") && sub->count("--precision") == 0) {
            c.precision = j["precision"].get<std::string>();
            if (c.precision != "standard" && c.precision != "extended")
                throw CLI::ValidationError("--config", "precision must be standard or extended");
        }
        if (j.contains("threads") && sub->count("--threads") == 0)
            c.threads = int(j["threads"].get<double>());
        if (j.contains("trotter_density")) c.trotter_density = j["trotter_density"].get<double>();
        if (j.contains("fit_min_n")) c.fit_min_n = int(j["fit_min_n"].get<double>());
        resolved["config_file"] = c.config_path;
    }
    if (c.threads > 0) setenv("ANNEALGAP_THREADS", std::to_string(c.threads).c_str(), 1);
    resolved["precision"] = c.precision;
    resolved["threads"] = c.threads > 0 ? c.threads : max_threads();
    resolved["trotter_density"] = c.trotter_density;
    resolved["fit_min_n"] = c.fit_min_n;
    resolved["out"] = c.out;
    return resolved;
}

int parse_p(const std::string& s) {
    if (s == "inf" || s == "infinity") return kPInfinity;
    return std::stoi(s);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    if (s.find(':') != std::string::npos) {
        int lo, hi, step = 1;
        char c1, c2;
        std::istringstream ss(s);
        ss >> lo >> c1 >> hi;
        if (ss >> c2 >> step) {}
        if (step < 1) throw CLI::ValidationError("list", "step must be >= 1 in " + s);
        for (int n = lo; n <= hi; n += step) out.push_back(n);
        return out;
    }
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

void prepare_out(const std::string& dir) { std::filesystem::create_directories(dir); }

// ---- phase-diagram ----

struct PhaseDiagramArgs {
    Common common;
    std::string p = "3";
    double beta_min = 1.0, beta_max = 1000.0;
    int beta_points = 25;
};

int run_phase_diagram(const PhaseDiagramArgs& a, Manifest& m) {
    int p = parse_p(a.p);
    if (a.beta_points < 2 || !(a.beta_min > 0.0) || !(a.beta_min < a.beta_max)) {
        std::cerr << "error: need 0 < beta-min < beta-max and >= 2 points\n";
        return 2;
    }
    CsvWriter csv(a.common.out + "/phase_diagram.csv");
    csv.header({"beta", "gamma_star", "m_jump"});
    for (int i = 0; i < a.beta_points; ++i) {
        double beta = std::exp(std::log(a.beta_min) +
                               (std::log(a.beta_max) - std::log(a.beta_min)) * i /
                                   (a.beta_points - 1));
        try {
            if (p == kPInfinity) {
                double g = pinf_transition_line(beta);
                csv.row({CsvWriter::num(beta), CsvWriter::num(g), CsvWriter::num(1.0)});
            } else {
                PhasePoint pt = phase_boundary(p, beta);
                csv.row({CsvWriter::num(beta), CsvWriter::num(pt.gamma_star),
                         CsvWriter::num(pt.m_jump)});
            }
        } catch (const DomainError&) {
            csv.row({CsvWriter::num(beta), CsvWriter::empty(), CsvWriter::empty()});
        }
    }
    csv.write();
    m.add_output(csv.path());
    std::string plot = a.common.out + "/plot_phase_diagram.gp";
    cli::write_text(plot,
                    "set datafile separator ','\n"
                    "set xlabel 'Gamma'\n"
                    "set ylabel 'T = 1/beta'\n"
                    "set key off\n"
                    "plot 'phase_diagram.csv' skip 1 using 2:(1/$1) with linespoints\n");
    m.add_output(plot);
    return 0;
}

// ---- gap ----

struct GapArgs {
    Common common;
    int p = 3;
    int n = 20;
    double gamma_min = -1.0, gamma_max = -1.0;
    int points = 41;
};

int run_gap(CLI::App* sub, const GapArgs& a, Manifest& m) {
    double gamma_c = zero_T_critical_point(a.p).gamma_c;
    double lo = a.gamma_min, hi = a.gamma_max;
    if (sub->count("--gamma-min") == 0) lo = gamma_c - std::max(0.2, 8.0 / a.n);
    if (sub->count("--gamma-max") == 0) hi = gamma_c + std::max(0.2, 8.0 / a.n);
    if (!(lo < hi) || a.points < 3) {
        std::cerr << "error: need gamma-min < gamma-max and >= 3 points\n";
        return 2;
    }
    GapCurve curve = gamma_scan(a.p, a.n, lo, hi, a.points, a.common.precision_mode());
    CsvWriter csv(a.common.out + "/gap_curve.csv");
    csv.header({"gamma", "delta", "resolved"});
    for (const auto& pt : curve.points)
        csv.row({CsvWriter::num(pt.gamma), CsvWriter::num(pt.delta),
                 CsvWriter::num(pt.resolved ? 1 : 0)});
    csv.write();
    m.add_output(csv.path());
    std::string plot = a.common.out + "/plot_gap.gp";
    cli::write_text(plot,
                    "set datafile separator ','\n"
                    "set xlabel 'Gamma'\n"
                    "set ylabel 'gap'\n"
                    "set logscale y\n"
                    "set key off\n"
                    "set arrow from " + fmt_double(gamma_c) + ", graph 0 to " +
                        fmt_double(gamma_c) + ", graph 1 nohead lc 'black'\n"
                    "plot 'gap_curve.csv' skip 1 using 1:2 with linespoints\n");
    m.add_output(plot);
    return 0;
}

// ---- mingap ----

struct MinGapArgs {
    Common common;
    std::string p = "3";
    std::string n_list = "40:120:10";
    bool without_prefactor = false;
};

int run_mingap(const MinGapArgs& a, Manifest& m) {
    int p = parse_p(a.p);
    std::vector<int> ns = parse_int_list(a.n_list);
    if (ns.empty()) {
        std::cerr << "error: empty N list\n";
        return 2;
    }
    CsvWriter csv(a.common.out + "/mingap.csv");
    csv.header({"N", "gamma_min", "delta_min", "resolved"});
    std::vector<std::pair<double, double>> pts;
    for (int n : ns) {
        try {
            MinGapPoint mg = min_gap(p, n, a.common.precision_mode());
            csv.row({CsvWriter::num(n), CsvWriter::num(mg.gamma_min),
                     CsvWriter::num(mg.delta_min), CsvWriter::num(1)});
            pts.push_back({double(n), mg.delta_min});
        } catch (const DomainError& e) {
            csv.row({CsvWriter::num(n), CsvWriter::empty(), CsvWriter::empty(),
                     CsvWriter::num(0)});
            std::cerr << "N=" << n << ": " << e.what() << '\n';
        }
    }
    csv.write();
    m.add_output(csv.path());

    json fit_json;
    try {
        std::vector<std::pair<double, double>> fit_pts;
        for (auto& pr : pts)
            if (pr.first >= a.common.fit_min_n) fit_pts.push_back(pr);
        ScalingFit fit = scaling_fit(fit_pts, !a.without_prefactor);
        fit_json = {{"alpha", fit.alpha},
                    {"intercept", fit.intercept},
                    {"residual", fit.residual},
                    {"points", fit.points.size()},
                    {"with_prefactor", !a.without_prefactor}};
    } catch (const DomainError& e) {
        fit_json = {{"error", e.what()}};
        std::cerr << "fit: " << e.what() << '\n';
    }
    std::string fit_path = a.common.out + "/mingap_fit.json";
    cli::write_text(fit_path, fit_json.dump(2) + "\n");
    m.add_output(fit_path);

    std::string plot = a.common.out + "/plot_mingap.gp";
    cli::write_text(plot,
                    "set datafile separator ','\n"
                    "set xlabel 'N'\n"
                    "set ylabel 'delta_min / N'\n"
                    "set logscale y 2\n"
                    "set key off\n"
                    "plot 'mingap.csv' skip 1 using 1:($3/$1) with linespoints\n");
    m.add_output(plot);
    return 0;
}

// ---- table1 ----

struct Table1Args {
    Common common;
    std::string p_list = "3,5,7,9,11,13,15,17,19,21,23,25,31";
    std::string n_list = "40:120:10";
    bool no_simu = false;
};

int run_table1(const Table1Args& a, Manifest& m) {
    std::vector<int> ps = parse_int_list(a.p_list);
    if (ps.empty()) {
        std::cerr << "error: empty p list\n";
        return 2;
    }
    Table1Options opts;
    opts.with_simu = !a.no_simu;
    opts.n_values = parse_int_list(a.n_list);
    opts.fit_min_n = a.common.fit_min_n;
    opts.precision = a.common.precision_mode();
    auto rows = table1_pipeline(ps, opts);

    std::string simu_src = "alpha_simu=scaling_fit(min_gap,N=" + a.n_list + ")";
    CsvWriter csv(a.common.out + "/table1.csv");
    csv.header({"p", "gamma_c", "m_c", "alpha_sharp", "alpha_tanh", "alpha_simu", "provenance",
                "error"});
    for (const auto& r : rows) {
        std::string prov;
        if (r.has_critical) prov += "gamma_c,m_c=zero_T_critical_point;alpha_sharp=sharp_wall_alpha";
        if (r.has_tanh) prov += ";alpha_tanh=tanh_instanton_alpha";
        if (r.has_simu) prov += ";" + simu_src;
        csv.row({CsvWriter::num(r.p),
                 r.has_critical ? CsvWriter::num(r.gamma_c) : CsvWriter::empty(),
                 r.has_critical ? CsvWriter::num(r.m_c) : CsvWriter::empty(),
                 r.has_critical ? CsvWriter::num(r.alpha_sharp) : CsvWriter::empty(),
                 r.has_tanh ? CsvWriter::num(r.alpha_tanh) : CsvWriter::empty(),
                 r.has_simu ? CsvWriter::num(r.alpha_simu) : CsvWriter::empty(),
                 prov.empty() ? CsvWriter::empty() : CsvWriter::text(prov),
                 r.error.empty() ? CsvWriter::empty() : CsvWriter::text(r.error)});
    }
    csv.write();
    m.add_output(csv.path());
    return 0;
}

// ---- grover ----

struct GroverArgs {
    Common common;
    std::string n_list = "10:60:10";
    double gamma = 1.0;
};

int run_grover(const GroverArgs& a, Manifest& m) {
    std::vector<int> ns = parse_int_list(a.n_list);
    if (ns.empty()) {
        std::cerr << "error: empty N list\n";
        return 2;
    }
    CsvWriter csv(a.common.out + "/grover.csv");
    csv.header({"N", "lambda0", "lambda1", "gap", "gap_asymptotic", "eta", "energy_perturbative"});
    for (int n : ns) {
        LevelPair lp = lowest_two_levels(n, a.gamma);
        CsvWriter::Cell pert = CsvWriter::empty();
        if (a.gamma != 1.0) pert = CsvWriter::num(perturbative_gs_energy(n, a.gamma));
        csv.row({CsvWriter::num(n), CsvWriter::num(lp.lambda0), CsvWriter::num(lp.lambda1),
                 CsvWriter::num(lp.gap()), CsvWriter::num(min_gap_asymptotic(n)),
                 CsvWriter::num(lp.eta), pert});
    }
    csv.write();
    m.add_output(csv.path());
    return 0;
}

// ---- instanton ----

struct InstantonArgs {
    Common common;
    std::string p_list = "3,5,7,9,11,13,15,17,19,21,23,25,31";
};

int run_instanton(const InstantonArgs& a, Manifest& m) {
    std::vector<int> ps = parse_int_list(a.p_list);
    if (ps.empty()) {
        std::cerr << "error: empty p list\n";
        return 2;
    }
    CsvWriter csv(a.common.out + "/instanton.csv");
    csv.header({"p", "gamma_c", "m_c", "alpha_sharp", "alpha_tanh", "width", "cost", "error"});
    for (int p : ps) {
        try {
            CriticalPoint cp = zero_T_critical_point(p);
            InstantonResult r = tanh_instanton_alpha(p, a.common.trotter_density);
            csv.row({CsvWriter::num(p), CsvWriter::num(cp.gamma_c), CsvWriter::num(cp.m_c),
                     CsvWriter::num(sharp_wall_alpha(p)), CsvWriter::num(r.alpha),
                     CsvWriter::num(r.width), CsvWriter::num(r.cost), CsvWriter::empty()});
        } catch (const std::exception& e) {
            csv.row({CsvWriter::num(p), CsvWriter::empty(), CsvWriter::empty(), CsvWriter::empty(),
                     CsvWriter::empty(), CsvWriter::empty(), CsvWriter::empty(),
                     CsvWriter::text(e.what())});
        }
    }
    csv.write();
    m.add_output(csv.path());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra, phase diagrams, and gap scaling for the transverse-field p-spin model"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    PhaseDiagramArgs pd;
    auto* sub_pd = app.add_subcommand("phase-diagram", "finite-temperature first-order boundary");
    add_common(sub_pd, pd.common);
    sub_pd->add_option("--p", pd.p, "interaction order (odd integer or 'inf')")
        ->capture_default_str();
    sub_pd->add_option("--beta-min", pd.beta_min)->capture_default_str();
    sub_pd->add_option("--beta-max", pd.beta_max)->capture_default_str();
    sub_pd->add_option("--beta-points", pd.beta_points, "log-spaced grid size")
        ->capture_default_str();

    GapArgs gap;
    auto* sub_gap = app.add_subcommand("gap", "gap versus field at fixed size");
    add_common(sub_gap, gap.common);
    sub_gap->add_option("--p", gap.p)->capture_default_str();
    sub_gap->add_option("--N", gap.n)->capture_default_str();
    sub_gap->add_option("--gamma-min", gap.gamma_min, "window start (default: around gamma_c)");
    sub_gap->add_option("--gamma-max", gap.gamma_max, "window end (default: around gamma_c)");
    sub_gap->add_option("--points", gap.points)->capture_default_str();

    MinGapArgs mg;
    auto* sub_mg = app.add_subcommand("mingap", "minimum gap over the field, per size, with fit");
    add_common(sub_mg, mg.common);
    sub_mg->add_option("--p", mg.p, "odd integer or 'inf'")->capture_default_str();
    sub_mg->add_option("--N", mg.n_list, "sizes, 'lo:hi:step' or comma list")
        ->capture_default_str();
    sub_mg->add_flag("--without-prefactor", mg.without_prefactor,
                     "fit log2(delta) instead of log2(delta/N)");

    Table1Args t1;
    t1.common.precision = "extended";
    auto* sub_t1 = app.add_subcommand("table1", "critical points and gap exponents per p");
    add_common(sub_t1, t1.common);
    sub_t1->add_option("--p-list", t1.p_list)->capture_default_str();
    sub_t1->add_option("--N", t1.n_list, "sizes for the exponent fit")->capture_default_str();
    sub_t1->add_flag("--no-simu", t1.no_simu, "skip the diagonalization exponent column");

    GroverArgs gr;
    auto* sub_gr = app.add_subcommand("grover", "p = infinity levels from the secular equation");
    add_common(sub_gr, gr.common);
    sub_gr->add_option("--N", gr.n_list, "sizes, 'lo:hi:step' or comma list")
        ->capture_default_str();
    sub_gr->add_option("--gamma", gr.gamma)->capture_default_str();

    InstantonArgs in;
    auto* sub_in = app.add_subcommand("instanton", "sharp-wall and variational tunneling exponents");
    add_common(sub_in, in.common);
    sub_in->add_option("--p-list", in.p_list)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Common* common = nullptr;
    if (sub == sub_pd) common = &pd.common;
    else if (sub == sub_gap) common = &gap.common;
    else if (sub == sub_mg) common = &mg.common;
    else if (sub == sub_t1) common = &t1.common;
    else if (sub == sub_gr) common = &gr.common;
    else common = &in.common;

    try {
        json resolved = resolve_config(sub, *common);
        prepare_out(common->out);
        Manifest manifest(common->out, join_args(argc, argv), resolved);
        int rc = 0;
        if (sub == sub_pd) rc = run_phase_diagram(pd, manifest);
        else if (sub == sub_gap) rc = run_gap(sub_gap, gap, manifest);
        else if (sub == sub_mg) rc = run_mingap(mg, manifest);
        else if (sub == sub_t1) rc = run_table1(t1, manifest);
        else if (sub == sub_gr) rc = run_grover(gr, manifest);
        else rc = run_instanton(in, manifest);
        if (rc == 0) {
            manifest.add_timing(sub->get_name(), manifest.elapsed());
            manifest.write(kVersion);
        }
        return rc;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
