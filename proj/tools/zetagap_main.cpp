// zetagap: reproduce, optimize and cross-check the zero-gap functional h(c).
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetagap/functionals.hpp"
#include "zetagap/optimizer.hpp"
#include "zetagap/oracle.hpp"

namespace {

using namespace zetagap;

constexpr int kExitOk = 0;
constexpr int kExitFailVerdict = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

// 12 significant digits, deterministic across runs
std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += fmt(p.coeffs()[i]);
    }
    return s;
}

std::string json_coeffs(const Poly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += fmt(p.coeffs()[i]);
    }
    return s + "]";
}

struct RunConfig {
    std::string mode = "plain";
    std::string r_spec;
    std::string c_spec;
    int deg1 = 3;
    std::string deg2 = "3";
    std::vector<double> f1, f2;
    std::vector<double> T_list;
    std::string out_path;
    std::string format = "json";
    int threads = 1;

    bool has_f1 = false, has_f2 = false, has_r = false, has_c = false, has_mode = false;
};

Mode parse_mode(const std::string& s) {
    if (s == "plain") return Mode::Plain;
    if (s == "liouville") return Mode::Liouville;
    throw CLI::ValidationError("--mode must be plain or liouville");
}

std::vector<double> parse_grid(const std::string& spec, double default_step) {
    std::vector<double> out;
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) {
        out.push_back(std::stod(spec));
        return out;
    }
    const auto c2 = spec.find(':', c1 + 1);
    const double a = std::stod(spec.substr(0, c1));
    const double b = std::stod(
        c2 == std::string::npos ? spec.substr(c1 + 1) : spec.substr(c1 + 1, c2 - c1 - 1));
    const double step =
        c2 == std::string::npos ? default_step : std::stod(spec.substr(c2 + 1));
    if (step <= 0 || b < a) throw CLI::ValidationError("bad grid spec: " + spec);
    for (double x = a; x <= b + step * 1e-9; x += step) out.push_back(std::min(x, b));
    return out;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open config file " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("mode")) { cfg.mode = j["mode"]; cfg.has_mode = true; }
    if (j.contains("r")) { cfg.r_spec = j["r"].is_string() ? j["r"].get<std::string>() : fmt(j["r"].get<double>()); cfg.has_r = true; }
    if (j.contains("c")) { cfg.c_spec = j["c"].is_string() ? j["c"].get<std::string>() : fmt(j["c"].get<double>()); cfg.has_c = true; }
    if (j.contains("deg1")) cfg.deg1 = j["deg1"];
    if (j.contains("deg2")) cfg.deg2 = j["deg2"].is_string() ? j["deg2"].get<std::string>() : std::to_string(j["deg2"].get<int>());
    if (j.contains("f1")) { cfg.f1 = j["f1"].get<std::vector<double>>(); cfg.has_f1 = true; }
    if (j.contains("f2")) { cfg.f2 = j["f2"].get<std::vector<double>>(); cfg.has_f2 = true; }
    if (j.contains("T")) {
        if (j["T"].is_array()) cfg.T_list = j["T"].get<std::vector<double>>();
        else cfg.T_list = {j["T"].get<double>()};
    }
    if (j.contains("out")) cfg.out_path = j["out"];
    if (j.contains("format")) cfg.format = j["format"];
    if (j.contains("threads")) cfg.threads = j["threads"];
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) return;
    std::ofstream out(cfg.out_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
    out << text;
}

int parse_deg2(const std::string& s) {
    if (s == "off") return -1;
    return std::stoi(s);
}

// published certifying polynomials (Feng-Wu)
const Poly kWitnessF1Lambda{-3.54, -42.94, 88.05, -34.33};
const Poly kWitnessF2Lambda{4.56, 63.02, 42.72, 34.45};
const Poly kWitnessF1Mu{1.25, 0.95, 2.07, -2.21};
const Poly kWitnessF2Mu{0.7, 1.92};

struct VerifyCase {
    std::string name;
    Mode mode;
    double r, c;
    Poly f1, f2;
    bool is_witness;
};

std::string breakdown_json(const VerifyCase& vc, const HcBreakdown& hb,
                           const std::string& verdict) {
    std::ostringstream j;
    j << "{\"case\":\"" << vc.name << "\",\"mode\":\""
      << (vc.mode == Mode::Plain ? "plain" : "liouville") << "\",\"r\":" << fmt(vc.r)
      << ",\"c\":" << fmt(vc.c) << ",\"f1\":" << json_coeffs(vc.f1)
      << ",\"f2\":" << json_coeffs(vc.f2) << ",\"d1\":" << fmt(hb.d1)
      << ",\"d2\":" << fmt(hb.d2) << ",\"d3\":" << fmt(hb.d3) << ",\"n1\":" << fmt(hb.n1)
      << ",\"n2\":" << fmt(hb.n2) << ",\"n3\":" << fmt(hb.n3) << ",\"n4\":" << fmt(hb.n4)
      << ",\"h\":" << fmt(hb.h) << ",\"verdict\":\"" << verdict << "\"}";
    return j.str();
}

int cmd_verify(const RunConfig& cfg) {
    KernelCache cache;
    std::vector<VerifyCase> cases;
    const bool custom = cfg.has_f1 || cfg.has_f2 || cfg.has_r || cfg.has_c;

    auto make_case = [&](Mode m) {
        VerifyCase vc;
        vc.mode = m;
        if (m == Mode::Plain) {
            vc.name = "lambda";
            vc.r = 2.6;
            vc.c = 2.7327;
            vc.f1 = kWitnessF1Lambda;
            vc.f2 = kWitnessF2Lambda;
        } else {
            vc.name = "mu";
            vc.r = 1.18;
            vc.c = 0.5154;
            vc.f1 = kWitnessF1Mu;
            vc.f2 = kWitnessF2Mu;
        }
        if (cfg.has_r) vc.r = std::stod(cfg.r_spec);
        if (cfg.has_c) vc.c = std::stod(cfg.c_spec);
        if (cfg.has_f1) vc.f1 = Poly(cfg.f1);
        if (cfg.has_f2) vc.f2 = Poly(cfg.f2);
        vc.is_witness = !custom;
        return vc;
    };
    if (cfg.has_mode)
        cases.push_back(make_case(parse_mode(cfg.mode)));
    else {
        cases.push_back(make_case(Mode::Plain));
        cases.push_back(make_case(Mode::Liouville));
    }

    bool any_fail = false;
    std::string json = "{\"cases\":[";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& vc = cases[i];
        const HcBreakdown hb = h_value(vc.f1, vc.f2, vc.r, vc.c, vc.mode, cache);
        std::string verdict;
        if (!vc.is_witness) {
            verdict = "SKIPPED";
        } else if (vc.mode == Mode::Plain) {
            verdict = hb.h < 1.0 ? "PASS" : "FAIL";
        } else {
            verdict = hb.h > 1.0 ? "PASS" : "FAIL";
        }
        if (verdict == "FAIL") any_fail = true;
        std::cout << "case " << vc.name << ": mode="
                  << (vc.mode == Mode::Plain ? "plain" : "liouville") << " r=" << fmt(vc.r)
                  << " c=" << fmt(vc.c) << "\n"
                  << "  f1 = " << fmt_poly(vc.f1) << "\n  f2 = " << fmt_poly(vc.f2) << "\n"
                  << "  D1=" << fmt(hb.d1) << " D2=" << fmt(hb.d2) << " D3=" << fmt(hb.d3)
                  << "\n  N1=" << fmt(hb.n1) << " N2=" << fmt(hb.n2)
                  << " N3=" << fmt(hb.n3) << " N4=" << fmt(hb.n4) << "\n  h(" << fmt(vc.c)
                  << ") = " << fmt(hb.h) << "  [" << verdict << "]\n";
        if (i) json += ",";
        json += breakdown_json(vc, hb, verdict);
    }
    json += "]}\n";
    write_output(cfg, json);
    return any_fail ? kExitFailVerdict : kExitOk;
}

std::string opt_result_json(const OptResult& res) {
    std::ostringstream j;
    j << "{\"mode\":\"" << (res.mode == Mode::Plain ? "plain" : "liouville")
      << "\",\"r\":" << fmt(res.r) << ",\"c_star\":" << fmt(res.c_star)
      << ",\"f1\":" << json_coeffs(res.f1) << ",\"f2\":" << json_coeffs(res.f2)
      << ",\"h_at_c_star\":" << fmt(res.h_at_c_star) << ",\"bound\":\""
      << (res.bound_kind == BoundKind::LambdaLower ? "lambda>=c_star" : "mu<=c_star")
      << "\"}";
    return j.str();
}

int cmd_optimize(const RunConfig& cfg) {
    KernelCache cache;
    const Mode mode = parse_mode(cfg.mode);
    const int deg2 = parse_deg2(cfg.deg2);
    std::vector<double> grid =
        cfg.has_r ? parse_grid(cfg.r_spec, 0.05) : default_r_grid(mode);

    ScanOutcome scan = scan_r(grid, cfg.deg1, deg2, mode, cache, 1e-5, cfg.threads);
    // local refinement at step 0.01 around the coarse best
    if (!cfg.has_r && grid.size() > 1) {
        std::vector<double> fine;
        for (double r = std::max(1.0, scan.best.r - 0.04); r <= scan.best.r + 0.04 + 1e-9;
             r += 0.01)
            fine.push_back(r);
        ScanOutcome refined = scan_r(fine, cfg.deg1, deg2, mode, cache, 1e-5, cfg.threads);
        const bool better = mode == Mode::Plain
                                ? refined.best.c_star > scan.best.c_star
                                : refined.best.c_star < scan.best.c_star;
        if (better) scan.best = refined.best;
        for (auto& e : refined.per_r) scan.per_r.push_back(e);
    }

    std::cout << "r        c_star       h(c_star)\n";
    for (const auto& e : scan.per_r)
        std::cout << fmt(e.r) << "  " << fmt(e.result.c_star) << "  "
                  << fmt(e.result.h_at_c_star)
                  << (e.r == scan.best.r ? "   <== best" : "") << "\n";
    std::cout << "best: r=" << fmt(scan.best.r) << " c_star=" << fmt(scan.best.c_star)
              << " (" << (mode == Mode::Plain ? "lambda >= " : "mu <= ")
              << fmt(scan.best.c_star) << ")\n"
              << "  f1 = " << fmt_poly(scan.best.f1) << "\n  f2 = "
              << fmt_poly(scan.best.f2) << "\n";

    if (cfg.format == "csv") {
        std::string csv = "r,c_star,h_at_c_star,f1,f2\n";
        for (const auto& e : scan.per_r)
            csv += fmt(e.r) + "," + fmt(e.result.c_star) + "," +
                   fmt(e.result.h_at_c_star) + ",\"" + fmt_poly(e.result.f1) + "\",\"" +
                   fmt_poly(e.result.f2) + "\"\n";
        write_output(cfg, csv);
    } else {
        std::string json = "{\"best\":" + opt_result_json(scan.best) + ",\"per_r\":[";
        for (std::size_t i = 0; i < scan.per_r.size(); ++i) {
            if (i) json += ",";
            json += opt_result_json(scan.per_r[i].result);
        }
        json += "]}\n";
        write_output(cfg, json);
    }
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
    KernelCache cache;
    const Mode mode = parse_mode(cfg.mode);
    if (cfg.T_list.empty())
        throw CLI::ValidationError("oracle: at least one --T value required");
    double r = cfg.has_r ? std::stod(cfg.r_spec) : (mode == Mode::Plain ? 2.6 : 1.18);
    double c = cfg.has_c ? std::stod(cfg.c_spec)
                         : (mode == Mode::Plain ? 2.7327 : 0.5154);
    Poly f1 = cfg.has_f1 ? Poly(cfg.f1)
                         : (mode == Mode::Plain ? kWitnessF1Lambda : kWitnessF1Mu);
    Poly f2 = cfg.has_f2 ? Poly(cfg.f2)
                         : (mode == Mode::Plain ? kWitnessF2Lambda : kWitnessF2Mu);

    const double h_asym = h_value(f1, f2, r, c, mode, cache).h;
    std::cout << "T            K           h_direct        h_asymptotic    deviation\n";
    std::string json = "{\"h_asymptotic\":" + fmt(h_asym) + ",\"rows\":[";
    bool first = true;
    for (double T : cfg.T_list) {
        const OracleParams params = OracleParams::make(T, c, r, f1, f2, mode);
        const SpfSieve sieve(params.K, SpfSieve::kHardCap);
        OracleOptions opts;
        opts.threads = cfg.threads;
        const double hd = h_direct(params, sieve, opts);
        const double dev = std::abs(hd - h_asym);
        std::cout << fmt(T) << "  " << params.K << "  " << fmt(hd) << "  " << fmt(h_asym)
                  << "  " << fmt(dev) << "\n";
        if (!first) json += ",";
        first = false;
        json += "{\"T\":" + fmt(T) + ",\"K\":" + std::to_string(params.K) +
                ",\"h_direct\":" + fmt(hd) + ",\"deviation\":" + fmt(dev) + "}";
    }
    json += "]}\n";
    write_output(cfg, json);
    return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
    KernelCache cache;
    const Mode mode = parse_mode(cfg.mode);
    const int deg2 = parse_deg2(cfg.deg2);
    if (cfg.r_spec.empty() || cfg.c_spec.empty())
        throw CLI::ValidationError("scan: --r and --c grid specs required");
    const std::vector<double> rs = parse_grid(cfg.r_spec, 0.05);
    const std::vector<double> cs = parse_grid(cfg.c_spec, 0.01);
    if (rs.empty() || cs.empty()) throw CLI::ValidationError("scan: empty grid");

    std::string csv = "r,c,max_rayleigh,target,g\n";
    for (double r : rs) {
        for (double c : cs) {
            const QuadForm q = assemble_forms(cfg.deg1, deg2, r, c, cache);
            const double ray = max_rayleigh(q).first;
            const double target = mode == Mode::Plain ? c - 1.0 : 1.0 - c;
            csv += fmt(r) + "," + fmt(c) + "," + fmt(ray) + "," + fmt(target) + "," +
                   fmt(ray - target) + "\n";
        }
    }
    std::cout << csv;
    write_output(cfg, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Montgomery-Odlyzko gap functional h(c): verification, optimization "
                 "and finite-T cross-checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string T_spec;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        sub->add_option("--mode", cfg.mode, "plain|liouville");
        sub->add_option("--r", cfg.r_spec, "r value or grid a:b:step");
        sub->add_option("--c", cfg.c_spec, "c value or bracket a:b[:step]");
        sub->add_option("--deg1", cfg.deg1, "degree of f1");
        sub->add_option("--deg2", cfg.deg2, "degree of f2, or 'off'");
        sub->add_option("--f1", cfg.f1, "f1 coefficients c0,c1,...")->delimiter(',');
        sub->add_option("--f2", cfg.f2, "f2 coefficients c0,c1,...")->delimiter(',');
        sub->add_option("--T", T_spec, "finite-T value(s), comma separated");
        sub->add_option("--out", cfg.out_path, "output file path");
        sub->add_option("--format", cfg.format, "json|csv");
        sub->add_option("--threads", cfg.threads, "worker cap (results independent of it)");
        return sub;
    };

    auto* verify = add_common(app.add_subcommand("verify", "check the certifying polynomials"));
    auto* optimize = add_common(app.add_subcommand("optimize", "optimize polynomials over an r grid"));
    auto* oracle = add_common(app.add_subcommand("oracle", "finite-T direct summation vs asymptotics"));
    auto* scan = add_common(app.add_subcommand("scan", "CSV of g(c) over an (r,c) grid"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfigError : kExitOk;
    }

    try {
        // flag values win over the config file
        RunConfig file_cfg;
        if (!config_path.empty()) load_config_file(config_path, file_cfg);
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) {
            if (!sub->count("--mode") && file_cfg.has_mode) { cfg.mode = file_cfg.mode; }
            if (!sub->count("--r") && file_cfg.has_r) cfg.r_spec = file_cfg.r_spec;
            if (!sub->count("--c") && file_cfg.has_c) cfg.c_spec = file_cfg.c_spec;
            if (!sub->count("--deg1")) cfg.deg1 = file_cfg.deg1;
            if (!sub->count("--deg2")) cfg.deg2 = file_cfg.deg2;
            if (!sub->count("--f1") && file_cfg.has_f1) cfg.f1 = file_cfg.f1;
            if (!sub->count("--f2") && file_cfg.has_f2) cfg.f2 = file_cfg.f2;
            if (T_spec.empty()) cfg.T_list = file_cfg.T_list;
            if (!sub->count("--out") && !file_cfg.out_path.empty())
                cfg.out_path = file_cfg.out_path;
            if (!sub->count("--format")) cfg.format = file_cfg.format;
            if (!sub->count("--threads")) cfg.threads = file_cfg.threads;
            cfg.has_mode = sub->count("--mode") || file_cfg.has_mode;
            cfg.has_r = sub->count("--r") || file_cfg.has_r;
            cfg.has_c = sub->count("--c") || file_cfg.has_c;
            cfg.has_f1 = sub->count("--f1") || file_cfg.has_f1;
            cfg.has_f2 = sub->count("--f2") || file_cfg.has_f2;
        } else {
            cfg.has_mode = sub->count("--mode");
            cfg.has_r = sub->count("--r");
            cfg.has_c = sub->count("--c");
            cfg.has_f1 = sub->count("--f1");
            cfg.has_f2 = sub->count("--f2");
        }
        if (!T_spec.empty()) {
            cfg.T_list.clear();
            std::stringstream ss(T_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.T_list.push_back(std::stod(tok));
        }
        if (cfg.format != "json" && cfg.format != "csv")
            throw CLI::ValidationError("--format must be json or csv");

        if (verify->parsed()) return cmd_verify(cfg);
        if (optimize->parsed()) return cmd_optimize(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (scan->parsed()) return cmd_scan(cfg);
        return kExitConfigError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
}
