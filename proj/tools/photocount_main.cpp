// Command-line front end: moments, distribution approximations, accuracy
// bounds, Monte-Carlo simulation, self-verification, and parameter sweeps.
// All numeric output is serialized with 17 significant digits so CSV and
// JSON carry identical values and runs are byte-reproducible.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "photocount/distribution.hpp"
#include "photocount/mc.hpp"
#include "photocount/moments.hpp"
#include "photocount/text_io.hpp"
#include "photocount/verify.hpp"

namespace {

using namespace photocount;

struct OutputDoc {
    std::string command;
    // key -> (raw json token, raw csv token); emitted before rows in JSON only
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<char> kinds;  // 'n' raw token, 's' string cell
    std::vector<std::vector<std::string>> rows;

    void add_meta_num(const std::string& k, double v) { meta.emplace_back(k, fmt_g17(v)); }
    void add_meta_int(const std::string& k, std::uint64_t v) { meta.emplace_back(k, std::to_string(v)); }
    void add_meta_raw(const std::string& k, const std::string& raw) { meta.emplace_back(k, raw); }
};

std::string render_json(const OutputDoc& d) {
    std::ostringstream os;
    os << "{\n  \"schema\": \"photocount/1\",\n  \"command\": \"" << d.command << "\"";
    for (const auto& [k, v] : d.meta) os << ",\n  \"" << k << "\": " << v;
    os << ",\n  \"rows\": [";
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        os << (i ? ",\n    {" : "\n    {");
        for (std::size_t c = 0; c < d.columns.size(); ++c) {
            os << (c ? ", " : "") << "\"" << d.columns[c] << "\": ";
            if (d.kinds[c] == 's') os << "\"" << json_escape(d.rows[i][c]) << "\"";
            else os << d.rows[i][c];
        }
        os << "}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::string render_csv(const OutputDoc& d) {
    std::ostringstream os;
    for (std::size_t c = 0; c < d.columns.size(); ++c)
        os << (c ? "," : "") << d.columns[c];
    os << "\n";
    for (const auto& row : d.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << "\n";
    }
    return os.str();
}

void emit(const OutputDoc& d, const std::string& format, const std::string& output) {
    const std::string text = format == "csv" ? render_csv(d) : render_json(d);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + output);
        f << text;
    }
}

void add_params_meta(OutputDoc& doc, const ModelParams& p) {
    doc.add_meta_raw("params", "{\"nu\": " + fmt_g17(p.nu()) +
                                   ", \"sigma\": " + fmt_g17(p.sigma()) +
                                   ", \"t_phys\": " + fmt_g17(p.t_phys()) +
                                   ", \"tau\": " + fmt_g17(p.tau()) +
                                   ", \"theta\": " + fmt_g17(p.theta()) + "}");
}

std::uint64_t parse_seed(const std::string& s) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &pos, 0);  // base 0: decimal or 0x-hex
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty())
        throw CLI::ValidationError("--seed", "expected a decimal or 0x-hex 64-bit integer");
    return v;
}

struct CommonFlags {
    double nu = 1.0, sigma = 0.1, t_phys = 0.5;
    std::string format = "json";
    std::string output;

    void attach(CLI::App* cmd, bool with_params = true) {
        if (with_params) {
            cmd->add_option("--nu", nu, "relaxation rate (1/time), > 0");
            cmd->add_option("--sigma", sigma, "noise intensity, > 0");
            cmd->add_option("--t-phys", t_phys, "registration time, >= 0");
        }
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", output, "output path (default: stdout)");
    }
};

std::string bool_token(bool b) { return b ? "true" : "false"; }

int cmd_moments(const CommonFlags& f, std::size_t order) {
    const ModelParams params(f.nu, f.sigma, f.t_phys);
    const MomentTable table = moments(order, params);
    OutputDoc doc;
    doc.command = "moments";
    add_params_meta(doc, params);
    doc.add_meta_int("order", order);
    doc.columns = {"n", "x", "moment"};
    doc.kinds = {'n', 'n', 'n'};
    for (std::size_t n = 0; n <= order; ++n)
        doc.rows.push_back({std::to_string(n), fmt_g17(table.x[n]), fmt_g17(table.moments[n])});
    emit(doc, f.format, f.output);
    return 0;
}

int cmd_dist(const CommonFlags& f, std::size_t order) {
    const ModelParams params(f.nu, f.sigma, f.t_phys);
    const DistApprox d = approx_dist(order, params);
    const std::string zeta = fmt_g17(d.zeta);
    const std::string bound_json = d.bound ? fmt_g17(*d.bound) : "null";
    const std::string bound_csv = d.bound ? fmt_g17(*d.bound) : "unavailable";
    OutputDoc doc;
    doc.command = "dist";
    add_params_meta(doc, params);
    doc.add_meta_int("order", order);
    doc.add_meta_raw("zeta", zeta);
    doc.add_meta_raw("bound", bound_json);
    doc.add_meta_raw("has_negative", bool_token(d.has_negative));
    doc.columns = {"n", "p", "zeta", "bound", "has_negative"};
    doc.kinds = {'n', 'n', 'n', 'n', 'n'};
    for (std::size_t n = 0; n <= order; ++n)
        doc.rows.push_back({std::to_string(n), fmt_g17(d.probs[n]), zeta,
                            f.format == "csv" ? bound_csv : bound_json,
                            bool_token(d.has_negative)});
    emit(doc, f.format, f.output);
    return 0;
}

int cmd_bound(const CommonFlags& f, std::size_t order) {
    const ModelParams params(f.nu, f.sigma, f.t_phys);
    const AccuracyBound b = error_bound(order, params);
    OutputDoc doc;
    doc.command = "bound";
    add_params_meta(doc, params);
    doc.columns = {"order", "zeta", "bound"};
    doc.kinds = {'n', 'n', 'n'};
    doc.rows.push_back({std::to_string(order), fmt_g17(b.zeta),
                        b.bound ? fmt_g17(*b.bound)
                                : (f.format == "csv" ? std::string("unavailable")
                                                     : std::string("null"))});
    emit(doc, f.format, f.output);
    return 0;
}

int cmd_simulate(const CommonFlags& f, std::size_t n_max, std::size_t samples,
                 std::size_t steps, const std::string& seed_text, unsigned threads) {
    const std::uint64_t seed = parse_seed(seed_text);
    const ModelParams params(f.nu, f.sigma, f.t_phys);
    const auto est = mc::estimate_pn(params, n_max, samples, steps, seed, threads);
    OutputDoc doc;
    doc.command = "simulate";
    add_params_meta(doc, params);
    doc.add_meta_int("n_max", n_max);
    doc.add_meta_int("samples", samples);
    doc.add_meta_int("steps", steps);
    doc.add_meta_raw("seed", "\"" + std::to_string(seed) + "\"");
    doc.columns = {"n", "p_hat", "std_error"};
    doc.kinds = {'n', 'n', 'n'};
    for (std::size_t n = 0; n <= n_max; ++n)
        doc.rows.push_back({std::to_string(n), fmt_g17(est[n].value), fmt_g17(est[n].std_error)});
    emit(doc, f.format, f.output);
    return 0;
}

int cmd_verify(const CommonFlags& f, const VerifyOptions& opt) {
    const VerifyReport rep = run_verification(opt);
    OutputDoc doc;
    doc.command = "verify";
    doc.add_meta_raw("all_pass", bool_token(rep.all_pass));
    doc.columns = {"check", "context", "lhs", "rhs", "pass"};
    doc.kinds = {'s', 's', 'n', 'n', 'n'};
    for (const auto& r : rep.rows)
        doc.rows.push_back({r.check, r.context, fmt_g17(r.lhs), fmt_g17(r.rhs),
                            bool_token(r.pass)});
    emit(doc, f.format, f.output);
    return rep.all_pass ? 0 : 1;
}

int cmd_sweep(const CommonFlags& f, std::size_t order, const std::vector<double>& t_grid,
              const std::vector<double>& sigma_grid) {
    OutputDoc doc;
    doc.command = "sweep";
    doc.add_meta_int("order", order);
    doc.columns = {"nu", "sigma", "t_phys", "tau", "n", "p", "zeta", "bound"};
    doc.kinds = {'n', 'n', 'n', 'n', 'n', 'n', 'n', 'n'};
    const std::vector<double>& sigmas = sigma_grid.empty() ? std::vector<double>{f.sigma} : sigma_grid;
    for (double sig : sigmas) {
        for (double t : t_grid) {
            const ModelParams params(f.nu, sig, t);
            const DistApprox d = approx_dist(order, params);
            const std::string bound = d.bound ? fmt_g17(*d.bound)
                                              : (f.format == "csv" ? std::string("unavailable")
                                                                   : std::string("null"));
            for (std::size_t n = 0; n <= order; ++n)
                doc.rows.push_back({fmt_g17(params.nu()), fmt_g17(params.sigma()),
                                    fmt_g17(params.t_phys()), fmt_g17(params.tau()),
                                    std::to_string(n), fmt_g17(d.probs[n]),
                                    fmt_g17(d.zeta), bound});
        }
    }
    emit(doc, f.format, f.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photocount-number statistics of one-mode Ornstein-Uhlenbeck noise radiation"};
    app.require_subcommand(1);

    CommonFlags fm, fd, fb, fs, fv, fw;
    std::size_t order = 3, n_max = 3, samples = 100000, steps = 512;
    std::string seed_text = "1";
    unsigned threads = 0;

    auto* moments_cmd = app.add_subcommand("moments", "x_n coefficients and moments M_n");
    fm.attach(moments_cmd);
    moments_cmd->add_option("--order", order, "highest moment order N")->check(CLI::Range(0, 64));

    auto* dist_cmd = app.add_subcommand("dist", "distribution approximation P_n^(N) with bound");
    fd.attach(dist_cmd);
    dist_cmd->add_option("--order", order, "approximation order N")->check(CLI::Range(0, 64));

    auto* bound_cmd = app.add_subcommand("bound", "contraction factor and accuracy bound");
    fb.attach(bound_cmd);
    bound_cmd->add_option("--order", order, "approximation order N")->check(CLI::Range(0, 64));

    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo estimates of P_n");
    fs.attach(sim_cmd);
    sim_cmd->add_option("--n-max", n_max, "highest photocount number")->check(CLI::Range(0, 512));
    sim_cmd->add_option("--samples", samples, "number of trajectories")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--steps", steps, "grid resolution K")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", seed_text, "root seed (decimal or 0x-hex)");
    sim_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    VerifyOptions vopt;
    std::string vseed_text = "1";
    auto* verify_cmd = app.add_subcommand("verify", "run the self-check battery");
    fv.attach(verify_cmd);
    verify_cmd->add_option("--max-m", vopt.max_m, "inequality suite depth");
    verify_cmd->add_option("--tau", vopt.taus, "inequality suite tau values")->delimiter(',');
    verify_cmd->add_option("--samples", vopt.samples, "enable MC cross-checks with this many samples");
    verify_cmd->add_option("--steps", vopt.steps, "MC grid resolution")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vseed_text, "MC root seed (decimal or 0x-hex)");
    verify_cmd->add_option("--threads", vopt.threads, "MC worker threads (0 = hardware)");

    std::vector<double> t_grid{0.1, 0.25, 0.5, 1.0, 2.0}, sigma_grid;
    auto* sweep_cmd = app.add_subcommand("sweep", "long-format P_n^(N) over parameter grids");
    fw.attach(sweep_cmd);
    sweep_cmd->add_option("--order", order, "approximation order N")->check(CLI::Range(0, 64));
    sweep_cmd->add_option("--t-phys-grid", t_grid, "registration times")->delimiter(',');
    sweep_cmd->add_option("--sigma-grid", sigma_grid, "noise intensities")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 2: usage error (0 covers --help)
    }

    try {
        if (moments_cmd->parsed()) return cmd_moments(fm, order);
        if (dist_cmd->parsed()) return cmd_dist(fd, order);
        if (bound_cmd->parsed()) return cmd_bound(fb, order);
        if (sim_cmd->parsed()) return cmd_simulate(fs, n_max, samples, steps, seed_text, threads);
        if (verify_cmd->parsed()) {
            vopt.nu = fv.nu;
            vopt.sigma = fv.sigma;
            vopt.t_phys = fv.t_phys;
            vopt.seed = parse_seed(vseed_text);
            return cmd_verify(fv, vopt);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(fw, order, t_grid, sigma_grid);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
