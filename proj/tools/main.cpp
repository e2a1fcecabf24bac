#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quantize1d/asymptotics.hpp"
#include "quantize1d/constrained.hpp"
#include "quantize1d/json_io.hpp"
#include "quantize1d/metric.hpp"
#include "quantize1d/step_fit.hpp"
#include "quantize1d/unconstrained.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_csv_reals(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error("empty list");
    return out;
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_csv_reals(s)) out.push_back(int(v));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

// json dump with all reals at 17 significant digits
std::string dump_17(const json& j) {
    if (j.is_number_float()) return q1d::format_real(j.get<double>());
    if (j.is_array()) {
        std::string s = "[";
        bool first = true;
        for (auto& e : j) {
            if (!first) s += ",";
            s += dump_17(e);
            first = false;
        }
        return s + "]";
    }
    if (j.is_object()) {
        std::string s = "{";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) s += ",";
            s += json(it.key()).dump() + ":" + dump_17(it.value());
            first = false;
        }
        return s + "}";
    }
    return j.dump();
}

json approx_json(const q1d::StepApprox& a) {
    json j;
    j["x"] = a.x;
    j["p"] = a.p;
    j["P"] = a.cumulative();
    if (a.r) j["r"] = *a.r;
    if (a.achieved_distance) j["d_r"] = *a.achieved_distance;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best finitely supported approximations of one-dimensional "
                 "probability measures in the L^r-Kantorovich distance"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string out_path;
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Best constant fit of a piecewise function");
    std::string tau_f;
    double tau_r_val = 2.0;
    tau_cmd->add_option("--f", tau_f, "Piecewise function JSON file")->required();
    tau_cmd->add_option("--r", tau_r_val, "Order r >= 1")->required();

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "d_r between a measure and a step approximation");
    std::string dist_mu, dist_nu;
    double dist_r = 2.0;
    dist_cmd->add_option("--mu", dist_mu, "Measure JSON file")->required();
    dist_cmd->add_option("--nu", dist_nu, "Approximation JSON file")->required();
    dist_cmd->add_option("--r", dist_r, "Order r >= 1")->required();

    // approx family
    auto* approx_cmd = app.add_subcommand("approx", "Best constrained/unconstrained approximations");
    approx_cmd->require_subcommand(1);

    auto* loc_cmd = approx_cmd->add_subcommand("locations", "Prescribed atom locations");
    std::string loc_mu, loc_x;
    double loc_r = 2.0;
    loc_cmd->add_option("--mu", loc_mu)->required();
    loc_cmd->add_option("--x", loc_x, "Comma-separated locations")->required();
    loc_cmd->add_option("--r", loc_r)->required();

    auto* wei_cmd = approx_cmd->add_subcommand("weights", "Prescribed atom weights");
    std::string wei_mu, wei_p;
    double wei_r = 2.0;
    bool wei_search = false;
    wei_cmd->add_option("--mu", wei_mu)->required();
    wei_cmd->add_option("--p", wei_p, "Comma-separated weights")->required();
    wei_cmd->add_option("--r", wei_r)->required();
    wei_cmd->add_flag("--search-orderings", wei_search, "Minimize over weight orderings");

    auto* uni_cmd = approx_cmd->add_subcommand("uniform", "Equal weights 1/n");
    std::string uni_mu;
    int uni_n = 1;
    double uni_r = 2.0;
    uni_cmd->add_option("--mu", uni_mu)->required();
    uni_cmd->add_option("--n", uni_n)->required();
    uni_cmd->add_option("--r", uni_r)->required();

    auto* free_cmd = approx_cmd->add_subcommand("free", "Unconstrained n-point approximation");
    std::string free_mu;
    int free_n = 1, free_starts = 16;
    double free_r = 2.0;
    std::uint64_t free_seed = 0;
    free_cmd->add_option("--mu", free_mu)->required();
    free_cmd->add_option("--n", free_n)->required();
    free_cmd->add_option("--r", free_r)->required();
    free_cmd->add_option("--starts", free_starts);
    free_cmd->add_option("--seed", free_seed);

    // rates
    auto* rates_cmd = app.add_subcommand("rates", "Rate-of-convergence sweep (CSV)");
    std::string rates_mu, rates_regime = "uniform", rates_nlist;
    double rates_r = 2.0;
    int rates_starts = 16;
    std::uint64_t rates_seed = 0;
    rates_cmd->add_option("--mu", rates_mu)->required();
    rates_cmd->add_option("--r", rates_r)->required();
    rates_cmd->add_option("--regime", rates_regime,
                          "uniform|free|locations_scheme|weights_scheme|asym_scheme")
        ->required();
    rates_cmd->add_option("--n-list", rates_nlist, "Comma-separated atom counts")->required();
    rates_cmd->add_option("--starts", rates_starts);
    rates_cmd->add_option("--seed", rates_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*tau_cmd) {
            q1d::PiecewiseFunction f = q1d::piecewise_from_json(slurp(tau_f));
            q1d::TauResult res = q1d::tau_r(f, tau_r_val);
            json j;
            j["r"] = res.r;
            j["value"] = res.value;
            if (tau_r_val == 1.0) j["set"] = {res.minimizers.lo, res.minimizers.hi};
            j["residual_norm"] = res.residual_norm;
            emit(dump_17(j), out_path);
        } else if (*dist_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(dist_mu));
            q1d::StepApprox nu = q1d::approx_from_json(slurp(dist_nu));
            json j;
            j["d_r"] = q1d::distance_r(mu, nu, dist_r);
            emit(dump_17(j), out_path);
        } else if (*loc_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(loc_mu));
            auto a = q1d::best_given_locations(mu, parse_csv_reals(loc_x), loc_r);
            emit(dump_17(approx_json(a)), out_path);
        } else if (*wei_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(wei_mu));
            q1d::StepApprox a =
                wei_search
                    ? q1d::best_weights_over_orderings(mu, parse_csv_reals(wei_p), wei_r)
                    : q1d::best_given_weights(mu, parse_csv_reals(wei_p), wei_r);
            emit(dump_17(approx_json(a)), out_path);
        } else if (*uni_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(uni_mu));
            auto a = q1d::best_uniform(mu, uni_n, uni_r);
            emit(dump_17(approx_json(a)), out_path);
        } else if (*free_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(free_mu));
            q1d::SolverConfig cfg;
            cfg.starts = free_starts;
            cfg.seed = free_seed;
            auto res = q1d::best_free(mu, free_n, free_r, cfg);
            json j = approx_json(res.best);
            json cands = json::array();
            for (auto& c : res.candidates) cands.push_back(approx_json(c));
            j["candidates"] = cands;
            j["starts_converged"] = res.starts_converged;
            if (!res.unconverged_starts.empty())
                j["unconverged_starts"] = res.unconverged_starts;
            emit(dump_17(j), out_path);
        } else if (*rates_cmd) {
            q1d::Measure mu = q1d::measure_from_json(slurp(rates_mu));
            q1d::SweepOptions opt;
            opt.solver.starts = rates_starts;
            opt.solver.seed = rates_seed;
            q1d::RateSeries s = q1d::rate_sweep(mu, rates_r, q1d::regime_from_name(rates_regime),
                                                parse_csv_ints(rates_nlist), opt);
            emit(s.to_csv(), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
