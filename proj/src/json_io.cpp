#include "quantize1d/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "quantize1d/asymptotics.hpp"

namespace q1d {

using nlohmann::json;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::vector<double> reals(const json& j, const char* field) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("missing field: ") + field);
    return j.at(field).get<std::vector<double>>();
}

} // namespace

Measure measure_from_json(const std::string& text) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "point_mass") return Measure::point_mass(j.at("a").get<double>());
    if (kind == "uniform")
        return Measure::uniform(j.at("a").get<double>(), j.at("b").get<double>());
    if (kind == "exponential") return Measure::exponential();
    if (kind == "standard_normal") return Measure::standard_normal();
    if (kind == "beta_2_1") return Measure::beta_2_1();
    if (kind == "discrete") return Measure::discrete(reals(j, "atoms"), reals(j, "weights"));
    if (kind == "lebesgue_plus_atoms") {
        std::vector<std::array<double, 3>> intervals;
        if (j.contains("intervals"))
            for (auto& iv : j.at("intervals"))
                intervals.push_back({iv.at(0).get<double>(), iv.at(1).get<double>(),
                                     iv.at(2).get<double>()});
        std::vector<std::pair<double, double>> atoms;
        if (j.contains("atoms"))
            for (auto& a : j.at("atoms"))
                atoms.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        return Measure::lebesgue_plus_atoms(std::move(intervals), std::move(atoms));
    }
    if (kind == "piecewise_linear_quantile") {
        std::vector<std::pair<double, double>> knots;
        for (auto& k : j.at("knots")) knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
        return Measure::piecewise_linear_quantile(std::move(knots));
    }
    if (kind == "cantor") return Measure::cantor(j.value("digit_depth", 48));
    if (kind == "inverse_cantor") return Measure::inverse_cantor(j.value("digit_depth", 48));
    if (kind == "slow_decay") {
        int K = j.value("K", 12);
        if (j.contains("atoms") && j.contains("weights"))
            return Measure::slow_decay(reals(j, "atoms"), reals(j, "weights"), K);
        // construct from a target sequence when atoms are not given directly
        return slow_decay_measure(reals(j, "target"), j.value("r", 1.0), K);
    }
    throw std::invalid_argument("unknown measure kind: " + kind);
}

std::string measure_to_json(const Measure& m) {
    json j;
    switch (m.kind()) {
    case Measure::Kind::point_mass:
        j = {{"kind", "point_mass"}, {"a", m.param_a()}};
        break;
    case Measure::Kind::uniform:
        j = {{"kind", "uniform"}, {"a", m.param_a()}, {"b", m.param_b()}};
        break;
    case Measure::Kind::exponential:
        j = {{"kind", "exponential"}};
        break;
    case Measure::Kind::standard_normal:
        j = {{"kind", "standard_normal"}};
        break;
    case Measure::Kind::beta_2_1:
        j = {{"kind", "beta_2_1"}};
        break;
    case Measure::Kind::discrete:
        j = {{"kind", "discrete"}, {"atoms", m.atoms()}, {"weights", m.weights()}};
        break;
    case Measure::Kind::slow_decay:
        j = {{"kind", "slow_decay"},
             {"atoms", m.atoms()},
             {"weights", m.weights()},
             {"K", m.truncation()}};
        break;
    case Measure::Kind::lebesgue_plus_atoms: {
        json iv = json::array(), at = json::array();
        for (auto& v : m.intervals()) iv.push_back({v[0], v[1], v[2]});
        for (auto& a : m.point_atoms()) at.push_back({a.first, a.second});
        j = {{"kind", "lebesgue_plus_atoms"}, {"intervals", iv}, {"atoms", at}};
        break;
    }
    case Measure::Kind::piecewise_linear_quantile: {
        json kn = json::array();
        for (auto& k : m.knots()) kn.push_back({k.first, k.second});
        j = {{"kind", "piecewise_linear_quantile"}, {"knots", kn}};
        break;
    }
    case Measure::Kind::cantor:
        j = {{"kind", "cantor"}, {"digit_depth", m.digit_depth()}};
        break;
    case Measure::Kind::inverse_cantor:
        j = {{"kind", "inverse_cantor"}, {"digit_depth", m.digit_depth()}};
        break;
    }
    return j.dump();
}

StepApprox approx_from_json(const std::string& text) {
    json j = json::parse(text);
    return StepApprox(reals(j, "x"), reals(j, "p"));
}

std::string approx_to_json(const StepApprox& a) {
    json j;
    j["x"] = a.x;
    j["p"] = a.p;
    j["P"] = a.cumulative();
    if (a.r) j["r"] = *a.r;
    if (a.achieved_distance) j["d_r"] = *a.achieved_distance;
    return j.dump();
}

PiecewiseFunction piecewise_from_json(const std::string& text) {
    json j = json::parse(text);
    auto dom = j.at("domain");
    double from = dom.at(0).get<double>();
    double to_end = dom.at(1).get<double>();
    std::vector<PiecewiseFunction::Piece> pieces;
    double a = from;
    for (auto& p : j.at("pieces")) {
        double b = p.at("to").get<double>();
        double slope = 0.0, icept;
        if (p.contains("value")) {
            icept = p.at("value").get<double>();
        } else {
            slope = p.at("slope").get<double>();
            icept = p.at("intercept").get<double>();
        }
        pieces.push_back({a, b, slope, icept});
        a = b;
    }
    if (pieces.empty() || pieces.back().b != to_end)
        throw std::invalid_argument("piecewise: pieces must cover the domain");
    return PiecewiseFunction(std::move(pieces));
}

std::string piecewise_to_json(const PiecewiseFunction& f) {
    json j;
    j["domain"] = {f.domain_min(), f.domain_max()};
    json ps = json::array();
    for (auto& p : f.pieces()) {
        if (p.slope == 0.0)
            ps.push_back({{"to", p.b}, {"value", p.icept}});
        else
            ps.push_back({{"to", p.b}, {"slope", p.slope}, {"intercept", p.icept}});
    }
    j["pieces"] = ps;
    return j.dump();
}

} // namespace q1d
