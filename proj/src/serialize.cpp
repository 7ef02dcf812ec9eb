#include "kstab/serialize.hpp"

#include <iomanip>
#include <ostream>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& arr) {
    if (!arr.is_array()) throw ParseError("curve json: expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : arr) {
        if (!x.is_string()) throw ParseError("curve json: rationals must be strings");
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

}  // namespace

Json curve_to_json(const VolumeCurve& curve) {
    Json j;
    j["dimension"] = curve.dimension();
    j["total_volume"] = to_string(curve.total_volume());
    j["tau"] = to_string(curve.tau());
    j["breakpoints"] = rationals_to_json(curve.body().breakpoints());
    Json pieces = Json::array();
    for (const auto& p : curve.body().pieces()) pieces.push_back(rationals_to_json(p.coefficients()));
    j["pieces"] = pieces;
    return j;
}

VolumeCurve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("total_volume") ||
        !j.contains("breakpoints") || !j.contains("pieces"))
        throw ParseError("curve json: need dimension, total_volume, breakpoints, pieces");
    if (!j["dimension"].is_number_integer()) throw ParseError("curve json: dimension must be an integer");
    const int n = j["dimension"].get<int>();
    const Rational total = parse_rational(j["total_volume"].get<std::string>());
    std::vector<Rational> breaks = rationals_from_json(j["breakpoints"]);
    std::vector<Polynomial> pieces;
    if (!j["pieces"].is_array()) throw ParseError("curve json: pieces must be an array");
    for (const auto& p : j["pieces"]) pieces.emplace_back(rationals_from_json(p));
    // The VolumeCurve constructor re-validates every invariant, so a
    // tampered file cannot smuggle in an invalid curve.
    return VolumeCurve(PiecewisePolynomial(std::move(breaks), std::move(pieces)), n, total);
}

Json report_to_json(const InvariantReport& r, bool with_float) {
    Json j;
    j["n"] = r.n;
    j["Ln"] = to_string(r.Ln);
    j["A"] = to_string(r.A);
    j["tau"] = to_string(r.tau);
    j["S"] = to_string(r.S);
    j["beta"] = to_string(r.beta);
    j["betahat"] = to_string(r.betahat);
    j["j"] = to_string(r.j);
    if (with_float) {
        Json f;
        f["Ln"] = to_double(r.Ln);
        f["A"] = to_double(r.A);
        f["tau"] = to_double(r.tau);
        f["S"] = to_double(r.S);
        f["beta"] = to_double(r.beta);
        f["betahat"] = to_double(r.betahat);
        f["j"] = to_double(r.j);
        j["approx"] = f;
    }
    return j;
}

Json verdict_to_json(const P1Verdict& verdict, bool with_float) {
    Json j;
    switch (verdict.kind) {
        case P1Verdict::Kind::UniformlyKStable: j["kind"] = "uniformly-k-stable"; break;
        case P1Verdict::Kind::KSemistableOnly: j["kind"] = "k-semistable-only"; break;
        case P1Verdict::Kind::Unstable: j["kind"] = "unstable"; break;
    }
    j["epsilon_star"] = to_string(verdict.epsilon_star);
    if (with_float) j["epsilon_star_approx"] = to_double(verdict.epsilon_star);
    if (verdict.witness) j["witness"] = verdict.witness->str();
    Json vals = Json::array();
    for (const auto& [v, r] : verdict.reports) {
        Json entry;
        entry["at"] = v.str();
        entry["report"] = report_to_json(r, with_float);
        vals.push_back(entry);
    }
    j["valuations"] = vals;
    return j;
}

Json threshold_params_to_json(const ThresholdParams& p, bool with_float) {
    Json j;
    j["n"] = p.n;
    j["delta"] = to_string(p.delta);
    j["delta_prime"] = to_string(p.delta_prime);
    j["epsilon"] = to_string(p.epsilon);
    j["epsilon_prime"] = to_string(p.epsilon_prime);
    if (p.theta) j["theta"] = to_string(*p.theta);
    if (with_float) {
        Json f;
        f["delta"] = to_double(p.delta);
        f["delta_prime"] = to_double(p.delta_prime);
        f["epsilon"] = to_double(p.epsilon);
        f["epsilon_prime"] = to_double(p.epsilon_prime);
        if (p.theta) f["theta"] = to_double(*p.theta);
        j["approx"] = f;
    }
    return j;
}

Json sweep_entry_to_json(const SweepEntry& e, bool with_float) {
    Json j;
    j["v"] = e.v;
    j["A"] = to_string(e.A);
    j["report"] = report_to_json(e.report, with_float);
    return j;
}

Json window_summary_to_json(const WindowSummary& s, bool with_float) {
    Json j;
    j["a"] = s.a;
    j["b"] = s.b;
    j["min_betahat"] = to_string(s.min_betahat);
    j["tau_at_min"] = to_string(s.tau_at_min);
    j["epsilon_at_min"] = to_string(s.epsilon_at_min);
    j["nonnegative"] = s.nonnegative;
    j["tau_lo_bracket"] = Json::array({to_string(s.tau_lo_bracket.first), to_string(s.tau_lo_bracket.second)});
    j["betahat_at_lo_bracket"] =
        Json::array({to_string(s.betahat_at_lo_bracket.first), to_string(s.betahat_at_lo_bracket.second)});
    if (with_float) {
        Json f;
        f["min_betahat"] = to_double(s.min_betahat);
        f["tau_at_min"] = to_double(s.tau_at_min);
        f["tau_lo"] = to_double((s.tau_lo_bracket.first + s.tau_lo_bracket.second) / 2);
        f["betahat_at_lo"] =
            to_double((s.betahat_at_lo_bracket.first + s.betahat_at_lo_bracket.second) / 2);
        j["approx"] = f;
    }
    return j;
}

Json wb_entry_to_json(const WbSweepEntry& e, bool with_float) {
    Json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["window"] = window_summary_to_json(e.summary, with_float);
    j["report_at_tau_max"] = report_to_json(e.report_at_tau_max, with_float);
    return j;
}

void write_curve_csv(const VolumeCurve& curve, std::ostream& out, int grid_cells) {
    if (grid_cells < 1) throw std::invalid_argument("write_curve_csv: need at least one cell");
    out << "x,vol\n";
    for (int i = 0; i <= grid_cells; ++i) {
        const Rational x = curve.tau() * Rational(i, grid_cells);
        out << std::setprecision(17) << to_double(x) << ',' << to_double(curve(x)) << '\n';
    }
}

}  // namespace kstab
