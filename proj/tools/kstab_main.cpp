#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "kstab/descriptor.hpp"
#include "kstab/errors.hpp"
#include "kstab/serialize.hpp"
#include "kstab/verify.hpp"

namespace {

using kstab::Json;
using kstab::Rational;

bool logging_enabled() {
    const char* lg = std::getenv("KSTAB_LOG");
    return lg && *lg && std::string_view(lg) != "0";
}

struct OutputFlags {
    bool compact = false;
    bool with_float = false;
    std::string csv_path;
    int grid = 64;
};

// Canonical stdout: stable field order, exact rationals, newline-terminated.
// Timing and progress never go here (stderr only, opt-in via KSTAB_LOG).
void emit(const Json& j, const OutputFlags& flags) {
    std::cout << (flags.compact ? j.dump() : j.dump(2)) << "\n";
}

void export_csv(const kstab::VolumeCurve& curve, const OutputFlags& flags) {
    if (flags.csv_path.empty()) return;
    std::ofstream out(flags.csv_path);
    if (!out) throw kstab::ParseError("cannot open csv output file '" + flags.csv_path + "'");
    kstab::write_curve_csv(curve, out, flags.grid);
}

Json base_report(const std::string& command) {
    Json j;
    j["command"] = command;
    j["version"] = "0.1.0";
    return j;
}

kstab::LatticeVector parse_lattice_vector(const std::string& text) {
    kstab::LatticeVector v;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            v.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw kstab::ParseError("bad lattice vector '" + text + "' (expected e.g. \"2,1\")");
        }
    }
    if (v.empty()) throw kstab::ParseError("empty lattice vector");
    return v;
}

int run(int argc, char** argv) {
    CLI::App app{"kstab — exact K-stability invariants of low-dimensional log Fano pairs"};
    app.set_version_flag("--version", "kstab 0.1.0");
    app.require_subcommand(1);

    OutputFlags flags;
    app.add_flag("--json", flags.compact, "compact single-line JSON (default is pretty-printed)");
    app.add_flag("--float", flags.with_float, "add float approximations next to exact rationals");
    app.add_option("--csv", flags.csv_path, "export the volume curve as CSV to this path");
    app.add_option("--grid", flags.grid, "CSV grid cells")->capture_default_str();

    // p1 eval <file>
    auto* p1 = app.add_subcommand("p1", "pairs on the projective line");
    p1->require_subcommand(1);
    p1->fallthrough();
    auto* p1_eval = p1->add_subcommand("eval", "stability verdict and per-valuation reports");
    p1_eval->fallthrough();
    std::string p1_file;
    p1_eval->add_option("file", p1_file, "pair descriptor (JSON or TOML)")->required();

    // toric eval|sweep <file>
    auto* toric = app.add_subcommand("toric", "toric pairs with monomial valuations");
    toric->require_subcommand(1);
    toric->fallthrough();
    auto* toric_eval = toric->add_subcommand("eval", "report for one monomial valuation");
    toric_eval->fallthrough();
    std::string toric_file;
    std::string v_text;
    toric_eval->add_option("file", toric_file, "fan descriptor (JSON or TOML)")->required();
    toric_eval->add_option("--v", v_text, "lattice vector, e.g. \"2,1\"")->required();
    auto* toric_sweep_cmd = toric->add_subcommand("sweep", "reports for all primitive v in a box");
    toric_sweep_cmd->fallthrough();
    std::string toric_sweep_file;
    int radius = 3;
    bool serial = false;
    toric_sweep_cmd->add_option("file", toric_sweep_file, "fan descriptor (JSON or TOML)")->required();
    toric_sweep_cmd->add_option("--radius", radius, "box radius")->capture_default_str();
    toric_sweep_cmd->add_flag("--serial", serial, "use the serial reference kernel");

    // p2wb eval|sweep
    auto* p2wb = app.add_subcommand("p2wb", "weighted blowups of the projective plane");
    p2wb->require_subcommand(1);
    p2wb->fallthrough();
    auto* p2wb_eval = p2wb->add_subcommand("eval", "closed-form report for one case");
    p2wb_eval->fallthrough();
    std::string p2wb_file;
    long long wa = 0, wb = 0;
    std::string tau_text;
    p2wb_eval->add_option("file", p2wb_file, "descriptor (JSON or TOML)");
    p2wb_eval->add_option("--a", wa, "weight a");
    p2wb_eval->add_option("--b", wb, "weight b");
    p2wb_eval->add_option("--tau", tau_text, "pseudo-effective threshold (rational)");
    auto* p2wb_sweep_cmd = p2wb->add_subcommand("sweep", "window summaries over coprime weights");
    p2wb_sweep_cmd->fallthrough();
    long long max_a = 10;
    p2wb_sweep_cmd->add_option("--max-a", max_a, "largest weight a")->capture_default_str();
    p2wb_sweep_cmd->add_flag("--serial", serial, "use the serial reference kernel");

    // convert
    auto* convert = app.add_subcommand("convert", "threshold scale conversions");
    convert->fallthrough();
    std::string delta_text, epsilon_text;
    int n_dim = 2;
    convert->add_option("--delta", delta_text, "delta in (0,1)");
    convert->add_option("--epsilon", epsilon_text, "epsilon in (0,1)");
    convert->add_option("--n", n_dim, "dimension")->capture_default_str();

    // verify <suite>
    auto* verify = app.add_subcommand("verify", "property-verification suites");
    verify->fallthrough();
    std::string suite;
    std::uint64_t seed = 7;
    int samples = 60;
    long long verify_max_a = 10;
    long long k_level = 30;
    verify->add_option("suite", suite, "inequalities | toric-vs-p2wb | lattice-limit")->required();
    verify->add_option("--seed", seed, "RNG seed for generated fixtures")->capture_default_str();
    verify->add_option("--samples", samples, "number of random p1 pairs")->capture_default_str();
    verify->add_option("--max-a", verify_max_a, "largest weight a")->capture_default_str();
    verify->add_option("--k", k_level, "lattice refinement level")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // input error
    }

    const auto started = std::chrono::steady_clock::now();
    int exit_code = 0;

    if (*p1_eval) {
        const kstab::PairDescriptor desc = kstab::load_descriptor(p1_file);
        const auto* pair = std::get_if<kstab::P1Pair>(&desc.pair);
        if (!pair) throw std::invalid_argument("p1 eval: descriptor is not a p1 pair");
        const kstab::P1Verdict verdict = kstab::p1_verdict(*pair);
        Json j = base_report("p1 eval");
        j["input"] = kstab::descriptor_to_json(desc);
        j["verdict"] = kstab::verdict_to_json(verdict, flags.with_float);
        j["curve"] = kstab::curve_to_json(kstab::p1_volume_curve(*pair, kstab::P1Valuation::generic()));
        emit(j, flags);
        export_csv(kstab::p1_volume_curve(*pair, kstab::P1Valuation::generic()), flags);
    } else if (*toric_eval) {
        const kstab::PairDescriptor desc = kstab::load_descriptor(toric_file);
        const auto* fan = std::get_if<kstab::FanPair>(&desc.pair);
        if (!fan) throw std::invalid_argument("toric eval: descriptor is not a toric pair");
        const kstab::LatticeVector v = parse_lattice_vector(v_text);
        const kstab::ToricModel model = kstab::make_toric_model(*fan);
        const kstab::VolumeCurve curve = kstab::toric_volume_curve(model.polytope, v);
        const kstab::InvariantReport report =
            kstab::make_report(model.n, model.Ln, kstab::toric_log_discrepancy(*fan, v), curve);
        Json j = base_report("toric eval");
        j["input"] = kstab::descriptor_to_json(desc);
        j["v"] = v;
        j["beta_barycenter_route"] = kstab::to_string(kstab::toric_beta(model, v));
        j["report"] = kstab::report_to_json(report, flags.with_float);
        j["curve"] = kstab::curve_to_json(curve);
        emit(j, flags);
        export_csv(curve, flags);
    } else if (*toric_sweep_cmd) {
        const kstab::PairDescriptor desc = kstab::load_descriptor(toric_sweep_file);
        const auto* fan = std::get_if<kstab::FanPair>(&desc.pair);
        if (!fan) throw std::invalid_argument("toric sweep: descriptor is not a toric pair");
        const auto entries =
            serial ? kstab::toric_sweep_serial(*fan, radius) : kstab::toric_sweep(*fan, radius);
        Json j = base_report("toric sweep");
        j["input"] = kstab::descriptor_to_json(desc);
        j["radius"] = radius;
        j["count"] = entries.size();
        j["min_betahat"] = kstab::to_string(entries.front().report.betahat);
        j["argmin_v"] = entries.front().v;
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(kstab::sweep_entry_to_json(e, flags.with_float));
        j["entries"] = arr;
        emit(j, flags);
    } else if (*p2wb_eval) {
        const kstab::PairDescriptor desc = [&]() -> kstab::PairDescriptor {
            if (!p2wb_file.empty()) return kstab::load_descriptor(p2wb_file);
            if (wa == 0 || wb == 0)
                throw std::invalid_argument("p2wb eval: provide a descriptor file or --a and --b");
            std::optional<Rational> tau;
            if (!tau_text.empty()) tau = kstab::parse_rational(tau_text);
            return {"", "", kstab::WeightedBlowupDescriptor(wa, wb, tau)};
        }();
        Json j = base_report("p2wb eval");
        j["input"] = kstab::descriptor_to_json(desc);
        if (const auto* plane = std::get_if<kstab::PlaneDivisorCase>(&desc.pair)) {
            const kstab::VolumeCurve curve = kstab::plane_divisor_curve(*plane);
            j["report"] = kstab::report_to_json(kstab::plane_divisor_report(*plane), flags.with_float);
            j["curve"] = kstab::curve_to_json(curve);
            emit(j, flags);
            export_csv(curve, flags);
        } else if (const auto* wbd = std::get_if<kstab::WeightedBlowupDescriptor>(&desc.pair)) {
            if (wbd->tau) {
                const kstab::WeightedBlowupResult res = kstab::weighted_blowup_report(*wbd);
                j["epsilon"] = kstab::to_string(res.epsilon);
                j["report"] = kstab::report_to_json(res.report, flags.with_float);
                j["curve"] = kstab::curve_to_json(res.curve);
                emit(j, flags);
                export_csv(res.curve, flags);
            } else {
                if (!flags.csv_path.empty())
                    throw std::invalid_argument(
                        "p2wb eval: --csv needs a specific curve; provide --tau");
                j["window"] = kstab::window_summary_to_json(
                    kstab::betahat_over_window(wbd->a, wbd->b), flags.with_float);
                emit(j, flags);
            }
        } else {
            throw std::invalid_argument("p2wb eval: descriptor is not a p2wb case");
        }
    } else if (*p2wb_sweep_cmd) {
        const auto entries = serial ? kstab::wb_sweep_serial(max_a) : kstab::wb_sweep(max_a);
        Json j = base_report("p2wb sweep");
        j["max_a"] = max_a;
        j["count"] = entries.size();
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(kstab::wb_entry_to_json(e, flags.with_float));
        j["entries"] = arr;
        emit(j, flags);
    } else if (*convert) {
        if (delta_text.empty() == epsilon_text.empty())
            throw std::invalid_argument("convert: provide exactly one of --delta, --epsilon");
        const kstab::ThresholdParams params =
            delta_text.empty()
                ? kstab::thresholds_from_epsilon(kstab::parse_rational(epsilon_text), n_dim)
                : kstab::thresholds_from_delta(kstab::parse_rational(delta_text), n_dim);
        Json j = base_report("convert");
        j["params"] = kstab::threshold_params_to_json(params, flags.with_float);
        emit(j, flags);
    } else if (*verify) {
        kstab::SuiteResult result;
        if (suite == "inequalities")
            result = kstab::verify_inequalities(seed, samples);
        else if (suite == "toric-vs-p2wb")
            result = kstab::verify_toric_vs_p2wb(verify_max_a);
        else if (suite == "lattice-limit")
            result = kstab::verify_lattice_limit(k_level);
        else
            throw std::invalid_argument("verify: unknown suite '" + suite + "'");
        Json j = base_report("verify");
        j["suite"] = result.name;
        j["pass"] = result.pass();
        j["cases"] = result.cases;
        j["curves"] = result.curves;
        j["failures"] = result.failures;
        emit(j, flags);
        exit_code = result.pass() ? 0 : 1;
    }

    if (logging_enabled()) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cerr << "kstab: done in " << elapsed << " ms\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kstab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
