#include <algorithm>
#include <cstddef>
#include <exception>
#include <numeric>

#include "kstab/p2wb.hpp"
#include "kstab/toric.hpp"

// The two embarrassingly parallel loops in the library: the per-valuation
// toric sweep and the per-(a,b) window sweep. Each has an OpenMP kernel and
// a serial reference producing identical results (the work items are
// independent and are written into preallocated slots, then sorted by a
// deterministic key).

namespace kstab {

namespace {

template <typename Item, typename Fn>
void map_indexed(std::vector<Item>& out, std::size_t count, bool parallel, Fn&& fn) {
    std::exception_ptr error;
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < count && !error; ++i) {
            try {
                out[i] = fn(i);
            } catch (...) {
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

std::vector<SweepEntry> toric_sweep_impl(const FanPair& fan, int radius, bool parallel) {
    const ToricModel model = make_toric_model(fan);
    const std::vector<LatticeVector> vs = primitive_vectors(model.n, radius);
    std::vector<SweepEntry> out(vs.size());
    map_indexed(out, vs.size(), parallel, [&](std::size_t i) {
        SweepEntry e;
        e.v = vs[i];
        e.A = toric_log_discrepancy(model.fan, vs[i]);
        e.report = evaluate_monomial_valuation(model, vs[i]);
        return e;
    });
    std::sort(out.begin(), out.end(), [](const SweepEntry& x, const SweepEntry& y) {
        if (x.report.betahat != y.report.betahat) return x.report.betahat < y.report.betahat;
        return x.v < y.v;
    });
    return out;
}

std::vector<WbSweepEntry> wb_sweep_impl(long long max_a, bool parallel) {
    if (max_a < 1) throw std::invalid_argument("wb_sweep: max_a must be >= 1");
    std::vector<std::pair<long long, long long>> weights;
    for (long long a = 1; a <= max_a; ++a)
        for (long long b = 1; b <= a; ++b)
            if (std::gcd(a, b) == 1) weights.emplace_back(a, b);
    std::vector<WbSweepEntry> out(weights.size());
    map_indexed(out, weights.size(), parallel, [&](std::size_t i) {
        const auto [a, b] = weights[i];
        WbSweepEntry e;
        e.a = a;
        e.b = b;
        e.summary = betahat_over_window(a, b);
        e.report_at_tau_max =
            weighted_blowup_report(WeightedBlowupDescriptor(a, b, Rational{3 * a})).report;
        return e;
    });
    // Already in (a, b) order by construction.
    return out;
}

}  // namespace

std::vector<SweepEntry> toric_sweep(const FanPair& fan, int radius) {
    return toric_sweep_impl(fan, radius, /*parallel=*/true);
}

std::vector<SweepEntry> toric_sweep_serial(const FanPair& fan, int radius) {
    return toric_sweep_impl(fan, radius, /*parallel=*/false);
}

std::vector<WbSweepEntry> wb_sweep(long long max_a) {
    return wb_sweep_impl(max_a, /*parallel=*/true);
}

std::vector<WbSweepEntry> wb_sweep_serial(long long max_a) {
    return wb_sweep_impl(max_a, /*parallel=*/false);
}

}  // namespace kstab
