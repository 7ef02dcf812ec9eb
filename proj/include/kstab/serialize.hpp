#pragma once

#include <json.hpp>

#include <iosfwd>

#include "kstab/dim1.hpp"
#include "kstab/invariants.hpp"
#include "kstab/p2wb.hpp"
#include "kstab/toric.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// All JSON the library emits is ordered (insertion order), so identical
// inputs serialize byte-identically. Rationals travel as canonical "p/q"
// strings; --float adds an "approx" object of doubles next to them.
using Json = nlohmann::ordered_json;

Json curve_to_json(const VolumeCurve& curve);
VolumeCurve curve_from_json(const Json& j);

Json report_to_json(const InvariantReport& r, bool with_float = false);
Json verdict_to_json(const P1Verdict& verdict, bool with_float = false);
Json threshold_params_to_json(const ThresholdParams& p, bool with_float = false);
Json sweep_entry_to_json(const SweepEntry& e, bool with_float = false);
Json window_summary_to_json(const WindowSummary& s, bool with_float = false);
Json wb_entry_to_json(const WbSweepEntry& e, bool with_float = false);

// "x,vol" rows on the uniform grid x_i = i * tau / grid_cells, i = 0..grid_cells.
void write_curve_csv(const VolumeCurve& curve, std::ostream& out, int grid_cells);

}  // namespace kstab
