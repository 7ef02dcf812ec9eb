#pragma once

#include <string>
#include <variant>

#include "kstab/dim1.hpp"
#include "kstab/p2wb.hpp"
#include "kstab/serialize.hpp"
#include "kstab/toric.hpp"

namespace kstab {

// A pair descriptor file: one log Fano pair in one of the supported closed
// forms, plus free-form label/notes. Input is JSON or the TOML subset;
// output is always JSON.
struct PairDescriptor {
    std::string label;
    std::string notes;
    std::variant<P1Pair, FanPair, PlaneDivisorCase, WeightedBlowupDescriptor> pair;
};

PairDescriptor descriptor_from_json(const Json& j);
// Sniffs the format: leading '{' means JSON, otherwise the TOML subset.
PairDescriptor parse_descriptor_text(std::string_view text);
PairDescriptor load_descriptor(const std::string& path);

// Canonical JSON echo of the parsed input (used in run reports).
Json descriptor_to_json(const PairDescriptor& d);

}  // namespace kstab
