#pragma once

// Human-readable tables and JSON documents for every computation the CLI
// exposes. JSON keys are emitted in a fixed order.

#include <optional>
#include <string>

#include "json.hpp"

#include "jetob/obstruction.hpp"

namespace jetob {

using Json = nlohmann::ordered_json;

Json model_json(const DgaModel& model);
Json subspace_json(const CohomologySubspace& s);

Json cohomology_json(const CochainComplex& complex, std::optional<int> degree);
std::string cohomology_human(const CochainComplex& complex, std::optional<int> degree);

struct VSpaceResult {
    Element eta;
    int k = 0;
    int degree = 0;
    int level = 0;          // kInfiniteLevel for L = infinity
    int resolved_level = 0; // level actually computed
    CohomologySubspace v;
    std::size_t ambient_dimension = 0;
};

Json vspace_json(const VSpaceResult& r);
std::string vspace_human(const VSpaceResult& r);

/// Verdict kind as a string, e.g. MAX_LEVEL.
std::string verdict_result(const DeformabilityVerdict& v);
Json verdict_json(const DeformabilityVerdict& v, bool witness);
std::string verdict_human(const DeformabilityVerdict& v, bool witness);

Json checklist_json(const ObstructionChecklist& c, bool witness);
std::string checklist_human(const ObstructionChecklist& c, bool witness);

Json scan_json(const ScanReport& s);
std::string scan_human(const ScanReport& s);

} // namespace jetob
