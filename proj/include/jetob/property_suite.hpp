#pragma once

// Randomized checks of the algebraic identities every module relies on.
// Trials run in parallel with per-trial seeds; results are merged in trial
// order so a report depends only on (model, seed, trials).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jetob/jet_complex.hpp"

namespace jetob {

/// The operations under test. Tests swap in faulty versions to make sure the
/// suite notices.
struct PropertyKernels {
    std::function<Element(const Element&, const Element&)> wedge = &jetob::wedge;
    std::function<Element(const Element&)> differential = &jetob::differential;
    std::function<JetElement(const JetElement&)> jet_differential = &jetob::jet_differential;
    std::function<JetElement(const JetElement&, int)> truncate = &jetob::truncate;
    std::function<JetElement(const JetElement&, const Element&)> gauge_change = &jetob::gauge_change;
    std::function<JetElement(const JetElement&, const Scalar&)> scale_change = &jetob::scale_change;
};

struct PropertyOutcome {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// The first failure in trial order.
    std::optional<std::string> first_failure;
};

struct PropertyReport {
    std::string model;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<PropertyOutcome> properties;

    bool ok() const;
    std::size_t failures() const;
    const PropertyOutcome* find(const std::string& name) const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultTrials = 200;

/// Names of every property, in report order.
const std::vector<std::string>& property_names();

PropertyReport run_property_suite(const ComplexPtr& complex, std::uint64_t seed = kDefaultSeed,
                                  int trials = kDefaultTrials, const PropertyKernels& kernels = {});

} // namespace jetob
