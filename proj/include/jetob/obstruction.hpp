#pragma once

// Obstructions to exact submanifolds, checked one candidate class at a time
// or over every direction of a cup kernel.

#include <optional>
#include <string>
#include <vector>

#include "jetob/deformability.hpp"

namespace jetob {

struct CupObstruction {
    Element product; // pd ^ alpha
    std::optional<int> degree{};
    bool is_zero = true; // class of the product vanishes
};

/// Both inputs must be closed.
CupObstruction cup_obstruction(const CochainComplex& complex, const Element& alpha, const Element& pd);

enum class ConclusionKind { Obstructed, PassesUpToCutoff, PassesDefinitively };

struct Conclusion {
    ConclusionKind kind = ConclusionKind::PassesDefinitively;
    int level = 0;  // first failing jet level (Obstructed only)
    int bullet = 0; // 1: alpha along pd, 2: pd along alpha, 3: cup product
};

std::string to_string(ConclusionKind kind);

struct ObstructionChecklist {
    Element alpha;
    Element pd;
    int r = 0;
    int k = 0;
    CupObstruction cup;
    bool cup_ok = true;
    /// Bullet 1, computed when k is odd.
    std::optional<DeformabilityVerdict> alpha_along_pd{};
    /// Bullet 2, computed when r is odd.
    std::optional<DeformabilityVerdict> pd_along_alpha{};
    /// Set when [alpha] = 0 or [pd] = 0 made every bullet trivial.
    bool trivial = false;
    Conclusion conclusion{};
};

struct ChecklistOptions {
    std::optional<int> alpha_degree; // required when alpha is zero
    std::optional<int> pd_degree;    // required when pd is zero
    bool geometric = false;
    LiftOptions lift;
};

ObstructionChecklist theorem_checklist(const ComplexPtr& complex, const Element& alpha, const Element& pd, int cutoff,
                                       const ChecklistOptions& options = {});

/// {[mu] in H^k : [alpha ^ mu] = 0}, canonicalized against H^k.
CohomologySubspace cup_injectivity(const ComplexPtr& complex, const Element& alpha, int k,
                                   std::optional<int> alpha_degree = std::nullopt);

struct ScanOptions {
    int height = 3;
    std::size_t max_directions = 4096;
    bool geometric = false;
    std::optional<int> alpha_degree;
};

struct ScanDirection {
    Vector kernel_coordinates; // over the kernel representatives
    Element mu;
    ObstructionChecklist checklist;
};

struct ScanReport {
    Element alpha;
    int r = 0;
    int k = 0;
    int cutoff = 0;
    int height = 0;
    CohomologySubspace kernel;
    std::vector<ScanDirection> directions{};
    /// Every projective direction of the kernel was tested.
    bool exhaustive = false;
    bool truncated = false; // the grid was cut at max_directions
    std::size_t passing = 0;
    std::optional<int> obstruction_level{}; // worst first-failing level when none pass
    std::string summary{};
    std::optional<std::string> geometric_summary{};
};

ScanReport scan(const ComplexPtr& complex, const Element& alpha, int k, int cutoff, const ScanOptions& options = {});

/// Rationals p/q in lowest terms with |p| <= height and 1 <= q <= height,
/// ascending, including 0.
std::vector<Scalar> rational_grid(int height);

} // namespace jetob
