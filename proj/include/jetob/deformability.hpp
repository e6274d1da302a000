#pragma once

// Inductive computation of H^r(D^L_eta) spanning sets and of the jet
// deformability subspaces V^{L,r}_[eta] = tau^{L,0}(H^r(D^L_eta)) of H^r.

#include <optional>
#include <random>
#include <vector>

#include "jetob/jet_complex.hpp"

namespace jetob {

/// Default cutoff when no degree bound applies (k = 1).
inline constexpr int kDefaultCutoff = 8;

struct SpanningSet {
    ContextPtr context; // level L
    int degree = 0;
    std::vector<JetElement> elements;

    int level() const { return context->finite_level(); }
};

/// Controls how primitives are chosen while lifting. Randomized choices must
/// not change any computed subspace; the mode exists to test that.
struct LiftOptions {
    std::mt19937_64* randomize = nullptr;
};

SpanningSet initial_spanning_set(const ContextPtr& context, int degree);

/// One induction step L -> L+1: kernel of c -> [eta ^ sum c_l v_{L,l}],
/// lifts of the kernel combinations, and psi images of an H basis.
SpanningSet extend_spanning_set(const SpanningSet& s, const LiftOptions& options = {});

/// tau^{L,0} of a spanning set, canonicalized against H^r.
CohomologySubspace level_zero_span(const SpanningSet& s);

/// V^{L,r}_[eta]. Infinite levels are accepted for k > 1 (reduced to the
/// stabilization bound). For even k only L <= 1 exists.
CohomologySubspace v_space(const ContextPtr& context, int degree, const LiftOptions& options = {});

/// V^{0..L,r} for every level up to the context's, sharing one induction.
std::vector<CohomologySubspace> v_space_levels(const ContextPtr& context, int degree,
                                               const LiftOptions& options = {});

/// L0 = ceil((N - r)/(k - 1)) - 1 for odd k > 1; nullopt for k = 1.
/// Throws UnsupportedParity for even k.
std::optional<int> stabilization_bound(int top_degree, int degree, int k);

struct DeformabilityVerdict {
    Element alpha;
    Element mu;
    int degree = 0; // r = |alpha|
    int k = 0;      // |mu|
    /// nullopt means AT_LEAST_CUTOFF.
    std::optional<int> max_level{};
    int cutoff = 0;        // effective cutoff (raised to L0 when k > 1)
    int requested_cutoff = 0;
    bool stabilized = false;
    /// Witness coefficients omega_0..omega_L for L = 0..(max level reached).
    std::vector<std::vector<Element>> witnesses{};
    /// Level at which non-membership was certified (max_level + 1).
    std::optional<int> certified_missing_level{};
    /// Longest run of consecutive equal V^L at the end of the computed range
    /// (heuristic only; meaningful for k = 1).
    int stable_streak = 0;
    /// Set when the rational top-degree shortcut upgraded the verdict.
    bool infinite_by_shortcut = false;
};

struct MaxJetOptions {
    /// Degrees for zero inputs, whose degree cannot be read off.
    std::optional<int> alpha_degree{};
    std::optional<int> mu_degree{};
    bool geometric = false;
    LiftOptions lift;
};

/// Largest L <= cutoff with [alpha] in V^{L,r}_[mu], with witnesses.
DeformabilityVerdict max_jet(const ComplexPtr& complex, const Element& alpha, const Element& mu, int cutoff,
                             const MaxJetOptions& options = {});

enum class ShortcutResult { Applied, NotApplicable };

/// 1-jet => infinity-jet for k = 1 and |alpha| = N - 1 on a closed oriented
/// manifold (all classes here are rational). Gated on `geometric`.
ShortcutResult rational_top_shortcut(const ComplexPtr& complex, const Element& alpha, const Element& mu,
                                     bool geometric);

/// A witness omega_0 = alpha, ..., omega_L for [alpha] in V^{L,r}, built from a
/// spanning set; nullopt when [alpha] is not in V.
std::optional<JetElement> extract_witness(const SpanningSet& s, const Element& alpha);

} // namespace jetob
