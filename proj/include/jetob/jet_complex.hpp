#pragma once

// Truncated formal twisted complexes D^L_eta = (Omega^* (x) R[t]/(t^{L+1}), d_{t eta})
// with |t| = 1 - k, and the maps between them.

#include <memory>
#include <vector>

#include "jetob/cohomology.hpp"

namespace jetob {

/// Marker for L = infinity; accepted only where a finite reduction exists.
inline constexpr int kInfiniteLevel = -1;

class JetContext;
using ContextPtr = std::shared_ptr<const JetContext>;

class JetContext {
public:
    /// `eta` must be closed and zero or homogeneous of degree k >= 1. For
    /// even k the level is capped at 1 (t^2 = 0 in that parity).
    static ContextPtr create(ComplexPtr complex, Element eta, int k, int level);

    const ComplexPtr& complex() const { return complex_; }
    const ModelPtr& model() const { return complex_->model(); }
    const Element& eta() const { return eta_; }
    int k() const { return k_; }
    int t_degree() const { return 1 - k_; }
    bool infinite() const { return level_ == kInfiniteLevel; }
    int level() const { return level_; }
    /// Throws Error(Range) when the level is infinite.
    int finite_level() const;

    ContextPtr with_level(int level) const;
    ContextPtr with_eta(Element eta) const;

    /// Degree of the t^j coefficient of an element of total degree r.
    int coefficient_degree(int r, int j) const { return r + j * (k_ - 1); }

    friend bool operator==(const JetContext& a, const JetContext& b);

private:
    JetContext(ComplexPtr complex, Element eta, int k, int level)
        : complex_(std::move(complex)), eta_(std::move(eta)), k_(k), level_(level) {}

    ComplexPtr complex_;
    Element eta_;
    int k_;
    int level_;
};

/// sum_j omega_j t^j of total degree r, with |omega_j| = r + j(k-1).
class JetElement {
public:
    /// Pads with zeros to L+1 coefficients; throws Range when nonzero
    /// coefficients lie above t^L and Degree on a misplaced coefficient.
    JetElement(ContextPtr context, int degree, std::vector<Element> coefficients);

    static JetElement zero(ContextPtr context, int degree);
    /// omega as a constant jet.
    static JetElement constant(ContextPtr context, const Element& omega, int degree);

    const ContextPtr& context() const { return context_; }
    int degree() const { return degree_; }
    int level() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Element>& coefficients() const { return coefficients_; }
    const Element& coefficient(int j) const { return coefficients_.at(static_cast<std::size_t>(j)); }
    bool is_zero() const;

    JetElement& operator+=(const JetElement& other);
    JetElement& operator-=(const JetElement& other);
    JetElement& operator*=(const Scalar& c);
    friend JetElement operator+(JetElement a, const JetElement& b) { return a += b; }
    friend JetElement operator-(JetElement a, const JetElement& b) { return a -= b; }
    friend JetElement operator*(const Scalar& c, JetElement a) { return a *= c; }

    friend bool operator==(const JetElement& a, const JetElement& b);

private:
    void require_compatible(const JetElement& other) const;

    ContextPtr context_;
    int degree_;
    std::vector<Element> coefficients_;
};

/// (d_{t eta} x)_j = d(omega_j) - eta ^ omega_{j-1}, truncated at t^{L+1}.
/// Throws UnsupportedParity for even k.
JetElement jet_differential(const JetElement& x);

/// d omega_0 = 0 and d omega_{l+1} = eta ^ omega_l for 0 <= l < L; any parity of k.
bool is_closed_jet(const JetElement& x);

JetElement truncate(const JetElement& x, int level);

/// Multiplication by e^{tg}; lands in D^L_{eta + dg}. |g| must be k - 1.
JetElement gauge_change(const JetElement& x, const Element& g);

/// The cochain isomorphism D^L_eta -> D^L_{c eta}: t^j coefficient times c^j.
JetElement scale_change(const JetElement& x, const Scalar& c);

/// omega * t^L, the inclusion of the shifted de Rham complex at the top level.
JetElement psi(const ContextPtr& context, const Element& omega, int degree);

/// Monomial basis of D^L_eta in one total degree: blocks (j, monomial) with j
/// ascending, so the t^0 block is a prefix.
class JetBasis {
public:
    JetBasis(const JetContext& context, int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return size_; }
    std::size_t block_offset(int j) const { return offsets_.at(static_cast<std::size_t>(j)); }
    const DegreeBasis& block(int j) const { return *blocks_.at(static_cast<std::size_t>(j)); }
    int blocks() const { return static_cast<int>(blocks_.size()); }

    Vector coordinates(const JetElement& x) const;
    JetElement element(const ContextPtr& context, std::span<const Scalar> coords) const;

private:
    int degree_;
    std::size_t size_ = 0;
    std::vector<std::shared_ptr<const DegreeBasis>> blocks_;
    std::vector<std::size_t> offsets_;
};

/// Matrix of d_{t eta} from total degree r to r + 1.
RationalMatrix jet_differential_matrix(const JetContext& context, int degree);

/// Some beta with d_{t eta} beta = x, solved on the assembled complex
/// (free variables zero). Throws NoPrimitive when x is not exact.
JetElement find_jet_primitive(const JetElement& x);

/// Constructive surjectivity on exact elements: for exact x in D^{L1}, an
/// exact element of D^{L2} (L2 >= L1) truncating to x.
JetElement lift_exact(const JetElement& x, int level);

struct DirectJetCohomology {
    std::size_t dimension = 0;
    std::vector<JetElement> representatives;
    /// tau^{L,0} of H^r(D^L_eta), canonicalized against H^r.
    CohomologySubspace v;
};

/// H^r(D^L_eta) computed as one finite complex (total degrees r-1, r, r+1).
DirectJetCohomology jet_cohomology_direct(const ContextPtr& context, int degree);

} // namespace jetob
