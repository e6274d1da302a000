#include "jetob/deformability.hpp"

#include "jetob/expression.hpp"

namespace jetob {

SpanningSet initial_spanning_set(const ContextPtr& context, int degree) {
    SpanningSet s{context->with_level(0), degree, {}};
    for (const auto& rep : context->complex()->cohomology(degree).representatives())
        s.elements.push_back(JetElement::constant(s.context, rep, degree));
    return s;
}

SpanningSet extend_spanning_set(const SpanningSet& s, const LiftOptions& options) {
    const JetContext& ctx = *s.context;
    const CochainComplex& complex = *ctx.complex();
    const int level = s.level();
    const int r = s.degree;
    SpanningSet next{ctx.with_level(level + 1), r, {}};

    // Classes [eta ^ v_{L,l}] in H^q; their linear relations are exactly the
    // combinations that lift one level up.
    const int q = ctx.coefficient_degree(r, level) + ctx.k();
    const CohomologySubspace& hq = complex.cohomology(q);
    std::vector<Element> products;
    RationalMatrix classes(hq.dimension(), s.elements.size());
    for (std::size_t l = 0; l < s.elements.size(); ++l) {
        products.push_back(wedge(ctx.eta(), s.elements[l].coefficient(level)));
        const auto c = hq.coordinates(products.back());
        if (!c)
            fail(ErrorKind::Internal, "cohomology basis does not span a closed product");
        for (std::size_t i = 0; i < c->size(); ++i)
            classes(i, l) = (*c)[i];
    }

    for (const auto& combo : nullspace_basis(reduce(std::move(classes)))) {
        std::vector<Element> w(static_cast<std::size_t>(level) + 2, Element::zero(ctx.model()));
        Element top = Element::zero(ctx.model());
        for (std::size_t l = 0; l < combo.size(); ++l) {
            if (is_zero(combo[l]))
                continue;
            for (int j = 0; j <= level; ++j)
                w[j] += combo[l] * s.elements[l].coefficient(j);
            top += combo[l] * products[l];
        }
        w.back() = find_primitive_in_degree(complex, top, q, options.randomize);
        next.elements.emplace_back(next.context, r, std::move(w));
    }

    for (const auto& b : complex.cohomology(ctx.coefficient_degree(r, level + 1)).representatives())
        next.elements.push_back(psi(next.context, b, r));

    for (const auto& v : next.elements)
        if (!is_closed_jet(v))
            fail(ErrorKind::Internal, "lifted spanning element fails the closedness equations");
    return next;
}

CohomologySubspace level_zero_span(const SpanningSet& s) {
    const CohomologySubspace& h = s.context->complex()->cohomology(s.degree);
    std::vector<Element> level_zero;
    for (const auto& v : s.elements)
        level_zero.push_back(v.coefficient(0));
    return CohomologySubspace(h.basis(), h.relations(), level_zero).canonicalized(h);
}

std::optional<int> stabilization_bound(int top_degree, int degree, int k) {
    if (k % 2 == 0)
        fail(ErrorKind::UnsupportedParity, "stabilization bound is defined for odd k only");
    if (k == 1)
        return std::nullopt;
    const int num = top_degree - degree;
    const int den = k - 1;
    const int ceil = num / den + ((num % den != 0 && num > 0) ? 1 : 0);
    return std::max(ceil - 1, 0);
}

namespace {

int resolve_level(const JetContext& ctx, int degree) {
    if (!ctx.infinite())
        return ctx.level();
    const auto bound = stabilization_bound(ctx.complex()->top_degree(), degree, ctx.k());
    if (!bound)
        fail(ErrorKind::Range, "L = infinity has no finite reduction for k = 1; pass a finite cutoff");
    return *bound;
}

} // namespace

std::vector<CohomologySubspace> v_space_levels(const ContextPtr& context, int degree, const LiftOptions& options) {
    const int level = resolve_level(*context, degree);
    std::vector<CohomologySubspace> out;
    SpanningSet s = initial_spanning_set(context, degree);
    out.push_back(level_zero_span(s));
    for (int L = 1; L <= level; ++L) {
        s = extend_spanning_set(s, options);
        out.push_back(level_zero_span(s));
    }
    return out;
}

CohomologySubspace v_space(const ContextPtr& context, int degree, const LiftOptions& options) {
    return v_space_levels(context, degree, options).back();
}

std::optional<JetElement> extract_witness(const SpanningSet& s, const Element& alpha) {
    const JetContext& ctx = *s.context;
    const CochainComplex& complex = *ctx.complex();
    const CohomologySubspace& h = complex.cohomology(s.degree);
    std::vector<Element> level_zero;
    for (const auto& v : s.elements)
        level_zero.push_back(v.coefficient(0));
    std::vector<std::size_t> chosen;
    const CohomologySubspace span(h.basis(), h.relations(), level_zero, &chosen);
    const auto coords = span.coordinates(alpha);
    if (!coords)
        return std::nullopt;

    JetElement w = JetElement::zero(s.context, s.degree);
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (!is_zero((*coords)[i]))
            w += (*coords)[i] * s.elements[chosen[i]];

    // alpha - w_0 is exact; correct by the jet differential of a constant
    // primitive so that the t^0 coefficient is alpha on the nose.
    const Element beta = find_primitive_in_degree(complex, alpha - w.coefficient(0), s.degree);
    std::vector<Element> correction(w.coefficients().size(), Element::zero(ctx.model()));
    correction[0] = differential(beta);
    if (correction.size() > 1) {
        correction[1] = wedge(ctx.eta(), beta);
        if (ctx.k() % 2 != 0)
            correction[1] = -correction[1];
    }
    w += JetElement(s.context, s.degree, std::move(correction));
    if (!is_closed_jet(w) || !(w.coefficient(0) == alpha))
        fail(ErrorKind::Internal, "witness extraction produced an invalid jet");
    return w;
}

namespace {

int read_degree(const Element& e, std::optional<int> hint, const char* what, int fallback_for_zero) {
    if (!e.is_homogeneous())
        fail(ErrorKind::Degree, std::string(what) + " " + format_element(e) + " is not homogeneous");
    if (const auto d = e.degree()) {
        if (hint && *hint != *d)
            fail(ErrorKind::Degree, std::string(what) + " has degree " + std::to_string(*d) + ", not " +
                                        std::to_string(*hint));
        return *d;
    }
    if (hint)
        return *hint;
    if (fallback_for_zero < 0)
        fail(ErrorKind::Degree, std::string(what) + " is zero; its degree must be given explicitly");
    return fallback_for_zero;
}

} // namespace

DeformabilityVerdict max_jet(const ComplexPtr& complex, const Element& alpha, const Element& mu, int cutoff,
                             const MaxJetOptions& options) {
    if (alpha.model() != complex->model() || mu.model() != complex->model())
        fail(ErrorKind::ModelMismatch, "inputs belong to a different model");
    if (cutoff < 0)
        fail(ErrorKind::Range, "cutoff must be non-negative");
    DeformabilityVerdict v{.alpha = alpha, .mu = mu};
    v.degree = read_degree(alpha, options.alpha_degree, "alpha", -1);
    v.k = read_degree(mu, options.mu_degree, "mu", 1);
    require_closed(alpha, "alpha");
    require_closed(mu, "mu");
    v.requested_cutoff = cutoff;

    int effective = cutoff;
    if (v.k % 2 == 0) {
        // t^2 = 0: level 1 already is the full formal complex.
        effective = std::min(cutoff, 1);
        v.stabilized = effective == 1;
    } else if (const auto bound = stabilization_bound(complex->top_degree(), v.degree, v.k)) {
        effective = std::max(cutoff, *bound);
        v.stabilized = true;
    }
    v.cutoff = effective;

    const auto context = JetContext::create(complex, mu, v.k, 0);
    SpanningSet s = initial_spanning_set(context, v.degree);
    std::optional<CohomologySubspace> previous = level_zero_span(s);
    v.witnesses.push_back({alpha});
    for (int L = 1; L <= effective; ++L) {
        s = extend_spanning_set(s, options.lift);
        CohomologySubspace current = level_zero_span(s);
        if (!current.contains(alpha)) {
            v.max_level = L - 1;
            v.certified_missing_level = L;
            break;
        }
        v.stable_streak = current.equals(*previous) ? v.stable_streak + 1 : 0;
        previous = std::move(current);
        const auto w = extract_witness(s, alpha);
        if (!w)
            fail(ErrorKind::Internal, "membership and witness extraction disagree");
        v.witnesses.push_back(w->coefficients());
    }

    if (!v.max_level && v.k == 1 && v.degree == complex->top_degree() - 1 &&
        rational_top_shortcut(complex, alpha, mu, options.geometric) == ShortcutResult::Applied)
        v.infinite_by_shortcut = true;
    return v;
}

ShortcutResult rational_top_shortcut(const ComplexPtr& complex, const Element& alpha, const Element& mu,
                                     bool geometric) {
    const int n = complex->top_degree();
    if (!mu.has_degree(1))
        fail(ErrorKind::Degree, "the rational shortcut needs a degree-1 direction");
    if (!alpha.has_degree(n - 1))
        fail(ErrorKind::Degree, "the rational shortcut needs alpha of degree N - 1 = " + std::to_string(n - 1));
    require_closed(alpha, "alpha");
    require_closed(mu, "mu");
    if (!geometric)
        return ShortcutResult::NotApplicable;
    return is_exact(*complex, wedge(mu, alpha)) ? ShortcutResult::Applied : ShortcutResult::NotApplicable;
}

} // namespace jetob
