#include "jetob/property_suite.hpp"

#include <exception>
#include <random>

#include "jetob/deformability.hpp"
#include "jetob/expression.hpp"
#include "jetob/model_io.hpp"

namespace jetob {

namespace {

enum Prop : int {
    KoszulCommutativity,
    Associativity,
    Leibniz,
    DSquaredZero,
    JetDSquaredZero,
    TruncationCochainMap,
    GaugeCochainMap,
    ScaleCochainMap,
    TruncationCocycle,
    GaugeCocycle,
    ScaleCocycle,
    TruncationGaugeCommute,
    TruncationScaleCommute,
    GaugeScaleCommute,
    GaugeInvarianceOfV,
    ScaleInvarianceOfV,
    LiftExactSurjectivity,
    Nesting,
    PrimitiveIndependence,
    DirectOracle,
    TorusLaw,
    RankNullity,
    EulerCharacteristic,
    RoundTrip,
    PropCount
};

using Rng = std::mt19937_64;
using Verdict = std::optional<std::string>; // nullopt: the identity held

Verdict unless(bool ok, const std::string& detail) {
    if (ok)
        return std::nullopt;
    return detail;
}

struct TrialLog {
    std::vector<std::pair<int, Verdict>> entries;
};

template <class F>
void check(TrialLog& log, Prop p, F&& body) {
    try {
        log.entries.emplace_back(p, body());
    } catch (const std::exception& e) {
        log.entries.emplace_back(p, std::string("threw: ") + e.what());
    }
}

Scalar random_scalar(Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        Scalar x(num(rng), den(rng));
        x.canonicalize();
        if (!nonzero || !is_zero(x))
            return x;
    }
}

Element random_element(const CochainComplex& complex, int r, Rng& rng) {
    Element e = Element::zero(complex.model());
    if (r < 0 || r > complex.top_degree())
        return e;
    std::bernoulli_distribution take(0.5);
    for (const auto& m : complex.basis(r)->monomials())
        if (take(rng))
            e.add_term(m, random_scalar(rng, true));
    return e;
}

Element random_closed(const CochainComplex& complex, int r, Rng& rng) {
    Element e = Element::zero(complex.model());
    if (r < 0 || r > complex.top_degree())
        return e;
    const auto b = complex.basis(r);
    for (const auto& z : complex.cocycle_basis(r))
        e += random_scalar(rng) * b->element(z);
    return e;
}

JetElement random_jet(const ContextPtr& ctx, int r, Rng& rng) {
    std::vector<Element> w;
    for (int j = 0; j <= ctx->finite_level(); ++j)
        w.push_back(random_element(*ctx->complex(), ctx->coefficient_degree(r, j), rng));
    return JetElement(ctx, r, std::move(w));
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int random_k(const CochainComplex& complex, Rng& rng) {
    return complex.top_degree() >= 3 && pick(rng, 0, 2) == 0 ? 3 : 1;
}

int sign_of(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }

std::string show(const Element& e) { return format_element(e); }

bool all_differentials_vanish(const DgaModel& m) {
    for (int i = 0; i < m.generator_count(); ++i)
        if (!m.differential_of(i).empty())
            return false;
    return true;
}

void algebra_checks(const ComplexPtr& complex, Rng& rng, const PropertyKernels& k, TrialLog& log) {
    const int n = complex->top_degree();
    const int da = pick(rng, 0, n), db = pick(rng, 0, n), dc = pick(rng, 0, n);
    const Element a = random_element(*complex, da, rng);
    const Element b = random_element(*complex, db, rng);
    const Element c = random_element(*complex, dc, rng);

    check(log, KoszulCommutativity, [&] {
        const Element lhs = k.wedge(a, b);
        const Element rhs = k.wedge(b, a) * Scalar(sign_of(da, db));
        return unless(lhs == rhs, "a = " + show(a) + ", b = " + show(b) + ": a^b = " + show(lhs) +
                                      " but (-1)^{|a||b|} b^a = " + show(rhs));
    });
    check(log, Associativity, [&] {
        const Element lhs = k.wedge(k.wedge(a, b), c);
        const Element rhs = k.wedge(a, k.wedge(b, c));
        return unless(lhs == rhs, "a = " + show(a) + ", b = " + show(b) + ", c = " + show(c));
    });
    check(log, Leibniz, [&] {
        const Element lhs = k.differential(k.wedge(a, b));
        Element rhs = k.wedge(k.differential(a), b);
        rhs += k.wedge(a, k.differential(b)) * Scalar(da % 2 == 0 ? 1 : -1);
        return unless(lhs == rhs, "a = " + show(a) + ", b = " + show(b) + ": d(ab) = " + show(lhs) +
                                      ", expected " + show(rhs));
    });
    check(log, DSquaredZero, [&] {
        const Element dd = k.differential(k.differential(a));
        return unless(dd.is_zero(), "d(d(" + show(a) + ")) = " + show(dd));
    });
}

void jet_checks(const ComplexPtr& complex, Rng& rng, const PropertyKernels& k, TrialLog& log) {
    const int n = complex->top_degree();
    const int kk = random_k(*complex, rng);
    const Element eta = random_closed(*complex, kk, rng);
    const int l3 = pick(rng, 0, 4);
    const int l2 = pick(rng, 0, l3);
    const int l1 = pick(rng, 0, l2);
    const int r = pick(rng, 0, n);
    const ContextPtr ctx = JetContext::create(complex, eta, kk, l3);
    const JetElement x = random_jet(ctx, r, rng);
    const Element g = random_element(*complex, kk - 1, rng);
    const Element g2 = random_element(*complex, kk - 1, rng);
    const Scalar c = random_scalar(rng, true);
    const Scalar c2 = random_scalar(rng, true);
    const std::string where = "eta = " + show(eta) + ", r = " + std::to_string(r) + ", L = " + std::to_string(l3);

    check(log, JetDSquaredZero, [&] {
        return unless(k.jet_differential(k.jet_differential(x)).is_zero(), where);
    });
    check(log, TruncationCochainMap, [&] {
        return unless(k.truncate(k.jet_differential(x), l1) == k.jet_differential(k.truncate(x, l1)),
                      where + ", L1 = " + std::to_string(l1));
    });
    check(log, GaugeCochainMap, [&] {
        return unless(k.gauge_change(k.jet_differential(x), g) == k.jet_differential(k.gauge_change(x, g)),
                      where + ", g = " + show(g));
    });
    check(log, ScaleCochainMap, [&] {
        return unless(k.scale_change(k.jet_differential(x), c) == k.jet_differential(k.scale_change(x, c)),
                      where + ", c = " + format_scalar(c));
    });
    check(log, TruncationCocycle, [&] {
        const bool id = k.truncate(x, l3) == x;
        const bool compose = k.truncate(k.truncate(x, l2), l1) == k.truncate(x, l1);
        return unless(id && compose, where + (id ? ", composition fails" : ", identity fails"));
    });
    check(log, GaugeCocycle, [&] {
        const bool id = k.gauge_change(x, Element::zero(complex->model())) == x;
        const bool compose = k.gauge_change(k.gauge_change(x, g), g2) == k.gauge_change(x, g + g2);
        const bool inverse = k.gauge_change(k.gauge_change(x, g), -g) == x;
        return unless(id && compose && inverse, where + ", g1 = " + show(g) + ", g2 = " + show(g2));
    });
    check(log, ScaleCocycle, [&] {
        const bool id = k.scale_change(x, Scalar(1)) == x;
        const bool compose = k.scale_change(k.scale_change(x, c), c2) == k.scale_change(x, c * c2);
        const bool inverse = k.scale_change(k.scale_change(x, c), Scalar(1 / c)) == x;
        return unless(id && compose && inverse,
                      where + ", c1 = " + format_scalar(c) + ", c2 = " + format_scalar(c2));
    });
    check(log, TruncationGaugeCommute, [&] {
        return unless(k.truncate(k.gauge_change(x, g), l1) == k.gauge_change(k.truncate(x, l1), g),
                      where + ", g = " + show(g));
    });
    check(log, TruncationScaleCommute, [&] {
        return unless(k.truncate(k.scale_change(x, c), l1) == k.scale_change(k.truncate(x, l1), c),
                      where + ", c = " + format_scalar(c));
    });
    check(log, GaugeScaleCommute, [&] {
        return unless(k.gauge_change(k.scale_change(x, c), g * c) == k.scale_change(k.gauge_change(x, g), c),
                      where + ", g = " + show(g) + ", c = " + format_scalar(c));
    });
}

void vspace_checks(const ComplexPtr& complex, Rng& rng, const PropertyKernels& k, TrialLog& log) {
    const int n = complex->top_degree();
    const int kk = random_k(*complex, rng);
    const Element eta = random_closed(*complex, kk, rng);
    const int level = pick(rng, 1, 3);
    const int r = pick(rng, 0, n);
    const ContextPtr ctx = JetContext::create(complex, eta, kk, level);
    const std::string where = "eta = " + show(eta) + ", r = " + std::to_string(r) + ", L = " + std::to_string(level);
    const CohomologySubspace v = v_space(ctx, r);

    check(log, Nesting, [&] {
        const auto levels = v_space_levels(ctx, r);
        for (std::size_t i = 0; i + 1 < levels.size(); ++i)
            if (!levels[i].contains(levels[i + 1]))
                return unless(false, where + ": V^" + std::to_string(i + 1) + " not inside V^" + std::to_string(i));
        return Verdict{};
    });
    check(log, GaugeInvarianceOfV, [&] {
        const Element g = random_element(*complex, kk - 1, rng);
        const Element moved = eta + k.differential(g);
        return unless(v_space(ctx->with_eta(moved), r).equals(v), where + ", g = " + show(g));
    });
    check(log, ScaleInvarianceOfV, [&] {
        const Scalar c = random_scalar(rng, true);
        return unless(v_space(ctx->with_eta(eta * c), r).equals(v), where + ", c = " + format_scalar(c));
    });
    check(log, PrimitiveIndependence, [&] {
        Rng local(rng());
        const LiftOptions randomized{&local};
        return unless(v_space(ctx, r, randomized).equals(v), where);
    });
    check(log, DirectOracle, [&] { return unless(jet_cohomology_direct(ctx, r).v.equals(v), where); });
    check(log, LiftExactSurjectivity, [&] {
        const int l1 = pick(rng, 0, level);
        const JetElement beta = random_jet(ctx->with_level(l1), r - 1 < 0 ? 0 : r - 1, rng);
        const JetElement x = k.jet_differential(beta);
        const JetElement y = lift_exact(x, level);
        bool exact = true;
        try {
            (void)find_jet_primitive(y);
        } catch (const Error&) {
            exact = false;
        }
        return unless(exact && k.truncate(y, l1) == x, where + ", lifting from level " + std::to_string(l1));
    });
    if (all_differentials_vanish(*complex->model())) {
        check(log, TorusLaw, [&] {
            const Element mu = random_element(*complex, 1, rng);
            Element alpha = random_element(*complex, r, rng);
            if (r >= 1 && pick(rng, 0, 1) == 0)
                alpha = k.wedge(mu, random_element(*complex, r - 1, rng));
            const bool in_v = v_space(JetContext::create(complex, mu, 1, 3), r).contains(alpha);
            const bool kills = k.wedge(mu, alpha).is_zero();
            return unless(in_v == kills, "mu = " + show(mu) + ", alpha = " + show(alpha));
        });
    }
}

void structure_checks(const ComplexPtr& complex, Rng& rng, const PropertyKernels&, TrialLog& log) {
    const int n = complex->top_degree();
    const int r = pick(rng, 0, n);
    check(log, RankNullity, [&] {
        const std::size_t rank = reduce(complex->differential_matrix(r)).rank();
        return unless(rank + complex->cocycle_basis(r).size() == complex->basis(r)->size(),
                      "degree " + std::to_string(r));
    });
    check(log, EulerCharacteristic, [&] {
        long chain = 0, homology = 0;
        for (int d = 0; d <= n; ++d) {
            const long s = d % 2 == 0 ? 1 : -1;
            chain += s * static_cast<long>(complex->basis(d)->size());
            homology += s * static_cast<long>(complex->cohomology(d).dimension());
        }
        return unless(chain == homology, "chain " + std::to_string(chain) + " vs cohomology " +
                                             std::to_string(homology));
    });
    check(log, RoundTrip, [&] {
        const Element a = random_element(*complex, r, rng);
        const bool element_ok = parse_element(complex->model(), format_element(a)) == a;
        const DgaModel& m = *complex->model();
        const bool model_ok = same_model(*parse_model(format_model(m), {kMaxGeneratorsHard}), m);
        return unless(element_ok && model_ok, element_ok ? "model text does not round-trip" : show(a));
    });
}

} // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "koszul-commutativity",     "associativity",
        "leibniz",                  "d-squared-zero",
        "jet-d-squared-zero",       "truncation-cochain-map",
        "gauge-cochain-map",        "scale-cochain-map",
        "truncation-cocycle",       "gauge-cocycle",
        "scale-cocycle",            "truncation-gauge-commute",
        "truncation-scale-commute", "gauge-scale-commute",
        "gauge-invariance-of-v",    "scale-invariance-of-v",
        "lift-exact-surjectivity",  "nesting",
        "primitive-independence",   "direct-oracle",
        "torus-law",                "rank-nullity",
        "euler-characteristic",     "parse-format-roundtrip",
    };
    return names;
}

bool PropertyReport::ok() const { return failures() == 0; }

std::size_t PropertyReport::failures() const {
    std::size_t n = 0;
    for (const auto& p : properties)
        n += p.failed;
    return n;
}

const PropertyOutcome* PropertyReport::find(const std::string& name) const {
    for (const auto& p : properties)
        if (p.name == name)
            return &p;
    return nullptr;
}

PropertyReport run_property_suite(const ComplexPtr& complex, std::uint64_t seed, int trials,
                                  const PropertyKernels& kernels) {
    if (trials < 0)
        fail(ErrorKind::Range, "trial count must be non-negative");
    static_assert(PropCount == 24);
    std::vector<TrialLog> logs(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t)};
        Rng rng(seq);
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        algebra_checks(complex, rng, kernels, log);
        try {
            jet_checks(complex, rng, kernels, log);
        } catch (const std::exception& e) {
            log.entries.emplace_back(JetDSquaredZero, std::string("setup threw: ") + e.what());
        }
        try {
            vspace_checks(complex, rng, kernels, log);
        } catch (const std::exception& e) {
            log.entries.emplace_back(Nesting, std::string("setup threw: ") + e.what());
        }
        structure_checks(complex, rng, kernels, log);
    }

    PropertyReport report{complex->model()->label(), seed, trials, {}};
    for (const auto& name : property_names())
        report.properties.push_back(PropertyOutcome{name, 0, 0, std::nullopt});
    for (int t = 0; t < trials; ++t)
        for (const auto& [p, verdict] : logs[static_cast<std::size_t>(t)].entries) {
            auto& out = report.properties[static_cast<std::size_t>(p)];
            ++out.checked;
            if (verdict) {
                ++out.failed;
                if (!out.first_failure)
                    out.first_failure = "trial " + std::to_string(t) + ": " + *verdict;
            }
        }
    return report;
}

} // namespace jetob
