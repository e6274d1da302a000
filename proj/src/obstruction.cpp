#include "jetob/obstruction.hpp"

#include <exception>
#include <set>

#include "jetob/expression.hpp"

namespace jetob {

namespace {

int degree_of(const Element& e, std::optional<int> hint, const char* what) {
    if (!e.is_homogeneous())
        fail(ErrorKind::Degree, std::string(what) + " " + format_element(e) + " is not homogeneous");
    if (const auto d = e.degree()) {
        if (hint && *hint != *d)
            fail(ErrorKind::Degree,
                 std::string(what) + " has degree " + std::to_string(*d) + ", not " + std::to_string(*hint));
        return *d;
    }
    if (!hint)
        fail(ErrorKind::Degree, std::string(what) + " is zero; its degree must be given explicitly");
    return *hint;
}

} // namespace

std::string to_string(ConclusionKind kind) {
    switch (kind) {
    case ConclusionKind::Obstructed:
        return "OBSTRUCTED";
    case ConclusionKind::PassesUpToCutoff:
        return "PASSES_UP_TO_CUTOFF";
    case ConclusionKind::PassesDefinitively:
        return "PASSES_DEFINITIVELY";
    }
    return "?";
}

CupObstruction cup_obstruction(const CochainComplex& complex, const Element& alpha, const Element& pd) {
    require_closed(alpha, "alpha");
    require_closed(pd, "pd");
    CupObstruction out{wedge(pd, alpha), std::nullopt, true};
    out.degree = out.product.degree();
    out.is_zero = is_exact(complex, out.product);
    return out;
}

ObstructionChecklist theorem_checklist(const ComplexPtr& complex, const Element& alpha, const Element& pd, int cutoff,
                                       const ChecklistOptions& options) {
    ObstructionChecklist c{.alpha = alpha, .pd = pd, .cup = {Element::zero(complex->model())}};
    c.r = degree_of(alpha, options.alpha_degree, "alpha");
    c.k = degree_of(pd, options.pd_degree, "pd");
    c.cup = cup_obstruction(*complex, alpha, pd);
    c.cup_ok = c.cup.is_zero;

    if (is_exact(*complex, alpha) || is_exact(*complex, pd)) {
        c.trivial = true;
        c.conclusion = {ConclusionKind::PassesDefinitively, 0, 0};
        return c;
    }

    MaxJetOptions jet{.geometric = options.geometric, .lift = options.lift};
    if (c.k % 2 != 0) {
        jet.alpha_degree = c.r;
        jet.mu_degree = c.k;
        c.alpha_along_pd = max_jet(complex, alpha, pd, cutoff, jet);
    }
    if (c.r % 2 != 0) {
        jet.alpha_degree = c.k;
        jet.mu_degree = c.r;
        c.pd_along_alpha = max_jet(complex, pd, alpha, cutoff, jet);
    }

    if (!c.cup_ok) {
        c.conclusion = {ConclusionKind::Obstructed, 1, 3};
        return c;
    }
    std::optional<Conclusion> worst;
    bool definitive = true;
    const auto consider = [&](const std::optional<DeformabilityVerdict>& v, int bullet) {
        if (!v)
            return;
        if (v->max_level) {
            const int level = *v->max_level + 1;
            if (!worst || level < worst->level)
                worst = Conclusion{ConclusionKind::Obstructed, level, bullet};
        } else if (!v->stabilized && !v->infinite_by_shortcut) {
            definitive = false;
        }
    };
    consider(c.alpha_along_pd, 1);
    consider(c.pd_along_alpha, 2);
    if (worst)
        c.conclusion = *worst;
    else
        c.conclusion = {definitive ? ConclusionKind::PassesDefinitively : ConclusionKind::PassesUpToCutoff, 0, 0};
    return c;
}

CohomologySubspace cup_injectivity(const ComplexPtr& complex, const Element& alpha, int k,
                                   std::optional<int> alpha_degree) {
    require_closed(alpha, "alpha");
    const int r = degree_of(alpha, alpha_degree, "alpha");
    const CohomologySubspace& hk = complex->cohomology(k);
    if (is_exact(*complex, alpha))
        return hk.canonicalized(hk);

    const CohomologySubspace& target = complex->cohomology(r + k);
    RationalMatrix classes(target.dimension(), hk.dimension());
    for (std::size_t i = 0; i < hk.dimension(); ++i) {
        const auto coords = target.coordinates(wedge(alpha, hk.representatives()[i]));
        if (!coords)
            fail(ErrorKind::Internal, "cohomology basis does not span a closed product");
        for (std::size_t row = 0; row < coords->size(); ++row)
            classes(row, i) = (*coords)[row];
    }
    std::vector<Element> kernel;
    for (const auto& v : nullspace_basis(reduce(std::move(classes)))) {
        Element e = Element::zero(complex->model());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i]))
                e += v[i] * hk.representatives()[i];
        kernel.push_back(std::move(e));
    }
    return CohomologySubspace(hk.basis(), hk.relations(), kernel).canonicalized(hk);
}

std::vector<Scalar> rational_grid(int height) {
    if (height < 1)
        fail(ErrorKind::Range, "grid height must be at least 1");
    std::set<Scalar> values;
    for (int q = 1; q <= height; ++q)
        for (int p = -height; p <= height; ++p) {
            Scalar v(p, q);
            v.canonicalize();
            values.insert(v);
        }
    return {values.begin(), values.end()};
}

namespace {

// Projective representatives: first nonzero coordinate 1, the rest from the grid.
std::vector<Vector> projective_directions(std::size_t dim, const std::vector<Scalar>& grid, std::size_t limit,
                                          bool& truncated) {
    std::vector<Vector> out;
    truncated = false;
    for (std::size_t lead = 0; lead < dim; ++lead) {
        const std::size_t free = dim - lead - 1;
        std::vector<std::size_t> digit(free, 0);
        while (true) {
            if (out.size() >= limit) {
                truncated = true;
                return out;
            }
            Vector v(dim);
            v[lead] = 1;
            for (std::size_t i = 0; i < free; ++i)
                v[lead + 1 + i] = grid[digit[i]];
            out.push_back(std::move(v));
            std::size_t i = 0;
            while (i < free && ++digit[i] == grid.size())
                digit[i++] = 0;
            if (i == free)
                break;
        }
    }
    return out;
}

std::string submanifold_phrase(int k) {
    if (k == 1)
        return "non-separating exact hypersurface";
    return "exact submanifold of codimension " + std::to_string(k) + " that is non-torsion in homology";
}

} // namespace

ScanReport scan(const ComplexPtr& complex, const Element& alpha, int k, int cutoff, const ScanOptions& options) {
    if (k < 1 || k > complex->top_degree())
        fail(ErrorKind::Range, "codimension must lie in 1.." + std::to_string(complex->top_degree()));
    ScanReport report{.alpha = alpha, .kernel = cup_injectivity(complex, alpha, k, options.alpha_degree)};
    report.r = degree_of(alpha, options.alpha_degree, "alpha");
    report.k = k;
    report.cutoff = cutoff;
    report.height = options.height;
    const std::size_t dim = report.kernel.dimension();
    report.exhaustive = dim <= 1;

    const auto coords = projective_directions(dim, rational_grid(options.height), options.max_directions,
                                              report.truncated);
    const auto n = static_cast<std::int64_t>(coords.size());
    std::vector<std::optional<ScanDirection>> results(coords.size());
    std::vector<std::exception_ptr> errors(coords.size());
    const ChecklistOptions checklist_options{report.r, k, options.geometric, {}};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        try {
            Element mu = Element::zero(complex->model());
            for (std::size_t j = 0; j < dim; ++j)
                if (!is_zero(coords[i][j]))
                    mu += coords[i][j] * report.kernel.representatives()[j];
            ObstructionChecklist c = theorem_checklist(complex, alpha, mu, cutoff, checklist_options);
            results[i] = ScanDirection{coords[i], std::move(mu), std::move(c)};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (auto& r : results)
        report.directions.push_back(std::move(*r));

    int worst = 0;
    std::size_t definitive = 0;
    for (const auto& d : report.directions) {
        const Conclusion& c = d.checklist.conclusion;
        if (c.kind == ConclusionKind::Obstructed)
            worst = std::max(worst, c.level);
        else
            ++report.passing;
        if (c.kind == ConclusionKind::PassesDefinitively)
            ++definitive;
    }

    const std::string hk = "H^" + std::to_string(k);
    const std::string sample_note = "sample of " + std::to_string(report.directions.size()) +
                                    " projective directions from a cup kernel of dimension " + std::to_string(dim) +
                                    (report.truncated ? ", grid truncated" : "") + "; not a proof";
    bool excluded = false;
    if (dim == 0) {
        report.summary = "all directions obstructed by cup product";
        excluded = true;
    } else if (report.passing == 0) {
        report.obstruction_level = worst;
        if (report.exhaustive) {
            report.summary = "no nonzero direction in " + hk + " passes level " + std::to_string(worst);
            excluded = true;
        } else {
            report.summary = "no sampled direction in " + hk + " passes level " + std::to_string(worst) + " (" +
                             sample_note + ")";
        }
    } else {
        report.summary = std::to_string(report.passing) + " of " + std::to_string(report.directions.size()) +
                         " directions pass (" + std::to_string(definitive) + " definitively, up to cutoff " +
                         std::to_string(cutoff) + " otherwise)";
        if (!report.exhaustive)
            report.summary += " (" + sample_note + ")";
    }

    if (options.geometric) {
        const std::string what = submanifold_phrase(k);
        if (excluded)
            report.geometric_summary = "the manifold admits no " + what + " for this class";
        else if (report.passing == 0)
            report.geometric_summary = "no sampled direction supports a " + what + "; other directions are undecided";
        else
            report.geometric_summary = "a " + what + " is not excluded by these obstructions";
    }
    return report;
}

} // namespace jetob
