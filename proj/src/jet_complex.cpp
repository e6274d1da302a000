#include "jetob/jet_complex.hpp"

#include "jetob/expression.hpp"

namespace jetob {

namespace {

void require_odd(int k, const char* what) {
    if (k % 2 == 0)
        fail(ErrorKind::UnsupportedParity,
             std::string(what) + " needs odd k (got k = " + std::to_string(k) +
                 "); for even k use the sequence formulation (is_closed_jet) with L <= 1");
}

} // namespace

ContextPtr JetContext::create(ComplexPtr complex, Element eta, int k, int level) {
    if (eta.model() != complex->model())
        fail(ErrorKind::ModelMismatch, "eta belongs to a different model");
    if (k < 1)
        fail(ErrorKind::Degree, "twisting degree k must be positive, got " + std::to_string(k));
    if (!eta.has_degree(k))
        fail(ErrorKind::Degree, "eta = " + format_element(eta) + " is not homogeneous of degree " + std::to_string(k));
    require_closed(eta, "eta");
    if (level < 0 && level != kInfiniteLevel)
        fail(ErrorKind::Range, "jet level must be non-negative");
    if (k % 2 == 0 && (level == kInfiniteLevel || level > 1))
        fail(ErrorKind::UnsupportedParity, "for even k the formal variable squares to zero; L is capped at 1");
    return ContextPtr(new JetContext(std::move(complex), std::move(eta), k, level));
}

int JetContext::finite_level() const {
    if (infinite())
        fail(ErrorKind::Range, "operation needs a finite jet level");
    return level_;
}

ContextPtr JetContext::with_level(int level) const { return create(complex_, eta_, k_, level); }

ContextPtr JetContext::with_eta(Element eta) const { return create(complex_, std::move(eta), k_, level_); }

bool operator==(const JetContext& a, const JetContext& b) {
    return a.complex_ == b.complex_ && a.k_ == b.k_ && a.level_ == b.level_ && a.eta_ == b.eta_;
}

JetElement::JetElement(ContextPtr context, int degree, std::vector<Element> coefficients)
    : context_(std::move(context)), degree_(degree), coefficients_(std::move(coefficients)) {
    const auto size = static_cast<std::size_t>(context_->finite_level()) + 1;
    for (std::size_t j = size; j < coefficients_.size(); ++j)
        if (!coefficients_[j].is_zero())
            fail(ErrorKind::Range, "jet has a nonzero coefficient above t^" + std::to_string(size - 1));
    coefficients_.resize(size, Element::zero(context_->model()));
    for (std::size_t j = 0; j < size; ++j) {
        const Element& w = coefficients_[j];
        if (w.model() != context_->model())
            fail(ErrorKind::ModelMismatch, "jet coefficient belongs to a different model");
        const int expected = context_->coefficient_degree(degree_, static_cast<int>(j));
        if (!w.has_degree(expected))
            fail(ErrorKind::Degree, "coefficient of t^" + std::to_string(j) + " must have degree " +
                                        std::to_string(expected) + ", got " + format_element(w));
    }
}

JetElement JetElement::zero(ContextPtr context, int degree) { return JetElement(std::move(context), degree, {}); }

JetElement JetElement::constant(ContextPtr context, const Element& omega, int degree) {
    return JetElement(std::move(context), degree, {omega});
}

bool JetElement::is_zero() const {
    for (const auto& w : coefficients_)
        if (!w.is_zero())
            return false;
    return true;
}

void JetElement::require_compatible(const JetElement& other) const {
    if (!(*context_ == *other.context_) || degree_ != other.degree_)
        fail(ErrorKind::ModelMismatch, "jets live in different complexes or degrees");
}

JetElement& JetElement::operator+=(const JetElement& other) {
    require_compatible(other);
    for (std::size_t j = 0; j < coefficients_.size(); ++j)
        coefficients_[j] += other.coefficients_[j];
    return *this;
}

JetElement& JetElement::operator-=(const JetElement& other) {
    require_compatible(other);
    for (std::size_t j = 0; j < coefficients_.size(); ++j)
        coefficients_[j] -= other.coefficients_[j];
    return *this;
}

JetElement& JetElement::operator*=(const Scalar& c) {
    for (auto& w : coefficients_)
        w *= c;
    return *this;
}

bool operator==(const JetElement& a, const JetElement& b) {
    return *a.context_ == *b.context_ && a.degree_ == b.degree_ && a.coefficients_ == b.coefficients_;
}

JetElement jet_differential(const JetElement& x) {
    const JetContext& ctx = *x.context();
    require_odd(ctx.k(), "jet_differential");
    std::vector<Element> out;
    out.reserve(x.coefficients().size());
    for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
        Element c = differential(x.coefficients()[j]);
        if (j > 0)
            c -= wedge(ctx.eta(), x.coefficients()[j - 1]);
        out.push_back(std::move(c));
    }
    return JetElement(x.context(), x.degree() + 1, std::move(out));
}

bool is_closed_jet(const JetElement& x) {
    const auto& w = x.coefficients();
    if (!differential(w[0]).is_zero())
        return false;
    for (std::size_t l = 0; l + 1 < w.size(); ++l)
        if (!(differential(w[l + 1]) == wedge(x.context()->eta(), w[l])))
            return false;
    return true;
}

JetElement truncate(const JetElement& x, int level) {
    if (level < 0 || level > x.level())
        fail(ErrorKind::Range, "cannot truncate a level-" + std::to_string(x.level()) + " jet to level " +
                                   std::to_string(level));
    std::vector<Element> w(x.coefficients().begin(), x.coefficients().begin() + level + 1);
    return JetElement(x.context()->with_level(level), x.degree(), std::move(w));
}

JetElement gauge_change(const JetElement& x, const Element& g) {
    const JetContext& ctx = *x.context();
    if (g.model() != ctx.model())
        fail(ErrorKind::ModelMismatch, "gauge belongs to a different model");
    if (!g.has_degree(ctx.k() - 1))
        fail(ErrorKind::Degree, "gauge g = " + format_element(g) + " must have degree k - 1 = " +
                                    std::to_string(ctx.k() - 1));
    const int level = x.level();
    // e^{tg} coefficients g^i / i!
    std::vector<Element> exp_terms;
    Element power_i = Element::one(ctx.model());
    Scalar factorial = 1;
    for (int i = 0; i <= level; ++i) {
        if (i > 0) {
            power_i = wedge(power_i, g);
            factorial *= i;
        }
        exp_terms.push_back(power_i * Scalar(1 / factorial));
    }
    std::vector<Element> out;
    for (int j = 0; j <= level; ++j) {
        Element c = Element::zero(ctx.model());
        for (int i = 0; i <= j; ++i)
            if (!exp_terms[i].is_zero())
                c += wedge(exp_terms[i], x.coefficient(j - i));
        out.push_back(std::move(c));
    }
    return JetElement(ctx.with_eta(ctx.eta() + differential(g)), x.degree(), std::move(out));
}

JetElement scale_change(const JetElement& x, const Scalar& c) {
    if (is_zero(c))
        fail(ErrorKind::InvalidScale, "scale change needs a nonzero constant");
    const JetContext& ctx = *x.context();
    std::vector<Element> out;
    Scalar factor = 1;
    for (const auto& w : x.coefficients()) {
        out.push_back(w * factor);
        factor *= c;
    }
    return JetElement(ctx.with_eta(ctx.eta() * c), x.degree(), std::move(out));
}

JetElement psi(const ContextPtr& context, const Element& omega, int degree) {
    std::vector<Element> w(static_cast<std::size_t>(context->finite_level()) + 1, Element::zero(context->model()));
    w.back() = omega;
    return JetElement(context, degree, std::move(w));
}

JetBasis::JetBasis(const JetContext& context, int degree) : degree_(degree) {
    const int level = context.finite_level();
    for (int j = 0; j <= level; ++j) {
        offsets_.push_back(size_);
        blocks_.push_back(context.complex()->basis(context.coefficient_degree(degree, j)));
        size_ += blocks_.back()->size();
    }
}

Vector JetBasis::coordinates(const JetElement& x) const {
    Vector v(size_);
    for (int j = 0; j < blocks(); ++j) {
        const Vector part = block(j).coordinates(x.coefficient(j));
        std::copy(part.begin(), part.end(), v.begin() + static_cast<std::ptrdiff_t>(block_offset(j)));
    }
    return v;
}

JetElement JetBasis::element(const ContextPtr& context, std::span<const Scalar> coords) const {
    std::vector<Element> w;
    for (int j = 0; j < blocks(); ++j)
        w.push_back(block(j).element(coords.subspan(block_offset(j), block(j).size())));
    return JetElement(context, degree_, std::move(w));
}

RationalMatrix jet_differential_matrix(const JetContext& context, int degree) {
    require_odd(context.k(), "jet_differential_matrix");
    const JetBasis from(context, degree);
    const JetBasis to(context, degree + 1);
    RationalMatrix m(to.size(), from.size());
    const ModelPtr& model = context.model();
    for (int j = 0; j < from.blocks(); ++j) {
        const DegreeBasis& src = from.block(j);
        const RationalMatrix& d = context.complex()->differential_matrix(src.degree());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const std::size_t c = from.block_offset(j) + col;
            for (std::size_t row = 0; row < d.rows(); ++row)
                if (!is_zero(d(row, col)))
                    m(to.block_offset(j) + row, c) = d(row, col);
            if (j + 1 >= to.blocks())
                continue;
            const Element twisted = wedge(context.eta(), Element::monomial(model, src.monomials()[col]));
            const DegreeBasis& dst = to.block(j + 1);
            for (const auto& [u, coeff] : twisted.terms())
                m(to.block_offset(j + 1) + dst.index_of(u), c) -= coeff;
        }
    }
    return m;
}

JetElement find_jet_primitive(const JetElement& x) {
    const JetContext& ctx = *x.context();
    const LinearSolver solver(jet_differential_matrix(ctx, x.degree() - 1));
    const auto sol = solver.solve(JetBasis(ctx, x.degree()).coordinates(x));
    if (!sol)
        fail(ErrorKind::NoPrimitive, "jet is not exact in D^" + std::to_string(ctx.finite_level()));
    return JetBasis(ctx, x.degree() - 1).element(x.context(), *sol);
}

JetElement lift_exact(const JetElement& x, int level) {
    if (level < x.level())
        fail(ErrorKind::Range, "lift target level is below the source level");
    const JetElement beta = find_jet_primitive(x);
    const JetElement lifted(x.context()->with_level(level), beta.degree(), beta.coefficients());
    return jet_differential(lifted);
}

DirectJetCohomology jet_cohomology_direct(const ContextPtr& context, int degree) {
    const JetContext& ctx = *context;
    require_odd(ctx.k(), "jet_cohomology_direct");
    const JetBasis basis(ctx, degree);

    const RationalMatrix incoming = jet_differential_matrix(ctx, degree - 1);
    const EchelonForm in_rref = reduce(incoming);
    const std::vector<Vector> cocycles = nullspace_basis(reduce(jet_differential_matrix(ctx, degree)));

    SpanSolver span(basis.size());
    for (const auto p : in_rref.pivot_columns)
        span.add(incoming.column(p));

    DirectJetCohomology out{0, {}, ctx.complex()->cohomology(degree)};
    std::vector<Element> level_zero;
    for (const auto& z : cocycles) {
        if (!span.add(z))
            continue;
        out.representatives.push_back(basis.element(context, z));
        level_zero.push_back(out.representatives.back().coefficient(0));
    }
    out.dimension = out.representatives.size();

    const CohomologySubspace& h = ctx.complex()->cohomology(degree);
    out.v = CohomologySubspace(h.basis(), h.relations(), level_zero).canonicalized(h);
    return out;
}

} // namespace jetob
