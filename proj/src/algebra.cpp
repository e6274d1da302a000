#include "jetob/algebra.hpp"

#include <sstream>
#include <unordered_set>

#include "jetob/expression.hpp"

namespace jetob {

std::vector<int> Monomial::factors() const {
    std::vector<int> out;
    out.reserve(length());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool MonomialLess::operator()(Monomial a, Monomial b) const noexcept {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    const int p = std::countr_zero(diff);
    const auto above = [p](std::uint32_t x) { return p >= 31 ? 0U : x >> (p + 1); };
    if (a.contains(p))
        return above(b.bits()) != 0;
    return above(a.bits()) == 0;
}

ModelPtr DgaModel::create(std::string label, std::vector<Generator> generators,
                          std::vector<TermMap> differentials, ModelMetadata metadata) {
    if (generators.size() > static_cast<std::size_t>(kMaxGeneratorsHard))
        fail(ErrorKind::Resource, "model has " + std::to_string(generators.size()) +
                                      " generators; at most " + std::to_string(kMaxGeneratorsHard) +
                                      " are representable");
    if (differentials.size() != generators.size())
        fail(ErrorKind::Internal, "differential list does not match generator list");

    std::unordered_set<std::string> names;
    auto m = std::shared_ptr<DgaModel>(new DgaModel());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        Generator& g = generators[i];
        g.index = static_cast<int>(i);
        if (g.degree <= 0)
            fail(ErrorKind::UnsupportedDegree,
                 "generator " + g.name + " has non-positive degree " + std::to_string(g.degree));
        if (!names.insert(g.name).second)
            fail(ErrorKind::Parse, "duplicate generator name " + g.name);
        m->top_degree_ += g.degree;
        if (g.degree % 2 != 0)
            m->odd_mask_ |= std::uint32_t{1} << i;
    }
    const std::uint32_t all = generators.size() == 32 ? ~0U : (std::uint32_t{1} << generators.size()) - 1;
    for (auto& d : differentials) {
        for (auto it = d.begin(); it != d.end();) {
            if ((it->first.bits() & ~all) != 0)
                fail(ErrorKind::UnknownGenerator, "differential mentions a generator outside the model");
            it = is_zero(it->second) ? d.erase(it) : std::next(it);
        }
    }
    m->label_ = std::move(label);
    m->generators_ = std::move(generators);
    m->differentials_ = std::move(differentials);
    m->metadata_ = std::move(metadata);
    return m;
}

int DgaModel::degree(Monomial m) const {
    int deg = 0;
    for (std::uint32_t b = m.bits(); b != 0; b &= b - 1)
        deg += generators_[std::countr_zero(b)].degree;
    return deg;
}

std::optional<int> DgaModel::find_generator(std::string_view name) const {
    for (const auto& g : generators_)
        if (g.name == name)
            return g.index;
    return std::nullopt;
}

std::optional<std::pair<Monomial, int>> DgaModel::multiply(Monomial a, Monomial b) const {
    if ((a.bits() & b.bits()) != 0) {
        // Only odd generators are nilpotent; even ones are rejected at validation.
        return std::nullopt;
    }
    const std::uint32_t oa = a.bits() & odd_mask_;
    int parity = 0;
    for (std::uint32_t ob = b.bits() & odd_mask_; ob != 0; ob &= ob - 1) {
        const int j = std::countr_zero(ob);
        parity += std::popcount(j >= 31 ? 0U : oa >> (j + 1));
    }
    return std::pair{Monomial{a.bits() | b.bits()}, (parity & 1) ? -1 : 1};
}

TermMap DgaModel::differential(Monomial m) const {
    TermMap out;
    int prefix_degree = 0;
    for (const int i : m.factors()) {
        const std::uint32_t below = (std::uint32_t{1} << i) - 1;
        const Monomial prefix{m.bits() & below};
        const Monomial suffix{m.bits() & ~below & ~(std::uint32_t{1} << i)};
        const int outer = (prefix_degree % 2 != 0) ? -1 : 1;
        for (const auto& [u, c] : differentials_[i]) {
            const auto left = multiply(prefix, u);
            if (!left)
                continue;
            const auto full = multiply(left->first, suffix);
            if (!full)
                continue;
            const int sign = outer * left->second * full->second;
            auto [it, inserted] = out.try_emplace(full->first, 0);
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
            if (is_zero(it->second))
                out.erase(it);
        }
        prefix_degree += generators_[i].degree;
    }
    return out;
}

Element::Element(ModelPtr model, TermMap terms) : model_(std::move(model)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return jetob::is_zero(kv.second); });
}

Element Element::generator(const ModelPtr& model, int index) {
    if (index < 0 || index >= model->generator_count())
        fail(ErrorKind::UnknownGenerator, "generator index out of range");
    return monomial(model, Monomial::generator(index));
}

Element Element::monomial(const ModelPtr& model, Monomial m, const Scalar& coeff) {
    Element e(model);
    e.add_term(m, coeff);
    return e;
}

std::optional<int> Element::degree() const {
    if (terms_.empty())
        return std::nullopt;
    const int d = model_->degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (model_->degree(m) != d)
            return std::nullopt;
    return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

bool Element::has_degree(int r) const {
    if (terms_.empty())
        return true;
    const auto d = degree();
    return d && *d == r;
}

Scalar Element::coefficient(Monomial m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(Monomial m, const Scalar& c) {
    if (jetob::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (jetob::is_zero(it->second))
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    require_same_model(*this, other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_model(*this, other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (jetob::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_)
        x *= c;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, x] : out.terms_)
        x = -x;
    return out;
}

bool operator==(const Element& a, const Element& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
}

void require_same_model(const Element& a, const Element& b) {
    if (a.model() != b.model())
        fail(ErrorKind::ModelMismatch, "elements belong to different models");
}

Element wedge(const Element& a, const Element& b) {
    require_same_model(a, b);
    const DgaModel& m = *a.model();
    Element out(a.model());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const auto prod = m.multiply(ma, mb);
            if (!prod)
                continue;
            Scalar c = ca * cb;
            if (prod->second < 0)
                c = -c;
            out.add_term(prod->first, c);
        }
    }
    return out;
}

Element differential(const Element& a) {
    const DgaModel& m = *a.model();
    Element out(a.model());
    for (const auto& [mono, c] : a.terms())
        for (const auto& [u, cu] : m.differential(mono))
            out.add_term(u, c * cu);
    return out;
}

Element power(const Element& a, int n) {
    Element out = Element::one(a.model());
    for (int i = 0; i < n && !out.is_zero(); ++i)
        out = wedge(out, a);
    return out;
}

std::vector<Monomial> basis_of_degree(const DgaModel& m, int r) {
    std::vector<Monomial> out;
    if (r < 0 || r > m.top_degree())
        return out;
    const int n = m.generator_count();
    // Depth-first enumeration of increasing index lists yields lexicographic order.
    auto rec = [&](auto&& self, int start, int remaining, std::uint32_t bits) -> void {
        if (remaining == 0) {
            out.emplace_back(bits);
            return;
        }
        for (int i = start; i < n; ++i) {
            const int d = m.generators()[i].degree;
            if (d <= remaining)
                self(self, i + 1, remaining - d, bits | (std::uint32_t{1} << i));
        }
    };
    rec(rec, 0, r, 0U);
    return out;
}

ValidationReport validate_model(const ModelPtr& model) {
    ValidationReport report;
    const DgaModel& m = *model;
    auto reject = [&](ErrorKind kind, int gen, std::string msg) {
        report.valid = false;
        report.kind = kind;
        report.generator = gen;
        report.message = std::move(msg);
    };
    for (const auto& g : m.generators()) {
        if (g.degree % 2 == 0) {
            reject(ErrorKind::UnsupportedDegree, g.index,
                   "generator " + g.name + " has even degree " + std::to_string(g.degree) +
                       "; only odd-degree generators are supported");
            return report;
        }
    }
    for (const auto& g : m.generators()) {
        const Element dg(model, m.differential_of(g.index));
        if (!dg.has_degree(g.degree + 1)) {
            reject(ErrorKind::Degree, g.index,
                   "d " + g.name + " = " + format_element(dg) + " is not homogeneous of degree " +
                       std::to_string(g.degree + 1));
            return report;
        }
    }
    for (const auto& g : m.generators()) {
        const Element ddg = differential(Element(model, m.differential_of(g.index)));
        if (!ddg.is_zero()) {
            reject(ErrorKind::AxiomViolation, g.index,
                   "d(d " + g.name + ") = " + format_element(ddg) + " is nonzero");
            report.residual = ddg.terms();
            return report;
        }
    }
    if (const auto& dim = m.metadata().manifold_dim; dim && *dim != m.top_degree()) {
        report.valid = false;
        report.kind = ErrorKind::Degree;
        report.message = "manifold-dim " + std::to_string(*dim) + " differs from top degree " +
                         std::to_string(m.top_degree());
    }
    return report;
}

void require_valid(const ModelPtr& m) {
    const auto report = validate_model(m);
    if (!report.valid)
        fail(*report.kind, report.message);
}

} // namespace jetob
