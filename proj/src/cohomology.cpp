#include "jetob/cohomology.hpp"

#include <cstdint>
#include <map>

#include "jetob/expression.hpp"

namespace jetob {

DegreeBasis::DegreeBasis(ModelPtr model, int degree)
    : model_(std::move(model)), degree_(degree), monomials_(basis_of_degree(*model_, degree)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i].bits(), i);
}

std::size_t DegreeBasis::index_of(Monomial m) const {
    const auto it = index_.find(m.bits());
    if (it == index_.end())
        fail(ErrorKind::Degree, "monomial " + format_monomial(*model_, m) + " is not of degree " +
                                    std::to_string(degree_));
    return it->second;
}

Vector DegreeBasis::coordinates(const Element& e) const {
    if (e.model() != model_)
        fail(ErrorKind::ModelMismatch, "element belongs to a different model");
    if (!e.has_degree(degree_))
        fail(ErrorKind::Degree, "expected an element of degree " + std::to_string(degree_) + ", got " +
                                    format_element(e));
    Vector v(monomials_.size());
    for (const auto& [m, c] : e.terms())
        v[index_of(m)] = c;
    return v;
}

Element DegreeBasis::element(std::span<const Scalar> coords) const {
    Element e(model_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        e.add_term(monomials_[i], coords[i]);
    return e;
}

void require_closed(const Element& z, const char* what) {
    if (!differential(z).is_zero())
        fail(ErrorKind::NotACocycle, std::string(what) + " " + format_element(z) + " is not closed");
}

CohomologySubspace::CohomologySubspace(std::shared_ptr<const DegreeBasis> basis, std::vector<Vector> relations,
                                       const std::vector<Element>& candidates, std::vector<std::size_t>* chosen)
    : basis_(std::move(basis)), relations_(std::move(relations)), solver_(basis_->size()) {
    for (const auto& rel : relations_)
        if (solver_.add(rel))
            ++relation_rank_;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        require_closed(candidates[i], "representative");
        if (solver_.add(basis_->coordinates(candidates[i]))) {
            representatives_.push_back(candidates[i]);
            if (chosen)
                chosen->push_back(i);
        }
    }
}

std::optional<Vector> CohomologySubspace::coordinates(const Element& z) const {
    const Vector v = basis_->coordinates(z);
    require_closed(z, "class representative");
    auto all = solver_.coordinates(v);
    if (!all)
        return std::nullopt;
    return Vector(all->begin() + static_cast<std::ptrdiff_t>(relation_rank_), all->end());
}

bool CohomologySubspace::contains(const CohomologySubspace& other) const {
    if (other.degree() != degree())
        return false;
    for (const auto& rep : other.representatives_)
        if (!contains(rep))
            return false;
    return true;
}

bool CohomologySubspace::equals(const CohomologySubspace& other) const {
    return dimension() == other.dimension() && contains(other);
}

CohomologySubspace CohomologySubspace::canonicalized(const CohomologySubspace& ambient) const {
    std::vector<Vector> rows;
    for (const auto& rep : representatives_) {
        auto c = ambient.coordinates(rep);
        if (!c)
            fail(ErrorKind::Internal, "subspace is not contained in the ambient cohomology");
        rows.push_back(std::move(*c));
    }
    const EchelonForm ef = reduce(RationalMatrix::from_rows(rows, ambient.dimension()));
    std::vector<Element> reps;
    for (std::size_t i = 0; i < ef.rank(); ++i) {
        Element e(basis_->model());
        for (std::size_t j = 0; j < ambient.dimension(); ++j)
            if (!is_zero(ef.reduced(i, j)))
                e += ef.reduced(i, j) * ambient.representatives()[j];
        reps.push_back(std::move(e));
    }
    return CohomologySubspace(basis_, relations_, reps);
}

struct CochainComplex::Slot {
    std::once_flag basis_once, diff_once, solver_once, cocycle_once, cohomology_once;
    std::shared_ptr<const DegreeBasis> basis;
    RationalMatrix diff;
    LinearSolver solver;
    std::vector<Vector> cocycles;
    std::optional<CohomologySubspace> cohomology;
};

CochainComplex::CochainComplex(ModelPtr model) : model_(std::move(model)) {}

ComplexPtr CochainComplex::create(ModelPtr model) {
    require_valid(model);
    return ComplexPtr(new CochainComplex(std::move(model)));
}

CochainComplex::Slot& CochainComplex::slot(int r) const {
    std::lock_guard lock(mutex_);
    auto& entry = slots_[r];
    if (!entry)
        entry = std::make_unique<Slot>();
    return *entry;
}

std::shared_ptr<const DegreeBasis> CochainComplex::basis(int r) const {
    Slot& s = slot(r);
    std::call_once(s.basis_once, [&] { s.basis = std::make_shared<const DegreeBasis>(model_, r); });
    return s.basis;
}

const RationalMatrix& CochainComplex::differential_matrix(int r) const {
    Slot& s = slot(r);
    std::call_once(s.diff_once, [&] {
        const auto from = basis(r);
        const auto to = basis(r + 1);
        RationalMatrix m(to->size(), from->size());
        const auto n = static_cast<std::int64_t>(from->size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t jj = 0; jj < n; ++jj) {
            const auto j = static_cast<std::size_t>(jj);
            for (const auto& [u, c] : model_->differential(from->monomials()[j]))
                m(to->index_of(u), j) = c;
        }
        s.diff = std::move(m);
    });
    return s.diff;
}

const LinearSolver& CochainComplex::primitive_solver(int r) const {
    Slot& s = slot(r);
    std::call_once(s.solver_once, [&] { s.solver = LinearSolver(differential_matrix(r - 1)); });
    return s.solver;
}

const std::vector<Vector>& CochainComplex::cocycle_basis(int r) const {
    Slot& s = slot(r);
    std::call_once(s.cocycle_once, [&] { s.cocycles = nullspace_basis(reduce(differential_matrix(r))); });
    return s.cocycles;
}

const std::vector<Vector>& CochainComplex::coboundary_basis(int r) const {
    return primitive_solver(r).image_basis();
}

const CohomologySubspace& CochainComplex::cohomology(int r) const {
    Slot& s = slot(r);
    std::call_once(s.cohomology_once, [&] {
        const auto b = basis(r);
        std::vector<Element> candidates;
        for (const auto& z : cocycle_basis(r))
            candidates.push_back(b->element(z));
        s.cohomology.emplace(b, coboundary_basis(r), candidates);
    });
    return *s.cohomology;
}

std::vector<int> CochainComplex::betti_numbers() const {
    std::vector<int> out;
    for (int r = 0; r <= top_degree(); ++r)
        out.push_back(static_cast<int>(cohomology(r).dimension()));
    return out;
}

CohomologySubspace cohomology_basis(const CochainComplex& complex, int r) { return complex.cohomology(r); }

std::optional<Vector> class_coordinates(const CohomologySubspace& h, const Element& z) {
    return h.coordinates(z);
}

namespace {

int degree_or_throw(const Element& z, const char* what) {
    const auto d = z.degree();
    if (!d)
        fail(ErrorKind::Degree, std::string(what) + " " + format_element(z) + " is not homogeneous");
    return *d;
}

} // namespace

bool is_exact(const CochainComplex& complex, const Element& z) {
    if (z.is_zero())
        return true;
    const int r = degree_or_throw(z, "element");
    return complex.primitive_solver(r).consistent(complex.basis(r)->coordinates(z));
}

Element find_primitive(const CochainComplex& complex, const Element& z, std::mt19937_64* randomize) {
    if (z.is_zero() && !randomize)
        return Element::zero(complex.model());
    if (z.is_zero())
        fail(ErrorKind::Degree, "a randomized primitive of 0 needs an explicit degree");
    return find_primitive_in_degree(complex, z, degree_or_throw(z, "element"), randomize);
}

Element find_primitive_in_degree(const CochainComplex& complex, const Element& z, int r,
                                 std::mt19937_64* randomize) {
    if (z.model() != complex.model())
        fail(ErrorKind::ModelMismatch, "element belongs to a different model");
    const LinearSolver& solver = complex.primitive_solver(r);
    auto x = solver.solve(complex.basis(r)->coordinates(z));
    if (!x)
        fail(ErrorKind::NoPrimitive, format_element(z) + " is not exact");
    if (randomize) {
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (const auto& n : solver.nullspace()) {
            const Scalar c = coeff(*randomize);
            for (std::size_t i = 0; i < n.size(); ++i)
                (*x)[i] += c * n[i];
        }
    }
    return complex.basis(r - 1)->element(*x);
}

} // namespace jetob
