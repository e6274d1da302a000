#pragma once

// Linear algebra of the finite cochain complex (Omega^*, d) of a model:
// cohomology bases and primitives.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "jetob/algebra.hpp"
#include "jetob/linalg.hpp"

namespace jetob {

/// The monomial basis of one degree with its coordinate map.
class DegreeBasis {
public:
    DegreeBasis(ModelPtr model, int degree);

    const ModelPtr& model() const { return model_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t index_of(Monomial m) const;

    /// Throws Error(Degree) unless e is zero or homogeneous of this degree.
    Vector coordinates(const Element& e) const;
    Element element(std::span<const Scalar> coords) const;

private:
    ModelPtr model_;
    int degree_;
    std::vector<Monomial> monomials_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// A subspace of H^r given by closed representatives modulo the coboundaries
/// B^r. Immutable after construction.
class CohomologySubspace {
public:
    /// Keeps the candidates whose classes are independent modulo `relations`
    /// and the previously kept ones. `chosen`, when given, receives the
    /// indices of the kept candidates.
    CohomologySubspace(std::shared_ptr<const DegreeBasis> basis, std::vector<Vector> relations,
                       const std::vector<Element>& candidates, std::vector<std::size_t>* chosen = nullptr);

    int degree() const { return basis_->degree(); }
    std::size_t dimension() const { return representatives_.size(); }
    const std::vector<Element>& representatives() const { return representatives_; }
    const std::vector<Vector>& relations() const { return relations_; }
    const std::shared_ptr<const DegreeBasis>& basis() const { return basis_; }

    /// Coordinates of [z] over the representatives, or nullopt when the class
    /// lies outside the subspace. Throws NotACocycle / Degree.
    std::optional<Vector> coordinates(const Element& z) const;
    bool contains(const Element& z) const { return coordinates(z).has_value(); }

    bool contains(const CohomologySubspace& other) const;
    bool equals(const CohomologySubspace& other) const;

    /// Same subspace, with representatives replaced by the reduced echelon
    /// combinations of `ambient`'s representatives. Gives canonical output.
    CohomologySubspace canonicalized(const CohomologySubspace& ambient) const;

private:
    std::shared_ptr<const DegreeBasis> basis_;
    std::vector<Vector> relations_;
    std::vector<Element> representatives_;
    SpanSolver solver_;
    std::size_t relation_rank_ = 0;
};

class CochainComplex;
using ComplexPtr = std::shared_ptr<const CochainComplex>;

/// Lazily computed per-degree linear algebra of (Omega^*, d). Thread-safe;
/// every cached value is immutable once computed.
class CochainComplex {
public:
    /// Validates the model (throws on failure).
    static ComplexPtr create(ModelPtr model);

    const ModelPtr& model() const { return model_; }
    int top_degree() const { return model_->top_degree(); }

    std::shared_ptr<const DegreeBasis> basis(int r) const;
    /// Matrix of d : Omega^r -> Omega^{r+1}; columns indexed by basis(r).
    const RationalMatrix& differential_matrix(int r) const;
    /// Solver for d x = z with z in degree r, x in degree r-1.
    const LinearSolver& primitive_solver(int r) const;
    const std::vector<Vector>& cocycle_basis(int r) const;
    const std::vector<Vector>& coboundary_basis(int r) const;
    const CohomologySubspace& cohomology(int r) const;

    std::vector<int> betti_numbers() const;

private:
    explicit CochainComplex(ModelPtr model);

    struct Slot;
    Slot& slot(int r) const;

    ModelPtr model_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Slot>> slots_;
};

CohomologySubspace cohomology_basis(const CochainComplex& complex, int r);

std::optional<Vector> class_coordinates(const CohomologySubspace& h, const Element& z);

bool is_exact(const CochainComplex& complex, const Element& z);

/// Some alpha with d alpha = z. Free variables of the solve are zero unless
/// `randomize` is given, in which case a random kernel element is added.
/// Throws NoPrimitive when z is not exact.
Element find_primitive(const CochainComplex& complex, const Element& z, std::mt19937_64* randomize = nullptr);

/// As find_primitive, for z zero or homogeneous of degree r.
Element find_primitive_in_degree(const CochainComplex& complex, const Element& z, int r,
                                 std::mt19937_64* randomize = nullptr);

void require_closed(const Element& z, const char* what);

} // namespace jetob
