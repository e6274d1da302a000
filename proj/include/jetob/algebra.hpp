#pragma once

// Finite-dimensional graded-commutative dg-algebras generated by odd-degree
// generators, with exact rational coefficients.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetob/error.hpp"
#include "jetob/scalar.hpp"

namespace jetob {

/// Hard ceiling imposed by the bitmask monomial representation.
inline constexpr int kMaxGeneratorsHard = 32;
/// Default guard on model size (basis of 2^24 monomials).
inline constexpr int kMaxGeneratorsDefault = 24;

/// Canonical exterior monomial: the set of generator indices, stored as a
/// bitmask. Factors are implicitly in increasing index order.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint32_t bits) : bits_(bits) {}

    static constexpr Monomial unit() { return Monomial{}; }
    static constexpr Monomial generator(int index) { return Monomial{std::uint32_t{1} << index}; }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool is_unit() const { return bits_ == 0; }
    constexpr int length() const { return std::popcount(bits_); }
    constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }

    /// Factor indices, increasing.
    std::vector<int> factors() const;

    friend constexpr bool operator==(Monomial, Monomial) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Lexicographic order on the increasing factor lists (a proper prefix sorts
/// first). This is the basis order used everywhere.
struct MonomialLess {
    bool operator()(Monomial a, Monomial b) const noexcept;
};

using TermMap = std::map<Monomial, Scalar, MonomialLess>;

struct Generator {
    std::string name;
    int degree = 1;
    int index = 0;
};

struct ModelMetadata {
    std::optional<int> manifold_dim;
    std::optional<bool> oriented;
    std::string provenance;
};

class DgaModel;
using ModelPtr = std::shared_ptr<const DgaModel>;

/// Generators with the differential given on each generator. Immutable once
/// built; validity (odd degrees, correct degrees of images, d^2 = 0) is
/// checked separately by validate_model.
class DgaModel {
public:
    /// `differentials[i]` is d of generator i. Images must only mention
    /// generators of this model.
    static ModelPtr create(std::string label, std::vector<Generator> generators,
                           std::vector<TermMap> differentials, ModelMetadata metadata = {});

    const std::string& label() const { return label_; }
    const std::vector<Generator>& generators() const { return generators_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    const TermMap& differential_of(int generator) const { return differentials_.at(generator); }
    const ModelMetadata& metadata() const { return metadata_; }

    /// Sum of all generator degrees; the degree of the top monomial.
    int top_degree() const { return top_degree_; }
    int degree(Monomial m) const;
    std::optional<int> find_generator(std::string_view name) const;

    /// Koszul sign and product of two monomials; nullopt when they share a
    /// factor (odd generators square to zero).
    std::optional<std::pair<Monomial, int>> multiply(Monomial a, Monomial b) const;

    /// d of a single monomial, by the Leibniz rule.
    TermMap differential(Monomial m) const;

private:
    DgaModel() = default;

    std::string label_;
    std::vector<Generator> generators_;
    std::vector<TermMap> differentials_;
    ModelMetadata metadata_;
    int top_degree_ = 0;
    std::uint32_t odd_mask_ = 0;
};

/// A rational linear combination of monomials of one model, in canonical form
/// (no zero coefficients stored).
class Element {
public:
    explicit Element(ModelPtr model) : model_(std::move(model)) {}
    Element(ModelPtr model, TermMap terms);

    static Element zero(const ModelPtr& model) { return Element(model); }
    static Element one(const ModelPtr& model) { return monomial(model, Monomial::unit()); }
    static Element generator(const ModelPtr& model, int index);
    static Element monomial(const ModelPtr& model, Monomial m, const Scalar& coeff = 1);

    const ModelPtr& model() const { return model_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Common degree of all monomials; nullopt for the zero element and for
    /// mixed elements.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    /// True when zero or homogeneous of degree r.
    bool has_degree(int r) const;

    Scalar coefficient(Monomial m) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Scalar& c);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Scalar& c) { return a *= c; }

    friend bool operator==(const Element& a, const Element& b);

    /// Adds `c * m` in place.
    void add_term(Monomial m, const Scalar& c);

private:
    ModelPtr model_;
    TermMap terms_;
};

void require_same_model(const Element& a, const Element& b);

Element wedge(const Element& a, const Element& b);
Element differential(const Element& a);

/// a^n with a^0 = 1.
Element power(const Element& a, int n);

/// All monomials of degree r in basis order; empty outside [0, top_degree].
std::vector<Monomial> basis_of_degree(const DgaModel& m, int r);

struct ValidationReport {
    bool valid = true;
    std::optional<ErrorKind> kind;
    std::string message;
    /// Offending generator, when the failure is attached to one.
    std::optional<int> generator;
    /// d(d(x)) for an axiom violation.
    std::optional<TermMap> residual;
};

ValidationReport validate_model(const ModelPtr& m);

/// Throws the report's error when invalid.
void require_valid(const ModelPtr& m);

} // namespace jetob
