#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace jetob;
using testing::el;
using testing::kt;
using testing::spans;

TEST_CASE("Kodaira-Thurston cohomology") {
    const auto& c = kt();
    CHECK(c->betti_numbers() == std::vector<int>{1, 3, 4, 3, 1});
    CHECK(spans(c, c->cohomology(1), {"A", "B", "T"}));
    CHECK(spans(c, c->cohomology(2), {"A*C", "A*T", "B*C", "B*T"}));
    CHECK(spans(c, c->cohomology(3), {"A*B*C", "A*C*T", "B*C*T"}));
    CHECK(spans(c, c->cohomology(4), {"A*B*C*T"}));
}

TEST_CASE("Betti numbers agree with the brute-force oracle") {
    for (const auto& name : builtin_names()) {
        const auto c = testing::complex_of(name);
        CHECK(c->betti_numbers() == oracle::betti_numbers(oracle::from_model(*c->model())));
    }
    const auto f = CochainComplex::create(load_model_file(testing::data_path("filiform.dga")));
    CHECK(f->betti_numbers() == oracle::betti_numbers(oracle::from_model(*f->model())));
}

TEST_CASE("torus Betti numbers are binomial") {
    CHECK(testing::complex_of("torus-2")->betti_numbers() == std::vector<int>{1, 2, 1});
    CHECK(testing::complex_of("torus-4")->cohomology(2).dimension() == 6);
    CHECK(testing::complex_of("torus-6")->betti_numbers() == std::vector<int>{1, 6, 15, 20, 15, 6, 1});
}

TEST_CASE("class coordinates and membership") {
    const auto& c = kt();
    const auto& h1 = c->cohomology(1);
    const auto x = class_coordinates(h1, el(c, "2*A - T"));
    REQUIRE(x.has_value());
    CHECK(h1.basis()->element(Vector{}).is_zero());
    Element back = Element::zero(c->model());
    for (std::size_t i = 0; i < x->size(); ++i)
        back += (*x)[i] * h1.representatives()[i];
    CHECK(is_exact(*c, back - el(c, "2*A - T")));

    const auto& h2 = c->cohomology(2);
    CHECK(h2.coordinates(el(c, "A*B")) == Vector(4));

    try {
        (void)h1.coordinates(el(c, "C"));
        FAIL("C is not closed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACocycle);
    }
    try {
        (void)h1.coordinates(el(c, "A*T"));
        FAIL("wrong degree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degree);
    }
}

TEST_CASE("exactness and primitives") {
    const auto& c = kt();
    CHECK(is_exact(*c, el(c, "A*B")));
    CHECK_FALSE(is_exact(*c, el(c, "A*C")));
    CHECK(is_exact(*c, el(c, "A*B*T")));
    CHECK(find_primitive(*c, el(c, "A*B")) == el(c, "C"));
    CHECK(differential(find_primitive(*c, el(c, "A*B*T"))) == el(c, "A*B*T"));
    CHECK(find_primitive(*c, Element::zero(c->model())).is_zero());
    try {
        (void)find_primitive(*c, el(c, "A*C"));
        FAIL("A*C is not exact");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoPrimitive);
    }

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Element p = find_primitive(*c, el(c, "A*B*T"), &rng);
        CHECK(differential(p) == el(c, "A*B*T"));
    }

    const auto om = oracle::from_model(*c->model());
    for (const char* z : {"A*B", "A*C", "A*B*T", "B*C*T", "A*B*C"})
        CHECK(is_exact(*c, el(c, z)) == oracle::is_exact(om, oracle::from_element(el(c, z)), *el(c, z).degree()));
}

TEST_CASE("cocycles and coboundaries have the expected dimensions") {
    const auto& c = kt();
    for (int r = 0; r <= 4; ++r) {
        const std::size_t z = c->cocycle_basis(r).size();
        const std::size_t b = c->coboundary_basis(r).size();
        CHECK(z - b == c->cohomology(r).dimension());
        CHECK(z + reduce(c->differential_matrix(r)).rank() == c->basis(r)->size());
    }
}

TEST_CASE("subspace comparison and canonical form") {
    const auto& c = kt();
    const auto& h = c->cohomology(2);
    const CohomologySubspace s(h.basis(), h.relations(), {el(c, "A*C + A*T"), el(c, "A*C - A*T"), el(c, "A*B")});
    CHECK(s.dimension() == 2);
    CHECK(spans(c, s, {"A*C", "A*T"}));
    const auto canon = s.canonicalized(h);
    CHECK(canon.representatives() == std::vector<Element>{el(c, "A*C"), el(c, "A*T")});
    CHECK(h.contains(s));
    CHECK_FALSE(s.contains(h));
}
