#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace jetob;
using testing::el;
using testing::kt;

TEST_CASE("monomials are sorted factor sets") {
    const Monomial m = Monomial::generator(0);
    CHECK(m.length() == 1);
    CHECK(Monomial::unit().length() == 0);
    CHECK(kt()->model()->degree(Monomial::unit()) == 0);
    const auto f = el(kt(), "C*A*T").terms().begin()->first.factors();
    CHECK(f == std::vector<int>{0, 2, 3});
}

TEST_CASE("wedge applies the Koszul sign") {
    const auto& c = kt();
    CHECK(wedge(el(c, "B"), el(c, "A")) == el(c, "-A*B"));
    CHECK(wedge(el(c, "A"), el(c, "A")).is_zero());
    CHECK(wedge(el(c, "A*B"), el(c, "C")) == wedge(el(c, "C"), el(c, "A*B")));
    CHECK(wedge(el(c, "T"), el(c, "A*C")) == el(c, "A*C*T"));
    CHECK(wedge(el(c, "B"), el(c, "A*C + B*T")) == el(c, "-A*B*C"));
}

TEST_CASE("wedge agrees with the bubble-sort oracle on every monomial pair") {
    const ModelPtr m = builtin("torus-4");
    const auto om = oracle::from_model(*m);
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
            const Element x = Element::monomial(m, Monomial(a));
            const Element y = Element::monomial(m, Monomial(b));
            const auto expected = oracle::multiply(oracle::from_element(x), oracle::from_element(y), om);
            CHECK(oracle::from_element(wedge(x, y)) == expected);
        }
}

TEST_CASE("differential is the derivation extending the generator images") {
    const auto& c = kt();
    CHECK(differential(el(c, "C")) == el(c, "A*B"));
    CHECK(differential(el(c, "C*T")) == el(c, "A*B*T"));
    CHECK(differential(el(c, "A*C")).is_zero());
    CHECK(differential(el(c, "1")).is_zero());

    const ModelPtr f = load_model_file(testing::data_path("filiform.dga"));
    const auto om = oracle::from_model(*f);
    for (std::uint32_t a = 0; a < 32; ++a) {
        const Element x = Element::monomial(f, Monomial(a));
        CHECK(oracle::from_element(differential(x)) == oracle::differential(oracle::from_element(x), om));
        CHECK(differential(differential(x)).is_zero());
    }
}

TEST_CASE("element degrees and canonical form") {
    const auto& c = kt();
    CHECK(el(c, "A*B + C*T").degree() == 2);
    CHECK_FALSE(el(c, "A + A*B").degree().has_value());
    CHECK_FALSE(el(c, "A + A*B").is_homogeneous());
    CHECK(Element::zero(c->model()).has_degree(3));
    CHECK(el(c, "A - A").is_zero());
    CHECK(el(c, "2*A") == el(c, "A") * Scalar(2));
    CHECK(power(el(c, "A*C + B*T"), 2) == el(c, "-2*A*B*C*T"));
    CHECK(power(el(c, "A"), 0) == Element::one(c->model()));
}

TEST_CASE("elements of different models do not mix") {
    const auto other = testing::complex_of("torus-4");
    CHECK_THROWS_AS(wedge(el(kt(), "A"), el(other, "A")), Error);
    try {
        (void)(el(kt(), "A") + el(other, "A"));
        FAIL("expected a model mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ModelMismatch);
    }
}

TEST_CASE("validation catches each axiom") {
    const auto gens = std::vector<Generator>{{"A", 1, 0}, {"B", 1, 1}, {"C", 1, 2}, {"T", 1, 3}};
    const ModelPtr names = DgaModel::create("n", gens, std::vector<TermMap>(4), {});
    const auto image = [&](const char* e) { return parse_element(names, e).terms(); };

    SUBCASE("d squared nonzero, with the residual") {
        std::vector<TermMap> d(4);
        d[2] = image("A*B");
        d[1] = image("C*T");
        const ModelPtr m = DgaModel::create("broken", gens, d, {});
        const auto report = validate_model(m);
        CHECK_FALSE(report.valid);
        CHECK(report.kind == ErrorKind::AxiomViolation);
        REQUIRE(report.generator.has_value());
        CHECK(m->generators()[*report.generator].name == "B");
        REQUIRE(report.residual.has_value());
        CHECK(Element(m, *report.residual) == parse_element(m, "A*B*T"));
        CHECK(differential(differential(Element::generator(m, 2))) == parse_element(m, "-A*C*T"));
    }
    SUBCASE("wrong differential degree") {
        std::vector<TermMap> d(4);
        d[2] = image("A");
        CHECK(validate_model(DgaModel::create("bad", gens, d, {})).kind == ErrorKind::Degree);
    }
    SUBCASE("manifold dimension must equal the top degree") {
        ModelMetadata meta;
        meta.manifold_dim = 3;
        CHECK_FALSE(validate_model(DgaModel::create("bad", gens, std::vector<TermMap>(4), meta)).valid);
    }
    SUBCASE("even generators") {
        const ModelPtr m = DgaModel::create("even", {{"X", 2, 0}}, std::vector<TermMap>(1), {});
        CHECK(validate_model(m).kind == ErrorKind::UnsupportedDegree);
        CHECK_THROWS_AS(CochainComplex::create(m), Error);
    }
}

TEST_CASE("basis of a degree lists the monomials in lexicographic order") {
    const auto b = basis_of_degree(*kt()->model(), 2);
    std::vector<std::string> names;
    for (const auto m : b)
        names.push_back(format_monomial(*kt()->model(), m));
    CHECK(names == std::vector<std::string>{"A*B", "A*C", "A*T", "B*C", "B*T", "C*T"});
    CHECK(basis_of_degree(*kt()->model(), 5).empty());
    CHECK(basis_of_degree(*kt()->model(), -1).empty());
}
