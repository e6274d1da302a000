#include "doctest.h"

#include <cstdlib>
#include <random>

#include "jetob/linalg.hpp"
#include "oracle.hpp"

using namespace jetob;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int rank_cap) {
    // Product of random rows x rank_cap and rank_cap x cols factors.
    std::uniform_int_distribution<int> num(-4, 4);
    RationalMatrix left(rows, rank_cap), right(rank_cap, cols), out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (int j = 0; j < rank_cap; ++j)
        {
            left(i, j) = Scalar(num(rng), 1 + std::abs(num(rng)));
            left(i, j).canonicalize();
        }
    for (int i = 0; i < rank_cap; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            right(i, j) = num(rng);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int t = 0; t < rank_cap; ++t)
                out(i, j) += left(i, t) * right(t, j);
    return out;
}

std::vector<std::vector<mpq_class>> rows_of(const RationalMatrix& m) {
    std::vector<std::vector<mpq_class>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

} // namespace

TEST_CASE("serial and parallel echelon forms agree") {
    std::mt19937_64 rng(7);
    for (const auto [rows, cols, rank] : {std::tuple{5, 7, 3}, std::tuple{40, 30, 12}, std::tuple{70, 64, 20}}) {
        const RationalMatrix a = random_matrix(rows, cols, rng, rank);
        const EchelonForm s = reduce_serial(a);
        const EchelonForm p = reduce_parallel(a);
        CHECK(s.reduced == p.reduced);
        CHECK(s.pivot_columns == p.pivot_columns);
        CHECK(reduce(a).reduced == s.reduced);
        CHECK(s.rank() == oracle::rank(rows_of(a)));
        CHECK(s.rank() <= static_cast<std::size_t>(rank));
    }
}

TEST_CASE("nullspace vectors are killed and count to the nullity") {
    std::mt19937_64 rng(11);
    const RationalMatrix a = random_matrix(6, 9, rng, 4);
    const auto ns = nullspace_basis(reduce(a));
    CHECK(ns.size() + reduce(a).rank() == 9);
    for (const auto& v : ns)
        CHECK(is_zero_vector(a.apply(v)));
}

TEST_CASE("linear solver decides consistency and returns solutions") {
    std::mt19937_64 rng(3);
    const RationalMatrix a = random_matrix(7, 5, rng, 3);
    const LinearSolver solver(a);
    Vector x(5);
    x[0] = Scalar(1, 2);
    x[3] = -2;
    const Vector b = a.apply(x);
    const auto sol = solver.solve(b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
    CHECK(solver.image_basis().size() == solver.rank());

    Vector off(7);
    off[0] = 1;
    std::vector<std::vector<mpq_class>> cols;
    for (std::size_t j = 0; j < 5; ++j) {
        const Vector c = a.column(j);
        cols.emplace_back(c.begin(), c.end());
    }
    const std::size_t base = oracle::rank(cols);
    cols.emplace_back(off.begin(), off.end());
    CHECK(solver.consistent(off) == (oracle::rank(cols) == base));
}

TEST_CASE("span solver tracks coordinates") {
    SpanSolver s(3);
    CHECK(s.add(Vector{1, 1, 0}));
    CHECK(s.add(Vector{0, 1, 1}));
    CHECK_FALSE(s.add(Vector{1, 2, 1}));
    const auto c = s.coordinates(Vector{2, 5, 3});
    REQUIRE(c.has_value());
    CHECK(*c == Vector{2, 3});
    CHECK_FALSE(s.contains(Vector{0, 0, 1}));
}

TEST_CASE("dense size guard raises a resource error") {
    try {
        check_dense_size(100000, 100000, "test");
        FAIL("expected a resource error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Resource);
    }
}
