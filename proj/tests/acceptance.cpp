// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "jetob/obstruction.hpp"
#include "jetob/parallel.hpp"
#include "jetob/property_suite.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace jetob;
using testing::el;
using testing::kt;
using Json = nlohmann::ordered_json;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok)
        throw Failure{what};
}

Json cli_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    expect(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
    return Json::parse(out.str());
}

bool same_span(const ComplexPtr& c, const CohomologySubspace& v, std::initializer_list<const char*> exprs) {
    // Membership both ways, plus the dimension.
    for (const char* e : exprs)
        if (!v.contains(el(c, e)))
            return false;
    const auto& h = c->cohomology(v.degree());
    std::vector<Element> reps;
    for (const char* e : exprs)
        reps.push_back(el(c, e));
    const CohomologySubspace span(h.basis(), h.relations(), reps);
    return span.dimension() == exprs.size() && span.contains(v) && v.dimension() == exprs.size();
}

std::string c1() {
    const Json j = cli_json({"cohomology", "--builtin", "kodaira-thurston"});
    expect(j["betti"] == Json::array({1, 3, 4, 3, 1}), "betti " + j["betti"].dump());
    expect(oracle::betti_numbers(oracle::from_model(*kt()->model())) == std::vector<int>{1, 3, 4, 3, 1},
           "oracle disagrees");
    return "betti (1,3,4,3,1)";
}

std::string c2() {
    const auto v = v_space(JetContext::create(kt(), el(kt(), "A"), 1, 1), 2);
    expect(v.dimension() == 3, "dimension " + std::to_string(v.dimension()));
    expect(same_span(kt(), v, {"A*C", "A*T", "B*T"}), "span differs");
    return "V^{1,2}_A = span{AC, AT, BT}";
}

std::string c3() {
    const auto levels = v_space_levels(JetContext::create(kt(), el(kt(), "A"), 1, 6), 2);
    for (int L = 2; L <= 6; ++L) {
        expect(levels[L].dimension() == 2, "L = " + std::to_string(L) + " dimension");
        expect(same_span(kt(), levels[L], {"A*C", "A*T"}), "L = " + std::to_string(L) + " span");
    }
    return "V^{L,2}_A = span{AC, AT} for L = 2..6";
}

std::string c4() {
    const auto v = max_jet(kt(), el(kt(), "B*T"), el(kt(), "A"), 4);
    expect(v.max_level == 1, "max level");
    expect(v.certified_missing_level == 2, "no certificate at level 2");
    expect(!v.witnesses.empty() && v.witnesses.size() == 2, "witness missing");
    const JetElement w(JetContext::create(kt(), el(kt(), "A"), 1, 1), 2, v.witnesses[1]);
    expect(is_closed_jet(w), "witness not closed");
    expect(!v_space(JetContext::create(kt(), el(kt(), "A"), 1, 2), 2).contains(el(kt(), "B*T")), "B*T in V^2");
    return "max_jet = 1, witness " + format_element(w.coefficient(0)) + " + (" + format_element(w.coefficient(1)) +
           ")t, not in V^2";
}

std::string c5() {
    const Json j = cli_json(
        {"scan", "--builtin", "kodaira-thurston", "--alpha", "A*C + B*T", "--codim", "1", "--cutoff", "3",
         "--geometric"});
    expect(j["cup_kernel"]["dimension"] == 1, "kernel dimension");
    expect(j["cup_kernel"]["basis"] == Json::array({"A"}), "kernel basis");
    expect(j["directions"].size() == 1 && j["directions"][0]["conclusion"] == "OBSTRUCTED" &&
               j["directions"][0]["obstruction_level"] == 2,
           "direction A verdict");
    expect(j["geometric_summary"].is_string() &&
               j["geometric_summary"].get<std::string>().find("admits no non-separating exact hypersurface") !=
                   std::string::npos,
           "summary");
    return "kernel span{A}, obstructed at level 2; " + j["geometric_summary"].get<std::string>();
}

std::string c6() {
    const auto ctx = JetContext::create(kt(), el(kt(), "A"), 1, 2);
    const JetElement target = psi(ctx, el(kt(), "A*C"), 2);
    const auto direct = jet_cohomology_direct(ctx, 2);
    // [A*C t^2] must vanish: it lies in the span of d_{tA}(D^1).
    const LinearSolver solver(jet_differential_matrix(*ctx, 1));
    expect(solver.consistent(JetBasis(*ctx, 2).coordinates(target)), "A*C t^2 not exact");
    const JetElement primitive(ctx, 1, {el(kt(), "-B"), el(kt(), "-C")});
    expect(jet_differential(primitive) == target, "d(-B - C t) != A*C t^2");
    expect(direct.v.contains(el(kt(), "A*C")), "A*C not in V^2");
    return "A*C t^2 = d_{tA}(-B - C t)";
}

std::string c7() {
    const char* kt_etas[] = {"0", "A", "B", "T", "A + B", "2*A - T", "A + B + T", "-1/2*B + 3*T", "3*A - 2*B + T",
                             "A - T"};
    const char* t4_etas[] = {"0", "A", "B", "C", "D", "A + B", "C - 2*D", "A + B + C + D", "1/2*A - 3*C", "B + D"};
    std::size_t comparisons = 0;
    const auto run = [&](const ComplexPtr& c, const char* const* etas) {
        for (int i = 0; i < 10; ++i)
            for (int r = 0; r <= 4; ++r) {
                const auto ctx = JetContext::create(c, el(c, etas[i]), 1, 4);
                const auto levels = v_space_levels(ctx, r);
                for (int L = 0; L <= 4; ++L) {
                    const auto direct = jet_cohomology_direct(ctx->with_level(L), r);
                    expect(levels[L].equals(direct.v), std::string("eta = ") + etas[i] + ", r = " +
                                                           std::to_string(r) + ", L = " + std::to_string(L));
                    ++comparisons;
                }
            }
    };
    run(kt(), kt_etas);
    run(testing::complex_of("torus-4"), t4_etas);
    return std::to_string(comparisons) + " inductive/direct comparisons agree";
}

std::string c8() {
    const PropertyReport r = run_property_suite(kt(), kDefaultSeed, 200);
    for (const auto& p : r.properties) {
        if (p.name == "torus-law")
            continue;
        expect(p.checked == 200, p.name + " checked " + std::to_string(p.checked) + " times");
        expect(p.failed == 0, p.name + ": " + p.first_failure.value_or(""));
    }
    return std::to_string(r.properties.size() - 1) + " properties x 200 trials, seed " + std::to_string(kDefaultSeed) +
           ", zero failures";
}

std::string c9() {
    const auto t6 = testing::complex_of("torus-6");
    const auto bound = stabilization_bound(6, 2, 3);
    expect(bound == 1, "L0");
    const auto levels = v_space_levels(JetContext::create(t6, el(t6, "A*B*C"), 3, 4), 2);
    for (int L = 2; L <= 4; ++L)
        expect(levels[L].equals(levels[1]), "V^" + std::to_string(L) + " differs from V^1");
    return "L0 = 1, V^{L,2} constant (dimension " + std::to_string(levels[1].dimension()) + ") for L = 1..4";
}

std::string c10() {
    const auto t4 = testing::complex_of("torus-4");
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> degree(0, 4);
    const auto random_of = [&](int r) {
        Element e = Element::zero(t4->model());
        if (r < 0)
            return e;
        for (const auto m : t4->basis(r)->monomials())
            e.add_term(m, coeff(rng));
        return e;
    };
    int in = 0;
    for (int i = 0; i < 50; ++i) {
        const Element mu = random_of(1);
        const int r = degree(rng);
        const Element alpha = i % 2 == 0 && r > 0 ? wedge(mu, random_of(r - 1)) : random_of(r);
        const bool member = v_space(JetContext::create(t4, mu, 1, 3), r).contains(alpha);
        const bool kills = wedge(mu, alpha).is_zero();
        expect(member == kills, "mu = " + format_element(mu) + ", alpha = " + format_element(alpha));
        in += member ? 1 : 0;
    }
    expect(in > 0 && in < 50, "sample does not exercise both sides");
    return "50 pairs, " + std::to_string(in) + " members";
}

} // namespace

int main() {
    configure_threads_from_env();
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"KT Betti numbers", c1},
        {"V^{1,2} along A", c2},
        {"V^{L,2} along A for L >= 2", c3},
        {"max_jet(BT, A) = 1", c4},
        {"KT hypersurface scan", c5},
        {"A*C t^2 exact in D^2_A", c6},
        {"inductive vs direct oracle", c7},
        {"property suite", c8},
        {"degree-bound stabilization", c9},
        {"torus law", c10},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            detail = criteria[i].second();
            ok = true;
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " - "
                  << detail << " (" << ms << " ms)" << std::endl;
        failed += ok ? 0 : 1;
    }
    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
              << total << " ms" << std::endl;
    return failed == 0 ? 0 : 1;
}
