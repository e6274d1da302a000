#pragma once

#include <string>

#include "jetob/deformability.hpp"
#include "jetob/expression.hpp"
#include "jetob/model_io.hpp"

namespace testing {

inline jetob::ComplexPtr complex_of(const std::string& name) {
    return jetob::CochainComplex::create(jetob::builtin(name));
}

inline const jetob::ComplexPtr& kt() {
    static const jetob::ComplexPtr c = complex_of("kodaira-thurston");
    return c;
}

inline jetob::Element el(const jetob::ComplexPtr& c, const std::string& text) {
    return jetob::parse_element(c->model(), text);
}

inline std::string data_path(const std::string& file) { return std::string(JETOB_TEST_DATA) + "/" + file; }

/// Same subspace of H^r as the span of the given expressions.
inline bool spans(const jetob::ComplexPtr& c, const jetob::CohomologySubspace& v,
                  std::initializer_list<const char*> exprs) {
    std::vector<jetob::Element> reps;
    for (const char* e : exprs)
        reps.push_back(el(c, e));
    const auto& h = c->cohomology(v.degree());
    const jetob::CohomologySubspace expected(h.basis(), h.relations(), reps);
    return expected.dimension() == reps.size() && v.equals(expected);
}

} // namespace testing
