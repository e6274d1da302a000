#include "jetob/report.hpp"

#include <sstream>

#include "jetob/expression.hpp"

namespace jetob {

namespace {

Json element_list(const std::vector<Element>& xs) {
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(format_element(x));
    return out;
}

std::string join(const std::vector<Element>& xs) {
    if (xs.empty())
        return "(none)";
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : ", ") + format_element(x);
    return out;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
    return x ? Json(*x) : Json(nullptr);
}

std::string level_text(int level) { return level == kInfiniteLevel ? "inf" : std::to_string(level); }

std::string conclusion_text(const Conclusion& c) {
    if (c.kind != ConclusionKind::Obstructed)
        return to_string(c.kind);
    return "OBSTRUCTED (level " + std::to_string(c.level) + ", bullet " + std::to_string(c.bullet) + ")";
}

} // namespace

Json model_json(const DgaModel& model) {
    Json gens = Json::array();
    for (const auto& g : model.generators())
        gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    return Json{{"label", model.label()}, {"generators", gens}, {"top_degree", model.top_degree()}};
}

Json subspace_json(const CohomologySubspace& s) {
    return Json{{"degree", s.degree()}, {"dimension", s.dimension()}, {"basis", element_list(s.representatives())}};
}

Json cohomology_json(const CochainComplex& complex, std::optional<int> degree) {
    Json degrees = Json::array();
    for (int r = 0; r <= complex.top_degree(); ++r) {
        if (degree && *degree != r)
            continue;
        degrees.push_back(subspace_json(complex.cohomology(r)));
    }
    Json out{{"command", "cohomology"}, {"model", model_json(*complex.model())}};
    if (!degree)
        out["betti"] = complex.betti_numbers();
    out["degrees"] = degrees;
    return out;
}

std::string cohomology_human(const CochainComplex& complex, std::optional<int> degree) {
    std::ostringstream out;
    const DgaModel& m = *complex.model();
    out << "model " << m.label() << " (" << m.generator_count() << " generators, top degree " << m.top_degree()
        << ")\n";
    if (!degree) {
        out << "betti numbers:";
        for (const int b : complex.betti_numbers())
            out << ' ' << b;
        out << '\n';
    }
    out << "degree  dim  basis\n";
    for (int r = 0; r <= m.top_degree(); ++r) {
        if (degree && *degree != r)
            continue;
        const auto& h = complex.cohomology(r);
        out << r << std::string(8 - std::to_string(r).size(), ' ') << h.dimension()
            << std::string(5 - std::min<std::size_t>(4, std::to_string(h.dimension()).size()), ' ')
            << join(h.representatives()) << '\n';
    }
    return out.str();
}

Json vspace_json(const VSpaceResult& r) {
    Json out{{"command", "vspace"},
             {"eta", format_element(r.eta)},
             {"k", r.k},
             {"degree", r.degree},
             {"jet", r.level == kInfiniteLevel ? Json("inf") : Json(r.level)},
             {"computed_level", r.resolved_level},
             {"ambient_dimension", r.ambient_dimension}};
    out["dimension"] = r.v.dimension();
    out["basis"] = element_list(r.v.representatives());
    return out;
}

std::string vspace_human(const VSpaceResult& r) {
    std::ostringstream out;
    out << "V^{" << level_text(r.level) << "," << r.degree << "} along eta = " << format_element(r.eta)
        << " (k = " << r.k << ")";
    if (r.level == kInfiniteLevel)
        out << ", computed at level " << r.resolved_level;
    out << "\n";
    out << "dimension " << r.v.dimension() << " of " << r.ambient_dimension << "\n";
    out << "basis: " << join(r.v.representatives()) << "\n";
    return out.str();
}

std::string verdict_result(const DeformabilityVerdict& v) {
    if (v.max_level)
        return "MAX_LEVEL";
    if (v.stabilized || v.infinite_by_shortcut)
        return "INFINITE";
    return "AT_LEAST_CUTOFF";
}

Json verdict_json(const DeformabilityVerdict& v, bool witness) {
    Json out{{"alpha", format_element(v.alpha)},
             {"eta", format_element(v.mu)},
             {"degree", v.degree},
             {"k", v.k},
             {"result", verdict_result(v)},
             {"max_level", optional_json(v.max_level)},
             {"cutoff", v.cutoff},
             {"requested_cutoff", v.requested_cutoff},
             {"stabilized", v.stabilized},
             {"infinite_by_shortcut", v.infinite_by_shortcut},
             {"certified_missing_level", optional_json(v.certified_missing_level)},
             {"stable_streak", v.stable_streak}};
    if (witness && !v.witnesses.empty()) {
        const auto& w = v.witnesses.back();
        out["witness"] = Json{{"level", w.size() - 1}, {"coefficients", element_list(w)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

std::string verdict_human(const DeformabilityVerdict& v, bool witness) {
    std::ostringstream out;
    out << "alpha = " << format_element(v.alpha) << " (degree " << v.degree << ") along eta = "
        << format_element(v.mu) << " (k = " << v.k << ")\n";
    const std::string result = verdict_result(v);
    if (result == "MAX_LEVEL")
        out << "max jet level: " << *v.max_level << " (not in V^" << *v.certified_missing_level << ")\n";
    else if (result == "INFINITE")
        out << "max jet level: infinity"
            << (v.infinite_by_shortcut ? " (rational top-degree shortcut)" : " (degree bound reached at level " +
                                                                                  std::to_string(v.cutoff) + ")")
            << "\n";
    else
        out << "max jet level: at least " << v.cutoff << " (cutoff; no degree bound applies)\n";
    if (v.cutoff != v.requested_cutoff)
        out << "cutoff " << v.requested_cutoff << " adjusted to " << v.cutoff << "\n";
    if (witness && !v.witnesses.empty()) {
        const auto& w = v.witnesses.back();
        out << "witness at level " << w.size() - 1 << ":\n";
        for (std::size_t j = 0; j < w.size(); ++j)
            out << "  t^" << j << ": " << format_element(w[j]) << "\n";
    }
    return out.str();
}

Json checklist_json(const ObstructionChecklist& c, bool witness) {
    Json out{{"alpha", format_element(c.alpha)},
             {"pd", format_element(c.pd)},
             {"r", c.r},
             {"k", c.k},
             {"cup_ok", c.cup_ok},
             {"cup_product", format_element(c.cup.product)},
             {"trivial", c.trivial},
             {"conclusion", to_string(c.conclusion.kind)}};
    const bool obstructed = c.conclusion.kind == ConclusionKind::Obstructed;
    out["obstruction_level"] = obstructed ? Json(c.conclusion.level) : Json(nullptr);
    out["obstruction_bullet"] = obstructed ? Json(c.conclusion.bullet) : Json(nullptr);
    out["alpha_along_pd"] = c.alpha_along_pd ? verdict_json(*c.alpha_along_pd, witness) : Json(nullptr);
    out["pd_along_alpha"] = c.pd_along_alpha ? verdict_json(*c.pd_along_alpha, witness) : Json(nullptr);
    return out;
}

std::string checklist_human(const ObstructionChecklist& c, bool witness) {
    std::ostringstream out;
    out << "alpha = " << format_element(c.alpha) << " (r = " << c.r << "), pd = " << format_element(c.pd)
        << " (k = " << c.k << ")\n";
    if (c.trivial) {
        out << "a class vanishes; every bullet holds trivially\n";
    } else {
        out << "bullet 3 (cup product): " << (c.cup_ok ? "ok" : "fails") << ", pd ^ alpha = "
            << format_element(c.cup.product) << "\n";
        const auto bullet = [&](const char* title, const std::optional<DeformabilityVerdict>& v, const char* why) {
            out << title;
            if (!v) {
                out << "not applicable (" << why << ")\n";
                return;
            }
            out << "\n";
            std::istringstream lines(verdict_human(*v, witness));
            for (std::string line; std::getline(lines, line);)
                out << "  " << line << "\n";
        };
        bullet("bullet 1 (alpha along pd): ", c.alpha_along_pd, "k even");
        bullet("bullet 2 (pd along alpha): ", c.pd_along_alpha, "r even");
    }
    out << "conclusion: " << conclusion_text(c.conclusion) << "\n";
    return out.str();
}

Json scan_json(const ScanReport& s) {
    Json dirs = Json::array();
    for (const auto& d : s.directions) {
        Json coords = Json::array();
        for (const auto& x : d.kernel_coordinates)
            coords.push_back(format_scalar(x));
        Json entry{{"mu", format_element(d.mu)}, {"coordinates", coords}};
        const Json checklist = checklist_json(d.checklist, false);
        for (const auto& [key, value] : checklist.items())
            if (key != "alpha" && key != "pd")
                entry[key] = value;
        dirs.push_back(std::move(entry));
    }
    return Json{{"command", "scan"},
                {"alpha", format_element(s.alpha)},
                {"r", s.r},
                {"codim", s.k},
                {"cutoff", s.cutoff},
                {"height", s.height},
                {"cup_kernel", subspace_json(s.kernel)},
                {"exhaustive", s.exhaustive},
                {"truncated", s.truncated},
                {"directions", dirs},
                {"passing", s.passing},
                {"obstruction_level", optional_json(s.obstruction_level)},
                {"summary", s.summary},
                {"geometric_summary", optional_json(s.geometric_summary)}};
}

std::string scan_human(const ScanReport& s) {
    std::ostringstream out;
    out << "scan of alpha = " << format_element(s.alpha) << " (r = " << s.r << ") in codimension " << s.k
        << ", cutoff " << s.cutoff << "\n";
    out << "cup kernel (dimension " << s.kernel.dimension() << "): " << join(s.kernel.representatives()) << "\n";
    if (!s.directions.empty()) {
        out << "direction                     conclusion\n";
        for (const auto& d : s.directions) {
            const std::string mu = format_element(d.mu);
            out << mu << std::string(mu.size() < 30 ? 30 - mu.size() : 1, ' ')
                << conclusion_text(d.checklist.conclusion) << "\n";
        }
    }
    out << "summary: " << s.summary << "\n";
    if (s.geometric_summary)
        out << "geometric: " << *s.geometric_summary << "\n";
    return out.str();
}

} // namespace jetob
