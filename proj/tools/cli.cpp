#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <new>

#include "CLI11.hpp"

#include "jetob/deformability.hpp"
#include "jetob/expression.hpp"
#include "jetob/model_io.hpp"
#include "jetob/property_suite.hpp"
#include "jetob/report.hpp"

namespace jetob {

namespace {

struct Options {
    std::string model_path;
    std::string builtin_name;
    std::string format = "human";
    bool geometric = false;
    int max_generators = kMaxGeneratorsDefault;

    std::optional<int> degree;
    std::optional<int> k;
    std::optional<int> codim;
    std::string eta;
    std::string alpha;
    std::string pd;
    std::string jet;
    int cutoff = kDefaultCutoff;
    int height = 3;
    bool witness = false;
    bool expect_pass = false;
    std::uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--model", o.model_path, "model file");
    sub->add_option("--builtin", o.builtin_name, "builtin model (" + [] {
        std::string s;
        for (const auto& n : builtin_names())
            s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + ")");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}));
    sub->add_flag("--geometric", o.geometric, "the model is a model of a closed oriented manifold");
    sub->add_option("--max-generators", o.max_generators, "generator limit for model files");
}

ModelPtr load(const Options& o) {
    if (o.model_path.empty() == o.builtin_name.empty())
        fail(ErrorKind::Usage, "give exactly one of --model and --builtin");
    if (o.max_generators < 1 || o.max_generators > kMaxGeneratorsHard)
        fail(ErrorKind::Usage, "--max-generators must lie in 1.." + std::to_string(kMaxGeneratorsHard));
    if (!o.builtin_name.empty())
        return builtin(o.builtin_name);
    return load_model_file(o.model_path, ParseOptions{o.max_generators});
}

Element expr(const ComplexPtr& c, const std::string& text, const char* flag) {
    if (text.empty())
        fail(ErrorKind::Usage, std::string(flag) + " is required");
    try {
        return parse_element(c->model(), text);
    } catch (const Error& e) {
        fail(e.kind(), std::string(flag) + ": " + e.what());
    }
}

int jet_level(const std::string& text) {
    if (text.empty())
        fail(ErrorKind::Usage, "--jet is required");
    if (text == "inf" || text == "infinity")
        return kInfiniteLevel;
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v >= 0)
            return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::Usage, "--jet expects a non-negative integer or inf, got '" + text + "'");
}

// Degree of a homogeneous element, falling back to a flag for zero.
int degree_or(const Element& e, std::optional<int> flag, int fallback, const char* what) {
    if (!e.is_homogeneous())
        fail(ErrorKind::Degree, std::string(what) + " " + format_element(e) + " is not homogeneous");
    if (const auto d = e.degree())
        return *d;
    if (flag)
        return *flag;
    if (fallback < 0)
        fail(ErrorKind::Degree, std::string(what) + " is zero; give its degree explicitly");
    return fallback;
}

void emit(std::ostream& out, const Options& o, const Json& json, const std::string& human) {
    if (o.format == "json")
        out << json.dump(2) << '\n';
    else
        out << human;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    if (o.degree && (*o.degree < 0 || *o.degree > c->top_degree()))
        fail(ErrorKind::Range, "--degree must lie in 0.." + std::to_string(c->top_degree()));
    emit(out, o, cohomology_json(*c, o.degree), cohomology_human(*c, o.degree));
    return kExitOk;
}

int cmd_vspace(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    const Element eta = expr(c, o.eta, "--eta");
    if (!o.degree)
        fail(ErrorKind::Usage, "--degree is required");
    const int k = degree_or(eta, o.k, 1, "eta");
    const int level = jet_level(o.jet);
    const auto ctx = JetContext::create(c, eta, k, level);
    int resolved = level;
    if (level == kInfiniteLevel) {
        const auto bound = stabilization_bound(c->top_degree(), *o.degree, k);
        if (!bound)
            fail(ErrorKind::Range, "--jet inf has no finite reduction for k = 1; give a finite level");
        resolved = *bound;
    }
    VSpaceResult r{eta, k, *o.degree, level, resolved, v_space(ctx, *o.degree), c->cohomology(*o.degree).dimension()};
    emit(out, o, vspace_json(r), vspace_human(r));
    return kExitOk;
}

int cmd_jets(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    const Element alpha = expr(c, o.alpha, "--alpha");
    const Element eta = expr(c, o.eta, "--eta");
    MaxJetOptions opts{o.degree, o.k, o.geometric, {}};
    const DeformabilityVerdict v = max_jet(c, alpha, eta, o.cutoff, opts);
    Json json{{"command", "jets"}};
    json.update(verdict_json(v, o.witness));
    emit(out, o, json, verdict_human(v, o.witness));
    return o.expect_pass && v.max_level ? kExitAssertion : kExitOk;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    const Element alpha = expr(c, o.alpha, "--alpha");
    const Element pd = expr(c, o.pd, "--pd");
    const ChecklistOptions opts{o.degree, o.codim, o.geometric, {}};
    const ObstructionChecklist list = theorem_checklist(c, alpha, pd, o.cutoff, opts);
    Json json{{"command", "obstruct"}};
    json.update(checklist_json(list, o.witness));
    emit(out, o, json, checklist_human(list, o.witness));
    return o.expect_pass && list.conclusion.kind == ConclusionKind::Obstructed ? kExitAssertion : kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    const Element alpha = expr(c, o.alpha, "--alpha");
    if (!o.codim)
        fail(ErrorKind::Usage, "--codim is required");
    ScanOptions opts;
    opts.height = o.height;
    opts.geometric = o.geometric;
    opts.alpha_degree = o.degree;
    const ScanReport report = scan(c, alpha, *o.codim, o.cutoff, opts);
    emit(out, o, scan_json(report), scan_human(report));
    return o.expect_pass && report.passing == 0 ? kExitAssertion : kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const ComplexPtr c = CochainComplex::create(load(o));
    const PropertyReport report = run_property_suite(c, o.seed, o.trials);
    Json props = Json::array();
    std::ostringstream human;
    human << "property suite on " << report.model << ": " << report.trials << " trials, seed " << report.seed << "\n";
    human << "property                      checked  failed\n";
    for (const auto& p : report.properties) {
        Json entry{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}};
        entry["first_failure"] = p.first_failure ? Json(*p.first_failure) : Json(nullptr);
        props.push_back(std::move(entry));
        std::string row = p.name;
        row.resize(std::max<std::size_t>(row.size() + 1, 30), ' ');
        human << row << std::setw(7) << p.checked << std::setw(8) << p.failed << "\n";
    }
    for (const auto& p : report.properties)
        if (p.first_failure)
            human << "FAILED " << p.name << ": " << *p.first_failure << "\n";
    human << (report.ok() ? "all properties hold\n" : std::to_string(report.failures()) + " failures\n");
    const Json json{{"command", "check"}, {"model", report.model}, {"seed", report.seed},
                    {"trials", report.trials}, {"ok", report.ok()}, {"failures", report.failures()},
                    {"properties", props}};
    emit(out, o, json, human.str());
    return report.ok() ? kExitOk : kExitAssertion;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact jet-deformability obstructions for finite dg-algebra models", "jet_obstruct"};
    app.require_subcommand(1);
    Options o;

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and cohomology bases");
    add_common(cohomology, o);
    cohomology->add_option("--degree", o.degree, "only this degree");

    auto* vspace = app.add_subcommand("vspace", "basis of the jet deformability subspace V^{L,r}");
    add_common(vspace, o);
    vspace->add_option("--eta", o.eta, "closed direction")->required();
    vspace->add_option("--degree", o.degree, "degree r")->required();
    vspace->add_option("--jet", o.jet, "jet level L, or inf")->required();
    vspace->add_option("--k", o.k, "degree of eta when eta is zero");

    auto* jets = app.add_subcommand("jets", "largest jet level at which alpha deforms along eta");
    add_common(jets, o);
    jets->add_option("--alpha", o.alpha, "closed class")->required();
    jets->add_option("--eta", o.eta, "closed direction")->required();
    jets->add_option("--cutoff", o.cutoff, "largest level to test");
    jets->add_option("--degree", o.degree, "degree of alpha when alpha is zero");
    jets->add_option("--k", o.k, "degree of eta when eta is zero");
    jets->add_flag("--witness", o.witness, "print the witness sequence");
    jets->add_flag("--expect-pass", o.expect_pass, "exit 1 when the level is finite");

    auto* obstruct = app.add_subcommand("obstruct", "evaluate the three obstruction bullets");
    add_common(obstruct, o);
    obstruct->add_option("--alpha", o.alpha, "closed class of degree r")->required();
    obstruct->add_option("--pd", o.pd, "candidate Poincare dual, degree k")->required();
    obstruct->add_option("--cutoff", o.cutoff, "largest level to test");
    obstruct->add_option("--degree", o.degree, "degree of alpha when alpha is zero");
    obstruct->add_option("--codim", o.codim, "degree of pd when pd is zero");
    obstruct->add_flag("--witness", o.witness, "print witness sequences");
    obstruct->add_flag("--expect-pass", o.expect_pass, "exit 1 when an obstruction is found");

    auto* scan_cmd = app.add_subcommand("scan", "test every direction of the cup kernel");
    add_common(scan_cmd, o);
    scan_cmd->add_option("--alpha", o.alpha, "closed class")->required();
    scan_cmd->add_option("--codim", o.codim, "codimension k")->required();
    scan_cmd->add_option("--cutoff", o.cutoff, "largest level to test");
    scan_cmd->add_option("--height", o.height, "height of the rational sample grid")->check(CLI::Range(1, 20));
    scan_cmd->add_option("--degree", o.degree, "degree of alpha when alpha is zero");
    scan_cmd->add_flag("--expect-pass", o.expect_pass, "exit 1 when no direction passes");

    auto* check = app.add_subcommand("check", "randomized property suite");
    add_common(check, o);
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--trials", o.trials, "number of trials")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (o.cutoff < 0)
            fail(ErrorKind::Usage, "--cutoff must be non-negative");
        if (*cohomology)
            return cmd_cohomology(o, out);
        if (*vspace)
            return cmd_vspace(o, out);
        if (*jets)
            return cmd_jets(o, out);
        if (*obstruct)
            return cmd_obstruct(o, out);
        if (*scan_cmd)
            return cmd_scan(o, out);
        return cmd_check(o, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return e.kind() == ErrorKind::Resource ? kExitResource : kExitInput;
    } catch (const std::bad_alloc&) {
        err << "error (resource): out of memory\n";
        return kExitResource;
    }
}

} // namespace jetob
