#include "jetob/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "jetob/expression.hpp"

namespace jetob {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void line_error(ErrorKind kind, int line, const std::string& what) {
    fail(kind, "line " + std::to_string(line) + ": " + what);
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (const char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

int parse_int(const std::string& s, int line, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    line_error(ErrorKind::Parse, line, std::string("expected an integer ") + what + ", got '" + s + "'");
}

struct PendingDifferential {
    int line;
    std::string text;
};

} // namespace

ModelPtr parse_model(std::string_view text, const ParseOptions& options) {
    std::string label = "unnamed";
    ModelMetadata meta;
    std::vector<Generator> gens;
    std::vector<int> gen_lines;
    std::map<std::string, PendingDifferential> diffs;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string content = trim(raw);
        if (content.empty())
            continue;
        std::istringstream words(content);
        std::string keyword;
        words >> keyword;
        std::string rest;
        std::getline(words, rest);
        rest = trim(rest);

        if (keyword == "dga") {
            if (rest.empty())
                line_error(ErrorKind::Parse, line, "dga needs a label");
            label = rest;
        } else if (keyword == "manifold-dim") {
            meta.manifold_dim = parse_int(rest, line, "manifold dimension");
        } else if (keyword == "oriented" || keyword == "oriented:") {
            if (rest != "yes" && rest != "no")
                line_error(ErrorKind::Parse, line, "oriented must be yes or no");
            meta.oriented = rest == "yes";
        } else if (keyword == "provenance") {
            meta.provenance = rest;
        } else if (keyword == "generator") {
            std::istringstream parts(rest);
            std::string name, degree_text, extra;
            parts >> name >> degree_text >> extra;
            if (!is_identifier(name) || degree_text.empty() || !extra.empty())
                line_error(ErrorKind::Parse, line, "expected 'generator <name> <degree>'");
            const int degree = parse_int(degree_text, line, "degree");
            if (degree <= 0 || degree % 2 == 0)
                line_error(ErrorKind::UnsupportedDegree, line,
                           "generator " + name + " has degree " + std::to_string(degree) +
                               "; only positive odd degrees are supported");
            for (const auto& g : gens)
                if (g.name == name)
                    line_error(ErrorKind::Parse, line, "duplicate generator " + name);
            if (static_cast<int>(gens.size()) >= options.max_generators)
                line_error(ErrorKind::Resource, line,
                           "more than " + std::to_string(options.max_generators) +
                               " generators (raise the limit with --max-generators, at most " +
                               std::to_string(kMaxGeneratorsHard) + ")");
            gens.push_back(Generator{name, degree, static_cast<int>(gens.size())});
            gen_lines.push_back(line);
        } else if (keyword == "d") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos)
                line_error(ErrorKind::Parse, line, "expected 'd <name> = <expression>'");
            const std::string name = trim(std::string_view(rest).substr(0, eq));
            if (!is_identifier(name))
                line_error(ErrorKind::Parse, line, "malformed generator name '" + name + "'");
            if (diffs.contains(name))
                line_error(ErrorKind::Parse, line, "second differential for " + name);
            diffs.emplace(name, PendingDifferential{line, trim(std::string_view(rest).substr(eq + 1))});
        } else {
            line_error(ErrorKind::Parse, line, "unknown keyword '" + keyword + "'");
        }
    }

    // Expressions are parsed once every generator is known.
    const ModelPtr names_only =
        DgaModel::create(label, gens, std::vector<TermMap>(gens.size()), meta);
    std::vector<TermMap> images(gens.size());
    for (const auto& [name, pending] : diffs) {
        const auto index = names_only->find_generator(name);
        if (!index)
            line_error(ErrorKind::UnknownGenerator, pending.line, "differential of undeclared generator " + name);
        try {
            images[*index] = parse_element(names_only, pending.text).terms();
        } catch (const Error& e) {
            line_error(e.kind(), pending.line, e.what());
        }
    }
    ModelPtr model = DgaModel::create(label, std::move(gens), std::move(images), std::move(meta));
    const ValidationReport report = validate_model(model);
    if (!report.valid) {
        if (report.generator) {
            const auto& g = model->generators()[*report.generator];
            const auto it = diffs.find(g.name);
            const int where = it != diffs.end() ? it->second.line : gen_lines[*report.generator];
            line_error(*report.kind, where, report.message);
        }
        fail(*report.kind, report.message);
    }
    return model;
}

ModelPtr load_model_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Usage, "cannot open model file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model(buf.str(), options);
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.what());
    }
}

std::string format_model(const DgaModel& model) {
    std::ostringstream out;
    out << "dga " << model.label() << '\n';
    const auto& meta = model.metadata();
    if (meta.manifold_dim)
        out << "manifold-dim " << *meta.manifold_dim << '\n';
    if (meta.oriented)
        out << "oriented " << (*meta.oriented ? "yes" : "no") << '\n';
    if (!meta.provenance.empty())
        out << "provenance " << meta.provenance << '\n';
    for (const auto& g : model.generators())
        out << "generator " << g.name << ' ' << g.degree << '\n';
    // A throwaway handle so the images can be rendered as Elements.
    const ModelPtr view(std::shared_ptr<const DgaModel>{}, &model);
    for (const auto& g : model.generators()) {
        const TermMap& d = model.differential_of(g.index);
        if (!d.empty())
            out << "d " << g.name << " = " << format_element(Element(view, d)) << '\n';
    }
    return out.str();
}

namespace {

ModelPtr make_torus(int n) {
    static const char* names[] = {"A", "B", "C", "D", "E", "F"};
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Generator{names[i], 1, i});
    ModelMetadata meta{n, true, "flat " + std::to_string(n) + "-torus; all differentials vanish"};
    return DgaModel::create("torus-" + std::to_string(n), std::move(gens), std::vector<TermMap>(n), meta);
}

ModelPtr make_kodaira_thurston() {
    return parse_model("dga kodaira-thurston\n"
                       "manifold-dim 4\n"
                       "oriented yes\n"
                       "provenance Heisenberg nilmanifold times a circle, left-invariant forms\n"
                       "generator A 1\n"
                       "generator B 1\n"
                       "generator C 1\n"
                       "generator T 1\n"
                       "d C = A*B\n");
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"kodaira-thurston", "torus-2", "torus-3", "torus-4", "torus-6"};
    return names;
}

ModelPtr builtin(std::string_view name) {
    if (name == "kodaira-thurston")
        return make_kodaira_thurston();
    if (name == "torus-2")
        return make_torus(2);
    if (name == "torus-3")
        return make_torus(3);
    if (name == "torus-4")
        return make_torus(4);
    if (name == "torus-6")
        return make_torus(6);
    std::string list;
    for (const auto& n : builtin_names())
        list += (list.empty() ? "" : ", ") + n;
    fail(ErrorKind::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'; available: " + list);
}

bool same_model(const DgaModel& a, const DgaModel& b) {
    if (a.label() != b.label() || a.generator_count() != b.generator_count())
        return false;
    const auto& ma = a.metadata();
    const auto& mb = b.metadata();
    if (ma.manifold_dim != mb.manifold_dim || ma.oriented != mb.oriented || ma.provenance != mb.provenance)
        return false;
    for (int i = 0; i < a.generator_count(); ++i) {
        const auto& ga = a.generators()[i];
        const auto& gb = b.generators()[i];
        if (ga.name != gb.name || ga.degree != gb.degree || a.differential_of(i) != b.differential_of(i))
            return false;
    }
    return true;
}

} // namespace jetob
