#include "jetob/expression.hpp"

#include <cctype>

namespace jetob {

namespace {

class ExpressionParser {
public:
    ExpressionParser(const ModelPtr& model, std::string_view text) : model_(model), text_(text) {}

    Element parse() {
        Element e = expr();
        skip_space();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what, ErrorKind kind = ErrorKind::Parse) const {
        fail(kind, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr() {
        Element acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Element term() {
        Element acc = factor();
        while (accept('*'))
            acc = wedge(acc, factor());
        return acc;
    }

    Element factor() {
        skip_space();
        if (pos_ >= text_.size())
            error("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '-' || c == '+') {
            ++pos_;
            Element f = factor();
            return c == '-' ? -f : f;
        }
        if (c == '(') {
            ++pos_;
            Element e = expr();
            if (!accept(')'))
                error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Element::monomial(model_, Monomial::unit(), number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto index = model_->find_generator(name);
            if (!index) {
                pos_ = start;
                error("unknown generator '" + std::string(name) + "'", ErrorKind::UnknownGenerator);
            }
            return Element::generator(model_, *index);
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    Scalar number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        };
        digits();
        // A '/' directly followed by a digit continues the literal.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            digits();
        }
        return parse_scalar(text_.substr(start, pos_ - start));
    }

    const ModelPtr& model_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(const ModelPtr& model, std::string_view text) {
    return ExpressionParser(model, text).parse();
}

std::string format_monomial(const DgaModel& model, Monomial m) {
    if (m.is_unit())
        return "1";
    std::string out;
    for (const int i : m.factors()) {
        if (!out.empty())
            out += '*';
        out += model.generators()[i].name;
    }
    return out;
}

std::string format_element(const Element& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Scalar magnitude = abs(c);
        if (m.is_unit()) {
            out += format_scalar(magnitude);
        } else {
            if (magnitude != 1)
                out += format_scalar(magnitude) + "*";
            out += format_monomial(*e.model(), m);
        }
    }
    return out;
}

} // namespace jetob
