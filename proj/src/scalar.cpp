#include "jetob/scalar.hpp"

#include <cctype>

#include "jetob/error.hpp"

namespace jetob {

std::string format_scalar(const Scalar& value) {
    Scalar x = value;
    x.canonicalize();
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-'))
        pos = 1;
    const std::size_t slash = s.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to)
            return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    const bool ok = slash == std::string::npos ? digits(pos, s.size())
                                               : digits(pos, slash) && digits(slash + 1, s.size());
    if (!ok)
        fail(ErrorKind::Parse, "malformed rational '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    Scalar x;
    if (slash != std::string::npos) {
        const mpz_class den(s.substr(s.find('/') + 1));
        if (den == 0)
            fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
        x = Scalar(mpz_class(s.substr(0, s.find('/'))), den);
    } else {
        x = Scalar(mpz_class(s));
    }
    x.canonicalize();
    return x;
}

} // namespace jetob
