#include "crsym/rational.hpp"

#include <cctype>

namespace crsym {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw SpecError("empty rational literal");
    size_t pos = 0;
    auto take_int = [&]() -> std::string {
        std::string out;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) out += text[pos++];
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        if (pos == start) throw SpecError("malformed rational literal \"" + text +
                                          "\": expected integer digits");
        return out;
    };
    std::string num = take_int();
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw SpecError("malformed rational literal \"" + text +
                            "\": only exact \"p/q\" values are accepted "
                            "(decimals and irrational values are out of scope)");
        ++pos;
        den = take_int();
        if (pos != text.size())
            throw SpecError("malformed rational literal \"" + text + "\"");
    }
    mpz_class n(num), d(den);
    if (d == 0) throw SpecError("rational literal \"" + text + "\" has zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::string to_string(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re() != 0) out += rational_str(z.re());
    if (z.im() != 0) {
        if (z.im() > 0 && !out.empty()) out += "+";
        if (z.im() == -1)
            out += "-";
        else if (z.im() != 1)
            out += rational_str(z.im());
        out += "i";
    }
    return out;
}

}  // namespace crsym
