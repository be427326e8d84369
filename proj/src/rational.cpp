#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/errors.hpp"

namespace riordan {

Rational rat(long num, long den) {
    if (den == 0)
        throw Error(errc::division_by_zero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat(const Int& num, const Int& den) {
    if (den == 0)
        throw Error(errc::division_by_zero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat_from_string(const std::string& text) {
    bool ok = !text.empty();
    size_t i = 0;
    if (ok && (text[0] == '-' || text[0] == '+')) i = 1;
    bool saw_digit = false, saw_slash = false;
    for (size_t j = i; ok && j < text.size(); ++j) {
        if (std::isdigit(static_cast<unsigned char>(text[j]))) {
            saw_digit = true;
        } else if (text[j] == '/' && !saw_slash && saw_digit) {
            saw_slash = true;
            saw_digit = false;
        } else {
            ok = false;
        }
    }
    if (!ok || !saw_digit)
        throw Error(errc::syntax_error, "malformed rational literal `" + text + "`");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error(errc::syntax_error, "malformed rational literal `" + text + "`");
    if (r.get_den() == 0)
        throw Error(errc::division_by_zero, "rational with zero denominator");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace riordan
