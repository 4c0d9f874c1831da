#include "setfn/rational.hpp"

#include <cctype>

#include "setfn/error.hpp"

namespace setfn {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational make_rational(long long numerator, long long denominator) {
    if (denominator == 0) throw Error("rational: zero denominator");
    return Rational(BigInt(numerator), BigInt(denominator));
}

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw Error("rational: malformed value '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw Error("rational: zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string render_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace setfn
