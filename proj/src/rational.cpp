#include "minorlab/rational.hpp"

#include <stdexcept>

namespace minorlab {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational: " + text);
    }
}

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

BigInt rational_ceil(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q = num / den; // truncates toward zero
    if (num > 0 && q * den != num) ++q;
    return q;
}

BigInt rational_floor(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("value out of uint64 range");
    return v.convert_to<std::uint64_t>();
}

} // namespace minorlab
