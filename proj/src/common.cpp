#include "sdepth/errors.hpp"
#include "sdepth/rational.hpp"

#include <charconv>
#include <limits>

namespace sdepth {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Input: return "input_error";
    case ErrorCode::Degeneracy: return "degeneracy_error";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::ExtractionExhausted: return "extraction_exhausted";
    }
    return "unknown";
}

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view whole = text;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), whole);
        const auto den = parse_int(text.substr(slash + 1), whole);
        if (den == 0)
            throw InputError("zero denominator in '" + std::string(whole) + "'");
        return Rational(num, den);
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    std::string digits(text.substr(0, dot));
    std::int64_t den = 1;
    if (dot != std::string_view::npos) {
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 17)
            throw InputError("too many decimal places in '" + std::string(whole) + "'");
        digits += frac;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
    }
    if (digits.empty())
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    const auto num = parse_int(digits, whole);
    return Rational(negative ? -num : num, den);
}

std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace sdepth
