#include "monointerp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace monointerp {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    auto valid = [](std::string_view digits) {
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            digits.remove_prefix(1);
        }
        if (digits.empty()) {
            return false;
        }
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const auto numerator = text.substr(0, slash);
    if (!valid(numerator)) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    if (slash != std::string_view::npos) {
        const auto denominator = text.substr(slash + 1);
        if (!valid(denominator) || denominator.front() == '-' || denominator.front() == '+') {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
    }
    std::string owned(text);
    if (owned.front() == '+') {
        owned.erase(0, 1);
    }
    Rational value;
    if (value.set_str(owned, 10) != 0 || value.get_den() == 0) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    value.canonicalize();
    return value;
}

bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

double to_double(const Rational& value)
{
    return value.get_d();
}

} // namespace monointerp
