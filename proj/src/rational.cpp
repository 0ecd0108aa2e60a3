#include "sflow/rational.hpp"

#include <cctype>

#include "sflow/errors.hpp"

namespace sflow {

namespace {

Integer parse_integer_token(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits in '" + text + "'");
    for (size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("invalid rational literal '" + text + "'");
        }
    }
    return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer_token(text));
    }
    Integer num = parse_integer_token(text.substr(0, slash));
    Integer den = parse_integer_token(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::vector<Rational> parse_rational_vector(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_rational(t));
    return out;
}

std::vector<std::string> format_rational_vector(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace sflow
