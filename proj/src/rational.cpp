#include "tinsep/rational.hpp"

#include "tinsep/errors.hpp"

#include <cctype>

namespace tinsep {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InputError("not a rational number: \"" + std::string(whole) + "\"");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InputError("empty rational number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw InputError("not a rational number: \"" + std::string(text) + "\"");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part))
            || (!frac_part.empty() && !all_digits(frac_part))) {
            throw InputError("not a rational number: \"" + std::string(text) + "\"");
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part), 10);
        Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part), 10);
        Integer num = whole * scale + frac;
        if (negative) num = -num;
        Rational r(num, scale);
        r.canonicalize();
        return r;
    }

    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_rational(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Integer floor(const Rational& value)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

}  // namespace tinsep
