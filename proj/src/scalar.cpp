#include "su12/scalar.hpp"

#include "su12/errors.hpp"

#include <cctype>
#include <ostream>

namespace su12 {

Scalar::Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
}

Rational Scalar::norm() const
{
    Rational result = a_ * a_ - 2 * b_ * b_;
    return result;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw NonUnit("inverse of zero scalar");
    }
    const Rational n = norm();
    return Scalar(Rational(a_ / n), Rational(-b_ / n));
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r, r = sqrt 2
    Rational a = a_ * rhs.a_ + 2 * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    return *this *= rhs.inverse();
}

std::string Scalar::to_string() const
{
    if (is_rational()) {
        return a_.get_str();
    }
    std::string irr;
    if (b_ == 1) {
        irr = "sqrt2";
    } else if (b_ == -1) {
        irr = "-sqrt2";
    } else {
        irr = b_.get_str() + "*sqrt2";
    }
    if (sgn(a_) == 0) {
        return irr;
    }
    return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + irr;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole)
{
    if (text.empty()) {
        throw ParseError("empty rational in scalar \"" + std::string(whole) + "\"");
    }
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        i = 1;
    }
    bool seen_digit = false;
    bool seen_slash = false;
    bool digit_after_slash = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            seen_digit = true;
            if (seen_slash) {
                digit_after_slash = true;
            }
        } else if (ch == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
        } else {
            throw ParseError("malformed rational \"" + std::string(text) + "\" in scalar \"" + std::string(whole) + "\"");
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw ParseError("malformed rational \"" + s + "\"");
    }
    if (sgn(q.get_den()) == 0) {
        throw ParseError("zero denominator in \"" + s + "\"");
    }
    q.canonicalize();
    return q;
}

// Coefficient of sqrt2 from a term like "3/4*sqrt2", "sqrt2", "-sqrt2".
Rational parse_sqrt2_term(std::string_view term, std::string_view whole)
{
    constexpr std::string_view suffix = "sqrt2";
    std::string_view head = term.substr(0, term.size() - suffix.size());
    if (head.empty() || head == "+") {
        return Rational(1);
    }
    if (head == "-") {
        return Rational(-1);
    }
    if (head.back() != '*') {
        throw ParseError("malformed sqrt2 term in scalar \"" + std::string(whole) + "\"");
    }
    head.remove_suffix(1);
    return parse_rational(head, whole);
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compact += ch;
        }
    }
    const std::string_view s(compact);
    if (s.empty()) {
        throw ParseError("empty scalar");
    }
    if (!s.ends_with("sqrt2")) {
        return Scalar(parse_rational(s, text));
    }
    // Split at the sign that starts the sqrt2 term; a leading sign belongs to
    // the first term.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '/' && s[i - 1] != '*') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return Scalar(Rational(0), parse_sqrt2_term(s, text));
    }
    std::string_view first = s.substr(0, split);
    std::string_view second = s.substr(split);
    if (second.size() > 1 && second[0] == '+' && (second[1] == '-' || second[1] == '+')) {
        second.remove_prefix(1);
    }
    return Scalar(parse_rational(first, text), parse_sqrt2_term(second, text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& x)
{
    return os << x.to_string();
}

} // namespace su12
