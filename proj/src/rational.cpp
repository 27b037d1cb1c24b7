#include "awbench/rational.hpp"

#include <cctype>
#include <ostream>

namespace awbench {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    Rational r;
    r.value_ = mpq_class(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (sgn(r.value_.get_den()) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    r.value_.canonicalize();
    return r;
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace awbench
