#include "vertexlab/rational.hpp"

#include <ostream>

namespace vertexlab {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    Rational r;
    if (slash == std::string::npos) {
        r.v_ = boost::multiprecision::cpp_rational(Int(s));
    } else {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
        r.v_ = boost::multiprecision::cpp_rational(num, den);
    }
    return r;
}

std::string Rational::to_fraction_string() const {
    return num().str() + "/" + den().str();
}

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long j) {
    if (j < 0) return Rational(0);
    Rational acc(1);
    for (long i = 0; i < j; ++i) {
        acc *= Rational(n - i);
        acc /= Rational(i + 1);
    }
    return acc;
}

} // namespace vertexlab
