#ifndef VERTEXLAB_RATIONAL_HPP
#define VERTEXLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace vertexlab {

/// Exact rational scalar. All engine arithmetic goes through this type;
/// there is no floating point anywhere in the computation paths.
///
/// The backing store keeps the canonical form (gcd(num, den) = 1, den > 0)
/// at all times.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den) : v_(num) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ /= den;
    }

    static Rational parse(const std::string& s);

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// Canonical "num/den" form, e.g. "3/2", "-1/3", "5/1".
    std::string to_fraction_string() const;
    /// Human form: integers print without the "/1".
    std::string str() const;

private:
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient C(n, j) for integer n (possibly negative)
/// and j >= 0, computed as n(n-1)...(n-j+1)/j!. Always an integer.
Rational binomial(long n, long j);

} // namespace vertexlab

#endif
