#ifndef VERTEXLAB_BIPOLY_HPP
#define VERTEXLAB_BIPOLY_HPP

#include "vertexlab/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace vertexlab {

/// Sparse bivariate polynomial in the bracket index symbols (m, n), with
/// exact rational coefficients. Used for structure-constant rules like
/// (m^3 - m)/12.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (deg_m, deg_n)

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    static BiPoly var_m() { BiPoly p; p.terms_[{1, 0}] = Rational(1); return p; }
    static BiPoly var_n() { BiPoly p; p.terms_[{0, 1}] = Rational(1); return p; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(int dm, int dn, const Rational& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly pow(long e) const;
    BiPoly scaled(const Rational& c) const;

    Rational eval(long m, long n) const;

    /// Swaps the roles of m and n (used when a bracket rule is applied with
    /// its arguments in the opposite order).
    BiPoly swapped_vars() const;

    std::string str(const std::string& mname = "m", const std::string& nname = "n") const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Key, Rational> terms_;
};

/// Affine integer form  a*m + b*n + c  (target indices, degree functions,
/// Kronecker constraints are all of this shape).
struct AffineForm {
    long cm = 0;
    long cn = 0;
    long c0 = 0;

    long eval(long m, long n) const { return cm * m + cn * n + c0; }
    AffineForm swapped_vars() const { return {cn, cm, c0}; }
    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.cm == b.cm && a.cn == b.cn && a.c0 == b.c0;
    }
};

} // namespace vertexlab

#endif
