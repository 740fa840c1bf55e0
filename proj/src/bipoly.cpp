#include "vertexlab/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace vertexlab {

void BiPoly::add_term(int dm, int dn, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({dm, dn});
    if (it == terms_.end()) {
        terms_[{dm, dn}] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

BiPoly BiPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("BiPoly::pow: negative exponent");
    BiPoly out(Rational(1));
    for (long i = 0; i < e; ++i) out = out * (*this);
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

Rational BiPoly::eval(long m, long n) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= Rational(m);
        for (int i = 0; i < k.second; ++i) t *= Rational(n);
        acc += t;
    }
    return acc;
}

BiPoly BiPoly::swapped_vars() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_[{k.second, k.first}] = c;
    return out;
}

std::string BiPoly::str(const std::string& mname, const std::string& nname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k.first > 0) {
            os << "*" << mname;
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            os << "*" << nname;
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace vertexlab
