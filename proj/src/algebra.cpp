#include "vertexlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace vertexlab {

void Element::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

Element Element::scaled(const Rational& c) const {
    Element out;
    out.precision = precision;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms) out.terms[w] = v * c;
    return out;
}

Element TopAlgebra::unit(long p) const {
    Element e;
    e.precision = p;
    e.terms[Word{}] = Rational(1);
    return e;
}

Element TopAlgebra::monomial(const Word& w, const Rational& c, long p) const {
    return straighten(w, c, p);
}

const Element& TopAlgebra::normal_form(const Word& w, long p) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = nf_cache_.find({w, p});
        if (it != nf_cache_.end()) return it->second;
    }
    Element result = straighten_uncached(w, p);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = nf_cache_.emplace(std::make_pair(w, p), std::move(result));
    return it->second;
}

Element TopAlgebra::straighten_uncached(const Word& w, long p) const {
    Element out;
    out.precision = p;
    if (!w.empty() && ideal_degree(w.back()) >= p) return out;

    size_t inv = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (gen_less(w[i + 1], w[i])) {
            inv = i;
            break;
        }
    }
    if (inv == w.size()) {
        out.terms[w] = Rational(1);
        return out;
    }

    Word swapped = w;
    std::swap(swapped[inv], swapped[inv + 1]);
    out += normal_form(swapped, p);

    for (const auto& [c, g] : bracket(w[inv], w[inv + 1])) {
        Word shorter;
        shorter.reserve(w.size() - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + inv);
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + inv + 2, w.end());
        if (!shorter.empty() && ideal_degree(shorter.back()) >= p) continue;
        const Element& nf = normal_form(shorter, p);
        for (const auto& [ww, cc] : nf.terms) out.add(ww, c * cc);
    }
    return out;
}

Element TopAlgebra::straighten(const Word& w, const Rational& coeff, long p) const {
    if (coeff.is_zero()) return zero(p);
    Element out = normal_form(w, p).scaled(coeff);
    out.precision = p;
    return out;
}

Element TopAlgebra::multiply(const Element& x, const Element& y, long p) const {
    Element out;
    out.precision = p;
    for (const auto& [wx, cx] : x.terms) {
        for (const auto& [wy, cy] : y.terms) {
            if (!wy.empty() && ideal_degree(wy.back()) >= p) continue;
            Word concat;
            concat.reserve(wx.size() + wy.size());
            concat.insert(concat.end(), wx.begin(), wx.end());
            concat.insert(concat.end(), wy.begin(), wy.end());
            const Element& nf = normal_form(concat, p);
            Rational c = cx * cy;
            for (const auto& [ww, cc] : nf.terms) out.add(ww, c * cc);
        }
    }
    return out;
}

Element TopAlgebra::reduce_mod(const Element& x, long q) const {
    Element out;
    out.precision = q;
    for (const auto& [w, c] : x.terms) {
        if (!w.empty() && ideal_degree(w.back()) >= q) continue;
        out.terms[w] = c;
    }
    return out;
}

long TopAlgebra::tail_bound(const Element& u, long p) const {
    long worst = 0;
    for (const auto& [w, c] : u.terms) {
        (void)c;
        long s = 0;
        for (const auto& g : w) s += std::max(0L, -ideal_degree(g));
        s += tail_slack(w);
        worst = std::max(worst, s);
    }
    return p + worst;
}

std::string TopAlgebra::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& g : w) {
        if (!first) os << "*";
        first = false;
        os << gen_name(g);
    }
    return os.str();
}

std::string TopAlgebra::element_str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms) {
        Rational coeff = c;
        if (!first) {
            if (coeff < Rational(0)) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        } else if (coeff < Rational(0)) {
            os << "-";
            coeff = -coeff;
        }
        first = false;
        bool unit_word = w.empty();
        if (coeff.num() != 1 || unit_word) os << coeff.num().str();
        if (!unit_word) {
            if (coeff.num() != 1) os << "*";
            os << word_str(w);
        }
        if (coeff.den() != 1) os << "/" << coeff.den().str();
    }
    return os.str();
}

PresentedAlgebra::PresentedAlgebra(AlgebraPresentation pres) : pres_(std::move(pres)) {
    std::vector<std::string> names;
    for (const auto& f : pres_.families) names.push_back(f.name);
    std::sort(names.begin(), names.end());
    name_rank_.resize(pres_.families.size());
    for (size_t i = 0; i < pres_.families.size(); ++i) {
        name_rank_[i] = static_cast<int>(
            std::find(names.begin(), names.end(), pres_.families[i].name) - names.begin());
    }
}

bool PresentedAlgebra::gen_less(const Gen& a, const Gen& b) const {
    long da = degree(a), db = degree(b);
    if (da != db) return da < db;
    if (name_rank_[a.tag] != name_rank_[b.tag]) return name_rank_[a.tag] < name_rank_[b.tag];
    return a.index < b.index;
}

long PresentedAlgebra::ideal_degree(const Gen& g) const { return degree(g); }

std::vector<std::pair<Rational, Gen>> PresentedAlgebra::bracket(const Gen& x, const Gen& y) const {
    std::vector<std::pair<Rational, Gen>> out;
    bool flipped = false;
    const BracketRule* rule = pres_.rule_for(x.tag, y.tag, flipped);
    if (rule == nullptr) return out;
    long m = flipped ? y.index : x.index;
    long n = flipped ? x.index : y.index;
    Rational sign(flipped ? -1 : 1);
    for (const auto& term : rule->terms) {
        if (term.kronecker && term.kronecker->eval(m, n) != 0) continue;
        Rational c = term.coeff.eval(m, n) * sign;
        if (c.is_zero()) continue;
        long target = term.target_index.eval(m, n);
        if (!pres_.families[term.target_family].domain.contains(target))
            throw std::runtime_error("bracket target outside index domain: " +
                                     pres_.families[term.target_family].name + "[" +
                                     std::to_string(target) + "]");
        out.push_back({c, Gen{term.target_family, target}});
    }
    return out;
}

std::string PresentedAlgebra::gen_name(const Gen& g) const {
    const auto& fam = pres_.families[g.tag];
    if (fam.domain.kind == IndexDomain::Kind::Point) return fam.name;
    return fam.name + "[" + std::to_string(g.index) + "]";
}

std::shared_ptr<PresentedAlgebra> make_heisenberg() {
    return std::make_shared<PresentedAlgebra>(heisenberg_presentation());
}

std::shared_ptr<PresentedAlgebra> make_virasoro() {
    return std::make_shared<PresentedAlgebra>(virasoro_presentation());
}

} // namespace vertexlab
