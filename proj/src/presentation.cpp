#include "vertexlab/presentation.hpp"

#include <map>
#include <sstream>

namespace vertexlab {

int AlgebraPresentation::family_index(const std::string& fname) const {
    for (size_t i = 0; i < families.size(); ++i)
        if (families[i].name == fname) return static_cast<int>(i);
    return -1;
}

int AlgebraPresentation::field_index(const std::string& fname) const {
    for (size_t i = 0; i < fields.size(); ++i)
        if (fields[i].name == fname) return static_cast<int>(i);
    return -1;
}

const BracketRule* AlgebraPresentation::rule_for(int fam_a, int fam_b, bool& flipped) const {
    for (const auto& r : brackets) {
        if (r.left_family == fam_a && r.right_family == fam_b) {
            flipped = false;
            return &r;
        }
        if (r.left_family == fam_b && r.right_family == fam_a && fam_a != fam_b) {
            flipped = true;
            return &r;
        }
    }
    return nullptr;
}

namespace {

using GenTerm = std::map<std::pair<int, long>, Rational>; // (family, index) -> coeff

void add_gen(GenTerm& t, int fam, long idx, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(fam, idx);
    auto it = t.find(key);
    if (it == t.end()) {
        t[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

std::string gen_str(const AlgebraPresentation& pres, int fam, long idx) {
    std::ostringstream os;
    os << pres.families[fam].name;
    if (pres.families[fam].domain.kind != IndexDomain::Kind::Point) os << "[" << idx << "]";
    return os.str();
}

std::string term_str(const AlgebraPresentation& pres, const GenTerm& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << gen_str(pres, k.first, k.second);
    }
    return os.str();
}

struct Evaluator {
    const AlgebraPresentation& pres;
    ValidationReport& report;

    // [fam_a[i], fam_b[j]] from the stored rules; returns false on a domain
    // violation (recorded in the report).
    bool bracket(int fam_a, long i, int fam_b, long j, GenTerm& out) const {
        out.clear();
        bool flipped = false;
        const BracketRule* rule = pres.rule_for(fam_a, fam_b, flipped);
        if (rule == nullptr) return true; // commuting pair
        long m = flipped ? j : i;
        long n = flipped ? i : j;
        Rational sign(flipped ? -1 : 1);
        for (const auto& term : rule->terms) {
            if (term.kronecker && term.kronecker->eval(m, n) != 0) continue;
            Rational c = term.coeff.eval(m, n) * sign;
            if (c.is_zero()) continue;
            long target = term.target_index.eval(m, n);
            const auto& tf = pres.families[term.target_family];
            if (!tf.domain.contains(target)) {
                report.ok = false;
                std::ostringstream os;
                os << "[" << gen_str(pres, fam_a, i) << ", " << gen_str(pres, fam_b, j) << "]";
                report.issues.push_back({"bracket target outside index domain", os.str(),
                                         tf.name + "[" + std::to_string(target) + "]"});
                return false;
            }
            add_gen(out, term.target_family, target, c);
        }
        return true;
    }

    bool bracket_elem(const GenTerm& x, int fam_b, long j, GenTerm& out) const {
        out.clear();
        for (const auto& [k, c] : x) {
            GenTerm part;
            if (!bracket(k.first, k.second, fam_b, j, part)) return false;
            for (const auto& [kk, cc] : part) add_gen(out, kk.first, kk.second, c * cc);
        }
        return true;
    }
};

} // namespace

ValidationReport validate_presentation(const AlgebraPresentation& pres, long range) {
    ValidationReport report;
    report.range = range;
    constexpr size_t kMaxIssues = 8;

    // Structural checks on the rules themselves.
    for (const auto& rule : pres.brackets) {
        for (const auto& term : rule.terms) {
            const auto& lf = pres.families[rule.left_family];
            const auto& rf = pres.families[rule.right_family];
            const auto& tf = pres.families[term.target_family];
            // degree(target(m,n)) - degree(left at m) - degree(right at n) must
            // vanish wherever the Kronecker constraint holds. The difference is
            // affine; check it over the sampled range (sufficient for affine forms
            // once the range has >= 2 points per free direction).
            for (long m = -range; m <= range && report.issues.size() < kMaxIssues; ++m) {
                for (long n = -range; n <= range; ++n) {
                    if (!lf.domain.contains(m) || !rf.domain.contains(n)) continue;
                    if (term.kronecker && term.kronecker->eval(m, n) != 0) continue;
                    if (term.coeff.eval(m, n).is_zero()) continue;
                    long t = term.target_index.eval(m, n);
                    long lhs = tf.degree(t);
                    long rhs = lf.degree(m) + rf.degree(n);
                    if (lhs != rhs) {
                        report.ok = false;
                        std::ostringstream os;
                        os << "[" << lf.name << "[" << m << "], " << rf.name << "[" << n << "]] -> "
                           << tf.name << "[" << t << "]";
                        report.issues.push_back({"grading incompatibility", os.str(),
                                                 "deg " + std::to_string(lhs) + " != " +
                                                     std::to_string(rhs)});
                        break;
                    }
                }
            }
        }
    }

    Evaluator ev{pres, report};
    const int nf = static_cast<int>(pres.families.size());

    auto indices_of = [&](int fam) {
        std::vector<long> out;
        const auto& dom = pres.families[fam].domain;
        if (dom.kind == IndexDomain::Kind::Point) {
            out.push_back(dom.bound);
        } else {
            for (long i = -range; i <= range; ++i)
                if (dom.contains(i)) out.push_back(i);
        }
        return out;
    };

    // Antisymmetry on all in-range pairs.
    for (int fa = 0; fa < nf && report.issues.size() < kMaxIssues; ++fa)
        for (int fb = fa; fb < nf && report.issues.size() < kMaxIssues; ++fb)
            for (long i : indices_of(fa)) {
                for (long j : indices_of(fb)) {
                    GenTerm xy, yx;
                    if (!ev.bracket(fa, i, fb, j, xy) || !ev.bracket(fb, j, fa, i, yx)) continue;
                    GenTerm sum = xy;
                    for (const auto& [k, c] : yx) add_gen(sum, k.first, k.second, c);
                    if (!sum.empty()) {
                        report.ok = false;
                        std::ostringstream os;
                        os << "(" << gen_str(pres, fa, i) << ", " << gen_str(pres, fb, j) << ")";
                        report.issues.push_back(
                            {"antisymmetry violated", os.str(), term_str(pres, sum)});
                        if (report.issues.size() >= kMaxIssues) break;
                    }
                }
                if (report.issues.size() >= kMaxIssues) break;
            }

    // Jacobi identity on all in-range triples.
    for (int fa = 0; fa < nf && report.ok; ++fa)
        for (int fb = fa; fb < nf && report.ok; ++fb)
            for (int fc = fb; fc < nf && report.ok; ++fc)
                for (long i : indices_of(fa)) {
                    for (long j : indices_of(fb)) {
                        for (long k : indices_of(fc)) {
                            GenTerm bc, ca, ab, t1, t2, t3;
                            if (!ev.bracket(fb, j, fc, k, bc) || !ev.bracket_elem(bc, fa, i, t1))
                                continue;
                            if (!ev.bracket(fc, k, fa, i, ca) || !ev.bracket_elem(ca, fb, j, t2))
                                continue;
                            if (!ev.bracket(fa, i, fb, j, ab) || !ev.bracket_elem(ab, fc, k, t3))
                                continue;
                            // [x,[y,z]] = [[x,y],z] + [y,[x,z]] in the form
                            // [[y,z],x] + [[z,x],y] + [[x,y],z] = 0
                            GenTerm sum = t1;
                            for (const auto& [kk, cc] : t2) add_gen(sum, kk.first, kk.second, cc);
                            for (const auto& [kk, cc] : t3) add_gen(sum, kk.first, kk.second, cc);
                            if (!sum.empty()) {
                                report.ok = false;
                                std::ostringstream os;
                                os << "(" << gen_str(pres, fa, i) << ", " << gen_str(pres, fb, j)
                                   << ", " << gen_str(pres, fc, k) << ")";
                                report.issues.push_back(
                                    {"Jacobi identity violated", os.str(), term_str(pres, sum)});
                                break;
                            }
                        }
                        if (!report.ok) break;
                    }
                    if (!report.ok) break;
                }

    return report;
}

AlgebraPresentation heisenberg_presentation() {
    AlgebraPresentation pres;
    pres.name = "heisenberg";
    GeneratorFamily alpha;
    alpha.name = "alpha";
    alpha.domain = {IndexDomain::Kind::AllIntegers, 0};
    alpha.degree_slope = 1;
    alpha.degree_offset = 0;
    GeneratorFamily K;
    K.name = "K";
    K.domain = {IndexDomain::Kind::Point, 0};
    K.degree_slope = 0;
    K.degree_offset = 0;
    pres.families = {alpha, K};

    BracketRule rule;
    rule.left_family = 0;
    rule.right_family = 0;
    BracketTerm term;
    term.coeff = BiPoly::var_m();
    term.kronecker = AffineForm{1, 1, 0};
    term.target_family = 1;
    term.target_index = AffineForm{0, 0, 0};
    rule.terms = {term};
    pres.brackets = {rule};

    pres.fields = {FieldDecl{"alpha", 0, 1}};
    return pres;
}

AlgebraPresentation virasoro_presentation() {
    AlgebraPresentation pres;
    pres.name = "virasoro";
    GeneratorFamily L;
    L.name = "L";
    L.domain = {IndexDomain::Kind::AllIntegers, 0};
    L.degree_slope = 1;
    L.degree_offset = 0;
    GeneratorFamily C;
    C.name = "C";
    C.domain = {IndexDomain::Kind::Point, 0};
    C.degree_slope = 0;
    C.degree_offset = 0;
    pres.families = {L, C};

    BracketRule rule;
    rule.left_family = 0;
    rule.right_family = 0;
    BracketTerm linear;
    linear.coeff = BiPoly::var_m() - BiPoly::var_n();
    linear.target_family = 0;
    linear.target_index = AffineForm{1, 1, 0};
    BracketTerm central;
    central.coeff =
        (BiPoly::var_m().pow(3) - BiPoly::var_m()).scaled(Rational(1, 12));
    central.kronecker = AffineForm{1, 1, 0};
    central.target_family = 1;
    central.target_index = AffineForm{0, 0, 0};
    rule.terms = {linear, central};
    pres.brackets = {rule};

    pres.fields = {FieldDecl{"L", 0, 2}};
    return pres;
}

} // namespace vertexlab
