#ifndef VERTEXLAB_ALGEBRA_HPP
#define VERTEXLAB_ALGEBRA_HPP

#include "vertexlab/presentation.hpp"
#include "vertexlab/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace vertexlab {

/// A concrete generator: `tag` names the family (presented algebras) or the
/// mode-symbol carrier (mode enveloping algebras), `index` is its integer index.
struct Gen {
    std::int32_t tag = 0;
    long index = 0;

    friend bool operator==(const Gen& a, const Gen& b) { return a.tag == b.tag && a.index == b.index; }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.index < b.index;
    }
};

using Word = std::vector<Gen>; // product of generators, left to right

/// Element of a completed enveloping algebra, as a finite representative of
/// a class in U/U_p: a linear combination of PBW-normal words, none of which
/// ends in a factor of ideal degree >= precision.
struct Element {
    std::map<Word, Rational> terms;
    long precision = 0;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const Rational& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const Rational& c) const;
    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
};

class CutoffError : public std::runtime_error {
public:
    explicit CutoffError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linearly topologised algebra presented by generators with a PBW order and
/// a bracket on generator pairs. Provides exact arithmetic in U modulo the
/// left ideals U_p via straightening.
class TopAlgebra {
public:
    virtual ~TopAlgebra() = default;

    /// Strict order used for the PBW normal form.
    virtual bool gen_less(const Gen& a, const Gen& b) const = 0;
    /// Degree used by the U_p membership test on rightmost factors.
    virtual long ideal_degree(const Gen& g) const = 0;
    /// [x, y] as a finite combination of single generators.
    virtual std::vector<std::pair<Rational, Gen>> bracket(const Gen& x, const Gen& y) const = 0;
    virtual std::string gen_name(const Gen& g) const = 0;
    /// Slack added to the graded tail bound; zero for honestly graded
    /// algebras, per-word for merely filtered ones.
    virtual long tail_slack(const Word& w) const { (void)w; return 0; }

    Element zero(long p) const { Element e; e.precision = p; return e; }
    Element unit(long p) const;
    Element monomial(const Word& w, const Rational& c, long p) const;

    /// PBW normal form of coeff * (product of the word's generators), reduced
    /// modulo U_p. Terminates: each bracket application shortens one summand.
    Element straighten(const Word& w, const Rational& coeff, long p) const;

    Element multiply(const Element& x, const Element& y, long p) const;
    Element reduce_mod(const Element& x, long q) const;

    /// Conservative N with U_N * u contained in U_p:
    /// N = p + max over words of (sum of max(0, -degree) over factors + slack).
    long tail_bound(const Element& u, long p) const;

    std::string element_str(const Element& e) const;
    std::string word_str(const Word& w) const;

protected:
    const Element& normal_form(const Word& w, long p) const; // memoized, coeff 1

private:
    Element straighten_uncached(const Word& w, long p) const;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<Word, long>, Element> nf_cache_;
};

/// The completed enveloping algebra of a presented Z-graded Lie algebra
/// (one generator per (family, index)), with U_p = closure of U(g) g_{>=p}.
class PresentedAlgebra : public TopAlgebra {
public:
    explicit PresentedAlgebra(AlgebraPresentation pres);

    bool gen_less(const Gen& a, const Gen& b) const override;
    long ideal_degree(const Gen& g) const override;
    std::vector<std::pair<Rational, Gen>> bracket(const Gen& x, const Gen& y) const override;
    std::string gen_name(const Gen& g) const override;

    const AlgebraPresentation& presentation() const { return pres_; }
    long degree(const Gen& g) const { return pres_.families[g.tag].degree(g.index); }

    /// Bracket of two generators as a combination of generators (Lie level).
    std::vector<std::pair<Rational, Gen>> lie_bracket(const Gen& x, const Gen& y) const {
        return bracket(x, y);
    }

private:
    AlgebraPresentation pres_;
    std::vector<int> name_rank_; // family -> rank of its name in sorted order
};

std::shared_ptr<PresentedAlgebra> make_heisenberg();
std::shared_ptr<PresentedAlgebra> make_virasoro();

} // namespace vertexlab

#endif
