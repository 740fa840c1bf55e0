#ifndef VERTEXLAB_DISTRIBUTION_HPP
#define VERTEXLAB_DISTRIBUTION_HPP

#include "vertexlab/algebra.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace vertexlab {

/// Inclusive range of mode indices used by finite verification passes.
struct ModeWindow {
    long lo = -6;
    long hi = 6;

    long width() const { return hi - lo + 1; }
    ModeWindow doubled() const { return {2 * lo, 2 * hi}; }
    bool contains(long n) const { return lo <= n && n <= hi; }
};

/// Records that (z-w)^N [a(z), b(w)] = 0 was verified coefficientwise on the
/// window modulo U_p.
struct LocalityCertificate {
    long order = 0;
    ModeWindow window;
    long precision = 0;
};

class Distribution;
using DistPtr = std::shared_ptr<const Distribution>;

/// Lazy continuous distribution sum a_(n) w^{-n-1} with coefficients in a
/// topological algebra. Nodes form an immutable expression DAG; coefficients
/// are evaluated on demand at explicit precision and memoized.
class Distribution : public std::enable_shared_from_this<Distribution> {
public:
    enum class Kind { Unit, Generator, LinComb, Derivative, NthProduct };

    Kind kind() const { return kind_; }
    const std::shared_ptr<const TopAlgebra>& algebra() const { return alg_; }
    std::optional<long> weight() const { return weight_; }
    const std::string& label() const { return label_; }

    /// a_(n) as an element of U/U_p (the true image of the coefficient, not
    /// just a representative computed from truncated children).
    Element coeff(long n, long p) const;

    /// Continuity witness: smallest cached N with a_(m) in U_p for all m >= N.
    /// Monotone in p. Exact for generator modes, derived for composites.
    long witness(long p) const;

    /// True if every coefficient over the window vanishes mod U_p.
    bool is_zero_on(const ModeWindow& window, long p) const;

    // --- constructors -------------------------------------------------------
    static DistPtr unit(std::shared_ptr<const TopAlgebra> alg);
    /// Generator field: mode n maps to the single generator {tag, n + shift};
    /// witness N(p) = p + witness_offset.
    static DistPtr generator(std::shared_ptr<const TopAlgebra> alg, std::int32_t tag, long shift,
                             long witness_offset, std::optional<long> weight, std::string label);
    static DistPtr lin_comb(std::vector<std::pair<Rational, DistPtr>> parts);
    static DistPtr derivative(DistPtr a);
    /// k-th divided-power derivative (d/dw)^k / k!.
    static DistPtr divided_derivative(DistPtr a, long k);
    static DistPtr nth_product(DistPtr a, DistPtr b, long n);

    // children (for serialization / traversal)
    const std::vector<std::pair<Rational, DistPtr>>& parts() const { return parts_; }
    DistPtr left() const { return parts_.empty() ? nullptr : parts_[0].second; }
    DistPtr right() const { return parts_.size() < 2 ? nullptr : parts_[1].second; }
    long product_n() const { return n_; }
    std::int32_t generator_tag() const { return gen_tag_; }
    long generator_shift() const { return gen_shift_; }

private:
    Distribution() = default;

    Element coeff_uncached(long n, long p) const;
    long witness_uncached(long p) const;

    Kind kind_ = Kind::Unit;
    std::shared_ptr<const TopAlgebra> alg_;
    std::optional<long> weight_;
    std::string label_;

    // Generator payload
    std::int32_t gen_tag_ = 0;
    long gen_shift_ = 0;
    long gen_witness_offset_ = 0;

    // LinComb / Derivative / NthProduct payload
    std::vector<std::pair<Rational, DistPtr>> parts_;
    long n_ = 0;

    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, Element> coeff_cache_;
    mutable std::map<long, long> witness_cache_;
};

/// The true image of a_(na) * b_(nb) in U/U_p. The left factor is evaluated
/// at the precision tail_bound(right representative, p) so that the product
/// of representatives equals the product of the underlying elements mod U_p.
Element truncated_product(const DistPtr& a, long na, const DistPtr& b, long nb, long p);

/// [a_(na), b_(nb)] mod U_p.
Element mode_commutator(const DistPtr& a, long na, const DistPtr& b, long nb, long p);

/// Least N <= nmax with sum_k (-1)^k C(N,k) [a_(r+N-k), b_(s+k)] = 0 mod U_p
/// for all r, s in the window; nullopt if no such N exists up to nmax.
std::optional<LocalityCertificate> locality_order(const DistPtr& a, const DistPtr& b, long nmax,
                                                  const ModeWindow& window, long p);

struct CheckFailure {
    std::string what;
    std::string witness;
};

struct CheckReport {
    bool ok = true;
    long checked = 0;
    long skipped = 0;
    std::vector<CheckFailure> failures;

    void fail(std::string what, std::string witness) {
        ok = false;
        if (failures.size() < 16) failures.push_back({std::move(what), std::move(witness)});
    }
};

/// Verifies the commutator expansion [a_(r), b_(s)] =
/// sum_{j=0}^{N-1} C(r,j) (a_(j)b)_(r+s-j) coefficientwise on the window,
/// where N is the certified locality order.
CheckReport delta_expansion_check(const DistPtr& a, const DistPtr& b, long locality_order,
                                  const ModeWindow& window, long p);

enum class ExpansionDirection { ZFirst, WFirst };

/// Coefficient of the j-th term of i_{z,w}(z-w)^n (ZFirst: (-1)^j C(n,j))
/// or i_{w,z}(z-w)^n (WFirst: (-1)^{n-j} C(n,j)).
Rational binomial_expansion(long n, ExpansionDirection dir, long j);

/// Reference evaluator for (a_(n) b)_(m) with `extra` additional terms beyond
/// the derived truncation bound; used to validate truncation stability.
Element nth_coeff_reference(const DistPtr& a, const DistPtr& b, long n, long m, long p, long extra);

/// Normally ordered product via the split a(w)_+ b(w) + b(w) a(w)_-,
/// evaluated coefficientwise; independent of the n-th product route.
Element normal_order_coeff_via_split(const DistPtr& a, const DistPtr& b, long m, long p);

} // namespace vertexlab

#endif
