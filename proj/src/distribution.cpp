#include "vertexlab/distribution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vertexlab {

namespace {
Rational parity_sign(long k) { return (k % 2 != 0) ? Rational(-1) : Rational(1); }
} // namespace

DistPtr Distribution::unit(std::shared_ptr<const TopAlgebra> alg) {
    auto d = std::shared_ptr<Distribution>(new Distribution());
    d->kind_ = Kind::Unit;
    d->alg_ = std::move(alg);
    d->weight_ = 0;
    d->label_ = "1";
    return d;
}

DistPtr Distribution::generator(std::shared_ptr<const TopAlgebra> alg, std::int32_t tag, long shift,
                                long witness_offset, std::optional<long> weight,
                                std::string label) {
    auto d = std::shared_ptr<Distribution>(new Distribution());
    d->kind_ = Kind::Generator;
    d->alg_ = std::move(alg);
    d->gen_tag_ = tag;
    d->gen_shift_ = shift;
    d->gen_witness_offset_ = witness_offset;
    d->weight_ = weight;
    d->label_ = std::move(label);
    return d;
}

DistPtr Distribution::lin_comb(std::vector<std::pair<Rational, DistPtr>> parts) {
    auto d = std::shared_ptr<Distribution>(new Distribution());
    d->kind_ = Kind::LinComb;
    std::vector<std::pair<Rational, DistPtr>> flat;
    for (auto& [c, child] : parts) {
        if (c.is_zero()) continue;
        if (child->kind_ == Kind::LinComb) {
            for (const auto& [cc, grand] : child->parts_) flat.push_back({c * cc, grand});
        } else {
            flat.push_back({c, child});
        }
    }
    d->parts_ = std::move(flat);
    if (!d->parts_.empty()) {
        d->alg_ = d->parts_[0].second->alg_;
        bool homogeneous = true;
        std::optional<long> w = d->parts_[0].second->weight_;
        for (const auto& [c, child] : d->parts_) {
            (void)c;
            if (child->weight_ != w) homogeneous = false;
        }
        if (homogeneous) d->weight_ = w;
    }
    d->label_ = "lincomb";
    return d;
}

DistPtr Distribution::derivative(DistPtr a) {
    auto d = std::shared_ptr<Distribution>(new Distribution());
    d->kind_ = Kind::Derivative;
    d->alg_ = a->alg_;
    if (a->weight_) d->weight_ = *a->weight_ + 1;
    d->label_ = "d(" + a->label_ + ")";
    d->parts_ = {{Rational(1), std::move(a)}};
    return d;
}

DistPtr Distribution::divided_derivative(DistPtr a, long k) {
    Rational c(1);
    for (long i = 1; i <= k; ++i) c /= Rational(i);
    DistPtr cur = std::move(a);
    for (long i = 0; i < k; ++i) cur = derivative(cur);
    if (c.is_one()) return cur;
    return lin_comb({{c, cur}});
}

DistPtr Distribution::nth_product(DistPtr a, DistPtr b, long n) {
    auto d = std::shared_ptr<Distribution>(new Distribution());
    d->kind_ = Kind::NthProduct;
    d->alg_ = a->alg_;
    if (a->weight_ && b->weight_) d->weight_ = *a->weight_ + *b->weight_ - n - 1;
    d->label_ = "(" + a->label_ + " (" + std::to_string(n) + ") " + b->label_ + ")";
    d->n_ = n;
    d->parts_ = {{Rational(1), std::move(a)}, {Rational(1), std::move(b)}};
    return d;
}

Element Distribution::coeff(long n, long p) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = coeff_cache_.find({n, p});
        if (it != coeff_cache_.end()) return it->second;
    }
    Element e = coeff_uncached(n, p);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, ins] = coeff_cache_.emplace(std::make_pair(n, p), std::move(e));
    return it->second;
}

Element Distribution::coeff_uncached(long n, long p) const {
    switch (kind_) {
        case Kind::Unit:
            return n == -1 ? alg_->unit(p) : alg_->zero(p);
        case Kind::Generator: {
            Gen g{gen_tag_, n + gen_shift_};
            if (alg_->ideal_degree(g) >= p) return alg_->zero(p);
            Element e = alg_->straighten(Word{g}, Rational(1), p);
            return e;
        }
        case Kind::LinComb: {
            Element acc = alg_ ? alg_->zero(p) : Element{{}, p};
            for (const auto& [c, child] : parts_) acc += child->coeff(n, p).scaled(c);
            return acc;
        }
        case Kind::Derivative: {
            // (da)_(n) = -n a_(n-1)
            if (n == 0) return alg_->zero(p);
            return parts_[0].second->coeff(n - 1, p).scaled(Rational(-n));
        }
        case Kind::NthProduct:
            return nth_coeff_reference(parts_[0].second, parts_[1].second, n_, n, p, 0);
    }
    throw std::logic_error("unreachable distribution kind");
}

long Distribution::witness(long p) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = witness_cache_.find(p);
        if (it != witness_cache_.end()) return it->second;
    }
    long w = witness_uncached(p);
    std::lock_guard<std::mutex> lock(mu_);
    // force monotonicity in p against anything cached so far
    for (const auto& [q, wq] : witness_cache_) {
        if (q <= p) w = std::max(w, wq);
    }
    witness_cache_[p] = w;
    return w;
}

long Distribution::witness_uncached(long p) const {
    switch (kind_) {
        case Kind::Unit:
            return 0;
        case Kind::Generator:
            return p + gen_witness_offset_;
        case Kind::LinComb: {
            long w = 0;
            for (const auto& [c, child] : parts_) {
                (void)c;
                w = std::max(w, child->witness(p));
            }
            return w;
        }
        case Kind::Derivative:
            return parts_[0].second->witness(p) + 1;
        case Kind::NthProduct: {
            const DistPtr& a = parts_[0].second;
            const DistPtr& b = parts_[1].second;
            long n = n_;
            long N = b->witness(p);
            long ja_max = a->witness(p);
            for (long j = 0; j < ja_max; ++j) {
                if (n >= 0 && j > n) break; // binomial C(n,j) vanishes
                Element rj = a->coeff(j, p);
                if (rj.is_zero()) continue;
                long q = alg_->tail_bound(rj, p);
                N = std::max(N, b->witness(q) + j - n);
            }
            return std::max(N, 0L);
        }
    }
    throw std::logic_error("unreachable distribution kind");
}

bool Distribution::is_zero_on(const ModeWindow& window, long p) const {
    for (long n = window.lo; n <= window.hi; ++n)
        if (!coeff(n, p).is_zero()) return false;
    return true;
}

Element truncated_product(const DistPtr& a, long na, const DistPtr& b, long nb, long p) {
    const auto& alg = a->algebra();
    Element rb = b->coeff(nb, p);
    if (rb.is_zero()) return alg->zero(p);
    long boosted = alg->tail_bound(rb, p);
    Element ra = a->coeff(na, boosted);
    if (ra.is_zero()) return alg->zero(p);
    return alg->multiply(ra, rb, p);
}

Element mode_commutator(const DistPtr& a, long na, const DistPtr& b, long nb, long p) {
    Element lhs = truncated_product(a, na, b, nb, p);
    lhs -= truncated_product(b, nb, a, na, p);
    return lhs;
}

Element nth_coeff_reference(const DistPtr& a, const DistPtr& b, long n, long m, long p,
                            long extra) {
    const auto& alg = a->algebra();
    long na = a->witness(p);
    long nb = b->witness(p);
    long jmax = std::max(na, nb - m);
    if (n >= 0) jmax = std::min(jmax, n + 1);
    jmax = std::max(jmax, 0L) + extra;

    Element acc = alg->zero(p);
    for (long j = 0; j < jmax; ++j) {
        Rational cnj = binomial(n, j);
        if (cnj.is_zero()) continue;
        // (-1)^j C(n,j) a_(n-j) b_(m+j)
        Element t1 = truncated_product(a, n - j, b, m + j, p);
        acc += t1.scaled(cnj * parity_sign(j));
        // -(-1)^{n+j} C(n,j) b_(m+n-j) a_(j)
        Element t2 = truncated_product(b, m + n - j, a, j, p);
        acc -= t2.scaled(cnj * parity_sign(n + j));
    }
    return acc;
}

Element normal_order_coeff_via_split(const DistPtr& a, const DistPtr& b, long m, long p) {
    const auto& alg = a->algebra();
    Element acc = alg->zero(p);
    // (a_+ b)_(m): sum over r <= -1 of a_(r) b_(m-1-r); right factor dies once
    // m-1-r >= N_b(p).
    long nb = b->witness(p);
    for (long r = -1; m - 1 - r < nb; --r) acc += truncated_product(a, r, b, m - 1 - r, p);
    // (b a_-)_(m): sum over r >= 0 of b_(m-1-r) a_(r); right factor dies once
    // r >= N_a(p).
    long na = a->witness(p);
    for (long r = 0; r < na; ++r) acc += truncated_product(b, m - 1 - r, a, r, p);
    return acc;
}

std::optional<LocalityCertificate> locality_order(const DistPtr& a, const DistPtr& b, long nmax,
                                                  const ModeWindow& window, long p) {
    std::map<std::pair<long, long>, Element> comm;
    auto commutator = [&](long i, long k) -> const Element& {
        auto it = comm.find({i, k});
        if (it == comm.end())
            it = comm.emplace(std::make_pair(i, k), mode_commutator(a, i, b, k, p)).first;
        return it->second;
    };

    for (long N = 0; N <= nmax; ++N) {
        bool ok = true;
        for (long r = window.lo; r <= window.hi && ok; ++r) {
            for (long s = window.lo; s <= window.hi && ok; ++s) {
                Element acc = a->algebra()->zero(p);
                for (long k = 0; k <= N; ++k) {
                    const Element& c = commutator(r + N - k, s + k);
                    if (!c.is_zero()) acc += c.scaled(binomial(N, k) * parity_sign(k));
                }
                if (!acc.is_zero()) ok = false;
            }
        }
        if (ok) return LocalityCertificate{N, window, p};
    }
    return std::nullopt;
}

CheckReport delta_expansion_check(const DistPtr& a, const DistPtr& b, long order,
                                  const ModeWindow& window, long p) {
    CheckReport report;
    const auto& alg = a->algebra();
    std::vector<DistPtr> products;
    for (long j = 0; j < order; ++j) products.push_back(Distribution::nth_product(a, b, j));

    for (long r = window.lo; r <= window.hi; ++r) {
        for (long s = window.lo; s <= window.hi; ++s) {
            Element lhs = mode_commutator(a, r, b, s, p);
            Element rhs = alg->zero(p);
            for (long j = 0; j < order; ++j) {
                Rational crj = binomial(r, j);
                if (crj.is_zero()) continue;
                rhs += products[j]->coeff(r + s - j, p).scaled(crj);
            }
            ++report.checked;
            if (!(lhs == rhs)) {
                lhs -= rhs;
                std::ostringstream os;
                os << "(r=" << r << ", s=" << s << ") differ by " << alg->element_str(lhs);
                report.fail("commutator expansion mismatch", os.str());
                return report;
            }
        }
    }
    return report;
}

Rational binomial_expansion(long n, ExpansionDirection dir, long j) {
    if (j < 0) return Rational(0);
    Rational c = binomial(n, j);
    if (dir == ExpansionDirection::ZFirst) return c * parity_sign(j);
    return c * parity_sign(n - j);
}

} // namespace vertexlab
