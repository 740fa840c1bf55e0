#ifndef VERTEXLAB_FINGERPRINT_HPP
#define VERTEXLAB_FINGERPRINT_HPP

#include "vertexlab/distribution.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vertexlab {

/// Exact coordinate vector of a distribution over a window: the PBW
/// coordinates of coeff(a, n, p) for every n in the window, concatenated.
/// Equality of fingerprints at fixed (window, p) is the working equality.
using FpKey = std::pair<long, Word>; // (mode index, PBW word)
using FpVec = std::map<FpKey, Rational>;

FpVec fingerprint(const DistPtr& a, const ModeWindow& window, long p);

/// Sparse coordinates in terms of original vector indices.
using Coords = std::map<int, Rational>;

/// Incremental exact row space over Rational with combination tracking.
/// Rows are added in a fixed order; each insertion either extends the space
/// (returns the new row's index) or yields the exact linear combination of
/// previously added rows equal to the candidate.
class ExactRowSpace {
public:
    struct InsertResult {
        bool independent = false;
        int index = -1;     // position among independent rows when independent
        Coords combination; // expression in terms of inserted-vector indices otherwise
    };

    InsertResult insert(const FpVec& v);

    /// Solves v = sum c_i * inserted_i without modifying the space.
    std::optional<Coords> solve(const FpVec& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        FpVec vec;     // reduced, leading coefficient 1
        Coords combo;  // vec = sum combo[i] * original inserted vector i
    };
    // Reduces v in place; returns the combination of original vectors used.
    Coords reduce(FpVec& v) const;

    std::vector<Row> rows_;
    std::map<FpKey, int> pivot_; // leading key -> row index
    int inserted_count_ = 0;
};

FpVec fp_add(const FpVec& a, const FpVec& b);
FpVec fp_scale(const FpVec& a, const Rational& c);
bool fp_is_zero(const FpVec& a);

} // namespace vertexlab

#endif
