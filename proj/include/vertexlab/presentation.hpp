#ifndef VERTEXLAB_PRESENTATION_HPP
#define VERTEXLAB_PRESENTATION_HPP

#include "vertexlab/bipoly.hpp"
#include "vertexlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vertexlab {

/// Index domain of a generator family: all of Z, a half line n >= lo, or a
/// single point (a lone generator, used for central elements).
struct IndexDomain {
    enum class Kind { AllIntegers, HalfLine, Point };
    Kind kind = Kind::AllIntegers;
    long bound = 0; // lo for HalfLine, the point for Point

    bool contains(long n) const {
        switch (kind) {
            case Kind::AllIntegers: return true;
            case Kind::HalfLine: return n >= bound;
            case Kind::Point: return n == bound;
        }
        return false;
    }
};

/// One indexed family of generators g[n] with degree s*n + c, s in {0, 1}.
struct GeneratorFamily {
    std::string name;
    IndexDomain domain;
    long degree_slope = 1;  // s
    long degree_offset = 0; // c

    long degree(long n) const { return degree_slope * n + degree_offset; }
};

/// One summand of a bracket rule:
///   coeff(m, n) * [delta(lm*m + ln*n + c) *] target[am*m + an*n + a0]
struct BracketTerm {
    BiPoly coeff;
    std::optional<AffineForm> kronecker; // term contributes only where this is 0
    int target_family = -1;
    AffineForm target_index;
};

/// Bracket rule [left[m], right[n]] = sum of terms. One rule per unordered
/// family pair; unlisted pairs commute.
struct BracketRule {
    int left_family = -1;
    int right_family = -1;
    std::vector<BracketTerm> terms;
};

/// Field declaration: a distribution whose mode a_(k) is family[k + 1 - weight].
struct FieldDecl {
    std::string name;
    int family = -1;
    long weight = 1;
};

struct AlgebraPresentation {
    std::string name;
    std::vector<GeneratorFamily> families;
    std::vector<BracketRule> brackets;
    std::vector<FieldDecl> fields;

    int family_index(const std::string& fname) const;
    int field_index(const std::string& fname) const;
    const BracketRule* rule_for(int fam_a, int fam_b, bool& flipped) const;
};

struct ValidationIssue {
    std::string what;      // human-readable description of the violated law
    std::string where;     // rule / generator triple involved
    std::string discrepancy;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    long range = 0;
};

/// Checks antisymmetry, the Jacobi identity on all concrete generator triples
/// with indices in [-range, range], grading compatibility of every bracket
/// rule, and index-domain closure. Stops after collecting a few issues.
ValidationReport validate_presentation(const AlgebraPresentation& pres, long range);

/// Built-in presentations.
AlgebraPresentation heisenberg_presentation();
AlgebraPresentation virasoro_presentation();

} // namespace vertexlab

#endif
