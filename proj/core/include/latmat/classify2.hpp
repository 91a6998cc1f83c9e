#pragma once

#include <optional>

#include "latmat/weinberg.hpp"

namespace latmat {

// The three families of 2x2 lattice orders, keyed by the shape of D:
// the identity (usual order up to scaling), the nilpotent corner
// [[1,1],[1,0]], and the parametric family [[1,1],[a,b]] with a > b > 0.
struct CaseTag {
    enum class Family { Usual, Corner, Parametric };
    Family family = Family::Usual;
    FieldElem a, b;   // meaningful for Parametric only
};

const char* family_name(CaseTag::Family family) noexcept;   // usual | corner | param
CaseTag::Family family_from_name(const std::string& name);  // throws ParseError

// Matches D against the three families; UnrecognizedD otherwise.
CaseTag detect_case(const Mat& d);

// Corner family. Requires q11, q12, q21 in R+ with q12, q21 and
// q11 q22 positive units (PreconditionFailed otherwise). Produces the
// verified isomorphism onto the cone of A = [[q11, q21], [q12, 0]],
// whose determinant -q12 q21 is a unit; the generator scalars are
// (1, 1, 1, q11 q22 / (q12 q21)).
IsoMap build_case2(const Mat& q);

// mu = q11 q22 / (q12 q21) must be a (positive) unit of R for any
// parametric-family order; AssertionFailed otherwise.
RingElem mu_assertion(const Mat& q);

struct GcdChecks {
    enum class Status { Applied, VacuousField, NotApplicable };
    Status status = Status::NotApplicable;
    // gcd(m, q11), gcd(m, b q22), gcd(m-1, q21), gcd(m-1, a q12),
    // each tested for being a unit; meaningful when status == Applied
    std::array<bool, 4> coprime{};
};

struct Case3Report {
    FieldElem m;                          // a / (a - b)
    RingElem epsilon;                     // (prod q) (det D)^2, a unit
    RingElem mu;                          // q11 q22 / (q12 q21)
    std::optional<RingElem> mu1, mu2;     // unit factors with mu1 mu2 = epsilon,
                                          // mu = mu2 / mu1, when they land in R
    Mat k;                                // identity coefficients
    GcdChecks gcd;
};

struct Case3Result {
    IsoMap iso;
    Case3Report report;
};

// Parametric family with a > b > 0 in R+. Requires q11, q21, a q12,
// b q22 in R+ and epsilon a unit (PreconditionFailed), and the mu
// assertion (AssertionFailed). Produces the verified isomorphism onto
// the cone of C = [[q11, q21], [a q12, b q22 / mu]] with generator
// scalars (1, 1, 1, mu), plus the diagnostic report.
Case3Result build_case3(const Mat& q, const FieldElem& a, const FieldElem& b);

struct Classification {
    CaseTag tag;
    IsoMap iso;
    std::optional<Case3Report> case3;
};

// Full 2x2 classification: checks the structure conditions
// (PreconditionFailed on violation), matches D (UnrecognizedD), and
// dispatches to the family construction. The returned isomorphism
// carries the source basis of s, so apply() works on raw matrices.
Classification classify(const StructureData& s);

}  // namespace latmat
