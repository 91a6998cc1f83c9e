#pragma once

#include "latmat/structure.hpp"

namespace latmat {

// Solution of the unit system x_ij x_jt = (q_ij q_jt / q_it) x_it with
// x_ii = q_ii; every entry is a positive unit of R.
struct UnitSolution {
    RingKind ring;
    std::size_t n = 0;
    Mat x;
};

// Solves the system above for Q with strictly positive entries, provided
// every q_ij q_jt / q_it is a positive unit of R (PreconditionFailed with
// the offending triple otherwise). The solution is built recursively
// block by block and then every one of the n^3 equations is re-checked
// exactly; a failed re-check or a non-unit entry is an
// InternalCheckFailed.
UnitSolution solve_units(const Mat& q);

// Order isomorphism onto a cone order, determined by one scalar per
// basis slot: the (i, j) generator of the source maps to
// scalars_ij * A * E_ij. When the source basis is attached, apply()
// works on raw matrices by expanding them in that basis first.
class IsoMap {
public:
    IsoMap(Mat scalars, ConeA target, std::vector<Mat> source_basis = {});

    const Mat& scalars() const noexcept { return scalars_; }
    const ConeA& target() const noexcept { return target_; }
    std::size_t n() const noexcept { return scalars_.rows(); }

    bool has_source_basis() const noexcept { return !source_basis_.empty(); }
    const std::vector<Mat>& source_basis() const noexcept { return source_basis_; }

    // image of the (i, j) source generator
    Mat target_image(std::size_t i, std::size_t j) const;

    // image of sum coords_ij * (source generator ij):
    // A * (coords hadamard scalars)
    Mat apply_coords(const Mat& coords) const;

    // image of an arbitrary matrix; requires the source basis
    Mat apply(const Mat& x) const;

private:
    Mat scalars_;
    ConeA target_;
    std::vector<Mat> source_basis_;
};

// Checks multiplicativity of the map on all n^4 generator pairs against
// the structure constants of s: image(i,j) * image(r,t) must equal
// c(i,j,r,t) * image(i,t). Throws VerificationFailed with the offending
// pair.
void verify_iso_on_generators(const IsoMap& iso, const StructureData& s);

// Builds the isomorphism onto the usual order (cone generator I) from a
// unit solution X: generator (i, j) maps to x_ij E_ij. Requires D = I
// (PreconditionFailed) and verifies multiplicativity on all generator
// pairs before returning.
IsoMap build_iso_to_usual(const StructureData& s, const UnitSolution& sol);

// Full pipeline: expands the identity (IdentityNotPositive unless I lies
// in the candidate cone), requires the D = I presentation
// (PreconditionFailed), solves the unit system and returns the verified
// isomorphism onto the usual order.
IsoMap weinberg_pipeline(const StructureData& s);

}  // namespace latmat
