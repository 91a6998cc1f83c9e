#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latmat/matrix.hpp"

namespace latmat {

// Positive cone A * M_n(R+) of a lattice order on the full matrix algebra.
// A valid generator A is entrywise nonnegative over R with unit
// determinant; the cone fixes the order X <= Y iff Y - X in P.
class ConeA {
public:
    // Checks the generator: square over R, entrywise nonnegative
    // (NegativeEntry), determinant a unit of R (NotAUnit).
    static ConeA validate(const Mat& a);

    // Skips validation; for building deliberately broken cones in tests
    // and diagnostics. Everything downstream assumes validate() passed.
    static ConeA unchecked(const Mat& a);

    const Mat& matrix() const noexcept { return a_; }
    const Mat& matrix_inverse() const noexcept { return a_inv_; }
    std::size_t n() const noexcept { return a_.rows(); }
    RingKind kind() const noexcept { return a_.kind(); }

    // coordinates of x in the cone frame: A^{-1} x
    Mat coords(const Mat& x) const;

    // x in P iff A^{-1} x is entrywise nonnegative over R
    bool contains(const Mat& x) const;

    // lattice operations of the order induced by the cone
    Mat join(const Mat& x, const Mat& y) const;
    Mat meet(const Mat& x, const Mat& y) const;

private:
    explicit ConeA(Mat a, Mat a_inv) : a_(std::move(a)), a_inv_(std::move(a_inv)) {}

    Mat a_;
    Mat a_inv_;
};

struct AxiomFailure {
    std::string axiom;
    int sample = 0;
    std::string witness;
};

struct AxiomReport {
    std::uint64_t seed = 0;
    int samples = 0;
    bool pass = true;
    std::vector<AxiomFailure> failures;
};

// Samples cone elements and signed differences and checks the partial
// order and lattice axioms: closure of P under addition, multiplication
// and nonnegative scalars, antisymmetry (P meets -P only in 0), and the
// absorption laws tying join and meet together. Deterministic in seed.
AxiomReport check_order_axioms(const ConeA& cone, std::uint64_t seed, int samples);

}  // namespace latmat
