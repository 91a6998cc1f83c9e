#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latmat/cone.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

// Structure data (H, D, Q) for a candidate lattice order on M_n(K):
// H in GL_n(K), D in M_n(R+), Q with strictly positive entries of K.
// The candidate vector-lattice basis is B_ij = q_ij * H D E_ij H^{-1};
// its products satisfy B_ij B_rs = c(i,j,r,s) B_is with structure
// constant c(i,j,r,s) = d_jr q_ij q_rs / q_is.
struct StructureData {
    RingKind ring;
    std::size_t n = 0;
    Mat h, d, q;
};

// Validates shapes and entry constraints: H invertible (NotInvertible),
// D entrywise in R+ (NegativeEntry), Q strictly positive over K
// (PreconditionFailed).
StructureData checked_structure_data(Mat h, Mat d, Mat q);

// All n^2 basis candidates in row-major order: basis[i * n + j] = B_ij.
std::vector<Mat> build_basis(const StructureData& s);

FieldElem structure_constant(const StructureData& s,
                             std::size_t i, std::size_t j,
                             std::size_t r, std::size_t t);

struct ConditionViolation {
    int condition = 0;                    // 2 or 4
    std::array<std::size_t, 4> tuple{};   // 1-based (i,j,r,s); unused for condition 4
    std::string value;
};

struct ConditionReport {
    bool pass = true;
    std::optional<ConditionViolation> violation;
};

// Condition (2): every structure constant lies in R+ (checked over all
// n^4 index tuples). Condition (4): (prod q_ij) * det(D)^n is a unit of
// R. Reports the first violating tuple. When both conditions hold with
// D = I, every nonzero structure constant is forced to be a positive
// unit; that consequence is re-checked here and a failure of it is an
// InternalCheckFailed.
ConditionReport verify_conditions(const StructureData& s);

struct ProductViolation {
    std::array<std::size_t, 4> pair{};    // 1-based (i,j,r,s)
    std::string lhs, rhs;
};

struct ProductLawReport {
    bool pass = true;
    std::optional<ProductViolation> violation;
};

// Checks B_ij B_rs == c(i,j,r,s) B_is for all n^4 pairs by exact matrix
// arithmetic.
ProductLawReport verify_product_law(const StructureData& s);

// Coordinates of x in the given n^2-element basis of M_n(K), returned as
// an n x n matrix of coefficients. NotABasis when the family is
// linearly dependent.
Mat expand_in_basis(const std::vector<Mat>& basis, const Mat& x);

struct IdentityExpansion {
    Mat coeffs;          // k with I = sum k_ij B_ij
    bool in_ring = false;
    bool in_cone = false;   // all coefficients in R+, i.e. I in P
};

IdentityExpansion expand_identity(const StructureData& s);

}  // namespace latmat
