#include "latmat/weinberg.hpp"

#include <string>

namespace latmat {
namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t t) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
           std::to_string(t + 1) + ")";
}

}  // namespace

UnitSolution solve_units(const Mat& q) {
    if (!q.is_square()) fail(Errc::UsageError, "Q must be square");
    const std::size_t n = q.rows();
    const RingKind kind = q.kind();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (q(i, j).sign() <= 0)
                fail(Errc::PreconditionFailed,
                     "Q entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") = " + q(i, j).str() + " is not strictly positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                FieldElem c = q(i, j) * q(j, t) / q(i, t);
                if (!c.is_positive_ring_unit())
                    fail(Errc::PreconditionFailed,
                         "q_ij q_jt / q_it at " + triple_str(i, j, t) + " equals " +
                         c.str() + ", which is not a positive unit of " + ring_name(kind));
            }

    // Grow the solved block one row and column at a time. With k the new
    // 0-based index: x_{0k} = 1, the rest of the new column follows from
    // the equations against row 0 (where mu_{0i} = x_{0i} is already
    // known), and the new row from x_{ik} x_{ki} = q_{ik} q_{ki}.
    Mat x(kind, n, n);
    x.set(0, 0, q(0, 0));
    for (std::size_t k = 1; k < n; ++k) {
        x.set(0, k, FieldElem::one(kind));
        for (std::size_t i = 1; i < k; ++i)
            x.set(i, k, q(0, i) * q(i, k) / (q(0, k) * x(0, i)));
        for (std::size_t i = 0; i < k; ++i)
            x.set(k, i, q(i, k) * q(k, i) / x(i, k));
        x.set(k, k, q(k, k));
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!x(i, j).is_positive_ring_unit())
                fail(Errc::InternalCheckFailed,
                     "solution entry x_" + std::to_string(i + 1) + std::to_string(j + 1) +
                     " = " + x(i, j).str() + " is not a positive unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                FieldElem lhs = x(i, j) * x(j, t) * q(i, t);
                FieldElem rhs = x(i, t) * q(i, j) * q(j, t);
                if (lhs != rhs)
                    fail(Errc::InternalCheckFailed,
                         "solution fails the equation at " + triple_str(i, j, t));
            }

    UnitSolution sol;
    sol.ring = kind;
    sol.n = n;
    sol.x = std::move(x);
    return sol;
}

IsoMap::IsoMap(Mat scalars, ConeA target, std::vector<Mat> source_basis)
    : scalars_(std::move(scalars)),
      target_(std::move(target)),
      source_basis_(std::move(source_basis)) {
    if (!scalars_.is_square() || scalars_.rows() != target_.n() ||
        scalars_.kind() != target_.kind())
        fail(Errc::UsageError, "scalar matrix does not match the target cone");
    if (!source_basis_.empty() && source_basis_.size() != n() * n())
        fail(Errc::UsageError, "source basis must have n^2 members");
}

Mat IsoMap::target_image(std::size_t i, std::size_t j) const {
    const std::size_t nn = n();
    return (target_.matrix() * Mat::unit_matrix(scalars_.kind(), nn, i, j)).scaled(scalars_(i, j));
}

Mat IsoMap::apply_coords(const Mat& coords) const {
    return target_.matrix() * coords.hadamard(scalars_);
}

Mat IsoMap::apply(const Mat& x) const {
    if (!has_source_basis())
        fail(Errc::UsageError, "apply() needs the source basis; use apply_coords");
    return apply_coords(expand_in_basis(source_basis_, x));
}

void verify_iso_on_generators(const IsoMap& iso, const StructureData& s) {
    const std::size_t n = iso.n();
    if (n != s.n) fail(Errc::UsageError, "isomorphism size mismatch");
    std::vector<Mat> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) images.push_back(iso.target_image(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < n; ++t) {
                    Mat lhs = images[i * n + j] * images[r * n + t];
                    Mat rhs = images[i * n + t].scaled(structure_constant(s, i, j, r, t));
                    if (lhs != rhs)
                        fail(Errc::VerificationFailed,
                             "image products disagree at pair (" +
                             std::to_string(i + 1) + "," + std::to_string(j + 1) + ")x(" +
                             std::to_string(r + 1) + "," + std::to_string(t + 1) + "): " +
                             lhs.to_string() + " vs " + rhs.to_string());
                }
}

IsoMap build_iso_to_usual(const StructureData& s, const UnitSolution& sol) {
    if (sol.n != s.n || sol.ring != s.ring)
        fail(Errc::UsageError, "solution does not match the structure data");
    if (s.d != Mat::identity(s.ring, s.n))
        fail(Errc::PreconditionFailed, "the D = I presentation is required here");
    IsoMap iso(sol.x, ConeA::validate(Mat::identity(s.ring, s.n)), build_basis(s));
    verify_iso_on_generators(iso, s);
    return iso;
}

IsoMap weinberg_pipeline(const StructureData& s) {
    IdentityExpansion expansion = expand_identity(s);
    if (!expansion.in_cone)
        fail(Errc::IdentityNotPositive,
             "the identity expansion has coefficients outside R+: " +
             expansion.coeffs.to_string());
    if (s.d != Mat::identity(s.ring, s.n))
        fail(Errc::PreconditionFailed, "the D = I presentation is required here");
    UnitSolution sol = solve_units(s.q);
    return build_iso_to_usual(s, sol);
}

}  // namespace latmat
