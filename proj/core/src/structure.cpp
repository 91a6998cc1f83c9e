#include "latmat/structure.hpp"

#include <string>

namespace latmat {
namespace {

std::string tuple_str(std::size_t i, std::size_t j, std::size_t r, std::size_t t) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
           std::to_string(r + 1) + "," + std::to_string(t + 1) + ")";
}

}  // namespace

StructureData checked_structure_data(Mat h, Mat d, Mat q) {
    if (!h.is_square() || !d.is_square() || !q.is_square())
        fail(Errc::UsageError, "structure data matrices must be square");
    if (h.kind() != d.kind() || h.kind() != q.kind())
        fail(Errc::UsageError, "structure data ring kind mismatch");
    if (h.rows() != d.rows() || h.rows() != q.rows())
        fail(Errc::UsageError, "structure data size mismatch");
    if (h.det().is_zero())
        fail(Errc::NotInvertible, "H is singular over the fraction field");
    if (d.det().is_zero())
        fail(Errc::NotInvertible, "D is singular over the fraction field");
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!d(i, j).in_ring_nonneg())
                fail(Errc::NegativeEntry,
                     "D entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") = " + d(i, j).str() + " is not in R+");
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (q(i, j).sign() <= 0)
                fail(Errc::PreconditionFailed,
                     "Q entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") = " + q(i, j).str() + " is not strictly positive");
    StructureData s;
    s.ring = h.kind();
    s.n = h.rows();
    s.h = std::move(h);
    s.d = std::move(d);
    s.q = std::move(q);
    return s;
}

std::vector<Mat> build_basis(const StructureData& s) {
    const std::size_t n = s.n;
    Mat hd = s.h * s.d;
    Mat hinv = s.h.inverse();
    std::vector<Mat> basis;
    basis.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat b = (hd * Mat::unit_matrix(s.ring, n, i, j)) * hinv;
            basis.push_back(b.scaled(s.q(i, j)));
        }
    return basis;
}

FieldElem structure_constant(const StructureData& s,
                             std::size_t i, std::size_t j,
                             std::size_t r, std::size_t t) {
    return s.d(j, r) * s.q(i, j) * s.q(r, t) / s.q(i, t);
}

ConditionReport verify_conditions(const StructureData& s) {
    ConditionReport report;
    const std::size_t n = s.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < n; ++t) {
                    FieldElem c = structure_constant(s, i, j, r, t);
                    if (!c.in_ring_nonneg()) {
                        report.pass = false;
                        report.violation = {2, {i + 1, j + 1, r + 1, t + 1}, c.str()};
                        return report;
                    }
                }
    FieldElem u = FieldElem::one(s.ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u = u * s.q(i, j);
    FieldElem dd = s.d.det();
    for (std::size_t i = 0; i < n; ++i) u = u * dd;
    if (!u.is_ring_unit()) {
        report.pass = false;
        report.violation = {4, {0, 0, 0, 0}, u.str()};
        return report;
    }
    // With D = I both conditions force every nonzero structure constant
    // to be a positive unit; anything else is a bug, not bad input.
    if (s.d == Mat::identity(s.ring, n)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < n; ++t) {
                    FieldElem c = structure_constant(s, i, j, j, t);
                    if (!c.is_positive_ring_unit())
                        fail(Errc::InternalCheckFailed,
                             "structure constant " + c.str() + " at " +
                             tuple_str(i, j, j, t) + " should be a positive unit");
                }
    }
    return report;
}

ProductLawReport verify_product_law(const StructureData& s) {
    ProductLawReport report;
    const std::size_t n = s.n;
    std::vector<Mat> basis = build_basis(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < n; ++t) {
                    Mat lhs = basis[i * n + j] * basis[r * n + t];
                    Mat rhs = basis[i * n + t].scaled(structure_constant(s, i, j, r, t));
                    if (lhs != rhs) {
                        report.pass = false;
                        report.violation = {{i + 1, j + 1, r + 1, t + 1},
                                            lhs.to_string(), rhs.to_string()};
                        return report;
                    }
                }
    return report;
}

Mat expand_in_basis(const std::vector<Mat>& basis, const Mat& x) {
    if (basis.empty()) fail(Errc::UsageError, "empty basis");
    const std::size_t n = basis[0].rows();
    if (basis.size() != n * n || !basis[0].is_square())
        fail(Errc::UsageError, "basis must consist of n^2 square matrices");
    if (x.rows() != n || x.cols() != n || x.kind() != basis[0].kind())
        fail(Errc::UsageError, "basis expansion shape mismatch");
    const RingKind kind = basis[0].kind();
    Mat m(kind, n * n, n * n);
    for (std::size_t c = 0; c < n * n; ++c) {
        const Mat& b = basis[c];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i * n + j, c, b(i, j));
    }
    Mat rhs(kind, n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs.set(i * n + j, 0, x(i, j));
    Mat sol(kind, 1, 1);
    try {
        sol = solve_linear(m, rhs);
    } catch (const Error& e) {
        if (e.code() == Errc::NotInvertible)
            fail(Errc::NotABasis, "the matrix family is linearly dependent");
        throw;
    }
    Mat coords(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) coords.set(i, j, sol(i * n + j, 0));
    return coords;
}

IdentityExpansion expand_identity(const StructureData& s) {
    IdentityExpansion result{Mat(s.ring, s.n, s.n), true, true};
    result.coeffs = expand_in_basis(build_basis(s), Mat::identity(s.ring, s.n));
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j) {
            if (!result.coeffs(i, j).is_in_ring()) result.in_ring = false;
            if (!result.coeffs(i, j).in_ring_nonneg()) result.in_cone = false;
        }
    return result;
}

}  // namespace latmat
