#include <doctest.h>

#include "latmat/oracle.hpp"
#include "latmat/structure.hpp"

#include "helpers.hpp"

using namespace latmat;
using namespace latmat::testutil;

namespace {

StructureData gauge3_int() {
    // gauges (1, 2, 3), all units 1: q_ij = g_i / g_j
    RingKind z = RingKind::Integers;
    std::vector<FieldElem> g = {fe(z, "1"), fe(z, "2"), fe(z, "3")};
    Mat units = mat(z, {{"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "1"}});
    return make_gauge_structure(Mat::identity(z, 3), g, units);
}

Mat reconstruct(const StructureData& s, const Mat& coeffs) {
    std::vector<Mat> basis = build_basis(s);
    Mat acc(s.ring, s.n, s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j)
            acc = acc + basis[i * s.n + j].scaled(coeffs(i, j));
    return acc;
}

}  // namespace

TEST_CASE("structure data validation") {
    RingKind z = RingKind::Integers;
    Mat ones = mat(z, {{"1", "1"}, {"1", "1"}});
    CHECK_NOTHROW(checked_structure_data(Mat::identity(z, 2), Mat::identity(z, 2), ones));

    CHECK(thrown_code([&] {
        checked_structure_data(mat(z, {{"1", "2"}, {"2", "4"}}), Mat::identity(z, 2), ones);
    }) == Errc::NotInvertible);   // singular H
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 2), mat(z, {{"1", "1"}, {"1", "1"}}), ones);
    }) == Errc::NotInvertible);   // singular D
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 2), mat(z, {{"1", "-1"}, {"0", "1"}}), ones);
    }) == Errc::NegativeEntry);   // D must lie in M_n(R+)
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 2), mat(z, {{"1", "1/2"}, {"0", "1"}}), ones);
    }) == Errc::NegativeEntry);   // D must lie in R, not merely K
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 2), Mat::identity(z, 2),
                               mat(z, {{"1", "0"}, {"1", "1"}}));
    }) == Errc::PreconditionFailed);   // Q strictly positive
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 2), Mat::identity(z, 2),
                               mat(z, {{"1", "-2"}, {"1", "1"}}));
    }) == Errc::PreconditionFailed);
    CHECK(thrown_code([&] {
        checked_structure_data(Mat::identity(z, 3), Mat::identity(z, 2), ones);
    }) == Errc::UsageError);   // shape mismatch
}

TEST_CASE("basis frozen values") {
    RingKind z = RingKind::Integers;
    Mat ones = mat(z, {{"1", "1"}, {"1", "1"}});

    // corner family, H = I: B_ij = D E_ij
    StructureData corner = checked_structure_data(
        Mat::identity(z, 2), mat(z, {{"1", "1"}, {"1", "0"}}), ones);
    std::vector<Mat> b = build_basis(corner);
    CHECK(b[0] == mat(z, {{"1", "0"}, {"1", "0"}}));
    CHECK(b[1] == mat(z, {{"0", "1"}, {"0", "1"}}));
    CHECK(b[2] == mat(z, {{"1", "0"}, {"0", "0"}}));
    CHECK(b[3] == mat(z, {{"0", "1"}, {"0", "0"}}));

    // conjugation by H
    StructureData conj = checked_structure_data(
        mat(z, {{"1", "1"}, {"0", "1"}}), Mat::identity(z, 2), ones);
    CHECK(build_basis(conj)[0] == mat(z, {{"1", "-1"}, {"0", "0"}}));

    // the q_ij scale their basis slots
    StructureData scaledq = checked_structure_data(
        Mat::identity(z, 2), Mat::identity(z, 2), mat(z, {{"1", "3"}, {"1", "1"}}));
    CHECK(build_basis(scaledq)[1] == mat(z, {{"0", "3"}, {"0", "0"}}));
}

TEST_CASE("structure constants follow the scalar formula") {
    StructureData s = gauge3_int();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t t = 0; t < 3; ++t) {
                    FieldElem expected =
                        s.d(j, r) * s.q(i, j) * s.q(r, t) / s.q(i, t);
                    CHECK(structure_constant(s, i, j, r, t) == expected);
                }
}

TEST_CASE("basis products satisfy the product law") {
    StructureData s = gauge3_int();
    std::vector<Mat> basis = build_basis(s);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t t = 0; t < 3; ++t) {
                    Mat lhs = basis[i * 3 + j] * basis[r * 3 + t];
                    Mat rhs = basis[i * 3 + t].scaled(structure_constant(s, i, j, r, t));
                    CHECK(lhs == rhs);
                }
    CHECK(verify_product_law(s).pass);
}

TEST_CASE("product law holds for generated data of every family") {
    for (RingKind kind : all_rings()) {
        for (int i = 0; i < 20; ++i) {
            GenSpec usual{kind, static_cast<std::size_t>(2 + i % 3),
                          4000 + static_cast<std::uint64_t>(i), 6, {}};
            CHECK(verify_product_law(gen_structure_data(usual)).pass);

            GenSpec corner{kind, 2, 4100 + static_cast<std::uint64_t>(i), 6,
                           CaseTag{CaseTag::Family::Corner, {}, {}}};
            CHECK(verify_product_law(gen_structure_data(corner)).pass);
        }
    }
    RingKind r = RingKind::Rationals;
    for (int i = 0; i < 20; ++i) {
        GenSpec param{r, 2, 4200 + static_cast<std::uint64_t>(i), 6,
                      CaseTag{CaseTag::Family::Parametric, fe(r, "2"), fe(r, "1")}};
        CHECK(verify_product_law(gen_structure_data(param)).pass);
    }
}

TEST_CASE("condition checks pass on gauge data and report first violations") {
    CHECK(verify_conditions(gauge3_int()).pass);

    RingKind z = RingKind::Integers;
    // q12 q21 / q11 = 1/2 is not in Z+: condition (2) violation at (1,2,2,1)
    StructureData bad2 = checked_structure_data(
        Mat::identity(z, 2), Mat::identity(z, 2), mat(z, {{"1", "1/2"}, {"1", "1"}}));
    ConditionReport r2 = verify_conditions(bad2);
    CHECK_FALSE(r2.pass);
    REQUIRE(r2.violation.has_value());
    CHECK(r2.violation->condition == 2);
    CHECK(r2.violation->tuple == std::array<std::size_t, 4>{1, 2, 2, 1});
    CHECK(r2.violation->value == "1/2");

    // constants all integral but prod q = 2 is not a unit of Z:
    // condition (4) violation
    StructureData bad4 = checked_structure_data(
        Mat::identity(z, 2), Mat::identity(z, 2), mat(z, {{"1", "2"}, {"1", "1"}}));
    ConditionReport r4 = verify_conditions(bad4);
    CHECK_FALSE(r4.pass);
    REQUIRE(r4.violation.has_value());
    CHECK(r4.violation->condition == 4);
    CHECK(r4.violation->value == "2");
}

TEST_CASE("with D = I the surviving structure constants are positive units") {
    // n^3 triples per generated instance
    for (RingKind kind : all_rings()) {
        for (int i = 0; i < 15; ++i) {
            GenSpec spec{kind, static_cast<std::size_t>(2 + i % 3),
                         5300 + static_cast<std::uint64_t>(i), 8, {}};
            StructureData s = gen_structure_data(spec);
            REQUIRE(verify_conditions(s).pass);
            REQUIRE(verify_product_law(s).pass);
            for (std::size_t i1 = 0; i1 < s.n; ++i1)
                for (std::size_t j = 0; j < s.n; ++j)
                    for (std::size_t t = 0; t < s.n; ++t) {
                        FieldElem triple = s.q(i1, j) * s.q(j, t) / s.q(i1, t);
                        CHECK(triple.is_positive_ring_unit());
                    }
        }
    }
}

TEST_CASE("basis is linearly independent and expansion round-trips") {
    for (RingKind kind : all_rings()) {
        SeededStream s(4242, static_cast<std::uint64_t>(kind));
        for (int i = 0; i < 10; ++i) {
            GenSpec spec{kind, static_cast<std::size_t>(2 + i % 2),
                         6400 + static_cast<std::uint64_t>(i), 5, {}};
            StructureData data = gen_structure_data(spec);
            std::vector<Mat> basis = build_basis(data);
            Mat coeffs = random_ring_matrix(s, kind, data.n, 7);
            Mat x = reconstruct(data, coeffs);
            CHECK(expand_in_basis(basis, x) == coeffs);
        }
    }

    // a dependent family is rejected
    StructureData g = gauge3_int();
    std::vector<Mat> dup = build_basis(g);
    dup[1] = dup[0];
    CHECK(thrown_code([&] { expand_in_basis(dup, Mat::identity(g.ring, 3)); }) ==
          Errc::NotABasis);
}

TEST_CASE("identity expansion: closed form, reconstruction, and cone flags") {
    // k hadamard q = D^{-1} regardless of H; sum k_ij B_ij = I
    for (RingKind kind : all_rings()) {
        for (int i = 0; i < 12; ++i) {
            GenSpec usual{kind, static_cast<std::size_t>(2 + i % 3),
                          7500 + static_cast<std::uint64_t>(i), 6, {}};
            StructureData s = gen_structure_data(usual);
            IdentityExpansion e = expand_identity(s);
            CHECK(e.coeffs.hadamard(s.q) == s.d.inverse());
            CHECK(reconstruct(s, e.coeffs) == Mat::identity(kind, s.n));
            CHECK(e.in_ring);
            CHECK(e.in_cone);   // gauge data: I is in the candidate cone
        }
    }

    RingKind z = RingKind::Integers;
    Mat ones = mat(z, {{"1", "1"}, {"1", "1"}});
    StructureData corner = checked_structure_data(
        Mat::identity(z, 2), mat(z, {{"1", "1"}, {"1", "0"}}), ones);
    IdentityExpansion ce = expand_identity(corner);
    CHECK(ce.coeffs == mat(z, {{"0", "1"}, {"1", "-1"}}));   // D^{-1} entrywise
    CHECK(ce.in_ring);
    CHECK_FALSE(ce.in_cone);   // the -1 coefficient keeps I outside the cone
    CHECK(reconstruct(corner, ce.coeffs) == Mat::identity(z, 2));

    // fractional coefficients leave the ring when q is scaled up
    StructureData frac = checked_structure_data(
        Mat::identity(z, 2), Mat::identity(z, 2), mat(z, {{"2", "1"}, {"1", "1"}}));
    IdentityExpansion fe2 = expand_identity(frac);
    CHECK(fe2.coeffs(0, 0) == fe(z, "1/2"));
    CHECK_FALSE(fe2.in_ring);
    CHECK_FALSE(fe2.in_cone);
}

TEST_CASE("gauge transform leaves triple products unchanged") {
    RingKind q = RingKind::QuadraticSqrt2;
    Mat units = mat(q, {{"1", "1+1*s2"}, {"3+2*s2", "1"}});
    std::vector<FieldElem> g1 = {fe(q, "1"), fe(q, "2")};
    std::vector<FieldElem> g2 = {fe(q, "1+1*s2"), fe(q, "7")};
    StructureData s1 = make_gauge_structure(Mat::identity(q, 2), g1, units);
    StructureData s2 = make_gauge_structure(Mat::identity(q, 2), g2, units);
    CHECK(s1.q != s2.q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < 2; ++t) {
                FieldElem t1 = s1.q(i, j) * s1.q(j, t) / s1.q(i, t);
                FieldElem t2 = s2.q(i, j) * s2.q(j, t) / s2.q(i, t);
                CHECK(t1 == t2);
            }
    CHECK(verify_conditions(s1).pass);
    CHECK(verify_conditions(s2).pass);
}

TEST_CASE("gauge structure frozen value") {
    StructureData s = gauge3_int();
    RingKind z = RingKind::Integers;
    CHECK(s.q == mat(z, {{"1", "1/2", "1/3"}, {"2", "1", "2/3"}, {"3", "3/2", "1"}}));
    CHECK(s.d == Mat::identity(z, 3));
    CHECK(verify_conditions(s).pass);
}
