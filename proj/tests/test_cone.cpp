#include <doctest.h>

#include "latmat/cone.hpp"
#include "latmat/oracle.hpp"
#include "latmat/rng.hpp"

#include "helpers.hpp"

using namespace latmat;
using namespace latmat::testutil;

namespace {

// random element of the cone: A * (nonneg matrix)
Mat cone_element(SeededStream& s, const ConeA& p, int bound) {
    return p.matrix() * random_nonneg_matrix(s, p.kind(), p.n(), bound);
}

Mat signed_element(SeededStream& s, const ConeA& p, int bound) {
    return cone_element(s, p, bound) - cone_element(s, p, bound);
}

}  // namespace

TEST_CASE("cone validation") {
    RingKind z = RingKind::Integers;
    CHECK_NOTHROW(ConeA::validate(Mat::identity(z, 2)));
    CHECK_NOTHROW(ConeA::validate(mat(z, {{"1", "1"}, {"1", "0"}})));   // det -1
    CHECK(thrown_code([&] { ConeA::validate(mat(z, {{"1", "0"}, {"0", "2"}})); }) ==
          Errc::NotAUnit);
    CHECK(thrown_code([&] { ConeA::validate(mat(z, {{"1", "-1"}, {"0", "1"}})); }) ==
          Errc::NegativeEntry);
    CHECK(thrown_code([&] { ConeA::validate(mat(z, {{"1", "0"}})); }) == Errc::UsageError);
    // entries must lie in R, not merely K
    CHECK(thrown_code([&] { ConeA::validate(mat(z, {{"1/2", "0"}, {"0", "2"}})); }) ==
          Errc::NegativeEntry);
    // over the rationals any positive determinant is a unit
    CHECK_NOTHROW(ConeA::validate(mat(RingKind::Rationals, {{"1", "0"}, {"0", "2"}})));
    // over Z[sqrt(2)] a unit determinant that is not +-1
    CHECK_NOTHROW(ConeA::validate(mat(RingKind::QuadraticSqrt2,
                                      {{"1+1*s2", "1"}, {"0", "1"}})));
}

TEST_CASE("membership via cone coordinates") {
    RingKind z = RingKind::Integers;
    ConeA p = ConeA::validate(mat(z, {{"1", "1"}, {"1", "0"}}));
    Mat e11 = Mat::unit_matrix(z, 2, 0, 0);
    Mat e22 = Mat::unit_matrix(z, 2, 1, 1);
    CHECK(p.coords(e11) == mat(z, {{"0", "0"}, {"1", "0"}}));
    CHECK(p.contains(e11));
    CHECK(p.coords(e22) == mat(z, {{"0", "1"}, {"0", "-1"}}));
    CHECK_FALSE(p.contains(e22));
    CHECK(p.contains(Mat(z, 2, 2)));   // zero is in every cone

    // the identity cone is entrywise nonnegativity
    ConeA usual = ConeA::validate(Mat::identity(z, 2));
    CHECK(usual.contains(mat(z, {{"0", "3"}, {"2", "0"}})));
    CHECK_FALSE(usual.contains(mat(z, {{"0", "-1"}, {"0", "0"}})));
    // membership needs coordinates in R+, not merely nonnegative in K
    CHECK_FALSE(usual.contains(mat(z, {{"1/2", "0"}, {"0", "0"}})));
}

TEST_CASE("join and meet frozen values") {
    RingKind z = RingKind::Integers;
    ConeA p = ConeA::validate(mat(z, {{"1", "1"}, {"1", "0"}}));
    Mat e11 = Mat::unit_matrix(z, 2, 0, 0);
    Mat e22 = Mat::unit_matrix(z, 2, 1, 1);
    CHECK(p.join(e11, -e11) == e11);
    CHECK(p.join(e11, e11) == e11);
    CHECK(p.join(e11, e22) == mat(z, {{"1", "1"}, {"0", "1"}}));
    CHECK(p.meet(e11, -e11) == -e11);

    ConeA usual = ConeA::validate(Mat::identity(z, 2));
    Mat x = mat(z, {{"1", "-2"}, {"0", "5"}});
    Mat y = mat(z, {{"0", "3"}, {"1", "-1"}});
    CHECK(usual.join(x, y) == mat(z, {{"1", "3"}, {"1", "5"}}));
    CHECK(usual.meet(x, y) == mat(z, {{"0", "-2"}, {"0", "-1"}}));
    // join + meet = x + y in any lattice-ordered group
    CHECK(usual.join(x, y) + usual.meet(x, y) == x + y);
}

TEST_CASE("join computes the least upper bound") {
    for (RingKind kind : all_rings()) {
        SeededStream s(31337, static_cast<std::uint64_t>(kind));
        for (int it = 0; it < 200; ++it) {
            GenSpec spec{kind, static_cast<std::size_t>(2 + it % 3), 9000 + static_cast<std::uint64_t>(it), 5, {}};
            ConeA p = gen_cone(spec);
            Mat x = signed_element(s, p, 5);
            Mat y = signed_element(s, p, 5);
            Mat join = p.join(x, y);
            CHECK(p.contains(join - x));
            CHECK(p.contains(join - y));
            // every constructed upper bound dominates the join
            for (int zc = 0; zc < 5; ++zc) {
                Mat upper = join + cone_element(s, p, 4);
                CHECK(p.contains(upper - join));
                CHECK(p.contains(upper - x));
                CHECK(p.contains(upper - y));
            }
            // and any random matrix that happens to dominate x and y
            // dominates the join
            for (int zc = 0; zc < 5; ++zc) {
                Mat cand = signed_element(s, p, 5);
                if (p.contains(cand - x) && p.contains(cand - y)) {
                    CHECK(p.contains(cand - join));
                }
            }
            // meet is the dual
            Mat meet = p.meet(x, y);
            CHECK(p.contains(x - meet));
            CHECK(p.contains(y - meet));
        }
    }
}

TEST_CASE("join is translation invariant and positive-scalar equivariant") {
    for (RingKind kind : all_rings()) {
        SeededStream s(555, static_cast<std::uint64_t>(kind));
        for (int it = 0; it < 150; ++it) {
            GenSpec spec{kind, static_cast<std::size_t>(2 + it % 3), 17000 + static_cast<std::uint64_t>(it), 5, {}};
            ConeA p = gen_cone(spec);
            Mat x = signed_element(s, p, 5);
            Mat y = signed_element(s, p, 5);
            Mat w = signed_element(s, p, 5);
            CHECK(p.join(x + w, y + w) == p.join(x, y) + w);
            CHECK(p.meet(x + w, y + w) == p.meet(x, y) + w);
            FieldElem r(random_positive_elem(s, kind, 6));
            CHECK(p.join(x.scaled(r), y.scaled(r)) == p.join(x, y).scaled(r));
        }
    }
}

TEST_CASE("cone is closed under products of its elements") {
    for (RingKind kind : all_rings()) {
        SeededStream s(808, static_cast<std::uint64_t>(kind));
        for (int it = 0; it < 150; ++it) {
            GenSpec spec{kind, static_cast<std::size_t>(2 + it % 3), 23000 + static_cast<std::uint64_t>(it), 4, {}};
            ConeA p = gen_cone(spec);
            Mat u = cone_element(s, p, 4);
            Mat v = cone_element(s, p, 4);
            CHECK(p.contains(u + v));
            CHECK(p.contains(u * v));
            CHECK(p.contains(u.scaled(FieldElem(random_positive_elem(s, kind, 5)))));
        }
    }
}

TEST_CASE("sampled axiom checker accepts valid cones") {
    RingKind z = RingKind::Integers;
    AxiomReport usual = check_order_axioms(ConeA::validate(Mat::identity(z, 2)), 7, 200);
    CHECK(usual.pass);
    CHECK(usual.failures.empty());

    AxiomReport corner =
        check_order_axioms(ConeA::validate(mat(z, {{"1", "1"}, {"1", "0"}})), 7, 200);
    CHECK(corner.pass);

    AxiomReport quad = check_order_axioms(
        ConeA::validate(mat(RingKind::QuadraticSqrt2, {{"1+1*s2", "1"}, {"0", "1"}})), 7, 100);
    CHECK(quad.pass);

    // deterministic in the seed
    AxiomReport again = check_order_axioms(ConeA::validate(Mat::identity(z, 2)), 7, 200);
    CHECK(again.pass == usual.pass);
    CHECK(again.failures.size() == usual.failures.size());
}

TEST_CASE("sampled axiom checker rejects a generator smuggled past validation") {
    RingKind z = RingKind::Integers;
    // negative entry: the "cone" is not closed under multiplication
    ConeA bad = ConeA::unchecked(mat(z, {{"1", "-1"}, {"0", "1"}}));
    AxiomReport report = check_order_axioms(bad, 11, 200);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.failures.empty());
    CHECK_FALSE(report.failures.front().axiom.empty());
    CHECK_FALSE(report.failures.front().witness.empty());
}
