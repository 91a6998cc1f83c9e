#include "latmat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace latmat {

bool membership_oracle(const ConeA& cone, const Mat& x) {
    Mat y = solve_linear(cone.matrix(), x);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (!y(i, j).in_ring_nonneg()) return false;
    return true;
}

RingElem random_nonneg_elem(SeededStream& s, RingKind kind, int bound) {
    switch (kind) {
        case RingKind::Integers:
            return RingElem::of_int(kind, Int(s.below(bound + 1)));
        case RingKind::Rationals:
            return RingElem::rational(Int(s.below(bound + 1)), Int(1 + s.below(bound)));
        case RingKind::QuadraticSqrt2:
            return RingElem::quadratic(Int(s.below(bound + 1)), Int(s.below(bound / 2 + 1)));
    }
    fail(Errc::UsageError, "bad ring kind");
}

RingElem random_positive_elem(SeededStream& s, RingKind kind, int bound) {
    switch (kind) {
        case RingKind::Integers:
            return RingElem::of_int(kind, Int(1 + s.below(bound)));
        case RingKind::Rationals:
            return RingElem::rational(Int(1 + s.below(bound)), Int(1 + s.below(bound)));
        case RingKind::QuadraticSqrt2:
            return RingElem::quadratic(Int(1 + s.below(bound)), Int(s.below(bound / 2 + 1)));
    }
    fail(Errc::UsageError, "bad ring kind");
}

RingElem random_signed_elem(SeededStream& s, RingKind kind, int bound) {
    if (kind == RingKind::QuadraticSqrt2)
        return RingElem::quadratic(Int(s.range(-bound, bound)), Int(s.range(-bound, bound)));
    RingElem x = random_nonneg_elem(s, kind, bound);
    return s.coin() ? -x : x;
}

RingElem random_positive_unit(SeededStream& s, RingKind kind, int exponent_bound) {
    switch (kind) {
        case RingKind::Integers:
            return RingElem::one(kind);
        case RingKind::Rationals:
            return RingElem::rational(Int(1 + s.below(exponent_bound * 4 + 1)),
                                      Int(1 + s.below(exponent_bound * 4 + 1)));
        case RingKind::QuadraticSqrt2: {
            // the positive units are (1 + sqrt(2))^k
            std::int64_t k = s.range(-exponent_bound, exponent_bound);
            RingElem base = k < 0 ? RingElem::quadratic(-1, 1) : RingElem::quadratic(1, 1);
            RingElem u = RingElem::one(kind);
            for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) u = u * base;
            return u;
        }
    }
    fail(Errc::UsageError, "bad ring kind");
}

FieldElem random_positive_field_elem(SeededStream& s, RingKind kind, int bound) {
    return FieldElem(random_positive_elem(s, kind, bound)) /
           FieldElem(random_positive_elem(s, kind, bound));
}

Mat random_ring_matrix(SeededStream& s, RingKind kind, std::size_t n, int bound) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, FieldElem(random_signed_elem(s, kind, bound)));
    return m;
}

Mat random_nonneg_matrix(SeededStream& s, RingKind kind, std::size_t n, int bound) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, FieldElem(random_nonneg_elem(s, kind, bound)));
    return m;
}

namespace {

Mat random_permutation(SeededStream& s, RingKind kind, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[s.below(i)]);
    Mat p(kind, n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(i, perm[i], FieldElem::one(kind));
    return p;
}

Mat random_unitriangular(SeededStream& s, RingKind kind, std::size_t n, int bound, bool upper) {
    Mat m = Mat::identity(kind, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RingElem v = random_nonneg_elem(s, kind, bound);
            if (upper) m.set(i, j, FieldElem(v));
            else m.set(j, i, FieldElem(v));
        }
    return m;
}

Mat random_unit_diagonal(SeededStream& s, RingKind kind, std::size_t n) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, FieldElem(random_positive_unit(s, kind, 2)));
    return m;
}

// Invertible over K: a product of shears, a nonzero diagonal and a
// permutation.
Mat random_invertible(SeededStream& s, RingKind kind, std::size_t n, int bound) {
    Mat h = random_permutation(s, kind, n);
    std::size_t shears = 1 + s.below(3);
    for (std::size_t t = 0; t < shears; ++t) {
        std::size_t i = s.below(n);
        std::size_t j = s.below(n);
        if (i == j) continue;
        Mat f = Mat::identity(kind, n);
        f.set(i, j, FieldElem(random_signed_elem(s, kind, std::max(1, bound / 3))));
        h = h * f;
    }
    Mat diag(kind, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RingElem v = random_positive_elem(s, kind, bound);
        diag.set(i, i, s.coin() ? FieldElem(v) : FieldElem(v).inverse());
    }
    return h * diag;
}

StructureData gen_usual(SeededStream& s, const GenSpec& spec) {
    const RingKind kind = spec.ring;
    const std::size_t n = spec.n;
    Mat h = random_invertible(s, kind, n, spec.bound);
    std::vector<FieldElem> gauges;
    gauges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        gauges.push_back(random_positive_field_elem(s, kind, spec.bound));
    Mat units(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            units.set(i, j, FieldElem(random_positive_unit(s, kind, 2)));
    return make_gauge_structure(h, gauges, units);
}

StructureData gen_corner(SeededStream& s, const GenSpec& spec) {
    if (spec.n != 2) fail(Errc::UsageError, "the corner family is 2x2");
    const RingKind kind = spec.ring;
    Mat q(kind, 2, 2);
    FieldElem q11(random_positive_elem(s, kind, spec.bound));
    FieldElem w(random_positive_unit(s, kind, 2));
    q.set(0, 0, q11);
    q.set(0, 1, FieldElem(random_positive_unit(s, kind, 2)));
    q.set(1, 0, FieldElem(random_positive_unit(s, kind, 2)));
    q.set(1, 1, w / q11);
    Mat d(kind, 2, 2);
    d.set(0, 0, FieldElem::one(kind));
    d.set(0, 1, FieldElem::one(kind));
    d.set(1, 0, FieldElem::one(kind));
    Mat h = random_invertible(s, kind, 2, spec.bound);
    return checked_structure_data(h, d, q);
}

StructureData gen_parametric(SeededStream& s, const GenSpec& spec) {
    if (spec.n != 2) fail(Errc::UsageError, "the parametric family is 2x2");
    const CaseTag& tag = *spec.case_tag;
    const RingKind kind = spec.ring;
    const FieldElem a = tag.a;
    const FieldElem b = tag.b;
    if (!(b > FieldElem::zero(kind)) || !(a > b))
        fail(Errc::UsageError, "parametric generation needs a > b > 0");
    Mat d(kind, 2, 2);
    d.set(0, 0, FieldElem::one(kind));
    d.set(0, 1, FieldElem::one(kind));
    d.set(1, 0, a);
    d.set(1, 1, b);
    const int tries = 600;
    for (int t = 0; t < tries; ++t) {
        Mat q(kind, 2, 2);
        q.set(0, 0, FieldElem(random_positive_elem(s, kind, spec.bound)));
        q.set(1, 0, FieldElem(random_positive_elem(s, kind, spec.bound)));
        q.set(0, 1, FieldElem(random_positive_elem(s, kind, spec.bound)) / a);
        q.set(1, 1, FieldElem(random_positive_elem(s, kind, spec.bound)) / b);
        FieldElem eps = q(0, 0) * q(0, 1) * q(1, 0) * q(1, 1) * (b - a) * (b - a);
        if (!eps.is_ring_unit()) continue;
        FieldElem mu = q(0, 0) * q(1, 1) / (q(0, 1) * q(1, 0));
        if (!mu.is_positive_ring_unit()) continue;
        Mat h = random_invertible(s, kind, 2, spec.bound);
        StructureData data = checked_structure_data(h, d, q);
        if (!verify_conditions(data).pass) continue;
        return data;
    }
    fail(Errc::ResourceExhausted,
         "no parametric structure data found within " + std::to_string(tries) +
         " tries (the unit constraints may have no solutions for these parameters)");
}

}  // namespace

ConeA gen_cone(const GenSpec& spec) {
    if (spec.n < 1 || spec.bound < 1)
        fail(Errc::UsageError, "n and bound must be positive");
    const int tries = 32;
    for (int t = 0; t < tries; ++t) {
        SeededStream s(spec.seed, 0x636f6e65ull + static_cast<std::uint64_t>(t));
        Mat a = random_permutation(s, spec.ring, spec.n);
        std::size_t factors = 1 + s.below(3);
        for (std::size_t f = 0; f < factors; ++f) {
            switch (s.below(4)) {
                case 0: a = a * random_permutation(s, spec.ring, spec.n); break;
                case 1: a = a * random_unitriangular(s, spec.ring, spec.n, std::max(1, spec.bound / 2), true); break;
                case 2: a = a * random_unitriangular(s, spec.ring, spec.n, std::max(1, spec.bound / 2), false); break;
                default: a = a * random_unit_diagonal(s, spec.ring, spec.n); break;
            }
        }
        try {
            return ConeA::validate(a);
        } catch (const Error&) {
            continue;   // cannot happen by construction; retry defensively
        }
    }
    fail(Errc::ResourceExhausted, "no valid cone generator found");
}

StructureData gen_structure_data(const GenSpec& spec) {
    if (spec.n < 1 || spec.bound < 1)
        fail(Errc::UsageError, "n and bound must be positive");
    SeededStream s(spec.seed, 0x73747275ull);
    CaseTag::Family family =
        spec.case_tag ? spec.case_tag->family : CaseTag::Family::Usual;
    switch (family) {
        case CaseTag::Family::Usual: return gen_usual(s, spec);
        case CaseTag::Family::Corner: return gen_corner(s, spec);
        case CaseTag::Family::Parametric:
            if (!spec.case_tag) fail(Errc::UsageError, "parametric generation needs parameters");
            return gen_parametric(s, spec);
    }
    fail(Errc::UsageError, "bad case family");
}

StructureData make_gauge_structure(const Mat& h, const std::vector<FieldElem>& gauges,
                                   const Mat& units) {
    const std::size_t n = h.rows();
    const RingKind kind = h.kind();
    if (!h.is_square()) fail(Errc::UsageError, "H must be square");
    if (gauges.size() != n) fail(Errc::UsageError, "need one gauge per index");
    if (units.rows() != n || units.cols() != n || units.kind() != kind)
        fail(Errc::UsageError, "unit matrix shape mismatch");
    for (const FieldElem& g : gauges) {
        if (g.kind() != kind) fail(Errc::UsageError, "gauge ring kind mismatch");
        if (g.sign() <= 0) fail(Errc::UsageError, "gauges must be positive");
    }
    Mat q(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!units(i, j).is_positive_ring_unit())
                fail(Errc::UsageError, "u_" + std::to_string(i + 1) + std::to_string(j + 1) +
                     " = " + units(i, j).str() + " is not a positive unit");
            q.set(i, j, gauges[i] * units(i, j) / gauges[j]);
        }
    return checked_structure_data(h, Mat::identity(kind, n), q);
}

}  // namespace latmat
