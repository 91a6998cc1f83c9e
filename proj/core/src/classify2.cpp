#include "latmat/classify2.hpp"

namespace latmat {
namespace {

void require_positive_2x2(const Mat& q) {
    if (!q.is_square() || q.rows() != 2) fail(Errc::UsageError, "Q must be 2x2");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (q(i, j).sign() <= 0)
                fail(Errc::PreconditionFailed,
                     "Q entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") = " + q(i, j).str() + " is not strictly positive");
}

void require_in_ring_positive(const FieldElem& x, const std::string& what) {
    if (!x.in_ring_positive())
        fail(Errc::PreconditionFailed, what + " = " + x.str() + " must lie in R+");
}

void require_positive_unit(const FieldElem& x, const std::string& what) {
    if (!x.is_positive_ring_unit())
        fail(Errc::PreconditionFailed,
             what + " = " + x.str() + " must be a positive unit of R");
}

Mat corner_d(RingKind kind) {
    Mat d(kind, 2, 2);
    d.set(0, 0, FieldElem::one(kind));
    d.set(0, 1, FieldElem::one(kind));
    d.set(1, 0, FieldElem::one(kind));
    return d;
}

}  // namespace

const char* family_name(CaseTag::Family family) noexcept {
    switch (family) {
        case CaseTag::Family::Usual: return "usual";
        case CaseTag::Family::Corner: return "corner";
        case CaseTag::Family::Parametric: return "parametric";
    }
    return "?";
}

CaseTag::Family family_from_name(const std::string& name) {
    if (name == "usual") return CaseTag::Family::Usual;
    if (name == "corner") return CaseTag::Family::Corner;
    if (name == "param" || name == "parametric") return CaseTag::Family::Parametric;
    fail(Errc::ParseError, "unknown case '" + name + "' (expected usual, corner or param)");
}

CaseTag detect_case(const Mat& d) {
    if (!d.is_square() || d.rows() != 2) fail(Errc::UsageError, "D must be 2x2");
    const RingKind kind = d.kind();
    CaseTag tag;
    if (d == Mat::identity(kind, 2)) {
        tag.family = CaseTag::Family::Usual;
        return tag;
    }
    if (d == corner_d(kind)) {
        tag.family = CaseTag::Family::Corner;
        return tag;
    }
    const FieldElem one = FieldElem::one(kind);
    const FieldElem zero = FieldElem::zero(kind);
    if (d(0, 0) == one && d(0, 1) == one && d(1, 0) > d(1, 1) && d(1, 1) > zero) {
        tag.family = CaseTag::Family::Parametric;
        tag.a = d(1, 0);
        tag.b = d(1, 1);
        return tag;
    }
    fail(Errc::UnrecognizedD,
         "D = " + d.to_string() + " matches none of the classified families");
}

IsoMap build_case2(const Mat& q) {
    require_positive_2x2(q);
    const RingKind kind = q.kind();
    require_in_ring_positive(q(0, 0), "q11");
    require_positive_unit(q(0, 1), "q12");
    require_positive_unit(q(1, 0), "q21");
    FieldElem w = q(0, 0) * q(1, 1);
    require_positive_unit(w, "q11 q22");

    Mat a(kind, 2, 2);
    a.set(0, 0, q(0, 0));
    a.set(0, 1, q(1, 0));
    a.set(1, 0, q(0, 1));
    // a(1,1) stays 0; det(a) = -q12 q21, a unit
    ConeA cone = ConeA::validate(a);

    Mat x(kind, 2, 2);
    const FieldElem one = FieldElem::one(kind);
    x.set(0, 0, one);
    x.set(0, 1, one);
    x.set(1, 0, one);
    FieldElem x22 = w / (q(0, 1) * q(1, 0));
    if (!x22.is_positive_ring_unit())
        fail(Errc::InternalCheckFailed, "x22 = " + x22.str() + " is not a positive unit");
    x.set(1, 1, x22);

    IsoMap iso(x, cone);
    StructureData s = checked_structure_data(Mat::identity(kind, 2), corner_d(kind), q);
    verify_iso_on_generators(iso, s);
    return iso;
}

RingElem mu_assertion(const Mat& q) {
    require_positive_2x2(q);
    FieldElem mu = q(0, 0) * q(1, 1) / (q(0, 1) * q(1, 0));
    if (!mu.is_positive_ring_unit())
        fail(Errc::AssertionFailed,
             "mu = q11 q22 / (q12 q21) = " + mu.str() + " is not a positive unit of " +
             ring_name(q.kind()));
    return mu.as_ring();
}

Case3Result build_case3(const Mat& q, const FieldElem& a, const FieldElem& b) {
    require_positive_2x2(q);
    const RingKind kind = q.kind();
    if (a.kind() != kind || b.kind() != kind)
        fail(Errc::UsageError, "parameter ring kind mismatch");
    require_in_ring_positive(b, "b");
    require_in_ring_positive(a, "a");
    if (!(b < a)) fail(Errc::PreconditionFailed, "the parameters must satisfy a > b > 0");

    require_in_ring_positive(q(0, 0), "q11");
    require_in_ring_positive(q(1, 0), "q21");
    FieldElem aq12 = a * q(0, 1);
    FieldElem bq22 = b * q(1, 1);
    require_in_ring_positive(aq12, "a q12");
    require_in_ring_positive(bq22, "b q22");

    FieldElem det_d = b - a;
    FieldElem eps = q(0, 0) * q(0, 1) * q(1, 0) * q(1, 1) * det_d * det_d;
    if (!eps.is_ring_unit())
        fail(Errc::PreconditionFailed,
             "epsilon = (prod q)(det D)^2 = " + eps.str() + " is not a unit of " +
             ring_name(kind));

    RingElem mu = mu_assertion(q);
    const FieldElem mu_f(mu);

    Mat c(kind, 2, 2);
    c.set(0, 0, q(0, 0));
    c.set(0, 1, q(1, 0));
    c.set(1, 0, aq12);
    c.set(1, 1, bq22 / mu_f);
    // det(c) = (b - a) q12 q21; its square is eps / mu, so it is a unit
    ConeA cone = ConeA::validate(c);
    if (cone.matrix().det() != det_d * q(0, 1) * q(1, 0))
        fail(Errc::InternalCheckFailed, "determinant of C disagrees with (b - a) q12 q21");

    Mat p(kind, 2, 2);
    const FieldElem one = FieldElem::one(kind);
    p.set(0, 0, one);
    p.set(0, 1, one);
    p.set(1, 0, one);
    p.set(1, 1, mu_f);

    Mat d(kind, 2, 2);
    d.set(0, 0, one);
    d.set(0, 1, one);
    d.set(1, 0, a);
    d.set(1, 1, b);
    StructureData s = checked_structure_data(Mat::identity(kind, 2), d, q);

    IsoMap iso(p, cone);
    verify_iso_on_generators(iso, s);

    Case3Report report{FieldElem::zero(kind), RingElem::zero(kind), mu,
                       std::nullopt, std::nullopt, Mat(kind, 2, 2), GcdChecks{}};
    report.epsilon = eps.as_ring();
    report.m = a / (a - b);
    report.k = expand_identity(s).coeffs;

    // identities tying the report together; failures here are bugs
    const FieldElem m = report.m;
    const FieldElem m1 = m - one;
    if (report.k(1, 0) * q(1, 0) != m || report.k(0, 1) * aq12 != m)
        fail(Errc::InternalCheckFailed, "k21 q21 = a k12 q12 = m fails");
    if (report.k(0, 0) * q(0, 0) != one - m || report.k(1, 1) * bq22 != one - m)
        fail(Errc::InternalCheckFailed, "k11 q11 = b k22 q22 = 1 - m fails");
    if (q(0, 0) * aq12 * q(1, 0) * bq22 != m1 * m * eps)
        fail(Errc::InternalCheckFailed, "a q12 q21 b q22 q11 = (m - 1) m epsilon fails");

    if (kind == RingKind::Rationals) {
        report.gcd.status = GcdChecks::Status::VacuousField;
        report.gcd.coprime = {true, true, true, true};
    } else if (m.is_in_ring() && m1.is_in_ring()) {
        report.gcd.status = GcdChecks::Status::Applied;
        const RingElem mr = m.as_ring();
        const RingElem m1r = m1.as_ring();
        report.gcd.coprime = {
            gcd(mr, q(0, 0).as_ring()).is_unit(),
            gcd(mr, bq22.as_ring()).is_unit(),
            gcd(m1r, q(1, 0).as_ring()).is_unit(),
            gcd(m1r, aq12.as_ring()).is_unit(),
        };
    }

    // With mu oriented as q11 q22 / (q12 q21), the unit factors of
    // epsilon are mu1 = a q12 q21 / m and mu2 = b q11 q22 / (m - 1),
    // so that mu = mu2 / mu1.
    FieldElem mu1_f = aq12 * q(1, 0) / m;
    FieldElem mu2_f = bq22 * q(0, 0) / m1;
    if (mu1_f.is_ring_unit() && mu2_f.is_ring_unit()) {
        report.mu1 = mu1_f.as_ring();
        report.mu2 = mu2_f.as_ring();
        if (mu1_f * mu2_f != eps)
            fail(Errc::InternalCheckFailed, "mu1 mu2 = epsilon fails");
        if (mu2_f / mu1_f != mu_f)
            fail(Errc::InternalCheckFailed, "mu = mu2 / mu1 fails");
    }

    return Case3Result{std::move(iso), std::move(report)};
}

Classification classify(const StructureData& s) {
    if (s.n != 2) fail(Errc::UsageError, "classification applies to 2x2 structure data");
    ConditionReport conditions = verify_conditions(s);
    if (!conditions.pass)
        fail(Errc::PreconditionFailed,
             "structure data violates condition " +
             std::to_string(conditions.violation->condition) + " (value " +
             conditions.violation->value + ")");
    ProductLawReport law = verify_product_law(s);
    if (!law.pass)
        fail(Errc::InternalCheckFailed, "basis product law fails: " + law.violation->lhs +
             " vs " + law.violation->rhs);

    CaseTag tag = detect_case(s.d);
    switch (tag.family) {
        case CaseTag::Family::Usual: {
            IsoMap iso = weinberg_pipeline(s);
            return Classification{tag, std::move(iso), std::nullopt};
        }
        case CaseTag::Family::Corner: {
            IsoMap bare = build_case2(s.q);
            IsoMap iso(bare.scalars(), bare.target(), build_basis(s));
            return Classification{tag, std::move(iso), std::nullopt};
        }
        case CaseTag::Family::Parametric: {
            Case3Result r = build_case3(s.q, tag.a, tag.b);
            if (r.report.k != expand_identity(s).coeffs)
                fail(Errc::InternalCheckFailed,
                     "identity coefficients disagree across presentations");
            IsoMap iso(r.iso.scalars(), r.iso.target(), build_basis(s));
            return Classification{tag, std::move(iso), std::move(r.report)};
        }
    }
    fail(Errc::UsageError, "bad case family");
}

}  // namespace latmat
