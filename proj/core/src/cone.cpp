#include "latmat/cone.hpp"

#include <sstream>

#include "latmat/rng.hpp"

namespace latmat {
namespace {

RingElem rand_nonneg_elem(SeededStream& s, RingKind kind, int bound) {
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

RingElem rand_signed_elem(SeededStream& s, RingKind kind, int bound) {
    RingElem x = rand_nonneg_elem(s, kind, bound);
    return s.coin() ? -x : x;
}

Mat rand_nonneg_mat(SeededStream& s, RingKind kind, std::size_t n, int bound) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, FieldElem(rand_nonneg_elem(s, kind, bound)));
    return m;
}

Mat rand_signed_mat(SeededStream& s, RingKind kind, std::size_t n, int bound) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, FieldElem(rand_signed_elem(s, kind, bound)));
    return m;
}

}  // namespace

ConeA ConeA::validate(const Mat& a) {
    if (!a.is_square()) fail(Errc::UsageError, "cone generator must be square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const FieldElem& x = a(i, j);
            if (!x.is_in_ring() || x.sign() < 0)
                fail(Errc::NegativeEntry,
                     "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") = " + x.str() + " is not in R+");
        }
    // inverse_unit throws NotAUnit when det is not a unit of R
    Mat inv = a.inverse_unit();
    return ConeA(a, std::move(inv));
}

ConeA ConeA::unchecked(const Mat& a) {
    return ConeA(a, a.inverse());
}

Mat ConeA::coords(const Mat& x) const {
    return a_inv_ * x;
}

bool ConeA::contains(const Mat& x) const {
    Mat c = coords(x);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (!c(i, j).in_ring_nonneg()) return false;
    return true;
}

Mat ConeA::join(const Mat& x, const Mat& y) const {
    return a_ * coords(x).entrywise_max(coords(y));
}

Mat ConeA::meet(const Mat& x, const Mat& y) const {
    return a_ * coords(x).entrywise_min(coords(y));
}

AxiomReport check_order_axioms(const ConeA& cone, std::uint64_t seed, int samples) {
    AxiomReport report;
    report.seed = seed;
    report.samples = samples;
    const RingKind kind = cone.kind();
    const std::size_t n = cone.n();
    const int bound = 6;
    auto record = [&](const std::string& axiom, int sample, const std::string& witness) {
        report.pass = false;
        if (report.failures.size() < 8)
            report.failures.push_back({axiom, sample, witness});
    };
    for (int it = 0; it < samples; ++it) {
        SeededStream s(seed, static_cast<std::uint64_t>(it));
        Mat x1 = cone.matrix() * rand_nonneg_mat(s, kind, n, bound);
        Mat x2 = cone.matrix() * rand_nonneg_mat(s, kind, n, bound);
        if (!cone.contains(x1 + x2))
            record("additive-closure", it, (x1 + x2).to_string());
        if (!cone.contains(x1 * x2))
            record("multiplicative-closure", it, (x1 * x2).to_string());
        FieldElem r(rand_nonneg_elem(s, kind, bound));
        if (!cone.contains(x1.scaled(r)))
            record("scalar-closure", it, x1.scaled(r).to_string());
        if (!x1.is_zero() && cone.contains(-x1))
            record("antisymmetry", it, x1.to_string());
        Mat z1 = cone.matrix() * rand_signed_mat(s, kind, n, bound);
        Mat z2 = cone.matrix() * rand_signed_mat(s, kind, n, bound);
        Mat tops = cone.join(z1, z2);
        Mat bots = cone.meet(z1, z2);
        if (!cone.contains(tops - z1) || !cone.contains(tops - z2))
            record("join-upper-bound", it, tops.to_string());
        if (!cone.contains(z1 - bots) || !cone.contains(z2 - bots))
            record("meet-lower-bound", it, bots.to_string());
        if (cone.join(z1, bots) != z1)
            record("absorption-join", it, z1.to_string() + " vs " + cone.join(z1, bots).to_string());
        if (cone.meet(z1, tops) != z1)
            record("absorption-meet", it, z1.to_string() + " vs " + cone.meet(z1, tops).to_string());
    }
    return report;
}

}  // namespace latmat
