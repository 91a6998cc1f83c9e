#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>

#include "latmat/error.hpp"

namespace latmat {

using Int = boost::multiprecision::cpp_int;

// The three coefficient rings, each totally ordered by its embedding in
// the reals: the integers, the rationals, and Z[sqrt(2)].
enum class RingKind { Integers, Rationals, QuadraticSqrt2 };

const char* ring_name(RingKind kind) noexcept;        // "int" | "rat" | "quad2"
RingKind ring_from_name(const std::string& name);     // throws ParseError

// Exact element of the chosen ring. Payload layout:
//   Integers:        a                          (b = 0, den = 1)
//   Rationals:       a / den, reduced, den > 0  (b = 0)
//   QuadraticSqrt2:  a + b*sqrt(2)              (den = 1)
//
// All arithmetic is exact; comparisons use the real embedding. For
// Z[sqrt(2)] the sign test compares a^2 against 2 b^2, which never ties
// because sqrt(2) is irrational.
class RingElem {
public:
    RingElem() : kind_(RingKind::Integers), a_(0), b_(0), den_(1) {}

    static RingElem of_int(RingKind kind, Int value);
    static RingElem zero(RingKind kind) { return of_int(kind, 0); }
    static RingElem one(RingKind kind) { return of_int(kind, 1); }
    static RingElem rational(Int num, Int den);   // reduced form, den > 0
    static RingElem quadratic(Int a, Int b);      // a + b*sqrt(2)

    RingKind kind() const noexcept { return kind_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const;
    int sign() const;   // -1, 0, +1 under the real embedding

    RingElem operator-() const;
    friend RingElem operator+(const RingElem& x, const RingElem& y);
    friend RingElem operator-(const RingElem& x, const RingElem& y);
    friend RingElem operator*(const RingElem& x, const RingElem& y);

    friend bool operator==(const RingElem& x, const RingElem& y);
    friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }
    friend bool operator<(const RingElem& x, const RingElem& y) { return (x - y).sign() < 0; }
    friend bool operator>(const RingElem& x, const RingElem& y) { return y < x; }
    friend bool operator<=(const RingElem& x, const RingElem& y) { return !(y < x); }
    friend bool operator>=(const RingElem& x, const RingElem& y) { return !(x < y); }

    bool is_unit() const;
    bool is_positive_unit() const { return is_unit() && sign() > 0; }
    RingElem inverse_unit() const;   // throws NotAUnit

    // Exact division in the ring; empty when y does not divide x.
    static std::optional<RingElem> try_div(const RingElem& x, const RingElem& y);
    // Does this element divide other in the ring?
    bool divides(const RingElem& other) const;

    std::string str() const;
    static RingElem parse(RingKind kind, const std::string& text);

    friend RingElem gcd(const RingElem& x, const RingElem& y);
    friend RingElem lcm(const RingElem& x, const RingElem& y);
    friend class FieldElem;

private:
    RingElem(RingKind kind, Int a, Int b, Int den)
        : kind_(kind), a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {}

    void reduce_rational();
    Int norm() const;   // a^2 - 2 b^2, QuadraticSqrt2 only

    RingKind kind_;
    Int a_;
    Int b_;
    Int den_;
};

// Greatest common divisor, normalized to be positive. Over the rationals
// every nonzero element is a unit, so the gcd of anything not both zero
// is 1. Over Z[sqrt(2)] this runs the norm-Euclidean algorithm with
// nearest-integer rounding. Both arguments zero is a DomainError.
RingElem gcd(const RingElem& x, const RingElem& y);
RingElem lcm(const RingElem& x, const RingElem& y);

// Element of the fraction field K of the ring, kept gcd-reduced with a
// positive denominator; unit denominators are folded into the numerator,
// so is_in_ring() reduces to den == 1.
class FieldElem {
public:
    FieldElem() : num_(), den_(RingElem::one(RingKind::Integers)) {}
    explicit FieldElem(RingElem num);
    FieldElem(RingElem num, RingElem den);   // den == 0 is a DomainError

    static FieldElem zero(RingKind kind) { return FieldElem(RingElem::zero(kind)); }
    static FieldElem one(RingKind kind) { return FieldElem(RingElem::one(kind)); }
    static FieldElem of_int(RingKind kind, Int value) {
        return FieldElem(RingElem::of_int(kind, std::move(value)));
    }
    // p/q as an element of K, with p and q read as rational integers.
    static FieldElem of_ratio(RingKind kind, Int p, Int q);

    RingKind kind() const noexcept { return num_.kind(); }
    const RingElem& num() const noexcept { return num_; }
    const RingElem& den() const noexcept { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    int sign() const { return num_.sign(); }

    FieldElem operator-() const;
    FieldElem inverse() const;   // DomainError on zero
    friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y);

    friend bool operator==(const FieldElem& x, const FieldElem& y);
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
    friend bool operator<(const FieldElem& x, const FieldElem& y) { return (x - y).sign() < 0; }
    friend bool operator>(const FieldElem& x, const FieldElem& y) { return y < x; }
    friend bool operator<=(const FieldElem& x, const FieldElem& y) { return !(y < x); }
    friend bool operator>=(const FieldElem& x, const FieldElem& y) { return !(x < y); }

    bool is_in_ring() const { return den_.is_one(); }
    RingElem as_ring() const;    // DomainError when not in the ring
    bool in_ring_nonneg() const { return is_in_ring() && sign() >= 0; }
    bool in_ring_positive() const { return is_in_ring() && sign() > 0; }
    bool is_ring_unit() const { return is_in_ring() && num_.is_unit(); }
    bool is_positive_ring_unit() const { return is_ring_unit() && sign() > 0; }

    std::string str() const;
    static FieldElem parse(RingKind kind, const std::string& text);

private:
    void normalize();

    RingElem num_;
    RingElem den_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& x);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace latmat
