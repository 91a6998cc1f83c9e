#include "latmat/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace latmat {
namespace {

// floor(p / q) for q > 0
Int floor_div(const Int& p, const Int& q) {
    Int quot = p / q;   // truncates toward zero
    if (p % q != 0 && p < 0) --quot;
    return quot;
}

// nearest integer to p / q, ties toward +infinity
Int round_div(Int p, Int q) {
    if (q < 0) { p = -p; q = -q; }
    return floor_div(2 * p + q, 2 * q);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Int parse_int(const std::string& text) {
    std::string t = trim(text);
    std::size_t pos = 0;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    if (pos == t.size()) fail(Errc::ParseError, "empty integer literal '" + text + "'");
    for (std::size_t i = pos; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            fail(Errc::ParseError, "invalid integer literal '" + text + "'");
    }
    if (t[0] == '+') t.erase(0, 1);  // cpp_int rejects an explicit plus sign
    return Int(t);
}

void require_same_kind(const RingElem& x, const RingElem& y) {
    if (x.kind() != y.kind()) fail(Errc::UsageError, "ring kind mismatch");
}

}  // namespace

const char* ring_name(RingKind kind) noexcept {
    switch (kind) {
        case RingKind::Integers: return "int";
        case RingKind::Rationals: return "rat";
        case RingKind::QuadraticSqrt2: return "quad2";
    }
    return "?";
}

RingKind ring_from_name(const std::string& name) {
    if (name == "int") return RingKind::Integers;
    if (name == "rat") return RingKind::Rationals;
    if (name == "quad2") return RingKind::QuadraticSqrt2;
    fail(Errc::ParseError, "unknown ring '" + name + "' (expected int, rat or quad2)");
}

RingElem RingElem::of_int(RingKind kind, Int value) {
    return RingElem(kind, std::move(value), 0, 1);
}

RingElem RingElem::rational(Int num, Int den) {
    if (den == 0) fail(Errc::DomainError, "rational with zero denominator");
    RingElem r(RingKind::Rationals, std::move(num), 0, std::move(den));
    r.reduce_rational();
    return r;
}

RingElem RingElem::quadratic(Int a, Int b) {
    return RingElem(RingKind::QuadraticSqrt2, std::move(a), std::move(b), 1);
}

void RingElem::reduce_rational() {
    if (den_ < 0) { a_ = -a_; den_ = -den_; }
    Int g = boost::multiprecision::gcd(a_, den_);
    if (g > 1) { a_ /= g; den_ /= g; }
    if (a_ == 0) den_ = 1;
}

Int RingElem::norm() const {
    return a_ * a_ - 2 * b_ * b_;
}

bool RingElem::is_one() const {
    return a_ == 1 && b_ == 0 && den_ == 1;
}

int RingElem::sign() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
            return a_.sign();
        case RingKind::QuadraticSqrt2: {
            if (a_ == 0 && b_ == 0) return 0;
            if (a_ >= 0 && b_ >= 0) return 1;
            if (a_ <= 0 && b_ <= 0) return -1;
            // Opposite signs: a + b*sqrt(2) > 0 iff a^2 > 2 b^2 when a > 0,
            // and iff 2 b^2 > a^2 when b > 0. Equality is impossible.
            Int a2 = a_ * a_, b2 = 2 * b_ * b_;
            if (a_ > 0) return a2 > b2 ? 1 : -1;
            return b2 > a2 ? 1 : -1;
        }
    }
    return 0;
}

RingElem RingElem::operator-() const {
    return RingElem(kind_, -a_, -b_, den_);
}

RingElem operator+(const RingElem& x, const RingElem& y) {
    require_same_kind(x, y);
    switch (x.kind_) {
        case RingKind::Integers:
            return RingElem(x.kind_, x.a_ + y.a_, 0, 1);
        case RingKind::Rationals:
            return RingElem::rational(x.a_ * y.den_ + y.a_ * x.den_, x.den_ * y.den_);
        case RingKind::QuadraticSqrt2:
            return RingElem::quadratic(x.a_ + y.a_, x.b_ + y.b_);
    }
    fail(Errc::UsageError, "bad ring kind");
}

RingElem operator-(const RingElem& x, const RingElem& y) {
    return x + (-y);
}

RingElem operator*(const RingElem& x, const RingElem& y) {
    require_same_kind(x, y);
    switch (x.kind_) {
        case RingKind::Integers:
            return RingElem(x.kind_, x.a_ * y.a_, 0, 1);
        case RingKind::Rationals:
            return RingElem::rational(x.a_ * y.a_, x.den_ * y.den_);
        case RingKind::QuadraticSqrt2:
            return RingElem::quadratic(x.a_ * y.a_ + 2 * x.b_ * y.b_,
                                       x.a_ * y.b_ + x.b_ * y.a_);
    }
    fail(Errc::UsageError, "bad ring kind");
}

bool operator==(const RingElem& x, const RingElem& y) {
    require_same_kind(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_ && x.den_ == y.den_;
}

bool RingElem::is_unit() const {
    switch (kind_) {
        case RingKind::Integers: return a_ == 1 || a_ == -1;
        case RingKind::Rationals: return a_ != 0;
        case RingKind::QuadraticSqrt2: {
            Int n = norm();
            return n == 1 || n == -1;
        }
    }
    return false;
}

RingElem RingElem::inverse_unit() const {
    if (!is_unit()) fail(Errc::NotAUnit, "element " + str() + " is not a unit of " + ring_name(kind_));
    switch (kind_) {
        case RingKind::Integers: return *this;
        case RingKind::Rationals: return rational(den_, a_);
        case RingKind::QuadraticSqrt2: {
            // 1/(a + b*sqrt(2)) = (a - b*sqrt(2)) / (a^2 - 2 b^2)
            if (norm() == 1) return quadratic(a_, -b_);
            return quadratic(-a_, b_);
        }
    }
    fail(Errc::UsageError, "bad ring kind");
}

std::optional<RingElem> RingElem::try_div(const RingElem& x, const RingElem& y) {
    require_same_kind(x, y);
    if (y.is_zero()) {
        if (x.is_zero()) return RingElem::zero(x.kind_);
        return std::nullopt;
    }
    switch (x.kind_) {
        case RingKind::Integers: {
            Int q, r;
            boost::multiprecision::divide_qr(x.a_, y.a_, q, r);
            if (r != 0) return std::nullopt;
            return RingElem::of_int(x.kind_, q);
        }
        case RingKind::Rationals:
            return x * y.inverse_unit();
        case RingKind::QuadraticSqrt2: {
            // x / y = x * conj(y) / N(y); exact iff both components divide
            Int n = y.norm();
            Int ca = x.a_ * y.a_ - 2 * x.b_ * y.b_;
            Int cb = x.b_ * y.a_ - x.a_ * y.b_;
            Int qa, ra, qb, rb;
            boost::multiprecision::divide_qr(ca, n, qa, ra);
            if (ra != 0) return std::nullopt;
            boost::multiprecision::divide_qr(cb, n, qb, rb);
            if (rb != 0) return std::nullopt;
            return RingElem::quadratic(qa, qb);
        }
    }
    return std::nullopt;
}

bool RingElem::divides(const RingElem& other) const {
    return try_div(other, *this).has_value();
}

RingElem gcd(const RingElem& x, const RingElem& y) {
    require_same_kind(x, y);
    if (x.is_zero() && y.is_zero()) fail(Errc::DomainError, "gcd(0, 0) is undefined");
    switch (x.kind_) {
        case RingKind::Integers:
            return RingElem::of_int(x.kind_, boost::multiprecision::gcd(x.a_, y.a_));
        case RingKind::Rationals:
            // every nonzero rational is a unit
            return RingElem::one(x.kind_);
        case RingKind::QuadraticSqrt2: {
            // norm-Euclidean loop with nearest-integer quotients:
            // the remainder norm at least halves each round
            RingElem u = x, v = y;
            while (!v.is_zero()) {
                Int n = v.norm();
                Int ca = u.a_ * v.a_ - 2 * u.b_ * v.b_;
                Int cb = u.b_ * v.a_ - u.a_ * v.b_;
                RingElem q = RingElem::quadratic(round_div(ca, n), round_div(cb, n));
                RingElem r = u - q * v;
                u = v;
                v = r;
            }
            if (u.sign() < 0) u = -u;
            return u;
        }
    }
    fail(Errc::UsageError, "bad ring kind");
}

RingElem lcm(const RingElem& x, const RingElem& y) {
    RingElem g = gcd(x, y);
    RingElem m = RingElem::try_div(x * y, g).value();
    if (m.sign() < 0) m = -m;
    return m;
}

std::string RingElem::str() const {
    switch (kind_) {
        case RingKind::Integers:
            return a_.str();
        case RingKind::Rationals:
            if (den_ == 1) return a_.str();
            return a_.str() + "/" + den_.str();
        case RingKind::QuadraticSqrt2: {
            if (b_ == 0) return a_.str();
            std::string s2part = (b_ < 0 ? "-" : "") + Int(boost::multiprecision::abs(b_)).str() + "*s2";
            if (a_ == 0) return s2part;
            return a_.str() + (b_ < 0 ? "-" : "+") +
                   Int(boost::multiprecision::abs(b_)).str() + "*s2";
        }
    }
    return "?";
}

RingElem RingElem::parse(RingKind kind, const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) fail(Errc::ParseError, "empty element literal");
    switch (kind) {
        case RingKind::Integers:
            return of_int(kind, parse_int(t));
        case RingKind::Rationals: {
            std::size_t slash = t.find('/');
            if (slash == std::string::npos) return rational(parse_int(t), 1);
            if (t.find('/', slash + 1) != std::string::npos)
                fail(Errc::ParseError, "invalid rational literal '" + text + "'");
            return rational(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
        }
        case RingKind::QuadraticSqrt2: {
            // grammar: term (('+'|'-') term)*, term = int | [int '*'] 's2'
            std::vector<std::string> parts;
            std::size_t start = 0;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '*' &&
                    t[i - 1] != '+' && t[i - 1] != '-') {
                    parts.push_back(t.substr(start, i - start));
                    start = i;
                }
            }
            parts.push_back(t.substr(start));
            if (parts.size() > 2)
                fail(Errc::ParseError, "invalid quad2 literal '" + text + "'");
            Int a = 0, b = 0;
            bool have_a = false, have_b = false;
            for (std::string part : parts) {
                part = trim(part);
                std::size_t s2 = part.find("s2");
                if (s2 == std::string::npos) {
                    if (have_a) fail(Errc::ParseError, "invalid quad2 literal '" + text + "'");
                    a = parse_int(part);
                    have_a = true;
                    continue;
                }
                if (s2 + 2 != part.size())
                    fail(Errc::ParseError, "invalid quad2 literal '" + text + "'");
                if (have_b) fail(Errc::ParseError, "invalid quad2 literal '" + text + "'");
                std::string coeff = trim(part.substr(0, s2));
                if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
                coeff = trim(coeff);
                if (coeff.empty() || coeff == "+") b = 1;
                else if (coeff == "-") b = -1;
                else b = parse_int(coeff);
                have_b = true;
            }
            return quadratic(a, b);
        }
    }
    fail(Errc::UsageError, "bad ring kind");
}

FieldElem::FieldElem(RingElem num)
    : num_(std::move(num)), den_(RingElem::one(num_.kind())) {}

FieldElem::FieldElem(RingElem num, RingElem den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_kind(num_, den_);
    normalize();
}

FieldElem FieldElem::of_ratio(RingKind kind, Int p, Int q) {
    switch (kind) {
        case RingKind::Integers:
            return FieldElem(RingElem::of_int(kind, std::move(p)),
                             RingElem::of_int(kind, std::move(q)));
        case RingKind::Rationals:
            return FieldElem(RingElem::rational(std::move(p), std::move(q)));
        case RingKind::QuadraticSqrt2:
            return FieldElem(RingElem::quadratic(std::move(p), 0),
                             RingElem::quadratic(std::move(q), 0));
    }
    fail(Errc::UsageError, "bad ring kind");
}

void FieldElem::normalize() {
    if (den_.is_zero()) fail(Errc::DomainError, "zero denominator");
    if (num_.is_zero()) {
        den_ = RingElem::one(kind());
        return;
    }
    RingElem g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = RingElem::try_div(num_, g).value();
        den_ = RingElem::try_div(den_, g).value();
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_unit() && !den_.is_one()) {
        num_ = num_ * den_.inverse_unit();
        den_ = RingElem::one(kind());
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(Errc::DomainError, "inverse of zero");
    return FieldElem(den_, num_);
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return x + (-y);
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.num_ * y.num_, x.den_ * y.den_);
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
    if (y.is_zero()) fail(Errc::DomainError, "division by zero");
    return FieldElem(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
}

RingElem FieldElem::as_ring() const {
    if (!is_in_ring())
        fail(Errc::DomainError, "element " + str() + " is not in the ring");
    return num_;
}

std::string FieldElem::str() const {
    if (den_.is_one()) return num_.str();
    if (kind() != RingKind::QuadraticSqrt2) return num_.str() + "/" + den_.str();
    // Rationalize to an integer denominator for printing: multiply through
    // by the conjugate, then strip the integer content.
    RingElem conj = RingElem::quadratic(den_.a_, -den_.b_);
    RingElem top = num_ * conj;
    Int bottom = den_.norm();
    if (bottom < 0) { top = -top; bottom = -bottom; }
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(top.a_, top.b_), bottom);
    if (g > 1) { top.a_ /= g; top.b_ /= g; bottom /= g; }
    if (bottom == 1) return top.str();
    std::string ts = top.str();
    if (top.a_ != 0 && top.b_ != 0) ts = "(" + ts + ")";
    return ts + "/" + bottom.str();
}

FieldElem FieldElem::parse(RingKind kind, const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) fail(Errc::ParseError, "empty element literal");
    if (kind == RingKind::Rationals) return FieldElem(RingElem::parse(kind, t));
    // split on the top-level '/', if any
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') --depth;
        else if (t[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                fail(Errc::ParseError, "invalid element literal '" + text + "'");
            slash = i;
        }
    }
    auto strip_parens = [](std::string s) {
        s = trim(s);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
            s = trim(s.substr(1, s.size() - 2));
        return s;
    };
    if (slash == std::string::npos)
        return FieldElem(RingElem::parse(kind, strip_parens(t)));
    return FieldElem(RingElem::parse(kind, strip_parens(t.substr(0, slash))),
                     RingElem::parse(kind, strip_parens(t.substr(slash + 1))));
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

}  // namespace latmat
