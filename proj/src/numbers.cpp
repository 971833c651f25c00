#include "isoflat/numbers.hpp"

#include <sstream>

namespace isoflat {

namespace detail {
[[noreturn]] void assert_fail(const char* expr, const char* file, int line) {
    std::ostringstream os;
    os << "internal invariant violated: " << expr << " at " << file << ":" << line;
    throw std::logic_error(os.str());
}
}  // namespace detail

namespace {
std::int64_t g_field_d = 2;

bool square_free(std::int64_t d) {
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}
}  // namespace

std::int64_t quad_field() { return g_field_d; }

void set_quad_field(std::int64_t d) {
    if (d < 2 || !square_free(d))
        throw contract_error("field parameter d must be a square-free integer >= 2");
    g_field_d = d;
}

Int floor_div(const Int& a, const Int& b) {
    ISOFLAT_ASSERT(b > 0);
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int isqrt_floor(const Int& n) {
    ISOFLAT_ASSERT(n >= 0);
    return boost::multiprecision::sqrt(n);
}

int QuadExt::sign() const {
    const int s0 = q0_.sign();
    const int s1 = q1_.sign();
    if (s1 == 0) return s0;
    if (s0 == 0) return s1;
    if (s0 == s1) return s0;
    // Opposite signs: compare q0^2 against d*q1^2.
    const Rational lhs = q0_ * q0_;
    const Rational rhs = Rational(g_field_d) * q1_ * q1_;
    if (lhs > rhs) return s0;
    if (lhs < rhs) return s1;
    // q0^2 == d*q1^2 with q1 != 0 would make d a rational square.
    ISOFLAT_ASSERT(false);
}

Rational QuadExt::norm() const {
    return q0_ * q0_ - Rational(g_field_d) * q1_ * q1_;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw contract_error("division by zero in Q(sqrt(d))");
    const Rational n = norm();
    ISOFLAT_ASSERT(n != 0);
    return QuadExt(q0_ / n, -q1_ / n);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    q0_ += o.q0_;
    q1_ += o.q1_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    q0_ -= o.q0_;
    q1_ -= o.q1_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const Rational r0 = q0_ * o.q0_ + Rational(g_field_d) * q1_ * o.q1_;
    const Rational r1 = q0_ * o.q1_ + q1_ * o.q0_;
    q0_ = r0;
    q1_ = r1;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::pair<Int, QuadExt> QuadExt::floor_frac() const {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    // Write the value as (A + B*sqrt(d)) / C with C > 0.
    const Int A = numerator(q0_) * denominator(q1_);
    const Int B = numerator(q1_) * denominator(q0_);
    const Int C = denominator(q0_) * denominator(q1_);
    Int k;
    if (B == 0) {
        k = floor_div(A, C);
    } else {
        // floor(B*sqrt(d)) is exact: B^2*d is never a perfect square for B != 0.
        const Int s = isqrt_floor(B * B * Int(g_field_d));
        const Int m = (B > 0) ? s : Int(-s - 1);
        k = floor_div(A + m, C);
        // m approximates B*sqrt(d) within 1, so at most one correction step.
        while ((*this - QuadExt(Rational(k + 1))).sign() >= 0) ++k;
        while ((*this - QuadExt(Rational(k))).sign() < 0) --k;
    }
    QuadExt r = *this - QuadExt(Rational(k));
    ISOFLAT_ASSERT(r.sign() >= 0 && (r - QuadExt(1)).sign() < 0);
    return {k, r};
}

std::string QuadExt::str() const {
    std::ostringstream os;
    if (q1_ == 0) {
        os << q0_;
        return os.str();
    }
    if (q0_ != 0) os << q0_ << (q1_ > 0 ? " + " : " - ");
    else if (q1_ < 0) os << "-";
    const Rational a = q1_ > 0 || q0_ == 0 ? boost::multiprecision::abs(q1_) : boost::multiprecision::abs(q1_);
    if (a != 1) os << a << "*";
    os << "sqrt(" << g_field_d << ")";
    return os.str();
}

std::string QuadExt::decimal(int digits) const {
    if (digits < 0) digits = 0;
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    const QuadExt scaled = *this * QuadExt(Rational(pow10));
    Int n = scaled.floor();
    // Round half up.
    if ((scaled - QuadExt(Rational(n)) - QuadExt(Rational(1, 2))).sign() >= 0) ++n;
    const bool neg = n < 0;
    Int mag = neg ? Int(-n) : n;
    std::string s = mag.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + s;
    out += s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    return out;
}

std::string ComplexExact::str() const {
    std::ostringstream os;
    os << "(" << re.str() << ") + (" << im.str() << ")*i";
    return os.str();
}

QuadExt cross(const ComplexExact& a, const ComplexExact& b) {
    return a.re * b.im - a.im * b.re;
}

ComplexExact scale(const ComplexExact& z, const Int& k) {
    const QuadExt s{Rational(k), Rational(0)};
    return {s * z.re, s * z.im};
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw contract_error("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw contract_error("malformed rational literal: " + s);
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return boost::multiprecision::abs(b);
    if (b == 0) return boost::multiprecision::abs(a);
    const Int dn = lcm(denominator(a), denominator(b));
    const Int na = numerator(a) * (dn / denominator(a));
    const Int nb = numerator(b) * (dn / denominator(b));
    return Rational(gcd(na, nb), dn);
}

}  // namespace isoflat
