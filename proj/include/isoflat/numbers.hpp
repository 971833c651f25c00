#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace isoflat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Contract violations on public entry points.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cases the kernel deliberately does not handle (CLI exit code 3).
struct unsupported_case_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded loop ran out of fuel; inputs are likely corrupted.
struct fuel_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] void assert_fail(const char* expr, const char* file, int line);
}

#define ISOFLAT_ASSERT(expr)                                             \
    do {                                                                 \
        if (!(expr)) ::isoflat::detail::assert_fail(#expr, __FILE__, __LINE__); \
    } while (0)

// The field parameter d of Q(sqrt(d)). One value per session; set it once
// at startup before creating any QuadExt values.
std::int64_t quad_field();
void set_quad_field(std::int64_t d);

Int floor_div(const Int& a, const Int& b);
Int isqrt_floor(const Int& n);

// An element q0 + q1*sqrt(d) of the real quadratic field Q(sqrt(d)).
// All arithmetic, comparisons and the sign are exact; no floating point.
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(Rational q0, Rational q1) : q0_(std::move(q0)), q1_(std::move(q1)) {}
    /*implicit*/ QuadExt(int v) : q0_(v) {}
    /*implicit*/ QuadExt(const Rational& v) : q0_(v) {}

    static QuadExt sqrt_d() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& q0() const { return q0_; }
    const Rational& q1() const { return q1_; }

    bool is_zero() const { return q0_ == 0 && q1_ == 0; }
    bool is_rational() const { return q1_ == 0; }

    // Sign by case analysis on the signs of q0, q1 and comparison of
    // q0^2 against d*q1^2.
    int sign() const;

    QuadExt conj() const { return QuadExt(q0_, -q1_); }
    Rational norm() const;  // q0^2 - d*q1^2
    QuadExt inverse() const;
    QuadExt abs() const { return sign() >= 0 ? *this : -*this; }

    // Unique (k, r) with *this == k + r and 0 <= r < 1.
    std::pair<Int, QuadExt> floor_frac() const;
    Int floor() const { return floor_frac().first; }
    QuadExt frac() const { return floor_frac().second; }

    QuadExt operator-() const { return QuadExt(-q0_, -q1_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.q0_ == b.q0_ && a.q1_ == b.q1_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

    // Exact pretty form, e.g. "1/4 + 3*sqrt(2)".
    std::string str() const;
    // Display-only decimal approximation, computed with integer arithmetic.
    std::string decimal(int digits = 6) const;

  private:
    Rational q0_{0};
    Rational q1_{0};
};

// A complex number with exact real and imaginary parts in Q(sqrt(d)).
struct ComplexExact {
    QuadExt re;
    QuadExt im;

    ComplexExact() = default;
    ComplexExact(QuadExt r, QuadExt i) : re(std::move(r)), im(std::move(i)) {}
    /*implicit*/ ComplexExact(int v) : re(v) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ComplexExact conj() const { return {re, -im}; }

    ComplexExact operator-() const { return {-re, -im}; }
    ComplexExact& operator+=(const ComplexExact& o) { re += o.re; im += o.im; return *this; }
    ComplexExact& operator-=(const ComplexExact& o) { re -= o.re; im -= o.im; return *this; }

    friend ComplexExact operator+(ComplexExact a, const ComplexExact& b) { return a += b; }
    friend ComplexExact operator-(ComplexExact a, const ComplexExact& b) { return a -= b; }
    friend ComplexExact operator*(const ComplexExact& a, const ComplexExact& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexExact operator*(const QuadExt& s, const ComplexExact& z) {
        return {s * z.re, s * z.im};
    }
    friend bool operator==(const ComplexExact& a, const ComplexExact& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexExact& a, const ComplexExact& b) { return !(a == b); }

    std::string str() const;
};

// det of (a, b) as vectors of R^2 = C: Re(a)Im(b) - Im(a)Re(b).
QuadExt cross(const ComplexExact& a, const ComplexExact& b);

// z * k with integer k.
ComplexExact scale(const ComplexExact& z, const Int& k);

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// gcd on rationals: the generator of Z*a + Z*b inside Q.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace isoflat
