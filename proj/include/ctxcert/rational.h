// Copyright 2026 The ctxcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXCERT_RATIONAL_H
#define CTXCERT_RATIONAL_H

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ctxcert {

/// Exact arbitrary-precision rational number, always held in canonical form
/// (positive denominator, numerator and denominator coprime).
///
/// Backed by GMP's mpq_class. The textual form used in all JSON I/O is
/// "p/q", including integers ("3/1") and zero ("0/1").
class Rational {
   public:
    Rational() = default;
    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}
    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class &value);

    /// Exact conversion of a binary double (every finite double is rational).
    static Rational from_double(double value);

    /// Parses "p/q", "p", or a decimal literal such as "-0.125" or "2.5e-3".
    /// Decimal literals are converted exactly; no rounding happens here.
    static Rational parse(std::string_view text);

    /// True when `text` is written as a decimal literal rather than "p/q" or "p".
    static bool is_decimal_literal(std::string_view text);

    const mpq_class &gmp() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    std::string str() const;
    double to_double() const { return value_.get_d(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational abs() const;

    Rational &operator+=(const Rational &o) {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    mpq_class value_;
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
}

using RationalVector = std::vector<Rational>;

/// Best rational approximation by continued-fraction convergents: the last
/// convergent of `x` whose denominator does not exceed `max_denominator`.
Rational rationalize(const Rational &x, const mpz_class &max_denominator);
Rational rationalize(double x, const mpz_class &max_denominator);

std::vector<std::string> to_strings(const RationalVector &v);
RationalVector parse_rational_vector(const std::vector<std::string> &v);

}  // namespace ctxcert

#endif
