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

#include "ctxcert/rational.h"

#include <cctype>
#include <cmath>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string_view strip_sign(std::string_view s, bool *negative) {
    *negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        *negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw Error("rational: zero denominator");
    }
    value_ = mpq_class(numerator, 1);
    value_ /= denominator;
}

Rational::Rational(const mpq_class &value) : value_(value) {
    value_.canonicalize();
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw Error("rational: non-finite value cannot be represented");
    }
    return Rational(mpq_class(value));
}

bool Rational::is_decimal_literal(std::string_view text) {
    return text.find_first_of(".eE") != std::string_view::npos;
}

Rational Rational::parse(std::string_view text) {
    std::string_view original = text;
    auto fail = [&]() { return Error("rational: cannot parse '" + std::string(original) + "'"); };
    bool negative = false;
    text = strip_sign(text, &negative);
    if (text.empty()) {
        throw fail();
    }

    mpq_class value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw fail();
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw Error("rational: zero denominator in '" + std::string(original) + "'");
        }
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (is_decimal_literal(text)) {
        std::string_view mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = text.substr(0, e);
            bool exp_negative = false;
            std::string_view exp_digits = strip_sign(text.substr(e + 1), &exp_negative);
            if (!all_digits(exp_digits) || exp_digits.size() > 6) {
                throw fail();
            }
            exponent = std::stol(std::string(exp_digits));
            if (exp_negative) {
                exponent = -exponent;
            }
        }
        std::string digits;
        long fraction_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            std::string_view int_part = mantissa.substr(0, dot);
            std::string_view frac_part = mantissa.substr(dot + 1);
            if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
                (int_part.empty() && frac_part.empty())) {
                throw fail();
            }
            digits = std::string(int_part) + std::string(frac_part);
            fraction_digits = static_cast<long>(frac_part.size());
        } else {
            if (!all_digits(mantissa)) {
                throw fail();
            }
            digits = std::string(mantissa);
        }
        long shift = exponent - fraction_digits;
        mpz_class m(digits, 10);
        if (shift >= 0) {
            value = mpq_class(m * pow10(static_cast<unsigned long>(shift)));
        } else {
            value = mpq_class(m, pow10(static_cast<unsigned long>(-shift)));
        }
    } else {
        if (!all_digits(text)) {
            throw fail();
        }
        value = mpq_class(mpz_class(std::string(text), 10));
    }
    value.canonicalize();
    if (negative) {
        value = -value;
    }
    return Rational(value);
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw Error("rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational rationalize(const Rational &x, const mpz_class &max_denominator) {
    if (max_denominator < 1) {
        throw Error("rationalize: denominator bound must be at least 1");
    }
    // Convergents h/k of the continued fraction of x, seeded with
    // h_{-2} = 0, h_{-1} = 1, k_{-2} = 1, k_{-1} = 0.
    mpz_class h2 = 0, h1 = 1;
    mpz_class k2 = 1, k1 = 0;
    mpz_class num = x.numerator();
    mpz_class den = x.denominator();
    while (den != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class h = a * h1 + h2;
        mpz_class k = a * k1 + k2;
        if (k > max_denominator) {
            break;
        }
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        mpz_class rem = num - a * den;
        num = den;
        den = rem;
    }
    return Rational(mpq_class(h1, k1));
}

Rational rationalize(double x, const mpz_class &max_denominator) {
    return rationalize(Rational::from_double(x), max_denominator);
}

std::vector<std::string> to_strings(const RationalVector &v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto &r : v) {
        out.push_back(r.str());
    }
    return out;
}

RationalVector parse_rational_vector(const std::vector<std::string> &v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto &s : v) {
        out.push_back(Rational::parse(s));
    }
    return out;
}

}  // namespace ctxcert
