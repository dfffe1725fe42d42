#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace holreg {

using Rational = mpq_class;

/// Parses "a", "-a", or "a/b" into a canonical rational. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical textual form: "0", "5", "-7/3". Never prints "/1".
std::string rational_to_string(const Rational& q);

/// Element of Q(i), kept componentwise canonical.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long v) : re(v), im(0) {}
    GaussRational(Rational real_part) : re(std::move(real_part)), im(0) {}
    GaussRational(Rational real_part, Rational imag_part)
        : re(std::move(real_part)), im(std::move(imag_part)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return GaussRational(re, -im); }

    /// re^2 + im^2, the multiplicative norm.
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return GaussRational(-re, -im); }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    /// Multiplicative inverse. Throws std::domain_error at zero.
    GaussRational inverse() const;

    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

/// Debug form "re" or "re+im*i"; JSON emission lives in json_io.
std::string gauss_to_string(const GaussRational& z);

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace holreg
