#ifndef CRSYM_RATIONAL_HPP
#define CRSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace crsym {

/// Exact rational scalar. mpq_class keeps the canonical form (coprime
/// numerator/denominator, positive denominator) after every operation.
using Rational = mpq_class;

/// Error for malformed or inexact numeric input (specs, literals).
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse "p", "-p" or "p/q". Anything else (decimals, radicals, symbols) is
/// rejected: the library computes over exact Gaussian rationals only.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" or "p/q".
std::string rational_str(const Rational& q);

/// Complex scalar a+bi with rational a, b. Equality is exact.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}               // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& v) : re_(v), im_(0) {}   // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = a^2 + b^2, a rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex_double() const {
        return {re_.get_d(), im_.get_d()};
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = i;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = r;
        im_ = i;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

/// Human-readable form, e.g. "0", "3/2", "i", "1-2i".
std::string to_string(const GaussianRational& z);

}  // namespace crsym

#endif
