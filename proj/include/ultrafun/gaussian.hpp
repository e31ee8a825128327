#pragma once

#include "ultrafun/scalar.hpp"

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace uf::h1 {

/// a + b i with exact rational parts.
struct GaussianRational {
    Scalar re;
    Scalar im;

    GaussianRational() = default;
    GaussianRational(Scalar r) : re(std::move(r)) {}  // NOLINT: implicit from real
    GaussianRational(int r) : re(r) {}                  // NOLINT
    GaussianRational(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Scalar(0), Scalar(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Scalar norm2() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator<(const GaussianRational& o) const { return re < o.re || (re == o.re && im < o.im); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
GaussianRational pow(GaussianRational a, std::size_t n);

/// Parses "p/q", "3i", "-i", "1/2-3/4i", "2+i".
GaussianRational parse_gaussian(const std::string& text);
std::string to_string(const GaussianRational& g);

/// Finite sums sum_v c_v e^v with Gaussian rational c_v and exponents v.
/// Distinct exponents are linearly independent, so the map is a normal form.
class ExpCoef {
public:
    ExpCoef() = default;
    ExpCoef(GaussianRational c);  // NOLINT: c e^0
    ExpCoef(int c) : ExpCoef(GaussianRational(c)) {}  // NOLINT
    static ExpCoef exp(const GaussianRational& v, const GaussianRational& c = GaussianRational(1));

    bool is_zero() const { return terms_.empty(); }
    /// The plain number when there are no exponential factors.
    bool is_plain() const;
    GaussianRational plain() const;
    const std::map<GaussianRational, GaussianRational>& terms() const { return terms_; }

    ExpCoef& operator+=(const ExpCoef& o);
    ExpCoef& operator-=(const ExpCoef& o);
    ExpCoef& operator*=(const ExpCoef& o);
    bool operator==(const ExpCoef& o) const { return terms_ == o.terms_; }

    std::complex<double> to_complex() const;

private:
    std::map<GaussianRational, GaussianRational> terms_;
    void add(const GaussianRational& v, const GaussianRational& c);
};

ExpCoef operator+(ExpCoef a, const ExpCoef& b);
ExpCoef operator-(ExpCoef a, const ExpCoef& b);
ExpCoef operator-(const ExpCoef& a);
ExpCoef operator*(ExpCoef a, const ExpCoef& b);
std::string to_string(const ExpCoef& c);

/// Polynomial with Gaussian rational coefficients, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs);
    static Poly constant(const GaussianRational& c) { return Poly({c}); }
    static Poly x() { return Poly({GaussianRational(0), GaussianRational(1)}); }

    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GaussianRational operator[](std::size_t n) const { return n < c_.size() ? c_[n] : GaussianRational(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    Poly derivative() const;
    GaussianRational operator()(const GaussianRational& z) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    std::vector<GaussianRational> c_;
    void trim();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const GaussianRational& s, const Poly& p);
std::string to_string(const Poly& p, const std::string& var = "x");

Integer factorial(std::size_t n);
Integer binomial(std::size_t n, std::size_t k);

}  // namespace uf::h1
