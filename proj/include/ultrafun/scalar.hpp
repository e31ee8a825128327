#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace uf {

/// Exact rational number; always kept in lowest terms by GMP.
using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vector = std::vector<Scalar>;

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25".
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

inline int sign(const Scalar& s) { return s.sign(); }

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? Scalar(-s) : s; }

double to_double(const Scalar& s);

Scalar max_abs(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Scalar& s);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);

/// Direction representative: v / max_abs(v). Requires v != 0.
Vector normalized_direction(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace uf
