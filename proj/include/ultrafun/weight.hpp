#pragma once

#include "ultrafun/cone.hpp"
#include "ultrafun/sector.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace uf::cone {

using AnyCone = std::variant<ConvexCone, SectorSet>;

std::size_t dim_of(const AnyCone& c);
Scalar distance(const AnyCone& c, const Vector& x);
std::vector<ConvexCone> convex_pieces(const AnyCone& c);

/// Parameters (U, A, B) of the weight exp(|x/A| - delta_U(Bx) - |By|).
struct WeightSpec {
    AnyCone U;
    Scalar A;
    Scalar B;

    WeightSpec(AnyCone u, Scalar a, Scalar b);
    std::size_t dim() const { return dim_of(U); }

    /// log of the weight at z = x + iy.
    Scalar log_weight(const Vector& x, const Vector& y) const;
    /// rho(x + iy) = -|x/A| + B delta_U(x) + B|y|.
    Scalar rho(const Vector& x, const Vector& y) const;
};

/// a = sup over the unit cube of |<x, y>|, by enumeration of cube vertices.
Scalar bilinear_norm_constant(const BilinearForm& form, std::size_t cap = 8);

struct FaceValue {
    std::size_t coordinate;  // the face x_coordinate = sign
    int sign;
    std::size_t piece;       // index into the convex pieces of U
    Scalar max_h;            // exact maximum of h on that face for that piece
    Vector argmax;
};

struct MembershipResult {
    bool bounded = false;
    std::vector<FaceValue> certificate;   // one entry per (face, piece)
    std::optional<Vector> violating;      // a direction with h > 0 when unbounded
};

/// Is e^{-l} in the Banach space with weight w? Equivalent to h <= 0 where
/// h(x) = -l(x) + |x|/A - B delta_U(x), decided by one LP per face and piece.
MembershipResult exp_membership(const Vector& l, const WeightSpec& w);

/// h(x) for the functional l, evaluated exactly.
Scalar membership_exponent(const Vector& l, const WeightSpec& w, const Vector& x);

/// |eta| < 1 / (A a).
bool multiplier_admissible(const WeightSpec& w, const Vector& eta, const BilinearForm& form);

}  // namespace uf::cone
