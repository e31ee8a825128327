#pragma once

#include "ultrafun/matrix.hpp"
#include "ultrafun/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uf::cone {

/// Symmetric nondegenerate bilinear form <x, y> = x^T M y on Q^k.
class BilinearForm {
public:
    explicit BilinearForm(Matrix m);
    static BilinearForm standard(std::size_t k);

    std::size_t dim() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    Scalar operator()(const Vector& x, const Vector& y) const;
    /// M x, i.e. the coefficient vector of the functional y -> <x, y>.
    Vector apply(const Vector& x) const { return m_ * x; }

private:
    Matrix m_;
};

/// Closed convex polyhedral cone given by generators; an empty list is {0}.
class ConvexCone {
public:
    ConvexCone() = default;
    ConvexCone(std::size_t dim, std::vector<Vector> generators);

    static ConvexCone zero(std::size_t dim) { return ConvexCone(dim, {}); }
    static ConvexCone whole(std::size_t dim);
    static ConvexCone ray(const Vector& direction) { return ConvexCone(direction.size(), {direction}); }
    /// {x | a . x >= 0 for every row a}, converted to generators by double description.
    static ConvexCone from_inequalities(std::size_t dim, const std::vector<Vector>& rows);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Vector>& generators() const noexcept { return generators_; }

    /// Exact membership by LP feasibility of x = G t, t >= 0.
    bool contains(const Vector& x) const;
    /// Normals a with C = {x | a . x >= 0 for all a} (generators of the standard-dot dual).
    std::vector<Vector> inequalities() const;
    /// Dimension of the linear span of the cone.
    std::size_t span_dim() const;
    /// Dimension of the largest linear subspace contained in the cone.
    std::size_t lineality_dim() const;

    /// Unique generator list: +/- a canonical lineality basis followed by the
    /// normalized extreme rays of the pointed part, sorted.
    ConvexCone canonical() const;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> generators_;
};

/// Set equality of the represented cones.
bool same_set(const ConvexCone& a, const ConvexCone& b);
bool operator==(const ConvexCone& a, const ConvexCone& b);

/// {x | <x, eta> >= 0 for every eta in C}.
ConvexCone dual_cone(const ConvexCone& c, const BilinearForm& form);
/// True iff some linear l is strictly positive on every nonzero point of C.
bool is_proper(const ConvexCone& c);
ConvexCone meet(const ConvexCone& a, const ConvexCone& b);
bool leq(const ConvexCone& a, const ConvexCone& b);

struct DistanceResult {
    Scalar value;
    Vector nearest;  // a nearest point of the cone in the uniform norm
};

/// Uniform-norm distance from x to C, by exact LP.
DistanceResult distance_with_witness(const ConvexCone& c, const Vector& x);
Scalar distance(const ConvexCone& c, const Vector& x);

/// Uniform norm |x| = max_j |x_j|.
inline Scalar uniform_norm(const Vector& x) { return max_abs(x); }

/// True iff the union of the cones is all of Q^k. Decided exactly: the complement
/// is nonempty iff some choice of one violated facet per cone is jointly feasible.
bool covers_space(const std::vector<ConvexCone>& cones, std::size_t dim);

}  // namespace uf::cone
