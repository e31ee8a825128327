#pragma once

#include "ultrafun/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uf::cone {

/// Closed arc of directions in the plane, counterclockwise from `from` to `to`.
/// from == to is a single ray. Directions are stored normalized (uniform norm 1).
struct Arc {
    Vector from;
    Vector to;
    bool operator==(const Arc&) const = default;
};

/// A closed (possibly non-convex) cone in dimension 1 or 2 that always contains 0.
///
/// Dimension 1: any union of {0}, the closed positive and negative half-lines.
/// Dimension 2: a finite union of closed circular sectors (rays allowed), kept in
/// canonical form: maximal disjoint arcs sorted by the angle of their start.
class SectorSet {
public:
    SectorSet() = default;

    static SectorSet origin(std::size_t dim);
    static SectorSet whole(std::size_t dim);
    static SectorSet half_lines(bool positive, bool negative);
    /// Union of the given arcs (merged when overlapping or touching).
    static SectorSet from_arcs(std::vector<Arc> arcs);
    static SectorSet sector(const Vector& from, const Vector& to) { return from_arcs({Arc{from, to}}); }
    /// The same point set as a convex polyhedral cone (dimension <= 2 only).
    static SectorSet from_convex(const ConvexCone& c);

    std::size_t dim() const noexcept { return dim_; }
    bool is_full() const noexcept { return full_; }
    bool is_origin() const noexcept;
    bool positive() const noexcept { return pos_; }
    bool negative() const noexcept { return neg_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool contains(const Vector& x) const;

    /// Convex polyhedral pieces whose union is this set (each of angle <= 90 degrees in k=2).
    std::vector<ConvexCone> convex_pieces() const;
    /// The set as a single convex cone when it is convex.
    std::optional<ConvexCone> as_convex() const;

    std::string to_string() const;
    bool operator==(const SectorSet&) const = default;

private:
    std::size_t dim_ = 2;
    bool full_ = false;
    bool pos_ = false;
    bool neg_ = false;
    std::vector<Arc> arcs_;

    friend SectorSet combine(const SectorSet&, const SectorSet&, bool);
};

SectorSet meet(const SectorSet& a, const SectorSet& b);
SectorSet join(const SectorSet& a, const SectorSet& b);
bool leq(const SectorSet& a, const SectorSet& b);
bool is_proper(const SectorSet& s);
/// min over the convex pieces; equals the distance to the union.
Scalar distance(const SectorSet& s, const Vector& x);

/// Counterclockwise angular order of plane directions starting at (1, 0).
bool angle_less(const Vector& u, const Vector& v);
Scalar cross(const Vector& u, const Vector& v);

}  // namespace uf::cone
