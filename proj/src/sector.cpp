#include "ultrafun/sector.hpp"

#include "ultrafun/errors.hpp"
#include "ultrafun/lp.hpp"

#include <algorithm>

namespace uf::cone {

Scalar cross(const Vector& u, const Vector& v) { return u[0] * v[1] - u[1] * v[0]; }

namespace {

int half(const Vector& u) { return (u[1] > 0 || (u[1] == 0 && u[0] > 0)) ? 0 : 1; }

bool same_direction(const Vector& u, const Vector& v) { return cross(u, v) == 0 && dot(u, v) > 0; }

Vector unit(std::size_t i, int s) {
    Vector e(2);
    e[i] = s;
    return e;
}

// Sorted distinct breakpoints; cell 2i is the ray d_i, cell 2i+1 the open gap (d_i, d_{i+1}).
struct Cells {
    std::vector<Vector> points;

    explicit Cells(std::vector<Vector> dirs) {
        dirs.push_back(unit(0, 1));
        for (auto& d : dirs) d = normalized_direction(d);
        std::sort(dirs.begin(), dirs.end(), angle_less);
        for (auto& d : dirs)
            if (points.empty() || !same_direction(points.back(), d)) points.push_back(d);
        if (points.size() > 1 && same_direction(points.front(), points.back())) points.pop_back();
    }

    std::size_t index(const Vector& d) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (same_direction(points[i], d)) return i;
        throw std::logic_error("sector cells: direction not a breakpoint");
    }

    std::size_t size() const { return 2 * points.size(); }

    std::vector<bool> mark(const SectorSet& s) const {
        std::vector<bool> cells(size(), false);
        if (s.is_full()) {
            cells.assign(size(), true);
            return cells;
        }
        for (const auto& arc : s.arcs()) {
            std::size_t p = index(arc.from), q = index(arc.to);
            std::size_t c = 2 * p;
            cells[c] = true;
            while (c != 2 * q) {
                c = (c + 1) % size();
                cells[c] = true;
            }
        }
        return cells;
    }

    std::vector<Arc> arcs(const std::vector<bool>& cells, bool& full) const {
        full = std::all_of(cells.begin(), cells.end(), [](bool b) { return b; });
        std::vector<Arc> out;
        if (full) return out;
        std::size_t n = size();
        std::size_t start = 0;
        while (cells[start]) ++start;
        for (std::size_t step = 1; step <= n; ++step) {
            std::size_t c = (start + step) % n;
            if (!cells[c]) continue;
            std::size_t first = c;
            std::size_t last = c;
            while (step < n && cells[(start + step + 1) % n]) {
                ++step;
                last = (start + step) % n;
            }
            if (first % 2 != 0 || last % 2 != 0) throw std::logic_error("sector cells: open boundary in closed set");
            out.push_back(Arc{points[first / 2], points[last / 2]});
        }
        std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return angle_less(a.from, b.from); });
        return out;
    }
};

std::vector<Vector> breakpoints(const SectorSet& s) {
    std::vector<Vector> d;
    for (const auto& a : s.arcs()) {
        d.push_back(a.from);
        d.push_back(a.to);
    }
    return d;
}

}  // namespace

bool angle_less(const Vector& u, const Vector& v) {
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}

SectorSet SectorSet::origin(std::size_t dim) {
    if (dim != 1 && dim != 2) throw UnsupportedDimension("general cones are only supported for k <= 2");
    SectorSet s;
    s.dim_ = dim;
    return s;
}

SectorSet SectorSet::whole(std::size_t dim) {
    SectorSet s = origin(dim);
    if (dim == 1) {
        s.pos_ = s.neg_ = true;
    } else {
        s.full_ = true;
    }
    return s;
}

SectorSet SectorSet::half_lines(bool positive, bool negative) {
    SectorSet s = origin(1);
    s.pos_ = positive;
    s.neg_ = negative;
    return s;
}

SectorSet SectorSet::from_arcs(std::vector<Arc> arcs) {
    SectorSet s = origin(2);
    for (auto& a : arcs) {
        if (a.from.size() != 2 || a.to.size() != 2) throw DimensionError("sector directions must be 2-vectors");
        if (is_zero(a.from) || is_zero(a.to)) throw PreconditionError("sector directions must be nonzero");
        a.from = normalized_direction(a.from);
        a.to = normalized_direction(a.to);
    }
    s.arcs_ = std::move(arcs);
    Cells cells(breakpoints(s));
    s.arcs_ = cells.arcs(cells.mark(s), s.full_);
    return s;
}

SectorSet SectorSet::from_convex(const ConvexCone& c) {
    if (c.dim() == 1) {
        bool pos = false, neg = false;
        for (const auto& g : c.generators()) (g[0] > 0 ? pos : neg) = true;
        return half_lines(pos, neg);
    }
    if (c.dim() != 2) throw UnsupportedDimension("general cones are only supported for k <= 2");
    std::vector<Vector> dirs;
    for (const auto& g : c.generators()) dirs.push_back(normalized_direction(g));
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), same_direction), dirs.end());
    const std::size_t n = dirs.size();
    if (n == 0) return origin(2);
    if (n == 1) return from_arcs({Arc{dirs[0], dirs[0]}});
    std::size_t straight = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& u = dirs[i];
        const Vector& v = dirs[(i + 1) % n];
        Scalar cr = cross(u, v);
        if (cr < 0) return from_arcs({Arc{v, u}});
        if (cr == 0) ++straight;
    }
    if (straight == 2 && n == 2) return from_arcs({Arc{dirs[0], dirs[0]}, Arc{dirs[1], dirs[1]}});
    if (straight == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vector& u = dirs[i];
            const Vector& v = dirs[(i + 1) % n];
            if (cross(u, v) == 0) return from_arcs({Arc{v, u}});
        }
    }
    return whole(2);
}

bool SectorSet::is_origin() const noexcept {
    if (dim_ == 1) return !pos_ && !neg_;
    return !full_ && arcs_.empty();
}

bool SectorSet::contains(const Vector& x) const {
    if (x.size() != dim_) throw DimensionError("SectorSet::contains: dimension mismatch");
    if (is_zero(x)) return true;
    if (dim_ == 1) return x[0] > 0 ? pos_ : neg_;
    if (full_) return true;
    auto dirs = breakpoints(*this);
    dirs.push_back(x);
    Cells cells(dirs);
    return cells.mark(*this)[2 * cells.index(normalized_direction(x))];
}

std::vector<ConvexCone> SectorSet::convex_pieces() const {
    std::vector<ConvexCone> out;
    if (dim_ == 1) {
        if (pos_) out.push_back(ConvexCone::ray(Vector{Scalar(1)}));
        if (neg_) out.push_back(ConvexCone::ray(Vector{Scalar(-1)}));
        if (out.empty()) out.push_back(ConvexCone::zero(1));
        return out;
    }
    if (is_origin()) return {ConvexCone::zero(2)};
    std::vector<Vector> dirs = breakpoints(*this);
    for (std::size_t i = 0; i < 2; ++i) {
        dirs.push_back(unit(i, 1));
        dirs.push_back(unit(i, -1));
    }
    Cells cells(dirs);
    auto marked = cells.mark(*this);
    const std::size_t np = cells.points.size();
    for (std::size_t i = 0; i < np; ++i) {
        if (marked[2 * i + 1]) {
            out.push_back(ConvexCone(2, {cells.points[i], cells.points[(i + 1) % np]}));
        } else if (marked[2 * i] && !marked[(2 * i + cells.size() - 1) % cells.size()]) {
            // isolated ray
            out.push_back(ConvexCone::ray(cells.points[i]));
        }
    }
    return out;
}

std::optional<ConvexCone> SectorSet::as_convex() const {
    if (dim_ == 1) {
        std::vector<Vector> g;
        if (pos_) g.push_back(Vector{Scalar(1)});
        if (neg_) g.push_back(Vector{Scalar(-1)});
        return ConvexCone(1, g);
    }
    if (full_) return ConvexCone::whole(2);
    if (arcs_.empty()) return ConvexCone::zero(2);
    if (arcs_.size() == 2 && arcs_[0].from == arcs_[0].to && arcs_[1].from == arcs_[1].to &&
        cross(arcs_[0].from, arcs_[1].from) == 0)
        return ConvexCone(2, {arcs_[0].from, arcs_[1].from});
    if (arcs_.size() != 1) return std::nullopt;
    const Arc& a = arcs_[0];
    if (a.from == a.to) return ConvexCone::ray(a.from);
    Scalar cr = cross(a.from, a.to);
    if (cr > 0) return ConvexCone(2, {a.from, a.to});
    if (cr == 0) {
        Vector mid{Scalar(-a.from[1]), a.from[0]};  // rotate by +90 degrees
        return ConvexCone(2, {a.from, a.to, mid});
    }
    return std::nullopt;
}

std::string SectorSet::to_string() const {
    if (dim_ == 1) {
        if (pos_ && neg_) return "R";
        if (pos_) return "R+";
        if (neg_) return "R-";
        return "{0}";
    }
    if (full_) return "R^2";
    if (arcs_.empty()) return "{0}";
    std::string s;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (i) s += " u ";
        s += "[" + uf::to_string(arcs_[i].from) + " -> " + uf::to_string(arcs_[i].to) + "]";
    }
    return s;
}

SectorSet combine(const SectorSet& a, const SectorSet& b, bool is_union) {
    if (a.dim() != b.dim()) throw DimensionError("sector arithmetic: dimension mismatch");
    if (a.dim() == 1)
        return is_union ? SectorSet::half_lines(a.pos_ || b.pos_, a.neg_ || b.neg_)
                        : SectorSet::half_lines(a.pos_ && b.pos_, a.neg_ && b.neg_);
    auto dirs = breakpoints(a);
    auto more = breakpoints(b);
    dirs.insert(dirs.end(), more.begin(), more.end());
    Cells cells(dirs);
    auto ca = cells.mark(a), cb = cells.mark(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = is_union ? (ca[i] || cb[i]) : (ca[i] && cb[i]);
    SectorSet out = SectorSet::origin(2);
    out.arcs_ = cells.arcs(ca, out.full_);
    return out;
}

SectorSet meet(const SectorSet& a, const SectorSet& b) { return combine(a, b, false); }
SectorSet join(const SectorSet& a, const SectorSet& b) { return combine(a, b, true); }
bool leq(const SectorSet& a, const SectorSet& b) { return join(a, b) == b; }

bool is_proper(const SectorSet& s) {
    if (s.dim() == 1) return !(s.positive() && s.negative());
    if (s.is_full()) return false;
    std::vector<Vector> gens;
    for (const auto& p : s.convex_pieces())
        for (const auto& g : p.generators()) gens.push_back(g);
    if (gens.empty()) return true;
    lp::Program p(2);
    p.set_free(0);
    p.set_free(1);
    for (const auto& g : gens) p.add(g, lp::Sense::GreaterEq, 1);
    return lp::feasible(p);
}

Scalar distance(const SectorSet& s, const Vector& x) {
    if (x.size() != s.dim()) throw DimensionError("distance: dimension mismatch");
    std::optional<Scalar> best;
    for (const auto& p : s.convex_pieces()) {
        Scalar d = distance(p, x);
        if (!best || d < *best) best = d;
    }
    return *best;
}

}  // namespace uf::cone
