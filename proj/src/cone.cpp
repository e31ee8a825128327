#include "ultrafun/cone.hpp"

#include "ultrafun/errors.hpp"
#include "ultrafun/lp.hpp"

#include <algorithm>
#include <set>

namespace uf::cone {

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) throw DimensionError("bilinear form must be a nonempty square matrix");
    if (m_ != m_.transposed()) throw PreconditionError("bilinear form must be symmetric");
    if (m_.determinant() == 0) throw PreconditionError("bilinear form must be nondegenerate");
}

BilinearForm BilinearForm::standard(std::size_t k) { return BilinearForm(Matrix::identity(k)); }

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("bilinear form: dimension mismatch");
    return dot(x, m_ * y);
}

namespace {

bool in_cone_of(const Vector& x, const std::vector<Vector>& gens, std::size_t dim) {
    if (is_zero(x)) return true;
    if (gens.empty()) return false;
    lp::Program p(gens.size());
    for (std::size_t i = 0; i < dim; ++i) {
        Vector row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][i];
        p.add(std::move(row), lp::Sense::Equal, x[i]);
    }
    return lp::feasible(p);
}

std::vector<Vector> normalize_dedupe(const std::vector<Vector>& gens) {
    std::set<Vector> seen;
    std::vector<Vector> out;
    for (const auto& g : gens) {
        if (is_zero(g)) continue;
        Vector n = normalized_direction(g);
        if (seen.insert(n).second) out.push_back(std::move(n));
    }
    return out;
}

// Greedy removal of generators lying in the cone of the remaining ones.
std::vector<Vector> prune(std::vector<Vector> gens, std::size_t dim) {
    gens = normalize_dedupe(gens);
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Vector> others;
        others.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (in_cone_of(gens[i], others, dim))
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return gens;
}

}  // namespace

ConvexCone::ConvexCone(std::size_t dim, std::vector<Vector> generators) : dim_(dim), generators_(std::move(generators)) {
    if (dim_ == 0) throw DimensionError("cone dimension must be positive");
    for (const auto& g : generators_) {
        if (g.size() != dim_) throw DimensionError("cone generator has wrong dimension");
        if (is_zero(g)) throw PreconditionError("cone generators must be nonzero");
    }
}

ConvexCone ConvexCone::whole(std::size_t dim) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = 1;
        gens.push_back(e);
        e[i] = -1;
        gens.push_back(e);
    }
    return ConvexCone(dim, std::move(gens));
}

ConvexCone ConvexCone::from_inequalities(std::size_t dim, const std::vector<Vector>& rows) {
    std::vector<Vector> rays = whole(dim).generators();
    for (const auto& a : rows) {
        if (a.size() != dim) throw DimensionError("inequality has wrong dimension");
        if (is_zero(a)) continue;
        std::vector<Vector> pos, zero, neg;
        std::vector<Scalar> pos_val, neg_val;
        for (const auto& r : rays) {
            Scalar v = dot(a, r);
            if (v > 0) {
                pos.push_back(r);
                pos_val.push_back(v);
            } else if (v < 0) {
                neg.push_back(r);
                neg_val.push_back(v);
            } else {
                zero.push_back(r);
            }
        }
        std::vector<Vector> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = 0; j < neg.size(); ++j)
                next.push_back(sub(scaled(neg[j], pos_val[i]), scaled(pos[i], neg_val[j])));
        rays = prune(std::move(next), dim);
    }
    return ConvexCone(dim, std::move(rays));
}

bool ConvexCone::contains(const Vector& x) const {
    if (x.size() != dim_) throw DimensionError("cone membership: dimension mismatch");
    return in_cone_of(x, generators_, dim_);
}

std::vector<Vector> ConvexCone::inequalities() const {
    return from_inequalities(dim_, generators_).generators();
}

std::size_t ConvexCone::span_dim() const {
    if (generators_.empty()) return 0;
    return Matrix::from_rows(generators_, dim_).rank();
}

std::size_t ConvexCone::lineality_dim() const {
    auto ineq = inequalities();
    if (ineq.empty()) return dim_;
    return dim_ - Matrix::from_rows(ineq, dim_).rank();
}

ConvexCone ConvexCone::canonical() const {
    auto ineq = inequalities();
    std::vector<Vector> lineality;
    if (ineq.empty()) {
        lineality = Subspace::whole(dim_).basis();
    } else {
        lineality = Subspace::span(Matrix::from_rows(ineq, dim_).kernel(), dim_).basis();
    }
    std::vector<Vector> out;
    for (const auto& b : lineality) {
        Vector n = normalized_direction(b);
        out.push_back(n);
        out.push_back(scaled(n, Scalar(-1)));
    }
    std::vector<Vector> projected;
    if (lineality.empty()) {
        projected = generators_;
    } else {
        Matrix bm = Matrix::from_rows(lineality, dim_);
        Matrix gram_inv = *(bm * bm.transposed()).inverse();
        Matrix proj = bm.transposed() * gram_inv * bm;
        for (const auto& g : generators_) projected.push_back(sub(g, proj * g));
    }
    auto rays = prune(projected, dim_);
    std::sort(rays.begin(), rays.end());
    out.insert(out.end(), rays.begin(), rays.end());
    return ConvexCone(dim_, std::move(out));
}

std::string ConvexCone::to_string() const {
    std::string s = "cone" + std::to_string(dim_) + "{";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) s += ", ";
        s += uf::to_string(generators_[i]);
    }
    return s + "}";
}

bool leq(const ConvexCone& a, const ConvexCone& b) {
    if (a.dim() != b.dim()) throw DimensionError("leq: dimension mismatch");
    if (a.generators().empty()) return true;
    auto ineq = b.inequalities();
    for (const auto& g : a.generators())
        for (const auto& h : ineq)
            if (dot(g, h) < 0) return false;
    return true;
}

bool same_set(const ConvexCone& a, const ConvexCone& b) { return leq(a, b) && leq(b, a); }

bool operator==(const ConvexCone& a, const ConvexCone& b) { return same_set(a, b); }

ConvexCone dual_cone(const ConvexCone& c, const BilinearForm& form) {
    if (c.dim() != form.dim()) throw DimensionError("dual_cone: cone and form dimensions differ");
    std::vector<Vector> rows;
    for (const auto& g : c.generators()) rows.push_back(form.apply(g));
    return ConvexCone::from_inequalities(c.dim(), rows);
}

bool is_proper(const ConvexCone& c) {
    if (c.generators().empty()) return true;
    lp::Program p(c.dim());
    for (std::size_t j = 0; j < c.dim(); ++j) p.set_free(j);
    for (const auto& g : c.generators()) p.add(g, lp::Sense::GreaterEq, 1);
    return lp::feasible(p);
}

ConvexCone meet(const ConvexCone& a, const ConvexCone& b) {
    if (a.dim() != b.dim()) throw DimensionError("meet: dimension mismatch");
    auto rows = a.inequalities();
    auto more = b.inequalities();
    rows.insert(rows.end(), more.begin(), more.end());
    return ConvexCone::from_inequalities(a.dim(), rows);
}

DistanceResult distance_with_witness(const ConvexCone& c, const Vector& x) {
    const std::size_t k = c.dim();
    if (x.size() != k) throw DimensionError("distance: dimension mismatch");
    const auto& g = c.generators();
    const std::size_t m = g.size();
    if (m == 0) return {uniform_norm(x), Vector(k)};
    // Variables: mu_0..mu_{m-1} >= 0, t >= 0. Minimize t.
    lp::Program p(m + 1);
    for (std::size_t i = 0; i < k; ++i) {
        Vector upper(m + 1), lower(m + 1);
        for (std::size_t j = 0; j < m; ++j) {
            upper[j] = g[j][i];
            lower[j] = -g[j][i];
        }
        upper[m] = -1;
        lower[m] = -1;
        p.add(std::move(upper), lp::Sense::LessEq, x[i]);   // (G mu)_i - t <= x_i
        p.add(std::move(lower), lp::Sense::LessEq, -x[i]);  // -(G mu)_i - t <= -x_i
    }
    p.objective.assign(m + 1, 0);
    p.objective[m] = 1;
    auto r = lp::solve(p);
    DistanceResult out{r.value, Vector(k)};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < k; ++i) out.nearest[i] += r.solution[j] * g[j][i];
    return out;
}

Scalar distance(const ConvexCone& c, const Vector& x) { return distance_with_witness(c, x).value; }

bool covers_space(const std::vector<ConvexCone>& cones, std::size_t dim) {
    std::vector<std::vector<Vector>> facets;
    for (const auto& c : cones) {
        if (c.dim() != dim) throw DimensionError("covers_space: dimension mismatch");
        auto ineq = c.inequalities();
        if (ineq.empty()) return true;
        facets.push_back(std::move(ineq));
    }
    if (facets.empty()) return false;
    std::vector<std::size_t> choice(facets.size(), 0);
    for (;;) {
        lp::Program p(dim);
        for (std::size_t j = 0; j < dim; ++j) p.set_free(j);
        for (std::size_t i = 0; i < facets.size(); ++i) p.add(facets[i][choice[i]], lp::Sense::LessEq, -1);
        if (lp::feasible(p)) return false;
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == facets[pos].size()) choice[pos++] = 0;
        if (pos == choice.size()) return true;
    }
}

}  // namespace uf::cone
