#include "ultrafun/weight.hpp"

#include "ultrafun/errors.hpp"
#include "ultrafun/lp.hpp"

namespace uf::cone {

std::size_t dim_of(const AnyCone& c) {
    return std::visit([](const auto& x) { return x.dim(); }, c);
}

Scalar distance(const AnyCone& c, const Vector& x) {
    return std::visit([&](const auto& u) { return distance(u, x); }, c);
}

std::vector<ConvexCone> convex_pieces(const AnyCone& c) {
    if (auto* cc = std::get_if<ConvexCone>(&c)) return {*cc};
    return std::get<SectorSet>(c).convex_pieces();
}

WeightSpec::WeightSpec(AnyCone u, Scalar a, Scalar b) : U(std::move(u)), A(std::move(a)), B(std::move(b)) {
    if (A <= 0 || B <= 0) throw PreconditionError("weight parameters A and B must be positive");
}

Scalar WeightSpec::log_weight(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("weight: dimension mismatch");
    return max_abs(x) / A - distance(U, scaled(x, B)) - B * max_abs(y);
}

Scalar WeightSpec::rho(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("weight: dimension mismatch");
    return -max_abs(x) / A + B * distance(U, x) + B * max_abs(y);
}

Scalar bilinear_norm_constant(const BilinearForm& form, std::size_t cap) {
    const std::size_t k = form.dim();
    if (k > cap) throw PreconditionError("bilinear_norm_constant: dimension exceeds enumeration cap");
    Scalar best = 0;
    Vector s(k), t(k);
    for (std::size_t a = 0; a < (std::size_t(1) << k); ++a) {
        for (std::size_t i = 0; i < k; ++i) s[i] = (a >> i) & 1 ? -1 : 1;
        Vector ms = form.apply(s);
        for (std::size_t b = 0; b < (std::size_t(1) << k); ++b) {
            for (std::size_t i = 0; i < k; ++i) t[i] = (b >> i) & 1 ? -1 : 1;
            Scalar v = abs(dot(ms, t));
            if (v > best) best = v;
        }
    }
    return best;
}

Scalar membership_exponent(const Vector& l, const WeightSpec& w, const Vector& x) {
    return -dot(l, x) + max_abs(x) / w.A - w.B * distance(w.U, x);
}

MembershipResult exp_membership(const Vector& l, const WeightSpec& w) {
    const std::size_t k = w.dim();
    if (l.size() != k) throw DimensionError("exp_membership: functional has the wrong dimension");
    MembershipResult out;
    out.bounded = true;
    auto pieces = convex_pieces(w.U);
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const auto& gens = pieces[pi].generators();
        const std::size_t g = gens.size();
        // variables: x (k, free), mu (g), t (1)
        const std::size_t n = k + g + 1;
        for (std::size_t face = 0; face < k; ++face) {
            for (int sgn : {1, -1}) {
                lp::Program p(n);
                for (std::size_t j = 0; j < k; ++j) p.set_free(j);
                p.maximize = true;
                p.objective.assign(n, Scalar(0));
                for (std::size_t j = 0; j < k; ++j) p.objective[j] = -l[j];
                p.objective[k + g] = -w.B;
                for (std::size_t j = 0; j < k; ++j) {
                    Vector e(n);
                    e[j] = 1;
                    if (j == face) {
                        p.add(e, lp::Sense::Equal, sgn);
                    } else {
                        p.add(e, lp::Sense::LessEq, 1);
                        p.add(e, lp::Sense::GreaterEq, -1);
                    }
                    // -t <= x_j - (G mu)_j <= t
                    Vector r(n);
                    r[j] = 1;
                    for (std::size_t q = 0; q < g; ++q) r[k + q] = -gens[q][j];
                    Vector lo = r, hi = r;
                    hi[k + g] = -1;
                    lo[k + g] = 1;
                    p.add(hi, lp::Sense::LessEq, 0);
                    p.add(lo, lp::Sense::GreaterEq, 0);
                }
                auto res = lp::solve(p);
                if (res.status != lp::Status::Optimal) throw std::logic_error("exp_membership: face LP not optimal");
                FaceValue fv{face, sgn, pi, res.value + Scalar(1) / w.A,
                             Vector(res.solution.begin(), res.solution.begin() + k)};
                if (fv.max_h > 0) {
                    out.bounded = false;
                    if (!out.violating) out.violating = fv.argmax;
                }
                out.certificate.push_back(std::move(fv));
            }
        }
    }
    return out;
}

bool multiplier_admissible(const WeightSpec& w, const Vector& eta, const BilinearForm& form) {
    if (eta.size() != form.dim()) throw DimensionError("multiplier_admissible: dimension mismatch");
    Scalar a = bilinear_norm_constant(form);
    return max_abs(eta) * w.A * a < 1;
}

}  // namespace uf::cone
