#include "ultrafun/cover.hpp"

#include "ultrafun/errors.hpp"
#include "ultrafun/lp.hpp"

#include <sstream>

namespace uf::cone {

bool positively_spans(const std::vector<Vector>& xs, std::size_t k) {
    if (xs.empty()) return k == 0;
    if (Matrix::from_columns(xs, k).rank() != k) return false;
    lp::Program p(xs.size());
    for (std::size_t j = 0; j < k; ++j) {
        Vector r(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) r[i] = xs[i][j];
        p.add(r, lp::Sense::Equal, 0);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Vector e(xs.size());
        e[i] = 1;
        p.add(e, lp::Sense::GreaterEq, 1);
    }
    return lp::feasible(p);
}

namespace {

std::vector<Vector> all_but(const std::vector<Vector>& xs, std::size_t i, std::size_t j) {
    std::vector<Vector> out;
    for (std::size_t l = 0; l < xs.size(); ++l)
        if (l != i && l != j) out.push_back(xs[l]);
    return out;
}

}  // namespace

SimplicialCover simplicial_cover(const std::vector<Vector>& xs, const BilinearForm& form) {
    const std::size_t k = form.dim();
    if (xs.size() != k + 1) throw PreconditionError("simplicial_cover: need exactly k+1 vectors");
    for (const auto& x : xs)
        if (x.size() != k) throw DimensionError("simplicial_cover: vector dimension differs from the form");
    if (!positively_spans(xs, k)) throw PreconditionError("simplicial_cover: vectors do not positively span");

    SimplicialCover c;
    c.vectors = xs;
    c.form = form;
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        c.K.emplace_back(k, all_but(xs, i, i));
        c.E.push_back(form.apply(xs[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vector> rows;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rows.push_back(c.E[j]);
        c.Gamma.push_back(ConvexCone::from_inequalities(k, rows).canonical());
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            c.Kij.emplace(std::make_pair(i, j), ConvexCone(k, all_but(xs, i, j)));
            std::vector<Vector> rows;
            for (std::size_t l = 0; l < n; ++l)
                if (l != i && l != j) rows.push_back(c.E[l]);
            c.V.emplace(std::make_pair(i, j), ConvexCone::from_inequalities(k, rows).canonical());
        }
    }
    return c;
}

std::vector<CoverCheck> check_cover(const SimplicialCover& c) {
    std::vector<CoverCheck> out;
    out.push_back({"union of K_i is the whole space", covers_space(c.K, c.dim()), ""});
    CoverCheck meets{"K_i meet K_j equals K_ij", true, ""};
    CoverCheck gamma{"Gamma_i equals the dual of K_i", true, ""};
    CoverCheck v{"V_ij equals the dual of K_ij", true, ""};
    for (const auto& [ij, kij] : c.Kij) {
        if (!(meet(c.K[ij.first], c.K[ij.second]) == kij) && meets.pass) {
            meets.pass = false;
            meets.detail = "pair (" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ")";
        }
        if (!(dual_cone(kij, c.form) == c.V.at(ij)) && v.pass) {
            v.pass = false;
            v.detail = "pair (" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ")";
        }
    }
    for (std::size_t i = 0; i < c.K.size(); ++i) {
        if (!(dual_cone(c.K[i], c.form) == c.Gamma[i]) && gamma.pass) {
            gamma.pass = false;
            gamma.detail = "index " + std::to_string(i + 1);
        }
    }
    out.push_back(meets);
    out.push_back(gamma);
    out.push_back(v);
    return out;
}

std::string to_string(const SimplicialCover& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.K.size(); ++i) {
        os << "K_" << i + 1 << " = " << c.K[i].canonical().to_string() << "\n";
        os << "E_" << i + 1 << " = {xi | " << uf::to_string(c.E[i]) << " . xi >= 0}\n";
        os << "Gamma_" << i + 1 << " = " << c.Gamma[i].to_string() << "\n";
    }
    for (const auto& [ij, kij] : c.Kij) {
        os << "K_" << ij.first + 1 << ij.second + 1 << " = " << kij.canonical().to_string() << "\n";
        os << "V_" << ij.first + 1 << ij.second + 1 << " = " << c.V.at(ij).to_string() << "\n";
    }
    return os.str();
}

}  // namespace uf::cone
