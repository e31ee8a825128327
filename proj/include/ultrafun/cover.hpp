#pragma once

#include "ultrafun/cone.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace uf::cone {

/// Cones attached to k+1 positively spanning vectors x^1..x^{k+1} (indices 0-based here).
struct SimplicialCover {
    std::vector<Vector> vectors;
    BilinearForm form = BilinearForm::standard(1);
    std::vector<ConvexCone> K;                                  // K_i: all vectors but x^i
    std::map<std::pair<std::size_t, std::size_t>, ConvexCone> Kij;  // i < j
    std::vector<Vector> E;                                      // E_i = {xi | E[i] . xi >= 0}
    std::vector<ConvexCone> Gamma;                              // intersection of E_j, j != i
    std::map<std::pair<std::size_t, std::size_t>, ConvexCone> V;    // intersection of E_l, l != i, j

    std::size_t dim() const { return form.dim(); }
};

struct CoverCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// True iff the vectors positively span Q^k.
bool positively_spans(const std::vector<Vector>& xs, std::size_t k);

/// Builds the cover and throws PreconditionError unless the k+1 vectors positively span.
SimplicialCover simplicial_cover(const std::vector<Vector>& xs, const BilinearForm& form);

/// union K_i = Q^k, K_i meet K_j = K_ij, Gamma_i = K_i^*, V_ij = K_ij^*.
std::vector<CoverCheck> check_cover(const SimplicialCover& c);

std::string to_string(const SimplicialCover& c);

}  // namespace uf::cone
