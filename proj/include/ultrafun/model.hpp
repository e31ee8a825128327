#pragma once

#include "ultrafun/hyper1d.hpp"
#include "ultrafun/inductive.hpp"
#include "ultrafun/weight.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace uf::model {

using json = nlohmann::ordered_json;

/// Malformed model text: syntax errors carry line and column, semantic errors a JSON path.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct System {
    std::string poset;
    ind::IndSystem sys;
};

struct Morphism {
    std::string source;
    std::string target;
    lattice::LatticeMorphism m;
};

struct Model {
    std::map<std::string, cone::BilinearForm> forms;
    std::map<std::string, cone::AnyCone> cones;
    std::map<std::string, lattice::FinitePoset> posets;
    std::map<std::string, System> systems;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, h1::Ultrafunctional1D> functionals;
};

Model parse_model(const std::string& text);
Model load_model(const std::string& path);

json dump_form(const cone::BilinearForm& f);
json dump_cone(const cone::AnyCone& c);
json dump_poset(const lattice::FinitePoset& p);
/// Maps are written for covering pairs only; the rest are composites.
json dump_system(const std::string& poset, const ind::IndSystem& sys);
json dump_morphism(const Morphism& m);
json dump_functional(const h1::Ultrafunctional1D& u);
json dump_model(const Model& m);

json matrix_json(const Matrix& m);
json vector_json(const Vector& v);

/// Same dims and the same map for every comparable pair.
bool same_system(const ind::IndSystem& a, const ind::IndSystem& b);
bool same_cone(const cone::AnyCone& a, const cone::AnyCone& b);
bool operator==(const Model& a, const Model& b);

/// "1,0;0,1;-1,-1" -> vectors
std::vector<Vector> parse_vectors(const std::string& text);
std::vector<std::string> split(const std::string& text, char sep);

}  // namespace uf::model
