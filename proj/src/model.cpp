#include "ultrafun/model.hpp"

#include <fstream>
#include <sstream>

namespace uf::model {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

Scalar scalar(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, "bad rational '" + j.get<std::string>() + "'");
        }
    }
    if (j.is_number()) fail(path, "floating-point literal; write rationals as strings \"p/q\"");
    fail(path, "expected a rational");
}

h1::GaussianRational gaussian(const json& j, const std::string& path) {
    if (j.is_number_integer()) return h1::GaussianRational(Scalar(j.get<long long>()));
    if (!j.is_string()) fail(path, "expected a complex rational string such as \"1/2-3i\"");
    try {
        return h1::parse_gaussian(j.get<std::string>());
    } catch (const std::exception&) {
        fail(path, "bad complex rational '" + j.get<std::string>() + "'");
    }
}

std::size_t count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

Vector vec(const json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) {
    if (!j.is_array()) fail(path, "expected an array");
    if (len && j.size() != *len) fail(path, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix mat(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vec(j[r], path + "[" + std::to_string(r) + "]", cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

std::string str(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

cone::BilinearForm parse_form(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a square matrix");
    Matrix m = mat(j, path, j.size(), j.size());
    if (m.determinant() == 0) fail(path, "form is degenerate");
    return cone::BilinearForm(m);
}

cone::AnyCone parse_cone(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    try {
        if (j.contains("generators")) {
            std::size_t k = count(field(j, "dim", path), path + ".dim");
            std::vector<Vector> gens;
            const json& g = j["generators"];
            if (!g.is_array()) fail(path + ".generators", "expected an array");
            for (std::size_t i = 0; i < g.size(); ++i)
                gens.push_back(vec(g[i], path + ".generators[" + std::to_string(i) + "]", k));
            return cone::ConvexCone(k, gens);
        }
        if (j.contains("half_lines")) {
            const json& h = j["half_lines"];
            if (!h.is_array()) fail(path + ".half_lines", "expected an array of \"+\" and \"-\"");
            bool pos = false, neg = false;
            for (const auto& s : h) {
                std::string side = str(s, path + ".half_lines");
                if (side == "+") pos = true;
                else if (side == "-") neg = true;
                else fail(path + ".half_lines", "unknown side '" + side + "'");
            }
            return cone::SectorSet::half_lines(pos, neg);
        }
        if (j.contains("sectors")) {
            const json& s = j["sectors"];
            if (!s.is_array()) fail(path + ".sectors", "expected an array of [from, to] pairs");
            if (s.empty()) return cone::SectorSet::origin(2);
            std::vector<cone::Arc> arcs;
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::string p = path + ".sectors[" + std::to_string(i) + "]";
                if (!s[i].is_array() || s[i].size() != 2) fail(p, "expected [from, to]");
                arcs.push_back({vec(s[i][0], p + "[0]", 2), vec(s[i][1], p + "[1]", 2)});
            }
            return cone::SectorSet::from_arcs(arcs);
        }
        if (j.contains("whole")) {
            std::size_t k = count(j["whole"], path + ".whole");
            if (k <= 2) return cone::SectorSet::whole(k);
            return cone::ConvexCone::whole(k);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path, "a cone needs one of 'generators', 'half_lines', 'sectors' or 'whole'");
}

lattice::FinitePoset parse_poset(const json& j, const std::string& path) {
    const json& el = field(j, "elements", path);
    if (!el.is_array() || el.empty()) fail(path + ".elements", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < el.size(); ++i) names.push_back(str(el[i], path + ".elements[" + std::to_string(i) + "]"));
    std::vector<std::pair<lattice::Element, lattice::Element>> pairs;
    auto index = [&](const json& n, const std::string& p) {
        std::string s = str(n, p);
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) fail(p, "unknown element '" + s + "'");
        return static_cast<lattice::Element>(it - names.begin());
    };
    if (j.contains("order")) {
        const json& o = j["order"];
        if (!o.is_array()) fail(path + ".order", "expected an array of [lower, upper] pairs");
        for (std::size_t i = 0; i < o.size(); ++i) {
            std::string p = path + ".order[" + std::to_string(i) + "]";
            if (!o[i].is_array() || o[i].size() != 2) fail(p, "expected [lower, upper]");
            pairs.emplace_back(index(o[i][0], p + "[0]"), index(o[i][1], p + "[1]"));
        }
    }
    try {
        return lattice::FinitePoset::from_pairs(names, pairs);
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

lattice::Element element(const lattice::FinitePoset& p, const json& j, const std::string& path) {
    std::string s = str(j, path);
    auto e = p.find(s);
    if (!e) fail(path, "unknown element '" + s + "'");
    return *e;
}

System parse_system(const json& j, const std::string& path, const std::map<std::string, lattice::FinitePoset>& posets) {
    std::string pname = str(field(j, "poset", path), path + ".poset");
    auto pit = posets.find(pname);
    if (pit == posets.end()) fail(path + ".poset", "unknown poset '" + pname + "'");
    const auto& p = pit->second;
    const json& d = field(j, "dims", path);
    std::vector<std::size_t> dims(p.size());
    if (d.is_object()) {
        std::vector<bool> seen(p.size(), false);
        for (const auto& [k, v] : d.items()) {
            auto e = p.find(k);
            if (!e) fail(path + ".dims", "unknown element '" + k + "'");
            dims[*e] = count(v, path + ".dims." + k);
            seen[*e] = true;
        }
        for (lattice::Element a = 0; a < p.size(); ++a)
            if (!seen[a]) fail(path + ".dims", "no dimension for '" + p.name(a) + "'");
    } else if (d.is_array()) {
        if (d.size() != p.size()) fail(path + ".dims", "expected one dimension per element");
        for (std::size_t a = 0; a < d.size(); ++a) dims[a] = count(d[a], path + ".dims[" + std::to_string(a) + "]");
    } else {
        fail(path + ".dims", "expected an object or an array");
    }
    std::map<ind::Pair, Matrix> maps;
    if (j.contains("maps")) {
        const json& m = j["maps"];
        if (!m.is_array()) fail(path + ".maps", "expected an array");
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::string mp = path + ".maps[" + std::to_string(i) + "]";
            auto a = element(p, field(m[i], "from", mp), mp + ".from");
            auto b = element(p, field(m[i], "to", mp), mp + ".to");
            if (!p.less(a, b)) fail(mp, "'" + p.name(a) + "' is not below '" + p.name(b) + "'");
            if (maps.count({a, b})) fail(mp, "duplicate map");
            maps[{a, b}] = mat(field(m[i], "matrix", mp), mp + ".matrix", dims[b], dims[a]);
        }
    }
    try {
        return {pname, ind::IndSystem(p, dims, maps)};
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

Morphism parse_morphism(const json& j, const std::string& path, const std::map<std::string, lattice::FinitePoset>& posets) {
    Morphism out;
    out.source = str(field(j, "source", path), path + ".source");
    out.target = str(field(j, "target", path), path + ".target");
    auto s = posets.find(out.source), t = posets.find(out.target);
    if (s == posets.end()) fail(path + ".source", "unknown poset '" + out.source + "'");
    if (t == posets.end()) fail(path + ".target", "unknown poset '" + out.target + "'");
    try {
        out.m.source = lattice::validate_quasilattice(s->second);
        out.m.target = lattice::validate_quasilattice(t->second);
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    const json& m = field(j, "map", path);
    if (!m.is_object()) fail(path + ".map", "expected an object from source to target names");
    out.m.map.assign(s->second.size(), 0);
    std::vector<bool> seen(s->second.size(), false);
    for (const auto& [k, v] : m.items()) {
        auto a = s->second.find(k);
        if (!a) fail(path + ".map", "unknown source element '" + k + "'");
        out.m.map[*a] = element(t->second, v, path + ".map." + k);
        seen[*a] = true;
    }
    for (lattice::Element a = 0; a < seen.size(); ++a)
        if (!seen[a]) fail(path + ".map", "no image for '" + s->second.name(a) + "'");
    return out;
}

h1::ExpCoef exp_coef(const json& j, const std::string& path) {
    if (!j.is_array()) return h1::ExpCoef(gaussian(j, path));
    h1::ExpCoef c;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) fail(p, "expected [exponent, coefficient]");
        c += h1::ExpCoef::exp(gaussian(j[i][0], p + "[0]"), gaussian(j[i][1], p + "[1]"));
    }
    return c;
}

h1::Ultrafunctional1D parse_functional(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    h1::Ultrafunctional1D u;
    if (j.contains("point_masses")) {
        const json& pm = j["point_masses"];
        if (!pm.is_array()) fail(path + ".point_masses", "expected an array");
        for (std::size_t i = 0; i < pm.size(); ++i) {
            std::string p = path + ".point_masses[" + std::to_string(i) + "]";
            auto z = gaussian(field(pm[i], "z", p), p + ".z");
            std::size_t m = pm[i].contains("m") ? count(pm[i]["m"], p + ".m") : 0;
            auto c = pm[i].contains("c") ? exp_coef(pm[i]["c"], p + ".c") : h1::ExpCoef(1);
            u.add_point(z, m, c);
        }
    }
    if (j.contains("segments")) {
        const json& sg = j["segments"];
        if (!sg.is_array()) fail(path + ".segments", "expected an array");
        for (std::size_t i = 0; i < sg.size(); ++i) {
            std::string p = path + ".segments[" + std::to_string(i) + "]";
            std::string side = str(field(sg[i], "side", p), p + ".side");
            if (side != "+" && side != "-") fail(p + ".side", "expected \"+\" or \"-\"");
            auto lambda = gaussian(field(sg[i], "lambda", p), p + ".lambda");
            std::vector<h1::GaussianRational> coeffs{h1::GaussianRational(1)};
            if (sg[i].contains("poly")) {
                const json& pj = sg[i]["poly"];
                if (!pj.is_array()) fail(p + ".poly", "expected coefficients, lowest degree first");
                coeffs.clear();
                for (std::size_t n = 0; n < pj.size(); ++n)
                    coeffs.push_back(gaussian(pj[n], p + ".poly[" + std::to_string(n) + "]"));
            }
            try {
                u.add_segment(side == "+" ? h1::Side::Plus : h1::Side::Minus, lambda, h1::Poly(coeffs));
            } catch (const std::exception& e) {
                fail(p, e.what());
            }
        }
    }
    return u;
}

template <class T, class F>
void section(const json& root, const std::string& name, std::map<std::string, T>& out, F parse) {
    if (!root.contains(name)) return;
    const json& s = root[name];
    if (!s.is_object()) fail(name, "expected an object of named entries");
    for (const auto& [k, v] : s.items()) out.emplace(k, parse(v, name + "." + k));
}

}  // namespace

Model parse_model(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        throw ParseError(pos == std::string::npos ? msg : msg.substr(pos));
    }
    if (!root.is_object()) throw ParseError("model: expected a JSON object at the top level");
    static const std::set<std::string> known{"forms", "cones", "posets", "systems", "morphisms", "functionals"};
    for (const auto& [k, v] : root.items())
        if (!known.count(k)) fail(k, "unknown section");
    Model m;
    section(root, "forms", m.forms, parse_form);
    section(root, "cones", m.cones, parse_cone);
    section(root, "posets", m.posets, parse_poset);
    section(root, "systems", m.systems, [&](const json& j, const std::string& p) { return parse_system(j, p, m.posets); });
    section(root, "morphisms", m.morphisms,
            [&](const json& j, const std::string& p) { return parse_morphism(j, p, m.posets); });
    section(root, "functionals", m.functionals, parse_functional);
    return m;
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_model(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
    return a;
}

json dump_form(const cone::BilinearForm& f) { return matrix_json(f.matrix()); }

json dump_cone(const cone::AnyCone& c) {
    json j;
    if (const auto* cc = std::get_if<cone::ConvexCone>(&c)) {
        j["dim"] = cc->dim();
        json g = json::array();
        auto canon = cc->canonical();
        for (const auto& v : canon.generators()) g.push_back(vector_json(v));
        j["generators"] = g;
        return j;
    }
    const auto& s = std::get<cone::SectorSet>(c);
    if (s.dim() == 1) {
        json h = json::array();
        if (s.positive()) h.push_back("+");
        if (s.negative()) h.push_back("-");
        j["half_lines"] = h;
    } else if (s.is_full()) {
        j["whole"] = 2;
    } else {
        json a = json::array();
        for (const auto& arc : s.arcs()) a.push_back(json::array({vector_json(arc.from), vector_json(arc.to)}));
        j["sectors"] = a;
    }
    return j;
}

json dump_poset(const lattice::FinitePoset& p) {
    json j;
    j["elements"] = p.names();
    json o = json::array();
    for (auto [a, b] : p.covering_pairs()) o.push_back(json::array({p.name(a), p.name(b)}));
    j["order"] = o;
    return j;
}

json dump_system(const std::string& poset, const ind::IndSystem& sys) {
    const auto& p = sys.index();
    json j;
    j["poset"] = poset;
    json d = json::object();
    for (lattice::Element a = 0; a < p.size(); ++a) d[p.name(a)] = sys.dim(a);
    j["dims"] = d;
    json maps = json::array();
    for (auto [a, b] : p.covering_pairs())
        maps.push_back({{"from", p.name(a)}, {"to", p.name(b)}, {"matrix", matrix_json(sys.rho(a, b))}});
    j["maps"] = maps;
    return j;
}

json dump_morphism(const Morphism& m) {
    json j;
    j["source"] = m.source;
    j["target"] = m.target;
    json map = json::object();
    for (lattice::Element a = 0; a < m.m.map.size(); ++a) map[m.m.source.name(a)] = m.m.target.name(m.m.map[a]);
    j["map"] = map;
    return j;
}

json dump_functional(const h1::Ultrafunctional1D& u) {
    json j;
    json pm = json::array();
    for (const auto& p : u.points()) {
        json c;
        if (p.c.is_plain()) {
            c = h1::to_string(p.c.plain());
        } else {
            c = json::array();
            for (const auto& [e, k] : p.c.terms()) c.push_back(json::array({h1::to_string(e), h1::to_string(k)}));
        }
        pm.push_back({{"z", h1::to_string(p.z)}, {"m", p.m}, {"c", c}});
    }
    json sg = json::array();
    for (const auto& s : u.segments()) {
        json poly = json::array();
        for (const auto& c : s.p.coeffs()) poly.push_back(h1::to_string(c));
        sg.push_back({{"side", s.side == h1::Side::Plus ? "+" : "-"}, {"lambda", h1::to_string(s.lambda)}, {"poly", poly}});
    }
    j["point_masses"] = pm;
    j["segments"] = sg;
    return j;
}

json dump_model(const Model& m) {
    json j = json::object();
    auto put = [&](const char* name, const auto& items, auto dump) {
        if (items.empty()) return;
        json s = json::object();
        for (const auto& [k, v] : items) s[k] = dump(v);
        j[name] = s;
    };
    put("forms", m.forms, dump_form);
    put("cones", m.cones, dump_cone);
    put("posets", m.posets, dump_poset);
    put("systems", m.systems, [](const System& s) { return dump_system(s.poset, s.sys); });
    put("morphisms", m.morphisms, dump_morphism);
    put("functionals", m.functionals, dump_functional);
    return j;
}

bool same_system(const ind::IndSystem& a, const ind::IndSystem& b) {
    if (!(a.index() == b.index()) || a.dims() != b.dims()) return false;
    const auto& p = a.index();
    for (lattice::Element x = 0; x < p.size(); ++x)
        for (lattice::Element y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !(a.rho(x, y) == b.rho(x, y))) return false;
    return true;
}

bool same_cone(const cone::AnyCone& a, const cone::AnyCone& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<cone::ConvexCone>(&a)) return *ca == std::get<cone::ConvexCone>(b);
    return std::get<cone::SectorSet>(a) == std::get<cone::SectorSet>(b);
}

bool operator==(const Model& a, const Model& b) {
    auto keys_equal = [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return false;
        for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
            if (i->first != j->first) return false;
        return true;
    };
    if (!keys_equal(a.forms, b.forms) || !keys_equal(a.cones, b.cones) || !keys_equal(a.posets, b.posets) ||
        !keys_equal(a.systems, b.systems) || !keys_equal(a.morphisms, b.morphisms) ||
        !keys_equal(a.functionals, b.functionals))
        return false;
    for (const auto& [k, f] : a.forms)
        if (!(f.matrix() == b.forms.at(k).matrix())) return false;
    for (const auto& [k, c] : a.cones)
        if (!same_cone(c, b.cones.at(k))) return false;
    for (const auto& [k, p] : a.posets)
        if (!(p == b.posets.at(k))) return false;
    for (const auto& [k, s] : a.systems)
        if (s.poset != b.systems.at(k).poset || !same_system(s.sys, b.systems.at(k).sys)) return false;
    for (const auto& [k, m] : a.morphisms) {
        const auto& o = b.morphisms.at(k);
        if (m.source != o.source || m.target != o.target || m.m.map != o.m.map) return false;
    }
    for (const auto& [k, u] : a.functionals)
        if (!(u == b.functionals.at(k))) return false;
    return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Vector> parse_vectors(const std::string& text) {
    std::vector<Vector> out;
    for (const auto& part : split(text, ';')) {
        Vector v;
        for (const auto& x : split(part, ',')) {
            try {
                v.push_back(parse_scalar(x));
            } catch (const std::exception&) {
                throw ParseError("--vectors: bad rational '" + x + "'");
            }
        }
        if (!out.empty() && v.size() != out.front().size()) throw ParseError("--vectors: vectors of different lengths");
        out.push_back(v);
    }
    return out;
}

}  // namespace uf::model
