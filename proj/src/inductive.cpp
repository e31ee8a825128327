#include "ultrafun/inductive.hpp"

#include "ultrafun/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace uf::ind {

namespace {

Vector unit(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return e;
}

Subset set_union(const Subset& a, const Subset& b) {
    Subset out = a;
    out.insert(out.end(), b.begin(), b.end());
    return lattice::normalize(out);
}

Subset set_intersection(const Subset& a, const Subset& b) {
    Subset out;
    for (Element x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
}

bool is_subset(const Subset& a, const Subset& b) {
    return std::all_of(a.begin(), a.end(), [&](Element x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

bool hereditary(const FinitePoset& p, const Subset& s) {
    for (Element a : s)
        for (Element b = 0; b < p.size(); ++b)
            if (p.leq(b, a) && std::find(s.begin(), s.end(), b) == s.end()) return false;
    return true;
}

std::string names(const FinitePoset& p, const std::vector<Element>& xs) {
    std::string s;
    for (Element x : xs) s += (s.empty() ? "" : ", ") + p.name(x);
    return s;
}

// The first vector of `sub` that `big` does not contain.
std::optional<Vector> witness_outside(const Subspace& sub, const Subspace& big) {
    for (const auto& v : sub.basis())
        if (!big.contains(v)) return v;
    return std::nullopt;
}

Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        if (m.determinant() != 0) return m;
    }
}

IndSystem change_basis(const FinitePoset& p, const std::vector<std::size_t>& dims, const std::map<Pair, Matrix>& maps,
                       std::mt19937_64& rng) {
    std::vector<Matrix> P, Pinv;
    for (std::size_t d : dims) {
        P.push_back(random_invertible(d, rng));
        Pinv.push_back(*P.back().inverse());
    }
    std::map<Pair, Matrix> out;
    for (const auto& [ab, m] : maps) out.emplace(ab, P[ab.second] * m * Pinv[ab.first]);
    return IndSystem(p, dims, out);
}

}  // namespace

IndSystem::IndSystem(FinitePoset index, std::vector<std::size_t> dims, std::map<Pair, Matrix> given)
    : index_(std::move(index)), dims_(std::move(dims)) {
    const std::size_t n = index_.size();
    if (dims_.size() != n) throw DimensionError("inductive system: dims table does not match the index");
    for (const auto& [ab, m] : given) {
        auto [a, b] = ab;
        if (a >= n || b >= n) throw PreconditionError("inductive system: map refers to a missing element");
        if (!index_.leq(a, b))
            throw PreconditionError("inductive system: map given for non-comparable pair (" + index_.name(a) + ", " +
                                    index_.name(b) + ")");
        if (m.rows() != dims_[b] || m.cols() != dims_[a])
            throw DimensionError("inductive system: map (" + index_.name(a) + ", " + index_.name(b) +
                                 ") has the wrong shape");
        given_[ab] = true;
    }
    maps_ = std::move(given);
    for (Element a = 0; a < n; ++a)
        if (!maps_.count({a, a})) maps_.emplace(Pair{a, a}, Matrix::identity(dims_[a]));
    std::function<const Matrix&(Element, Element)> get = [&](Element a, Element b) -> const Matrix& {
        auto it = maps_.find({a, b});
        if (it != maps_.end()) return it->second;
        for (auto [x, c] : index_.covering_pairs()) {
            if (x != a || !index_.leq(c, b)) continue;
            if (!maps_.count({a, c}))
                throw PreconditionError("inductive system: missing map for covering pair (" + index_.name(a) + ", " +
                                        index_.name(c) + ")");
            Matrix m = get(c, b) * maps_.at({a, c});
            return maps_.emplace(Pair{a, b}, std::move(m)).first->second;
        }
        throw std::logic_error("inductive system: no chain of covers");
    };
    for (auto [a, b] : index_.comparable_pairs()) get(a, b);
    offsets_.resize(n);
    for (Element a = 0; a < n; ++a) {
        offsets_[a] = total_;
        total_ += dims_[a];
    }
}

const Matrix& IndSystem::rho(Element a, Element b) const {
    auto it = maps_.find({a, b});
    if (it == maps_.end()) throw PreconditionError("rho requested for a non-comparable pair");
    return it->second;
}

Vector IndSystem::embed(Element a, const Vector& x) const {
    if (x.size() != dims_[a]) throw DimensionError("embed: vector has the wrong dimension");
    Vector out(total_);
    std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets_[a]));
    return out;
}

Vector IndSystem::sigma(const Vector& x, Element a, Element b) const {
    Vector out = embed(a, x);
    Vector y = rho(a, b) * x;
    for (std::size_t i = 0; i < y.size(); ++i) out[offsets_[b] + i] -= y[i];
    return out;
}

ValidationReport validate(const IndSystem& sys) {
    ValidationReport r;
    const auto& p = sys.index();
    for (Element a = 0; a < sys.size(); ++a)
        if (!(sys.rho(a, a) == Matrix::identity(sys.dim(a)))) {
            r.pass = false;
            r.witness = {a};
            r.detail = "rho(" + p.name(a) + ", " + p.name(a) + ") is not the identity";
            return r;
        }
    for (auto [a, b] : p.comparable_pairs())
        for (Element c = 0; c < sys.size(); ++c) {
            if (!p.leq(b, c)) continue;
            if (!(sys.rho(a, c) == sys.rho(b, c) * sys.rho(a, b))) {
                r.pass = false;
                r.witness = {a, b, c};
                r.detail = "rho(" + p.name(a) + ", " + p.name(c) + ") != rho(" + p.name(b) + ", " + p.name(c) +
                           ") rho(" + p.name(a) + ", " + p.name(b) + ")";
                return r;
            }
        }
    return r;
}

Vector Colimit::quotient(const Vector& v) const {
    Vector r = relations.reduce(v);
    Vector out(free_cols.size());
    for (std::size_t i = 0; i < free_cols.size(); ++i) out[i] = r[free_cols[i]];
    return out;
}

Vector Colimit::lift(const Vector& c, std::size_t total_dim) const {
    if (c.size() != free_cols.size()) throw DimensionError("lift: vector has the wrong dimension");
    Vector out(total_dim);
    for (std::size_t i = 0; i < free_cols.size(); ++i) out[free_cols[i]] = c[i];
    return out;
}

Subspace all_pair_relations(const IndSystem& sys, const Subset& subset) {
    std::vector<Vector> gens;
    for (Element a : subset)
        for (Element b : subset) {
            if (!sys.index().less(a, b)) continue;
            for (std::size_t j = 0; j < sys.dim(a); ++j) gens.push_back(sys.sigma(unit(sys.dim(a), j), a, b));
        }
    return Subspace::span(gens, sys.total_dim());
}

Subspace covering_relations(const IndSystem& sys, const Subset& subset) {
    const auto& p = sys.index();
    std::vector<Vector> gens;
    for (Element a : subset)
        for (Element b : subset) {
            if (!p.less(a, b)) continue;
            bool between = std::any_of(subset.begin(), subset.end(),
                                       [&](Element c) { return p.less(a, c) && p.less(c, b); });
            if (between) continue;
            for (std::size_t j = 0; j < sys.dim(a); ++j) gens.push_back(sys.sigma(unit(sys.dim(a), j), a, b));
        }
    return Subspace::span(gens, sys.total_dim());
}

Subspace coordinate_space(const IndSystem& sys, const Subset& subset) {
    std::vector<Vector> gens;
    for (Element a : subset)
        for (std::size_t j = 0; j < sys.dim(a); ++j) gens.push_back(unit(sys.total_dim(), sys.offset(a) + j));
    return Subspace::span(gens, sys.total_dim());
}

Colimit colimit(const IndSystem& sys, const Subset& subset_in) {
    Colimit c;
    c.subset = lattice::normalize(subset_in);
    for (Element a : c.subset)
        if (a >= sys.size()) throw PreconditionError("colimit: subset refers to a missing element");
    c.relations = all_pair_relations(sys, c.subset);
    std::vector<bool> pivot(sys.total_dim(), false);
    for (auto p : c.relations.pivots()) pivot[p] = true;
    for (Element a : c.subset)
        for (std::size_t j = 0; j < sys.dim(a); ++j)
            if (!pivot[sys.offset(a) + j]) c.free_cols.push_back(sys.offset(a) + j);
    std::sort(c.free_cols.begin(), c.free_cols.end());
    c.dim = c.free_cols.size();
    for (Element a : c.subset) {
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < sys.dim(a); ++j) cols.push_back(c.quotient(sys.embed(a, unit(sys.dim(a), j))));
        c.projections.emplace(a, Matrix::from_columns(cols, c.dim));
    }
    return c;
}

Colimit colimit(const IndSystem& sys) { return colimit(sys, sys.index().all()); }

IndSystem restrict(const IndSystem& sys, const Subset& subset_in) {
    Subset s = lattice::normalize(subset_in);
    std::vector<std::string> nm;
    std::vector<std::vector<bool>> r(s.size(), std::vector<bool>(s.size()));
    std::vector<std::size_t> dims;
    std::map<Pair, Matrix> maps;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= sys.size()) throw PreconditionError("restrict: subset refers to a missing element");
        nm.push_back(sys.index().name(s[i]));
        dims.push_back(sys.dim(s[i]));
        for (std::size_t j = 0; j < s.size(); ++j) {
            r[i][j] = sys.index().leq(s[i], s[j]);
            if (r[i][j]) maps.emplace(Pair{i, j}, sys.rho(s[i], s[j]));
        }
    }
    return IndSystem(FinitePoset(nm, r), dims, maps);
}

Matrix tau(const Colimit& ci, const Colimit& cj, std::size_t total_dim) {
    if (!is_subset(ci.subset, cj.subset)) throw PreconditionError("tau: I is not contained in J");
    std::vector<Vector> cols;
    for (std::size_t f : ci.free_cols) cols.push_back(cj.quotient(unit(total_dim, f)));
    return Matrix::from_columns(cols, cj.dim);
}

Matrix tau(const IndSystem& sys, const Subset& I, const Subset& J) {
    return tau(colimit(sys, I), colimit(sys, J), sys.total_dim());
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::I: return "I";
        case Condition::II: return "II";
        case Condition::III: return "III";
        case Condition::IIIprime: return "IIIprime";
    }
    return "?";
}

std::optional<Condition> parse_condition(const std::string& s) {
    if (s == "I") return Condition::I;
    if (s == "II") return Condition::II;
    if (s == "III") return Condition::III;
    if (s == "IIIprime" || s == "III'") return Condition::IIIprime;
    return std::nullopt;
}

namespace {

ConditionReport check_I(const IndSystem& sys) {
    ConditionReport r;
    r.condition = Condition::I;
    for (auto [a, b] : sys.index().comparable_pairs()) {
        if (a == b) continue;
        auto ker = sys.rho(a, b).kernel();
        if (!ker.empty()) {
            r.pass = false;
            r.family = {a, b};
            r.vectors = {ker.front()};
            r.detail = "rho(" + sys.index().name(a) + ", " + sys.index().name(b) + ") is not injective";
            return r;
        }
    }
    return r;
}

ConditionReport check_II(const IndSystem& sys, const QuasiLattice& q) {
    ConditionReport r;
    r.condition = Condition::II;
    for (Element a = 0; a < sys.size(); ++a)
        for (Element b = a + 1; b < sys.size(); ++b) {
            auto j = q.join(a, b);
            if (!j) continue;
            Subspace img = Subspace::column_space(sys.rho(a, *j).hstack(sys.rho(b, *j)));
            if (img.dim() == sys.dim(*j)) continue;
            r.pass = false;
            r.family = {a, b};
            r.bound = *j;
            r.vectors = {*witness_outside(Subspace::whole(sys.dim(*j)), img)};
            r.detail = "X(" + q.name(*j) + ") is not the sum of the images of X(" + q.name(a) + ") and X(" +
                       q.name(b) + ")";
            return r;
        }
    return r;
}

// Compatible families over `fam` at the bound u, and those coming from X(inf).
// Returns the first compatible family without a common preimage.
std::optional<std::vector<Vector>> gluing_failure(const IndSystem& sys, const std::vector<Element>& fam, Element inf,
                                                  Element u) {
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (Element a : fam) {
        off.push_back(n);
        n += sys.dim(a);
    }
    const std::size_t du = sys.dim(u);
    Matrix cons((fam.size() - 1) * du, n);
    for (std::size_t w = 1; w < fam.size(); ++w) {
        cons.set_block((w - 1) * du, off[0], sys.rho(fam[0], u));
        cons.set_block((w - 1) * du, off[w], -sys.rho(fam[w], u));
    }
    Subspace compat = Subspace::span(cons.kernel(), n);
    Matrix stacked(n, sys.dim(inf));
    for (std::size_t w = 0; w < fam.size(); ++w) stacked.set_block(off[w], 0, sys.rho(inf, fam[w]));
    Subspace img = Subspace::column_space(stacked);
    auto v = witness_outside(compat, img);
    if (!v) return std::nullopt;
    std::vector<Vector> parts;
    for (std::size_t w = 0; w < fam.size(); ++w)
        parts.emplace_back(v->begin() + static_cast<std::ptrdiff_t>(off[w]),
                           v->begin() + static_cast<std::ptrdiff_t>(off[w] + sys.dim(fam[w])));
    return parts;
}

ConditionReport check_III(const IndSystem& sys, const QuasiLattice& q) {
    ConditionReport r;
    r.condition = Condition::III;
    const auto& p = sys.index();
    for (Element a = 0; a < sys.size(); ++a)
        for (Element b = a + 1; b < sys.size(); ++b)
            for (Element u : p.upper_bounds({a, b})) {
                auto f = gluing_failure(sys, {a, b}, q.meet(a, b), u);
                if (!f) continue;
                r.pass = false;
                r.family = {a, b};
                r.bound = u;
                r.vectors = *f;
                r.detail = "compatible pair over " + p.name(u) + " has no preimage in X(" + p.name(q.meet(a, b)) + ")";
                return r;
            }
    return r;
}

}  // namespace

ConditionReport check_localizable(const IndSystem& sys, std::size_t family_cap) {
    QuasiLattice q = lattice::validate_quasilattice(sys.index());
    ConditionReport r;
    r.condition = Condition::IIIprime;
    const auto& p = sys.index();
    // every nonempty subset must have an infimum
    for (const auto& s : lattice::nonempty_subsets(p.all(), 2))
        if (!p.infimum(s)) throw lattice::LatticeError("infimum missing for {" + names(p, s) + "}");
    std::vector<Element> fam;
    std::function<bool(Element, Element)> rec = [&](Element start, Element inf) -> bool {
        for (Element j = start; j < p.size(); ++j) {
            Element next = fam.empty() ? j : q.meet(inf, j);
            fam.push_back(j);
            Subset ub = p.upper_bounds(fam);
            if (ub.empty()) {
                fam.pop_back();
                continue;
            }
            if (fam.size() >= 2) {
                // compatible families only grow with the bound, so maximal bounds suffice
                for (Element u : p.maximal(ub)) {
                    auto f = gluing_failure(sys, fam, next, u);
                    if (!f) continue;
                    r.pass = false;
                    r.family = fam;
                    r.bound = u;
                    r.vectors = *f;
                    r.detail = "compatible family over " + p.name(u) + " has no preimage in X(" + p.name(next) + ")";
                    return false;
                }
            }
            if (fam.size() < family_cap && !rec(j + 1, next)) return false;
            fam.pop_back();
        }
        return true;
    };
    rec(0, 0);
    return r;
}

std::vector<ConditionReport> check_conditions(const IndSystem& sys, const std::vector<Condition>& which,
                                              std::size_t family_cap) {
    QuasiLattice q = lattice::validate_quasilattice(sys.index());
    std::vector<ConditionReport> out;
    for (Condition c : which) {
        switch (c) {
            case Condition::I: out.push_back(check_I(sys)); break;
            case Condition::II: out.push_back(check_II(sys, q)); break;
            case Condition::III: out.push_back(check_III(sys, q)); break;
            case Condition::IIIprime: out.push_back(check_localizable(sys, family_cap)); break;
        }
    }
    return out;
}

bool replay(const IndSystem& sys, const ConditionReport& r) {
    if (r.pass) return false;
    const auto& p = sys.index();
    switch (r.condition) {
        case Condition::I: {
            if (r.family.size() != 2 || r.vectors.size() != 1) return false;
            return !is_zero(r.vectors[0]) && is_zero(sys.rho(r.family[0], r.family[1]) * r.vectors[0]);
        }
        case Condition::II: {
            if (r.family.size() != 2 || !r.bound || r.vectors.size() != 1) return false;
            Element j = *r.bound;
            if (!p.leq(r.family[0], j) || !p.leq(r.family[1], j)) return false;
            return !sys.rho(r.family[0], j).hstack(sys.rho(r.family[1], j)).solve(r.vectors[0]);
        }
        case Condition::III:
        case Condition::IIIprime: {
            if (!r.bound || r.vectors.size() != r.family.size() || r.family.empty()) return false;
            Element u = *r.bound;
            auto inf = p.infimum(r.family);
            if (!inf) return false;
            Vector first = sys.rho(r.family[0], u) * r.vectors[0];
            for (std::size_t w = 0; w < r.family.size(); ++w)
                if (!p.leq(r.family[w], u) || sys.rho(r.family[w], u) * r.vectors[w] != first) return false;
            Matrix stacked(0, sys.dim(*inf));
            Vector rhs;
            for (std::size_t w = 0; w < r.family.size(); ++w) {
                stacked = stacked.vstack(sys.rho(*inf, r.family[w]));
                rhs.insert(rhs.end(), r.vectors[w].begin(), r.vectors[w].end());
            }
            return !stacked.solve(rhs);
        }
    }
    return false;
}

std::string to_string(const IndSystem& sys, const ConditionReport& r) {
    std::ostringstream os;
    os << "condition " << to_string(r.condition) << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass) {
        const auto& p = sys.index();
        os << "\n  family: {" << names(p, r.family) << "}";
        if (r.bound) os << "\n  bound: " << p.name(*r.bound);
        for (std::size_t i = 0; i < r.vectors.size(); ++i) os << "\n  vector " << i + 1 << ": " << uf::to_string(r.vectors[i]);
        os << "\n  " << r.detail;
    }
    return os.str();
}

IndSystem pushforward(const IndSystem& sys, const lattice::LatticeMorphism& m) {
    if (!(m.source.poset() == sys.index()))
        throw PreconditionError("pushforward: morphism source is not the index of the system");
    auto hyp = lattice::check_t1_hypotheses(m);
    if (auto* f = hyp.first_failure())
        throw PreconditionError("pushforward: hypothesis not satisfied: " + f->name +
                                (f->detail.empty() ? "" : " (" + f->detail + ")"));
    const auto& B = m.target;
    std::vector<Colimit> cs;
    std::vector<std::size_t> dims;
    for (Element b = 0; b < B.size(); ++b) {
        Subset ab;
        for (Element a = 0; a < sys.size(); ++a)
            if (B.leq(m.map[a], b)) ab.push_back(a);
        cs.push_back(colimit(sys, ab));
        dims.push_back(cs.back().dim);
    }
    std::map<Pair, Matrix> maps;
    for (auto [b, b2] : B.poset().comparable_pairs()) maps.emplace(Pair{b, b2}, tau(cs[b], cs[b2], sys.total_dim()));
    IndSystem z(B.poset(), dims, maps);
    auto v = validate(z);
    if (!v.pass) throw std::logic_error("pushforward produced a non-functorial system: " + v.detail);
    return z;
}

namespace {

struct Generators {
    Matrix matrix;               // columns are sigma(e_j, a, b)
    std::vector<Pair> pairs;     // (a, b) for each column
};

Generators relation_generators(const IndSystem& sys, const Subset& s) {
    std::vector<Vector> cols;
    Generators g;
    for (Element a : s)
        for (Element b : s) {
            if (!sys.index().less(a, b)) continue;
            for (std::size_t j = 0; j < sys.dim(a); ++j) {
                cols.push_back(sys.sigma(unit(sys.dim(a), j), a, b));
                g.pairs.emplace_back(a, b);
            }
        }
    g.matrix = Matrix::from_columns(cols, sys.total_dim());
    return g;
}

}  // namespace

std::pair<Vector, Vector> split_over_union(const IndSystem& sys, const Subset& I1_in, const Subset& I2_in,
                                           const Vector& x) {
    Subset I1 = lattice::normalize(I1_in), I2 = lattice::normalize(I2_in);
    if (!hereditary(sys.index(), I1) || !hereditary(sys.index(), I2))
        throw PreconditionError("split_over_union: subsets must be hereditary");
    if (x.size() != sys.total_dim()) throw DimensionError("split_over_union: vector has the wrong dimension");
    auto g = relation_generators(sys, set_union(I1, I2));
    Vector x1(sys.total_dim()), x2(sys.total_dim());
    if (g.pairs.empty()) {
        if (!is_zero(x)) throw PreconditionError("split_over_union: x is not in the relation space of the union");
        return {x1, x2};
    }
    auto c = g.matrix.solve(x);
    if (!c) throw PreconditionError("split_over_union: x is not in the relation space of the union");
    for (std::size_t k = 0; k < g.pairs.size(); ++k) {
        if ((*c)[k] == 0) continue;
        bool first = std::binary_search(I1.begin(), I1.end(), g.pairs[k].second);
        Vector& target = first ? x1 : x2;
        for (std::size_t i = 0; i < target.size(); ++i) target[i] += (*c)[k] * g.matrix(i, k);
    }
    return {x1, x2};
}

Vector glue(const IndSystem& sys, const Subset& I1_in, const Subset& I2_in, const Subset& J_in, const Vector& x1,
            const Vector& x2) {
    Subset I1 = lattice::normalize(I1_in), I2 = lattice::normalize(I2_in), J = lattice::normalize(J_in);
    if (!hereditary(sys.index(), I1) || !hereditary(sys.index(), I2))
        throw PreconditionError("glue: subsets must be hereditary");
    if (!is_subset(I1, J) || !is_subset(I2, J)) throw PreconditionError("glue: subsets must lie in J");
    const std::size_t n = sys.total_dim();
    Colimit c1 = colimit(sys, I1), c2 = colimit(sys, I2), cj = colimit(sys, J);
    if (x1.size() != c1.dim || x2.size() != c2.dim) throw DimensionError("glue: vectors have the wrong dimension");
    if (tau(c1, cj, n) * x1 != tau(c2, cj, n) * x2) throw PreconditionError("glue: inputs are not compatible in J");
    Vector l1 = c1.lift(x1, n), l2 = c2.lift(x2, n);
    Vector d = sub(l1, l2);
    if (!all_pair_relations(sys, set_union(I1, I2)).contains(d))
        throw PreconditionError("glue: lifts differ outside the relation space of the union (system not prelocalizable)");
    auto [y1, y2] = split_over_union(sys, I1, I2, d);
    Vector xt = sub(l1, y1);
    Subset I12 = set_intersection(I1, I2);
    if (!coordinate_space(sys, I12).contains(xt)) throw std::logic_error("glue: lift escaped M_{I1 n I2}");
    return colimit(sys, I12).quotient(xt);
}

IntersectionReport hereditary_intersection_check(const IndSystem& sys, const Subset& I_in) {
    IntersectionReport r;
    Subset I = lattice::normalize(I_in);
    try {
        QuasiLattice q = lattice::validate_quasilattice(sys.index());
        if (!lattice::is_distributive(q, 0).distributive) {
            r.preconditions = false;
            r.detail = "index is not distributive";
        }
        if (r.preconditions)
            for (const auto& c : check_conditions(sys, {Condition::I, Condition::II, Condition::III}))
                if (!c.pass) {
                    r.preconditions = false;
                    r.detail = "condition " + to_string(c.condition) + " fails";
                    break;
                }
    } catch (const lattice::LatticeError& e) {
        r.preconditions = false;
        r.detail = e.what();
    }
    if (r.preconditions && !hereditary(sys.index(), I)) {
        r.preconditions = false;
        r.detail = "subset is not hereditary";
    }
    if (!r.preconditions) {
        r.pass = false;
        return r;
    }
    Subspace lhs = all_pair_relations(sys, sys.index().all()).intersection(coordinate_space(sys, I));
    Subspace rhs = all_pair_relations(sys, I);
    if (!(lhs == rhs)) {
        r.pass = false;
        r.offending = witness_outside(lhs, rhs);
        if (!r.offending) r.offending = witness_outside(rhs, lhs);
        r.detail = "N_A n M_I differs from N_I";
    }
    return r;
}

Presentation quotient_presentation(const IndSystem& sys, const std::vector<Element>& lambda) {
    const auto& p = sys.index();
    if (lambda.empty()) throw PreconditionError("quotient_presentation: empty index family");
    for (Element a : lambda)
        if (a >= sys.size()) throw PreconditionError("quotient_presentation: family refers to a missing element");
    for (Element a = 0; a < sys.size(); ++a)
        for (Element b = a + 1; b < sys.size(); ++b)
            if (!p.infimum({a, b}))
                throw PreconditionError("quotient_presentation: index is not a lower semilattice ({" + p.name(a) +
                                        ", " + p.name(b) + "} has no infimum)");
    for (Element a = 0; a < sys.size(); ++a)
        if (std::none_of(lambda.begin(), lambda.end(), [&](Element t) { return p.leq(a, t); }))
            throw PreconditionError("quotient_presentation: family is not cofinal (" + p.name(a) + " not majorized)");

    Presentation pr;
    pr.lambda = lambda;
    const std::size_t T = lambda.size();
    std::vector<std::size_t> off(T);
    for (std::size_t t = 0; t < T; ++t) {
        off[t] = pr.ambient_dim;
        pr.ambient_dim += sys.dim(lambda[t]);
    }
    const std::size_t n = pr.ambient_dim;
    auto meet = [&](std::size_t t, std::size_t s) { return *p.infimum({lambda[t], lambda[s]}); };

    // generators over ordered pairs
    std::vector<Vector> gens;
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t s = 0; s < T; ++s) {
            if (t == s) continue;
            Element m = meet(t, s);
            for (std::size_t j = 0; j < sys.dim(m); ++j) {
                Vector e = unit(sys.dim(m), j);
                Vector g(n);
                Vector a = sys.rho(m, lambda[t]) * e, b = sys.rho(m, lambda[s]) * e;
                for (std::size_t i = 0; i < a.size(); ++i) g[off[t] + i] += a[i];
                for (std::size_t i = 0; i < b.size(); ++i) g[off[s] + i] -= b[i];
                gens.push_back(std::move(g));
            }
        }
    pr.relations = Subspace::span(gens, n);

    // l: j_t -> iota_{lambda(t)}
    Matrix l(sys.total_dim(), n);
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t i = 0; i < sys.dim(lambda[t]); ++i) l(sys.offset(lambda[t]) + i, off[t] + i) = 1;
    Colimit full = colimit(sys);
    std::vector<bool> pivot(n, false);
    for (auto q : pr.relations.pivots()) pivot[q] = true;
    std::vector<Vector> cols;
    for (std::size_t f = 0; f < n; ++f)
        if (!pivot[f]) cols.push_back(full.quotient(l * unit(n, f)));
    pr.quotient_dim = cols.size();
    pr.iso = Matrix::from_columns(cols, full.dim);
    bool kills = std::all_of(pr.relations.basis().begin(), pr.relations.basis().end(),
                             [&](const Vector& v) { return is_zero(full.quotient(l * v)); });
    pr.invertible = kills && pr.iso.rows() == pr.iso.cols() && pr.iso.determinant() != 0;

    // antisymmetric description: parameters x_ts for every ordered pair, constrained by x_ts = -x_st
    {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        std::vector<std::size_t> poff;
        std::size_t np = 0;
        for (std::size_t t = 0; t < T; ++t)
            for (std::size_t s = 0; s < T; ++s) {
                slots.emplace_back(t, s);
                poff.push_back(np);
                np += sys.dim(meet(t, s));
            }
        std::vector<Vector> rows;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            auto [t, s] = slots[k];
            if (s < t) continue;
            std::size_t k2 = s * T + t;
            for (std::size_t j = 0; j < sys.dim(meet(t, s)); ++j) {
                Vector r(np);
                r[poff[k] + j] += 1;
                r[poff[k2] + j] += 1;
                rows.push_back(std::move(r));
            }
        }
        Matrix phi(n, np);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            auto [t, s] = slots[k];
            phi.set_block(off[t], poff[k], sys.rho(meet(t, s), lambda[t]));
        }
        auto params = rows.empty() ? Matrix::identity(np).kernel() : Matrix::from_rows(rows, np).kernel();
        std::vector<Vector> images;
        for (const auto& v : params) images.push_back(phi * v);
        pr.antisymmetric_agrees = Subspace::span(images, n) == pr.relations;
    }

    // ambient = relations + E, l' l = id on E, l(relations) = N_A n M_I
    {
        Subset I = lattice::normalize(lambda);
        std::map<Element, std::size_t> chosen;
        for (std::size_t t = 0; t < T; ++t) chosen.emplace(lambda[t], t);
        std::vector<Vector> e_basis;
        for (auto [a, t] : chosen)
            for (std::size_t i = 0; i < sys.dim(a); ++i) e_basis.push_back(unit(n, off[t] + i));
        Subspace E = Subspace::span(e_basis, n);
        Matrix lp(n, sys.total_dim());
        for (auto [a, t] : chosen)
            for (std::size_t i = 0; i < sys.dim(a); ++i) lp(off[t] + i, sys.offset(a) + i) = 1;
        bool sum_ok = pr.relations.sum(E) == Subspace::whole(n);
        bool inverse_ok = std::all_of(e_basis.begin(), e_basis.end(), [&](const Vector& v) { return lp * (l * v) == v; });
        std::vector<Vector> tilde;
        for (Element a : I)
            for (Element b : I) {
                Element m = *p.infimum({a, b});
                for (std::size_t j = 0; j < sys.dim(m); ++j) {
                    Vector e = unit(sys.dim(m), j);
                    tilde.push_back(sub(sys.embed(a, sys.rho(m, a) * e), sys.embed(b, sys.rho(m, b) * e)));
                }
            }
        Subspace Nt = Subspace::span(tilde, sys.total_dim());
        std::vector<Vector> lN;
        for (const auto& v : pr.relations.basis()) lN.push_back(l * v);
        bool image_ok = Subspace::span(lN, sys.total_dim()) == Nt;
        bool inter_ok = full.relations.intersection(coordinate_space(sys, I)) == Nt;
        pr.decomposition_holds = sum_ok && inverse_ok && image_ok && inter_ok;
    }
    return pr;
}

namespace {

struct CechLayout {
    std::vector<std::size_t> goff;
    std::size_t gtotal = 0;
    std::map<Pair, std::size_t> voff;
    std::size_t vtotal = 0;
};

CechLayout layout(const CechData& d) {
    CechLayout L;
    for (std::size_t g : d.gamma_dims) {
        L.goff.push_back(L.gtotal);
        L.gtotal += g;
    }
    const std::size_t n = d.gamma_dims.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto it = d.v_dims.find({i, j});
            std::size_t dv = it == d.v_dims.end() ? 0 : it->second;
            L.voff[{i, j}] = L.vtotal;
            L.vtotal += dv;
            const Matrix* a = d.to_first.count({i, j}) ? &d.to_first.at({i, j}) : nullptr;
            const Matrix* b = d.to_second.count({i, j}) ? &d.to_second.at({i, j}) : nullptr;
            if (dv > 0 && (!a || !b)) throw DimensionError("cech: missing restriction map");
            if (a && (a->rows() != d.gamma_dims[i] || a->cols() != dv)) throw DimensionError("cech: shape mismatch");
            if (b && (b->rows() != d.gamma_dims[j] || b->cols() != dv)) throw DimensionError("cech: shape mismatch");
        }
    return L;
}

int alt(std::size_t one_based) { return one_based % 2 == 0 ? 1 : -1; }

}  // namespace

Matrix cech_delta(const CechData& d) {
    auto L = layout(d);
    Matrix m(L.gtotal, L.vtotal);
    for (const auto& [ij, vo] : L.voff) {
        auto [i, j] = ij;
        if (!d.to_first.count(ij)) continue;
        // (delta v)_j gets (-1)^i v_ij, (delta v)_i gets (-1)^(j+1) v_ij, 1-based
        m.set_block(L.goff[j], vo, d.to_second.at(ij).scaled(alt(i + 1)));
        m.set_block(L.goff[i], vo, d.to_first.at(ij).scaled(alt(j + 2)));
    }
    return m;
}

Matrix cech_relations(const CechData& d) {
    auto L = layout(d);
    Matrix m(L.gtotal, L.vtotal);
    for (const auto& [ij, vo] : L.voff) {
        if (!d.to_first.count(ij)) continue;
        m.set_block(L.goff[ij.first], vo, d.to_first.at(ij));
        m.set_block(L.goff[ij.second], vo, -d.to_second.at(ij));
    }
    return m;
}

Matrix cech_tau(const CechData& d) {
    auto L = layout(d);
    Matrix m(L.gtotal, L.gtotal);
    for (std::size_t i = 0; i < d.gamma_dims.size(); ++i)
        for (std::size_t k = 0; k < d.gamma_dims[i]; ++k) m(L.goff[i] + k, L.goff[i] + k) = alt(i + 1);
    return m;
}

CechReport cech_sign_equivalence(const CechData& d) {
    CechReport r;
    Subspace im = Subspace::column_space(cech_delta(d));
    Subspace tn = Subspace::column_space(cech_tau(d) * cech_relations(d));
    r.image_dim = im.dim();
    r.pass = im == tn;
    if (!r.pass) r.detail = "image of delta differs from tau(N)";
    return r;
}

IndSystem random_prelocalizable(const QuasiLattice& q, std::size_t max_dim, std::uint64_t seed) {
    if (!lattice::is_distributive(q, 0).distributive)
        throw lattice::LatticeError("random_prelocalizable: index is not distributive");
    std::mt19937_64 rng(seed);
    const std::size_t n = q.size();
    const auto& p = q.poset();
    std::vector<Element> labels;
    for (Element a = 0; a < n; ++a) {
        bool reducible = false;
        for (Element b = 0; b < n && !reducible; ++b)
            for (Element c = 0; c < n && !reducible; ++c)
                if (p.less(b, a) && p.less(c, a) && q.join(b, c) == a) reducible = true;
        if (!reducible) labels.push_back(a);
    }
    std::vector<Subset> J(n);
    for (Element a = 0; a < n; ++a)
        for (Element l : labels)
            if (p.leq(l, a)) J[a].push_back(l);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (a != b && J[a] == J[b]) throw lattice::LatticeError("random_prelocalizable: label map not injective");
            if (auto j = q.join(a, b); j && J[*j] != set_union(J[a], J[b]))
                throw lattice::LatticeError("random_prelocalizable: labels do not turn joins into unions");
        }
    std::uniform_int_distribution<std::size_t> mult(0, max_dim);
    std::map<Element, std::size_t> m;
    for (Element l : labels) m[l] = mult(rng);
    auto dim_of = [&](Element a) {
        std::size_t d = 0;
        for (Element l : J[a]) d += m[l];
        return d;
    };
    for (Element a = 0; a < n; ++a)
        while (dim_of(a) > max_dim) {
            std::vector<Element> nz;
            for (Element l : J[a])
                if (m[l] > 0) nz.push_back(l);
            m[nz[std::uniform_int_distribution<std::size_t>(0, nz.size() - 1)(rng)]]--;
        }
    // global coordinates: label-major
    std::vector<std::vector<std::size_t>> coords(n);
    std::size_t g = 0;
    for (Element l : labels)
        for (std::size_t c = 0; c < m[l]; ++c, ++g)
            for (Element a = 0; a < n; ++a)
                if (p.leq(l, a)) coords[a].push_back(g);
    std::vector<std::size_t> dims(n);
    for (Element a = 0; a < n; ++a) dims[a] = coords[a].size();
    std::map<Pair, Matrix> maps;
    for (auto [a, b] : p.comparable_pairs()) {
        Matrix r(dims[b], dims[a]);
        for (std::size_t i = 0; i < dims[a]; ++i) {
            auto pos = std::find(coords[b].begin(), coords[b].end(), coords[a][i]) - coords[b].begin();
            r(static_cast<std::size_t>(pos), i) = 1;
        }
        maps.emplace(Pair{a, b}, std::move(r));
    }
    return change_basis(p, dims, maps, rng);
}

IndSystem random_system(const FinitePoset& p, std::size_t max_dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = p.size();
    auto comparable = p.comparable_pairs();
    std::size_t count = std::uniform_int_distribution<std::size_t>(1, 2 * n)(rng);
    std::vector<Pair> supports;
    for (std::size_t k = 0; k < count; ++k)
        supports.push_back(comparable[std::uniform_int_distribution<std::size_t>(0, comparable.size() - 1)(rng)]);
    auto in = [&](const Pair& s, Element a) { return p.leq(s.first, a) && p.leq(a, s.second); };
    for (;;) {
        bool over = false;
        for (Element a = 0; a < n && !over; ++a) {
            std::size_t d = 0;
            for (const auto& s : supports) d += in(s, a);
            if (d > max_dim) {
                over = true;
                for (std::size_t k = 0; k < supports.size(); ++k)
                    if (in(supports[k], a)) {
                        supports.erase(supports.begin() + static_cast<std::ptrdiff_t>(k));
                        break;
                    }
            }
        }
        if (!over) break;
    }
    std::vector<std::vector<std::size_t>> labels(n);
    for (std::size_t k = 0; k < supports.size(); ++k)
        for (Element a = 0; a < n; ++a)
            if (in(supports[k], a)) labels[a].push_back(k);
    std::vector<std::size_t> dims(n);
    for (Element a = 0; a < n; ++a) dims[a] = labels[a].size();
    std::map<Pair, Matrix> maps;
    for (auto [a, b] : comparable) {
        Matrix r(dims[b], dims[a]);
        for (std::size_t i = 0; i < dims[a]; ++i) {
            auto it = std::find(labels[b].begin(), labels[b].end(), labels[a][i]);
            if (it != labels[b].end()) r(static_cast<std::size_t>(it - labels[b].begin()), i) = 1;
        }
        maps.emplace(Pair{a, b}, std::move(r));
    }
    return change_basis(p, dims, maps, rng);
}

std::pair<Matrix, bool> join_cover_isomorphism(const IndSystem& sys, const Subset& I, Element top) {
    for (Element a : I)
        if (!sys.index().leq(a, top)) throw PreconditionError("join_cover_isomorphism: element not below the top");
    Colimit c = colimit(sys, I);
    std::vector<Vector> cols;
    for (std::size_t f : c.free_cols) {
        Element owner = 0;
        for (Element a = 0; a < sys.size(); ++a)
            if (f >= sys.offset(a) && f < sys.offset(a) + sys.dim(a)) owner = a;
        cols.push_back(sys.rho(owner, top) * unit(sys.dim(owner), f - sys.offset(owner)));
    }
    Matrix m = Matrix::from_columns(cols, sys.dim(top));
    bool inv = m.rows() == m.cols() && m.determinant() != 0;
    return {m, inv};
}

}  // namespace uf::ind
