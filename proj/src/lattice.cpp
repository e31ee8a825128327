#include "ultrafun/lattice.hpp"

#include "ultrafun/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace uf::lattice {

Subset normalize(Subset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
    const std::size_t n = names_.size();
    if (n > kMaxPosetSize) throw LatticeError("poset exceeds the element cap of 64");
    if (leq_.size() != n) throw LatticeError("poset relation has the wrong size");
    for (const auto& row : leq_)
        if (row.size() != n) throw LatticeError("poset relation has the wrong size");
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq_[a][a]) throw LatticeError("relation is not reflexive at " + names_[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq_[a][b] && leq_[b][a])
                throw LatticeError("relation is not antisymmetric on " + names_[a] + ", " + names_[b]);
            for (std::size_t c = 0; c < n; ++c)
                if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
                    throw LatticeError("relation is not transitive on " + names_[a] + ", " + names_[b] + ", " +
                                       names_[c]);
        }
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw LatticeError("duplicate element name");
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names,
                                    const std::vector<std::pair<Element, Element>>& pairs) {
    const std::size_t n = names.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) r[a][a] = true;
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw LatticeError("order pair refers to a missing element");
        r[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (r[a][k])
                for (std::size_t b = 0; b < n; ++b)
                    if (r[k][b]) r[a][b] = true;
    return FinitePoset(std::move(names), std::move(r));
}

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("c" + std::to_string(a));
        for (std::size_t b = a; b < n; ++b) r[a][b] = true;
    }
    return FinitePoset(std::move(names), std::move(r));
}

std::optional<Element> FinitePoset::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Subset FinitePoset::all() const {
    Subset s(size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
    return s;
}

Subset FinitePoset::lower_bounds(const Subset& s) const {
    Subset out;
    for (Element x = 0; x < size(); ++x)
        if (std::all_of(s.begin(), s.end(), [&](Element a) { return leq_[x][a]; })) out.push_back(x);
    return out;
}

Subset FinitePoset::upper_bounds(const Subset& s) const {
    Subset out;
    for (Element x = 0; x < size(); ++x)
        if (std::all_of(s.begin(), s.end(), [&](Element a) { return leq_[a][x]; })) out.push_back(x);
    return out;
}

std::optional<Element> FinitePoset::greatest(const Subset& s) const {
    for (Element x : s)
        if (std::all_of(s.begin(), s.end(), [&](Element a) { return leq_[a][x]; })) return x;
    return std::nullopt;
}

std::optional<Element> FinitePoset::least(const Subset& s) const {
    for (Element x : s)
        if (std::all_of(s.begin(), s.end(), [&](Element a) { return leq_[x][a]; })) return x;
    return std::nullopt;
}

Subset FinitePoset::maximal(const Subset& s) const {
    Subset out;
    for (Element x : s)
        if (std::none_of(s.begin(), s.end(), [&](Element a) { return less(x, a); })) out.push_back(x);
    return out;
}

std::optional<Element> FinitePoset::infimum(const Subset& s) const { return greatest(lower_bounds(s)); }
std::optional<Element> FinitePoset::supremum(const Subset& s) const { return least(upper_bounds(s)); }

std::vector<std::pair<Element, Element>> FinitePoset::covering_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < size(); ++a)
        for (Element b = 0; b < size(); ++b) {
            if (!less(a, b)) continue;
            bool between = false;
            for (Element c = 0; c < size() && !between; ++c) between = less(a, c) && less(c, b);
            if (!between) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<Element, Element>> FinitePoset::comparable_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < size(); ++a)
        for (Element b = 0; b < size(); ++b)
            if (leq_[a][b]) out.emplace_back(a, b);
    return out;
}

bool QuasiLattice::is_lattice() const {
    for (const auto& row : join_)
        for (const auto& j : row)
            if (!j) return false;
    return true;
}

QuasiLattice validate_quasilattice(const FinitePoset& p) {
    QuasiLattice q;
    q.poset_ = p;
    const std::size_t n = p.size();
    q.meet_.assign(n, std::vector<Element>(n, 0));
    q.join_.assign(n, std::vector<std::optional<Element>>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b) {
            auto m = p.infimum({a, b});
            if (!m) throw LatticeError("pair without infimum: {" + p.name(a) + ", " + p.name(b) + "}");
            q.meet_[a][b] = q.meet_[b][a] = *m;
            if (p.bounded_above({a, b})) {
                auto j = p.supremum({a, b});
                if (!j) throw LatticeError("bounded pair without supremum: {" + p.name(a) + ", " + p.name(b) + "}");
                q.join_[a][b] = q.join_[b][a] = *j;
            }
        }
    return q;
}

bool Report::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

const ReportEntry* Report::first_failure() const {
    for (const auto& e : entries)
        if (!e.pass) return &e;
    return nullptr;
}

std::string Report::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "PASS " : "FAIL ") << e.name;
        if (!e.detail.empty()) os << ": " << e.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<Subset> nonempty_subsets(const Subset& universe, std::size_t max_size) {
    std::vector<Subset> out;
    Subset cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == max_size) return;
        for (std::size_t j = i; j < universe.size(); ++j) {
            cur.push_back(universe[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

DistributivityReport is_distributive(const QuasiLattice& q, std::size_t family_cap) {
    DistributivityReport r;
    const std::size_t n = q.size();
    for (Element a = 0; a < n && r.distributive; ++a)
        for (Element b = 0; b < n && r.distributive; ++b)
            for (Element c = b; c < n && r.distributive; ++c) {
                auto bc = q.join(b, c);
                if (!bc) continue;
                auto rhs = q.join(q.meet(a, b), q.meet(a, c));
                if (!rhs || q.meet(a, *bc) != *rhs) {
                    r.distributive = false;
                    r.counterexample = std::vector<Element>{a, b, c};
                }
            }
    if (!q.is_lattice()) return r;
    // every nonempty subset must have an infimum; in a finite lattice it always does
    r.infinitely_distributive = true;
    r.families_exhaustive = family_cap >= n;
    // depth-first over families, carrying inf F and inf (a v F)
    Subset fam;
    std::function<bool(Element, std::size_t, Element, Element)> rec = [&](Element a, std::size_t start, Element inf_f,
                                                                          Element inf_join) {
        for (std::size_t j = start; j < n; ++j) {
            Element f = inf_f, g = inf_join;
            if (fam.empty()) {
                f = j;
                g = *q.join(a, j);
            } else {
                f = q.meet(inf_f, j);
                g = q.meet(inf_join, *q.join(a, j));
            }
            fam.push_back(j);
            if (*q.join(a, f) != g) {
                r.infinitely_distributive = false;
                r.family_counterexample = std::make_pair(a, fam);
                return false;
            }
            if (fam.size() < family_cap && !rec(a, j + 1, f, g)) return false;
            fam.pop_back();
        }
        return true;
    };
    for (Element a = 0; a < n; ++a)
        if (!rec(a, 0, 0, 0)) break;
    return r;
}

namespace {

std::string pair_name(const QuasiLattice& q, Element a, Element b) {
    return "(" + q.name(a) + ", " + q.name(b) + ")";
}

void morphism_entries(const LatticeMorphism& m, Report& rep) {
    const auto& A = m.source;
    const auto& B = m.target;
    if (m.map.size() != A.size()) throw LatticeError("morphism table has the wrong size");
    for (Element x : m.map)
        if (x >= B.size()) throw LatticeError("morphism maps outside the target");
    ReportEntry mono{"nondecreasing", true, ""}, meets{"preserves meets", true, ""},
        joins{"preserves bounded joins", true, ""}, inj{"injective", true, ""};
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            Element la = m.map[a], lb = m.map[b];
            if (mono.pass && A.leq(a, b) && !B.leq(la, lb)) {
                mono.pass = false;
                mono.detail = pair_name(A, a, b);
            }
            if (meets.pass && m.map[A.meet(a, b)] != B.meet(la, lb)) {
                meets.pass = false;
                meets.detail = pair_name(A, a, b);
            }
            if (joins.pass) {
                if (auto j = A.join(a, b)) {
                    auto lj = B.join(la, lb);
                    if (!lj || *lj != m.map[*j]) {
                        joins.pass = false;
                        joins.detail = pair_name(A, a, b);
                    }
                }
            }
            if (inj.pass && a < b && la == lb) {
                inj.pass = false;
                inj.detail = pair_name(A, a, b) + " both map to " + B.name(la);
            }
        }
    rep.entries.push_back(mono);
    rep.entries.push_back(meets);
    rep.entries.push_back(joins);
    rep.entries.push_back(inj);
}

}  // namespace

Report check_morphism(const LatticeMorphism& m) {
    Report rep;
    morphism_entries(m, rep);
    return rep;
}

Report check_t1_hypotheses(const LatticeMorphism& m) {
    Report rep;
    morphism_entries(m, rep);
    auto da = is_distributive(m.source, 0);
    rep.entries.push_back({"source distributive", da.distributive,
                           da.counterexample ? "triple (" + m.source.name((*da.counterexample)[0]) + ", " +
                                                   m.source.name((*da.counterexample)[1]) + ", " +
                                                   m.source.name((*da.counterexample)[2]) + ")"
                                             : ""});
    rep.entries.push_back({"target is a lattice", m.target.is_lattice(), ""});
    auto db = is_distributive(m.target, 0);
    rep.entries.push_back({"target distributive", db.distributive, ""});
    // beta is a finite join of images iff it is the join of all images below it
    ReportEntry gen{"join generation", true, ""};
    const auto& B = m.target;
    for (Element b = 0; b < B.size() && gen.pass; ++b) {
        std::optional<Element> acc;
        for (Element a : m.map)
            if (B.leq(a, b)) acc = acc ? B.join(*acc, a) : std::optional<Element>(a);
        if (!acc || *acc != b) {
            gen.pass = false;
            gen.detail = B.name(b) + " is not a join of images";
        }
    }
    rep.entries.push_back(gen);
    return rep;
}

Report check_order_reflection(const LatticeMorphism& m, std::size_t family_cap) {
    Report rep;
    const auto& A = m.source;
    const auto& B = m.target;
    ReportEntry refl{"order reflection", true, ""};
    for (Element a = 0; a < A.size() && refl.pass; ++a)
        for (Element b = 0; b < A.size() && refl.pass; ++b)
            if (B.leq(m.map[a], m.map[b]) && !A.leq(a, b)) {
                refl.pass = false;
                refl.detail = pair_name(A, a, b);
            }
    rep.entries.push_back(refl);
    ReportEntry infs{"infima preserved", true, ""};
    for (const auto& s : nonempty_subsets(A.poset().all(), family_cap)) {
        auto ia = A.poset().infimum(s);
        if (!ia) continue;
        Subset img;
        for (Element a : s) img.push_back(m.map[a]);
        auto ib = B.poset().infimum(normalize(img));
        if (!ib || *ib != m.map[*ia]) {
            infs.pass = false;
            std::string names;
            for (Element a : s) names += (names.empty() ? "" : ", ") + A.name(a);
            infs.detail = "{" + names + "}";
            break;
        }
    }
    rep.entries.push_back(infs);
    return rep;
}

Subset hereditary_closure(const QuasiLattice& q, const Subset& s) {
    Subset out;
    for (Element x = 0; x < q.size(); ++x)
        if (std::any_of(s.begin(), s.end(), [&](Element a) { return q.leq(x, a); })) out.push_back(x);
    return out;
}

bool is_hereditary(const QuasiLattice& q, const Subset& s) { return hereditary_closure(q, s) == normalize(s); }

Subset wedge_closure(const QuasiLattice& q, const Subset& s) {
    Subset out = normalize(s);
    bool grew = true;
    while (grew) {
        grew = false;
        Subset next = out;
        for (Element a : out)
            for (Element b : out) next.push_back(q.meet(a, b));
        next = normalize(next);
        if (next.size() != out.size()) {
            grew = true;
            out = std::move(next);
        }
    }
    return out;
}

namespace {

cone::SectorSet as_sector(const cone::AnyCone& c) {
    if (auto* s = std::get_if<cone::SectorSet>(&c)) return *s;
    return cone::SectorSet::from_convex(std::get<cone::ConvexCone>(c));
}

std::optional<std::size_t> index_of(const std::vector<cone::SectorSet>& xs, const cone::SectorSet& s) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == s) return i;
    return std::nullopt;
}

QuasiLattice inclusion_lattice(const std::vector<cone::SectorSet>& cones, const std::string& prefix) {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> r(cones.size(), std::vector<bool>(cones.size()));
    for (std::size_t i = 0; i < cones.size(); ++i) {
        names.push_back(prefix + std::to_string(i));
        for (std::size_t j = 0; j < cones.size(); ++j) r[i][j] = cone::leq(cones[i], cones[j]);
    }
    return validate_quasilattice(FinitePoset(std::move(names), std::move(r)));
}

}  // namespace

ConeLattice cone_lattice_from_family(const std::vector<cone::AnyCone>& cones) {
    if (cones.empty()) throw LatticeError("cone family is empty");
    const std::size_t k = cone::dim_of(cones.front());
    std::vector<cone::SectorSet> a{cone::SectorSet::origin(k)};
    for (const auto& c : cones) {
        if (cone::dim_of(c) != k) throw DimensionError("cone family: mixed dimensions");
        auto s = as_sector(c);
        if (!cone::is_proper(s)) throw PreconditionError("cone family: input cone is not proper: " + s.to_string());
        if (!index_of(a, s)) a.push_back(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto m = cone::meet(a[i], a[j]);
                if (!index_of(a, m)) {
                    a.push_back(m);
                    grew = true;
                }
                auto u = cone::join(a[i], a[j]);
                bool bounded = std::any_of(a.begin(), a.end(), [&](const auto& c) { return cone::leq(u, c); });
                if (bounded && !index_of(a, u)) {
                    a.push_back(u);
                    grew = true;
                }
            }
        if (a.size() > kMaxPosetSize) throw LatticeError("cone lattice exceeds the element cap");
    }
    std::vector<cone::SectorSet> b = a;
    grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = b.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto u = cone::join(b[i], b[j]);
                if (!index_of(b, u)) {
                    b.push_back(u);
                    grew = true;
                }
            }
        if (b.size() > kMaxPosetSize) throw LatticeError("cone lattice exceeds the element cap");
    }
    ConeLattice out;
    out.a_cones = a;
    out.b_cones = b;
    out.A = inclusion_lattice(a, "a");
    out.B = inclusion_lattice(b, "b");
    out.lambda.source = out.A;
    out.lambda.target = out.B;
    for (std::size_t i = 0; i < a.size(); ++i) out.lambda.map.push_back(i);
    return out;
}

}  // namespace uf::lattice
