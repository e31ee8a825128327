#include "ultrafun/selftest.hpp"

#include "ultrafun/cover.hpp"
#include "ultrafun/errors.hpp"
#include "ultrafun/hyper1d.hpp"
#include "ultrafun/inductive.hpp"
#include "ultrafun/weight.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace uf::selftest {

using lattice::Element;
using lattice::FinitePoset;
using lattice::QuasiLattice;
using lattice::Subset;

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar rand_scalar(Rng& rng, int lo, int hi, int max_den = 4) {
    return Scalar(rand_int(rng, lo, hi)) / rand_int(rng, 1, max_den);
}

Scalar rand_positive(Rng& rng, int hi = 3, int max_den = 4) { return Scalar(rand_int(rng, 1, hi)) / rand_int(rng, 1, max_den); }

Vector rand_vector(Rng& rng, std::size_t k, int r = 3) {
    for (;;) {
        Vector v(k);
        for (auto& x : v) x = rand_int(rng, -r, r);
        if (!is_zero(v)) return v;
    }
}

Matrix rand_matrix(Rng& rng, std::size_t rows, std::size_t cols, int r = 2) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_int(rng, -r, r);
    return m;
}

std::vector<double> to_doubles(const Vector& v) {
    std::vector<double> d;
    for (const auto& x : v) d.push_back(to_double(x));
    return d;
}

struct Failure {
    std::string what;
};

// the message is only built on failure
#define require(cond, what) \
    do {                     \
        if (!(cond)) throw Failure{what}; \
    } while (0)

// ---------- indices ----------

std::string mask_name(unsigned m) {
    std::string s = "{";
    for (unsigned b = 0; b < 8; ++b)
        if (m >> b & 1u) s += static_cast<char>('a' + b);
    return s + "}";
}

FinitePoset inclusion_poset(const std::vector<unsigned>& masks) {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> r(masks.size(), std::vector<bool>(masks.size()));
    for (std::size_t i = 0; i < masks.size(); ++i) {
        names.push_back(mask_name(masks[i]));
        for (std::size_t j = 0; j < masks.size(); ++j) r[i][j] = (masks[i] & masks[j]) == masks[i];
    }
    return FinitePoset(names, r);
}

struct IndexInstance {
    QuasiLattice A;
    QuasiLattice B;
    lattice::LatticeMorphism lambda;
    std::string origin;
};

// Rings of subsets of a 3-element set: A closed under intersections and bounded unions, B all unions.
IndexInstance abstract_index(Rng& rng, std::size_t max_a) {
    for (;;) {
        std::set<unsigned> a{0};
        int n = rand_int(rng, 1, 3);
        for (int i = 0; i < n; ++i) a.insert(static_cast<unsigned>(rand_int(rng, 1, 7)));
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<unsigned> cur(a.begin(), a.end());
            for (unsigned x : cur)
                for (unsigned y : cur) {
                    if (a.insert(x & y).second) grew = true;
                    bool bounded = std::any_of(cur.begin(), cur.end(), [&](unsigned z) { return ((x | y) & ~z) == 0; });
                    if (bounded && a.insert(x | y).second) grew = true;
                }
        }
        if (a.size() > max_a) continue;
        std::set<unsigned> b(a.begin(), a.end());
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<unsigned> cur(b.begin(), b.end());
            for (unsigned x : cur)
                for (unsigned y : cur)
                    if (b.insert(x | y).second) grew = true;
        }
        std::vector<unsigned> av(a.begin(), a.end()), bv(b.begin(), b.end());
        IndexInstance out;
        out.A = lattice::validate_quasilattice(inclusion_poset(av));
        out.B = lattice::validate_quasilattice(inclusion_poset(bv));
        std::vector<Element> map;
        for (unsigned m : av) map.push_back(static_cast<Element>(std::find(bv.begin(), bv.end(), m) - bv.begin()));
        out.lambda = {out.A, out.B, map};
        std::string fam;
        for (unsigned m : av) fam += mask_name(m);
        out.origin = "ring of sets " + fam;
        return out;
    }
}

const std::vector<Vector>& directions() {
    static const std::vector<Vector> d = [] {
        std::vector<Vector> out;
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y)
                if (x || y) out.push_back(normalized_direction({Scalar(x), Scalar(y)}));
        std::sort(out.begin(), out.end(), cone::angle_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }();
    return d;
}

cone::SectorSet random_proper_sector(Rng& rng) {
    const auto& d = directions();
    for (;;) {
        const Vector& from = d[rand_int(rng, 0, static_cast<int>(d.size()) - 1)];
        const Vector& to = d[rand_int(rng, 0, static_cast<int>(d.size()) - 1)];
        if (from == to || cone::cross(from, to) > 0) return cone::SectorSet::sector(from, to);
    }
}

cone::SectorSet random_sector_set(Rng& rng) {
    const auto& d = directions();
    std::vector<cone::Arc> arcs;
    int n = rand_int(rng, 1, 2);
    for (int i = 0; i < n; ++i)
        arcs.push_back({d[rand_int(rng, 0, static_cast<int>(d.size()) - 1)], d[rand_int(rng, 0, static_cast<int>(d.size()) - 1)]});
    return cone::SectorSet::from_arcs(arcs);
}

IndexInstance cone_index(Rng& rng, std::size_t max_a, std::size_t max_b) {
    for (;;) {
        std::vector<cone::AnyCone> fam;
        std::string desc;
        if (rand_int(rng, 0, 3) == 0) {
            bool pos = rand_int(rng, 0, 1), neg = rand_int(rng, 0, 1);
            if (pos) fam.push_back(cone::SectorSet::half_lines(true, false));
            if (neg) fam.push_back(cone::SectorSet::half_lines(false, true));
            if (fam.empty()) fam.push_back(cone::SectorSet::origin(1));
        } else {
            int n = rand_int(rng, 1, 3);
            for (int i = 0; i < n; ++i) fam.push_back(random_proper_sector(rng));
        }
        for (const auto& c : fam) desc += (desc.empty() ? "" : ", ") + std::get<cone::SectorSet>(c).to_string();
        auto cl = lattice::cone_lattice_from_family(fam);
        if (cl.A.size() > max_a || cl.B.size() > max_b) continue;
        return {cl.A, cl.B, cl.lambda, "cones " + desc};
    }
}

// ---------- float oracle for distances ----------

bool solve_small(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-12) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

}  // namespace

double float_distance(const std::vector<std::vector<double>>& gens, const std::vector<double>& x) {
    const std::size_t k = x.size();
    double best = 0;
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        std::vector<double> s(k);
        for (std::size_t i = 0; i < k; ++i) {
            s[i] = (signs >> i & 1u) ? -1.0 : 1.0;
            std::vector<double> r(k, 0.0);
            r[i] = -s[i];
            rows.push_back(r);
            rhs.push_back(0);
        }
        rows.push_back(s);
        rhs.push_back(1);
        for (const auto& g : gens) {
            rows.push_back(g);
            rhs.push_back(0);
        }
        const std::size_t m = rows.size();
        // vertices: every k-subset of constraints taken as equalities
        std::vector<bool> sel(m, false);
        std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), true);
        std::vector<std::vector<double>> a(k);
        std::vector<double> b(k), w;
        do {
            std::size_t t = 0;
            for (std::size_t r = 0; r < m; ++r)
                if (sel[r]) {
                    a[t] = rows[r];
                    b[t++] = rhs[r];
                }
            if (!solve_small(a, b, w)) continue;
            bool feasible = true;
            for (std::size_t r = 0; r < m && feasible; ++r) {
                double v = 0;
                for (std::size_t i = 0; i < k; ++i) v += rows[r][i] * w[i];
                feasible = v <= rhs[r] + 1e-12;
            }
            if (!feasible) continue;
            double val = 0;
            for (std::size_t i = 0; i < k; ++i) val += w[i] * x[i];
            best = std::max(best, val);
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    return best;
}

namespace {

double float_distance(const cone::ConvexCone& c, const std::vector<double>& x) {
    std::vector<std::vector<double>> g;
    for (const auto& v : c.generators()) g.push_back(to_doubles(v));
    return selftest::float_distance(g, x);
}

double float_distance(const cone::AnyCone& u, const std::vector<double>& x) {
    double best = INFINITY;
    for (const auto& p : cone::convex_pieces(u)) best = std::min(best, float_distance(p, x));
    return best;
}

// ---------- suites ----------

using Body = std::function<void(Rng&, SuiteResult&)>;

void suite_collapse(Rng&, SuiteResult& r) {
    auto p = FinitePoset::from_pairs({"alpha", "beta", "gamma", "delta"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto one = [](int s) { return Matrix::from_rows({{Scalar(s)}}, 1); };
    ind::IndSystem sys(p, {1, 1, 1, 1}, {{{0, 2}, one(1)}, {{0, 3}, one(-1)}, {{1, 2}, one(1)}, {{1, 3}, one(1)}});
    require(ind::validate(sys).pass, "system is not functorial");
    auto c = ind::colimit(sys);
    require(c.dim == 0, "colimit dimension " + std::to_string(c.dim));
    for (const auto& [a, m] : c.projections) require(m.is_zero(), "projection from " + p.name(a) + " is nonzero");
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            if (p.less(a, b)) require(sys.rho(a, b).rank() == 1, "a connecting map is not injective");
    r.instances = 1;
}

void suite_pushforward(Rng& rng, SuiteResult& r) {
    std::size_t localizable = 0, cones = 0;
    for (std::size_t inst = 0; inst < 200; ++inst) {
        IndexInstance ix = inst % 2 ? cone_index(rng, 6, 10) : abstract_index(rng, 6);
        std::uint64_t s = rng();
        auto X = ind::random_prelocalizable(ix.A, 3, s);
        std::string tag = "instance " + std::to_string(inst) + " (" + ix.origin + ", system seed " + std::to_string(s) + ")";
        auto hyp = lattice::check_t1_hypotheses(ix.lambda);
        require(hyp.pass(), tag + ": hypotheses fail: " + hyp.first_failure()->name);
        auto Z = ind::pushforward(X, ix.lambda);
        for (const auto& c : ind::check_conditions(Z, {ind::Condition::I, ind::Condition::II, ind::Condition::III}))
            require(c.pass, tag + ": pushforward fails " + ind::to_string(c.condition) + ": " + ind::to_string(Z, c));
        auto dist = lattice::is_distributive(ix.B, ix.B.size());
        if (dist.infinitely_distributive.value_or(false) && ind::check_localizable(X).pass) {
            auto c = ind::check_localizable(Z);
            require(c.pass, tag + ": pushforward fails III': " + ind::to_string(Z, c));
            ++localizable;
        }
        if (inst % 2) ++cones;
        ++r.instances;
    }
    r.detail = std::to_string(cones) + " cone-derived indices, III' checked on " + std::to_string(localizable);
}

void suite_intersection(Rng& rng, SuiteResult& r) {
    for (std::size_t inst = 0; inst < 100; ++inst) {
        IndexInstance ix = abstract_index(rng, 8);
        std::uint64_t s = rng();
        auto X = ind::random_prelocalizable(ix.A, 3, s);
        Subset seed;
        for (Element a = 0; a < ix.A.size(); ++a)
            if (rand_int(rng, 0, 2) == 0) seed.push_back(a);
        if (seed.empty()) seed.push_back(static_cast<Element>(rand_int(rng, 0, static_cast<int>(ix.A.size()) - 1)));
        Subset I = lattice::hereditary_closure(ix.A, seed);
        std::string tag = "instance " + std::to_string(inst) + " (" + ix.origin + ", system seed " + std::to_string(s) + ")";
        auto rep = ind::hereditary_intersection_check(X, I);
        require(rep.preconditions, tag + ": preconditions fail: " + rep.detail);
        require(rep.pass, tag + ": " + rep.detail);
        auto t = ind::tau(X, I, X.index().all());
        require(t.rank() == t.cols(), tag + ": tau is not injective");
        ++r.instances;
    }
}

void suite_presentation(Rng& rng, SuiteResult& r) {
    for (std::size_t inst = 0; inst < 100; ++inst) {
        IndexInstance ix = abstract_index(rng, 7);
        std::uint64_t s = rng();
        bool prelocalizable = inst % 2 == 0;
        auto X = prelocalizable ? ind::random_prelocalizable(ix.A, 3, s) : ind::random_system(ix.A.poset(), 3, s);
        const auto& p = X.index();
        std::vector<Element> lambda = p.maximal(p.all());
        for (Element a = 0; a < p.size(); ++a)
            if (rand_int(rng, 0, 3) == 0) lambda.push_back(a);
        if (inst % 3 == 0) lambda.push_back(lambda[rand_int(rng, 0, static_cast<int>(lambda.size()) - 1)]);
        std::shuffle(lambda.begin(), lambda.end(), rng);
        std::string tag = "instance " + std::to_string(inst) + " (" + ix.origin + ", " +
                          (prelocalizable ? "prelocalizable" : "interval") + " system seed " + std::to_string(s) + ")";
        auto pr = ind::quotient_presentation(X, lambda);
        auto c = ind::colimit(X);
        require(pr.quotient_dim == c.dim, tag + ": presentation dim " + std::to_string(pr.quotient_dim) +
                                              " != colimit dim " + std::to_string(c.dim));
        require(pr.invertible, tag + ": induced map not invertible");
        require(pr.antisymmetric_agrees, tag + ": antisymmetric description differs");
        require(pr.decomposition_holds, tag + ": ambient decomposition fails");
        ++r.instances;
    }
}

void suite_sign_algebra(Rng& rng, SuiteResult& r) {
    for (std::size_t inst = 0; inst < 100; ++inst) {
        std::size_t n = 2 + inst % 3;
        ind::CechData d;
        for (std::size_t i = 0; i < n; ++i) d.gamma_dims.push_back(static_cast<std::size_t>(rand_int(rng, 0, 3)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto v = static_cast<std::size_t>(rand_int(rng, 0, 3));
                d.v_dims[{i, j}] = v;
                d.to_first[{i, j}] = rand_matrix(rng, d.gamma_dims[i], v);
                d.to_second[{i, j}] = rand_matrix(rng, d.gamma_dims[j], v);
            }
        auto rep = ind::cech_sign_equivalence(d);
        require(rep.pass, "instance " + std::to_string(inst) + " with " + std::to_string(n) + " wedges: " + rep.detail);
        ++r.instances;
    }
}

void suite_cones(Rng& rng, SuiteResult& r) {
    double worst = 0;
    for (std::size_t inst = 0; inst < 200; ++inst) {
        std::size_t k = 2 + inst % 2;
        std::vector<Vector> gens;
        int n = rand_int(rng, 1, 4);
        for (int i = 0; i < n; ++i) gens.push_back(rand_vector(rng, k));
        cone::ConvexCone c(k, gens);
        auto form = cone::BilinearForm::standard(k);
        std::string tag = "instance " + std::to_string(inst) + " " + c.to_string();
        auto dual = cone::dual_cone(c, form);
        require(cone::same_set(cone::dual_cone(dual, form), c), tag + ": dual of dual differs");
        require(cone::is_proper(c) == (dual.span_dim() == k), tag + ": properness and full dual disagree");

        Vector x = rand_vector(rng, k);
        Scalar t = rand_positive(rng);
        Scalar dx = cone::distance(c, x);
        require(cone::distance(c, scaled(x, t)) == t * dx, tag + ": distance not homogeneous");
        require((dx == 0) == c.contains(x), tag + ": distance zero off the cone");
        Vector inside(k);
        for (const auto& g : gens) inside = add(inside, g);
        require(cone::distance(c, inside) == 0, tag + ": distance nonzero on the cone");
        double err = std::abs(to_double(dx) - float_distance(c, to_doubles(x)));
        worst = std::max(worst, err);
        require(err <= 1e-9, tag + ": exact and float distances differ by " + std::to_string(err));

        if (k == 2) {
            auto s1 = random_sector_set(rng), s2 = random_sector_set(rng);
            cone::AnyCone u = cone::join(s1, s2);
            Scalar du = cone::distance(u, x);
            require(du == std::min(cone::distance(s1, x), cone::distance(s2, x)),
                    tag + ": distance to " + std::get<cone::SectorSet>(u).to_string() + " is not the min over the union");
            require(cone::distance(u, scaled(x, t)) == t * du, tag + ": sector distance not homogeneous");
            require((du == 0) == std::get<cone::SectorSet>(u).contains(x), tag + ": sector distance zero off the set");
            double e2 = std::abs(to_double(du) - float_distance(u, to_doubles(x)));
            worst = std::max(worst, e2);
            require(e2 <= 1e-9, tag + ": exact and float sector distances differ by " + std::to_string(e2));
        }
        ++r.instances;
    }
    std::ostringstream os;
    os << "max |exact - float| = " << worst;
    r.detail = os.str();
}

void suite_cover(Rng& rng, SuiteResult& r) {
    auto run = [&](const std::vector<Vector>& xs, const std::string& tag) {
        auto cov = cone::simplicial_cover(xs, cone::BilinearForm::standard(xs[0].size()));
        for (const auto& chk : cone::check_cover(cov)) require(chk.pass, tag + ": " + chk.name + " " + chk.detail);
        ++r.instances;
    };
    std::size_t made = 0;
    while (made < 50) {
        std::vector<Vector> xs{rand_vector(rng, 2), rand_vector(rng, 2), rand_vector(rng, 2)};
        if (!cone::positively_spans(xs, 2)) {
            bool rejected = false;
            try {
                cone::simplicial_cover(xs, cone::BilinearForm::standard(2));
            } catch (const PreconditionError&) {
                rejected = true;
            }
            require(rejected, "invalid family " + to_string(xs[0]) + " " + to_string(xs[1]) + " " + to_string(xs[2]) +
                                  " accepted");
            continue;
        }
        run(xs, "family " + to_string(xs[0]) + " " + to_string(xs[1]) + " " + to_string(xs[2]));
        ++made;
    }
    run({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, "standard family in dimension 3");
    bool rejected = false;
    try {
        cone::simplicial_cover({{1, 0}, {0, 1}, {1, 1}}, cone::BilinearForm::standard(2));
    } catch (const PreconditionError&) {
        rejected = true;
    }
    require(rejected, "a family inside a half-plane was accepted");
}

h1::GaussianRational rand_gaussian(Rng& rng, int r = 3) {
    return {rand_scalar(rng, -r, r, 3), rand_scalar(rng, -r, r, 3)};
}

h1::Poly rand_poly(Rng& rng, int max_deg) {
    std::vector<h1::GaussianRational> c;
    int d = rand_int(rng, 0, max_deg);
    for (int i = 0; i <= d; ++i) c.push_back(rand_gaussian(rng));
    return h1::Poly(c);
}

h1::Ultrafunctional1D rand_functional(Rng& rng, bool allow_minus) {
    h1::Ultrafunctional1D u;
    int points = rand_int(rng, 0, 2);
    for (int i = 0; i < points; ++i) {
        h1::GaussianRational z = rand_int(rng, 0, 2) ? h1::GaussianRational(rand_scalar(rng, -2, 2)) : rand_gaussian(rng, 2);
        u.add_point(z, static_cast<std::size_t>(rand_int(rng, 0, 2)), rand_gaussian(rng));
    }
    int segs = rand_int(rng, points ? 0 : 1, 2);
    for (int i = 0; i < segs; ++i) {
        h1::Side side = allow_minus && rand_int(rng, 0, 1) ? h1::Side::Minus : h1::Side::Plus;
        h1::GaussianRational lambda(rand_positive(rng), rand_scalar(rng, -2, 2));
        u.add_segment(side, lambda, rand_poly(rng, 2));
    }
    return u;
}

h1::SymFn rand_entire(Rng& rng) {
    h1::SymFn f;
    int n = rand_int(rng, 1, 3);
    for (int i = 0; i < n; ++i) {
        h1::GaussianRational w = rand_int(rng, 0, 1) ? h1::GaussianRational() : h1::GaussianRational(rand_scalar(rng, -2, 2));
        f += h1::SymFn::exp_term(w, static_cast<std::size_t>(rand_int(rng, 0, 2)), rand_gaussian(rng));
    }
    return f;
}

// poles strictly below (upper = true) or above the real axis
h1::SymFn rand_holomorphic(Rng& rng, bool upper) {
    h1::SymFn f = rand_int(rng, 0, 1) ? rand_entire(rng) : h1::SymFn();
    int n = rand_int(rng, 1, 2);
    for (int i = 0; i < n; ++i) {
        Scalar im = rand_positive(rng);
        h1::GaussianRational a(rand_scalar(rng, -2, 2), upper ? Scalar(-im) : im);
        f += h1::SymFn::pole(a, static_cast<std::size_t>(rand_int(rng, 1, 2)), rand_gaussian(rng));
    }
    return f;
}

void suite_fourier(Rng& rng, SuiteResult& r) {
    auto delta = h1::Ultrafunctional1D::point_mass(h1::GaussianRational(), 0, 1);
    require(h1::fourier(delta) == h1::boundary_value(h1::Line::R, h1::SymFn::constant(1)), "F(delta_0) is not 1");
    require(h1::to_string(h1::fourier(delta)) == "(1 | 0)", "F(delta_0) prints as " + h1::to_string(h1::fourier(delta)));
    for (std::size_t inst = 0; inst < 100; ++inst) {
        auto u = rand_functional(rng, true);
        std::string tag = "instance " + std::to_string(inst) + " u = " + h1::to_string(u);
        auto f = h1::fourier(u);
        require(h1::fourier(h1::derivative(u)) == f.mul_neg_i_xi(), tag + ": F[u'] != -i xi F[u]");
        require(h1::fourier(h1::mul_poly(u, h1::Poly::x())) == f.neg_i_derivative(), tag + ": F[x u] != -i d F[u]");
        auto v = rand_entire(rng);
        auto b = h1::boundary_value(h1::Line::R, v);
        require(b == h1::boundary_value(h1::Line::RPlus, v) && b == h1::boundary_value(h1::Line::RMinus, v),
                tag + ": boundary values of " + h1::to_string(v) + " disagree");
        ++r.instances;
    }
}

void suite_bijectivity(Rng& rng, SuiteResult& r) {
    for (std::size_t inst = 0; inst < 100; ++inst) {
        auto v = rand_entire(rng);
        std::string tag = "entire v = " + h1::to_string(v);
        require(h1::s_map(h1::Triple1D(v, -v, h1::SymFn())).is_zero(), tag + ": s(v, -v, 0) != 0");
        require(h1::s_map(h1::Triple1D(v, h1::SymFn(), -v)).is_zero(), tag + ": s(v, 0, -v) != 0");
    }
    std::size_t kernel_hits = 0;
    for (std::size_t inst = 0; inst < 100; ++inst) {
        h1::Triple1D t;
        bool constructed = inst % 2 == 0;
        if (constructed) {
            auto a = rand_entire(rng), b = rand_entire(rng);
            t = h1::Triple1D(a, -a, h1::SymFn()) + h1::Triple1D(b, h1::SymFn(), -b);
        } else {
            auto v = rand_entire(rng);
            auto vp = rand_int(rng, 0, 2) ? rand_holomorphic(rng, true) : rand_entire(rng);
            auto vm = rand_int(rng, 0, 2) ? rand_holomorphic(rng, false) : rand_entire(rng);
            t = h1::Triple1D(v, vp, vm);
        }
        std::string tag = "instance " + std::to_string(inst) + " t = " + h1::to_string(t);
        auto k = h1::kernel_decompose(t);
        bool zero = h1::s_map(t).is_zero();
        require(k.in_kernel == zero, tag + ": decomposition and s disagree");
        if (constructed) require(k.in_kernel, tag + ": constructed kernel element not decomposed");
        if (k.in_kernel) {
            ++kernel_hits;
            require(k.n1 + k.n2 == t, tag + ": n1 + n2 != t");
            require(k.n1.vp() == -k.n1.v() && k.n1.vm().is_zero(), tag + ": n1 is not a generator");
            require(k.n2.vm() == -k.n2.v() && k.n2.vp().is_zero(), tag + ": n2 is not a generator");
        } else {
            require(!k.witness.is_zero() && k.witness == h1::s_map(t), tag + ": bad refutation witness");
        }
        ++r.instances;
    }
    r.detail = std::to_string(kernel_hits) + " of 100 triples in the kernel";
}

void suite_semigroup(Rng& rng, SuiteResult& r) {
    auto origin = cone::SectorSet::origin(1);
    auto pos = cone::SectorSet::half_lines(true, false);
    for (std::size_t inst = 0; inst < 100; ++inst) {
        auto u = rand_functional(rng, false);
        Scalar eta = rand_positive(rng), eta2 = rand_positive(rng);
        std::string tag = "instance " + std::to_string(inst) + " u = " + h1::to_string(u);
        require(h1::semigroup_check(u, eta, eta2), tag + ": semigroup law fails for eta = " + to_string(eta) +
                                                       ", eta' = " + to_string(eta2));
        auto pm = u.point_part();
        if (pm.is_zero()) pm = h1::Ultrafunctional1D::point_mass(rand_gaussian(rng), 1, rand_gaussian(rng));
        require(h1::restriction_check(pm, origin, pos), tag + ": restriction to the upper half-plane differs");
        require(h1::laplace_injectivity_check(u), tag + ": Laplace transform vanishes on a nonzero functional");
        ++r.instances;
    }

    // LP certificates against a grid oracle
    std::size_t compared = 0, attempts = 0, bounded = 0;
    std::vector<double> ts;
    const int N = 2000;
    for (int i = 0; i <= N; ++i) ts.push_back(-1.0 + 2.0 * i / N);
    for (int q = 1; q <= 30; ++q)
        for (int p = -q; p <= q; ++p) ts.push_back(static_cast<double>(p) / q);
    while (compared < 100) {
        if (++attempts > 20000) throw Failure{"membership sampling did not fill both quotas"};
        std::size_t k = static_cast<std::size_t>(rand_int(rng, 1, 2));
        cone::AnyCone U;
        if (k == 1) U = cone::SectorSet::half_lines(rand_int(rng, 0, 1), rand_int(rng, 0, 1));
        else if (rand_int(rng, 0, 1)) U = random_sector_set(rng);
        else U = cone::ConvexCone(2, {rand_vector(rng, 2), rand_vector(rng, 2)});
        cone::WeightSpec w(U, rand_positive(rng, 4, 2), rand_positive(rng, 8, 2));
        Vector l(k);
        for (auto& x : l) x = rand_scalar(rng, -4, 4, 2);
        auto res = cone::exp_membership(l, w);
        // half bounded, half unbounded
        if ((res.bounded ? bounded : compared - bounded) >= 50) continue;
        double lp_max = -INFINITY;
        for (const auto& f : res.certificate) lp_max = std::max(lp_max, to_double(f.max_h));
        double A = to_double(w.A), B = to_double(w.B);
        auto ld = to_doubles(l);
        double grid_max = -INFINITY;
        auto h = [&](const std::vector<double>& x) {
            double lx = 0, nx = 0;
            for (std::size_t i = 0; i < k; ++i) {
                lx += ld[i] * x[i];
                nx = std::max(nx, std::abs(x[i]));
            }
            return -lx + nx / A - B * float_distance(U, x);
        };
        for (std::size_t face = 0; face < k; ++face)
            for (double sgn : {-1.0, 1.0}) {
                if (k == 1) {
                    grid_max = std::max(grid_max, h({sgn}));
                    continue;
                }
                for (double t : ts) {
                    std::vector<double> x(2);
                    x[face] = sgn;
                    x[1 - face] = t;
                    grid_max = std::max(grid_max, h(x));
                }
            }
        if (std::abs(grid_max) <= 1e-6) {
            ++r.skipped;
            continue;
        }
        std::string tag = "membership instance l = " + to_string(l) + ", A = " + to_string(w.A) + ", B = " + to_string(w.B);
        require(res.bounded == (grid_max < 0), tag + ": LP says " + (res.bounded ? "bounded" : "unbounded") +
                                                   ", grid max " + std::to_string(grid_max));
        require(grid_max <= lp_max + 1e-9, tag + ": grid exceeds the LP maximum");
        if (res.bounded) ++bounded;
        ++compared;
    }
    r.instances += compared;
    r.detail = std::to_string(compared) + " membership comparisons, " + std::to_string(bounded) + " bounded";
}

struct SuiteDef {
    SuiteInfo info;
    Body body;
};

const std::vector<SuiteDef>& defs() {
    static const std::vector<SuiteDef> d = {
        {{1, "collapse", "colimit of the four-element +-identity system is zero"}, suite_collapse},
        {{2, "pushforward", "pushforward preserves I, II, III and III'"}, suite_pushforward},
        {{3, "hereditary", "N_A n M_I = N_I for hereditary I"}, suite_intersection},
        {{4, "presentation", "quotient presentation is isomorphic to the colimit"}, suite_presentation},
        {{5, "signs", "Im delta = tau(N) for wedge assignments"}, suite_sign_algebra},
        {{6, "cones", "duality, properness, distances and float oracle"}, suite_cones},
        {{7, "cover", "simplicial covers"}, suite_cover},
        {{8, "fourier", "Fourier rules for derivatives and multiplication by x"}, suite_fourier},
        {{9, "bijectivity", "kernel decomposition of triples"}, suite_bijectivity},
        {{10, "semigroup", "semigroup law, restriction and membership certificates"}, suite_semigroup},
    };
    return d;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> s = [] {
        std::vector<SuiteInfo> out;
        for (const auto& d : defs()) out.push_back(d.info);
        return out;
    }();
    return s;
}

std::optional<int> find_suite(const std::string& key) {
    for (const auto& s : suites())
        if (s.name == key || std::to_string(s.id) == key) return s.id;
    return std::nullopt;
}

SuiteResult run_suite(int id, std::uint64_t seed) {
    const auto& all = defs();
    auto it = std::find_if(all.begin(), all.end(), [&](const SuiteDef& d) { return d.info.id == id; });
    if (it == all.end()) throw std::invalid_argument("unknown suite " + std::to_string(id));
    SuiteResult r;
    r.id = id;
    r.name = it->info.name;
    Rng rng(seed + static_cast<std::uint64_t>(id));
    auto start = std::chrono::steady_clock::now();
    try {
        it->body(rng, r);
    } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.what;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception after ") + std::to_string(r.instances) + " instances: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace uf::selftest
