#include "ultrafun/hyper1d.hpp"

#include "ultrafun/errors.hpp"

#include <cmath>

namespace uf::h1 {

namespace {

const GaussianRational I = GaussianRational::i();

GaussianRational gr(const Integer& n) { return GaussianRational(Scalar(n)); }

std::string wrap(const std::string& s) {
    return s.find_first_of("+- ", 1) == std::string::npos ? s : "(" + s + ")";
}

// "z - a"
std::string shifted(const std::string& var, const GaussianRational& a) {
    if (a.is_zero()) return var;
    std::string b = to_string(-a);
    if (b[0] == '-') return var + b;
    return var + "+" + (a.re != 0 && a.im != 0 ? "(" + b + ")" : b);
}

}  // namespace

std::string to_string(Domain d) {
    switch (d) {
        case Domain::Whole: return "C";
        case Domain::Upper: return "Im z > 0";
        case Domain::Lower: return "Im z < 0";
    }
    return "?";
}

bool contains(Domain a, Domain b) { return a == b || a == Domain::Whole; }

void SymFn::add(std::map<Key, ExpCoef>& m, const Key& k, const ExpCoef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

SymFn SymFn::constant(const ExpCoef& c) { return exp_term(GaussianRational(), 0, c); }

SymFn SymFn::exp_term(const GaussianRational& w, std::size_t n, const ExpCoef& c) {
    SymFn f;
    add(f.exp_, {w, n}, c);
    return f;
}

SymFn SymFn::pole(const GaussianRational& a, std::size_t r, const ExpCoef& c) {
    if (r == 0) return constant(c);
    SymFn f;
    add(f.rat_, {a, r}, c);
    return f;
}

SymFn SymFn::from_poly(const Poly& p) {
    SymFn f;
    for (std::size_t n = 0; n < p.size(); ++n) add(f.exp_, {GaussianRational(), n}, p[n]);
    return f;
}

bool SymFn::holomorphic_on(Domain d) const {
    for (const auto& [k, c] : rat_) {
        const Scalar& im = k.first.im;
        if (d == Domain::Whole) return false;
        if (d == Domain::Upper && im >= 0) return false;
        if (d == Domain::Lower && im <= 0) return false;
    }
    return true;
}

SymFn SymFn::entire_part() const {
    SymFn f;
    f.exp_ = exp_;
    return f;
}

SymFn SymFn::rational_part() const {
    SymFn f;
    f.rat_ = rat_;
    return f;
}

SymFn& SymFn::operator+=(const SymFn& o) {
    for (const auto& [k, c] : o.exp_) add(exp_, k, c);
    for (const auto& [k, c] : o.rat_) add(rat_, k, c);
    return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
    for (const auto& [k, c] : o.exp_) add(exp_, k, -c);
    for (const auto& [k, c] : o.rat_) add(rat_, k, -c);
    return *this;
}

SymFn SymFn::scaled(const ExpCoef& s) const {
    SymFn f;
    for (const auto& [k, c] : exp_) add(f.exp_, k, c * s);
    for (const auto& [k, c] : rat_) add(f.rat_, k, c * s);
    return f;
}

SymFn SymFn::mul_zeta() const {
    SymFn f;
    for (const auto& [k, c] : exp_) add(f.exp_, {k.first, k.second + 1}, c);
    // zeta/(zeta-a)^r = 1/(zeta-a)^{r-1} + a/(zeta-a)^r
    for (const auto& [k, c] : rat_) {
        const auto& [a, r] = k;
        if (r == 1) add(f.exp_, {GaussianRational(), 0}, c);
        else add(f.rat_, {a, r - 1}, c);
        add(f.rat_, k, c * ExpCoef(a));
    }
    return f;
}

SymFn SymFn::derivative() const {
    SymFn f;
    for (const auto& [k, c] : exp_) {
        const auto& [w, n] = k;
        if (n > 0) add(f.exp_, {w, n - 1}, c * ExpCoef(GaussianRational(static_cast<int>(n))));
        add(f.exp_, k, c * ExpCoef(I * w));
    }
    for (const auto& [k, c] : rat_) {
        const auto& [a, r] = k;
        add(f.rat_, {a, r + 1}, c * ExpCoef(GaussianRational(-static_cast<int>(r))));
    }
    return f;
}

ExpCoef SymFn::operator()(const GaussianRational& z) const {
    ExpCoef s;
    for (const auto& [k, c] : exp_) s += c * ExpCoef::exp(I * k.first * z, pow(z, k.second));
    for (const auto& [k, c] : rat_) {
        GaussianRational d = z - k.first;
        if (d.is_zero()) throw PreconditionError("evaluation at a pole " + to_string(k.first));
        s += c * ExpCoef(GaussianRational(1) / pow(d, k.second));
    }
    return s;
}

std::complex<double> SymFn::eval(std::complex<double> z) const {
    const std::complex<double> i(0, 1);
    std::complex<double> s = 0;
    for (const auto& [k, c] : exp_)
        s += c.to_complex() * std::pow(z, static_cast<int>(k.second)) * std::exp(i * k.first.to_complex() * z);
    for (const auto& [k, c] : rat_)
        s += c.to_complex() / std::pow(z - k.first.to_complex(), static_cast<int>(k.second));
    return s;
}

SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
SymFn operator-(const SymFn& a) { return SymFn() - a; }

std::string to_string(const SymFn& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& [k, c] : f.exp_terms()) {
        const auto& [w, n] = k;
        std::vector<std::string> factors;
        if (!(c == ExpCoef(1)) || (n == 0 && w.is_zero())) factors.push_back(wrap(to_string(c)));
        if (n == 1) factors.push_back(var);
        if (n > 1) factors.push_back(var + "^" + std::to_string(n));
        if (!w.is_zero()) factors.push_back("exp(i*" + wrap(to_string(w)) + "*" + var + ")");
        std::string t;
        for (const auto& s : factors) t += (t.empty() ? "" : "*") + s;
        terms.push_back(t);
    }
    for (const auto& [k, c] : f.rational_terms()) {
        const auto& [a, r] = k;
        std::string den = "(" + shifted(var, a) + ")";
        if (r > 1) den += "^" + std::to_string(r);
        terms.push_back(wrap(to_string(c)) + "/" + den);
    }
    std::string s;
    for (const auto& t : terms) {
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

Hyperfunction1D::Hyperfunction1D(SymFn upper, SymFn lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (!upper_.holomorphic_on(Domain::Upper))
        throw PreconditionError("upper representative has a pole in the closed upper half-plane");
    if (!lower_.holomorphic_on(Domain::Lower))
        throw PreconditionError("lower representative has a pole in the closed lower half-plane");
    SymFn e = lower_.entire_part();
    upper_ -= e;
    lower_ -= e;
}

Hyperfunction1D Hyperfunction1D::mul_neg_i_xi() const {
    ExpCoef s(-I);
    return {upper_.mul_zeta().scaled(s), lower_.mul_zeta().scaled(s)};
}

Hyperfunction1D Hyperfunction1D::neg_i_derivative() const {
    ExpCoef s(-I);
    return {upper_.derivative().scaled(s), lower_.derivative().scaled(s)};
}

Hyperfunction1D operator+(const Hyperfunction1D& a, const Hyperfunction1D& b) {
    return {a.upper() + b.upper(), a.lower() + b.lower()};
}

Hyperfunction1D operator-(const Hyperfunction1D& a, const Hyperfunction1D& b) {
    return {a.upper() - b.upper(), a.lower() - b.lower()};
}

std::string to_string(const Hyperfunction1D& h) {
    return "(" + to_string(h.upper()) + " | " + to_string(h.lower()) + ")";
}

Ultrafunctional1D Ultrafunctional1D::point_mass(const GaussianRational& z, std::size_t m, const ExpCoef& c) {
    Ultrafunctional1D u;
    u.add_point(z, m, c);
    return u;
}

Ultrafunctional1D Ultrafunctional1D::segment(Side side, const GaussianRational& lambda, const Poly& p) {
    Ultrafunctional1D u;
    u.add_segment(side, lambda, p);
    return u;
}

void Ultrafunctional1D::add_point(const GaussianRational& z, std::size_t m, const ExpCoef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = points_.try_emplace({z, m}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) points_.erase(it);
    }
}

void Ultrafunctional1D::add_segment(Side side, const GaussianRational& lambda, const Poly& p) {
    if (lambda.re <= 0) throw PreconditionError("segment decay must have Re lambda > 0, got " + to_string(lambda));
    if (p.is_zero()) return;
    auto [it, inserted] = segments_.try_emplace({side, lambda}, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) segments_.erase(it);
    }
}

std::vector<PointMass> Ultrafunctional1D::points() const {
    std::vector<PointMass> out;
    for (const auto& [k, c] : points_) out.push_back({k.first, k.second, c});
    return out;
}

std::vector<Segment> Ultrafunctional1D::segments() const {
    std::vector<Segment> out;
    for (const auto& [k, p] : segments_) out.push_back({k.first, k.second, p});
    return out;
}

bool Ultrafunctional1D::has_side(Side s) const {
    for (const auto& [k, p] : segments_)
        if (k.first == s) return true;
    return false;
}

Ultrafunctional1D Ultrafunctional1D::point_part() const {
    Ultrafunctional1D u;
    u.points_ = points_;
    return u;
}

Ultrafunctional1D Ultrafunctional1D::side_part(Side s) const {
    Ultrafunctional1D u;
    for (const auto& [k, p] : segments_)
        if (k.first == s) u.segments_.emplace(k, p);
    return u;
}

cone::SectorSet Ultrafunctional1D::carrier() const {
    return cone::SectorSet::half_lines(has_side(Side::Plus), has_side(Side::Minus));
}

Ultrafunctional1D& Ultrafunctional1D::operator+=(const Ultrafunctional1D& o) {
    for (const auto& [k, c] : o.points_) add_point(k.first, k.second, c);
    for (const auto& [k, p] : o.segments_) add_segment(k.first, k.second, p);
    return *this;
}

Ultrafunctional1D Ultrafunctional1D::scaled(const GaussianRational& s) const {
    Ultrafunctional1D u;
    for (const auto& [k, c] : points_) u.add_point(k.first, k.second, c * ExpCoef(s));
    for (const auto& [k, p] : segments_) u.add_segment(k.first, k.second, s * p);
    return u;
}

Ultrafunctional1D operator+(Ultrafunctional1D a, const Ultrafunctional1D& b) { return a += b; }
Ultrafunctional1D operator-(const Ultrafunctional1D& a, const Ultrafunctional1D& b) {
    return a + b.scaled(GaussianRational(-1));
}

std::string to_string(const Ultrafunctional1D& u) {
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& pm : u.points()) {
        if (!s.empty()) s += " + ";
        s += wrap(to_string(pm.c)) + "*delta";
        if (pm.m) s += "^(" + std::to_string(pm.m) + ")";
        s += "_{" + to_string(pm.z) + "}";
    }
    for (const auto& sg : u.segments()) {
        if (!s.empty()) s += " + ";
        s += std::string("seg") + (sg.side == Side::Plus ? "+" : "-") + "(lambda=" + to_string(sg.lambda) +
             ", p=" + to_string(sg.p) + ")";
    }
    return s;
}

ExpCoef apply(const Ultrafunctional1D& u, const GaussianRational& zeta) {
    ExpCoef s;
    for (const auto& pm : u.points()) s += pm.c * ExpCoef::exp(I * pm.z * zeta, pow(-I * zeta, pm.m));
    for (const auto& sg : u.segments()) {
        bool plus = sg.side == Side::Plus;
        GaussianRational d = plus ? sg.lambda - I * zeta : sg.lambda + I * zeta;
        if (d.re <= 0)
            throw PreconditionError("divergent segment integral at zeta = " + to_string(zeta));
        GaussianRational v;
        for (std::size_t n = 0; n < sg.p.size(); ++n) {
            GaussianRational t = sg.p[n] * gr(factorial(n)) / pow(d, n + 1);
            v += plus ? t : (n % 2 ? t : -t);
        }
        s += ExpCoef(v);
    }
    return s;
}

namespace {

Domain domain_of(const cone::SectorSet& K) {
    if (K.dim() != 1) throw DimensionError("laplace: cone must be one-dimensional");
    if (K.positive() && K.negative())
        throw PreconditionError("improper carrier: both half-lines present, split the functional first");
    if (K.positive()) return Domain::Upper;
    if (K.negative()) return Domain::Lower;
    return Domain::Whole;
}

}  // namespace

LaplaceTransform laplace(const Ultrafunctional1D& u, const std::optional<cone::SectorSet>& K) {
    cone::SectorSet carrier = u.carrier();
    cone::SectorSet k = K.value_or(carrier);
    LaplaceTransform out;
    out.domain = domain_of(k);
    if (!cone::leq(carrier, k))
        throw PreconditionError("cone " + k.to_string() + " does not contain the carrier " + carrier.to_string());
    for (const auto& pm : u.points()) out.f += SymFn::exp_term(pm.z, pm.m, pm.c * ExpCoef(pow(-I, pm.m)));
    for (const auto& sg : u.segments()) {
        bool plus = sg.side == Side::Plus;
        // 1/(lambda - i z)^{n+1} = i^{n+1}/(z + i lambda)^{n+1}
        // 1/(lambda + i z)^{n+1} = (-i)^{n+1}/(z - i lambda)^{n+1}
        GaussianRational a = plus ? -I * sg.lambda : I * sg.lambda;
        for (std::size_t n = 0; n < sg.p.size(); ++n) {
            GaussianRational c = sg.p[n] * gr(factorial(n));
            if (plus) c *= pow(I, n + 1);
            else c *= (n % 2 ? GaussianRational(1) : GaussianRational(-1)) * pow(-I, n + 1);
            out.f += SymFn::pole(a, n + 1, c);
        }
    }
    return out;
}

LaplaceTransform restrict(const LaplaceTransform& l, Domain d) {
    if (!contains(l.domain, d))
        throw PreconditionError("cannot restrict from " + to_string(l.domain) + " to " + to_string(d));
    return {l.f, d};
}

bool restriction_check(const Ultrafunctional1D& u, const cone::SectorSet& K, const cone::SectorSet& K2) {
    if (!cone::leq(K, K2)) throw PreconditionError("restriction needs K <= K'");
    LaplaceTransform big = laplace(u, K2);
    return restrict(laplace(u, K), big.domain) == big;
}

Hyperfunction1D boundary_value(Line side, const SymFn& v) {
    switch (side) {
        case Line::R:
            if (!v.is_entire()) throw PreconditionError("pole on wrong side: b_R needs an entire function");
            return {v, SymFn()};
        case Line::RPlus:
            if (!v.holomorphic_on(Domain::Upper))
                throw PreconditionError("pole on wrong side: b_R+ needs a function holomorphic on Im z > 0");
            return {v, SymFn()};
        case Line::RMinus:
            if (!v.holomorphic_on(Domain::Lower))
                throw PreconditionError("pole on wrong side: b_R- needs a function holomorphic on Im z < 0");
            return {SymFn(), -v};
    }
    return {};
}

Hyperfunction1D fourier(const Ultrafunctional1D& u) {
    Hyperfunction1D h = boundary_value(Line::R, laplace(u.point_part()).f);
    h = h + boundary_value(Line::RPlus, laplace(u.side_part(Side::Plus)).f);
    h = h + boundary_value(Line::RMinus, laplace(u.side_part(Side::Minus)).f);
    return h;
}

Ultrafunctional1D derivative(const Ultrafunctional1D& u) {
    Ultrafunctional1D out;
    for (const auto& pm : u.points()) out.add_point(pm.z, pm.m + 1, pm.c);
    for (const auto& sg : u.segments()) {
        // both orientations integrate by parts to p(0) delta_0 plus a segment
        GaussianRational l = sg.side == Side::Plus ? -sg.lambda : sg.lambda;
        out.add_point(GaussianRational(), 0, sg.p[0]);
        out.add_segment(sg.side, sg.lambda, sg.p.derivative() + l * sg.p);
    }
    return out;
}

Ultrafunctional1D mul_poly(const Ultrafunctional1D& u, const Poly& q) {
    Ultrafunctional1D out;
    for (const auto& pm : u.points()) {
        Poly d = q;
        // order j picks up C(m, j) (-1)^{m-j} q^{(m-j)}(z)
        for (std::size_t k = 0; k <= pm.m; ++k) {
            std::size_t j = pm.m - k;
            GaussianRational c = gr(binomial(pm.m, j)) * d(pm.z);
            if (k % 2) c = -c;
            out.add_point(pm.z, j, pm.c * ExpCoef(c));
            d = d.derivative();
        }
    }
    for (const auto& sg : u.segments()) out.add_segment(sg.side, sg.lambda, q * sg.p);
    return out;
}

Ultrafunctional1D mul_exp(const Ultrafunctional1D& u, const Scalar& eta) {
    Ultrafunctional1D out;
    GaussianRational e(eta);
    for (const auto& pm : u.points())
        for (std::size_t j = 0; j <= pm.m; ++j) {
            GaussianRational c = gr(binomial(pm.m, j)) * pow(e, pm.m - j);
            out.add_point(pm.z, j, pm.c * ExpCoef::exp(-pm.z * e, c));
        }
    for (const auto& sg : u.segments()) {
        GaussianRational l = sg.side == Side::Plus ? sg.lambda + e : sg.lambda - e;
        if (l.re <= 0)
            throw PreconditionError("mul_exp decay violation: Re lambda becomes " + uf::to_string(l.re));
        out.add_segment(sg.side, l, sg.p);
    }
    return out;
}

Triple1D::Triple1D(SymFn v, SymFn vp, SymFn vm) : v_(std::move(v)), vp_(std::move(vp)), vm_(std::move(vm)) {
    if (!v_.is_entire()) throw PreconditionError("triple: v must be entire");
    if (!vp_.holomorphic_on(Domain::Upper)) throw PreconditionError("triple: v+ must be holomorphic on Im z > 0");
    if (!vm_.holomorphic_on(Domain::Lower)) throw PreconditionError("triple: v- must be holomorphic on Im z < 0");
}

Triple1D operator+(const Triple1D& a, const Triple1D& b) {
    return {a.v() + b.v(), a.vp() + b.vp(), a.vm() + b.vm()};
}

std::string to_string(const Triple1D& t) {
    return "(" + to_string(t.v()) + ", " + to_string(t.vp()) + ", " + to_string(t.vm()) + ")";
}

Hyperfunction1D s_map(const Triple1D& t) {
    return boundary_value(Line::R, t.v()) + boundary_value(Line::RPlus, t.vp()) +
           boundary_value(Line::RMinus, t.vm());
}

KernelDecomposition kernel_decompose(const Triple1D& t) {
    KernelDecomposition out;
    SymFn wp = t.v() + t.vp();
    SymFn wm = -t.vm();
    if (wp == wm && wp.is_entire()) {
        out.in_kernel = true;
        out.u = wp;
        SymFn r = t.v() - wp;
        out.n1 = Triple1D(r, -r, SymFn());
        out.n2 = Triple1D(wp, SymFn(), -wp);
    } else {
        out.witness = s_map(t);
    }
    return out;
}

bool semigroup_check(const Ultrafunctional1D& u, const Scalar& eta, const Scalar& eta2) {
    if (!cone::leq(u.carrier(), cone::SectorSet::half_lines(true, false)))
        throw PreconditionError("semigroup_check needs a functional carried by R+");
    if (eta <= 0 || eta2 <= 0) throw PreconditionError("semigroup_check needs eta, eta' > 0");
    return mul_exp(mul_exp(u, eta), eta2) == mul_exp(u, eta + eta2);
}

bool laplace_injectivity_check(const Ultrafunctional1D& u) { return laplace(u).f.is_zero() == u.is_zero(); }

}  // namespace uf::h1
