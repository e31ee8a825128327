#pragma once

#include "ultrafun/gaussian.hpp"
#include "ultrafun/sector.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uf::h1 {

/// Tube domains of the form R + i int K* for K in {{0}, R+, R-}.
enum class Domain { Whole, Upper, Lower };
std::string to_string(Domain d);
/// a contains b
bool contains(Domain a, Domain b);

/// Sum of c zeta^n e^{i w zeta} plus partial fractions c / (zeta - a)^r, r >= 1.
/// Both families are linearly independent, so the term maps are a normal form.
class SymFn {
public:
    using Key = std::pair<GaussianRational, std::size_t>;

    SymFn() = default;
    static SymFn constant(const ExpCoef& c);
    static SymFn exp_term(const GaussianRational& w, std::size_t n, const ExpCoef& c);
    static SymFn pole(const GaussianRational& a, std::size_t r, const ExpCoef& c);
    static SymFn zeta() { return exp_term(GaussianRational(), 1, ExpCoef(1)); }
    static SymFn from_poly(const Poly& p);

    /// (w, n) -> c
    const std::map<Key, ExpCoef>& exp_terms() const { return exp_; }
    /// (a, r) -> c
    const std::map<Key, ExpCoef>& rational_terms() const { return rat_; }

    bool is_zero() const { return exp_.empty() && rat_.empty(); }
    bool is_entire() const { return rat_.empty(); }
    bool holomorphic_on(Domain d) const;
    SymFn entire_part() const;
    SymFn rational_part() const;

    SymFn& operator+=(const SymFn& o);
    SymFn& operator-=(const SymFn& o);
    SymFn scaled(const ExpCoef& c) const;
    SymFn mul_zeta() const;
    SymFn derivative() const;

    ExpCoef operator()(const GaussianRational& z) const;
    std::complex<double> eval(std::complex<double> z) const;

    bool operator==(const SymFn& o) const = default;

private:
    std::map<Key, ExpCoef> exp_;
    std::map<Key, ExpCoef> rat_;
    static void add(std::map<Key, ExpCoef>& m, const Key& k, const ExpCoef& c);
};

SymFn operator+(SymFn a, const SymFn& b);
SymFn operator-(SymFn a, const SymFn& b);
SymFn operator-(const SymFn& a);
std::string to_string(const SymFn& f, const std::string& var = "z");

/// Element of H(C \ R) / H(C): upper is holomorphic on C+, lower on C-.
/// Canonical form keeps the entire part of the lower representative at zero.
class Hyperfunction1D {
public:
    Hyperfunction1D() = default;
    Hyperfunction1D(SymFn upper, SymFn lower);

    const SymFn& upper() const { return upper_; }
    const SymFn& lower() const { return lower_; }
    bool is_zero() const { return upper_.is_zero() && lower_.is_zero(); }

    /// multiplication by -i xi on both representatives
    Hyperfunction1D mul_neg_i_xi() const;
    /// -i d/dxi on both representatives
    Hyperfunction1D neg_i_derivative() const;

    bool operator==(const Hyperfunction1D& o) const = default;

private:
    SymFn upper_;
    SymFn lower_;
};

Hyperfunction1D operator+(const Hyperfunction1D& a, const Hyperfunction1D& b);
Hyperfunction1D operator-(const Hyperfunction1D& a, const Hyperfunction1D& b);
std::string to_string(const Hyperfunction1D& h);

enum class Side { Plus, Minus };

struct PointMass {
    GaussianRational z;
    std::size_t m = 0;
    ExpCoef c;
};

struct Segment {
    Side side = Side::Plus;
    GaussianRational lambda;
    Poly p;
};

/// Finite sums of c delta^{(m)}_z and exponential segments
/// f -> int_0^{+-inf} p(x) f(x) e^{-+lambda x} dx, in canonical form.
class Ultrafunctional1D {
public:
    Ultrafunctional1D() = default;
    static Ultrafunctional1D point_mass(const GaussianRational& z, std::size_t m, const ExpCoef& c);
    static Ultrafunctional1D segment(Side side, const GaussianRational& lambda, const Poly& p);

    void add_point(const GaussianRational& z, std::size_t m, const ExpCoef& c);
    /// Throws PreconditionError when Re lambda <= 0.
    void add_segment(Side side, const GaussianRational& lambda, const Poly& p);

    std::vector<PointMass> points() const;
    std::vector<Segment> segments() const;
    bool is_zero() const { return points_.empty() && segments_.empty(); }
    bool has_side(Side s) const;

    Ultrafunctional1D point_part() const;
    Ultrafunctional1D side_part(Side s) const;

    cone::SectorSet carrier() const;

    Ultrafunctional1D& operator+=(const Ultrafunctional1D& o);
    Ultrafunctional1D scaled(const GaussianRational& s) const;
    bool operator==(const Ultrafunctional1D& o) const = default;

private:
    std::map<std::pair<GaussianRational, std::size_t>, ExpCoef> points_;
    std::map<std::pair<Side, GaussianRational>, Poly> segments_;
};

Ultrafunctional1D operator+(Ultrafunctional1D a, const Ultrafunctional1D& b);
Ultrafunctional1D operator-(const Ultrafunctional1D& a, const Ultrafunctional1D& b);
std::string to_string(const Ultrafunctional1D& u);

/// u(e^{i x zeta}). Throws PreconditionError when a segment integral diverges at zeta.
ExpCoef apply(const Ultrafunctional1D& u, const GaussianRational& zeta);

struct LaplaceTransform {
    SymFn f;
    Domain domain = Domain::Whole;
    bool operator==(const LaplaceTransform&) const = default;
};

/// Laplace transform with respect to the proper cone K (default: the carrier of u).
/// K must be {0}, R+ or R- and contain the carrier.
LaplaceTransform laplace(const Ultrafunctional1D& u, const std::optional<cone::SectorSet>& K = std::nullopt);
LaplaceTransform restrict(const LaplaceTransform& l, Domain d);
/// For cones K <= K': laplace under K restricted to the tube of K' equals laplace under K'.
bool restriction_check(const Ultrafunctional1D& u, const cone::SectorSet& K, const cone::SectorSet& K2);

enum class Line { R, RPlus, RMinus };
Hyperfunction1D boundary_value(Line side, const SymFn& v);

Hyperfunction1D fourier(const Ultrafunctional1D& u);

Ultrafunctional1D derivative(const Ultrafunctional1D& u);
Ultrafunctional1D mul_poly(const Ultrafunctional1D& u, const Poly& q);
/// Multiplication by e^{-x eta}.
Ultrafunctional1D mul_exp(const Ultrafunctional1D& u, const Scalar& eta);

/// (v, v+, v-) with v entire, v+ holomorphic on C+, v- holomorphic on C-.
class Triple1D {
public:
    Triple1D() = default;
    Triple1D(SymFn v, SymFn vp, SymFn vm);
    const SymFn& v() const { return v_; }
    const SymFn& vp() const { return vp_; }
    const SymFn& vm() const { return vm_; }
    bool operator==(const Triple1D&) const = default;

private:
    SymFn v_, vp_, vm_;
};

Triple1D operator+(const Triple1D& a, const Triple1D& b);
std::string to_string(const Triple1D& t);

Hyperfunction1D s_map(const Triple1D& t);

struct KernelDecomposition {
    bool in_kernel = false;
    SymFn u;
    /// (v - u, -(v - u), 0)
    Triple1D n1;
    /// (u, 0, -u)
    Triple1D n2;
    /// s_map(t) when not in the kernel
    Hyperfunction1D witness;
};

KernelDecomposition kernel_decompose(const Triple1D& t);

/// mul_exp(mul_exp(u, eta), eta2) == mul_exp(u, eta + eta2); u must be carried by R+.
bool semigroup_check(const Ultrafunctional1D& u, const Scalar& eta, const Scalar& eta2);
/// laplace(u) is zero exactly when u is zero.
bool laplace_injectivity_check(const Ultrafunctional1D& u);

}  // namespace uf::h1
