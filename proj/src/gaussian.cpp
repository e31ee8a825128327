#include "ultrafun/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace uf::h1 {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Scalar r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Scalar n = o.norm2();
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

GaussianRational pow(GaussianRational a, std::size_t n) {
    GaussianRational r(1);
    for (; n; n >>= 1) {
        if (n & 1) r *= a;
        a *= a;
    }
    return r;
}

GaussianRational parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {parse_scalar(s), Scalar(0)};
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not the first character and not after '/'
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    std::string real = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string imag = cut == std::string::npos ? body : body.substr(cut);
    Scalar im;
    if (imag.empty() || imag == "+") im = 1;
    else if (imag == "-") im = -1;
    else im = parse_scalar(imag[0] == '+' ? imag.substr(1) : imag);
    return {real.empty() ? Scalar(0) : parse_scalar(real), im};
}

std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return uf::to_string(g.re);
    std::string im;
    if (g.im == 1) im = "i";
    else if (g.im == -1) im = "-i";
    else im = uf::to_string(g.im) + "i";
    if (g.re == 0) return im;
    return uf::to_string(g.re) + (g.im > 0 ? "+" : "") + im;
}

ExpCoef::ExpCoef(GaussianRational c) { add(GaussianRational(), c); }

ExpCoef ExpCoef::exp(const GaussianRational& v, const GaussianRational& c) {
    ExpCoef e;
    e.add(v, c);
    return e;
}

void ExpCoef::add(const GaussianRational& v, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ExpCoef::is_plain() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }

GaussianRational ExpCoef::plain() const {
    if (!is_plain()) throw std::logic_error("ExpCoef has exponential factors");
    return terms_.empty() ? GaussianRational() : terms_.begin()->second;
}

ExpCoef& ExpCoef::operator+=(const ExpCoef& o) {
    for (const auto& [v, c] : o.terms_) add(v, c);
    return *this;
}

ExpCoef& ExpCoef::operator-=(const ExpCoef& o) {
    for (const auto& [v, c] : o.terms_) add(v, -c);
    return *this;
}

ExpCoef& ExpCoef::operator*=(const ExpCoef& o) {
    ExpCoef out;
    for (const auto& [v, c] : terms_)
        for (const auto& [w, d] : o.terms_) out.add(v + w, c * d);
    *this = std::move(out);
    return *this;
}

std::complex<double> ExpCoef::to_complex() const {
    std::complex<double> s = 0;
    for (const auto& [v, c] : terms_) s += c.to_complex() * std::exp(v.to_complex());
    return s;
}

ExpCoef operator+(ExpCoef a, const ExpCoef& b) { return a += b; }
ExpCoef operator-(ExpCoef a, const ExpCoef& b) { return a -= b; }
ExpCoef operator-(const ExpCoef& a) { return ExpCoef() - a; }
ExpCoef operator*(ExpCoef a, const ExpCoef& b) { return a *= b; }

std::string to_string(const ExpCoef& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [v, k] : c.terms()) {
        if (!s.empty()) s += " + ";
        std::string coef = to_string(k);
        bool compound = k.re != 0 && k.im != 0;
        if (v.is_zero()) {
            s += coef;
        } else {
            s += (compound ? "(" + coef + ")" : coef) + "*exp(" + to_string(v) + ")";
        }
    }
    return s;
}

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * GaussianRational(Scalar(static_cast<long>(n))));
    return Poly(std::move(d));
}

GaussianRational Poly::operator()(const GaussianRational& z) const {
    GaussianRational r;
    for (std::size_t n = c_.size(); n-- > 0;) r = r * z + c_[n];
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
    trim();
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& s, const Poly& p) { return Poly::constant(s) * p; }

std::string to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (p[n].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = to_string(p[n]);
        if (p[n].re != 0 && p[n].im != 0) c = "(" + c + ")";
        if (n == 0) s += c;
        else s += c + "*" + var + (n > 1 ? "^" + std::to_string(n) : "");
    }
    return s;
}

Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= static_cast<unsigned long>(k);
    return r;
}

Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace uf::h1
