#include "ultrafun/scalar.hpp"

#include <stdexcept>

namespace uf {

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("malformed rational literal '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9')
                throw std::invalid_argument("malformed rational literal '" + s + "'");
        }
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_int(s.substr(0, slash));
        Integer den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Scalar(num, den);
    }
    if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
        std::string whole = s.substr(0, dot_pos);
        std::string frac = s.substr(dot_pos + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        Integer w = parse_int(whole);
        if (frac.empty()) return Scalar(w);
        Integer f = parse_int(frac);
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Scalar r = Scalar(abs(Scalar(w))) + Scalar(f, scale);
        return negative ? Scalar(-r) : r;
    }
    return Scalar(parse_int(s));
}

std::string to_string(const Scalar& s) {
    if (denominator(s) == 1) return numerator(s).str();
    return numerator(s).str() + "/" + denominator(s).str();
}

double to_double(const Scalar& s) { return s.convert_to<double>(); }

Scalar max_abs(const Vector& v) {
    Scalar m = 0;
    for (const auto& x : v) {
        Scalar a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vector scaled(const Vector& v, const Scalar& s) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vector add(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector normalized_direction(const Vector& v) {
    Scalar m = max_abs(v);
    if (m == 0) throw std::invalid_argument("normalized_direction: zero vector");
    return scaled(v, Scalar(1) / m);
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace uf
