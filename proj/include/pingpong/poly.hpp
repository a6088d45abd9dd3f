#pragma once

#include "pingpong/linalg.hpp"
#include "pingpong/rat.hpp"

#include <string>
#include <utility>
#include <vector>

// Univariate polynomials over Rat, dense by ascending degree. Degrees in
// this project stay below the ambient dimension (<= 3 for the power
// polynomials), so density costs nothing.

namespace pingpong {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<long> ascending) {
        for (long v : ascending) c_.emplace_back(v);
        normalize();
    }
    explicit UniPoly(Rat constant) {
        c_.push_back(std::move(constant));
        normalize();
    }
    static UniPoly from(std::vector<Rat> ascending) {
        UniPoly p;
        p.c_ = std::move(ascending);
        p.normalize();
        return p;
    }
    static UniPoly x() { return UniPoly{0, 1}; }

    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rat& coeff(std::size_t k) const {
        static const Rat zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return from(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator-() const {
        std::vector<Rat> r(c_);
        for (Rat& x : r) x = -x;
        return from(std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return from(std::move(r));
    }
    UniPoly operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (Rat& x : r) x *= s;
        return from(std::move(r));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

    Rat eval(const Rat& t) const {
        Rat v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
        return v;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return from(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * (Rat(1) / leading());
    }

    // quotient and remainder of *this by d (d nonzero)
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly r = *this;
        std::vector<Rat> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = r.degree() - d.degree();
            const Rat f = r.leading() / d.leading();
            q[shift] = f;
            std::vector<Rat> sub(shift + d.c_.size(), Rat(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = f * d.c_[i];
            r = r - from(std::move(sub));
        }
        return {from(std::move(q)), r};
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (sign(c_[i]) < 0) ? " - " : " + ";
            else if (sign(c_[i]) < 0) s += "-";
            const Rat a = abs(c_[i]);
            const bool unit = (a == 1);
            if (i == 0) {
                s += to_string(a);
            } else {
                if (!unit) s += to_string(a) + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

// Monic characteristic polynomial det(xI - A) via Faddeev-LeVerrier;
// the recurrences only divide by integers, so everything stays exact.
inline UniPoly charpoly(const Mat& a) {
    if (!a.square()) throw DimensionMismatch("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    Mat m = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            m = a * m;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        }
        c[n - k] = -(a * m).trace() / Rat(static_cast<long>(k));
    }
    return UniPoly::from(std::move(c));
}

}  // namespace pingpong
