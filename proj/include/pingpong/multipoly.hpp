#pragma once

#include "pingpong/rat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

// Sparse multivariate polynomials over Rat with named variables. Used for
// the symbolic cone-coordinate systems in (lambda, mu, eta, x, y, z, t) and
// the plane-map identities; the variable sets stay tiny.

namespace pingpong {

// variable name -> exponent; exponents are always >= 1 (canonical form)
using Monomial = std::map<std::string, unsigned>;

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Rat constant) {
        if (constant != 0) terms_[{}] = std::move(constant);
    }
    explicit MultiPoly(long constant) : MultiPoly(Rat(constant)) {}

    static MultiPoly var(const std::string& name, unsigned power = 1) {
        MultiPoly p;
        if (power == 0) return MultiPoly(Rat(1));
        p.terms_[{{name, power}}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly operator*(const Rat& s) const {
        if (s == 0) return {};
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& p) { return p * s; }

    MultiPoly pow(unsigned k) const {
        MultiPoly r(Rat(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // substitute exact values for some variables
    MultiPoly subst(const std::map<std::string, Rat>& values) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Rat coeff = c;
            Monomial rest;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) {
                    rest[v] = e;
                } else {
                    for (unsigned i = 0; i < e; ++i) coeff *= it->second;
                }
            }
            r.add_term(rest, coeff);
        }
        return r;
    }

    Rat eval(const std::map<std::string, Rat>& values) const {
        return subst(values).constant_value();
    }

    MultiPoly rename(const std::map<std::string, std::string>& names) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (const auto& [v, e] : m) {
                auto it = names.find(v);
                nm[it == names.end() ? v : it->second] += e;
            }
            r.add_term(nm, c);
        }
        return r;
    }

    // polynomial coefficient of var^k (var removed from the result)
    MultiPoly coeff_of(const std::string& var, unsigned k) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            const unsigned e = (it == m.end()) ? 0 : it->second;
            if (e != k) continue;
            Monomial rest = m;
            rest.erase(var);
            r.add_term(rest, c);
        }
        return r;
    }

    unsigned degree(const std::string& var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += (sign(c) < 0) ? " - " : " + ";
            else if (sign(c) < 0) s += "-";
            const Rat a = abs(c);
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                s += to_string(a);
            else if (a == 1)
                s += mono;
            else
                s += to_string(a) + "*" + mono;
        }
        return s;
    }

private:
    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<Monomial, Rat> terms_;
};

// Laplace-expansion determinant for small matrices of polynomials.
inline MultiPoly det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(Rat(1));
    if (n == 1) return m[0][0];
    MultiPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace pingpong
