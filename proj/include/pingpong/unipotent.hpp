#pragma once

#include "pingpong/linalg.hpp"
#include "pingpong/poly.hpp"

#include <vector>

// Unipotent calculus: M = I + N with N nilpotent makes log(M) a finite
// alternating sum and M^t an exact matrix polynomial in t.

namespace pingpong {

struct NotUnipotent : std::domain_error {
    using std::domain_error::domain_error;
};

// Smallest j with N^j = 0; nilpotency is checked by powering up to the
// dimension (Cayley-Hamilton caps the index there), never assumed.
inline std::size_t nilpotency_index(const Mat& n) {
    if (!n.square()) throw DimensionMismatch("nilpotency_index of non-square matrix");
    Mat p = Mat::identity(n.rows());
    for (std::size_t j = 0; j <= n.rows(); ++j) {
        if (p.is_zero()) return j;
        p = p * n;
    }
    throw NotUnipotent("matrix power (M - I)^dim is nonzero");
}

inline bool is_unipotent(const Mat& m) {
    if (!m.square()) return false;
    try {
        nilpotency_index(m - Mat::identity(m.rows()));
        return true;
    } catch (const NotUnipotent&) {
        return false;
    }
}

// log M = N - N^2/2 + N^3/3 - ...  with N = M - I, truncating at the
// nilpotency index.
inline Mat unipotent_log(const Mat& m) {
    const Mat n = m - Mat::identity(m.rows());
    const std::size_t idx = nilpotency_index(n);
    Mat acc(m.rows(), m.cols());
    Mat p = n;
    for (std::size_t k = 1; k < idx; ++k) {
        const Rat c = Rat((k % 2) ? 1 : -1) / Rat(static_cast<long>(k));
        acc = acc + p * c;
        p = p * n;
    }
    return acc;
}

// exp of a nilpotent matrix (finite sum).
inline Mat nilpotent_exp(const Mat& n) {
    const std::size_t idx = nilpotency_index(n);
    Mat acc = Mat::identity(n.rows());
    Mat p = Mat::identity(n.rows());
    Rat fact(1);
    for (std::size_t k = 1; k < idx; ++k) {
        p = p * n;
        fact *= Rat(static_cast<long>(k));
        acc = acc + p * (Rat(1) / fact);
    }
    return acc;
}

// Square matrix of univariate polynomials in t. Houses M^t for unipotent M.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(std::size_t n) : n_(n), e_(n * n) {}

    std::size_t dim() const { return n_; }
    UniPoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const UniPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    Mat eval(const Rat& t) const {
        Mat m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).eval(t);
        return m;
    }

    // coefficient of t^k as a matrix
    Mat coefficient(std::size_t k) const {
        Mat m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).coeff(k);
        return m;
    }

    int degree() const {
        int d = -1;
        for (const UniPoly& p : e_) d = std::max(d, p.degree());
        return d;
    }

    std::vector<UniPoly> apply(const Vec& v) const {
        if (v.dim() != n_) throw DimensionMismatch("PolyMat apply: dimensions");
        std::vector<UniPoly> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out[i] = out[i] + (*this)(i, j) * UniPoly(v[j]);
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<UniPoly> e_;
};

// M^t = exp(t log M) = sum_k t^k L^k / k!, exact; evaluating at integer
// t = k reproduces M^k (including negative k, since exp(-L) = M^{-1}).
inline PolyMat matrix_power_poly(const Mat& m) {
    const Mat l = unipotent_log(m);
    const std::size_t idx = nilpotency_index(l);
    PolyMat pm(m.rows());
    Mat p = Mat::identity(m.rows());
    Rat fact(1);
    for (std::size_t k = 0; k < idx || k == 0; ++k) {
        if (k > 0) {
            p = p * l;
            fact *= Rat(static_cast<long>(k));
        }
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Rat c = p(i, j) / fact;
                if (c == 0) continue;
                std::vector<Rat> mono(k + 1, Rat(0));
                mono[k] = c;
                pm(i, j) = pm(i, j) + UniPoly::from(std::move(mono));
            }
    }
    return pm;
}

// Coefficient vector of the highest power of t in Mt * q: the ray (up to
// positive scaling, sign carried by the vector) that the normalized orbit
// M^t q approaches as t grows.
inline Vec leading_direction(const PolyMat& mt, const Vec& q) {
    const std::vector<UniPoly> orbit = mt.apply(q);
    int top = -1;
    for (const UniPoly& p : orbit) top = std::max(top, p.degree());
    if (top < 0) throw ZeroVector("leading_direction: Mt * q is identically zero");
    Vec lead(mt.dim());
    for (std::size_t i = 0; i < orbit.size(); ++i) lead[i] = orbit[i].coeff(static_cast<std::size_t>(top));
    return lead;
}

}  // namespace pingpong
