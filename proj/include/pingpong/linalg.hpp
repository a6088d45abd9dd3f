#pragma once

#include "pingpong/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Dense exact linear algebra over Rat. Dimensions here are tiny (2..6), so
// plain Gaussian elimination with first-nonzero pivoting is the whole story;
// there is no conditioning to worry about, only coefficient growth, which
// GMP absorbs.

namespace pingpong {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : e_(dim, Rat(0)) {}
    Vec(std::initializer_list<long> xs) {
        e_.reserve(xs.size());
        for (long v : xs) e_.emplace_back(v);
    }

    static Vec from(std::vector<Rat> entries) {
        Vec v;
        v.e_ = std::move(entries);
        return v;
    }

    // "1,-2,1" (commas and/or whitespace), entries exact rationals.
    static Vec parse(std::string_view text) {
        std::string item;
        std::vector<Rat> entries;
        auto flush = [&] {
            if (!item.empty()) {
                entries.push_back(parse_rat(item));
                item.clear();
            }
        };
        for (char c : text) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
                flush();
            else
                item += c;
        }
        flush();
        if (entries.empty()) throw ParseError("empty vector literal");
        return from(std::move(entries));
    }

    std::size_t dim() const { return e_.size(); }
    Rat& operator[](std::size_t i) { return e_[i]; }
    const Rat& operator[](std::size_t i) const { return e_[i]; }

    bool operator==(const Vec& o) const { return e_ == o.e_; }

    Vec operator+(const Vec& o) const {
        check_dim(o);
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] + o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        check_dim(o);
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] - o[i];
        return r;
    }
    Vec operator-() const {
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r[i] = -e_[i];
        return r;
    }
    Vec operator*(const Rat& s) const {
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] * s;
        return r;
    }
    friend Vec operator*(const Rat& s, const Vec& v) { return v * s; }

    Rat dot(const Vec& o) const {
        check_dim(o);
        Rat s(0);
        for (std::size_t i = 0; i < dim(); ++i) s += e_[i] * o[i];
        return s;
    }

    bool is_zero() const {
        for (const Rat& x : e_)
            if (x != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            s += to_string(e_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

private:
    void check_dim(const Vec& o) const {
        if (dim() != o.dim()) throw DimensionMismatch("vector dimensions differ");
    }
    std::vector<Rat> e_;
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    Mat(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            for (long v : row) a_.emplace_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) throw DimensionMismatch("no columns");
        Mat m(cols[0].dim(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].dim() != m.rows_) throw DimensionMismatch("ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) throw DimensionMismatch("no rows");
        Mat m(rows.size(), rows[0].dim());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != m.cols_) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    // Rows separated by ';', entries by ',' or whitespace: "0,0,-1; 1,0,-1; 0,1,-1".
    static Mat parse(std::string_view text) {
        std::vector<Vec> rows;
        std::string row;
        auto flush = [&] {
            bool blank = true;
            for (char c : row)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) rows.push_back(Vec::parse(row));
            row.clear();
        };
        for (char c : text) {
            if (c == ';')
                flush();
            else
                row += c;
        }
        flush();
        return from_rows(rows);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat operator+(const Mat& o) const {
        check_same(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Mat operator*(const Rat& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    friend Mat operator*(const Rat& s, const Mat& m) { return m * s; }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimensions");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Vec operator*(const Vec& v) const {
        if (cols_ != v.dim()) throw DimensionMismatch("matrix-vector dimensions");
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }
    bool is_identity() const { return square() && *this == identity(rows_); }

    Rat trace() const {
        if (!square()) throw DimensionMismatch("trace of non-square matrix");
        Rat s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    Mat pow(long k) const;  // defined after inverse()

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += to_string((*this)(i, j));
            }
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

private:
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix dimensions differ");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

namespace detail {

struct Echelon {
    Mat m;
    std::vector<std::size_t> pivot_cols;
    int swap_parity = 1;
};

// Row echelon form (reduced when requested). First nonzero pivot per column.
inline Echelon echelon(Mat m, bool reduced) {
    Echelon e{std::move(m), {}, 1};
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.m.cols() && r < e.m.rows(); ++c) {
        std::size_t p = r;
        while (p < e.m.rows() && e.m(p, c) == 0) ++p;
        if (p == e.m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < e.m.cols(); ++j) std::swap(e.m(p, j), e.m(r, j));
            e.swap_parity = -e.swap_parity;
        }
        const Rat piv = e.m(r, c);
        for (std::size_t j = c; j < e.m.cols(); ++j) e.m(r, j) /= piv;
        const std::size_t start = reduced ? 0 : r + 1;
        for (std::size_t i = start; i < e.m.rows(); ++i) {
            if (i == r || e.m(i, c) == 0) continue;
            const Rat f = e.m(i, c);
            for (std::size_t j = c; j < e.m.cols(); ++j) e.m(i, j) -= f * e.m(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace detail

inline std::size_t rank(const Mat& a) { return detail::echelon(a, false).pivot_cols.size(); }

inline Rat det(const Mat& a) {
    if (!a.square()) throw DimensionMismatch("determinant of non-square matrix");
    // Plain elimination without normalizing pivots.
    Mat m = a;
    Rat d(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Unique solution of A x = b for square nonsingular A.
inline Vec solve(const Mat& a, const Vec& b) {
    if (!a.square()) throw DimensionMismatch("solve: matrix not square");
    if (a.rows() != b.dim()) throw DimensionMismatch("solve: rhs dimension");
    const std::size_t n = a.rows();
    Mat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto e = detail::echelon(std::move(aug), true);
    if (e.pivot_cols.size() != n || e.pivot_cols.back() == n)
        throw SingularMatrix("solve: singular matrix");
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.m(i, n);
    return x;
}

inline Mat inverse(const Mat& a) {
    if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto e = detail::echelon(std::move(aug), true);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i)
            throw SingularMatrix("inverse: singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

inline Mat Mat::pow(long k) const {
    if (!square()) throw DimensionMismatch("pow of non-square matrix");
    if (k < 0) return inverse(*this).pow(-k);
    Mat r = identity(rows_);
    Mat base = *this;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

// Basis of the null space { x : A x = 0 }.
inline std::vector<Vec> kernel_basis(const Mat& a) {
    auto e = detail::echelon(a, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Columns of A forming a basis of its column space.
inline std::vector<Vec> column_space_basis(const Mat& a) {
    auto e = detail::echelon(a, false);
    std::vector<Vec> basis;
    basis.reserve(e.pivot_cols.size());
    for (std::size_t c : e.pivot_cols) basis.push_back(a.col(c));
    return basis;
}

// Exact basis of col(A) ∩ col(B). Every kernel vector (x; y) of [A | -B]
// satisfies A x = B y, and those products sweep out the intersection.
inline std::vector<Vec> column_space_intersection(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("column_space_intersection: row counts differ");
    Mat stacked(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) stacked(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(i, a.cols() + j) = -b(i, j);
    }
    std::vector<Vec> candidates;
    for (const Vec& k : kernel_basis(stacked)) {
        Vec x(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) x[j] = k[j];
        Vec z = a * x;
        if (!z.is_zero()) candidates.push_back(std::move(z));
    }
    if (candidates.empty()) return {};
    return column_space_basis(Mat::from_columns(candidates));
}

// s such that a == s * b, if one exists (b nonzero).
inline std::optional<Rat> multiple_of(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("multiple_of: dimensions differ");
    std::size_t i = 0;
    while (i < b.dim() && b[i] == 0) ++i;
    if (i == b.dim()) return std::nullopt;
    Rat s = a[i] / b[i];
    if (a == b * s) return s;
    return std::nullopt;
}

// +1 / -1 if ray is a positive / negative multiple of reference, else 0.
inline int ray_sign(const Vec& ray, const Vec& reference) {
    auto s = multiple_of(ray, reference);
    if (!s) return 0;
    return sign(*s);
}

// Integer vector with coprime entries on the same ray (orientation kept).
inline Vec primitive(const Vec& v) {
    if (v.is_zero()) return v;
    mpz_class denlcm(1);
    for (std::size_t i = 0; i < v.dim(); ++i)
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), v[i].get_den().get_mpz_t());
    mpz_class numgcd(0);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        mpz_class scaled = v[i].get_num() * (denlcm / v[i].get_den());
        mpz_gcd(numgcd.get_mpz_t(), numgcd.get_mpz_t(), scaled.get_mpz_t());
    }
    const Rat f = Rat(denlcm) / Rat(numgcd);
    return v * f;
}

}  // namespace pingpong
