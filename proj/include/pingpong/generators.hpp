#pragma once

#include "pingpong/linalg.hpp"
#include "pingpong/poly.hpp"

// The hypergeometric triples R_n, U_n, T_n with parameters
// alpha = (1/(n+1), ..., n/(n+1)), beta = (0, ..., 0):
//   R_n = companion matrix of 1 + x + ... + x^n,
//   U_n = companion matrix of (x - 1)^n,
//   T_n = U_n R_n^{-1}.
// The companion-of-(x-1)^n construction pins down the alternating signs in
// the last column of U_n for every n.

namespace pingpong {

struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HGTriple {
    int n = 0;
    Mat R, U, T;
};

namespace detail {

// companion matrix of monic x^n + c[n-1] x^{n-1} + ... + c[0]
inline Mat companion(const std::vector<Rat>& c) {
    const std::size_t n = c.size();
    Mat m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i];
    return m;
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace detail

inline HGTriple build_generators(int n) {
    if (n < 2) throw InvalidOrder("hypergeometric triple needs n >= 2");
    const auto un = static_cast<unsigned>(n);

    std::vector<Rat> cr(un, Rat(1));  // 1 + x + ... + x^n
    Mat R = detail::companion(cr);

    // (x - 1)^n = sum_k C(n,k) (-1)^{n-k} x^k
    std::vector<Rat> cu(un);
    for (unsigned k = 0; k < un; ++k) {
        Rat c(detail::binomial(un, k));
        if ((un - k) % 2 == 1) c = -c;
        cu[k] = c;
    }
    Mat U = detail::companion(cu);

    Mat T = U * inverse(R);
    return HGTriple{n, std::move(R), std::move(U), std::move(T)};
}

struct GeneratorsReport {
    bool t_equals_u_rinv = false;
    bool rank_t_minus_i_one = false;
    bool charpoly_r_ok = false;   // 1 + x + ... + x^n
    bool charpoly_u_ok = false;   // (x - 1)^n
    bool charpolys_coprime = false;
    bool all() const {
        return t_equals_u_rinv && rank_t_minus_i_one && charpoly_r_ok && charpoly_u_ok &&
               charpolys_coprime;
    }
};

inline GeneratorsReport validate(const HGTriple& h) {
    GeneratorsReport rep;
    const std::size_t n = h.R.rows();
    rep.t_equals_u_rinv = (h.T * h.R == h.U);
    rep.rank_t_minus_i_one = (rank(h.T - Mat::identity(n)) == 1);

    const UniPoly pr = charpoly(h.R);
    const UniPoly pu = charpoly(h.U);
    std::vector<Rat> ones(n + 1, Rat(1));
    rep.charpoly_r_ok = (pr == UniPoly::from(std::move(ones)));
    UniPoly xm1{-1, 1};
    UniPoly target(Rat(1));
    for (std::size_t i = 0; i < n; ++i) target = target * xm1;
    rep.charpoly_u_ok = (pu == target);
    rep.charpolys_coprime = (gcd(pr, pu) == UniPoly(Rat(1)));
    return rep;
}

}  // namespace pingpong
