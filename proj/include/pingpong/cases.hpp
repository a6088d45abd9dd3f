#pragma once

#include "pingpong/cones.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/table.hpp"
#include "pingpong/unipotent.hpp"
#include "pingpong/uniqueness.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

// The boundary cases around the 3D table: the (essentially unique)
// two-dimensional table, and the four-dimensional Brav-Thomas table built
// from the logarithms P = log(TR), Q = log(T^{-1} R^{-1}) applied to
// x = (0, 7, -2, 7). Everything here is decided by our own procedures; the
// published values are expectations to verify, never assumptions.

namespace pingpong {

struct BravThomasData {
    HGTriple h;  // n = 4
    Mat P, Q;    // log(TR), log(T^-1 R^-1); both nilpotent of index 4
    Vec x, Px, P2x, P3x, Qx, Q2x, Q3x;
    SimplicialCone c_plus, c_minus;
    Mat S;  // change of basis to the original Brav-Thomas coordinates
};

inline BravThomasData build_bt() {
    HGTriple h = build_generators(4);
    const Mat TR = h.T * h.R;
    const Mat TinvRinv = inverse(h.R * h.T);
    Mat P = unipotent_log(TR);
    Mat Q = unipotent_log(TinvRinv);
    Vec x{0, 7, -2, 7};
    Vec Px = P * x;
    Vec P2x = P * Px;
    Vec P3x = P * P2x;
    Vec Qx = Q * x;
    Vec Q2x = Q * Qx;
    Vec Q3x = Q * Q2x;
    SimplicialCone c_plus = SimplicialCone::from_generators({x, Px, P2x, P3x});
    SimplicialCone c_minus = SimplicialCone::from_generators({x, Qx, Q2x, Q3x});
    Mat S{{0, 0, 0, 1}, {-5, 5, 1, -3}, {5, -5, -2, 3}, {0, 5, 1, -1}};
    return BravThomasData{std::move(h), std::move(P),  std::move(Q),     std::move(x),
                          std::move(Px), std::move(P2x), std::move(P3x), std::move(Qx),
                          std::move(Q2x), std::move(Q3x), std::move(c_plus),
                          std::move(c_minus), std::move(S)};
}

struct BT4PowerCheck {
    long k;
    long i;
    std::string source;  // "C+" or "C-"
    int sign;            // orientation of the target half (0 on failure)
    bool pass;
};

struct BT4DisjointCheck {
    long i;
    std::string src, dst;
    MapKind kind;
    bool pass;
};

struct BT4Report {
    // T Cbar+ inside Cbar+ and T^-1 Cbar- inside Cbar-, decided by entrywise
    // nonnegativity of the cone-coordinate matrices (which is necessary and
    // sufficient for closed simplicial containment).
    bool t_cplus_contained = false;
    bool tinv_cminus_contained = false;
    std::string containment_path = "entrywise";
    std::vector<BT4PowerCheck> power_checks;      // T^k R^i (gens of C+/-) in +/- Cbar+, k > 0
    std::vector<BT4PowerCheck> power_checks_neg;  // T^-k ... in +/- Cbar-
    std::vector<BT4DisjointCheck> disjoint_checks;
    bool rotation_order_five = false;
    bool all_pass = false;
};

namespace detail {

// entrywise test: does A map the open orthant into one open half-orthant?
inline std::pair<bool, int> entrywise_half(const Mat& a) {
    const auto rs = row_signs(a);
    bool nonneg = true, nonpos = true;
    for (const auto& r : rs) {
        if (r.zero) return {false, 0};
        if (!r.nonneg) nonneg = false;
        if (!r.nonpos) nonpos = false;
    }
    if (nonneg) return {true, +1};
    if (nonpos) return {true, -1};
    return {false, 0};
}

// all generators of src map under m into one orientation of dst's closure
inline std::pair<bool, int> maps_into_closed_half(const SimplicialCone& dst, const Mat& m,
                                                  const SimplicialCone& src) {
    const Mat a = cone_matrix_between(dst, src, m);
    bool nonneg = true, nonpos = true;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const int s = sign(a(i, j));
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
    if (nonneg) return {true, +1};
    if (nonpos) return {true, -1};
    return {false, 0};
}

}  // namespace detail

inline BT4Report verify_bt_table(const BravThomasData& bt) {
    BT4Report rep;
    rep.rotation_order_five = bt.h.R.pow(5).is_identity() && !bt.h.R.pow(1).is_identity();

    rep.t_cplus_contained = detail::maps_into_closed_half(bt.c_plus, bt.h.T, bt.c_plus) ==
                            std::pair<bool, int>{true, +1};
    rep.tinv_cminus_contained = detail::maps_into_closed_half(bt.c_minus, inverse(bt.h.T),
                                                              bt.c_minus) ==
                                std::pair<bool, int>{true, +1};

    const std::array<const SimplicialCone*, 2> cones{&bt.c_plus, &bt.c_minus};
    const std::array<const char*, 2> names{"C+", "C-"};

    // T^k Y inside +/- Cbar+ and T^-k Y inside +/- Cbar- for k = 1..3:
    // mapped generators of each piece R^i C^s must land in one closed half.
    for (long k = 1; k <= 3; ++k) {
        const Mat tk = bt.h.T.pow(k);
        const Mat tnk = inverse(bt.h.T).pow(k);
        for (long i = 1; i <= 4; ++i) {
            const Mat ri = bt.h.R.pow(i);
            for (std::size_t s = 0; s < 2; ++s) {
                auto [okp, sgp] = detail::maps_into_closed_half(bt.c_plus, tk * ri, *cones[s]);
                rep.power_checks.push_back({k, i, names[s], sgp, okp});
                auto [okm, sgm] = detail::maps_into_closed_half(bt.c_minus, tnk * ri, *cones[s]);
                rep.power_checks_neg.push_back({k, i, names[s], sgm, okm});
            }
        }
    }

    // X and R^i X disjoint, X = +/-C+ u +/-C-: all source/destination pairs.
    for (long i = 1; i <= 4; ++i) {
        const Mat ri = bt.h.R.pow(i);
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t d = 0; d < 2; ++d) {
                const Mat a = cone_matrix_between(*cones[d], *cones[s], ri);
                const auto cls = classify_orthant_map(a);
                rep.disjoint_checks.push_back({i, names[s], names[d], cls.kind, cls.disjoint()});
            }
    }

    rep.all_pass = rep.rotation_order_five && rep.t_cplus_contained && rep.tinv_cminus_contained;
    for (const auto& c : rep.power_checks) rep.all_pass = rep.all_pass && c.pass;
    for (const auto& c : rep.power_checks_neg) rep.all_pass = rep.all_pass && c.pass;
    for (const auto& c : rep.disjoint_checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

struct SConjReport {
    Vec v0, s_v0;
    bool is_positive_multiple = false;
    Rat scalar;  // x = scalar^{-1} * S v0, i.e. S v0 = scalar * x
};

// S v0 is a positive scalar multiple of x for the Brav-Thomas basis vector
// v0 = (0, 1, -25/12, 0).
inline SConjReport verify_s_conjugation(const BravThomasData& bt, std::optional<Vec> v0_in = {}) {
    SConjReport rep;
    if (v0_in) {
        rep.v0 = *v0_in;
    } else {
        rep.v0 = Vec(4);
        rep.v0[1] = 1;
        rep.v0[2] = rat(-25, 12);
    }
    rep.s_v0 = bt.S * rep.v0;
    auto mult = multiple_of(rep.s_v0, bt.x);
    if (mult && *mult > 0) {
        rep.is_positive_multiple = true;
        rep.scalar = *mult;
    }
    return rep;
}

struct FourthGenSearch {
    long bound = 0;
    unsigned long long candidates = 0;
    unsigned long long non_simplicial = 0;
    unsigned long long rejected = 0;
    std::vector<Vec> survivors;  // expected empty
};

// Scans integer y in [-bound, bound]^4 for a cone(P^3 x, Q^3 x, P^2 x, y)
// giving a valid single-cone table X = +/-C, Y = R X u ... u R^4 X. The
// full verifier runs on whatever passes a cheap k = 1 containment filter.
inline FourthGenSearch search_fourth_generator(const BravThomasData& bt, long bound) {
    if (bound < 0) throw EmptyGrid("negative search bound");
    FourthGenSearch res;
    res.bound = bound;

    const Mat TR1 = bt.h.T * bt.h.R;
    std::vector<Vec> fixed{bt.P3x, bt.Q3x, bt.P2x};
    Vec y(4);
    for (long y0 = -bound; y0 <= bound; ++y0)
        for (long y1 = -bound; y1 <= bound; ++y1)
            for (long y2 = -bound; y2 <= bound; ++y2)
                for (long y3 = -bound; y3 <= bound; ++y3) {
                    ++res.candidates;
                    y[0] = y0;
                    y[1] = y1;
                    y[2] = y2;
                    y[3] = y3;
                    Mat b = Mat::from_columns({fixed[0], fixed[1], fixed[2], y});
                    Mat binv;
                    try {
                        binv = inverse(b);
                    } catch (const SingularMatrix&) {
                        ++res.non_simplicial;
                        continue;
                    }
                    // quick filter: T R must already map the orthant into a
                    // half; the entrywise criterion decides that alone
                    if (!detail::entrywise_half(binv * TR1 * b).first) {
                        ++res.rejected;
                        continue;
                    }
                    SimplicialCone cone(b);
                    if (verify(make_table(bt.h, cone)).valid)
                        res.survivors.push_back(y);
                    else
                        ++res.rejected;
                }
    return res;
}

struct Case2DReport {
    Verdict verdict;
    bool eigen_u_fixed = false;    // TR u = u
    bool eigen_v_fixed = false;    // T^-1 R^-1 v = v
    bool coverage_all = false;     // sampled directions all in Xbar u Ybar
    long directions_checked = 0;
    std::optional<bool> halfcone;  // T C inside C (reported; false here)
};

// The n = 2 table: C = cone((-1,1), (1,2)), X = C u -C, Y = RX u R^2 X,
// verified with T of infinite order. Also checks that the closures of X and
// Y cover the plane, on a dense set of rational directions.
inline Case2DReport verify_2d_case(long directions = 360) {
    const HGTriple h = build_generators(2);
    const Vec u{-1, 1}, v{1, 2};
    const SimplicialCone cone = SimplicialCone::from_generators({u, v});

    Case2DReport rep;
    rep.eigen_u_fixed = (h.T * h.R * u == u);
    rep.eigen_v_fixed = (inverse(h.R * h.T) * v == v);

    const PingPongTable table = make_table(h, cone);
    rep.verdict = verify(table);
    rep.halfcone = rep.verdict.inv_halfcone_selfmap;

    // rational directions (1 - t^2, 2t) sweep the circle as t does the line;
    // add (-1, 0) for the missing limit direction
    const Mat binv = inverse(cone.basis());
    const Mat rinv = inverse(h.R);
    rep.coverage_all = true;
    for (long k = 0; k < directions; ++k) {
        Vec d(2);
        if (k == 0) {
            d[0] = -1;
        } else {
            const Rat t = Rat(2 * k - directions) / Rat(directions / 4);
            d[0] = 1 - t * t;
            d[1] = 2 * t;
        }
        bool covered = false;
        Vec probe = d;
        for (long i = 0; i < 3 && !covered; ++i) {
            const Vec c = binv * probe;  // coords of R^-i d
            bool nonneg = true, nonpos = true;
            for (std::size_t j = 0; j < c.dim(); ++j) {
                if (c[j] < 0) nonneg = false;
                if (c[j] > 0) nonpos = false;
            }
            covered = nonneg || nonpos;
            probe = rinv * probe;
        }
        if (!covered) rep.coverage_all = false;
        ++rep.directions_checked;
    }
    return rep;
}

}  // namespace pingpong
