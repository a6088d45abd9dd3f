#pragma once

#include "pingpong/generators.hpp"
#include "pingpong/multipoly.hpp"
#include "pingpong/table.hpp"
#include "pingpong/unipotent.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

// The uniqueness obstructions for the 3D cone: symbolic cone-coordinate
// systems for a perturbed third generator w' = lambda*u + mu*v + eta*w, and
// a grid falsification scan whose only survivors are lambda = mu = 0,
// eta > 0. The symbolic systems expose the decisive monomials: -4 mu^2 z in
// the b-coordinate of TR(q) and -4 lambda^2 z in the a'-coordinate of
// TR^{-1}(q), and the eta-forcing sign split of (TR)^t(v).

namespace pingpong {

struct EmptyGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline const Vec& cone_u() {
    static const Vec u{1, -2, 1};
    return u;
}
inline const Vec& cone_v() {
    static const Vec v{1, 0, 3};
    return v;
}
inline const Vec& cone_w() {
    static const Vec w{0, -1, 1};
    return w;
}

inline SimplicialCone paper_cone_3d() {
    return SimplicialCone::from_generators({cone_u(), cone_v(), cone_w()});
}

struct SymbolicTriple {
    MultiPoly a, b, c;
};

namespace detail {

// columns u, v, w' = lambda*u + mu*v + eta*w as MultiPoly entries
inline std::vector<std::vector<MultiPoly>> perturbed_basis(const MultiPoly& lambda,
                                                           const MultiPoly& mu,
                                                           const MultiPoly& eta) {
    const Vec &u = cone_u(), &v = cone_v(), &w = cone_w();
    std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
    for (std::size_t i = 0; i < 3; ++i) {
        m[i][0] = MultiPoly(u[i]);
        m[i][1] = MultiPoly(v[i]);
        m[i][2] = lambda * MultiPoly(u[i]) + mu * MultiPoly(v[i]) + eta * MultiPoly(w[i]);
    }
    return m;
}

// Cramer solve of basis * (a,b,c) = rhs, all entries MultiPoly. Returns the
// numerators (det with the respective column replaced); the caller divides
// by det(basis) or keeps it cleared.
inline std::array<MultiPoly, 3> cramer_numerators(const std::vector<std::vector<MultiPoly>>& basis,
                                                  const std::array<MultiPoly, 3>& rhs) {
    std::array<MultiPoly, 3> out;
    for (std::size_t col = 0; col < 3; ++col) {
        auto m = basis;
        for (std::size_t i = 0; i < 3; ++i) m[i][col] = rhs[i];
        out[col] = det(m);
    }
    return out;
}

}  // namespace detail

// Coordinates of (TR)^t(v) in the basis (u, v, w' = lambda*u + mu*v + eta*w),
// multiplied through by eta to stay polynomial: returns
//   (2 eta t^2 - 4 lambda t,  eta - 4 mu t,  4 t)
// as exact polynomials in {t, lambda, mu, eta}.
inline SymbolicTriple symbolic_coords_trt_v() {
    const HGTriple h = build_generators(3);
    const PolyMat trt = matrix_power_poly(h.T * h.R);
    const std::vector<UniPoly> orbit = trt.apply(cone_v());

    std::array<MultiPoly, 3> rhs;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly p;
        for (int k = 0; k <= orbit[i].degree(); ++k)
            p = p + MultiPoly::var("t", static_cast<unsigned>(k)) * orbit[i].coeff(static_cast<std::size_t>(k));
        rhs[i] = p;
    }
    const auto basis = detail::perturbed_basis(MultiPoly::var("lambda"), MultiPoly::var("mu"),
                                               MultiPoly::var("eta"));
    // det(basis) = 4*eta, so eta * coordinate = numerator / 4
    const auto nums = detail::cramer_numerators(basis, rhs);
    const Rat quarter(1, 4);
    return {nums[0] * quarter, nums[1] * quarter, nums[2] * quarter};
}

namespace detail {

// Exact coordinate triple of M(q), q = x*u + y*v + z*w', in the basis
// (u, v, w' = lambda*u + mu*v + w): eta is normalized to 1, so det = 4.
inline SymbolicTriple symbolic_coords_of(const Mat& m) {
    const auto basis = perturbed_basis(MultiPoly::var("lambda"), MultiPoly::var("mu"),
                                       MultiPoly(Rat(1)));
    // rhs = M * basis * (x, y, z)
    std::array<MultiPoly, 3> rhs;
    const std::array<const char*, 3> vars{"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly acc;
        for (std::size_t k = 0; k < 3; ++k) {
            MultiPoly mk;  // (M * basis)_{i,k}
            for (std::size_t j = 0; j < 3; ++j) mk = mk + basis[j][k] * m(i, j);
            acc = acc + mk * MultiPoly::var(vars[k]);
        }
        rhs[i] = acc;
    }
    const auto nums = cramer_numerators(basis, rhs);
    const Rat quarter(1, 4);
    return {nums[0] * quarter, nums[1] * quarter, nums[2] * quarter};
}

}  // namespace detail

// TR(q) coordinates; the b-component carries the -4 mu^2 z monomial.
inline SymbolicTriple symbolic_coords_tr_q() {
    const HGTriple h = build_generators(3);
    return detail::symbolic_coords_of(h.T * h.R);
}

// TR^{-1}(q) coordinates; the a-component carries the -4 lambda^2 z monomial.
inline SymbolicTriple symbolic_coords_trinv_q() {
    const HGTriple h = build_generators(3);
    return detail::symbolic_coords_of(h.T * inverse(h.R));
}

struct GridSpec {
    Rat lambda_lo = rat(-2), lambda_hi = rat(2);
    Rat mu_lo = rat(-2), mu_hi = rat(2);
    Rat eta_lo = rat(-2), eta_hi = rat(2);
    Rat step = rat(1, 2);
};

struct ScanWitness {
    Rat lambda, mu, eta;
    PingPongWitness witness;
};

struct EtaSignCertificate {
    Rat lambda, mu, eta;
    long t;          // (TR)^t(v) has a > 0 and c < 0 at this t
    Rat a, b, c;     // coordinates at that t
};

struct ObstructionReport {
    bool eta_sign_forced = false;  // every eta < 0 grid point carries a certificate
    Rat mu_squared_coefficient;      // coefficient of mu^2 z in b of TR(q)
    Rat lambda_squared_coefficient;  // coefficient of lambda^2 z in a of TR^-1(q)
    std::vector<std::array<Rat, 3>> survivors;  // sorted (lambda, mu, eta)
    std::vector<ScanWitness> falsified;
    std::vector<EtaSignCertificate> eta_certificates;
    unsigned long long points_scanned = 0;
    bool survivors_are_expected = true;  // all survivors have lambda = mu = 0, eta > 0
};

// Scans cone(u, v, lambda*u + mu*v + eta*w) over the grid. Every point off
// the lambda = mu = 0, eta > 0 ray must be falsified by the verifier; for
// eta < 0 an explicit (TR)^t(v) sign certificate is recorded as well.
inline ObstructionReport uniqueness_scan(const GridSpec& g) {
    if (g.step <= 0 || g.lambda_lo > g.lambda_hi || g.mu_lo > g.mu_hi || g.eta_lo > g.eta_hi)
        throw EmptyGrid("empty or inverted grid");
    const HGTriple h = build_generators(3);
    const Vec &u = cone_u(), &v = cone_v(), &w = cone_w();

    ObstructionReport rep;
    const SymbolicTriple tr = symbolic_coords_tr_q();
    const SymbolicTriple trinv = symbolic_coords_trinv_q();
    rep.mu_squared_coefficient = tr.b.coefficient({{"mu", 2}, {"z", 1}});
    rep.lambda_squared_coefficient = trinv.a.coefficient({{"lambda", 2}, {"z", 1}});

    const SymbolicTriple lim = symbolic_coords_trt_v();
    bool eta_ok = true;

    for (Rat lambda = g.lambda_lo; lambda <= g.lambda_hi; lambda += g.step)
        for (Rat mu = g.mu_lo; mu <= g.mu_hi; mu += g.step)
            for (Rat eta = g.eta_lo; eta <= g.eta_hi; eta += g.step) {
                if (eta == 0) continue;  // dependent generators
                ++rep.points_scanned;
                const Vec wp = u * lambda + v * mu + w * eta;
                const SimplicialCone cone = SimplicialCone::from_generators({u, v, wp});
                auto witness = falsify(make_table(h, cone));
                if (!witness) {
                    rep.survivors.push_back({lambda, mu, eta});
                    if (!(lambda == 0 && mu == 0 && eta > 0)) rep.survivors_are_expected = false;
                    continue;
                }
                rep.falsified.push_back({lambda, mu, eta, std::move(*witness)});
                if (eta < 0) {
                    // a(t) = 2t^2 - (4 lambda/eta) t turns positive past
                    // 2 lambda / eta; c(t) = 4t/eta stays negative.
                    long t = std::max(0L, floor_long(Rat(2) * lambda / eta)) + 1;
                    std::map<std::string, Rat> at{{"t", Rat(t)}, {"lambda", lambda}, {"mu", mu}, {"eta", eta}};
                    EtaSignCertificate cert{lambda, mu, eta, t, lim.a.eval(at) / eta,
                                            lim.b.eval(at) / eta, lim.c.eval(at) / eta};
                    if (!(cert.a > 0 && cert.c < 0)) eta_ok = false;
                    rep.eta_certificates.push_back(std::move(cert));
                }
            }
    rep.eta_sign_forced = eta_ok;
    if (rep.points_scanned == 0) throw EmptyGrid("grid contains no points");
    std::sort(rep.survivors.begin(), rep.survivors.end(),
              [](const auto& x, const auto& y) {
                  for (int i = 0; i < 3; ++i) {
                      if (x[i] < y[i]) return true;
                      if (x[i] > y[i]) return false;
                  }
                  return false;
              });
    return rep;
}

struct EigenGeneratorReport {
    int u_sign = 0;  // +1: some generator is a positive multiple of u, -1: of -u
    int v_sign = 0;
    bool pass = false;  // u and v present with a consistent orientation
};

// Pre-filter from the uniqueness argument: a candidate cone can only work
// if u and v (or -u and -v) appear among its generators up to positive scale.
inline EigenGeneratorReport eigen_generator_check(const SimplicialCone& c) {
    EigenGeneratorReport rep;
    for (const Vec& g : c.generators()) {
        if (rep.u_sign == 0) rep.u_sign = ray_sign(g, cone_u());
        if (rep.v_sign == 0) rep.v_sign = ray_sign(g, cone_v());
    }
    rep.pass = rep.u_sign != 0 && rep.u_sign == rep.v_sign;
    return rep;
}

}  // namespace pingpong
