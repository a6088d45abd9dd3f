#pragma once

#include "pingpong/fourier_motzkin.hpp"
#include "pingpong/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

// Simplicial cones and the exact decision procedures on them. The central
// object is the cone-coordinate matrix A = B^{-1} M B (B = generator
// columns): sign patterns of A decide how M carries the cone into +/- the
// positive orthant.
//
//   - A entrywise >= 0 with no zero row  <=>  A maps the open positive
//     orthant into itself (necessity follows by letting x approach the
//     basis vectors).
//   - one entrywise-nonnegative nonzero row and one entrywise-nonpositive
//     nonzero row certify that no positive x has Ax > 0 or Ax < 0.
//   - Fourier-Motzkin settles every remaining case exactly, producing
//     either a strictly positive witness or a certified infeasibility.

namespace pingpong {

struct DegenerateCone : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularBasis : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Openness { Open, Closed };

class SimplicialCone {
public:
    SimplicialCone(Mat generator_columns, Openness openness = Openness::Open)
        : basis_(std::move(generator_columns)), openness_(openness) {
        if (basis_.cols() == 0 || basis_.rows() == 0)
            throw DegenerateCone("cone needs at least one generator");
        if (rank(basis_) != basis_.cols())
            throw DegenerateCone("cone generators are linearly dependent");
    }

    static SimplicialCone from_generators(const std::vector<Vec>& gens,
                                          Openness openness = Openness::Open) {
        return SimplicialCone(Mat::from_columns(gens), openness);
    }

    const Mat& basis() const { return basis_; }
    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    bool full_dimensional() const { return basis_.rows() == basis_.cols(); }
    Openness openness() const { return openness_; }
    std::vector<Vec> generators() const {
        std::vector<Vec> g;
        g.reserve(dim());
        for (std::size_t j = 0; j < dim(); ++j) g.push_back(basis_.col(j));
        return g;
    }
    SimplicialCone negated() const { return SimplicialCone(-basis_, openness_); }

private:
    Mat basis_;
    Openness openness_;
};

// The unique coordinates of p in the generator basis (full-dimensional cone).
inline Vec cone_coords(const SimplicialCone& c, const Vec& p) {
    if (!c.full_dimensional()) throw SingularBasis("cone_coords needs a full-dimensional cone");
    return solve(c.basis(), p);
}

enum class Membership { InteriorPlus, InteriorMinus, BoundaryPlus, BoundaryMinus, Outside };

inline std::string to_string(Membership m) {
    switch (m) {
        case Membership::InteriorPlus: return "interior_plus";
        case Membership::InteriorMinus: return "interior_minus";
        case Membership::BoundaryPlus: return "boundary_plus";
        case Membership::BoundaryMinus: return "boundary_minus";
        case Membership::Outside: return "outside";
    }
    return "?";
}

// Classification of p relative to X = C u -C by coordinate signs.
inline Membership membership(const SimplicialCone& c, const Vec& p) {
    const Vec x = cone_coords(c, p);
    bool any_zero = false, any_pos = false, any_neg = false;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const int s = sign(x[i]);
        if (s == 0) any_zero = true;
        if (s > 0) any_pos = true;
        if (s < 0) any_neg = true;
    }
    if (any_pos && any_neg) return Membership::Outside;
    if (any_pos) return any_zero ? Membership::BoundaryPlus : Membership::InteriorPlus;
    if (any_neg) return any_zero ? Membership::BoundaryMinus : Membership::InteriorMinus;
    return Membership::BoundaryPlus;  // the origin sits in both closures
}

inline bool in_closed(Membership m, int orientation) {
    if (orientation >= 0 && (m == Membership::InteriorPlus || m == Membership::BoundaryPlus))
        return true;
    if (orientation <= 0 && (m == Membership::InteriorMinus || m == Membership::BoundaryMinus))
        return true;
    return false;
}

// The action of M in cone coordinates: B^{-1} M B.
inline Mat cone_matrix(const SimplicialCone& c, const Mat& m) {
    if (!c.full_dimensional()) throw SingularBasis("cone_matrix needs a full-dimensional cone");
    return inverse(c.basis()) * m * c.basis();
}

// Action of M from the coordinates of cone `src` to the coordinates of
// cone `dst`: B_dst^{-1} M B_src.
inline Mat cone_matrix_between(const SimplicialCone& dst, const SimplicialCone& src, const Mat& m) {
    return inverse(dst.basis()) * m * src.basis();
}

// Equality as cones: every generator of one is a positive multiple of a
// generator of the other (simplicial cones have unique extreme rays).
inline bool same_cone(const SimplicialCone& a, const SimplicialCone& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
    auto covered = [](const SimplicialCone& p, const SimplicialCone& q) {
        for (const Vec& g : p.generators()) {
            bool found = false;
            for (const Vec& h : q.generators())
                if (ray_sign(g, h) > 0) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

enum class MapKind {
    MapsIntoPlus,        // A(open orthant) inside the open positive orthant
    MapsIntoMinus,       // ... inside the open negative orthant
    DisjointRowPair,     // row-pair certificate: no positive x has Ax > 0 or Ax < 0
    DisjointElimination, // same conclusion, certified by Fourier-Motzkin
    Overlap              // witness x > 0 with Ax > 0 or Ax < 0
};

inline std::string to_string(MapKind k) {
    switch (k) {
        case MapKind::MapsIntoPlus: return "maps_into_plus";
        case MapKind::MapsIntoMinus: return "maps_into_minus";
        case MapKind::DisjointRowPair: return "disjoint_row_pair";
        case MapKind::DisjointElimination: return "disjoint_elimination";
        case MapKind::Overlap: return "overlap";
    }
    return "?";
}

struct OrthantMapClass {
    MapKind kind;
    std::size_t row_plus = 0, row_minus = 0;  // row-pair certificate
    std::optional<Vec> witness;               // overlap witness, strictly positive
    int witness_sign = 0;                     // sign of A * witness
    bool disjoint() const {
        return kind == MapKind::DisjointRowPair || kind == MapKind::DisjointElimination;
    }
    bool maps_into() const {
        return kind == MapKind::MapsIntoPlus || kind == MapKind::MapsIntoMinus;
    }
};

namespace detail {

// {x_i > 0 for all i} u {sign * (Ax)_i > 0 for all i}
inline std::vector<LinearInequality> orthant_system(const Mat& a, int sgn_image) {
    std::vector<LinearInequality> sys;
    const std::size_t n = a.cols();
    for (std::size_t i = 0; i < n; ++i) {
        LinearInequality q{Vec(n), Rat(0), true};
        q.coeffs[i] = 1;
        sys.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        LinearInequality q{Vec(n), Rat(0), true};
        for (std::size_t j = 0; j < n; ++j) q.coeffs[j] = Rat(sgn_image) * a(i, j);
        sys.push_back(std::move(q));
    }
    return sys;
}

struct RowSigns {
    bool nonneg = true, nonpos = true, zero = true;
};

inline std::vector<RowSigns> row_signs(const Mat& a) {
    std::vector<RowSigns> rs(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const int s = sign(a(i, j));
            if (s != 0) rs[i].zero = false;
            if (s < 0) rs[i].nonneg = false;
            if (s > 0) rs[i].nonpos = false;
        }
    return rs;
}

}  // namespace detail

// Decides, exactly, the relation between A (open positive orthant) and
// +/- (positive orthant). Fast paths first: the entrywise criterion, then
// the row-pair certificate; Fourier-Motzkin is the completeness fallback.
inline OrthantMapClass classify_orthant_map(const Mat& a) {
    const auto rs = detail::row_signs(a);
    bool all_nonneg = true, all_nonpos = true, zero_row = false;
    for (const auto& r : rs) {
        if (!r.nonneg) all_nonneg = false;
        if (!r.nonpos) all_nonpos = false;
        if (r.zero) zero_row = true;
    }
    if (all_nonneg && !zero_row) return {MapKind::MapsIntoPlus};
    if (all_nonpos && !zero_row) return {MapKind::MapsIntoMinus};

    std::optional<std::size_t> plus, minus;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].zero) continue;
        if (!plus && rs[i].nonneg) plus = i;
        if (!minus && rs[i].nonpos) minus = i;
    }
    if (plus && minus) {
        OrthantMapClass c{MapKind::DisjointRowPair};
        c.row_plus = *plus;
        c.row_minus = *minus;
        return c;
    }

    for (int s : {+1, -1}) {
        auto fe = strict_feasible(detail::orthant_system(a, s), a.cols());
        if (fe.feasible) {
            OrthantMapClass c{MapKind::Overlap};
            c.witness = std::move(fe.witness);
            c.witness_sign = s;
            return c;
        }
    }
    return {MapKind::DisjointElimination};
}

// For a failed "maps into" check, produce a concrete x > 0 whose image is
// not strictly one-signed: first look for a mixed-sign image, then for an
// image with a zero coordinate.
inline std::optional<Vec> containment_violation_witness(const Mat& a) {
    const std::size_t n = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            if (i == j) continue;
            std::vector<LinearInequality> sys;
            for (std::size_t v = 0; v < n; ++v) {
                LinearInequality q{Vec(n), Rat(0), true};
                q.coeffs[v] = 1;
                sys.push_back(std::move(q));
            }
            LinearInequality qi{Vec(n), Rat(0), true}, qj{Vec(n), Rat(0), true};
            for (std::size_t v = 0; v < n; ++v) {
                qi.coeffs[v] = a(i, v);
                qj.coeffs[v] = -a(j, v);
            }
            sys.push_back(std::move(qi));
            sys.push_back(std::move(qj));
            auto fe = strict_feasible(sys, n);
            if (fe.feasible) return fe.witness;
        }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<LinearInequality> sys;
        for (std::size_t v = 0; v < n; ++v) {
            LinearInequality q{Vec(n), Rat(0), true};
            q.coeffs[v] = 1;
            sys.push_back(std::move(q));
        }
        LinearInequality ge{Vec(n), Rat(0), false}, le{Vec(n), Rat(0), false};
        for (std::size_t v = 0; v < n; ++v) {
            ge.coeffs[v] = a(i, v);
            le.coeffs[v] = -a(i, v);
        }
        sys.push_back(std::move(ge));
        sys.push_back(std::move(le));
        auto fe = strict_feasible(sys, n);
        if (fe.feasible) return fe.witness;
    }
    return std::nullopt;
}

// Classification of the affine family A(k) = base + k * slope over integer
// k >= 1: does every member map the open positive orthant into + or - the
// open positive orthant? Exact: explicit checks up to the largest sign
// change, then a tail argument on the slope signs.
struct AffineFamilyResult {
    bool all_contained = false;
    long first_bad_k = 0;       // meaningful when !all_contained
    int sign_at_k1 = 0;         // +1 / -1 image orientation at k = 1
    int tail_sign = 0;          // orientation for all k beyond checked_upto
    long checked_upto = 0;
};

inline AffineFamilyResult classify_affine_orthant_family(const Mat& base, const Mat& slope) {
    AffineFamilyResult res;
    long kmax = 1;
    for (std::size_t i = 0; i < base.rows(); ++i)
        for (std::size_t j = 0; j < base.cols(); ++j)
            if (slope(i, j) != 0) {
                const Rat root = -base(i, j) / slope(i, j);
                kmax = std::max(kmax, floor_long(root) + 1);
            }
    res.checked_upto = kmax;

    auto classify_at = [&](long k) -> int {
        // +1 all entries >= 0 & no zero row, -1 symmetric, 0 otherwise
        Mat a = base + slope * Rat(k);
        const auto rs = detail::row_signs(a);
        bool nonneg = true, nonpos = true, zrow = false;
        for (const auto& r : rs) {
            if (!r.nonneg) nonneg = false;
            if (!r.nonpos) nonpos = false;
            if (r.zero) zrow = true;
        }
        if (zrow) return 0;
        if (nonneg) return +1;
        if (nonpos) return -1;
        return 0;
    };

    for (long k = 1; k <= kmax; ++k) {
        const int s = classify_at(k);
        if (k == 1) res.sign_at_k1 = s;
        if (s == 0) {
            res.first_bad_k = k;
            return res;
        }
    }

    // tail: beyond every root, each entry's sign is sign(slope), or
    // sign(base) where the slope vanishes
    bool nonneg = true, nonpos = true;
    std::size_t zero_rows = 0;
    for (std::size_t i = 0; i < base.rows(); ++i) {
        bool row_zero = true;
        for (std::size_t j = 0; j < base.cols(); ++j) {
            const int s = slope(i, j) != 0 ? sign(slope(i, j)) : sign(base(i, j));
            if (s != 0) row_zero = false;
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (row_zero) ++zero_rows;
    }
    if (zero_rows > 0 || (!nonneg && !nonpos)) {
        res.first_bad_k = kmax + 1;
        return res;
    }
    res.tail_sign = nonneg ? +1 : -1;
    res.all_contained = true;
    return res;
}

}  // namespace pingpong
