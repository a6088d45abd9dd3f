#pragma once

#include "pingpong/cones.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/unipotent.hpp"
#include "pingpong/words.hpp"

#include <optional>
#include <string>
#include <vector>

// Ping-pong tables X = C u -C, Y = R X u ... u R^{m-1} X and their
// verification. Hypothesis (2) of the ping-pong lemma holds by construction
// (Y is defined as the union of rotated copies), so a table is valid iff
//   (1)  X and R^i X are disjoint for i = 1..m-1, and
//   (3)  T^k R^i maps X into X for every i and every k != 0.
// For order-2 T only k = 1 occurs. For infinite-order T the matrix T is
// unipotent with (T - I)^2 = 0, so T^k = I + k (T - I) exactly and the
// containment for all k reduces to an affine family of entrywise sign
// conditions, decided in closed form.

namespace pingpong {

struct PingPongTable {
    SimplicialCone cone;
    Mat rotation;
    long rotation_order;
    Mat inv;
    InvOrder inv_order;
};

inline long matrix_order(const Mat& m, long bound = 64) {
    Mat p = m;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    throw InvalidOrder("matrix has no order <= bound");
}

inline PingPongTable make_table(Mat rotation, Mat inv, SimplicialCone cone) {
    if (inv.is_identity()) throw InvalidOrder("inv generator is trivial");
    const long m = matrix_order(rotation);
    const InvOrder io = (inv * inv).is_identity() ? InvOrder::Order2 : InvOrder::Infinite;
    return PingPongTable{std::move(cone), std::move(rotation), m, std::move(inv), io};
}

inline PingPongTable make_table(const HGTriple& h, SimplicialCone cone) {
    return make_table(h.R, h.T, std::move(cone));
}

enum class CheckKind { Disjoint, Contain, ContainFamily };

struct CheckRecord {
    std::string word;  // e.g. "R^2", "T*R", "T^k*R^2 (k>=1)"
    CheckKind kind;
    Mat matrix;  // cone-coordinate matrix (the family base for ContainFamily)
    std::optional<OrthantMapClass> cls;       // Disjoint / Contain checks
    std::optional<AffineFamilyResult> family; // ContainFamily checks
    bool pass = false;
};

struct PingPongWitness {
    std::string word;
    Vec point;         // in the open cone (or its closure)
    Vec point_coords;  // cone coordinates of point
    Vec image;         // word * point
    Vec image_coords;  // cone coordinates of image
    bool disjointness_violation = false;  // true: image lands back in +/-C
};

struct Verdict {
    bool valid = false;
    std::vector<CheckRecord> checks;
    std::optional<PingPongWitness> witness;
    // Reported for infinite-order T: whether T maps the half-cone C into
    // itself (the 4D tables have this; the 2D one does not, and validity
    // there rests on the affine-family certificates instead).
    std::optional<bool> inv_halfcone_selfmap;
};

namespace detail {

inline Vec ones(std::size_t n) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1;
    return v;
}

inline PingPongWitness make_witness(const PingPongTable& t, const std::string& word, const Mat& ambient,
                                    const Vec& coords_point, bool disjointness) {
    PingPongWitness w;
    w.word = word;
    w.point_coords = coords_point;
    w.point = t.cone.basis() * coords_point;
    w.image = ambient * w.point;
    w.image_coords = cone_coords(t.cone, w.image);
    w.disjointness_violation = disjointness;
    return w;
}

}  // namespace detail

inline Verdict verify(const PingPongTable& t) {
    if (!t.cone.full_dimensional()) throw DegenerateCone("ping-pong cone must be full-dimensional");
    Verdict v;
    v.valid = true;
    const Mat binv = inverse(t.cone.basis());
    const Mat& b = t.cone.basis();
    auto in_coords = [&](const Mat& m) { return binv * m * b; };

    std::vector<Mat> rot_pow(static_cast<std::size_t>(t.rotation_order));
    rot_pow[0] = Mat::identity(t.rotation.rows());
    for (long i = 1; i < t.rotation_order; ++i)
        rot_pow[static_cast<std::size_t>(i)] = rot_pow[static_cast<std::size_t>(i - 1)] * t.rotation;

    auto power_word = [&](long i) {
        return i == 1 ? std::string("R") : "R^" + std::to_string(i);
    };

    // (1) X and R^i X disjoint
    for (long i = 1; i < t.rotation_order; ++i) {
        CheckRecord rec;
        rec.word = power_word(i);
        rec.kind = CheckKind::Disjoint;
        rec.matrix = in_coords(rot_pow[static_cast<std::size_t>(i)]);
        rec.cls = classify_orthant_map(rec.matrix);
        rec.pass = rec.cls->disjoint();
        if (!rec.pass && !v.witness) {
            Vec coords = rec.cls->witness ? *rec.cls->witness : detail::ones(t.cone.dim());
            v.witness = detail::make_witness(t, rec.word, rot_pow[static_cast<std::size_t>(i)],
                                             coords, true);
        }
        v.valid = v.valid && rec.pass;
        v.checks.push_back(std::move(rec));
    }

    // (3) T^k R^i X inside X
    if (t.inv_order == InvOrder::Order2) {
        for (long i = 1; i < t.rotation_order; ++i) {
            CheckRecord rec;
            rec.word = "T*" + power_word(i);
            rec.kind = CheckKind::Contain;
            const Mat ambient = t.inv * rot_pow[static_cast<std::size_t>(i)];
            rec.matrix = in_coords(ambient);
            rec.cls = classify_orthant_map(rec.matrix);
            rec.pass = rec.cls->maps_into();
            if (!rec.pass && !v.witness) {
                auto coords = containment_violation_witness(rec.matrix);
                if (coords) v.witness = detail::make_witness(t, rec.word, ambient, *coords, false);
            }
            v.valid = v.valid && rec.pass;
            v.checks.push_back(std::move(rec));
        }
    } else {
        const Mat tmi = t.inv - Mat::identity(t.inv.rows());
        if (!(tmi * tmi).is_zero())
            throw NotUnipotent("infinite-order generator needs (T - I)^2 = 0 for the all-powers check");
        const Mat a_tmi = in_coords(tmi);
        for (long i = 1; i < t.rotation_order; ++i) {
            const Mat a_ri = in_coords(rot_pow[static_cast<std::size_t>(i)]);
            const Mat slope = a_tmi * a_ri;
            for (int dir : {+1, -1}) {
                CheckRecord rec;
                rec.word = (dir > 0 ? "T^k*" : "T^-k*") + power_word(i) + " (k>=1)";
                rec.kind = CheckKind::ContainFamily;
                rec.matrix = a_ri;
                rec.family = classify_affine_orthant_family(a_ri, slope * Rat(dir));
                rec.pass = rec.family->all_contained;
                if (!rec.pass && !v.witness) {
                    const long k = rec.family->first_bad_k;
                    const Mat bad = a_ri + slope * Rat(dir * k);
                    const Mat ambient =
                        (Mat::identity(t.inv.rows()) + tmi * Rat(dir * k)) *
                        rot_pow[static_cast<std::size_t>(i)];
                    const std::string word = "T^" + std::to_string(dir * k) + "*" + power_word(i);
                    auto coords = containment_violation_witness(bad);
                    if (coords) v.witness = detail::make_witness(t, word, ambient, *coords, false);
                }
                v.valid = v.valid && rec.pass;
                v.checks.push_back(std::move(rec));
            }
        }
        v.inv_halfcone_selfmap = classify_orthant_map(in_coords(t.inv)).kind == MapKind::MapsIntoPlus;
    }
    return v;
}

// Witness search: nullopt means the table could not be falsified (verify
// accepts it).
inline std::optional<PingPongWitness> falsify(const PingPongTable& t) {
    Verdict v = verify(t);
    if (v.valid) return std::nullopt;
    return v.witness;
}

// Bounded-length consequence of freeness: no nontrivial reduced word in
// <R> * <T> of length <= max_len evaluates to the identity matrix.
inline InjectivityReport free_product_consequence_check(const PingPongTable& t, long max_len,
                                                        long exp_bound = 3) {
    WordEnumParams p{t.rotation_order, t.inv_order, max_len, exp_bound};
    return identity_scan(t.rotation, t.inv, p);
}

}  // namespace pingpong
