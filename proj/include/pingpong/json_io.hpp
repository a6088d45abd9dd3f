#pragma once

#include "pingpong/cases.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/projection.hpp"
#include "pingpong/table.hpp"
#include "pingpong/uniqueness.hpp"
#include "pingpong/words.hpp"

#include <json.hpp>

#include <string>

// JSON shapes for every report the CLI emits. All rationals render as
// canonical strings ("p" or "p/q"); ordered_json keeps field order fixed, so
// identical runs produce byte-identical documents.

namespace pingpong {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& x) { return to_string(x); }

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(to_string(v[i]));
    return a;
}

inline Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const OrthantMapClass& c) {
    Json j;
    j["class"] = to_string(c.kind);
    if (c.kind == MapKind::DisjointRowPair) {
        j["row_plus"] = c.row_plus;
        j["row_minus"] = c.row_minus;
    }
    if (c.witness) {
        j["witness"] = to_json(*c.witness);
        j["witness_sign"] = c.witness_sign;
    }
    return j;
}

inline Json to_json(const AffineFamilyResult& f) {
    Json j;
    j["all_contained"] = f.all_contained;
    j["sign_at_k1"] = f.sign_at_k1;
    j["tail_sign"] = f.tail_sign;
    j["checked_upto"] = f.checked_upto;
    if (!f.all_contained) j["first_bad_k"] = f.first_bad_k;
    return j;
}

inline Json to_json(const PingPongWitness& w) {
    Json j;
    j["word"] = w.word;
    j["point"] = to_json(w.point);
    j["point_coords"] = to_json(w.point_coords);
    j["image"] = to_json(w.image);
    j["image_coords"] = to_json(w.image_coords);
    j["violates"] = w.disjointness_violation ? "disjointness" : "containment";
    return j;
}

inline Json to_json(const CheckRecord& c) {
    Json j;
    j["word"] = c.word;
    switch (c.kind) {
        case CheckKind::Disjoint: j["kind"] = "disjoint"; break;
        case CheckKind::Contain: j["kind"] = "contain"; break;
        case CheckKind::ContainFamily: j["kind"] = "contain_all_powers"; break;
    }
    j["cone_matrix"] = to_json(c.matrix);
    if (c.cls) j["result"] = to_json(*c.cls);
    if (c.family) j["family"] = to_json(*c.family);
    j["pass"] = c.pass;
    return j;
}

inline Json to_json(const Verdict& v) {
    Json j;
    j["valid"] = v.valid;
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    if (v.witness) j["witness"] = to_json(*v.witness);
    if (v.inv_halfcone_selfmap) j["inv_halfcone_selfmap"] = *v.inv_halfcone_selfmap;
    return j;
}

inline Json to_json(const GeneratorsReport& r) {
    Json j;
    j["t_equals_u_rinv"] = r.t_equals_u_rinv;
    j["rank_t_minus_i_one"] = r.rank_t_minus_i_one;
    j["charpoly_r_ok"] = r.charpoly_r_ok;
    j["charpoly_u_ok"] = r.charpoly_u_ok;
    j["charpolys_coprime"] = r.charpolys_coprime;
    j["all"] = r.all();
    return j;
}

inline Json to_json(const InjectivityReport& r) {
    Json j;
    j["checked"] = r.checked;
    Json cols = Json::array();
    for (const auto& [a, b] : r.collisions) cols.push_back(Json::array({a, b}));
    j["collisions"] = std::move(cols);
    j["identity_words"] = r.identity_words;
    return j;
}

inline Json to_json(const ObstructionReport& r) {
    Json j;
    j["eta_sign_forced"] = r.eta_sign_forced;
    j["mu_squared_coefficient"] = to_string(r.mu_squared_coefficient);
    j["lambda_squared_coefficient"] = to_string(r.lambda_squared_coefficient);
    j["points_scanned"] = r.points_scanned;
    Json sv = Json::array();
    for (const auto& s : r.survivors)
        sv.push_back(Json::array({to_string(s[0]), to_string(s[1]), to_string(s[2])}));
    j["survivors"] = std::move(sv);
    j["survivors_are_expected"] = r.survivors_are_expected;
    j["falsified"] = r.falsified.size();
    Json wit = Json::array();
    for (const auto& f : r.falsified) {
        Json e;
        e["lambda"] = to_string(f.lambda);
        e["mu"] = to_string(f.mu);
        e["eta"] = to_string(f.eta);
        e["witness"] = to_json(f.witness);
        wit.push_back(std::move(e));
    }
    j["witnesses"] = std::move(wit);
    Json certs = Json::array();
    for (const auto& c : r.eta_certificates) {
        Json e;
        e["lambda"] = to_string(c.lambda);
        e["mu"] = to_string(c.mu);
        e["eta"] = to_string(c.eta);
        e["t"] = c.t;
        e["coords"] = Json::array({to_string(c.a), to_string(c.b), to_string(c.c)});
        certs.push_back(std::move(e));
    }
    j["eta_certificates"] = std::move(certs);
    return j;
}

inline Json to_json(const Q1Q2Report& r) {
    Json j;
    j["lambda1"] = to_string(r.lambda1);
    j["lambda2"] = to_string(r.lambda2);
    j["s"] = Json::array({to_string(r.s.a), to_string(r.s.b)});
    j["trs"] = Json::array({to_string(r.trs.a), to_string(r.trs.b)});
    j["theta"] = to_string(r.theta);
    j["a"] = to_string(r.a);
    j["b"] = to_string(r.b);
    j["c"] = to_string(r.c);
    j["d"] = to_string(r.d);
    j["closed_forms_match"] = r.closed_forms_match;
    j["opposite_signs"] = r.opposite_signs;
    return j;
}

inline Json to_json(const BT4Report& r) {
    Json j;
    j["rotation_order_five"] = r.rotation_order_five;
    j["t_cplus_contained"] = r.t_cplus_contained;
    j["tinv_cminus_contained"] = r.tinv_cminus_contained;
    j["containment_path"] = r.containment_path;
    auto powers = [](const std::vector<BT4PowerCheck>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) {
            Json e;
            e["k"] = c.k;
            e["i"] = c.i;
            e["source"] = c.source;
            e["sign"] = c.sign;
            e["pass"] = c.pass;
            a.push_back(std::move(e));
        }
        return a;
    };
    j["power_checks"] = powers(r.power_checks);
    j["power_checks_neg"] = powers(r.power_checks_neg);
    Json dis = Json::array();
    for (const auto& c : r.disjoint_checks) {
        Json e;
        e["i"] = c.i;
        e["src"] = c.src;
        e["dst"] = c.dst;
        e["class"] = to_string(c.kind);
        e["pass"] = c.pass;
        dis.push_back(std::move(e));
    }
    j["disjoint_checks"] = std::move(dis);
    j["all_pass"] = r.all_pass;
    return j;
}

inline Json to_json(const SConjReport& r) {
    Json j;
    j["v0"] = to_json(r.v0);
    j["s_v0"] = to_json(r.s_v0);
    j["is_positive_multiple"] = r.is_positive_multiple;
    if (r.is_positive_multiple) j["scalar"] = to_string(r.scalar);
    return j;
}

inline Json to_json(const FourthGenSearch& r) {
    Json j;
    j["bound"] = r.bound;
    j["candidates"] = r.candidates;
    j["non_simplicial"] = r.non_simplicial;
    j["rejected"] = r.rejected;
    Json sv = Json::array();
    for (const auto& y : r.survivors) sv.push_back(to_json(y));
    j["survivors"] = std::move(sv);
    return j;
}

inline Json to_json(const Case2DReport& r) {
    Json j;
    j["verdict"] = to_json(r.verdict);
    j["eigen_u_fixed"] = r.eigen_u_fixed;
    j["eigen_v_fixed"] = r.eigen_v_fixed;
    j["coverage_all"] = r.coverage_all;
    j["directions_checked"] = r.directions_checked;
    if (r.halfcone) j["halfcone_selfmap"] = *r.halfcone;
    return j;
}

inline Json to_json(const EigenGeneratorReport& r) {
    Json j;
    j["u_sign"] = r.u_sign;
    j["v_sign"] = r.v_sign;
    j["pass"] = r.pass;
    return j;
}

}  // namespace pingpong
