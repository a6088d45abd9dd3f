#pragma once

#include "pingpong/linalg.hpp"

#include <utility>
#include <vector>

// Fourier-Motzkin elimination over the rationals, honoring strictness.
// This is the completeness backstop behind the orthant-map classifier:
// systems here have at most a handful of variables, so the quadratic
// blowup of pair combinations never materializes.

namespace pingpong {

// coeffs . x + constant > 0 (strict) or >= 0
struct LinearInequality {
    Vec coeffs;
    Rat constant;
    bool strict = true;
};

inline bool satisfies(const LinearInequality& q, const Vec& x) {
    const Rat v = q.coeffs.dot(x) + q.constant;
    return q.strict ? v > 0 : v >= 0;
}

struct Feasibility {
    bool feasible = false;
    Vec witness;  // meaningful only when feasible
};

namespace detail {

// Substitute known values for variables >= known.dim() is wrong; here we
// substitute the tail x_{k}, ..., x_{n-1} that has already been assigned,
// producing a bound on x_{k-1}.
struct Bound {
    Rat value;
    bool strict;
    bool present = false;
};

}  // namespace detail

// Decides whether the system has a rational solution; if so, constructs a
// witness by back-substitution. Variables are eliminated from the highest
// index down.
inline Feasibility strict_feasible(const std::vector<LinearInequality>& system, std::size_t nvars) {
    for (const auto& q : system)
        if (q.coeffs.dim() != nvars) throw DimensionMismatch("strict_feasible: coefficient dimension");

    // stages[k] holds the system over variables 0..k-1
    std::vector<std::vector<LinearInequality>> stages(nvars + 1);
    stages[nvars] = system;

    for (std::size_t v = nvars; v-- > 0;) {
        const auto& cur = stages[v + 1];
        std::vector<LinearInequality> next;
        std::vector<const LinearInequality*> pos, neg;
        for (const auto& q : cur) {
            const int s = sign(q.coeffs[v]);
            if (s > 0)
                pos.push_back(&q);
            else if (s < 0)
                neg.push_back(&q);
            else {
                LinearInequality copy = q;
                Vec shorter(v);
                for (std::size_t j = 0; j < v; ++j) shorter[j] = q.coeffs[j];
                copy.coeffs = shorter;
                next.push_back(std::move(copy));
            }
        }
        for (const auto* p : pos)
            for (const auto* q : neg) {
                // p gives x_v > L, q gives x_v < U; combine to U - L > 0
                const Rat a = p->coeffs[v];   // > 0
                const Rat b = -q->coeffs[v];  // > 0
                LinearInequality comb;
                comb.coeffs = Vec(v);
                for (std::size_t j = 0; j < v; ++j)
                    comb.coeffs[j] = b * p->coeffs[j] + a * q->coeffs[j];
                comb.constant = b * p->constant + a * q->constant;
                comb.strict = p->strict || q->strict;
                next.push_back(std::move(comb));
            }
        stages[v] = std::move(next);
    }

    for (const auto& q : stages[0]) {
        const bool ok = q.strict ? q.constant > 0 : q.constant >= 0;
        if (!ok) return {false, Vec()};
    }

    // Back-substitute: pick x_0 from stages[1], then x_1 from stages[2], ...
    Vec x(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        detail::Bound lower, upper;
        for (const auto& q : stages[v + 1]) {
            const int s = sign(q.coeffs[v]);
            if (s == 0) continue;
            Rat rest = q.constant;
            for (std::size_t j = 0; j < v; ++j) rest += q.coeffs[j] * x[j];
            const Rat bound = -rest / q.coeffs[v];
            if (s > 0) {  // x_v > / >= bound
                if (!lower.present || bound > lower.value ||
                    (bound == lower.value && q.strict && !lower.strict)) {
                    lower = {bound, lower.present && bound == lower.value ? (lower.strict || q.strict)
                                                                          : q.strict,
                             true};
                }
            } else {  // x_v < / <= bound
                if (!upper.present || bound < upper.value ||
                    (bound == upper.value && q.strict && !upper.strict)) {
                    upper = {bound, upper.present && bound == upper.value ? (upper.strict || q.strict)
                                                                          : q.strict,
                             true};
                }
            }
        }
        if (lower.present && upper.present) {
            if (lower.value == upper.value)
                x[v] = lower.value;  // elimination guarantees both non-strict here
            else
                x[v] = (lower.value + upper.value) / 2;
        } else if (lower.present) {
            x[v] = lower.value + 1;
        } else if (upper.present) {
            x[v] = upper.value - 1;
        } else {
            x[v] = 0;
        }
    }
    return {true, std::move(x)};
}

}  // namespace pingpong
