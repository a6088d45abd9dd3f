#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pingpong {

// Exact rational scalar. Backed by GMP's mpq_class: arbitrary precision,
// kept in lowest terms with a positive denominator. Everything in this
// library computes over Rat; there is no floating point in any decision
// path (figure emission converts to decimal at the very last step only).
using Rat = mpq_class;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "+p", "-p", "p/q". Decimal points and exponents are
// rejected: inputs are exact or they are errors.
inline Rat parse_rat(std::string_view text) {
    auto fail = [&] { return ParseError("not an exact rational: '" + std::string(text) + "'"); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw fail();
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '/'))
            throw fail();
    const auto slash = s.find('/');
    const std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    const std::string den = (slash == std::string::npos) ? std::string("1") : s.substr(slash + 1);
    if (den.find('/') != std::string::npos) throw fail();
    mpz_class n, d;
    try {
        n = mpz_class(num);
        d = mpz_class(den);
    } catch (const std::invalid_argument&) {
        throw fail();
    }
    if (d == 0) throw fail();
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Canonical rendering: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& x) { return x.get_str(); }

inline int sign(const Rat& x) { return sgn(x); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Smallest integer >= x. Values in this library are desk scale; callers
// assume the result fits in long.
inline long ceil_long(const Rat& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

inline long floor_long(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace pingpong
