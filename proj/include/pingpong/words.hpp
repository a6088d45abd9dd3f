#pragma once

#include "pingpong/linalg.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

// Reduced words in the free products Z/m * Z/2 and Z/m * Z, their exact
// matrix evaluation, and bounded-length injectivity checks. A word is an
// alternating sequence of letters; reducedness is structural (no identity
// letters, no two consecutive letters from the same factor).

namespace pingpong {

struct InvalidWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Factor { Rot, Inv };
enum class InvOrder { Order2, Infinite };

struct Letter {
    Factor factor;
    long exponent;
    bool operator==(const Letter&) const = default;
};

class Word {
public:
    Word() = default;  // the empty word: identity

    // validates reducedness for the given factor structure
    static Word checked(std::vector<Letter> letters, long rot_order, InvOrder inv_order) {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            const Letter& l = letters[i];
            if (l.factor == Factor::Rot) {
                if (l.exponent < 1 || l.exponent >= rot_order)
                    throw InvalidWord("rotation exponent out of range 1..m-1");
            } else {
                if (inv_order == InvOrder::Order2 && l.exponent != 1)
                    throw InvalidWord("order-2 letter must have exponent 1");
                if (l.exponent == 0) throw InvalidWord("identity letter in word");
            }
            if (i > 0 && letters[i - 1].factor == l.factor)
                throw InvalidWord("adjacent letters from the same factor");
        }
        Word w;
        w.letters_ = std::move(letters);
        return w;
    }

    // concatenate then reduce (merging adjacent same-factor letters,
    // dropping identity letters, cascading)
    static Word reduced(std::vector<Letter> letters, long rot_order, InvOrder inv_order) {
        std::vector<Letter> out;
        auto norm = [&](Letter l) -> Letter {
            if (l.factor == Factor::Rot) {
                l.exponent %= rot_order;
                if (l.exponent < 0) l.exponent += rot_order;
            } else if (inv_order == InvOrder::Order2) {
                l.exponent %= 2;
                if (l.exponent < 0) l.exponent += 2;
            }
            return l;
        };
        for (Letter l : letters) {
            l = norm(l);
            if (!out.empty() && out.back().factor == l.factor) {
                out.back().exponent += l.exponent;
                out.back() = norm(out.back());
                if (out.back().exponent == 0) out.pop_back();
            } else if (l.exponent != 0) {
                out.push_back(l);
            }
        }
        Word w;
        w.letters_ = std::move(out);
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool operator==(const Word&) const = default;

    // product order left to right: "T*R^2" means T first, then R^2
    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (const Letter& l : letters_) {
            if (!s.empty()) s += "*";
            s += (l.factor == Factor::Rot) ? "R" : "T";
            if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
        }
        return s;
    }

private:
    std::vector<Letter> letters_;
};

inline Word concat_reduce(const Word& a, const Word& b, long rot_order, InvOrder inv_order) {
    std::vector<Letter> all = a.letters();
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return Word::reduced(std::move(all), rot_order, inv_order);
}

struct WordEnumParams {
    long rot_order = 4;
    InvOrder inv_order = InvOrder::Order2;
    long max_len = 0;
    long exp_bound = 1;  // |exponent| bound for infinite-order letters
};

// All reduced words of length <= max_len, each exactly once, empty word
// included, in a deterministic depth-first order.
inline void enumerate_words(const WordEnumParams& p, const std::function<void(const Word&)>& visit) {
    if (p.rot_order < 2) throw InvalidWord("rotation order must be >= 2");
    std::vector<Letter> stack;
    auto emit = [&] { visit(Word::checked(stack, p.rot_order, p.inv_order)); };

    std::function<void()> walk = [&] {
        emit();
        if (static_cast<long>(stack.size()) >= p.max_len) return;
        const bool can_rot = stack.empty() || stack.back().factor != Factor::Rot;
        const bool can_inv = stack.empty() || stack.back().factor != Factor::Inv;
        if (can_rot) {
            for (long e = 1; e < p.rot_order; ++e) {
                stack.push_back({Factor::Rot, e});
                walk();
                stack.pop_back();
            }
        }
        if (can_inv) {
            if (p.inv_order == InvOrder::Order2) {
                stack.push_back({Factor::Inv, 1});
                walk();
                stack.pop_back();
            } else {
                for (long e = -p.exp_bound; e <= p.exp_bound; ++e) {
                    if (e == 0) continue;
                    stack.push_back({Factor::Inv, e});
                    walk();
                    stack.pop_back();
                }
            }
        }
    };
    walk();
}

inline std::vector<Word> enumerate_words_vec(const WordEnumParams& p) {
    std::vector<Word> out;
    enumerate_words(p, [&](const Word& w) { out.push_back(w); });
    return out;
}

// Closed-form count via the alternating-sequence recurrence:
// a(l) = (#rot letters) * b(l-1), b(l) = (#inv letters) * a(l-1).
inline unsigned long long count_reduced_words(const WordEnumParams& p) {
    const unsigned long long rot = static_cast<unsigned long long>(p.rot_order - 1);
    const unsigned long long inv =
        p.inv_order == InvOrder::Order2 ? 1ull : 2ull * static_cast<unsigned long long>(p.exp_bound);
    unsigned long long total = 1;  // empty word
    unsigned long long end_rot = rot, end_inv = inv;
    for (long l = 1; l <= p.max_len; ++l) {
        if (l > 1) {
            const unsigned long long nr = rot * end_inv;
            const unsigned long long ni = inv * end_rot;
            end_rot = nr;
            end_inv = ni;
        }
        total += end_rot + end_inv;
    }
    return total;
}

// Exact matrix product of a word; verifies that rot_order really is the
// order of R before trusting exponent arithmetic.
inline Mat evaluate(const Word& w, const Mat& R, const Mat& T, long rot_order) {
    if (!R.pow(rot_order).is_identity())
        throw OrderMismatch("rotation order does not match the matrix");
    Mat acc = Mat::identity(R.rows());
    for (const Letter& l : w.letters())
        acc = acc * (l.factor == Factor::Rot ? R.pow(l.exponent) : T.pow(l.exponent));
    return acc;
}

struct InjectivityReport {
    unsigned long long checked = 0;
    std::vector<std::pair<std::string, std::string>> collisions;  // pairs of distinct words, equal matrices
    std::vector<std::string> identity_words;                      // nontrivial words evaluating to I
    bool clean() const { return collisions.empty() && identity_words.empty(); }
};

namespace detail {

inline std::string matrix_key(const Mat& m) {
    std::string k;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            k += m(i, j).get_str();
            k += '|';
        }
    return k;
}

// Depth-first enumeration carrying the running product, so each word costs
// one matrix multiplication.
inline void scan_products(const WordEnumParams& p, const Mat& R, const Mat& T,
                          const std::function<void(const Word&, const Mat&)>& visit) {
    if (!R.pow(p.rot_order).is_identity())
        throw OrderMismatch("rotation order does not match the matrix");
    std::vector<Mat> rot_pow(p.rot_order);
    for (long e = 1; e < p.rot_order; ++e) rot_pow[e] = R.pow(e);
    std::vector<Letter> stack;
    std::vector<Mat> prod{Mat::identity(R.rows())};

    std::function<void()> walk = [&] {
        visit(Word::checked(stack, p.rot_order, p.inv_order), prod.back());
        if (static_cast<long>(stack.size()) >= p.max_len) return;
        auto descend = [&](Letter l, const Mat& factor) {
            stack.push_back(l);
            prod.push_back(prod.back() * factor);
            walk();
            prod.pop_back();
            stack.pop_back();
        };
        if (stack.empty() || stack.back().factor != Factor::Rot)
            for (long e = 1; e < p.rot_order; ++e) descend({Factor::Rot, e}, rot_pow[e]);
        if (stack.empty() || stack.back().factor != Factor::Inv) {
            if (p.inv_order == InvOrder::Order2) {
                descend({Factor::Inv, 1}, T);
            } else {
                for (long e = -p.exp_bound; e <= p.exp_bound; ++e)
                    if (e != 0) descend({Factor::Inv, e}, T.pow(e));
            }
        }
    };
    walk();
}

}  // namespace detail

// Evaluates every reduced word of length <= max_len and reports any pair of
// distinct words with equal matrices and any nontrivial word equal to I.
inline InjectivityReport injectivity_check(const Mat& R, const Mat& T, const WordEnumParams& p) {
    InjectivityReport rep;
    std::unordered_map<std::string, std::string> seen;
    seen.reserve(static_cast<std::size_t>(count_reduced_words(p)) * 2);
    detail::scan_products(p, R, T, [&](const Word& w, const Mat& m) {
        ++rep.checked;
        if (!w.empty() && m.is_identity()) rep.identity_words.push_back(w.str());
        auto [it, inserted] = seen.try_emplace(detail::matrix_key(m), w.str());
        if (!inserted) rep.collisions.emplace_back(it->second, w.str());
    });
    return rep;
}

// Lighter scan used by the free-product consequence check: only looks for
// nontrivial words evaluating to the identity.
inline InjectivityReport identity_scan(const Mat& R, const Mat& T, const WordEnumParams& p) {
    InjectivityReport rep;
    detail::scan_products(p, R, T, [&](const Word& w, const Mat& m) {
        ++rep.checked;
        if (!w.empty() && m.is_identity()) rep.identity_words.push_back(w.str());
    });
    return rep;
}

}  // namespace pingpong
