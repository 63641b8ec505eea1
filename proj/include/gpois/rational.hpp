#pragma once

// Exact arbitrary-precision integers and rationals (GMP-backed).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gpois {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Canonical "p" or "p/q" with q > 0.
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Accepts "p" or "p/q" with optional leading '-', q > 0.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size()) throw std::invalid_argument("malformed rational: " + text);
    bool seen_slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j + 1 == text.size() || j == i)
                throw std::invalid_argument("malformed rational: " + text);
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("malformed rational: " + text);
        }
    }
    Rat q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    if (q.get_den() < 0) throw std::invalid_argument("rational with negative denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace gpois
