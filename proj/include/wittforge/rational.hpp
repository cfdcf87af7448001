#ifndef WITTFORGE_RATIONAL_HPP
#define WITTFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wittforge {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an operation would exceed a configured degree bound or
// truncation length.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed textual or JSON input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "a" or "a/b" with optional sign. Throws parse_error on anything else.
Rat rat_parse(const std::string& s);

// Decimal form, "a" or "a/b", denominator always positive.
std::string rat_str(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long e);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace wittforge

#endif
