#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hermlie {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt to_bigint(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_bigint: " + r.str() + " is not an integer");
    return numerator(r);
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline long to_long(const Rat& r) { return to_bigint(r).convert_to<long>(); }

/// "n/d" for proper fractions, plain "n" for integers.
inline std::string rat_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

/// Binomial coefficient; zero outside the triangle.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt num = 1, den = 1;
    for (BigInt i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace hermlie
