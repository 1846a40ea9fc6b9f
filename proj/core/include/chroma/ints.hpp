#ifndef CHROMA_INTS_HPP
#define CHROMA_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace chroma {

// All counts and coefficients are exact; nothing in this library uses
// floating point.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) by the multiplicative formula; every intermediate division is
// exact.  Returns 0 for k < 0 and for 0 <= n < k.
inline Int binomial(const Int& n, std::int64_t k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n >= 0 && n < k) return 0;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int binomial(std::int64_t n, std::int64_t k) { return binomial(Int(n), k); }

// n(n-1)...(n-k+1)
inline Int falling_factorial(const Int& n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

}  // namespace chroma

#endif
