#ifndef CHROMA_POLY_LAB_HPP
#define CHROMA_POLY_LAB_HPP

#include <cstdint>
#include <vector>

#include "chroma/ints.hpp"
#include "chroma/polynomial.hpp"

namespace chroma {

// Face counts by dimension: entry 0 is f_{-1} (=1 for any complex with at
// least the empty face), entry i is f_{i-1}.
using FVec = std::vector<Int>;
// h_0..h_e
using HVec = std::vector<Int>;

// Numerator W of sum_{n>=0} p(n) t^n = W(t) / (1-t)^D.
// The denominator exponent D is explicit because different identities need
// different choices (D = d+1 for chromatic polynomials, D = d for tails).
// Requires degree(p) <= D-1, which makes degree(W) <= D-1 as well.
IntPolynomial w_transform(const IntPolynomial& p, int denominator_power);

// A_d(t) with sum_{n>=0} n^d t^n = A_d(t)/(1-t)^{d+1}, by the standard
// descent-count recurrence.  A_0 = 1.
IntPolynomial eulerian_polynomial(int d);

// sum_{k=0}^{d} C(n+k, d) * w_{d-k}, the binomial-basis evaluation of the
// polynomial whose numerator over (1-t)^{d+1} is w.
Int chromatic_from_w(const IntPolynomial& w, int d, std::int64_t n);

// n^d - chi; requires chi monic of degree exactly d.  The leading
// coefficient of the result is the edge count.
IntPolynomial tail_polynomial(const IntPolynomial& chi, int d);

// h_k = sum_{i=0}^{k} (-1)^{k-i} C(e-i, k-i) f_{i-1} for k = 0..e, where e
// is the maximum face cardinality (dimension + 1).  f must have e+1 entries.
HVec f_to_h(const FVec& f, int e);
// Inverse transform: f_{k-1} = sum_i C(e-i, k-i) h_i.
FVec h_to_f(const HVec& h, int e);

}  // namespace chroma

#endif
