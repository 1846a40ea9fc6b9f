#include "chroma/poly_lab.hpp"

#include "chroma/error.hpp"

namespace chroma {

IntPolynomial w_transform(const IntPolynomial& p, int denominator_power) {
    const int D = denominator_power;
    if (D < 1) throw DomainError("denominator power must be positive");
    if (p.degree() > D - 1)
        throw DomainError("degree " + std::to_string(p.degree()) +
                          " too high for denominator power " + std::to_string(D));
    std::vector<Int> values(D + 1);
    for (int i = 0; i <= D; ++i) values[i] = p(Int(i));
    std::vector<Int> w(D + 1);
    for (int j = 0; j <= D; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            Int term = binomial(Int(D), j - i) * values[i];
            if ((j - i) % 2)
                acc -= term;
            else
                acc += term;
        }
        w[j] = acc;
    }
    return IntPolynomial(std::move(w));
}

IntPolynomial eulerian_polynomial(int d) {
    if (d < 0) throw DomainError("eulerian polynomial needs d >= 0");
    if (d == 0) return IntPolynomial::constant(1);
    // desc[j] = #permutations of [m] with j descents
    std::vector<Int> desc{1};
    for (int m = 2; m <= d; ++m) {
        std::vector<Int> next(m, 0);
        for (int j = 0; j < m; ++j) {
            if (j < static_cast<int>(desc.size())) next[j] += desc[j] * (j + 1);
            if (j >= 1 && j - 1 < static_cast<int>(desc.size()))
                next[j] += desc[j - 1] * (m - j);
        }
        desc = std::move(next);
    }
    std::vector<Int> coeffs(d + 1);
    for (int j = 0; j < d; ++j) coeffs[j + 1] = desc[j];
    return IntPolynomial(std::move(coeffs));
}

Int chromatic_from_w(const IntPolynomial& w, int d, std::int64_t n) {
    if (w.degree() > d)
        throw DomainError("w has degree " + std::to_string(w.degree()) +
                          " but only d+1 = " + std::to_string(d + 1) +
                          " coefficients are allowed");
    Int acc = 0;
    for (int k = 0; k <= d; ++k) acc += binomial(Int(n) + k, d) * w.coeff(d - k);
    return acc;
}

IntPolynomial tail_polynomial(const IntPolynomial& chi, int d) {
    if (chi.degree() != d || !chi.is_monic())
        throw DomainError("tail needs a monic polynomial of degree exactly " +
                          std::to_string(d));
    return IntPolynomial::monomial(d) - chi;
}

HVec f_to_h(const FVec& f, int e) {
    if (static_cast<int>(f.size()) != e + 1)
        throw DomainError("f-vector must have e+1 = " + std::to_string(e + 1) + " entries");
    HVec h(e + 1);
    for (int k = 0; k <= e; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(Int(e - i), k - i) * f[i];
            if ((k - i) % 2)
                acc -= term;
            else
                acc += term;
        }
        h[k] = acc;
    }
    return h;
}

FVec h_to_f(const HVec& h, int e) {
    if (static_cast<int>(h.size()) != e + 1)
        throw DomainError("h-vector must have e+1 = " + std::to_string(e + 1) + " entries");
    FVec f(e + 1);
    for (int k = 0; k <= e; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) acc += binomial(Int(e - i), k - i) * h[i];
        f[k] = acc;
    }
    return f;
}

}  // namespace chroma
