#ifndef CHROMA_POLYNOMIAL_HPP
#define CHROMA_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/ints.hpp"

namespace chroma {

// Dense polynomial with exact integer coefficients, index = degree.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int v);
    // x^k
    static IntPolynomial monomial(int k, Int coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coefficients() const { return c_; }
    Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Int(0); }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int operator()(const Int& x) const;
    Int operator()(std::int64_t x) const { return (*this)(Int(x)); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial& o) const = default;

    // Divide by t; throws DomainError unless the constant term is zero.
    IntPolynomial shifted_down() const;
    // Multiply by t^k.
    IntPolynomial shifted_up(int k) const;

    // "n^3 - 3n^2 + 2n" with the given variable name
    std::string to_string(const std::string& var = "n") const;
    // "0 2 -3 1": coefficients ascending by degree ("0" for zero)
    std::string coefficient_string() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

}  // namespace chroma

#endif
