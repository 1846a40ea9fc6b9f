#include "chroma/polynomial.hpp"

#include <algorithm>

#include "chroma/error.hpp"

namespace chroma {

IntPolynomial IntPolynomial::constant(Int v) {
    return IntPolynomial(std::vector<Int>{std::move(v)});
}

IntPolynomial IntPolynomial::monomial(int k, Int coeff) {
    std::vector<Int> c(k + 1);
    c[k] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> r = c_;
    for (auto& x : r) x *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted_down() const {
    if (is_zero()) return zero();
    if (c_[0] != 0)
        throw DomainError("cannot divide by t: nonzero constant term " + c_[0].str());
    return IntPolynomial(std::vector<Int>(c_.begin() + 1, c_.end()));
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
    if (is_zero()) return zero();
    std::vector<Int> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = c_[k];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.str();
        if (k > 0) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string IntPolynomial::coefficient_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].str();
    }
    return out;
}

}  // namespace chroma
