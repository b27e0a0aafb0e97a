#pragma once

#include "hookpath/core.hpp"

#include <string>
#include <vector>

namespace hookpath {

// Dense integer polynomial in q, canonical form (no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);

    // coeffs()[i] is the coefficient of q^i.
    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int i) const;
    bool is_zero() const { return c_.empty(); }

    BigInt eval(const BigInt& q) const;
    IntPolynomial derivative() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial scaled(const BigInt& c) const;
    bool operator==(const IntPolynomial&) const = default;

    // Human form, descending powers: "2q^2 + 3q + 1", "q + 1", "0".
    std::string to_string() const;
    // JSON array of ascending coefficients, each as a decimal string:
    // ["1","3","2"].  Strings keep arbitrary-precision values lossless.
    std::string to_json_array() const;

  private:
    std::vector<BigInt> c_;
};

IntPolynomial poly_one();
// q + 1, the ubiquitous seed factor.
IntPolynomial poly_q_plus_1();

}  // namespace hookpath
