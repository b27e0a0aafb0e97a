#include "hookpath/poly.hpp"

#include <sstream>

namespace hookpath {

namespace {
void canonicalize(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
    canonicalize(c_);
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

BigInt IntPolynomial::eval(const BigInt& q) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigInt(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return IntPolynomial();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const BigInt& c) const {
    std::vector<BigInt> r = c_;
    for (auto& x : r) x *= c;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = c_[i];
        if (a == 0) continue;
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.str();
        if (i >= 1) out << "q";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

std::string IntPolynomial::to_json_array() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ",";
        out << "\"" << c_[i].str() << "\"";
    }
    out << "]";
    return out.str();
}

IntPolynomial poly_one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial poly_q_plus_1() { return IntPolynomial({BigInt(1), BigInt(1)}); }

}  // namespace hookpath
