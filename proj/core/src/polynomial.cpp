#include "pft/error.hpp"
#include "pft/spectral.hpp"

#include <algorithm>
#include <sstream>

namespace pft {

IntMatrix::IntMatrix(std::size_t dim, std::vector<BigInt> cells) : dim_(dim), cells_(std::move(cells)) {
    if (cells_.size() != dim_ * dim_) {
        throw Error("matrix", "cell count does not match the dimension");
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
    return {cells_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
            cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_)};
}

IntMatrix IntMatrix::minor(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) {
        throw Error("matrix", "minor index out of range");
    }
    IntMatrix out(dim_ - 1);
    for (std::size_t r = 0, rr = 0; r < dim_; ++r) {
        if (r == i) {
            continue;
        }
        for (std::size_t c = 0, cc = 0; c < dim_; ++c) {
            if (c == j) {
                continue;
            }
            out(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return out;
}

BigInt IntMatrix::max_row_sum() const {
    BigInt best = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            s += abs((*this)(i, j));
        }
        best = std::max(best, s);
    }
    return best;
}

IntMatrix adjacency(const LabeledGraph& g) {
    IntMatrix m(g.num_states());
    for (const auto& e : g.edges()) {
        m(e.from, e.to) += 1;
    }
    return m;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPolynomial IntPolynomial::monomial(std::size_t k) {
    std::vector<BigInt> c(k + 1);
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = coefficient(k) + other.coefficient(k);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    return *this + other * BigInt(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& scalar) const {
    auto c = coeffs_;
    for (auto& x : c) {
        x *= scalar;
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            out << mag;
        }
        if (k >= 1) {
            out << var;
        }
        if (k >= 2) {
            out << "^" << k;
        }
    }
    return out.str();
}

} // namespace pft
