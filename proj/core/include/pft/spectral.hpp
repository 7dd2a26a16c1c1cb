#ifndef PFT_SPECTRAL_HPP_
#define PFT_SPECTRAL_HPP_

#include "pft/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pft {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}
    IntMatrix(std::size_t dim, std::vector<BigInt> cells);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
    std::vector<BigInt> row(std::size_t i) const;

    /// Deletes row i and column j (M^{(i,j)}, zero-based).
    IntMatrix minor(std::size_t i, std::size_t j) const;
    /// Largest absolute row sum.
    BigInt max_row_sum() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> cells_;
};

/// Entry (i, j) counts the edges i -> j.
IntMatrix adjacency(const LabeledGraph& g);

/// Integer polynomial in t, coefficients from the constant term upwards, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    /// t^k.
    static IntPolynomial monomial(std::size_t k);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigInt coefficient(std::size_t k) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    BigInt evaluate(const BigInt& t) const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator*(const BigInt& scalar) const;

    /// e.g. "t^3 - t^2 - t".
    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// det(tI - M). Faddeev-LeVerrier for small dimensions, multimodular otherwise.
IntPolynomial char_poly(const IntMatrix& m);
/// Faddeev-LeVerrier recursion in exact arithmetic.
IntPolynomial char_poly_faddeev(const IntMatrix& m);
/// Hessenberg reduction modulo word-size primes, recombined by CRT.
IntPolynomial char_poly_multimodular(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(IntMatrix m);

/// Matrix t*linear + constant with integer entries.
struct LinearPencil {
    IntMatrix linear;
    IntMatrix constant;

    std::size_t dim() const noexcept { return constant.dim(); }
    IntMatrix at(const BigInt& t) const;
    LinearPencil minor(std::size_t i, std::size_t j) const;
};

/// det as a polynomial in t by exact evaluation at t = 0..dim and Lagrange interpolation.
IntPolynomial pencil_determinant(const LinearPencil& pencil);

/**
 * Largest real root of a polynomial whose roots all have real part at most that root
 * (true for characteristic polynomials of nonnegative matrices). `upper` must bound it.
 * Exact bisection to absolute width `tolerance`; integer roots are returned exactly.
 */
double perron_root(const IntPolynomial& p, const BigInt& upper, double tolerance = 1e-12);

struct SpectralReport {
    /// Absent when the dimension exceeds the exact limit.
    std::optional<IntPolynomial> char_poly;
    double lambda = 0.0;
    /// log2(lambda); -inf for the empty shift.
    double entropy_bits = 0.0;
    bool empty_shift = false;
    /// lambda came from floating-point iteration instead of exact bisection.
    bool numeric = false;
};

struct EntropyOptions {
    std::size_t exact_limit = 512;
};

/// Throws Error("requires-deterministic") for non-deterministic presentations.
SpectralReport entropy(const LabeledGraph& g, EntropyOptions options = {});

} // namespace pft

#endif // PFT_SPECTRAL_HPP_
