#include "pft/error.hpp"
#include "pft/spectral.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace pft {

namespace {

constexpr std::size_t kFaddeevLimit = 12;

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) {
    return (a * b) % p;  // p < 2^31
}

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1U) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
    if (n < 2) {
        return false;
    }
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

u64 reduce(const BigInt& x, u64 p) {
    BigInt r = x % p;
    if (r < 0) {
        r += p;
    }
    return r.convert_to<u64>();
}

/// Characteristic polynomial mod p via reduction to upper Hessenberg form.
std::vector<u64> char_poly_mod(const IntMatrix& m, u64 p) {
    const std::size_t n = m.dim();
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h[i * n + j] = reduce(m(i, j), p);
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && at(pivot, j) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        if (pivot != j + 1) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(at(pivot, c), at(j + 1, c));
            }
            for (std::size_t r = 0; r < n; ++r) {
                std::swap(at(r, pivot), at(r, j + 1));
            }
        }
        const u64 inv = inv_mod(at(j + 1, j), p);
        for (std::size_t r = j + 2; r < n; ++r) {
            const u64 f = mul_mod(at(r, j), inv, p);
            if (f == 0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                at(r, c) = (at(r, c) + p - mul_mod(f, at(j + 1, c), p)) % p;
            }
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                at(r2, j + 1) = (at(r2, j + 1) + mul_mod(f, at(r2, r), p)) % p;
            }
        }
    }
    // polys[k] = characteristic polynomial of the leading k x k block.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        auto& cur = polys[k];
        cur.assign(k + 1, 0);
        const auto& prev = polys[k - 1];
        const u64 diag = at(k - 1, k - 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            cur[i] = (cur[i] + p - mul_mod(diag, prev[i], p)) % p;
        }
        u64 sub = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            sub = mul_mod(sub, at(i + 1, i), p);
            const u64 f = mul_mod(sub, at(i, k - 1), p);
            if (f == 0) {
                continue;
            }
            for (std::size_t c = 0; c < polys[i].size(); ++c) {
                cur[c] = (cur[c] + p - mul_mod(f, polys[i][c], p)) % p;
            }
        }
    }
    return polys[n];
}

} // namespace

IntPolynomial char_poly_faddeev(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix am(n);  // A * M_{k-1}
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix mk = am;
        for (std::size_t i = 0; i < n; ++i) {
            mk(i, i) += c[n - k + 1];
        }
        IntMatrix next(n);
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (a(i, l) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    next(i, j) += a(i, l) * mk(l, j);
                }
            }
            trace += next(i, i);
        }
        c[n - k] = -trace / static_cast<long>(k);
        am = std::move(next);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_multimodular(const IntMatrix& m) {
    const std::size_t n = m.dim();
    // Every coefficient is an elementary symmetric function of eigenvalues bounded by the
    // largest row sum s, hence at most (1 + s)^n in absolute value.
    const BigInt bound = pow(BigInt(1) + m.max_row_sum(), static_cast<unsigned>(n));
    std::vector<BigInt> acc(n + 1, 0);
    BigInt modulus = 1;
    u64 p = (u64{1} << 31U) - 1;
    while (modulus <= 2 * bound) {
        while (!is_prime(p)) {
            --p;
        }
        const auto residues = char_poly_mod(m, p);
        const u64 inv = inv_mod(reduce(modulus, p), p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 have = reduce(acc[k], p);
            const u64 delta = mul_mod((residues[k] + p - have) % p, inv, p);
            acc[k] += modulus * delta;
        }
        modulus *= p;
        --p;
    }
    for (auto& x : acc) {
        if (x > modulus / 2) {
            x -= modulus;
        }
    }
    return IntPolynomial(std::move(acc));
}

IntPolynomial char_poly(const IntMatrix& m) {
    return m.dim() <= kFaddeevLimit ? char_poly_faddeev(m) : char_poly_multimodular(m);
}

BigInt bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) {
        return 1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(k, c), m(r, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix LinearPencil::at(const BigInt& t) const {
    const std::size_t n = dim();
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = t * linear(i, j) + constant(i, j);
        }
    }
    return out;
}

LinearPencil LinearPencil::minor(std::size_t i, std::size_t j) const {
    return LinearPencil{linear.minor(i, j), constant.minor(i, j)};
}

IntPolynomial pencil_determinant(const LinearPencil& pencil) {
    using boost::multiprecision::cpp_rational;
    const std::size_t n = pencil.dim();
    std::vector<cpp_rational> coeffs(n + 1, cpp_rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        const BigInt y = bareiss_determinant(pencil.at(BigInt(i)));
        if (y == 0) {
            continue;
        }
        // Lagrange basis polynomial for node i over the nodes 0..n.
        std::vector<BigInt> basis{1};
        BigInt denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) {
                continue;
            }
            std::vector<BigInt> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * static_cast<long>(j);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(j);
        }
        const BigInt scale = denom < 0 ? BigInt(-y) : y;
        if (denom < 0) {
            denom = -denom;
        }
        for (std::size_t k = 0; k < basis.size(); ++k) {
            coeffs[k] += cpp_rational(basis[k] * scale, denom);
        }
    }
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (denominator(c) != 1) {
            throw Error("interpolation", "determinant interpolation produced a non-integer coefficient");
        }
        out.push_back(numerator(c));
    }
    return IntPolynomial(std::move(out));
}

namespace {

/// True iff every coefficient of 2^{kd} p((a + z) / 2^k) is nonnegative, which for the
/// polynomials accepted by perron_root is equivalent to a / 2^k >= largest real root.
bool dominates(const std::vector<BigInt>& c, const BigInt& a, unsigned k) {
    const std::size_t d = c.size() - 1;
    std::vector<BigInt> r(c.size());
    for (std::size_t j = 0; j <= d; ++j) {
        r[j] = c[j] * (BigInt(1) << static_cast<unsigned>(k * (d - j)));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = d; j-- > i;) {
            r[j] += a * r[j + 1];
        }
    }
    for (const auto& x : r) {
        if (x < 0) {
            return false;
        }
    }
    return true;
}

double to_double(const BigInt& num, unsigned k) {
    return std::ldexp(num.convert_to<double>(), -static_cast<int>(k));
}

} // namespace

double perron_root(const IntPolynomial& p, const BigInt& upper, double tolerance) {
    if (p.is_zero()) {
        throw Error("spectral", "zero polynomial has no largest root");
    }
    std::vector<BigInt> c = p.coefficients();
    std::size_t zeros = 0;
    while (zeros + 1 < c.size() && c[zeros] == 0) {
        ++zeros;
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (c.size() == 1) {
        return 0.0;
    }
    if (c.back() < 0) {
        for (auto& x : c) {
            x = -x;
        }
    }
    const IntPolynomial stripped(c);
    BigInt r = 0;
    while (!dominates(c, r, 0)) {
        ++r;
        if (r > upper + 1) {
            throw Error("spectral", "root bound violated");
        }
    }
    if (stripped.evaluate(r) == 0 || r == 0) {
        return r.convert_to<double>();
    }
    BigInt lo = r - 1;
    BigInt hi = r;
    unsigned k = 0;
    while (std::ldexp(1.0, -static_cast<int>(k)) > tolerance) {
        lo <<= 1U;
        hi <<= 1U;
        ++k;
        const BigInt mid = lo + 1;
        if (dominates(c, mid, k)) {
            hi = mid;
            // mid is a root iff the shifted constant term vanishes; then it is the answer.
            BigInt value = 0;
            for (std::size_t j = c.size(); j-- > 0;) {
                value = value * mid + c[j] * (BigInt(1) << static_cast<unsigned>(k * (c.size() - 1 - j)));
            }
            if (value == 0) {
                return to_double(mid, k);
            }
        } else {
            lo = mid;
        }
    }
    return to_double(lo + hi, k + 1);
}

namespace {

/// Collatz-Wielandt bracketing on A + I, used beyond the exact limit.
double numeric_perron(const LabeledGraph& g, double tolerance) {
    const std::size_t n = g.num_states();
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    double lo = 0.0;
    double hi = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x[i];
            for (const auto& e : g.out_edges(static_cast<StateId>(i))) {
                y[i] += x[e.to];
            }
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ratio = y[i] / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            norm = std::max(norm, y[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] / norm;
        }
        if (hi - lo < tolerance) {
            break;
        }
    }
    return 0.5 * (lo + hi) - 1.0;
}

} // namespace

SpectralReport entropy(const LabeledGraph& g, EntropyOptions options) {
    if (!g.is_deterministic()) {
        throw Error("requires-deterministic", "entropy needs a deterministic presentation");
    }
    SpectralReport report;
    const LabeledGraph essential = trim_essential(g);
    if (essential.empty()) {
        report.char_poly = g.empty() ? IntPolynomial({1}) : char_poly(adjacency(g));
        report.empty_shift = true;
        report.lambda = 0.0;
        report.entropy_bits = -std::numeric_limits<double>::infinity();
        return report;
    }
    if (g.num_states() <= options.exact_limit) {
        const IntMatrix a = adjacency(g);
        report.char_poly = char_poly(a);
        report.lambda = perron_root(*report.char_poly, a.max_row_sum());
    } else {
        report.numeric = true;
        report.lambda = numeric_perron(essential, 1e-12);
    }
    report.entropy_bits = std::log2(report.lambda);
    return report;
}

} // namespace pft
