#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

std::size_t max_len(const pft::PftSpec& spec) {
    std::size_t m = 1;
    for (const auto& phase : spec.schedule()) {
        for (const auto& f : phase) {
            m = std::max(m, f.size());
        }
    }
    return m;
}

// Does some forbidden word occur at position i of s, where s[0] sits at global position g0 and
// the point is read at offset r?
bool hit_at(const pft::PftSpec& spec, const Digits& s, std::size_t i, long g0, std::size_t r) {
    const long t = static_cast<long>(spec.period());
    for (std::size_t j = 0; j < spec.period(); ++j) {
        const long pos = g0 + static_cast<long>(i) - static_cast<long>(r);
        if (((pos - static_cast<long>(j)) % t + t) % t != 0) {
            continue;
        }
        for (const auto& f : spec.forbidden(j)) {
            const Digits d = f.digits();
            if (i + d.size() <= s.size() && s.compare(i, d.size(), d) == 0) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::vector<std::size_t> admissible_offsets(const pft::PftSpec& spec, const Digits& block) {
    const std::size_t p = block.size();
    const std::size_t span = std::lcm(p, spec.period()) + max_len(spec);
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < spec.period(); ++r) {
        // y = σ^r(x): y_i = x_{i+r}; a forbidden word of F^(j) may not start at i ≡ j.
        Digits y;
        for (std::size_t i = 0; i < span; ++i) {
            y += block[(i + r) % p];
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < std::lcm(p, spec.period()); ++i) {
            const std::size_t j = i % spec.period();
            for (const auto& f : spec.forbidden(j)) {
                const Digits d = f.digits();
                if (y.compare(i, d.size(), d) == 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            out.push_back(r);
        }
    }
    return out;
}

bool periodic_member(const pft::PftSpec& spec, const Digits& block) {
    return !admissible_offsets(spec, block).empty();
}

std::set<Digits> blocks(const pft::PftSpec& spec, std::size_t n) {
    // A legal window extends forever on one side once it extends by more symbols than there
    // are (phase, context) states. When the core word has length >= ctx - 1 no forbidden word
    // touches both extensions, so the two sides are searched independently.
    const std::size_t q = spec.q();
    const std::size_t ctx = max_len(spec);
    std::size_t reach = spec.period();
    for (std::size_t i = 0; i < ctx; ++i) {
        reach *= q;
    }
    ++reach;

    std::set<Digits> out;
    for (const Digits& u : words(q, n)) {
        bool found = false;
        for (std::size_t r = 0; r < spec.period() && !found; ++r) {
            std::function<bool(Digits&, std::size_t)> right = [&](Digits& s, std::size_t added) {
                for (std::size_t i = s.size() > ctx ? s.size() - ctx : 0; i < s.size(); ++i) {
                    if (hit_at(spec, s, i, 0, r)) {
                        return false;
                    }
                }
                if (added >= reach) {
                    return true;
                }
                for (std::size_t a = 0; a < q; ++a) {
                    s.push_back(static_cast<char>('0' + a));
                    const bool ok = right(s, added + 1);
                    s.pop_back();
                    if (ok) {
                        return true;
                    }
                }
                return false;
            };
            std::function<bool(const Digits&, long)> left = [&](const Digits& s, long g0) {
                if (hit_at(spec, s, 0, g0, r)) {
                    return false;
                }
                if (static_cast<std::size_t>(-g0) >= reach) {
                    return true;
                }
                for (std::size_t a = 0; a < q; ++a) {
                    if (left(static_cast<char>('0' + a) + s.substr(0, ctx), g0 - 1)) {
                        return true;
                    }
                }
                return false;
            };
            std::function<bool(Digits&)> cores = [&](Digits& s) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (hit_at(spec, s, i, 0, r)) {
                        return false;
                    }
                }
                if (s.size() + 1 >= ctx) {
                    Digits copy = s;
                    return left(s, 0) && right(copy, s.size() - n);
                }
                for (std::size_t a = 0; a < q; ++a) {
                    s.push_back(static_cast<char>('0' + a));
                    const bool ok = cores(s);
                    s.pop_back();
                    if (ok) {
                        return true;
                    }
                }
                return false;
            };
            Digits s = u;
            found = cores(s);
        }
        if (found) {
            out.insert(u);
        }
    }
    return out;
}

std::size_t smallest_period(const pft::PftSpec& spec, std::size_t bound) {
    const auto ps = realized_periods(spec, bound);
    return ps.empty() ? 0 : *ps.begin();
}

std::set<std::size_t> realized_periods(const pft::PftSpec& spec, std::size_t bound) {
    std::set<std::size_t> out;
    for (std::size_t p = 1; p <= bound; ++p) {
        for (const Digits& w : words(spec.q(), p)) {
            // primitive: no proper rotation equals w
            bool primitive = true;
            for (std::size_t d = 1; d < p; ++d) {
                if (p % d == 0 && w.substr(d) + w.substr(0, d) == w) {
                    primitive = false;
                    break;
                }
            }
            if (primitive && periodic_member(spec, w)) {
                out.insert(p);
                break;
            }
        }
    }
    return out;
}

namespace {

std::vector<std::vector<bool>> bool_adjacency(const pft::LabeledGraph& g) {
    std::vector<std::vector<bool>> a(g.num_states(), std::vector<bool>(g.num_states(), false));
    for (const auto& e : g.edges()) {
        a[e.from][e.to] = true;
    }
    return a;
}

} // namespace

bool strongly_connected(const pft::LabeledGraph& g) {
    const std::size_t n = g.num_states();
    if (n == 0) {
        return false;
    }
    auto reach = bool_adjacency(g);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!reach[i][j]) {
                return false;
            }
        }
    }
    return true;
}

std::size_t period(const pft::LabeledGraph& g) {
    const std::size_t n = g.num_states();
    const auto a = bool_adjacency(g);
    auto power = a;
    std::size_t out = 0;
    for (std::size_t len = 1; len <= 2 * n; ++len) {
        for (std::size_t i = 0; i < n; ++i) {
            if (power[i][i]) {
                out = std::gcd(out, len);
            }
        }
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!power[i][k]) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    next[i][j] = next[i][j] || a[k][j];
                }
            }
        }
        power = std::move(next);
    }
    return out;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

void add_to(Poly& acc, const Poly& x, int sign) {
    if (acc.size() < x.size()) {
        acc.resize(x.size(), 0);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc[i] += sign * x[i];
    }
}

Poly laplace(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return {1};
    }
    Poly acc{0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(m[i][c]);
                }
            }
            minor.push_back(row);
        }
        add_to(acc, mul(m[0][j], laplace(minor)), j % 2 == 0 ? 1 : -1);
    }
    while (acc.size() > 1 && acc.back() == 0) {
        acc.pop_back();
    }
    return acc;
}

} // namespace

std::vector<std::int64_t> char_poly_laplace(const std::vector<std::vector<std::int64_t>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? Poly{-a[i][j], 1} : Poly{-a[i][j]};
        }
    }
    return laplace(m);
}

std::int64_t det_laplace(const std::vector<std::vector<std::int64_t>>& a) {
    std::vector<std::vector<Poly>> m;
    for (const auto& row : a) {
        std::vector<Poly> r;
        for (auto x : row) {
            r.push_back({x});
        }
        m.push_back(r);
    }
    return laplace(m)[0];
}

double spectral_radius(const std::vector<std::vector<std::int64_t>>& a) {
    const std::size_t n = a.size();
    std::vector<double> v(n, 1.0);
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = v[i];
            for (std::size_t j = 0; j < n; ++j) {
                w[i] += static_cast<double>(a[i][j]) * v[j];
            }
        }
        double norm = 0.0;
        for (double x : w) {
            norm = std::max(norm, x);
        }
        for (auto& x : w) {
            x /= norm;
        }
        lambda = norm - 1.0;
        v = std::move(w);
    }
    return lambda;
}

std::vector<std::vector<std::int64_t>> dense(const pft::IntMatrix& m) {
    std::vector<std::vector<std::int64_t>> out(m.dim(), std::vector<std::int64_t>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out[i][j] = static_cast<std::int64_t>(m(i, j));
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> random_01(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
    for (auto& row : out) {
        for (auto& x : row) {
            x = coin(rng) ? 1 : 0;
        }
    }
    return out;
}

Digits psi(const Digits& u) {
    Digits out;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        out += u[i] == u[i + 1] ? '0' : '1';
    }
    return out;
}

std::vector<Digits> words(std::size_t q, std::size_t n) {
    std::vector<Digits> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Digits> next;
        for (const auto& w : out) {
            for (std::size_t a = 0; a < q; ++a) {
                next.push_back(w + static_cast<char>('0' + a));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace oracle
