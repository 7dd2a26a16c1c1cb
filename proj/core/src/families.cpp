#include "pft/families.hpp"

#include "pft/error.hpp"

namespace pft {

namespace {

void require_binary(const Word& u) {
    for (Symbol s : u.symbols()) {
        if (s > 1) {
            throw Error("alphabet", "ψ is defined over {0,1} only");
        }
    }
}

bool is_power_of_two(std::size_t m) {
    return m != 0 && (m & (m - 1)) == 0;
}

std::size_t log2_exact(std::size_t m) {
    std::size_t j = 0;
    while ((std::size_t{1} << j) < m) {
        ++j;
    }
    return j;
}

void require_length(const Word& u, std::size_t m) {
    if (m >= u.size()) {
        throw Error("domain", "ψ^" + std::to_string(m) + " needs a word longer than " + std::to_string(m));
    }
}

} // namespace

Word psi_word(const Word& u) {
    require_binary(u);
    if (u.empty()) {
        throw Error("domain", "ψ is undefined on the empty word");
    }
    std::vector<Symbol> out(u.size() - 1);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        out[i] = u[i] ^ u[i + 1];
    }
    return Word(std::move(out));
}

PeriodicWord psi_periodic(const PeriodicWord& w) {
    require_binary(w.block());
    const std::size_t p = w.length();
    std::vector<Symbol> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        out[i] = w.block()[i] ^ w.block()[(i + 1) % p];
    }
    return PeriodicWord(Word(std::move(out)));
}

Word psi_power_iterated(const Word& u, std::size_t m) {
    require_binary(u);
    require_length(u, m);
    Word cur = u;
    for (std::size_t i = 0; i < m; ++i) {
        cur = psi_word(cur);
    }
    return cur;
}

Word psi_power_two_term(const Word& u, std::size_t j) {
    require_binary(u);
    const std::size_t m = std::size_t{1} << j;
    require_length(u, m);
    std::vector<Symbol> out(u.size() - m);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = u[i] ^ u[i + m];
    }
    return Word(std::move(out));
}

Word psi_power_window(const Word& u, std::size_t j) {
    require_binary(u);
    const std::size_t width = std::size_t{1} << j;
    require_length(u, width - 1);
    std::vector<Symbol> out(u.size() - width + 1);
    Symbol parity = 0;
    for (std::size_t i = 0; i < width; ++i) {
        parity ^= u[i];
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = parity;
        if (i + width < u.size()) {
            parity ^= u[i] ^ u[i + width];
        }
    }
    return Word(std::move(out));
}

Word psi_power(const Word& u, std::size_t m) {
    if (is_power_of_two(m)) {
        return psi_power_two_term(u, log2_exact(m));
    }
    if (is_power_of_two(m + 1)) {
        return psi_power_window(u, log2_exact(m + 1));
    }
    return psi_power_iterated(u, m);
}

WordSet xk_forbidden(std::size_t k) {
    if (k < 1) {
        throw Error("domain", "X_k needs k >= 1");
    }
    if (k > 62) {
        throw Error("desk-scale-exceeded", "F_k^(0) enumeration limited to k <= 62");
    }
    WordSet out;
    for (WordCode x = 0; x < (WordCode{1} << k); ++x) {
        WordCode cur = x;
        for (std::size_t n = k; n > 1; --n) {
            cur = (cur ^ (cur >> 1U)) & ((WordCode{1} << (n - 1)) - 1);
        }
        if (cur == 0) {
            out.insert(Word::from_code(x, k, 2));
        }
    }
    return out;
}

WordSet xk_forbidden_recursive(std::size_t k) {
    if (k < 1) {
        throw Error("domain", "X_k needs k >= 1");
    }
    WordSet cur{Word{0}};
    for (std::size_t n = 2; n <= k; ++n) {
        WordSet next;
        for (const auto& v : cur) {
            for (Symbol first = 0; first < 2; ++first) {
                std::vector<Symbol> u{first};
                for (Symbol s : v.symbols()) {
                    u.push_back(u.back() ^ s);
                }
                next.insert(Word(std::move(u)));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

PftSpec xk_spec(std::size_t k) {
    return PftSpec::phase_zero(Alphabet(2), 2, xk_forbidden(k));
}

bool odd_parity_filter(std::size_t j) {
    const std::size_t n = std::size_t{1} << j;
    const WordSet f = xk_forbidden(n);
    bool ok = true;
    for_each_word(2, n, [&](const Word& z) {
        if (z.weight() % 2 == 1 && f.count(z) != 0) {
            ok = false;
        }
    });
    return ok;
}

PftSpec factorial_window_spec(std::size_t k, bool force) {
    if (k < 2) {
        throw Error("domain", "the construction needs k >= 2");
    }
    if (k >= 4 && !force) {
        throw Error("desk-scale-exceeded", "k! >= 24 windows of length 2k!; pass force to build anyway");
    }
    std::size_t n = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        n *= i;
    }
    WordSet windows;
    for_each_word(2, n, [&](const Word& block) {
        const PeriodicWord x(block);
        for (std::size_t i = 0; i < n; ++i) {
            windows.insert(subword_at(x, static_cast<std::int64_t>(i), 2 * n));
        }
    });
    return PftSpec::phase_zero(Alphabet(2), 2, std::move(windows));
}

} // namespace pft
