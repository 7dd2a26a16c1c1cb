#include "pft/charpoly_identity.hpp"

#include "pft/error.hpp"

namespace pft {

CharPolyArrangement charpoly_arrange(const PftSpec& spec) {
    if (spec.period() != 2 || !spec.forbidden(1).empty() || spec.forbidden(0).size() != 1) {
        throw Error("spec", "the arrangement needs T = 2 and a single phase-0 forbidden word");
    }
    const Word& f = *spec.forbidden(0).begin();
    const std::size_t q = spec.q();
    const std::size_t ell = f.size();
    const WordCode states = checked_pow(q, ell);
    const WordCode top = checked_pow(q, ell - 1);
    const WordCode fc = f.code(q);

    CharPolyArrangement out;
    out.graph = build_ms(spec);
    const std::size_t n = 2 * states - 1;
    if (out.graph.num_states() != n) {
        throw Error("arrangement-inapplicable", "trimming removed states of G_X (" +
                                                    std::to_string(out.graph.num_states()) + " of " +
                                                    std::to_string(n) + " remain)");
    }

    WordCode x = states;
    WordCode u = states;
    for (WordCode a = q; a-- > 0;) {
        const WordCode pred = a * top + fc / q;
        const WordCode twin = a * top + fc % top;
        if (pred != fc) {
            x = pred;
        }
        if (twin != fc) {
            u = twin;
        }
    }
    auto id = [&](std::uint32_t phase, WordCode w) {
        const auto s = out.graph.find(StateTag{phase, w});
        if (s < 0) {
            throw Error("arrangement-inapplicable", "state missing from G_X");
        }
        return static_cast<StateId>(s);
    };
    out.order.push_back(id(0, x));
    for (WordCode w = 0; w < states; ++w) {
        if (w != x && w != fc) {
            out.order.push_back(id(0, w));
        }
    }
    out.u_row = out.order.size();
    out.order.push_back(id(1, u));
    for (WordCode w = 0; w < states; ++w) {
        if (w != u && w != fc) {
            out.order.push_back(id(1, w));
        }
    }
    out.f_row = out.order.size();
    out.order.push_back(id(1, fc));
    out.x_row = 0;

    const IntMatrix raw = adjacency(out.graph);
    out.a_gx = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.a_gx(i, j) = raw(out.order[i], out.order[j]);
        }
    }
    out.a_h = out.a_gx.minor(out.f_row, out.f_row);

    const std::size_t m = n - 1;
    out.b.linear = IntMatrix::identity(m);
    out.b.constant = IntMatrix(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out.b.constant(i, j) = -out.a_h(i, j);
        }
    }
    for (std::size_t i = 1; i < out.u_row; ++i) {
        if (out.a_gx(i, out.f_row) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
            out.b.linear(i, j) -= out.b.linear(0, j);
            out.b.constant(i, j) -= out.b.constant(0, j);
        }
    }
    return out;
}

CharPolyIdentity charpoly_identity_check(const PftSpec& spec) {
    const auto arr = charpoly_arrange(spec);
    const std::size_t states = checked_pow(spec.q(), spec.forbidden(0).begin()->size());

    CharPolyIdentity r;
    r.lhs = char_poly(arr.a_gx);
    r.chi_h = char_poly(arr.a_h);
    r.minor_det = pencil_determinant(arr.b.minor(0, states - 1));
    const BigInt sign = states % 2 == 0 ? 1 : -1;
    r.rhs = IntPolynomial::monomial(1) * (r.chi_h + r.minor_det * sign);
    r.holds = r.lhs == r.rhs;
    r.arrangement_ok = arr.a_gx(arr.x_row, arr.f_row) == 1 && arr.a_gx.row(arr.u_row) == arr.a_gx.row(arr.f_row) &&
                       pencil_determinant(arr.b) == r.chi_h;
    return r;
}

} // namespace pft
