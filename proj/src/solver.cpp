#include "gebr/solver.hpp"

#include <numeric>
#include <stdexcept>

#include "gebr/gf2.hpp"

namespace gebr {

RecursionOutcome solve_binomial(const BitPoly& u, int d, int n, int p, int tau) {
    if (p <= 0 || tau <= 0 || n != p * tau)
        throw std::invalid_argument("solve_binomial: n must equal p * tau");
    if (u.length() != n) throw std::invalid_argument("solve_binomial: length mismatch");
    if (d < 1 || d > n - 1) throw std::invalid_argument("solve_binomial: shift must lie in 1..n-1");

    const int g = std::gcd(d, n);
    const int cycle_len = n / g;

    // Particular values with each cycle's anchor bit (position c itself,
    // the smallest index of the cycle) set to 0.
    BitPoly part(n);
    for (int c = 0; c < g; ++c) {
        bool acc = false;
        int pos = c;
        for (int k = 1; k < cycle_len; ++k) {
            pos += d;
            if (pos >= n) pos -= n;
            acc ^= u.bit(pos);
            if (acc) part.set_bit(pos, true);
        }
        if (acc ^ u.bit(c))  // closing the cycle
            return RecursionOutcome{RecursionOutcome::Kind::NoSolution, BitPoly(n), 0};
    }

    // Column parity constraints on the g free bits. The cycle through c is
    // exactly the residue class c mod g, so position q contributes the
    // unknown q mod g.
    gf2::Matrix a(tau, g);
    std::vector<uint8_t> rhs(tau, 0);
    for (int v = 0; v < tau; ++v) {
        for (int l = 0; l < p; ++l) {
            const int q = l * tau + v;
            a.flip(v, q % g);
            rhs[v] ^= part.bit(q) ? 1 : 0;
        }
    }

    gf2::AffineSolution sol = gf2::solve(std::move(a), std::move(rhs));
    if (!sol.consistent)
        return RecursionOutcome{RecursionOutcome::Kind::NoSolution, BitPoly(n), 0};

    BitPoly x = part;
    for (int q = 0; q < n; ++q)
        if (sol.particular[q % g]) x.flip_bit(q);

    if (sol.kernel.empty()) return RecursionOutcome{RecursionOutcome::Kind::Unique, x, 0};
    return RecursionOutcome{RecursionOutcome::Kind::Multiple, x,
                            static_cast<int>(sol.kernel.size())};
}

RecursionOutcome solve_binomial(const BitPoly& u, int d, const GebrParams& params) {
    return solve_binomial(u, d, params.n, params.p, params.tau);
}

}  // namespace gebr
