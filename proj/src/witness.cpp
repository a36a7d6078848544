#include "gebr/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gebr {

namespace {

long long pow_ll(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

TauDecomposition decompose_tau(int p, int tau) {
    if (!is_prime(p) || tau < 1)
        throw std::invalid_argument("decompose_tau: need prime p and tau >= 1");
    int j = 0, m = tau;
    while (m % p == 0) {
        m /= p;
        ++j;
    }
    return TauDecomposition{j, m};
}

CosetPairing coset_pairing(int p, int j, int m) {
    if (m <= 1) throw std::invalid_argument("coset_pairing: m must exceed 1");
    if (std::gcd(p, m) != 1) throw std::invalid_argument("coset_pairing: p and m must be coprime");
    int ell = -1;
    for (int cand = 0; cand < m; ++cand) {
        if ((static_cast<long long>(p) * cand) % m == m - 1) {
            ell = cand;
            break;
        }
    }
    // gcd(p, m) = 1 guarantees ell exists
    const long long pj = pow_ll(p, j);
    const long long pj1 = pj * p;
    CosetPairing out;
    out.ell = ell;
    for (int i = 0; i < m; ++i)
        out.f.emplace_back(static_cast<int>(i * pj1),
                           static_cast<int>(pj + ((ell + i) % m) * pj1));
    return out;
}

NonMdsWitness build_witness(int n, int p, int tau) {
    if (!is_prime(p) || tau < 1 || n != p * tau)
        throw std::invalid_argument("build_witness: n must equal p * tau with p prime");
    if (is_mds_shape(p, tau))
        throw std::invalid_argument("build_witness: parameters are MDS, no witness exists");

    NonMdsWitness w;
    TauDecomposition dec = decompose_tau(p, tau);
    w.j = dec.j;
    w.m = dec.m;

    if (p == 2) {
        w.shift = tau;
        w.x = add(BitPoly::monomial(n, 0), BitPoly::monomial(n, tau));
        w.pairing = {{0, tau}};
    } else {
        CosetPairing cp = coset_pairing(p, dec.j, dec.m);
        w.ell = cp.ell;
        w.shift = static_cast<int>(pow_ll(p, dec.j + 1));
        w.x = BitPoly(n);
        for (const auto& [g, fg] : cp.f) {
            w.x.flip_bit(g);
            w.x.flip_bit(fg);
        }
        for (const auto& [g, fg] : cp.f) w.pairing.emplace_back(std::min(g, fg), std::max(g, fg));
    }

    if (!verify_witness(w, n, p, tau))
        throw std::logic_error("build_witness: constructed witness failed verification");
    return w;
}

NonMdsWitness build_witness(const GebrParams& params) {
    return build_witness(params.n, params.p, params.tau);
}

bool verify_witness(const NonMdsWitness& w, int n, int p, int tau) {
    if (p <= 0 || tau <= 0 || n != p * tau) return false;
    if (w.x.length() != n || w.x.is_zero()) return false;
    if (w.shift < 1 || w.shift > n - 1) return false;
    if (!mul_binomial(w.x, w.shift).is_zero()) return false;
    if (!column_valid(w.x, p, tau)) return false;

    std::vector<int> endpoints;
    for (const auto& [a, b] : w.pairing) {
        if (a < 0 || a >= n || b < 0 || b >= n) return false;
        if (((b - a) % tau + tau) % tau != 0) return false;
        endpoints.push_back(a);
        endpoints.push_back(b);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) return false;
    return endpoints == w.x.support();
}

bool verify_witness(const NonMdsWitness& w, const GebrParams& params) {
    return verify_witness(w, params.n, params.p, params.tau);
}

}  // namespace gebr
