#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gebr/code.hpp"

namespace gebr {

/// tau = p^j * m with gcd(p, m) = 1.
struct TauDecomposition {
    int j = 0;
    int m = 0;

    bool operator==(const TauDecomposition&) const = default;
};

TauDecomposition decompose_tau(int p, int tau);

/// The pairing between the subgroup G = { i * p^(j+1) : 0 <= i < m } of
/// Z_n and its coset p^j + G: f(i p^(j+1)) = p^j + <ell + i>_m p^(j+1),
/// with ell the least nonnegative solution of p * ell = -1 (mod m). Every
/// pair differs by a multiple of tau.
struct CosetPairing {
    int ell = 0;
    std::vector<std::pair<int, int>> f;  // (g, f(g)) for g in G ascending
};

CosetPairing coset_pairing(int p, int j, int m);

/// Certificate that a parameter set is not MDS: a nonzero x inside the
/// column condition annihilated by 1 xor alpha^shift, together with a
/// pairing of its support into pairs congruent mod tau (which proves the
/// column condition constructively).
struct NonMdsWitness {
    int shift = 0;
    BitPoly x;
    std::vector<std::pair<int, int>> pairing;  // (min, max) exponent pairs, disjoint
    std::optional<int> ell;                    // absent for p = 2
    int j = 0;
    int m = 0;
};

/// p = 2: shift = tau and x = 1 xor alpha^tau. Odd p with m > 1:
/// shift = p^(j+1) and x has support G union (p^j + G), weight 2m, paired
/// by coset_pairing. Throws for MDS parameters (no witness exists).
NonMdsWitness build_witness(int n, int p, int tau);
NonMdsWitness build_witness(const GebrParams& params);

bool verify_witness(const NonMdsWitness& w, int n, int p, int tau);
bool verify_witness(const NonMdsWitness& w, const GebrParams& params);

}  // namespace gebr
