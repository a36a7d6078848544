#pragma once

#include "gebr/code.hpp"

namespace gebr {

struct RecursionOutcome {
    enum class Kind { Unique, NoSolution, Multiple };

    Kind kind = Kind::NoSolution;
    BitPoly solution;    // set for Unique and Multiple
    int count_log2 = 0;  // Multiple: the solution set has 2^count_log2 elements
};

/// Solves (1 xor alpha^d) x = u for x subject to the column condition.
///
/// Positions 0..n-1 split into gcd(d, n) cycles under the step +d mod n.
/// Propagating x along each cycle determines everything from one free bit
/// per cycle (anchored at the cycle's smallest index); the cycle sum of u
/// must telescope to zero or there is no solution. The free bits are then
/// constrained by the tau column parities, a small GF(2) system whose
/// solution space decides Unique / Multiple / NoSolution. For Multiple the
/// returned solution is the one with free variables fixed to 0 in
/// elimination order, and count_log2 is the dimension of the solution set
/// (equal to the kernel dimension of the shift).
RecursionOutcome solve_binomial(const BitPoly& u, int d, int n, int p, int tau);
RecursionOutcome solve_binomial(const BitPoly& u, int d, const GebrParams& params);

}  // namespace gebr
