#pragma once

#include <utility>
#include <vector>

#include "gebr/bitpoly.hpp"

namespace gebr {

/// Parameters of a GEBR(n, p, r) code over n x n binary arrays with
/// n = p * tau. tau is derived, never user-supplied.
struct GebrParams {
    int n = 0;
    int p = 0;
    int tau = 0;
    int r = 0;

    bool operator==(const GebrParams&) const = default;
};

bool is_prime(int x);

/// Validates p prime, p | n and 2 <= r < n; tau = n / p.
GebrParams make_params(int n, int p, int r);

/// n x n binary array stored column-wise: columns[j].bit(u) is entry (u, j).
struct ArrayCodeword {
    GebrParams params;
    std::vector<BitPoly> columns;

    bool bit(int u, int j) const { return columns[j].bit(u); }
    void set_bit(int u, int j, bool v) { columns[j].set_bit(u, v); }

    bool operator==(const ArrayCodeword&) const = default;
};

ArrayCodeword zero_array(const GebrParams& params);

/// Throws unless the array has exactly n columns of length n.
void validate_array(const ArrayCodeword& a);

/// Row-major coefficient order; gives decode outputs a stable ordering.
bool array_lex_less(const ArrayCodeword& a, const ArrayCodeword& b);

struct MembershipReport {
    std::vector<int> column_failures;                  // columns violating the column condition
    std::vector<std::pair<int, int>> slope_failures;   // (slope, line) with odd parity

    bool is_codeword() const { return column_failures.empty() && slope_failures.empty(); }
};

/// Checks every column against the column condition and every line of
/// slope 0..r-1 (toroidal) for even parity. Empty report == codeword.
MembershipReport check_membership(const ArrayCodeword& a);

/// The r syndromes S_l = xor_j alpha^(l*j) * column_j. The parity-check
/// structure is applied column by column, never materialized as a matrix.
/// All-zero syndromes plus all columns valid is equivalent to membership.
std::vector<BitPoly> syndromes(const ArrayCodeword& a);

/// MDS criterion: p an odd prime and tau a power of p (tau = 1 included).
bool is_mds_shape(int p, int tau);
bool is_mds_theorem(const GebrParams& params);

/// Basis of { x : (1 xor alpha^i) x = 0 and x a multiple of 1 xor alpha^tau },
/// via Gaussian elimination on the n-tau lifted coordinates. Empty means the
/// kernel is trivial. Independent of r.
std::vector<BitPoly> kernel_basis(int n, int p, int tau, int i);
std::vector<BitPoly> kernel_basis(const GebrParams& params, int i);

/// Exhaustive check: trivial kernel for every shift i in 1..n-1. Must agree
/// with is_mds_shape / is_mds_theorem on every valid input.
bool is_mds_oracle(int n, int p, int tau);
bool is_mds_oracle(const GebrParams& params);

}  // namespace gebr
