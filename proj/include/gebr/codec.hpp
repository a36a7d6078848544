#pragma once

#include <vector>

#include "gebr/code.hpp"
#include "gebr/solver.hpp"

namespace gebr {

struct ErasurePattern {
    std::vector<int> erased;  // strictly increasing column indices
};

/// Sorts, checks range and rejects duplicates.
ErasurePattern make_pattern(std::vector<int> columns, int n);

/// At most this many solutions are returned for an ambiguous decode; the
/// truncated flag records that more exist.
constexpr int kMaxAmbiguousSolutions = 16;

struct DecodeOutcome {
    enum class Kind { Recovered, Ambiguous, Inconsistent };

    Kind kind = Kind::Inconsistent;
    std::vector<ArrayCodeword> solutions;  // 1 for Recovered; sorted, capped for Ambiguous
    bool truncated = false;

    bool operator==(const DecodeOutcome&) const = default;
};

/// Recovers the erased columns from the survivors by eliminating the
/// Vandermonde-structured syndrome system over the ring. Pivot factors are
/// rotations (inverted by counter-rotation) and binomials 1 xor alpha^d,
/// each inverted by one solve_binomial call with d = j_b - j_a > 0. A
/// Multiple division branches over the shift's kernel coset; completions
/// are filtered by full membership, so the returned solutions are exactly
/// the codeword completions of the survivors. One solution -> Recovered,
/// several -> Ambiguous, none -> Inconsistent. The content of erased
/// columns in `a` is ignored.
DecodeOutcome decode_erasures(const ArrayCodeword& a, const ErasurePattern& pattern);

/// Reference decoder: one dense GF(2) system over the erased columns'
/// lifted coordinates, built from all r slope parities and solved by
/// Gaussian elimination. Agrees with decode_erasures in kind and solution
/// set on every instance.
DecodeOutcome decode_erasures_dense(const ArrayCodeword& a, const ErasurePattern& pattern);

/// Systematic encoder. The k info vectors (n - tau bits each) are lifted
/// into the lowest-index non-parity columns, remaining non-parity columns
/// are zero (shortening), and the r parity columns are produced by
/// decode_erasures. Throws if the parity pattern is not uniquely solvable.
ArrayCodeword encode(const std::vector<std::vector<uint8_t>>& info, const GebrParams& params,
                     std::vector<int> parity_positions);

/// Zeroes the erased columns; decoders ignore their content either way.
ArrayCodeword puncture(const ArrayCodeword& a, const ErasurePattern& pattern);

}  // namespace gebr
