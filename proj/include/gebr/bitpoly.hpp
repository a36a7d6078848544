#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gebr {

/// Binary polynomial modulo x^n + 1, stored as n packed coefficient bits.
/// bit(i) is the coefficient of alpha^i. A value of length n also serves as
/// one column of an n x n array (entry u of the column = bit(u)).
class BitPoly {
public:
    BitPoly() = default;
    explicit BitPoly(int length);

    /// bits[i] (0 or 1) becomes the coefficient of alpha^i.
    static BitPoly from_bits(const std::vector<uint8_t>& bits);
    static BitPoly monomial(int length, int exponent);

    int length() const { return n_; }
    bool bit(int i) const;
    void set_bit(int i, bool value);
    void flip_bit(int i);

    bool is_zero() const;
    int weight() const;
    std::vector<int> support() const;        // ascending exponents
    std::vector<uint8_t> bits() const;
    std::string to_string() const;           // coefficient chars, index 0 first

    bool operator==(const BitPoly& other) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> words_;

    friend BitPoly add(const BitPoly&, const BitPoly&);
    friend bool lex_less(const BitPoly&, const BitPoly&);
};

/// Coefficientwise XOR; lengths must match.
BitPoly add(const BitPoly& a, const BitPoly& b);

/// alpha^i * a: rotation of the coefficient vector i steps to the right.
/// Any integer i is accepted and reduced mod n.
BitPoly rotate(const BitPoly& a, long long i);

/// (1 xor alpha^d) * a, with 1 <= d <= n-1.
BitPoly mul_binomial(const BitPoly& a, int d);

/// The column condition: each of the tau stride-tau parity sums over the
/// p positions l*tau + u is even. Equivalent to divisibility by
/// 1 xor alpha^tau in the ring. Requires a.length() == p * tau.
bool column_valid(const BitPoly& a, int p, int tau);

/// x'(alpha) * (1 xor alpha^tau) for the polynomial x' of degree
/// <= n-tau-1 with the given coefficients (data.size() == n - tau).
/// The result always satisfies column_valid; distinct data give
/// distinct results.
BitPoly lift(const std::vector<uint8_t>& data, int p, int tau);

/// Inverse of lift: exact division by 1 xor alpha^tau. Throws if the
/// argument does not satisfy column_valid.
std::vector<uint8_t> lift_inverse(const BitPoly& a, int p, int tau);

/// Total order by coefficient index (bit 0 first, 0 before 1).
bool lex_less(const BitPoly& a, const BitPoly& b);

}  // namespace gebr
