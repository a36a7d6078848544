#include "gebr/bitpoly.hpp"

#include <bit>
#include <stdexcept>

namespace gebr {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

BitPoly::BitPoly(int length) {
    if (length <= 0) throw std::invalid_argument("BitPoly: length must be positive");
    n_ = length;
    words_.assign(words_for(length), 0);
}

BitPoly BitPoly::from_bits(const std::vector<uint8_t>& bits) {
    BitPoly v(static_cast<int>(bits.size()));
    for (int i = 0; i < v.n_; ++i)
        if (bits[i]) v.set_bit(i, true);
    return v;
}

BitPoly BitPoly::monomial(int length, int exponent) {
    BitPoly v(length);
    v.set_bit(exponent, true);
    return v;
}

bool BitPoly::bit(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("BitPoly::bit: index out of range");
    return (words_[i >> 6] >> (i & 63)) & 1u;
}

void BitPoly::set_bit(int i, bool value) {
    if (i < 0 || i >= n_) throw std::out_of_range("BitPoly::set_bit: index out of range");
    uint64_t mask = uint64_t(1) << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void BitPoly::flip_bit(int i) {
    if (i < 0 || i >= n_) throw std::out_of_range("BitPoly::flip_bit: index out of range");
    words_[i >> 6] ^= uint64_t(1) << (i & 63);
}

bool BitPoly::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

int BitPoly::weight() const {
    int total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<int> BitPoly::support() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (bit(i)) out.push_back(i);
    return out;
}

std::vector<uint8_t> BitPoly::bits() const {
    std::vector<uint8_t> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = bit(i) ? 1 : 0;
    return out;
}

std::string BitPoly::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

BitPoly add(const BitPoly& a, const BitPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("add: length mismatch");
    BitPoly c = a;
    for (size_t w = 0; w < c.words_.size(); ++w) c.words_[w] ^= b.words_[w];
    return c;
}

BitPoly rotate(const BitPoly& a, long long i) {
    const int n = a.length();
    int s = static_cast<int>(((i % n) + n) % n);
    if (s == 0) return a;
    BitPoly c(n);
    for (int k = 0; k < n; ++k) {
        if (!a.bit(k)) continue;
        int t = k + s;
        c.set_bit(t >= n ? t - n : t, true);
    }
    return c;
}

BitPoly mul_binomial(const BitPoly& a, int d) {
    if (d < 1 || d > a.length() - 1)
        throw std::invalid_argument("mul_binomial: shift must lie in 1..n-1");
    return add(a, rotate(a, d));
}

bool column_valid(const BitPoly& a, int p, int tau) {
    if (p <= 0 || tau <= 0 || a.length() != p * tau)
        throw std::invalid_argument("column_valid: length must equal p * tau");
    for (int u = 0; u < tau; ++u) {
        bool acc = false;
        for (int l = 0; l < p; ++l) acc ^= a.bit(l * tau + u);
        if (acc) return false;
    }
    return true;
}

BitPoly lift(const std::vector<uint8_t>& data, int p, int tau) {
    const int n = p * tau;
    if (p <= 0 || tau <= 0 || static_cast<int>(data.size()) != n - tau)
        throw std::invalid_argument("lift: data length must equal n - tau");
    BitPoly base(n);
    for (int i = 0; i < n - tau; ++i)
        if (data[i]) base.set_bit(i, true);
    // deg(x') <= n - tau - 1, so alpha^tau * x' does not wrap around
    return add(base, rotate(base, tau));
}

std::vector<uint8_t> lift_inverse(const BitPoly& a, int p, int tau) {
    const int n = p * tau;
    if (a.length() != n) throw std::invalid_argument("lift_inverse: length must equal p * tau");
    std::vector<uint8_t> rem = a.bits();
    std::vector<uint8_t> quot(n - tau, 0);
    for (int i = n - 1; i >= tau; --i) {
        if (!rem[i]) continue;
        quot[i - tau] = 1;
        rem[i] = 0;
        rem[i - tau] ^= 1;
    }
    for (int i = 0; i < tau; ++i)
        if (rem[i]) throw std::invalid_argument("lift_inverse: value is not a multiple of 1 xor alpha^tau");
    return quot;
}

bool lex_less(const BitPoly& a, const BitPoly& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t w = 0; w < a.words_.size(); ++w) {
        uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            // first differing coefficient decides; 0 sorts before 1
            uint64_t lowest = diff & (~diff + 1);
            return (a.words_[w] & lowest) == 0;
        }
    }
    return false;
}

}  // namespace gebr
