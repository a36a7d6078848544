#include "gebr/code.hpp"

#include <stdexcept>

#include "gebr/gf2.hpp"

namespace gebr {

bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

GebrParams make_params(int n, int p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("make_params: p must be prime");
    if (n <= 0 || n % p != 0) throw std::invalid_argument("make_params: p must divide n");
    if (r < 2 || r >= n) throw std::invalid_argument("make_params: r must satisfy 2 <= r < n");
    return GebrParams{n, p, n / p, r};
}

ArrayCodeword zero_array(const GebrParams& params) {
    return ArrayCodeword{params, std::vector<BitPoly>(params.n, BitPoly(params.n))};
}

void validate_array(const ArrayCodeword& a) {
    const int n = a.params.n;
    if (n <= 0 || a.params.p <= 0 || a.params.tau <= 0 || n != a.params.p * a.params.tau)
        throw std::invalid_argument("validate_array: bad parameters");
    if (static_cast<int>(a.columns.size()) != n)
        throw std::invalid_argument("validate_array: array must have n columns");
    for (const BitPoly& c : a.columns)
        if (c.length() != n) throw std::invalid_argument("validate_array: column length must be n");
}

bool array_lex_less(const ArrayCodeword& a, const ArrayCodeword& b) {
    const int n = a.params.n;
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < n; ++j) {
            bool x = a.bit(u, j), y = b.bit(u, j);
            if (x != y) return !x;
        }
    return false;
}

namespace {

int mod_n(long long v, int n) {
    int m = static_cast<int>(v % n);
    return m < 0 ? m + n : m;
}

}  // namespace

MembershipReport check_membership(const ArrayCodeword& a) {
    validate_array(a);
    const GebrParams& prm = a.params;
    MembershipReport rep;
    for (int j = 0; j < prm.n; ++j)
        if (!column_valid(a.columns[j], prm.p, prm.tau)) rep.column_failures.push_back(j);
    for (int l = 0; l < prm.r; ++l) {
        for (int u = 0; u < prm.n; ++u) {
            bool acc = false;
            for (int j = 0; j < prm.n; ++j)
                acc ^= a.bit(mod_n(u - static_cast<long long>(l) * j, prm.n), j);
            if (acc) rep.slope_failures.emplace_back(l, u);
        }
    }
    return rep;
}

std::vector<BitPoly> syndromes(const ArrayCodeword& a) {
    validate_array(a);
    const GebrParams& prm = a.params;
    std::vector<BitPoly> s(prm.r, BitPoly(prm.n));
    for (int j = 0; j < prm.n; ++j)
        for (int l = 0; l < prm.r; ++l)
            s[l] = add(s[l], rotate(a.columns[j], static_cast<long long>(l) * j));
    return s;
}

bool is_mds_shape(int p, int tau) {
    if (!is_prime(p) || tau < 1) throw std::invalid_argument("is_mds_shape: need prime p and tau >= 1");
    if (p == 2) return false;
    while (tau % p == 0) tau /= p;
    return tau == 1;
}

bool is_mds_theorem(const GebrParams& params) {
    return is_mds_shape(params.p, params.tau);
}

std::vector<BitPoly> kernel_basis(int n, int p, int tau, int i) {
    if (p <= 0 || tau <= 0 || n != p * tau)
        throw std::invalid_argument("kernel_basis: n must equal p * tau");
    if (i < 1 || i > n - 1) throw std::invalid_argument("kernel_basis: shift must lie in 1..n-1");
    const int dim = n - tau;
    gf2::Matrix m(n, dim);
    std::vector<uint8_t> unit(dim, 0);
    for (int t = 0; t < dim; ++t) {
        unit[t] = 1;
        BitPoly col = mul_binomial(lift(unit, p, tau), i);
        unit[t] = 0;
        for (int u = 0; u < n; ++u)
            if (col.bit(u)) m.set(u, t, true);
    }
    std::vector<BitPoly> basis;
    for (const auto& v : gf2::nullspace(m)) basis.push_back(lift(v, p, tau));
    return basis;
}

std::vector<BitPoly> kernel_basis(const GebrParams& params, int i) {
    return kernel_basis(params.n, params.p, params.tau, i);
}

bool is_mds_oracle(int n, int p, int tau) {
    for (int i = 1; i < n; ++i)
        if (!kernel_basis(n, p, tau, i).empty()) return false;
    return true;
}

bool is_mds_oracle(const GebrParams& params) {
    return is_mds_oracle(params.n, params.p, params.tau);
}

}  // namespace gebr
