#include "gebr/codec.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gebr/gf2.hpp"

namespace gebr {

namespace {

// Safety bounds for ambiguity enumeration. Desk-scale inputs stay far
// below them; past the bound we keep what we have and mark truncated.
constexpr size_t kMaxCompleteAssignments = size_t(1) << 16;
constexpr size_t kLevelBudget = size_t(1) << 12;
constexpr int kMaxKernelBitsPerDivision = 12;

std::vector<BitPoly> partial_syndromes(const ArrayCodeword& a, const std::vector<int>& erased,
                                       int rows) {
    const int n = a.params.n;
    std::vector<char> is_erased(n, 0);
    for (int j : erased) is_erased[j] = 1;
    std::vector<BitPoly> s(rows, BitPoly(n));
    for (int j = 0; j < n; ++j) {
        if (is_erased[j]) continue;
        for (int l = 0; l < rows; ++l)
            s[l] = add(s[l], rotate(a.columns[j], static_cast<long long>(l) * j));
    }
    return s;
}

struct BranchState {
    GebrParams prm;
    std::vector<int> pos;           // erased positions, ascending
    std::vector<long long> prefix;  // prefix[l] = pos[0] + ... + pos[l-1]
    std::map<int, std::vector<BitPoly>> kernel_cache;
    std::vector<std::vector<BitPoly>> complete;
    bool overflow = false;
};

const std::vector<BitPoly>& kernel_for(BranchState& st, int d) {
    auto it = st.kernel_cache.find(d);
    if (it == st.kernel_cache.end())
        it = st.kernel_cache.emplace(d, kernel_basis(st.prm.n, st.prm.p, st.prm.tau, d)).first;
    return it->second;
}

// Every y with (1 xor alpha^d) y = u inside the column condition.
std::vector<BitPoly> division_solutions(BranchState& st, const BitPoly& u, int d) {
    RecursionOutcome out = solve_binomial(u, d, st.prm);
    if (out.kind == RecursionOutcome::Kind::NoSolution) return {};
    if (out.kind == RecursionOutcome::Kind::Unique) return {out.solution};
    const std::vector<BitPoly>& basis = kernel_for(st, d);
    int use = static_cast<int>(basis.size());
    if (use > kMaxKernelBitsPerDivision) {
        use = kMaxKernelBitsPerDivision;
        st.overflow = true;
    }
    std::vector<BitPoly> all;
    all.reserve(size_t(1) << use);
    all.push_back(out.solution);
    for (int b = 0; b < use; ++b) {
        const size_t sz = all.size();
        for (size_t i = 0; i < sz; ++i) all.push_back(add(all[i], basis[b]));
    }
    return all;
}

void solve_rows(BranchState& st, int l, std::vector<BitPoly>& assign,
                const std::vector<BitPoly>& rhs) {
    if (st.complete.size() >= kMaxCompleteAssignments) {
        st.overflow = true;
        return;
    }
    if (l < 0) {
        st.complete.push_back(assign);
        return;
    }
    const int e = static_cast<int>(st.pos.size());

    // Fold the already-solved unknowns into the row: their coefficient is
    // the product of the pivot factors alpha^{j_b} (1 xor alpha^{j_a - j_b}).
    BitPoly acc = rhs[l];
    for (int a = l + 1; a < e; ++a) {
        BitPoly t = assign[a];
        for (int b = 0; b < l; ++b) t = mul_binomial(rotate(t, st.pos[b]), st.pos[a] - st.pos[b]);
        acc = add(acc, t);
    }

    // Divide by the pivot: undo the accumulated rotation, then peel off the
    // binomial factors one solve at a time.
    std::vector<BitPoly> candidates{rotate(acc, -st.prefix[l])};
    for (int b = 0; b < l; ++b) {
        const int d = st.pos[l] - st.pos[b];
        std::vector<BitPoly> next;
        for (const BitPoly& cand : candidates) {
            std::vector<BitPoly> sols = division_solutions(st, cand, d);
            next.insert(next.end(), sols.begin(), sols.end());
        }
        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() > kLevelBudget) {
            st.overflow = true;
            next.resize(kLevelBudget);
        }
        candidates = std::move(next);
        if (candidates.empty()) return;  // dead branch
    }

    for (const BitPoly& x : candidates) {
        assign[l] = x;
        solve_rows(st, l - 1, assign, rhs);
        if (st.complete.size() >= kMaxCompleteAssignments) {
            st.overflow = true;
            return;
        }
    }
}

DecodeOutcome classify(std::vector<ArrayCodeword> sols, bool overflow) {
    std::sort(sols.begin(), sols.end(), array_lex_less);
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    if (sols.empty()) return DecodeOutcome{DecodeOutcome::Kind::Inconsistent, {}, false};
    if (sols.size() == 1 && !overflow)
        return DecodeOutcome{DecodeOutcome::Kind::Recovered, std::move(sols), false};
    bool truncated = overflow || sols.size() > static_cast<size_t>(kMaxAmbiguousSolutions);
    if (sols.size() > static_cast<size_t>(kMaxAmbiguousSolutions))
        sols.resize(kMaxAmbiguousSolutions);
    return DecodeOutcome{DecodeOutcome::Kind::Ambiguous, std::move(sols), truncated};
}

// Shared entry checks; returns true (with `early` filled) if decoding is
// already settled.
bool decode_preamble(const ArrayCodeword& a, const ErasurePattern& pattern, DecodeOutcome& early) {
    validate_array(a);
    const GebrParams& prm = a.params;
    if (pattern.erased.size() > static_cast<size_t>(prm.r))
        throw std::invalid_argument("decode: pattern exceeds r erasures");
    std::vector<char> is_erased(prm.n, 0);
    int prev = -1;
    for (int j : pattern.erased) {
        if (j < 0 || j >= prm.n || j <= prev)
            throw std::invalid_argument("decode: pattern must be strictly increasing and in range");
        prev = j;
        is_erased[j] = 1;
    }
    for (int j = 0; j < prm.n; ++j) {
        if (!is_erased[j] && !column_valid(a.columns[j], prm.p, prm.tau)) {
            early = DecodeOutcome{DecodeOutcome::Kind::Inconsistent, {}, false};
            return true;
        }
    }
    if (pattern.erased.empty()) {
        if (check_membership(a).is_codeword())
            early = DecodeOutcome{DecodeOutcome::Kind::Recovered, {a}, false};
        else
            early = DecodeOutcome{DecodeOutcome::Kind::Inconsistent, {}, false};
        return true;
    }
    return false;
}

}  // namespace

ErasurePattern make_pattern(std::vector<int> columns, int n) {
    std::sort(columns.begin(), columns.end());
    int prev = -1;
    for (int j : columns) {
        if (j < 0 || j >= n) throw std::invalid_argument("make_pattern: column index out of range");
        if (j == prev) throw std::invalid_argument("make_pattern: duplicate column index");
        prev = j;
    }
    return ErasurePattern{std::move(columns)};
}

DecodeOutcome decode_erasures(const ArrayCodeword& a, const ErasurePattern& pattern) {
    DecodeOutcome early;
    if (decode_preamble(a, pattern, early)) return early;

    const GebrParams& prm = a.params;
    const int e = static_cast<int>(pattern.erased.size());

    BranchState st;
    st.prm = prm;
    st.pos = pattern.erased;
    st.prefix.assign(e, 0);
    for (int l = 1; l < e; ++l) st.prefix[l] = st.prefix[l - 1] + st.pos[l - 1];

    // Forward elimination: adding alpha^{j_t} times the row above zeroes
    // unknown t and leaves the triangular pivot products in place. The
    // same combination is applied to the syndromes.
    std::vector<BitPoly> rhs = partial_syndromes(a, pattern.erased, e);
    for (int t = 0; t + 1 < e; ++t)
        for (int l = e - 1; l > t; --l) rhs[l] = add(rhs[l], rotate(rhs[l - 1], st.pos[t]));

    std::vector<BitPoly> assign(e, BitPoly(prm.n));
    solve_rows(st, e - 1, assign, rhs);

    std::vector<ArrayCodeword> sols;
    sols.reserve(st.complete.size());
    for (const auto& as : st.complete) {
        ArrayCodeword c = a;
        for (int idx = 0; idx < e; ++idx) c.columns[pattern.erased[idx]] = as[idx];
        if (check_membership(c).is_codeword()) sols.push_back(std::move(c));
    }
    return classify(std::move(sols), st.overflow);
}

DecodeOutcome decode_erasures_dense(const ArrayCodeword& a, const ErasurePattern& pattern) {
    DecodeOutcome early;
    if (decode_preamble(a, pattern, early)) return early;

    const GebrParams& prm = a.params;
    const int e = static_cast<int>(pattern.erased.size());
    const int n = prm.n, r = prm.r, dim = n - prm.tau;

    std::vector<BitPoly> s = partial_syndromes(a, pattern.erased, r);

    gf2::Matrix m(r * n, e * dim);
    std::vector<uint8_t> unit(dim, 0);
    for (int ai = 0; ai < e; ++ai) {
        const int j = pattern.erased[ai];
        for (int t = 0; t < dim; ++t) {
            unit[t] = 1;
            BitPoly base = lift(unit, prm.p, prm.tau);
            unit[t] = 0;
            for (int l = 0; l < r; ++l) {
                BitPoly rot = rotate(base, static_cast<long long>(l) * j);
                for (int u = 0; u < n; ++u)
                    if (rot.bit(u)) m.set(l * n + u, ai * dim + t, true);
            }
        }
    }
    std::vector<uint8_t> rhs(static_cast<size_t>(r) * n, 0);
    for (int l = 0; l < r; ++l)
        for (int u = 0; u < n; ++u) rhs[static_cast<size_t>(l) * n + u] = s[l].bit(u) ? 1 : 0;

    gf2::AffineSolution sol = gf2::solve(std::move(m), std::move(rhs));
    if (!sol.consistent) return DecodeOutcome{DecodeOutcome::Kind::Inconsistent, {}, false};

    bool overflow = false;
    int use = static_cast<int>(sol.kernel.size());
    if (use > 16) {  // 2^16 assignment budget
        use = 16;
        overflow = true;
    }
    std::vector<std::vector<uint8_t>> zs{sol.particular};
    zs.reserve(size_t(1) << use);
    for (int b = 0; b < use; ++b) {
        const size_t sz = zs.size();
        for (size_t i = 0; i < sz; ++i) {
            std::vector<uint8_t> v = zs[i];
            for (int c = 0; c < e * dim; ++c) v[c] ^= sol.kernel[b][c];
            zs.push_back(std::move(v));
        }
    }

    std::vector<ArrayCodeword> sols;
    sols.reserve(zs.size());
    for (const auto& z : zs) {
        ArrayCodeword c = a;
        for (int ai = 0; ai < e; ++ai) {
            std::vector<uint8_t> data(z.begin() + static_cast<size_t>(ai) * dim,
                                      z.begin() + static_cast<size_t>(ai + 1) * dim);
            c.columns[pattern.erased[ai]] = lift(data, prm.p, prm.tau);
        }
        sols.push_back(std::move(c));
    }
    return classify(std::move(sols), overflow);
}

ArrayCodeword encode(const std::vector<std::vector<uint8_t>>& info, const GebrParams& params,
                     std::vector<int> parity_positions) {
    const int n = params.n, r = params.r, dim = n - params.tau;
    if (static_cast<int>(parity_positions.size()) != r)
        throw std::invalid_argument("encode: need exactly r parity positions");
    std::sort(parity_positions.begin(), parity_positions.end());
    int prev = -1;
    for (int j : parity_positions) {
        if (j < 0 || j >= n || j == prev)
            throw std::invalid_argument("encode: parity positions must be distinct and in range");
        prev = j;
    }
    const int k = static_cast<int>(info.size());
    if (k + r > n) throw std::invalid_argument("encode: k + r exceeds n");
    for (const auto& v : info)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("encode: info vectors must carry n - tau bits");

    std::vector<char> is_parity(n, 0);
    for (int j : parity_positions) is_parity[j] = 1;

    ArrayCodeword out = zero_array(params);
    int placed = 0;
    for (int j = 0; j < n && placed < k; ++j) {
        if (is_parity[j]) continue;
        out.columns[j] = lift(info[placed++], params.p, params.tau);
    }
    // remaining non-parity columns stay zero (shortening)

    DecodeOutcome dec = decode_erasures(out, ErasurePattern{parity_positions});
    if (dec.kind == DecodeOutcome::Kind::Recovered) return dec.solutions.front();
    if (dec.kind == DecodeOutcome::Kind::Ambiguous)
        throw std::invalid_argument(
            "encode: parity positions are not uniquely solvable (code is not MDS)");
    throw std::invalid_argument("encode: no consistent parity completion for this pattern");
}

ArrayCodeword puncture(const ArrayCodeword& a, const ErasurePattern& pattern) {
    validate_array(a);
    ArrayCodeword out = a;
    for (int j : pattern.erased) {
        if (j < 0 || j >= a.params.n) throw std::invalid_argument("puncture: column out of range");
        out.columns[j] = BitPoly(a.params.n);
    }
    return out;
}

}  // namespace gebr
