#include "gebr/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace gebr::gf2 {

Matrix::Matrix(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("gf2::Matrix: negative dimensions");
    rows_ = rows;
    cols_ = cols;
    stride_ = std::max(1, (cols + 63) / 64);
    w_.assign(static_cast<size_t>(rows_) * stride_, 0);
}

bool Matrix::get(int r, int c) const {
    return (w_[static_cast<size_t>(r) * stride_ + (c >> 6)] >> (c & 63)) & 1u;
}

void Matrix::set(int r, int c, bool v) {
    uint64_t& word = w_[static_cast<size_t>(r) * stride_ + (c >> 6)];
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
        word |= mask;
    else
        word &= ~mask;
}

void Matrix::flip(int r, int c) {
    w_[static_cast<size_t>(r) * stride_ + (c >> 6)] ^= uint64_t(1) << (c & 63);
}

void Matrix::xor_row(int dst, int src) {
    uint64_t* d = &w_[static_cast<size_t>(dst) * stride_];
    const uint64_t* s = &w_[static_cast<size_t>(src) * stride_];
    for (int i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + static_cast<size_t>(a) * stride_,
                     w_.begin() + static_cast<size_t>(a + 1) * stride_,
                     w_.begin() + static_cast<size_t>(b) * stride_);
}

AffineSolution solve(Matrix a, std::vector<uint8_t> rhs) {
    const int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(rhs.size()) != rows)
        throw std::invalid_argument("gf2::solve: rhs size mismatch");

    std::vector<int> pivot_row_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r) {
            if (a.get(r, c)) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        a.swap_rows(pr, rank);
        std::swap(rhs[pr], rhs[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r != rank && a.get(r, c)) {
                a.xor_row(r, rank);
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_row_of_col[c] = rank;
        ++rank;
    }

    AffineSolution out;
    for (int r = rank; r < rows; ++r) {
        if (rhs[r]) return out;  // zero row with nonzero rhs
    }
    out.consistent = true;
    out.particular.assign(cols, 0);
    for (int c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) out.particular[c] = rhs[pivot_row_of_col[c]];
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<uint8_t> v(cols, 0);
        v[c] = 1;
        for (int pc = 0; pc < cols; ++pc) {
            int pr = pivot_row_of_col[pc];
            if (pr >= 0 && a.get(pr, c)) v[pc] = 1;
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<uint8_t>> nullspace(const Matrix& a) {
    return solve(a, std::vector<uint8_t>(a.rows(), 0)).kernel;
}

}  // namespace gebr::gf2
