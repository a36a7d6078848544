#pragma once

#include <cstdint>
#include <vector>

namespace gebr::gf2 {

/// Dense GF(2) matrix with 64-bit packed rows. Internal helper behind the
/// kernel computations, the recursion solver's constraint system and the
/// dense reference decoder.
class Matrix {
public:
    Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void flip(int r, int c);
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

private:
    int rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> w_;
};

struct AffineSolution {
    bool consistent = false;
    std::vector<uint8_t> particular;           // free variables fixed to 0
    std::vector<std::vector<uint8_t>> kernel;  // canonical nullspace basis
};

/// Gauss-Jordan solve of A x = rhs.
AffineSolution solve(Matrix a, std::vector<uint8_t> rhs);

/// Basis of { x : A x = 0 }, one vector per free column.
std::vector<std::vector<uint8_t>> nullspace(const Matrix& a);

}  // namespace gebr::gf2
