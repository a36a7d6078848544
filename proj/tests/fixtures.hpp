#pragma once

#include <string>
#include <vector>

#include "gebr/code.hpp"

// Reference arrays used across the test suites. Each is a known codeword of
// its parameter set; the *Alt arrays are alternative completions after
// erasing columns 0 and 3, demonstrating the non-MDS ambiguity.
namespace fixtures {

inline const std::vector<std::string> kArray632 = {
    "010100",
    "101110",
    "101000",
    "001111",
    "111100",
    "100001",
};

inline const std::vector<std::string> kArray632Alt = {
    "110000",
    "001010",
    "101000",
    "101011",
    "011000",
    "100001",
};

inline const std::vector<std::string> kArray622 = {
    "011110",
    "111001",
    "101110",
    "011110",
    "111001",
    "101110",
};

inline const std::vector<std::string> kArray622Alt = {
    "111010",
    "011101",
    "001010",
    "111010",
    "011101",
    "001010",
};

inline const std::vector<std::string> kArray933 = {
    "001100101",
    "010011001",
    "011011110",
    "011111111",
    "100010011",
    "100001110",
    "010011010",
    "110001010",
    "111010000",
};

inline gebr::ArrayCodeword array_from_rows(const gebr::GebrParams& params,
                                           const std::vector<std::string>& rows) {
    gebr::ArrayCodeword a = gebr::zero_array(params);
    for (int u = 0; u < params.n; ++u)
        for (int j = 0; j < params.n; ++j)
            if (rows[u][j] == '1') a.set_bit(u, j, true);
    return a;
}

inline gebr::ArrayCodeword array632() {
    return array_from_rows(gebr::make_params(6, 3, 2), kArray632);
}
inline gebr::ArrayCodeword array632_alt() {
    return array_from_rows(gebr::make_params(6, 3, 2), kArray632Alt);
}
inline gebr::ArrayCodeword array622() {
    return array_from_rows(gebr::make_params(6, 2, 2), kArray622);
}
inline gebr::ArrayCodeword array622_alt() {
    return array_from_rows(gebr::make_params(6, 2, 2), kArray622Alt);
}
inline gebr::ArrayCodeword array933() {
    return array_from_rows(gebr::make_params(9, 3, 3), kArray933);
}

}  // namespace fixtures
