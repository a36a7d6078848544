#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gebr/code.hpp"

namespace gebr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text interchange format for arrays:
///   line 1:        "GEBR n p r"
///   lines 2..n+1:  n characters from {0, 1, ?}; row u on line u+1,
///                  character j is entry (u, j)
/// LF line endings, no trailing whitespace. '?' marks erased entries and
/// must cover whole columns. Erased columns parse as zero-filled plus the
/// column index in `erased`.
struct ArrayFile {
    ArrayCodeword array;
    std::vector<int> erased;  // ascending
};

ArrayFile parse_array_file(const std::string& text);
std::string render_array_file(const ArrayCodeword& a, const std::vector<int>& erased = {});

ArrayFile read_array_file(const std::string& path);
void write_array_file(const std::string& path, const ArrayCodeword& a,
                      const std::vector<int>& erased = {});

}  // namespace gebr
