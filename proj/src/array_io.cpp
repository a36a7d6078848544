#include "gebr/array_io.hpp"

#include <fstream>
#include <sstream>

namespace gebr {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    if (text.find('\r') != std::string::npos)
        throw ParseError("array file: CR line endings are not accepted");
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

int parse_int(const std::string& tok, const char* what) {
    if (tok.empty() || tok.size() > 9) throw ParseError(std::string("array file: bad ") + what);
    long long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError(std::string("array file: bad ") + what);
        v = v * 10 + (c - '0');
    }
    return static_cast<int>(v);
}

}  // namespace

ArrayFile parse_array_file(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError("array file: missing header");

    std::istringstream hdr(lines[0]);
    std::string magic, ns, ps, rs, extra;
    if (!(hdr >> magic >> ns >> ps >> rs) || (hdr >> extra) || magic != "GEBR")
        throw ParseError("array file: header must be \"GEBR n p r\"");
    GebrParams params;
    try {
        params = make_params(parse_int(ns, "n"), parse_int(ps, "p"), parse_int(rs, "r"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("array file: ") + e.what());
    }

    const int n = params.n;
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("array file: expected exactly n body rows");

    ArrayCodeword array = zero_array(params);
    std::vector<char> col_erased(n, 0), col_present(n, 0);
    for (int u = 0; u < n; ++u) {
        const std::string& row = lines[u + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("array file: every row must have exactly n characters");
        for (int j = 0; j < n; ++j) {
            switch (row[j]) {
                case '0':
                    col_present[j] = 1;
                    break;
                case '1':
                    col_present[j] = 1;
                    array.set_bit(u, j, true);
                    break;
                case '?':
                    col_erased[j] = 1;
                    break;
                default:
                    throw ParseError("array file: rows may contain only 0, 1 or ?");
            }
        }
    }

    ArrayFile out{std::move(array), {}};
    for (int j = 0; j < n; ++j) {
        if (col_erased[j] && col_present[j])
            throw ParseError("array file: '?' must cover whole columns");
        if (col_erased[j]) out.erased.push_back(j);
    }
    return out;
}

std::string render_array_file(const ArrayCodeword& a, const std::vector<int>& erased) {
    validate_array(a);
    const int n = a.params.n;
    std::vector<char> is_erased(n, 0);
    int prev = -1;
    for (int j : erased) {
        if (j < 0 || j >= n || j <= prev)
            throw std::invalid_argument("render_array_file: erased columns must be ascending and in range");
        prev = j;
        is_erased[j] = 1;
    }
    std::string out = "GEBR " + std::to_string(n) + " " + std::to_string(a.params.p) + " " +
                      std::to_string(a.params.r) + "\n";
    out.reserve(out.size() + static_cast<size_t>(n) * (n + 1));
    for (int u = 0; u < n; ++u) {
        for (int j = 0; j < n; ++j)
            out += is_erased[j] ? '?' : (a.bit(u, j) ? '1' : '0');
        out += '\n';
    }
    return out;
}

ArrayFile read_array_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_array_file(buf.str());
}

void write_array_file(const std::string& path, const ArrayCodeword& a,
                      const std::vector<int>& erased) {
    std::string text = render_array_file(a, erased);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace gebr
