#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gebr/array_io.hpp"
#include "gebr/codec.hpp"
#include "gebr/witness.hpp"

namespace {

// Exit codes: 0 ok, 1 invalid/violation, 2 parse/usage, 3 ambiguous.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kAmbiguous = 3;

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::string support_string(const std::vector<int>& support) {
    std::string s = "{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(support[i]);
    }
    return s + "}";
}

std::string decomposition_string(int p, int tau) {
    gebr::TauDecomposition d = gebr::decompose_tau(p, tau);
    return "tau=" + std::to_string(tau) + " = " + std::to_string(p) + "^" + std::to_string(d.j) +
           " * " + std::to_string(d.m) + ", j=" + std::to_string(d.j) +
           ", m=" + std::to_string(d.m);
}

int cmd_check(const std::string& path) {
    gebr::ArrayFile file = gebr::read_array_file(path);
    if (!file.erased.empty()) throw gebr::ParseError("check: file contains erased columns");
    gebr::MembershipReport rep = gebr::check_membership(file.array);
    for (int j : rep.column_failures)
        std::cout << "column " << j << " violates the column parity condition\n";
    for (const auto& [slope, line] : rep.slope_failures)
        std::cout << "slope " << slope << " line " << line << " has odd parity\n";
    if (!rep.is_codeword()) {
        std::cout << "not a codeword (" << rep.column_failures.size() << " column, "
                  << rep.slope_failures.size() << " slope violations)\n";
        return kViolation;
    }
    std::cout << "ok: codeword of GEBR(" << file.array.params.n << "," << file.array.params.p
              << "," << file.array.params.r << ")\n";
    return kOk;
}

int cmd_decode(const std::string& path, const std::string& erased_csv, std::string out_path) {
    gebr::ArrayFile file = gebr::read_array_file(path);

    std::vector<int> erased = file.erased;
    if (!erased_csv.empty()) {
        gebr::ErasurePattern flag_pattern =
            gebr::make_pattern(parse_csv_ints(erased_csv), file.array.params.n);
        if (!file.erased.empty() && file.erased != flag_pattern.erased)
            throw gebr::ParseError("decode: --erased does not match the file's '?' columns");
        erased = flag_pattern.erased;
    }
    gebr::ErasurePattern pattern{erased};
    if (out_path.empty()) out_path = path + ".decoded";

    gebr::DecodeOutcome out = gebr::decode_erasures(file.array, pattern);
    switch (out.kind) {
        case gebr::DecodeOutcome::Kind::Recovered:
            gebr::write_array_file(out_path, out.solutions.front());
            std::cout << "recovered -> " << out_path << "\n";
            return kOk;
        case gebr::DecodeOutcome::Kind::Ambiguous: {
            for (size_t i = 0; i < out.solutions.size(); ++i) {
                std::string p = out_path + "." + std::to_string(i);
                gebr::write_array_file(p, out.solutions[i]);
                std::cout << "solution " << i << " -> " << p << "\n";
            }
            std::cout << "ambiguous: " << out.solutions.size() << " solutions"
                      << (out.truncated ? " (truncated)" : "") << "\n";
            return kAmbiguous;
        }
        case gebr::DecodeOutcome::Kind::Inconsistent:
        default:
            std::cout << "inconsistent: survivors admit no codeword completion\n";
            return kViolation;
    }
}

std::vector<uint8_t> read_payload_bits(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gebr::ParseError("cannot open " + path);
    std::vector<uint8_t> bits;
    char c;
    while (in.get(c)) {
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else if (c == ' ' || c == '\n' || c == '\t')
            continue;
        else
            throw gebr::ParseError("payload may contain only 0, 1 and whitespace");
    }
    return bits;
}

int cmd_encode(int n, int p, int r, const std::string& parity_csv, const std::string& data_path,
               const std::string& out_path, bool force) {
    gebr::GebrParams params = gebr::make_params(n, p, r);
    if (!gebr::is_mds_theorem(params) && !force) {
        std::cerr << "refusing to encode: GEBR(" << n << "," << p << "," << r
                  << ") is not MDS (" << decomposition_string(p, params.tau)
                  << "); pass --force to try this parity pattern anyway\n";
        return kViolation;
    }
    std::vector<int> parity = parse_csv_ints(parity_csv);
    std::vector<uint8_t> bits = read_payload_bits(data_path);
    const int dim = params.n - params.tau;
    if (bits.size() % dim != 0)
        throw gebr::ParseError("payload must hold k * (n - tau) = k * " + std::to_string(dim) +
                               " bits");
    const int k = static_cast<int>(bits.size()) / dim;
    std::vector<std::vector<uint8_t>> info(k);
    for (int i = 0; i < k; ++i)
        info[i].assign(bits.begin() + static_cast<size_t>(i) * dim,
                       bits.begin() + static_cast<size_t>(i + 1) * dim);

    gebr::ArrayCodeword cw;
    try {
        cw = gebr::encode(info, params, parity);
    } catch (const std::invalid_argument& e) {
        std::cerr << "encode failed: " << e.what() << "\n";
        return kViolation;
    }
    if (!gebr::check_membership(cw).is_codeword()) {
        std::cerr << "internal error: encoded array failed membership\n";
        return kViolation;
    }
    std::string text = gebr::render_array_file(cw);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        gebr::write_array_file(out_path, cw);
        std::cout << "encoded -> " << out_path << "\n";
    }
    return kOk;
}

int cmd_mds(int n, int p, int r, bool oracle) {
    gebr::GebrParams params = gebr::make_params(n, p, r);
    bool verdict = gebr::is_mds_theorem(params);
    std::cout << "GEBR(" << n << "," << p << "," << r << "): " << (verdict ? "MDS" : "NOT-MDS")
              << " (p=" << p << ", " << decomposition_string(p, params.tau) << ")\n";
    if (oracle) {
        bool by_oracle = gebr::is_mds_oracle(params);
        bool agree = by_oracle == verdict;
        std::cout << "oracle: " << (by_oracle ? "MDS" : "NOT-MDS")
                  << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
        if (!agree) return kViolation;
    }
    return kOk;
}

int cmd_witness(int n, int p, int r) {
    gebr::GebrParams params = gebr::make_params(n, p, r);
    if (gebr::is_mds_theorem(params)) {
        std::cerr << "GEBR(" << n << "," << p << "," << r << ") is MDS: no witness exists\n";
        return kViolation;
    }
    gebr::NonMdsWitness w = gebr::build_witness(params);
    std::cout << "GEBR(" << n << "," << p << "," << r << ") is NOT-MDS ("
              << decomposition_string(p, params.tau) << ")\n";
    std::cout << "shift i = " << w.shift << "\n";
    std::cout << "x support = " << support_string(w.x.support()) << "\n";
    if (w.ell) std::cout << "ell = " << *w.ell << "\n";
    std::cout << "pairing =";
    for (const auto& [a, b] : w.pairing) std::cout << " (" << a << "," << b << ")";
    std::cout << "\n";
    bool ok = gebr::verify_witness(w, params);
    std::cout << "verified: " << (ok ? "yes" : "NO") << "\n";
    return ok ? kOk : kViolation;
}

int cmd_sweep(int max_n, int r) {
    std::printf("%4s %4s %5s  %-8s %-8s %-8s\n", "n", "p", "tau", "theorem", "oracle", "witness");
    bool all_agree = true;
    for (int p = 2; p <= max_n; ++p) {
        if (!gebr::is_prime(p)) continue;
        for (int tau = 1; p * tau <= max_n; ++tau) {
            const int n = p * tau;
            bool theorem = gebr::is_mds_shape(p, tau);
            bool oracle = gebr::is_mds_oracle(n, p, tau);
            std::string witness_col = "-";
            if (!theorem) {
                gebr::NonMdsWitness w = gebr::build_witness(n, p, tau);
                witness_col = gebr::verify_witness(w, n, p, tau) ? "ok" : "FAIL";
            }
            bool agree = theorem == oracle && witness_col != "FAIL";
            all_agree = all_agree && agree;
            std::printf("%4d %4d %5d  %-8s %-8s %-8s%s%s\n", n, p, tau,
                        theorem ? "MDS" : "NOT-MDS", oracle ? "MDS" : "NOT-MDS",
                        witness_col.c_str(), agree ? "" : "  DISAGREE",
                        n <= r ? "  (n <= r: no valid r)" : "");
        }
    }
    std::cout << (all_agree ? "all cells agree\n" : "DISAGREEMENT FOUND\n");
    return all_agree ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GEBR array code tool: encode, decode, check and classify "
                 "GEBR(n,p,r) codes over n x n binary arrays"};
    app.require_subcommand(0, 1);

    std::string path, erased_csv, out_path, parity_csv, data_path;
    int n = 0, p = 0, r = 2, max_n = 30;
    bool oracle = false, force = false;

    CLI::App* check = app.add_subcommand("check", "verify that an array file is a codeword");
    check->add_option("path", path, "array file")->required();

    CLI::App* decode = app.add_subcommand("decode", "recover erased columns of an array file");
    decode->add_option("path", path, "array file")->required();
    decode->add_option("--erased", erased_csv, "comma-separated erased columns");
    decode->add_option("--out", out_path, "output path (default: <path>.decoded)");

    CLI::App* encode = app.add_subcommand("encode", "build a codeword file from payload bits");
    encode->add_option("--n", n, "array dimension")->required();
    encode->add_option("--p", p, "prime with p | n")->required();
    encode->add_option("--r", r, "number of slope parities")->required();
    encode->add_option("--parity-positions", parity_csv, "comma-separated parity columns")
        ->required();
    encode->add_option("--data", data_path, "payload file of k*(n-tau) bits")->required();
    encode->add_option("--out", out_path, "output path (default: stdout)");
    encode->add_flag("--force", force, "attempt encoding even for non-MDS parameters");

    CLI::App* mds = app.add_subcommand("mds", "classify parameters by the MDS criterion");
    mds->add_option("--n", n, "array dimension")->required();
    mds->add_option("--p", p, "prime with p | n")->required();
    mds->add_option("--r", r, "number of slope parities (default 2)");
    mds->add_flag("--oracle", oracle, "also run the exhaustive kernel oracle");

    CLI::App* witness = app.add_subcommand("witness", "print a non-MDS witness certificate");
    witness->add_option("--n", n, "array dimension")->required();
    witness->add_option("--p", p, "prime with p | n")->required();
    witness->add_option("--r", r, "number of slope parities (default 2)");

    CLI::App* sweep = app.add_subcommand("sweep", "verify theorem vs oracle for all p*tau <= N");
    sweep->add_option("--max-n", max_n, "largest n to test")->required();
    sweep->add_option("--r", r, "r used for labeling (verdicts do not depend on it)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(path);
        if (app.got_subcommand(decode)) return cmd_decode(path, erased_csv, out_path);
        if (app.got_subcommand(encode))
            return cmd_encode(n, p, r, parity_csv, data_path, out_path, force);
        if (app.got_subcommand(mds)) return cmd_mds(n, p, r, oracle);
        if (app.got_subcommand(witness)) return cmd_witness(n, p, r);
        if (app.got_subcommand(sweep)) return cmd_sweep(max_n, r);
        std::cerr << app.help();
        return kUsage;
    } catch (const gebr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    }
}
