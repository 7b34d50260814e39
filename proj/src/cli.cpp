#include "ccode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ccode/array_code.hpp"
#include "ccode/bit_matrix.hpp"
#include "ccode/code_file.hpp"
#include "ccode/codec.hpp"
#include "ccode/errors.hpp"
#include "ccode/factorization.hpp"
#include "ccode/search.hpp"

namespace ccode {

namespace {

ArrayCode load_code(const std::string& path, bool verify) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open code file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str(), verify);
}

std::vector<std::uint8_t> read_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open input file '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_binary(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    file << text;
}

int family_prime(const std::string& method, int length) {
    const bool quasi = method.rfind("quasi2", 0) == 0;
    const int p = quasi ? length / 2 + 1 : length + 1;
    if (!is_prime(p) || p < 5) {
        throw ValidationError("method '" + method + "' at length " +
                              std::to_string(length) + " needs p = " +
                              std::to_string(p) + " to be a prime >= 5");
    }
    return p;
}

ArrayCode construct_code(const std::string& method, int length) {
    if (method == "search") {
        auto code = find_first_ccode(length);
        if (!code) {
            throw ValidationError("no code of length " + std::to_string(length) +
                                  " exists");
        }
        return *code;
    }
    const int p = family_prime(method, length);
    if (method == "quasi2" || method == "quasi2-twin") {
        MultiStarter ms = family_quasi2(p);
        if (method == "quasi2-twin") ms = twin_multi_starter(ms);
        return build_quasi_ccode(ms);
    }
    const PrimeField field(p);
    const MultStarter starter =
        method.rfind("family-a", 0) == 0 ? family_A(p) : family_B(p);
    ArrayCode code = ccode_from_bcode(bcode_from_mult_starter(starter), field);
    if (method == "family-a-twin" || method == "family-b-twin") {
        code = twin_code(code);
    }
    return code;
}

struct OracleReport {
    bool graph_ok = true;
    bool matrix_ok = true;
};

OracleReport run_oracles(const ArrayCode& code, const std::string& oracle,
                         std::ostream& out) {
    OracleReport report;
    if (oracle == "graph" || oracle == "both") {
        report.graph_ok = verify_condition1(code);
        out << "graph: " << (report.graph_ok ? "ok" : "FAIL") << "\n";
    }
    if (oracle == "matrix" || oracle == "both") {
        report.matrix_ok =
            verify_def2(build_parity_check(code), code.length, code.kappa);
        out << "matrix: " << (report.matrix_ok ? "ok" : "FAIL") << "\n";
    }
    return report;
}

std::vector<int> parse_erased(const std::string& spec) {
    std::vector<int> erased;
    if (spec.empty()) return erased;
    std::istringstream iss(spec);
    std::string token;
    while (std::getline(iss, token, ',')) {
        try {
            erased.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ValidationError("bad --erased value '" + token + "'");
        }
    }
    return erased;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic lowest-density MDS array codes for double-erasure protection"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Construct a code and write it");
    int construct_length = 0;
    std::string construct_method = "search";
    std::string construct_out;
    construct->add_option("--length", construct_length, "Code length 2n")->required();
    construct->add_option("--method", construct_method, "Construction method")
        ->check(CLI::IsMember({"search", "family-a", "family-b", "family-a-twin",
                               "family-b-twin", "quasi2", "quasi2-twin"}));
    construct->add_option("-o,--output", construct_out, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a code file against the oracles");
    std::string verify_file;
    std::string verify_oracle = "both";
    verify->add_option("file", verify_file, "Code file")->required();
    verify->add_option("--oracle", verify_oracle, "Oracle to run")
        ->check(CLI::IsMember({"matrix", "graph", "both"}));

    // twin
    auto* twin = app.add_subcommand("twin", "Write the twin of a code file");
    std::string twin_file;
    std::string twin_out;
    bool twin_no_verify = false;
    twin->add_option("file", twin_file, "Code file")->required();
    twin->add_option("-o,--output", twin_out, "Output file (default stdout)");
    twin->add_flag("--no-verify", twin_no_verify, "Skip the two-column check on load");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Print the parity-check matrix");
    std::string matrix_file;
    bool matrix_no_verify = false;
    matrix->add_option("file", matrix_file, "Code file")->required();
    matrix->add_flag("--no-verify", matrix_no_verify, "Skip the two-column check on load");

    // search
    auto* search = app.add_subcommand("search", "Exhaustive starter search");
    int search_length = 0;
    bool search_count = false;
    bool search_first = false;
    search->add_option("--length", search_length, "Code length 2n")->required();
    search->add_flag("--count", search_count, "Print the number of codes");
    search->add_flag("--first", search_first, "Print the first code found");

    // encode
    auto* encode_cmd = app.add_subcommand("encode", "Encode data into a stripe file");
    std::string encode_code, encode_in, encode_out;
    std::uint32_t encode_block = 4096;
    bool encode_no_verify = false;
    encode_cmd->add_option("--code", encode_code, "Code file")->required();
    encode_cmd->add_option("--in", encode_in, "Input data file")->required();
    encode_cmd->add_option("--out", encode_out, "Output stripe file")->required();
    encode_cmd->add_option("--block-size", encode_block, "Block size in bytes");
    encode_cmd->add_flag("--no-verify", encode_no_verify,
                         "Skip the two-column check on load");

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "Recover data from a stripe file");
    std::string decode_code, decode_in, decode_out, decode_erased;
    bool decode_no_verify = false;
    decode_cmd->add_option("--code", decode_code, "Code file")->required();
    decode_cmd->add_option("--in", decode_in, "Input stripe file")->required();
    decode_cmd->add_option("--out", decode_out, "Output data file")->required();
    decode_cmd->add_option("--erased", decode_erased,
                           "Erased column indices, e.g. 3 or 3,7");
    decode_cmd->add_flag("--no-verify", decode_no_verify,
                         "Skip the two-column check on load");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (construct->parsed()) {
            emit_text(write_code_file(construct_code(construct_method, construct_length)),
                      construct_out, out);
            return 0;
        }
        if (verify->parsed()) {
            const ArrayCode code = load_code(verify_file, /*verify=*/false);
            const OracleReport report = run_oracles(code, verify_oracle, out);
            return report.graph_ok && report.matrix_ok ? 0 : 1;
        }
        if (twin->parsed()) {
            const ArrayCode code = load_code(twin_file, !twin_no_verify);
            emit_text(write_code_file(twin_code(code)), twin_out, out);
            return 0;
        }
        if (matrix->parsed()) {
            const ArrayCode code = load_code(matrix_file, !matrix_no_verify);
            const BitMatrix H = build_parity_check(code);
            const int n = code.length / 2;
            for (int i = 0; i < H.rows(); ++i) {
                for (int k = 0; k < code.length; ++k) {
                    if (k > 0) out << ' ';
                    for (int j = 0; j < n; ++j) {
                        out << (H.get(i, k * n + j) ? '1' : '0');
                    }
                }
                out << '\n';
            }
            return 0;
        }
        if (search->parsed()) {
            if (search_count == search_first) {
                err << "search requires exactly one of --count or --first\n";
                return 2;
            }
            if (search_count) {
                const SearchReport report = count_ccodes(search_length);
                err << "examined " << report.starters_examined << " starters in "
                    << report.elapsed_seconds << " s\n";
                out << report.codes_found << "\n";
                return 0;
            }
            auto code = find_first_ccode(search_length);
            if (!code) {
                err << "no code of length " << search_length << " exists\n";
                return 1;
            }
            out << write_code_file(*code);
            return 0;
        }
        if (encode_cmd->parsed()) {
            const ArrayCode code = load_code(encode_code, !encode_no_verify);
            const int n = code.length / 2;
            const std::size_t capacity =
                static_cast<std::size_t>(n - 1) * code.length * encode_block;
            std::vector<std::uint8_t> data = read_binary(encode_in);
            if (data.size() > capacity) {
                throw ValidationError("input is " + std::to_string(data.size()) +
                                      " bytes but the stripe holds " +
                                      std::to_string(capacity));
            }
            data.resize(capacity, 0);
            const Stripe stripe = encode(data, code, encode_block);
            std::ofstream file(encode_out, std::ios::binary);
            if (!file) {
                throw ValidationError("cannot open output file '" + encode_out + "'");
            }
            write_stripe(file, stripe);
            return 0;
        }
        if (decode_cmd->parsed()) {
            const ArrayCode code = load_code(decode_code, !decode_no_verify);
            std::ifstream file(decode_in, std::ios::binary);
            if (!file) {
                throw ValidationError("cannot open input file '" + decode_in + "'");
            }
            const Stripe damaged = read_stripe(file, code);
            const Stripe repaired =
                decode(damaged, ErasurePattern{parse_erased(decode_erased)});
            write_binary(decode_out, info_payload(repaired));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace ccode
