#include "ccode/codec.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "ccode/errors.hpp"

namespace ccode {

namespace {

constexpr char kMagic[4] = {'C', 'C', 'S', 'T'};
constexpr std::uint32_t kVersion = 1;

void xor_block(std::uint8_t* dst, const std::uint8_t* src, std::uint32_t len) {
    for (std::uint32_t i = 0; i < len; ++i) dst[i] ^= src[i];
}

// (column, edge index) of every information block incident to each vertex.
std::vector<std::vector<std::pair<int, int>>> incidence(
    const std::vector<EdgeSet>& columns, int length) {
    std::vector<std::vector<std::pair<int, int>>> inc(length);
    for (int c = 0; c < length; ++c) {
        for (int j = 0; j < static_cast<int>(columns[c].size()); ++j) {
            inc[columns[c][j].first].push_back({c, j});
            inc[columns[c][j].second].push_back({c, j});
        }
    }
    return inc;
}

void write_u32(std::ostream& out, std::uint32_t v) {
    const std::uint8_t bytes[4] = {
        static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
        static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 24)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
}

std::uint32_t read_u32(std::istream& in) {
    std::uint8_t bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    return static_cast<std::uint32_t>(bytes[0]) |
           static_cast<std::uint32_t>(bytes[1]) << 8 |
           static_cast<std::uint32_t>(bytes[2]) << 16 |
           static_cast<std::uint32_t>(bytes[3]) << 24;
}

}  // namespace

std::uint8_t* Stripe::cell(int row, int col) {
    return cells.data() + (static_cast<std::size_t>(col) * rows() + row) * block_size;
}

const std::uint8_t* Stripe::cell(int row, int col) const {
    return cells.data() + (static_cast<std::size_t>(col) * rows() + row) * block_size;
}

Stripe encode(std::span<const std::uint8_t> info_cells, const ArrayCode& code,
              std::uint32_t block_size) {
    if (!code_shape_ok(code)) {
        throw ShapeMismatch("malformed code");
    }
    if (block_size < 1) {
        throw ShapeMismatch("block size must be >= 1");
    }
    const int m = code.length;
    const int n = m / 2;
    const std::size_t expected =
        static_cast<std::size_t>(n - 1) * m * block_size;
    if (info_cells.size() != expected) {
        throw ShapeMismatch("expected " + std::to_string(expected) +
                            " information bytes, got " +
                            std::to_string(info_cells.size()));
    }

    Stripe stripe{code, block_size, {}};
    stripe.cells.assign(static_cast<std::size_t>(n) * m * block_size, 0);
    for (int c = 0; c < m; ++c) {
        std::memcpy(stripe.cell(0, c),
                    info_cells.data() + static_cast<std::size_t>(c) * (n - 1) * block_size,
                    static_cast<std::size_t>(n - 1) * block_size);
    }

    const auto columns = expand_columns(code);
    for (int c = 0; c < m; ++c) {
        for (int j = 0; j < n - 1; ++j) {
            const auto& [x, y] = columns[c][j];
            xor_block(stripe.cell(n - 1, x), stripe.cell(j, c), block_size);
            xor_block(stripe.cell(n - 1, y), stripe.cell(j, c), block_size);
        }
    }
    return stripe;
}

Stripe decode(const Stripe& damaged, const ErasurePattern& pattern) {
    if (pattern.erased.size() > 2) {
        throw TooManyErasures("cannot recover " +
                              std::to_string(pattern.erased.size()) + " erasures");
    }
    const int m = damaged.code.length;
    const int n = m / 2;
    std::vector<bool> erased(m, false);
    for (int c : pattern.erased) {
        if (c < 0 || c >= m || erased[c]) {
            throw ShapeMismatch("bad erased column index " + std::to_string(c));
        }
        erased[c] = true;
    }

    Stripe stripe = damaged;
    const std::uint32_t bs = stripe.block_size;
    for (int c = 0; c < m; ++c) {
        if (erased[c]) {
            std::memset(stripe.cell(0, c), 0, static_cast<std::size_t>(n) * bs);
        }
    }

    const auto columns = expand_columns(stripe.code);
    const auto inc = incidence(columns, m);

    std::vector<std::vector<bool>> unknown(m);
    int remaining = 0;
    for (int c = 0; c < m; ++c) {
        unknown[c].assign(n - 1, erased[c]);
        if (erased[c]) remaining += n - 1;
    }

    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (int v = 0; v < m; ++v) {
            if (erased[v]) continue;
            int unknown_count = 0;
            std::pair<int, int> target{-1, -1};
            for (const auto& [c, j] : inc[v]) {
                if (unknown[c][j]) {
                    ++unknown_count;
                    target = {c, j};
                }
            }
            if (unknown_count != 1) continue;
            // the parity equation at v now determines the one unknown block
            std::uint8_t* cell = stripe.cell(target.second, target.first);
            std::memcpy(cell, stripe.cell(n - 1, v), bs);
            for (const auto& [c, j] : inc[v]) {
                if (c != target.first || j != target.second) {
                    xor_block(cell, stripe.cell(j, c), bs);
                }
            }
            unknown[target.first][target.second] = false;
            --remaining;
            progress = true;
        }
    }
    if (remaining > 0) {
        throw Stuck("peeling halted with " + std::to_string(remaining) +
                    " unresolved blocks; the code definition is corrupt");
    }

    // erased parity blocks follow from their (now fully known) equations
    for (int v = 0; v < m; ++v) {
        if (!erased[v]) continue;
        std::uint8_t* parity = stripe.cell(n - 1, v);
        std::memset(parity, 0, bs);
        for (const auto& [c, j] : inc[v]) {
            xor_block(parity, stripe.cell(j, c), bs);
        }
    }
    return stripe;
}

std::vector<int> scrub(const Stripe& stripe) {
    const int m = stripe.code.length;
    const int n = m / 2;
    const std::uint32_t bs = stripe.block_size;
    const auto columns = expand_columns(stripe.code);
    const auto inc = incidence(columns, m);

    std::vector<int> bad;
    std::vector<std::uint8_t> acc(bs);
    for (int v = 0; v < m; ++v) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [c, j] : inc[v]) {
            xor_block(acc.data(), stripe.cell(j, c), bs);
        }
        if (std::memcmp(acc.data(), stripe.cell(n - 1, v), bs) != 0) {
            bad.push_back(v);
        }
    }
    return bad;
}

std::vector<std::uint8_t> info_payload(const Stripe& stripe) {
    const int m = stripe.code.length;
    const int n = m / 2;
    const std::uint32_t bs = stripe.block_size;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n - 1) * m * bs);
    for (int c = 0; c < m; ++c) {
        std::memcpy(out.data() + static_cast<std::size_t>(c) * (n - 1) * bs,
                    stripe.cell(0, c), static_cast<std::size_t>(n - 1) * bs);
    }
    return out;
}

void write_stripe(std::ostream& out, const Stripe& stripe) {
    out.write(kMagic, 4);
    write_u32(out, kVersion);
    write_u32(out, static_cast<std::uint32_t>(stripe.code.length));
    write_u32(out, stripe.block_size);
    out.write(reinterpret_cast<const char*>(stripe.cells.data()),
              static_cast<std::streamsize>(stripe.cells.size()));
}

Stripe read_stripe(std::istream& in, const ArrayCode& code) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) {
        throw ParseError(1, 1, "not a stripe file (bad magic)");
    }
    const std::uint32_t version = read_u32(in);
    const std::uint32_t length = read_u32(in);
    const std::uint32_t block_size = read_u32(in);
    if (!in || version != kVersion) {
        throw ParseError(1, 5, "unsupported stripe version " + std::to_string(version));
    }
    if (length != static_cast<std::uint32_t>(code.length)) {
        throw ValidationError("stripe length " + std::to_string(length) +
                              " does not match code length " +
                              std::to_string(code.length));
    }
    if (block_size < 1) {
        throw ValidationError("stripe block size must be >= 1");
    }
    Stripe stripe{code, block_size, {}};
    const std::size_t total =
        static_cast<std::size_t>(code.length) * (code.length / 2) * block_size;
    stripe.cells.resize(total);
    in.read(reinterpret_cast<char*>(stripe.cells.data()),
            static_cast<std::streamsize>(total));
    if (static_cast<std::size_t>(in.gcount()) != total) {
        throw ValidationError("stripe file truncated");
    }
    return stripe;
}

}  // namespace ccode
