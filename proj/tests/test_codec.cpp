#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <random>
#include <sstream>

#include "ccode/bit_matrix.hpp"
#include "ccode/codec.hpp"
#include "ccode/errors.hpp"
#include "test_util.hpp"

using namespace ccode;
using testutil::edges;

namespace {

std::vector<std::uint8_t> random_payload(std::mt19937& rng, std::size_t size) {
    std::vector<std::uint8_t> data(size);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    return data;
}

std::size_t info_bytes(const ArrayCode& code, std::uint32_t block_size) {
    return static_cast<std::size_t>(code.length / 2 - 1) * code.length * block_size;
}

bool cell_bit(const Stripe& stripe, int row, int col, int bit) {
    return (stripe.cell(row, col)[bit / 8] >> (bit % 8)) & 1;
}

// The stripe's characteristic vector in the parity-check matrix's own column
// order: the matrix lists column k's information bits as the base column's
// edges shifted, while the stripe sorts each expanded column canonically.
std::vector<int> h_order_rows(const ArrayCode& code, int column) {
    const auto expanded = expand_columns(code);
    const auto& base = code.base_columns[column % code.kappa];
    const int delta = code.kappa * (column / code.kappa);
    std::vector<int> rows;
    for (const auto& e : base) {
        Edge shifted = make_edge(mod(e.first + delta, code.length),
                                 mod(e.second + delta, code.length));
        auto it = std::find(expanded[column].begin(), expanded[column].end(), shifted);
        REQUIRE(it != expanded[column].end());
        rows.push_back(static_cast<int>(it - expanded[column].begin()));
    }
    return rows;
}

std::vector<int> codeword_bits(const Stripe& stripe, int bit) {
    const int m = stripe.code.length;
    const int n = m / 2;
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(m) * n);
    for (int col = 0; col < m; ++col) {
        for (int row : h_order_rows(stripe.code, col)) {
            c.push_back(cell_bit(stripe, row, col, bit));
        }
        c.push_back(cell_bit(stripe, n - 1, col, bit));
    }
    return c;
}

// Independent recovery oracle: solve the (H_m H_k) system per bit position
// with plain Gaussian elimination over the augmented matrix.
Stripe matrix_decode(const Stripe& original, int erased_a, int erased_b) {
    const ArrayCode& code = original.code;
    const int m = code.length;
    const int n = m / 2;
    const BitMatrix H = build_parity_check(code);

    Stripe result = original;
    for (int col : {erased_a, erased_b}) {
        std::memset(result.cell(0, col), 0,
                    static_cast<std::size_t>(n) * result.block_size);
    }

    const int bits = static_cast<int>(original.block_size) * 8;
    for (int bit = 0; bit < bits; ++bit) {
        // syndrome from the surviving columns
        std::vector<int> s(m, 0);
        const auto known = codeword_bits(result, bit);
        for (int col = 0; col < m; ++col) {
            if (col == erased_a || col == erased_b) continue;
            for (int j = 0; j < n; ++j) {
                if (!known[col * n + j]) continue;
                for (int i = 0; i < m; ++i) {
                    s[i] ^= H.get(i, col * n + j);
                }
            }
        }
        // augmented system (H_a H_b | s)
        std::vector<std::vector<int>> aug(m, std::vector<int>(m + 1, 0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                aug[i][j] = H.get(i, erased_a * n + j);
                aug[i][n + j] = H.get(i, erased_b * n + j);
            }
            aug[i][m] = s[i];
        }
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int r = col; r < m; ++r) {
                if (aug[r][col]) {
                    pivot = r;
                    break;
                }
            }
            REQUIRE(pivot != -1);
            std::swap(aug[pivot], aug[col]);
            for (int r = 0; r < m; ++r) {
                if (r != col && aug[r][col]) {
                    for (int j = col; j <= m; ++j) aug[r][j] ^= aug[col][j];
                }
            }
        }
        // write the solved bits back through the H-order row map
        auto apply = [&](int col, int offset) {
            const auto rows = h_order_rows(code, col);
            for (int j = 0; j < n - 1; ++j) {
                if (aug[offset + j][m]) {
                    result.cell(rows[j], col)[bit / 8] ^=
                        static_cast<std::uint8_t>(1u << (bit % 8));
                }
            }
            if (aug[offset + n - 1][m]) {
                result.cell(n - 1, col)[bit / 8] ^=
                    static_cast<std::uint8_t>(1u << (bit % 8));
            }
        };
        apply(erased_a, 0);
        apply(erased_b, n);
    }
    return result;
}

}  // namespace

TEST_CASE("all-zero data encodes to all-zero parity") {
    ArrayCode c4{4, 1, {edges({{1, 2}})}};
    std::vector<std::uint8_t> zeros(info_bytes(c4, 8), 0);
    Stripe stripe = encode(zeros, c4, 8);
    for (int v = 0; v < 4; ++v) {
        for (std::uint32_t b = 0; b < 8; ++b) {
            CHECK(stripe.cell(1, v)[b] == 0);
        }
    }
}

TEST_CASE("parity follows the incident-edge equation") {
    // p_0 = d_{3,0} + d_{0,1}: edge {3,0} lives in column 2, edge {0,1} in
    // column 3 of the length-4 code
    ArrayCode c4{4, 1, {edges({{1, 2}})}};
    std::vector<std::uint8_t> info(info_bytes(c4, 1), 0);
    info[2] = 0x0F;  // column 2, row 0
    info[3] = 0xF0;  // column 3, row 0
    Stripe stripe = encode(info, c4, 1);
    CHECK(stripe.cell(1, 0)[0] == 0xFF);
    CHECK(stripe.cell(1, 3)[0] == 0x0F);
    CHECK(stripe.cell(1, 1)[0] == 0xF0);
    CHECK(stripe.cell(1, 2)[0] == 0x00);

    CHECK_THROWS_AS(encode(std::vector<std::uint8_t>(5, 0), c4, 1), ShapeMismatch);
}

TEST_CASE("encoded stripes lie in the null space of the parity-check matrix") {
    std::mt19937 rng(41);
    for (const char* name : {"len06.code", "len10.code", "len08_quasi2.code"}) {
        ArrayCode code = testutil::load_fixture(name);
        BitMatrix H = build_parity_check(code);
        Stripe stripe = encode(random_payload(rng, info_bytes(code, 2)), code, 2);
        for (int bit = 0; bit < 16; ++bit) {
            const auto c = codeword_bits(stripe, bit);
            for (int i = 0; i < H.rows(); ++i) {
                int acc = 0;
                for (int j = 0; j < H.cols(); ++j) {
                    acc ^= H.get(i, j) & c[j];
                }
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("decode with no erasures is the identity") {
    std::mt19937 rng(43);
    ArrayCode c4{4, 1, {edges({{1, 2}})}};
    Stripe stripe = encode(random_payload(rng, info_bytes(c4, 16)), c4, 16);
    Stripe out = decode(stripe, ErasurePattern{});
    CHECK(out.cells == stripe.cells);
}

TEST_CASE("decode recovers double erasures exactly") {
    std::mt19937 rng(47);
    ArrayCode c4{4, 1, {edges({{1, 2}})}};
    Stripe stripe = encode(random_payload(rng, info_bytes(c4, 16)), c4, 16);

    Stripe damaged = stripe;
    for (int col : {0, 1}) {
        std::memset(damaged.cell(0, col), 0, 2 * 16);
    }
    Stripe repaired = decode(damaged, ErasurePattern{{0, 1}});
    CHECK(repaired.cells == stripe.cells);

    CHECK_THROWS_AS(decode(stripe, ErasurePattern{{0, 1, 2}}), TooManyErasures);
    CHECK_THROWS_AS(decode(stripe, ErasurePattern{{0, 9}}), ShapeMismatch);
}

TEST_CASE("decode matches the matrix-inversion oracle") {
    std::mt19937 rng(53);
    for (const char* name : {"len06.code", "len08_quasi2.code"}) {
        ArrayCode code = testutil::load_fixture(name);
        Stripe stripe = encode(random_payload(rng, info_bytes(code, 2)), code, 2);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {2, 5}, {1, 4}}) {
            Stripe peeled = decode(stripe, ErasurePattern{{a, b}});
            Stripe solved = matrix_decode(stripe, a, b);
            CHECK(peeled.cells == stripe.cells);
            CHECK(solved.cells == stripe.cells);
        }
    }
}

TEST_CASE("every erasure pair on every small fixture recovers") {
    std::mt19937 rng(59);
    for (const char* name : {"len06.code", "len10.code", "len08_quasi2.code"}) {
        ArrayCode code = testutil::load_fixture(name);
        Stripe stripe = encode(random_payload(rng, info_bytes(code, 4)), code, 4);
        for (int a = 0; a < code.length; ++a) {
            Stripe one = decode(stripe, ErasurePattern{{a}});
            CHECK(one.cells == stripe.cells);
            for (int b = a + 1; b < code.length; ++b) {
                Stripe two = decode(stripe, ErasurePattern{{a, b}});
                CHECK(two.cells == stripe.cells);
            }
        }
    }
}

TEST_CASE("single erasures peel in one pass") {
    // with one erased column, every surviving parity equation has at most
    // one unknown from the start
    ArrayCode code = testutil::load_fixture("len10.code");
    auto columns = expand_columns(code);
    for (int erased = 0; erased < code.length; ++erased) {
        for (int v = 0; v < code.length; ++v) {
            if (v == erased) continue;
            int unknowns = 0;
            for (const auto& [x, y] : columns[erased]) {
                if (x == v || y == v) ++unknowns;
            }
            CHECK(unknowns <= 1);
        }
    }
}

TEST_CASE("update complexity: one info block touches exactly two foreign parities") {
    std::mt19937 rng(61);
    ArrayCode code = testutil::load_fixture("len06.code");
    auto payload = random_payload(rng, info_bytes(code, 4));
    Stripe before = encode(payload, code, 4);

    for (int col = 0; col < code.length; ++col) {
        for (int row = 0; row < 2; ++row) {
            auto mutated = payload;
            mutated[static_cast<std::size_t>(col) * 2 * 4 + row * 4] ^= 0xA5;
            Stripe after = encode(mutated, code, 4);
            std::vector<int> changed;
            for (int v = 0; v < code.length; ++v) {
                if (std::memcmp(before.cell(2, v), after.cell(2, v), 4) != 0) {
                    changed.push_back(v);
                }
            }
            const Edge edge = expand_columns(code)[col][row];
            CHECK(changed == std::vector<int>{edge.first, edge.second});
            CHECK(edge.first != col);
            CHECK(edge.second != col);
        }
    }
}

TEST_CASE("scrub pinpoints inconsistencies") {
    std::mt19937 rng(67);
    ArrayCode code = testutil::load_fixture("len06.code");
    Stripe stripe = encode(random_payload(rng, info_bytes(code, 4)), code, 4);
    CHECK(scrub(stripe).empty());

    // flipping one information block dirties exactly its two parities
    Stripe flipped = stripe;
    flipped.cell(0, 2)[1] ^= 0xFF;
    const Edge edge = expand_columns(code)[2][0];
    CHECK(scrub(flipped) == std::vector<int>{edge.first, edge.second});

    // flipping one parity block dirties exactly that index
    Stripe parity_flip = stripe;
    parity_flip.cell(2, 4)[0] ^= 1;
    CHECK(scrub(parity_flip) == std::vector<int>{4});
}

TEST_CASE("peeling reports Stuck on a code with a two-column cycle") {
    // {1,2},{3,4} over Z_6: columns 0 and 2 share the protection pair {3,4}
    ArrayCode corrupt{6, 1, {edges({{1, 2}, {3, 4}})}};
    REQUIRE_FALSE(verify_condition1(corrupt));
    std::vector<std::uint8_t> payload(info_bytes(corrupt, 2), 0x11);
    Stripe stripe = encode(payload, corrupt, 2);
    CHECK_THROWS_AS(decode(stripe, ErasurePattern{{0, 2}}), Stuck);
}

TEST_CASE("stripe files round-trip") {
    std::mt19937 rng(71);
    ArrayCode code = testutil::load_fixture("len06.code");
    Stripe stripe = encode(random_payload(rng, info_bytes(code, 32)), code, 32);

    std::stringstream buffer;
    write_stripe(buffer, stripe);
    Stripe loaded = read_stripe(buffer, code);
    CHECK(loaded.block_size == 32);
    CHECK(loaded.cells == stripe.cells);
    CHECK(info_payload(loaded) == info_payload(stripe));

    std::stringstream bad("nope");
    CHECK_THROWS_AS(read_stripe(bad, code), ParseError);

    std::stringstream truncated;
    write_stripe(truncated, stripe);
    std::string text = truncated.str();
    text.resize(text.size() / 2);
    std::stringstream half(text);
    CHECK_THROWS_AS(read_stripe(half, code), ValidationError);

    ArrayCode other = testutil::load_fixture("len10.code");
    std::stringstream again;
    write_stripe(again, stripe);
    CHECK_THROWS_AS(read_stripe(again, other), ValidationError);
}
