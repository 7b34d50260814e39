#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ccode/array_code.hpp"

namespace ccode {

/// One code instance's worth of data: n rows x 2n columns of fixed-size
/// blocks, stored column-major. Rows 0..n-2 hold information blocks (row j of
/// column i belongs to edge j of that column, canonical order); row n-1 holds
/// the parity block p_i.
struct Stripe {
    ArrayCode code;
    std::uint32_t block_size = 0;
    std::vector<std::uint8_t> cells;  // column-major, (col * n + row) * block_size

    int rows() const { return code.length / 2; }
    int columns() const { return code.length; }

    std::uint8_t* cell(int row, int col);
    const std::uint8_t* cell(int row, int col) const;
};

struct ErasurePattern {
    std::vector<int> erased;  // distinct column indices, size 0..2
};

// info_cells: (n-1) x 2n blocks, column-major (column 0 rows 0..n-2, then
// column 1, ...). Throws ShapeMismatch.
Stripe encode(std::span<const std::uint8_t> info_cells, const ArrayCode& code,
              std::uint32_t block_size);

// Reconstruct the erased columns by iterative peeling: repeatedly solve a
// surviving parity equation with exactly one unknown block, then recompute
// the erased parity blocks. Contents of erased cells are ignored. Throws
// TooManyErasures; Stuck signals a code that fails the two-column condition.
Stripe decode(const Stripe& damaged, const ErasurePattern& pattern);

// Indices i whose parity block differs from the XOR of its incident
// information blocks; empty means consistent.
std::vector<int> scrub(const Stripe& stripe);

// The information payload, column-major, as passed to encode.
std::vector<std::uint8_t> info_payload(const Stripe& stripe);

// Binary stripe file: 16-byte header (magic "CCST", version, length 2n,
// block size; little-endian u32 each), then the cells column-major.
void write_stripe(std::ostream& out, const Stripe& stripe);
Stripe read_stripe(std::istream& in, const ArrayCode& code);

}  // namespace ccode
