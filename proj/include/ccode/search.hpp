#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ccode/array_code.hpp"
#include "ccode/starters.hpp"

namespace ccode {

struct SearchReport {
    int length = 0;
    std::uint64_t starters_examined = 0;
    std::uint64_t codes_found = 0;
    std::optional<ArrayCode> first_code;
    double elapsed_seconds = 0.0;
};

// Visit every even starter over Z_length exactly once, in lexicographic
// canonical order. The callback returns false to stop early. Throws BadLength
// outside the practical range 4..36.
void for_each_even_starter(int length,
                           const std::function<bool(const EvenStarter&)>& fn);

// Convenience for small lengths; materializes the full list.
std::vector<EvenStarter> enumerate_even_starters(int length);

// Exhaustive count of starters whose induced factorization is perfect.
// Deterministic: repeated runs differ only in elapsed time.
SearchReport count_ccodes(int length);

// The first starter (in enumeration order) that builds, or nothing.
std::optional<ArrayCode> find_first_ccode(int length);

}  // namespace ccode
