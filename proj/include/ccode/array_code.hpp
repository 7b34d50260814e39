#pragma once

#include <vector>

#include "ccode/edge.hpp"
#include "ccode/prime_field.hpp"
#include "ccode/starters.hpp"

namespace ccode {

/// A cyclic (kappa = 1) or kappa-quasi-cyclic lowest-density MDS array code of
/// length 2n, represented by its base column(s): edge sets over the parity
/// vertices Z_2n. Column i of the full code is base_columns[i mod kappa]
/// shifted by kappa*floor(i/kappa).
struct ArrayCode {
    int length = 0;  // 2n
    int kappa = 1;
    std::vector<EdgeSet> base_columns;  // size kappa, each n-1 edges
};

// Structural sanity only: column and edge counts, labels in range, every
// column a matching that avoids its own vertex. Says nothing about the MDS
// condition.
bool code_shape_ok(const ArrayCode& code);

// All 2n columns, each in canonical edge order.
std::vector<EdgeSet> expand_columns(const ArrayCode& code);

// Construct from an even starter; gated on the induced factorization being
// perfect. Throws InvalidStarter / NotPerfect.
ArrayCode build_ccode(const EvenStarter& s);

// Same gate for an even kappa-starter. Throws InvalidStarter / NotPerfect.
ArrayCode build_quasi_ccode(const MultiStarter& ms);

// The code built from the twin (multi-)starter. Throws InvalidCode.
ArrayCode twin_code(const ArrayCode& code);

// The two-column MDS condition: for every column pair (m,k), the union
// C_m + C_k contains no cycle and no path between vertices m and k.
bool verify_condition1(const ArrayCode& code);

/// The non-cyclic ancestor code over (Z_p^*,x): column labeled a (1..p-1)
/// carries the starter scaled by a.
struct BCodeColumns {
    int p = 0;
    std::vector<EdgeSet> columns;  // columns[a-1] is the column labeled a
};

// Throws InvalidStarter / NotPerfect.
BCodeColumns bcode_from_mult_starter(const MultStarter& ms);

// Relabel column g^i as i and reorder: the cyclic code with
// C_0 = {{log x, log y}}. Throws NotCyclicGroup / InvalidCode.
ArrayCode ccode_from_bcode(const BCodeColumns& bcode, const PrimeField& field);

}  // namespace ccode
