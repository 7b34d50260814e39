#pragma once

#include <vector>

#include "ccode/array_code.hpp"
#include "ccode/edge.hpp"
#include "ccode/starters.hpp"

namespace ccode {

// Vertices of the 2n-regular graph are 0..2n-1 plus two fixed apexes that
// cyclic shifts leave in place. The apexes are encoded past the finite range.
inline int inf1_vertex(int modulus) { return modulus; }
inline int inf2_vertex(int modulus) { return modulus + 1; }

/// A labeled one-factorization of the 2n-regular graph on 2n+2 vertices.
/// Factor i is the one containing the edge {i, inf1}; factors repeat with
/// shift symmetry F_{i+kappa} = F_i + kappa (indices mod 2n).
struct OneFactorization {
    int modulus = 0;  // 2n
    int kappa = 1;
    std::vector<EdgeSet> factors;  // size 2n, each n+1 edges
};

// Structural checks only (matchings, edge coverage, forbidden edges, shift
// symmetry, apex placement). Perfection is a separate question.
bool validate_factorization(const OneFactorization& f);

// F_0 = s + {{0,inf1},{r,inf2}}, F_i = F_0 shifted by i. Throws InvalidStarter.
OneFactorization induce_bipyramidal(const EvenStarter& s);

// Factor kappa*t + i = (S_i + {{i,inf1},{r_i,inf2}}) shifted by kappa*t.
OneFactorization induce_quasi_bipyramidal(const MultiStarter& ms);

enum class PerfectionCheck {
    Reduced,    // shift-symmetry representatives only
    FullPairs,  // all C(2n,2) factor pairs, for cross-checking
};

// True iff the union of every factor pair is a single Hamiltonian cycle.
// Throws MalformedFactorization when the input is not structurally valid.
bool is_perfect(const OneFactorization& f,
                PerfectionCheck check = PerfectionCheck::Reduced);

// Recover the even starter F_0 minus its two apex edges. Throws NotBipyramidal
// when kappa != 1 or F_0 lacks the edge {0, inf1}.
EvenStarter extract_starter(const OneFactorization& f);

// Strip apex edges from the first kappa factors of a perfect factorization to
// obtain the code's base columns. Throws NotPerfect.
ArrayCode code_from_p1f(const OneFactorization& f);

// Complete each column with its two apex edges to rebuild the perfect
// factorization. Throws NotACode when completion to matchings is impossible
// or the code fails the two-column condition.
OneFactorization p1f_from_code(const ArrayCode& code);

}  // namespace ccode
