#pragma once

#include <vector>

#include "ccode/edge.hpp"
#include "ccode/prime_field.hpp"

namespace ccode {

/// An even starter in (Z_2n,+): n-1 pairs of distinct non-zero elements
/// covering every difference except 0 and n. Seeds a bipyramidal
/// one-factorization and hence a cyclic array code of length 2n.
struct EvenStarter {
    int modulus = 0;  // 2n
    EdgeSet pairs;    // canonical order
};

/// An even starter in the multiplicative group (Z_p^*,x): (p-1)/2 - 1 pairs
/// of non-identity elements covering every quotient except 1 and p-1.
struct MultStarter {
    int p = 0;
    EdgeSet pairs;
};

/// An even kappa-starter in (Z_2n,+): kappa part sets S_0..S_{kappa-1},
/// part S_i avoiding element i, with every difference class 1..n-1 covered
/// exactly kappa times across all parts.
struct MultiStarter {
    int modulus = 0;
    int kappa = 1;
    std::vector<EdgeSet> parts;
};

// Throws BadModulus when modulus is odd or < 4.
bool validate_even_starter(const EdgeSet& pairs, int modulus);
bool validate_even_starter(const EvenStarter& s);

// The unique non-zero element of Z_2n absent from s. Throws InvalidStarter.
int absent_element(const EvenStarter& s);

// Twin: all pair elements shifted by -r. An involution on valid starters.
EvenStarter twin_even_starter(const EvenStarter& s);

// Throws NotPrime when p is not a prime >= 5.
bool validate_mult_starter(const EdgeSet& pairs, int p);
bool validate_mult_starter(const MultStarter& s);

// The unique non-identity element of Z_p^* absent from s. Throws InvalidStarter.
int absent_mult_element(const MultStarter& s);

// The two infinite families of multiplicative even starters:
//   family A pairs up {x, 1-x} over Z_p^* \ {1, 2^-1};
//   family B additionally drops {2, p-1} and appends the pair {2^-1, p-1}.
MultStarter family_A(int p);
MultStarter family_B(int p);

// Throws BadKappa when kappa does not divide the modulus.
bool validate_multi_starter(const MultiStarter& ms);

// r_i per part: the unique non-i element absent from S_i. Throws InvalidStarter.
std::vector<int> absent_elements(const MultiStarter& ms);

// Twin: part S_i lands in slot r_i mod kappa, shifted by -kappa*floor(r_i/kappa).
// Twin starters induce the same quasi-bipyramidal one-factorization.
MultiStarter twin_multi_starter(const MultiStarter& ms);

// The infinite family of even 2-starters over Z_{2(p-1)} built from the
// discrete-log image of consecutive-element pairs of Z_p^*.
MultiStarter family_quasi2(int p);

}  // namespace ccode
