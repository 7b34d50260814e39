#include "ccode/starters.hpp"

#include <string>

#include "ccode/errors.hpp"

namespace ccode {

namespace {

void check_even_modulus(int modulus) {
    if (modulus < 4 || modulus % 2 != 0) {
        throw BadModulus("modulus must be an even integer >= 4, got " +
                         std::to_string(modulus));
    }
}

void check_starter_prime(int p) {
    if (p < 5 || !is_prime(p)) {
        throw NotPrime("expected a prime >= 5, got " + std::to_string(p));
    }
}

// Difference class of a pair over Z_2n, collapsing d and 2n-d.
int difference_class(const Edge& e, int modulus) {
    int d = mod(e.first - e.second, modulus);
    return std::min(d, modulus - d);
}

}  // namespace

bool validate_even_starter(const EdgeSet& pairs, int modulus) {
    check_even_modulus(modulus);
    const int n = modulus / 2;
    if (static_cast<int>(pairs.size()) != n - 1) return false;

    std::vector<bool> used(modulus, false);
    std::vector<bool> class_seen(n, false);
    for (const auto& [x, y] : pairs) {
        if (x <= 0 || x >= modulus || y <= 0 || y >= modulus || x == y) return false;
        if (used[x] || used[y]) return false;
        used[x] = used[y] = true;
        int c = difference_class({x, y}, modulus);
        if (c == n || class_seen[c]) return false;
        class_seen[c] = true;
    }
    return true;
}

bool validate_even_starter(const EvenStarter& s) {
    return validate_even_starter(s.pairs, s.modulus);
}

int absent_element(const EvenStarter& s) {
    if (!validate_even_starter(s)) {
        throw InvalidStarter("not a valid even starter over Z_" +
                             std::to_string(s.modulus));
    }
    std::vector<bool> used(s.modulus, false);
    for (const auto& [x, y] : s.pairs) used[x] = used[y] = true;
    for (int v = 1; v < s.modulus; ++v) {
        if (!used[v]) return v;
    }
    throw InvalidStarter("even starter has no absent element");
}

EvenStarter twin_even_starter(const EvenStarter& s) {
    const int r = absent_element(s);  // validates
    return EvenStarter{s.modulus, shift_edges(s.pairs, -r, s.modulus)};
}

bool validate_mult_starter(const EdgeSet& pairs, int p) {
    check_starter_prime(p);
    const int n = (p - 1) / 2;
    if (static_cast<int>(pairs.size()) != n - 1) return false;

    std::vector<bool> used(p, false);
    std::vector<bool> quotient_seen(p, false);
    for (const auto& [x, y] : pairs) {
        if (x <= 1 || x >= p || y <= 1 || y >= p || x == y) return false;
        if (used[x] || used[y]) return false;
        used[x] = used[y] = true;
        // x^-1 * y and its inverse y^-1 * x
        int q = static_cast<int>(pow_mod(x, p - 2, p) * y % p);
        int qi = static_cast<int>(pow_mod(q, p - 2, p));
        if (q == 1 || q == p - 1) return false;  // identity or the order-2 element
        if (quotient_seen[q] || quotient_seen[qi]) return false;
        quotient_seen[q] = quotient_seen[qi] = true;
    }
    return true;
}

bool validate_mult_starter(const MultStarter& s) {
    return validate_mult_starter(s.pairs, s.p);
}

int absent_mult_element(const MultStarter& s) {
    if (!validate_mult_starter(s)) {
        throw InvalidStarter("not a valid even starter in (Z_" +
                             std::to_string(s.p) + "^*, x)");
    }
    std::vector<bool> used(s.p, false);
    for (const auto& [x, y] : s.pairs) used[x] = used[y] = true;
    for (int v = 2; v < s.p; ++v) {
        if (!used[v]) return v;
    }
    throw InvalidStarter("multiplicative even starter has no absent element");
}

MultStarter family_A(int p) {
    check_starter_prime(p);
    const int inv2 = (p + 1) / 2;
    EdgeSet pairs;
    for (int x = 2; x < p; ++x) {
        int y = mod(1 - x, p);
        if (x >= y) continue;
        if (x == inv2 || y == inv2 || y == 1) continue;
        pairs.push_back({x, y});
    }
    normalize_edges(pairs);
    return MultStarter{p, pairs};
}

MultStarter family_B(int p) {
    check_starter_prime(p);
    const int inv2 = (p + 1) / 2;
    auto excluded = [&](int v) { return v == 1 || v == inv2 || v == 2 || v == p - 1; };
    EdgeSet pairs;
    for (int x = 2; x < p; ++x) {
        int y = mod(1 - x, p);
        if (x >= y) continue;
        if (excluded(x) || excluded(y) || y == 0) continue;
        pairs.push_back({x, y});
    }
    pairs.push_back(make_edge(inv2, p - 1));
    normalize_edges(pairs);
    return MultStarter{p, pairs};
}

bool validate_multi_starter(const MultiStarter& ms) {
    check_even_modulus(ms.modulus);
    if (ms.kappa < 1 || ms.modulus % ms.kappa != 0) {
        throw BadKappa("kappa " + std::to_string(ms.kappa) + " does not divide " +
                       std::to_string(ms.modulus));
    }
    const int n = ms.modulus / 2;
    if (static_cast<int>(ms.parts.size()) != ms.kappa) return false;

    std::vector<int> class_count(n, 0);
    for (int i = 0; i < ms.kappa; ++i) {
        const auto& part = ms.parts[i];
        if (static_cast<int>(part.size()) != n - 1) return false;
        std::vector<bool> used(ms.modulus, false);
        for (const auto& [x, y] : part) {
            if (x < 0 || x >= ms.modulus || y < 0 || y >= ms.modulus) return false;
            if (x == i || y == i || x == y) return false;
            if (used[x] || used[y]) return false;
            used[x] = used[y] = true;
            int c = difference_class({x, y}, ms.modulus);
            if (c == n) return false;
            ++class_count[c];
        }
    }
    for (int c = 1; c < n; ++c) {
        if (class_count[c] != ms.kappa) return false;
    }
    return true;
}

std::vector<int> absent_elements(const MultiStarter& ms) {
    if (!validate_multi_starter(ms)) {
        throw InvalidStarter("not a valid even " + std::to_string(ms.kappa) +
                             "-starter over Z_" + std::to_string(ms.modulus));
    }
    std::vector<int> absents;
    absents.reserve(ms.kappa);
    for (int i = 0; i < ms.kappa; ++i) {
        std::vector<bool> used(ms.modulus, false);
        for (const auto& [x, y] : ms.parts[i]) used[x] = used[y] = true;
        int r = -1;
        for (int v = 0; v < ms.modulus; ++v) {
            if (v != i && !used[v]) {
                r = v;
                break;
            }
        }
        absents.push_back(r);
    }
    return absents;
}

MultiStarter twin_multi_starter(const MultiStarter& ms) {
    const auto absents = absent_elements(ms);  // validates
    std::vector<EdgeSet> parts(ms.kappa);
    std::vector<bool> slot_taken(ms.kappa, false);
    for (int i = 0; i < ms.kappa; ++i) {
        int slot = absents[i] % ms.kappa;
        if (slot_taken[slot]) {
            throw InvalidStarter("twin undefined: absent elements collide mod kappa");
        }
        slot_taken[slot] = true;
        parts[slot] = shift_edges(ms.parts[i], -ms.kappa * (absents[i] / ms.kappa),
                                  ms.modulus);
    }
    return MultiStarter{ms.modulus, ms.kappa, parts};
}

MultiStarter family_quasi2(int p) {
    check_starter_prime(p);
    const PrimeField field(p);
    const int modulus = 2 * (p - 1);

    // S_0: pairs of consecutive elements of Z_p^*, split across even (log of
    // the larger) and odd (log of the smaller) residues of Z_{2(p-1)}.
    EdgeSet s0;
    for (int x = 2; x < p; ++x) {
        int y = x - 1;  // x - y = 1, y != p-1 automatically, y != 0
        s0.push_back(make_edge(2 * field.log(x), 2 * field.log(y) + 1));
    }

    // S_1 doubles the log image of family A on even and odd residues and
    // stitches in the pair {2r, 2r+1} at the absent element.
    EdgeSet log_a;
    for (const auto& [x, y] : family_A(p).pairs) {
        log_a.push_back(make_edge(field.log(x), field.log(y)));
    }
    std::vector<bool> seen(p - 1, false);
    for (const auto& [x, y] : log_a) seen[x] = seen[y] = true;
    int r = -1;
    for (int v = 1; v < p - 1; ++v) {
        if (!seen[v]) {
            r = v;
            break;
        }
    }
    EdgeSet s1;
    for (const auto& [x, y] : log_a) {
        s1.push_back(make_edge(2 * x + 1, 2 * y + 1));
        s1.push_back(make_edge(2 * x, 2 * y));
    }
    s1.push_back(make_edge(2 * r, 2 * r + 1));

    normalize_edges(s0);
    normalize_edges(s1);
    return MultiStarter{modulus, 2, {s0, s1}};
}

}  // namespace ccode
