#include "ccode/factorization.hpp"

#include <set>
#include <string>

#include "ccode/errors.hpp"

namespace ccode {

namespace {

// partner[v] = the vertex matched with v, or -1. Returns false when the
// edge set is not a perfect matching on all 2n+2 vertices.
bool matching_partners(const EdgeSet& factor, int modulus, std::vector<int>& partner) {
    partner.assign(modulus + 2, -1);
    for (const auto& [x, y] : factor) {
        if (x < 0 || x > modulus + 1 || y < 0 || y > modulus + 1 || x == y) return false;
        if (partner[x] != -1 || partner[y] != -1) return false;
        partner[x] = y;
        partner[y] = x;
    }
    for (int v = 0; v < modulus + 2; ++v) {
        if (partner[v] == -1) return false;
    }
    return true;
}

// Length of the cycle through inf1 in the union of two matchings; the union
// is Hamiltonian iff that cycle visits all 2n+2 vertices.
bool union_is_hamiltonian(const std::vector<int>& pa, const std::vector<int>& pb,
                          int vertex_count) {
    int start = vertex_count - 2;  // inf1
    int v = start;
    int visited = 0;
    do {
        v = pa[v];
        v = pb[v];
        visited += 2;
        if (visited > vertex_count) return false;
    } while (v != start);
    return visited == vertex_count;
}

}  // namespace

bool validate_factorization(const OneFactorization& f) {
    const int m = f.modulus;
    if (m < 4 || m % 2 != 0) return false;
    if (f.kappa < 1 || m % f.kappa != 0) return false;
    if (static_cast<int>(f.factors.size()) != m) return false;

    const int n = m / 2;
    const int inf1 = inf1_vertex(m);
    const int inf2 = inf2_vertex(m);

    std::set<Edge> all_edges;
    std::vector<int> partner;
    for (int i = 0; i < m; ++i) {
        const auto& factor = f.factors[i];
        if (static_cast<int>(factor.size()) != n + 1) return false;
        if (!matching_partners(factor, m, partner)) return false;
        if (partner[inf1] != i) return false;
        if (partner[inf2] == inf1) return false;
        for (const auto& e : factor) {
            if (e.first < m && e.second < m && mod(e.first - e.second, m) == n) {
                return false;  // {v, v+n} never occurs
            }
            if (!all_edges.insert(make_edge(e.first, e.second)).second) return false;
        }
        // shift symmetry against the factor kappa steps earlier
        if (i >= f.kappa) {
            if (normalized(f.factors[i]) !=
                shift_edges(f.factors[i - f.kappa], f.kappa, m)) {
                return false;
            }
        }
    }
    return true;
}

OneFactorization induce_bipyramidal(const EvenStarter& s) {
    const int r = absent_element(s);  // validates
    EdgeSet base = s.pairs;
    base.push_back(make_edge(0, inf1_vertex(s.modulus)));
    base.push_back(make_edge(r, inf2_vertex(s.modulus)));
    std::sort(base.begin(), base.end());

    OneFactorization f{s.modulus, 1, {}};
    f.factors.reserve(s.modulus);
    for (int i = 0; i < s.modulus; ++i) {
        f.factors.push_back(shift_edges(base, i, s.modulus));
    }
    return f;
}

OneFactorization induce_quasi_bipyramidal(const MultiStarter& ms) {
    const auto absents = absent_elements(ms);  // validates
    const int m = ms.modulus;

    // Apex edges {r_i + kappa*t, inf2} must cover every vertex exactly once,
    // which requires the r_i to occupy distinct residues mod kappa.
    std::vector<bool> slot(ms.kappa, false);
    for (int r : absents) {
        if (slot[r % ms.kappa]) {
            throw InvalidStarter(
                "multi-starter cannot induce a one-factorization: absent "
                "elements collide mod kappa");
        }
        slot[r % ms.kappa] = true;
    }

    std::vector<EdgeSet> bases(ms.kappa);
    for (int i = 0; i < ms.kappa; ++i) {
        bases[i] = ms.parts[i];
        bases[i].push_back(make_edge(i, inf1_vertex(m)));
        bases[i].push_back(make_edge(absents[i], inf2_vertex(m)));
        std::sort(bases[i].begin(), bases[i].end());
    }

    OneFactorization f{m, ms.kappa, std::vector<EdgeSet>(m)};
    for (int tau = 0; tau < m / ms.kappa; ++tau) {
        for (int i = 0; i < ms.kappa; ++i) {
            f.factors[ms.kappa * tau + i] = shift_edges(bases[i], ms.kappa * tau, m);
        }
    }
    return f;
}

bool is_perfect(const OneFactorization& f, PerfectionCheck check) {
    if (!validate_factorization(f)) {
        throw MalformedFactorization("not a structurally valid one-factorization");
    }
    const int m = f.modulus;
    const int vertex_count = m + 2;

    std::vector<std::vector<int>> partners(m);
    std::vector<int> p;
    for (int i = 0; i < m; ++i) {
        matching_partners(f.factors[i], m, p);
        partners[i] = p;
    }

    auto pair_ok = [&](int i, int j) {
        return union_is_hamiltonian(partners[i], partners[j], vertex_count);
    };

    if (check == PerfectionCheck::FullPairs) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (!pair_ok(i, j)) return false;
            }
        }
        return true;
    }

    if (f.kappa == 1) {
        // F_j + F_k is a shift of F_0 + F_{k-j}, and F_0 + F_d is a shift of
        // F_0 + F_{2n-d}: d = 1..n suffices.
        for (int d = 1; d <= m / 2; ++d) {
            if (!pair_ok(0, d)) return false;
        }
        return true;
    }
    // Shifting by -kappa*floor(i/kappa) reduces any pair to one whose first
    // index is below kappa.
    for (int i = 0; i < f.kappa; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!pair_ok(i, j)) return false;
        }
    }
    return true;
}

EvenStarter extract_starter(const OneFactorization& f) {
    if (!validate_factorization(f)) {
        throw MalformedFactorization("not a structurally valid one-factorization");
    }
    if (f.kappa != 1) {
        throw NotBipyramidal("extract_starter requires kappa = 1, got kappa = " +
                             std::to_string(f.kappa));
    }
    const int inf1 = inf1_vertex(f.modulus);
    EdgeSet pairs;
    bool saw_zero_inf1 = false;
    for (auto e : f.factors[0]) {
        e = make_edge(e.first, e.second);
        if (e.second == inf1) {
            saw_zero_inf1 = (e.first == 0);
        } else if (e.second < inf1) {
            pairs.push_back(e);
        }
    }
    if (!saw_zero_inf1) {
        throw NotBipyramidal("F_0 does not contain the edge {0, inf1}");
    }
    normalize_edges(pairs);
    return EvenStarter{f.modulus, pairs};
}

ArrayCode code_from_p1f(const OneFactorization& f) {
    if (!is_perfect(f)) {
        throw NotPerfect("factorization is not perfect; no code exists");
    }
    const int inf1 = inf1_vertex(f.modulus);
    std::vector<EdgeSet> bases(f.kappa);
    for (int i = 0; i < f.kappa; ++i) {
        for (const auto& e : f.factors[i]) {
            if (e.first < inf1 && e.second < inf1) bases[i].push_back(e);
        }
        normalize_edges(bases[i]);
    }
    return ArrayCode{f.modulus, f.kappa, bases};
}

OneFactorization p1f_from_code(const ArrayCode& code) {
    if (!verify_condition1(code)) {
        throw NotACode("code fails the two-column condition; cannot rebuild a P1F");
    }
    const int m = code.length;
    const auto columns = expand_columns(code);

    OneFactorization f{m, code.kappa, std::vector<EdgeSet>(m)};
    for (int i = 0; i < m; ++i) {
        std::vector<bool> covered(m, false);
        for (const auto& [x, y] : columns[i]) covered[x] = covered[y] = true;
        int other = -1;
        bool self_free = !covered[i];
        for (int v = 0; v < m; ++v) {
            if (!covered[v] && v != i) {
                if (other != -1) {
                    throw NotACode("column " + std::to_string(i) +
                                   " cannot be completed to a one-factor");
                }
                other = v;
            }
        }
        if (!self_free || other == -1) {
            throw NotACode("column " + std::to_string(i) +
                           " cannot be completed to a one-factor");
        }
        EdgeSet factor = columns[i];
        factor.push_back(make_edge(i, inf1_vertex(m)));
        factor.push_back(make_edge(other, inf2_vertex(m)));
        std::sort(factor.begin(), factor.end());
        f.factors[i] = factor;
    }
    if (!validate_factorization(f)) {
        throw NotACode("completed columns do not form a one-factorization");
    }
    return f;
}

}  // namespace ccode
