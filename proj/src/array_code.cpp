#include "ccode/array_code.hpp"

#include <numeric>
#include <string>

#include "ccode/errors.hpp"
#include "ccode/factorization.hpp"

namespace ccode {

bool code_shape_ok(const ArrayCode& code) {
    const int m = code.length;
    if (m < 4 || m % 2 != 0) return false;
    if (code.kappa < 1 || m % code.kappa != 0) return false;
    if (static_cast<int>(code.base_columns.size()) != code.kappa) return false;
    const int n = m / 2;
    for (int i = 0; i < code.kappa; ++i) {
        const auto& column = code.base_columns[i];
        if (static_cast<int>(column.size()) != n - 1) return false;
        std::vector<bool> covered(m, false);
        for (const auto& [x, y] : column) {
            if (x < 0 || x >= m || y < 0 || y >= m || x == y) return false;
            if (x == i || y == i) return false;
            if (covered[x] || covered[y]) return false;
            covered[x] = covered[y] = true;
        }
    }
    return true;
}

namespace {

struct DisjointSet {
    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // false if the edge closes a cycle
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

std::vector<EdgeSet> expand_columns(const ArrayCode& code) {
    std::vector<EdgeSet> columns(code.length);
    for (int i = 0; i < code.length; ++i) {
        columns[i] = shift_edges(code.base_columns[i % code.kappa],
                                 code.kappa * (i / code.kappa), code.length);
    }
    return columns;
}

ArrayCode build_ccode(const EvenStarter& s) {
    if (!validate_even_starter(s)) {
        throw InvalidStarter("not a valid even starter over Z_" +
                             std::to_string(s.modulus));
    }
    if (!is_perfect(induce_bipyramidal(s))) {
        throw NotPerfect("starter does not induce a perfect one-factorization");
    }
    return ArrayCode{s.modulus, 1, {normalized(s.pairs)}};
}

ArrayCode build_quasi_ccode(const MultiStarter& ms) {
    if (!validate_multi_starter(ms)) {
        throw InvalidStarter("not a valid even " + std::to_string(ms.kappa) +
                             "-starter over Z_" + std::to_string(ms.modulus));
    }
    if (!is_perfect(induce_quasi_bipyramidal(ms))) {
        throw NotPerfect("multi-starter does not induce a perfect one-factorization");
    }
    std::vector<EdgeSet> bases;
    bases.reserve(ms.parts.size());
    for (const auto& part : ms.parts) bases.push_back(normalized(part));
    return ArrayCode{ms.modulus, ms.kappa, bases};
}

ArrayCode twin_code(const ArrayCode& code) {
    if (!code_shape_ok(code) || !verify_condition1(code)) {
        throw InvalidCode("twin_code requires a valid code");
    }
    try {
        if (code.kappa == 1) {
            EvenStarter s{code.length, code.base_columns[0]};
            return build_ccode(twin_even_starter(s));
        }
        MultiStarter ms{code.length, code.kappa, code.base_columns};
        return build_quasi_ccode(twin_multi_starter(ms));
    } catch (const InvalidStarter& e) {
        throw InvalidCode(e.what());
    }
}

bool verify_condition1(const ArrayCode& code) {
    if (!code_shape_ok(code)) return false;
    const int m = code.length;
    const auto columns = expand_columns(code);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            DisjointSet dsu(m);
            bool acyclic = true;
            for (const auto* column : {&columns[a], &columns[b]}) {
                for (const auto& [x, y] : *column) {
                    if (!dsu.unite(x, y)) {
                        acyclic = false;
                        break;
                    }
                }
                if (!acyclic) break;
            }
            if (!acyclic) return false;
            // a connected to b would mean a path with terminals a and b
            if (dsu.find(a) == dsu.find(b)) return false;
        }
    }
    return true;
}

BCodeColumns bcode_from_mult_starter(const MultStarter& ms) {
    if (!validate_mult_starter(ms)) {
        throw InvalidStarter("not a valid even starter in (Z_" +
                             std::to_string(ms.p) + "^*, x)");
    }
    // Perfection of the multiplicative factorization is checked on its
    // discrete-log image, which is the additive factorization of the
    // transformed starter.
    const PrimeField field(ms.p);
    EdgeSet log_pairs;
    for (const auto& [x, y] : ms.pairs) {
        log_pairs.push_back(make_edge(field.log(x), field.log(y)));
    }
    normalize_edges(log_pairs);
    EvenStarter transformed{ms.p - 1, log_pairs};
    if (!is_perfect(induce_bipyramidal(transformed))) {
        throw NotPerfect("starter does not induce a perfect one-factorization");
    }

    BCodeColumns bcode{ms.p, {}};
    bcode.columns.reserve(ms.p - 1);
    for (int a = 1; a < ms.p; ++a) {
        EdgeSet column;
        for (const auto& [x, y] : ms.pairs) {
            column.push_back(make_edge(static_cast<int>(std::int64_t{x} * a % ms.p),
                                       static_cast<int>(std::int64_t{y} * a % ms.p)));
        }
        normalize_edges(column);
        bcode.columns.push_back(column);
    }
    return bcode;
}

ArrayCode ccode_from_bcode(const BCodeColumns& bcode, const PrimeField& field) {
    if (bcode.p != field.p()) {
        throw NotCyclicGroup("field modulus " + std::to_string(field.p()) +
                             " does not match the code's group Z_" +
                             std::to_string(bcode.p) + "^*");
    }
    if (bcode.columns.empty() ||
        static_cast<int>(bcode.columns.size()) != bcode.p - 1) {
        throw InvalidCode("expected " + std::to_string(bcode.p - 1) + " columns");
    }
    // Column labeled 1 is the starter itself; map it through the log.
    EdgeSet c0;
    for (const auto& [x, y] : bcode.columns[0]) {
        c0.push_back(make_edge(field.log(x), field.log(y)));
    }
    normalize_edges(c0);
    ArrayCode code{bcode.p - 1, 1, {c0}};
    if (!verify_condition1(code)) {
        throw InvalidCode("transformed columns fail the two-column condition");
    }
    return code;
}

}  // namespace ccode
