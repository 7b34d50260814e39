#include "ccode/prime_field.hpp"

#include <string>

#include "ccode/errors.hpp"

namespace ccode {

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t result = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t m) {
    std::vector<std::int64_t> factors;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    return factors;
}

}  // namespace

int find_generator(int p) {
    if (!is_prime(p) || p < 3) {
        throw NotPrime("find_generator: " + std::to_string(p) + " is not a prime >= 3");
    }
    const auto factors = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw NotPrime("find_generator: no generator found for " + std::to_string(p));
}

PrimeField::PrimeField(int p) : p_(p), g_(find_generator(p)), log_table_(p, -1) {
    std::int64_t x = 1;
    for (int i = 0; i < p_ - 1; ++i) {
        log_table_[static_cast<std::size_t>(x)] = i;
        x = x * g_ % p_;
    }
}

int PrimeField::power(int i) const {
    int e = i % (p_ - 1);
    if (e < 0) e += p_ - 1;
    return static_cast<int>(pow_mod(g_, e, p_));
}

int PrimeField::log(int x) const {
    if (x < 1 || x > p_ - 1) {
        throw OutOfRange("discrete_log: " + std::to_string(x) + " outside 1.." +
                         std::to_string(p_ - 1));
    }
    return log_table_[static_cast<std::size_t>(x)];
}

int discrete_log(const PrimeField& field, int x) { return field.log(x); }

}  // namespace ccode
