#include <doctest.h>

#include <vector>

#include "ccode/errors.hpp"
#include "ccode/prime_field.hpp"

using namespace ccode;

namespace {

// Sieve oracle, independent of the trial-division path under test.
std::vector<bool> sieve(int limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = prime[1] = false;
    for (int i = 2; i * i <= limit; ++i) {
        if (!prime[i]) continue;
        for (int j = i * i; j <= limit; j += i) prime[j] = false;
    }
    return prime;
}

// Order of g mod p by brute multiplication.
int order_mod(int g, int p) {
    int x = g % p;
    int order = 1;
    while (x != 1) {
        x = static_cast<int>(static_cast<std::int64_t>(x) * g % p);
        ++order;
    }
    return order;
}

}  // namespace

TEST_CASE("is_prime on small inputs") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1'000'000));
    CHECK(is_prime(1'000'003));
}

TEST_CASE("is_prime matches a sieve up to 10000") {
    const auto oracle = sieve(10'000);
    for (int m = 0; m <= 10'000; ++m) {
        CAPTURE(m);
        CHECK(is_prime(m) == oracle[m]);
    }
}

TEST_CASE("find_generator picks the smallest generator") {
    CHECK(find_generator(7) == 3);
    CHECK(find_generator(5) == 2);

    // brute-force order check of candidates 2..10 at p=11
    int expected = 0;
    for (int g = 2; g < 11; ++g) {
        if (order_mod(g, 11) == 10) {
            expected = g;
            break;
        }
    }
    CHECK(expected == 2);
    CHECK(find_generator(11) == expected);

    CHECK_THROWS_AS(find_generator(9), NotPrime);
    CHECK_THROWS_AS(find_generator(1), NotPrime);
}

TEST_CASE("discrete_log inverts exponentiation") {
    PrimeField f7(7);
    CHECK(f7.generator() == 3);
    CHECK(discrete_log(f7, 1) == 0);
    // 3^2 mod 7 = 2 by direct exponentiation
    CHECK(3 * 3 % 7 == 2);
    CHECK(discrete_log(f7, 2) == 2);

    PrimeField f5(5);
    // 2^3 mod 5 = 3 by direct exponentiation
    CHECK(2 * 2 * 2 % 5 == 3);
    CHECK(discrete_log(f5, 3) == 3);

    CHECK_THROWS_AS(discrete_log(f7, 0), OutOfRange);
    CHECK_THROWS_AS(discrete_log(f7, 7), OutOfRange);
}

TEST_CASE("log table round-trips for every prime up to 200") {
    const auto oracle = sieve(200);
    for (int p = 3; p <= 200; ++p) {
        if (!oracle[p]) continue;
        PrimeField field(p);
        // generator really generates: powers enumerate 1..p-1 without repeats
        std::vector<bool> seen(p, false);
        for (int i = 0; i < p - 1; ++i) {
            int x = field.power(i);
            CHECK_FALSE(seen[x]);
            seen[x] = true;
            CHECK(field.log(x) == i);
        }
        // deterministic
        CHECK(PrimeField(p).generator() == field.generator());
    }
}
