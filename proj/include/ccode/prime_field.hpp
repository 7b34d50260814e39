#pragma once

#include <cstdint>
#include <vector>

namespace ccode {

bool is_prime(std::int64_t m);

// Smallest generator of the multiplicative group Z_p^*. Deterministic so
// every construction derived from it is reproducible. Throws NotPrime.
int find_generator(int p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Z_p^* with a fixed generator and a precomputed discrete-log table.
// Immutable after construction; safe to share across threads.
class PrimeField {
  public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int generator() const { return g_; }

    // g^i mod p
    int power(int i) const;

    // i in {0..p-2} with g^i = x (mod p). Throws OutOfRange for x outside 1..p-1.
    int log(int x) const;

  private:
    int p_;
    int g_;
    std::vector<int> log_table_;  // log_table_[x] = i for x in 1..p-1
};

int discrete_log(const PrimeField& field, int x);

}  // namespace ccode
