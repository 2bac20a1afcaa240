// Deterministic randomness: every randomized operation takes an explicit
// seed and produces bit-identical results across platforms and runs.

#pragma once

#include <cstdint>
#include <random>

#include "apolar/fields.hpp"
#include "apolar/monomial.hpp"
#include "apolar/poly.hpp"

namespace apolar {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// derive independent sub-seeds from a base seed and a salt
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt));
}

class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform in [0, bound) by rejection; bound > 0
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t u;
        do {
            u = gen_();
        } while (u >= limit);
        return u % bound;
    }

    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

  private:
    std::mt19937_64 gen_;
};

// Random rational coefficients are integers from a fixed box, which keeps
// big-rational growth bounded in downstream elimination.
inline constexpr long long kRationalCoeffBound = 1000;

template <class K>
K random_scalar(SeededRng& rng) {
    if constexpr (field_traits<K>::is_prime_field) {
        return K(static_cast<long long>(rng.uniform(Fp::modulus())));
    } else {
        return K(rng.uniform_int(-kRationalCoeffBound, kRationalCoeffBound));
    }
}

// Seed-deterministic homogeneous form of degree d in n+1 variables (never zero).
template <class K>
Poly<K> random_form(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 1) throw std::invalid_argument("random_form: need n >= 0 and d >= 1");
    SeededRng rng(seed);
    const auto basis = monomial_basis(n, d);
    Poly<K> f(n + 1, Side::S);
    do {
        f = Poly<K>(n + 1, Side::S);
        for (const Monomial& m : basis) f.add_term(m, random_scalar<K>(rng));
    } while (f.is_zero());
    return f;
}

template <class K>
Poly<K> random_linear_form(int n, std::uint64_t seed) {
    return random_form<K>(n, 1, seed);
}

}  // namespace apolar
