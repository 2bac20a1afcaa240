// Exact coefficient fields: arbitrary-precision rationals and a runtime
// prime field F_p.  All engine code is templated on one of these two types.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace apolar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// Prime field F_p with a process-global modulus, NTL-style.  The modulus is
// fixed once at startup (default 2^31 - 1) and treated as read-only by all
// engine operations, so shared values stay safe for concurrent reads.
class Fp {
  public:
    Fp() : v_(0) {}
    Fp(long long x) {
        const auto p = static_cast<long long>(modulus());
        long long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }
    explicit Fp(const Int& x) {
        Int r = x % Int(modulus());
        if (r < 0) r += Int(modulus());
        v_ = r.convert_to<std::uint64_t>();
    }

    static void set_modulus(std::uint64_t p) {
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("Fp modulus must be prime, got " + std::to_string(p));
        if (p >= (1ull << 62)) throw std::invalid_argument("Fp modulus too large (must be < 2^62)");
        modulus_ref() = p;
    }
    static std::uint64_t modulus() { return modulus_ref(); }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = detail::mulmod(v_, o.v_, modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        if (o.v_ == 0) throw std::domain_error("division by zero in F_p");
        return *this *= o.inverse();
    }
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        return from_raw(detail::powmod(v_, modulus() - 2, modulus()));
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  private:
    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t& modulus_ref() {
        static std::uint64_t p = 2147483647ull;
        return p;
    }
    std::uint64_t v_;
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool is_prime_field = false;
    static std::uint64_t characteristic() { return 0; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational from_int(const Int& x) { return Rational(x); }
    static std::string to_string(const Rational& x) { return x.str(); }
    static std::string name() { return "q"; }
};

template <>
struct field_traits<Fp> {
    static constexpr bool is_prime_field = true;
    static std::uint64_t characteristic() { return Fp::modulus(); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static Fp from_int(const Int& x) { return Fp(x); }
    static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
    static std::string name() { return "p:" + std::to_string(Fp::modulus()); }
};

template <class K>
bool is_zero(const K& x) {
    return field_traits<K>::is_zero(x);
}

template <class K>
K field_inverse(const K& x);

template <>
inline Rational field_inverse<Rational>(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("division by zero in Q");
    return Rational(1) / x;
}

template <>
inline Fp field_inverse<Fp>(const Fp& x) {
    return x.inverse();
}

}  // namespace apolar
