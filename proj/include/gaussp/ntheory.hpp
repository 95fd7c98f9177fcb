#ifndef GAUSSP_NTHEORY_HPP
#define GAUSSP_NTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gaussp {

/// Deterministic primality test for the full 64-bit range
/// (Miller-Rabin with a witness set proven complete below 3.3e24).
bool is_prime(std::uint64_t m);

/// A word-sized modulus r >= 2. `checked_prime` certifies primality on
/// construction; operations whose contract requires a prime modulus
/// reject moduli that were not certified.
class Modulus {
public:
    explicit Modulus(std::uint64_t r);
    static Modulus checked_prime(std::uint64_t r);

    std::uint64_t value() const { return r_; }
    bool known_prime() const { return prime_; }

private:
    Modulus(std::uint64_t r, bool prime) : r_(r), prime_(prime) {}
    std::uint64_t r_;
    bool prime_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// base^exp mod r. base need not be reduced.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, const Modulus& m);

/// Inverse of a modulo a prime r.
std::uint64_t mod_inverse(std::uint64_t a, const Modulus& m);

/// Exact factorization: sign * prod(prime^exponent) == value, primes
/// strictly increasing. Primes must fit in a word.
struct Factorization {
    mpz_class value;
    int sign = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;

    mpz_class reconstruct() const;
};

/// Trial division by small primes, then Pollard rho on remaining
/// cofactors; every listed prime is certified. Throws on v = 0.
Factorization factorize(const mpz_class& v);
Factorization factorize(std::uint64_t v);

/// Smallest e >= 1 with x^e == 1 (mod r); r must be a certified prime
/// and gcd(x, r) = 1.
std::uint64_t multiplicative_order(std::uint64_t x, const Modulus& m);

/// Smallest residue of multiplicative order exactly k modulo the prime
/// r; requires k | r-1. Returns 1 for k = 1.
std::uint64_t element_of_order(std::uint64_t k, const Modulus& m);

/// Smallest primitive root modulo the prime r.
std::uint64_t smallest_primitive_root(const Modulus& m);

struct PrimePower {
    std::uint64_t p;
    unsigned s;
};

/// Decomposes q = p^s with p prime, or nullopt if q is not a prime
/// power. Throws on q < 2.
std::optional<PrimePower> is_prime_power(std::uint64_t q);

}  // namespace gaussp

#endif
