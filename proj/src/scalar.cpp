#include "desalg/scalar.hpp"

namespace desalg {

thread_local std::uint64_t Fp::modulus_ = 0;

void Fp::set_modulus(std::uint64_t p) {
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
    modulus_ = p;
}

Fp Fp::inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Extended Euclid on (v, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus());
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus());
    return Fp(t);
}

FpScope::FpScope(std::uint64_t p) : saved_(0) {
    try {
        saved_ = Fp::modulus();
    } catch (const std::logic_error&) {
        saved_ = 0;
    }
    Fp::set_modulus(p);
}

FpScope::~FpScope() { Fp::set_modulus(saved_); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace desalg
