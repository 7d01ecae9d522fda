#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace desalg {

/// Exact rational number (arbitrary-precision numerator/denominator).
/// Always kept canonical: lowest terms, positive denominator.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long x) : v_(static_cast<long>(x)) {}
    Rat(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "n" or "p/q" (optionally signed).
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(std::move(q));
    }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "n" when integral, else "p/q".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Element of the prime field F_p. The modulus is thread-local state,
/// set once per computation with FpScope (same pattern as NTL's zz_p).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long x) {
        const long long p = static_cast<long long>(modulus());
        long long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p);
    static std::uint64_t modulus() {
        if (modulus_ == 0) throw std::logic_error("Fp: modulus not set (use FpScope)");
        return modulus_;
    }

    static Fp parse(const std::string& s) { return Fp(std::stoll(s)); }
    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }

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
        v_ = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v_) * o.v_) % modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inv() const;

    std::string str() const { return std::to_string(v_); }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }
    static thread_local std::uint64_t modulus_;
    std::uint64_t v_;
};

/// RAII guard that installs a prime modulus for Fp on this thread.
class FpScope {
public:
    explicit FpScope(std::uint64_t p);
    ~FpScope();
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

private:
    std::uint64_t saved_;
};

bool is_prime(std::uint64_t p);

} // namespace desalg
