#include "desalg/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace desalg {

void check_n(int n) {
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("n = " + std::to_string(n) + " out of range [0, " +
                                    std::to_string(kMaxN) + "]");
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int a : parts)
        if (a < 1) throw std::invalid_argument("Composition: parts must be positive");
    check_n(n());
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

Composition Composition::parse(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("Composition: bad part '" + tok + "' in '" + s + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("Composition: bad part '" + tok + "' in '" + s + "'");
            parts.push_back(v);
        }
    }
    return Composition(std::move(parts));
}

IndexSet::IndexSet(int n_, std::uint32_t mask_) : n(n_), mask(mask_) {
    check_n(n);
    const std::uint32_t allowed = (n >= 2) ? ((1u << (n - 1)) - 1u) : 0u;
    if ((mask & ~allowed) != 0)
        throw std::invalid_argument("IndexSet: member outside [1, n-1]");
}

IndexSet IndexSet::of(int n, std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems) {
        if (e < 1 || e > n - 1)
            throw std::invalid_argument("IndexSet: element " + std::to_string(e) +
                                        " outside [1, n-1]");
        m |= 1u << (e - 1);
    }
    return IndexSet(n, m);
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n - 1; ++i)
        if (mask >> (i - 1) & 1u) out.push_back(i);
    return out;
}

std::string IndexSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

IndexSet IndexSet::parse(int n, const std::string& s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("IndexSet: expected '{...}', got '" + s + "'");
    const std::string body = s.substr(1, s.size() - 2);
    IndexSet out(n, 0);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const int v = std::stoi(tok);
        if (v < 1 || v > n - 1)
            throw std::invalid_argument("IndexSet: element " + std::to_string(v) +
                                        " outside [1, n-1]");
        out.mask |= 1u << (v - 1);
    }
    return out;
}

Permutation::Permutation(std::vector<int> oneline) : img_(std::move(oneline)) {
    const int n = static_cast<int>(img_.size());
    check_n(n);
    std::uint32_t seen = 0;
    for (int v : img_) {
        if (v < 1 || v > n || (seen >> (v - 1) & 1u))
            throw std::invalid_argument("Permutation: not a permutation of 1.." +
                                        std::to_string(n));
        seen |= 1u << (v - 1);
    }
}

Permutation Permutation::identity(int n) {
    check_n(n);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest_word(int n) {
    check_n(n);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::cycle(int n, const std::vector<int>& elems) {
    Permutation w = identity(n);
    const int m = static_cast<int>(elems.size());
    for (int j = 0; j < m; ++j) {
        const int from = elems[j];
        const int to = elems[(j + 1) % m];
        if (from < 1 || from > n) throw std::invalid_argument("cycle: element out of range");
        w.img_[from - 1] = to;
    }
    // Re-validate: repeated elements in the cycle would break bijectivity.
    return Permutation(std::move(w.img_));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> out(n());
    for (int i = 0; i < n(); ++i) out[i] = img_[v.img_[i] - 1];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(n());
    for (int i = 0; i < n(); ++i) out[img_[i] - 1] = i + 1;
    return Permutation(std::move(out));
}

std::uint64_t Permutation::rank() const {
    const int nn = n();
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < nn; ++i) {
        const int v = img_[i];
        const int smaller_unused =
            v - 1 - __builtin_popcount(used & ((1u << (v - 1)) - 1u));
        r = r * (nn - i) + smaller_unused;
        used |= 1u << (v - 1);
    }
    // Horner over falling radices equals the usual Lehmer-code rank.
    return r;
}

Permutation Permutation::unrank(int n, std::uint64_t r) {
    check_n(n);
    std::vector<std::uint64_t> digits(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = r % (n - i);
        r /= (n - i);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const auto d = static_cast<size_t>(digits[i]);
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<long>(d));
    }
    return Permutation(std::move(out));
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s;
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Composition gaps(const IndexSet& J) {
    std::vector<int> parts;
    int prev = 0;
    for (int j : J.elements()) {
        parts.push_back(j - prev);
        prev = j;
    }
    if (J.n > 0) parts.push_back(J.n - prev);
    return Composition(std::move(parts));
}

IndexSet gaps_inv(const Composition& alpha) {
    IndexSet out(alpha.n(), 0);
    int acc = 0;
    for (size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
        acc += alpha.parts[i];
        out.mask |= 1u << (acc - 1);
    }
    return out;
}

Composition rev(const Composition& alpha) {
    std::vector<int> p(alpha.parts.rbegin(), alpha.parts.rend());
    return Composition(std::move(p));
}

IndexSet sub(const IndexSet& J) {
    IndexSet out(J.n, 0);
    for (int j : J.elements()) out.mask |= 1u << (J.n - j - 1);
    return out;
}

IndexSet descent_set(const Permutation& w) {
    IndexSet out(w.n(), 0);
    for (int i = 1; i <= w.n() - 1; ++i)
        if (w(i) > w(i + 1)) out.mask |= 1u << (i - 1);
    return out;
}

Permutation compose(const Permutation& u, const Permutation& v) { return u.compose(v); }
Permutation inverse(const Permutation& w) { return w.inverse(); }
Permutation longest_word(int n) { return Permutation::longest_word(n); }

std::vector<Composition> enumerate_compositions(int n) {
    check_n(n);
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    const std::uint32_t count = 1u << (n - 1);
    out.reserve(count);
    for (std::uint32_t m = 0; m < count; ++m) out.push_back(gaps(IndexSet(n, m)));
    return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    check_n(n);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace desalg
