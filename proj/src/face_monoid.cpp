#include "desalg/face_monoid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace desalg {

namespace {

std::uint32_t full_mask(int n) { return n == 0 ? 0u : ((n == 32 ? 0u : (1u << n)) - 1u); }

} // namespace

Face::Face(int n, std::vector<std::uint32_t> blocks) : n_(n), blocks_(std::move(blocks)) {
    check_n(n);
    std::uint32_t seen = 0;
    for (std::uint32_t b : blocks_) {
        if (b == 0) throw std::invalid_argument("Face: empty block");
        if (b & seen) throw std::invalid_argument("Face: overlapping blocks");
        seen |= b;
    }
    if (seen != full_mask(n_)) throw std::invalid_argument("Face: blocks do not cover [n]");
}

Face Face::unit(int n) {
    check_n(n);
    if (n == 0) return Face(0, {});
    return Face(n, {full_mask(n)});
}

Face Face::singletons(int n) {
    check_n(n);
    std::vector<std::uint32_t> b;
    b.reserve(n);
    for (int i = 0; i < n; ++i) b.push_back(1u << i);
    return Face(n, std::move(b));
}

Face Face::of_permutation(const Permutation& w) {
    std::vector<std::uint32_t> b;
    b.reserve(w.n());
    for (int i = 1; i <= w.n(); ++i) b.push_back(1u << (w(i) - 1));
    return Face(w.n(), std::move(b));
}

Composition Face::type() const {
    std::vector<int> parts;
    parts.reserve(blocks_.size());
    for (std::uint32_t b : blocks_) parts.push_back(__builtin_popcount(b));
    return Composition(std::move(parts));
}

int Face::singleton_count() const {
    int c = 0;
    for (std::uint32_t b : blocks_)
        if (__builtin_popcount(b) == 1) ++c;
    return c;
}

std::string Face::str() const {
    std::string s;
    for (size_t k = 0; k < blocks_.size(); ++k) {
        if (k) s += '|';
        bool first = true;
        for (int i = 0; i < n_; ++i) {
            if (blocks_[k] >> i & 1u) {
                if (!first) s += ',';
                s += std::to_string(i + 1);
                first = false;
            }
        }
    }
    return s;
}

Face Face::parse(int n, const std::string& s) {
    check_n(n);
    std::vector<std::uint32_t> blocks;
    std::uint32_t seen = 0;
    std::stringstream bs(s);
    std::string blk;
    while (std::getline(bs, blk, '|')) {
        std::uint32_t mask = 0;
        std::stringstream es(blk);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            int v;
            size_t pos = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("Face: bad element '" + tok + "' in '" + s + "'");
            }
            if (pos != tok.size() || v < 1 || v > n)
                throw std::invalid_argument("Face: element '" + tok + "' outside [1, " +
                                            std::to_string(n) + "]");
            const std::uint32_t bit = 1u << (v - 1);
            if (seen & bit)
                throw std::invalid_argument("Face: element " + std::to_string(v) +
                                            " appears twice");
            seen |= bit;
            mask |= bit;
        }
        if (mask == 0) throw std::invalid_argument("Face: empty block in '" + s + "'");
        blocks.push_back(mask);
    }
    if (seen != full_mask(n)) {
        for (int v = 1; v <= n; ++v)
            if (!(seen >> (v - 1) & 1u))
                throw std::invalid_argument("Face: element " + std::to_string(v) + " missing");
    }
    return Face(n, std::move(blocks));
}

size_t FaceHash::operator()(const Face& f) const {
    size_t h = static_cast<size_t>(f.n()) * 0x9e3779b97f4a7c15ull;
    for (std::uint32_t b : f.blocks()) h = (h ^ b) * 0x100000001b3ull;
    return h;
}

Face face_product(const Face& F, const Face& G) {
    if (F.n() != G.n()) throw std::invalid_argument("face_product: ambient size mismatch");
    std::vector<std::uint32_t> out;
    out.reserve(F.length() + G.length());
    for (std::uint32_t f : F.blocks())
        for (std::uint32_t g : G.blocks()) {
            const std::uint32_t x = f & g;
            if (x) out.push_back(x);
        }
    return Face(F.n(), std::move(out));
}

bool contains(const Face& F, const Face& G) {
    if (F.n() != G.n()) throw std::invalid_argument("contains: ambient size mismatch");
    for (std::uint32_t f : F.blocks()) {
        bool inside = false;
        for (std::uint32_t g : G.blocks())
            if ((f & ~g) == 0) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

Face containment_bijection(const Face& F, const Face& G) {
    if (!contains(F, G))
        throw std::invalid_argument("containment_bijection: F is not contained in G");
    std::vector<std::uint32_t> h;
    h.reserve(G.length());
    for (std::uint32_t g : G.blocks()) {
        std::uint32_t mask = 0;
        for (int j = 0; j < F.length(); ++j)
            if ((F.blocks()[j] & ~g) == 0) mask |= 1u << j;
        h.push_back(mask);
    }
    return Face(F.length(), std::move(h));
}

Face act(const Permutation& w, const Face& F) {
    if (w.n() != F.n()) throw std::invalid_argument("act: ambient size mismatch");
    std::vector<std::uint32_t> out;
    out.reserve(F.length());
    for (std::uint32_t b : F.blocks()) {
        std::uint32_t img = 0;
        for (int i = 1; i <= F.n(); ++i)
            if (b >> (i - 1) & 1u) img |= 1u << (w(i) - 1);
        out.push_back(img);
    }
    return Face(F.n(), std::move(out));
}

Face interval_face(const Composition& alpha) {
    std::vector<std::uint32_t> blocks;
    blocks.reserve(alpha.length());
    int lo = 0;
    for (int a : alpha.parts) {
        std::uint32_t m = 0;
        for (int i = lo; i < lo + a; ++i) m |= 1u << i;
        blocks.push_back(m);
        lo += a;
    }
    return Face(alpha.n(), std::move(blocks));
}

Face omega_bijection(const Composition& alpha, const Permutation& w) {
    if (alpha.n() != w.n()) throw std::invalid_argument("omega_bijection: degree mismatch");
    if (!descent_set(w).subset_of(gaps_inv(alpha)))
        throw std::invalid_argument("omega_bijection: Des w not contained in gaps_inv(alpha)");
    return act(w, interval_face(alpha));
}

namespace {

void enumerate_rec(int n, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                   std::vector<Face>& out) {
    if (remaining == 0) {
        out.emplace_back(n, cur);
        return;
    }
    // first block = any nonempty subset of the remaining elements
    for (std::uint32_t s = remaining; s; s = (s - 1) & remaining) {
        cur.push_back(s);
        enumerate_rec(n, remaining & ~s, cur, out);
        cur.pop_back();
    }
}

} // namespace

FaceBasis::FaceBasis(int n) : n_(n) {
    check_n(n);
    std::vector<std::uint32_t> cur;
    enumerate_rec(n, full_mask(n), cur, faces_);
    std::sort(faces_.begin(), faces_.end());
    index_.reserve(faces_.size() * 2);
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i) index_.emplace(faces_[i], i);
}

const FaceBasis& FaceBasis::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FaceBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<FaceBasis>(new FaceBasis(n))).first;
    return *it->second;
}

int FaceBasis::index(const Face& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) throw std::invalid_argument("FaceBasis: unknown face " + f.str());
    return it->second;
}

} // namespace desalg
