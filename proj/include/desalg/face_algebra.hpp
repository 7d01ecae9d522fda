#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "desalg/face_monoid.hpp"
#include "desalg/knapsack.hpp"
#include "desalg/scalar.hpp"

namespace desalg {

/// Element of the face algebra kF: finitely supported map from faces
/// (by canonical FaceBasis index) to scalars.
template <class K>
class FaceElem {
public:
    explicit FaceElem(int n) : n_(n) { check_n(n); }

    static FaceElem zero(int n) { return FaceElem(n); }
    static FaceElem of_face(const Face& f) {
        FaceElem e(f.n());
        e.add_coeff(FaceBasis::get(f.n()).index(f), K::one());
        return e;
    }
    /// The algebra unit: the face ([n]).
    static FaceElem unit(int n) { return of_face(Face::unit(n)); }

    int n() const { return n_; }
    int dim() const { return FaceBasis::get(n_).size(); }

    K coeff(int idx) const {
        auto it = c_.find(idx);
        return it == c_.end() ? K::zero() : it->second;
    }
    K coeff(const Face& f) const { return coeff(FaceBasis::get(n_).index(f)); }

    void add_coeff(int idx, const K& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.emplace(idx, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    void add_term(const Face& f, const K& v) { add_coeff(FaceBasis::get(n_).index(f), v); }

    /// Visits nonzero coefficients in increasing canonical-index order.
    void for_each(const std::function<void(int, const K&)>& fn) const {
        for (const auto& [i, c] : c_) fn(i, c);
    }

    bool is_zero() const { return c_.empty(); }
    int support_size() const { return static_cast<int>(c_.size()); }

    FaceElem& operator+=(const FaceElem& o) {
        require_same(o);
        for (const auto& [i, c] : o.c_) add_coeff(i, c);
        return *this;
    }
    FaceElem& operator-=(const FaceElem& o) {
        require_same(o);
        for (const auto& [i, c] : o.c_) add_coeff(i, -c);
        return *this;
    }
    friend FaceElem operator+(FaceElem a, const FaceElem& b) { a += b; return a; }
    friend FaceElem operator-(FaceElem a, const FaceElem& b) { a -= b; return a; }

    friend FaceElem operator*(const K& s, const FaceElem& a) {
        FaceElem out(a.n_);
        if (s.is_zero()) return out;
        for (const auto& [i, c] : a.c_) out.add_coeff(i, s * c);
        return out;
    }

    friend FaceElem operator*(const FaceElem& a, const FaceElem& b) {
        a.require_same(b);
        const FaceBasis& basis = FaceBasis::get(a.n_);
        // dense accumulator: products land on arbitrary indices, and the
        // support of a power of an orbit-sum combination is most of kF
        std::vector<K> acc(basis.size(), K::zero());
        for (const auto& [i, ci] : a.c_)
            for (const auto& [j, cj] : b.c_)
                acc[basis.index(face_product(basis.face(i), basis.face(j)))] += ci * cj;
        FaceElem out(a.n_);
        for (int i = 0; i < basis.size(); ++i)
            if (!acc[i].is_zero()) out.c_.emplace_hint(out.c_.end(), i, std::move(acc[i]));
        return out;
    }

    friend bool operator==(const FaceElem& a, const FaceElem& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FaceElem& a, const FaceElem& b) { return !(a == b); }

    std::vector<K> to_coords() const {
        std::vector<K> out(dim(), K::zero());
        for (const auto& [i, c] : c_) out[i] = c;
        return out;
    }

private:
    void require_same(const FaceElem& o) const {
        if (n_ != o.n_) throw std::invalid_argument("face algebra: ambient size mismatch");
    }

    int n_;
    std::map<int, K> c_;
};

/// Blockwise S_n action, extended linearly.
template <class K>
FaceElem<K> act(const Permutation& w, const FaceElem<K>& x) {
    const FaceBasis& basis = FaceBasis::get(x.n());
    FaceElem<K> out(x.n());
    x.for_each([&](int i, const K& c) { out.add_coeff(basis.index(act(w, basis.face(i))), c); });
    return out;
}

/// B~_alpha: sum of all faces of type alpha (an orbit sum).
template <class K>
FaceElem<K> btilde(const Composition& alpha) {
    FaceElem<K> out(alpha.n());
    for (const Face& f : faces_of_type(alpha)) out.add_term(f, K::one());
    return out;
}

/// w0~ = sum over all faces of (-1)^(n - l(F)) F.
template <class K>
FaceElem<K> w0tilde(int n) {
    const FaceBasis& basis = FaceBasis::get(n);
    FaceElem<K> out(n);
    for (int i = 0; i < basis.size(); ++i) {
        const bool even = (n - basis.face(i).length()) % 2 == 0;
        out.add_coeff(i, even ? K::one() : -K::one());
    }
    return out;
}

/// B~_gamma: sum_alpha gamma_alpha B~_alpha.
inline FaceElem<Rat> btilde_weighted(const WeightVector& gamma) {
    FaceElem<Rat> out(gamma.n);
    for (const auto& [alpha, c] : gamma.weights) {
        if (c.is_zero()) continue;
        out += c * btilde<Rat>(alpha);
    }
    return out;
}

} // namespace desalg
