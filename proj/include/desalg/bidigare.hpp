#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "desalg/exact_linalg.hpp"
#include "desalg/face_algebra.hpp"
#include "desalg/group_algebra.hpp"

namespace desalg {

/// Element of the descent algebra in B-basis coordinates:
/// finitely many compositions of n mapped to scalars.
template <class K>
struct DescentElem {
    int n = 0;
    std::map<Composition, K> coords;

    explicit DescentElem(int n_) : n(n_) { check_n(n_); }

    void add_coord(const Composition& alpha, const K& v) {
        if (alpha.n() != n) throw std::invalid_argument("DescentElem: composition of wrong n");
        if (v.is_zero()) return;
        auto [it, inserted] = coords.emplace(alpha, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) coords.erase(it);
        }
    }

    friend bool operator==(const DescentElem& a, const DescentElem& b) {
        return a.n == b.n && a.coords == b.coords;
    }
};

/// Bidigare's map: B_alpha -> B~_alpha, extended linearly. A k-algebra
/// anti-isomorphism onto the S_n-invariant subalgebra of kF.
template <class K>
FaceElem<K> rho(const DescentElem<K>& x) {
    FaceElem<K> out(x.n);
    for (const auto& [alpha, c] : x.coords) out += c * btilde<K>(alpha);
    return out;
}

/// Inverse of rho on the span of the B~-basis. The B~_alpha have pairwise
/// disjoint supports (the faces of one type), so solving against that
/// basis amounts to requiring a constant coefficient on each type class.
/// Rejects elements outside the span with a diagnostic naming a witness.
template <class K>
DescentElem<K> rho_inv(const FaceElem<K>& y) {
    const FaceBasis& basis = FaceBasis::get(y.n());
    std::map<Composition, std::pair<K, int>> by_type; // coeff, support count
    bool bad = false;
    std::string witness;
    y.for_each([&](int i, const K& c) {
        if (bad) return;
        const Face& f = basis.face(i);
        auto [it, inserted] = by_type.emplace(f.type(), std::make_pair(c, 1));
        if (!inserted) {
            if (it->second.first != c) {
                bad = true;
                witness = "faces of type " + f.type().str() + " carry unequal coefficients (" +
                          it->second.first.str() + " vs " + c.str() + " at " + f.str() + ")";
                return;
            }
            ++it->second.second;
        }
    });
    if (bad) throw std::invalid_argument("rho_inv: element is not S_n-invariant: " + witness);
    DescentElem<K> out(y.n());
    for (const auto& [alpha, cc] : by_type) {
        if (cc.second != static_cast<int>(faces_of_type(alpha).size()))
            throw std::invalid_argument("rho_inv: element is not S_n-invariant: type " +
                                        alpha.str() + " is only partially supported");
        out.add_coord(alpha, cc.first);
    }
    return out;
}

/// Expands B-coordinates into the permutation basis of kS_n.
template <class K>
GroupElem<K> to_group_algebra(const DescentElem<K>& x) {
    GroupElem<K> out(x.n);
    for (const auto& [alpha, c] : x.coords) out += c * basis_B_comp<K>(alpha);
    return out;
}

/// Exact solve of a against the 2^(n-1) B-basis vectors inside the
/// n!-dimensional group algebra; nullopt if a is outside the descent
/// algebra.
template <class K>
std::optional<DescentElem<K>> from_group_algebra(const GroupElem<K>& a) {
    const int n = a.n();
    const int ncols = (n == 0) ? 1 : (1 << (n - 1));
    const auto d = static_cast<int>(a.dim());
    Mat<K> m(d, ncols);
    std::vector<Composition> comps = enumerate_compositions(n);
    for (int j = 0; j < ncols; ++j) {
        basis_B_comp<K>(comps[j]).for_each(
            [&](std::uint64_t r, const K& c) { m.at(static_cast<int>(r), j) = c; });
    }
    auto sol = solve(m, a.to_coords());
    if (!sol) return std::nullopt;
    DescentElem<K> out(n);
    for (int j = 0; j < ncols; ++j) out.add_coord(comps[j], (*sol)[j]);
    return out;
}

} // namespace desalg
