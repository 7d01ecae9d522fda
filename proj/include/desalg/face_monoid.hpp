#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "desalg/combinatorics.hpp"

namespace desalg {

/// A set composition of [n] ("face"): ordered tuple of nonempty disjoint
/// blocks covering [n]. Blocks are bit-sets (element i <-> bit i-1).
class Face {
public:
    Face() = default;
    Face(int n, std::vector<std::uint32_t> blocks);

    /// The unit face ([n]); the empty tuple for n = 0.
    static Face unit(int n);
    /// ({1},{2},...,{n}).
    static Face singletons(int n);
    /// P_w = ({w(1)},...,{w(n)}).
    static Face of_permutation(const Permutation& w);

    int n() const { return n_; }
    int length() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::uint32_t>& blocks() const { return blocks_; }

    /// (|F_1|,...,|F_k|).
    Composition type() const;
    /// Number of size-1 blocks.
    int singleton_count() const;

    /// Text form "1,2|3" for ({1,2},{3}).
    std::string str() const;
    static Face parse(int n, const std::string& s);

    friend bool operator==(const Face& a, const Face& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
    /// Canonical order: by length, then lexicographically on block bit-sets.
    friend bool operator<(const Face& a, const Face& b) {
        if (a.blocks_.size() != b.blocks_.size()) return a.blocks_.size() < b.blocks_.size();
        return a.blocks_ < b.blocks_;
    }

private:
    int n_ = 0;
    std::vector<std::uint32_t> blocks_;
};

struct FaceHash {
    size_t operator()(const Face& f) const;
};

/// Pairwise intersections F_i n G_j in lexicographic (i,j) order, empty
/// ones removed. Associative with neutral element ([n]).
Face face_product(const Face& F, const Face& G);

/// F is contained in G: every block of F is a subset of a block of G.
bool contains(const Face& F, const Face& G);

/// For F contained in G, the face H over [l(F)] with H_i = {j : F_j <= G_i}.
/// Length-preserving; rejects F not contained in G.
Face containment_bijection(const Face& F, const Face& G);

/// Blockwise image (w F_1, ..., w F_k). Preserves type.
Face act(const Permutation& w, const Face& F);

/// For w with Des w <= gaps_inv(alpha): the face (w(I_1),...,w(I_k)) where
/// the I_j are the left-to-right intervals of sizes alpha_1,...,alpha_k.
/// A bijection from {w : Des w <= gaps_inv(alpha)} onto faces of type alpha.
Face omega_bijection(const Composition& alpha, const Permutation& w);

/// Left-to-right interval face (I_1,...,I_k) of type alpha (= omega at id).
Face interval_face(const Composition& alpha);

/// All set compositions of [n] in canonical order: increasing length,
/// ties broken lexicographically on the block bit-set vectors. This order
/// is part of the public contract (triangularity tests depend on it).
/// Cached per n; thread-safe.
class FaceBasis {
public:
    static const FaceBasis& get(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(faces_.size()); }
    const Face& face(int i) const { return faces_[i]; }
    const std::vector<Face>& faces() const { return faces_; }
    int index(const Face& f) const;

private:
    explicit FaceBasis(int n);
    int n_;
    std::vector<Face> faces_;
    std::unordered_map<Face, int, FaceHash> index_;
};

/// Every set composition of [n] exactly once, in the canonical order.
/// The count is the ordered Bell number of n.
inline const std::vector<Face>& enumerate_faces(int n) { return FaceBasis::get(n).faces(); }

} // namespace desalg
