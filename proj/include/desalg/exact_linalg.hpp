#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "desalg/face_algebra.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/scalar.hpp"

namespace desalg {

/// Dense rectangular matrix over an exact field.
template <class K>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K::zero()) {}

    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int d) {
        Mat m(d, d);
        for (int i = 0; i < d; ++i) m.at(i, i) = K::one();
        return m;
    }

    Mat& operator+=(const Mat& o) {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("Mat: dimension mismatch");
        for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }

    friend Mat operator*(const K& s, const Mat& m) {
        Mat out(m.rows, m.cols);
        if (s.is_zero()) return out;
        for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = s * m.a[i];
        return out;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("Mat: dimension mismatch");
        Mat out(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const K& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    const K& w = y.at(k, j);
                    if (!w.is_zero()) out.at(i, j) += v * w;
                }
            }
        return out;
    }

    std::vector<K> to_coords() const { return a; }
};

/// Exact rank. Over Q: fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix, with sparsity/bit-size-aware
/// pivoting. Over F_p: plain Gaussian elimination.
int rank(const Mat<Rat>& M);
int rank(const Mat<Fp>& M);

template <class K>
int kernel_dim(const Mat<K>& M) {
    return M.cols - rank(M);
}

namespace detail {
/// Plain rational elimination; used to cross-check the Bareiss path.
int rank_rational_gauss(const Mat<Rat>& M);
} // namespace detail

/// Any solution of M x = b, or nullopt if inconsistent (free variables
/// are set to zero). Plain exact elimination; M is not modified.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& M, const std::vector<K>& b) {
    if (static_cast<int>(b.size()) != M.rows)
        throw std::invalid_argument("solve: right-hand side size mismatch");
    const int rows = M.rows, cols = M.cols;
    Mat<K> w(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w.at(i, j) = M.at(i, j);
        w.at(i, cols) = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!w.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j <= cols; ++j) std::swap(w.at(p, j), w.at(r, j));
        const K inv = w.at(r, c).inv();
        for (int j = c; j <= cols; ++j) w.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const K f = w.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j <= cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!w.at(i, cols).is_zero()) return std::nullopt;
    std::vector<K> x(cols, K::zero());
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, cols);
    return x;
}

/// Kernel dimension of M - lambda*I; for diagonalizable operators this is
/// the algebraic multiplicity of the eigenvalue (callers confirm
/// diagonalizability by summing multiplicities to the dimension).
template <class K>
int eigen_multiplicity(const Mat<K>& M, const K& lambda) {
    if (M.rows != M.cols) throw std::invalid_argument("eigen_multiplicity: square matrix required");
    Mat<K> w = M;
    for (int i = 0; i < w.rows; ++i) w.at(i, i) -= lambda;
    return kernel_dim(w);
}

/// Dense polynomial, coefficients lowest degree first; no trailing zeros
/// (the zero polynomial has an empty coefficient vector).
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({K::one()}); }

    /// prod (x - k) over the distinct values in `roots` (each factor once).
    static Polynomial from_roots(const std::vector<K>& roots) {
        Polynomial f = one();
        std::vector<K> used;
        for (const K& r : roots) {
            bool seen = false;
            for (const K& u : used)
                if (u == r) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            used.push_back(r);
            f = f * Polynomial({-r, K::one()});
        }
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == K::one(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K::zero();
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return Polynomial();
        std::vector<K> out(f.c_.size() + g.c_.size() - 1, K::zero());
        for (size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        std::vector<K> out(std::max(f.c_.size(), g.c_.size()), K::zero());
        for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return f.c_ != g.c_; }

    K eval(const K& x) const {
        K v = K::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    /// Human-readable coefficient form, e.g. "x^4 - 3x^3 - 6x^2 + 8x".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& c = c_[i];
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit_coeff = (cs == "1") && i > 0;
            if (!unit_coeff) out += cs;
            if (i >= 1) {
                if (!unit_coeff) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Horner evaluation of f at an algebra element (GroupElem, FaceElem, Mat).
template <class K, class Elem>
Elem poly_eval_at_element(const Polynomial<K>& f, const Elem& a, const Elem& one) {
    Elem acc = K::zero() * one;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        acc += f.coeff(i) * one;
    }
    return acc;
}

/// Integer roots of f with multiplicity, searched in [-bound, bound];
/// nullopt if f does not factor completely into such roots.
std::optional<std::vector<std::pair<long long, int>>> integer_roots(const Polynomial<Rat>& f,
                                                                    long long bound);

/// "(x+2)x(x-1)(x-4)" when f splits into integer linear factors
/// (ascending roots, exponents for repeats); nullopt otherwise.
std::optional<std::string> factored_str(const Polynomial<Rat>& f, long long root_bound);

namespace detail {

/// Incremental row reduction that reports the first linear dependence
/// among the vectors fed to it, as coefficients over those vectors.
template <class K>
class LinearDependenceTracker {
public:
    /// Returns the dependence c_0..c_k (with c_k = 1) if `v` is dependent
    /// on the previously added vectors; otherwise stores it and returns
    /// nullopt.
    std::optional<std::vector<K>> add(std::vector<K> v) {
        std::vector<K> combo(count_ + 1, K::zero());
        combo[count_] = K::one();
        for (const Row& r : rows_) {
            const K f = v[r.pivot];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j)
                if (!r.v[j].is_zero()) v[j] -= f * r.v[j];
            for (size_t j = 0; j < r.combo.size(); ++j)
                if (!r.combo[j].is_zero()) combo[j] -= f * r.combo[j];
        }
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == v.size()) return combo;
        const K inv = v[pivot].inv();
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows_.push_back(Row{std::move(v), std::move(combo), pivot});
        ++count_;
        return std::nullopt;
    }

private:
    struct Row {
        std::vector<K> v;
        std::vector<K> combo;
        size_t pivot;
    };
    std::vector<Row> rows_;
    size_t count_ = 0;
};

template <class K, class Elem>
Polynomial<K> krylov_generic(const Elem& a, const Elem& one) {
    LinearDependenceTracker<K> tracker;
    Elem p = one;
    while (true) {
        auto dep = tracker.add(p.to_coords());
        if (dep) return Polynomial<K>(std::move(*dep));
        p = p * a;
    }
}

} // namespace detail

/// Minimal polynomial via the Krylov sequence 1, a, a^2, ... of powers in
/// the ambient algebra, stopping at the first linear dependence. Monic;
/// divides every annihilating polynomial of a.
template <class K>
Polynomial<K> krylov_min_poly(const GroupElem<K>& a) {
    return detail::krylov_generic<K>(a, GroupElem<K>::identity(a.n()));
}

template <class K>
Polynomial<K> krylov_min_poly(const FaceElem<K>& a) {
    return detail::krylov_generic<K>(a, FaceElem<K>::unit(a.n()));
}

/// Face-algebra elements with small integer coefficients (every w0~ B~
/// combination) go through the right-multiplication operator instead:
/// its sparse integer columns are materialized once, and each Krylov step
/// is one operator application to the coordinate vector. Same sequence of
/// power coordinates, far cheaper than dense-by-dense algebra products at
/// dim kF = 4683.
Polynomial<Rat> krylov_min_poly(const FaceElem<Rat>& a);

template <class K>
Polynomial<K> krylov_min_poly(const Mat<K>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("krylov_min_poly: square matrix required");
    return detail::krylov_generic<K>(m, Mat<K>::identity(m.rows));
}

/// Matrix of "right multiplication by a" on kS_n in the rank basis:
/// column j holds the coordinates of (w_j * a).
template <class K>
Mat<K> right_mult_matrix(const GroupElem<K>& a) {
    const auto d = static_cast<int>(a.dim());
    Mat<K> m(d, d);
    const auto supp = a.support_perms();
    int j = 0;
    for_each_permutation(a.n(), [&](const Permutation& w) {
        for (const auto& [q, c] : supp) m.at(static_cast<int>(w.compose(q).rank()), j) += c;
        ++j;
    });
    return m;
}

/// Matrix of "right multiplication by a" on kF in the canonical face
/// order: column j holds the coordinates of (F_j * a).
template <class K>
Mat<K> right_mult_matrix(const FaceElem<K>& a) {
    const FaceBasis& basis = FaceBasis::get(a.n());
    Mat<K> m(basis.size(), basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        const Face& fj = basis.face(j);
        a.for_each([&](int i, const K& c) {
            m.at(basis.index(face_product(fj, basis.face(i))), j) += c;
        });
    }
    return m;
}

} // namespace desalg
