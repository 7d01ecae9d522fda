#include "desalg/exact_linalg.hpp"

#include "desalg/face_monoid.hpp"

#include <algorithm>
#include <limits>

#include <gmp.h>

namespace desalg {

namespace {

// Denominator-cleared integer copy of a rational matrix (row scaling does
// not change the rank).
std::vector<std::vector<mpz_class>> to_integer_rows(const Mat<Rat>& M) {
    std::vector<std::vector<mpz_class>> a(M.rows, std::vector<mpz_class>(M.cols));
    for (int i = 0; i < M.rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < M.cols; ++j) {
            const mpz_class d = M.at(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < M.cols; ++j) {
            const Rat& q = M.at(i, j);
            mpz_class scale = l / q.den();
            a[i][j] = q.num() * scale;
        }
    }
    return a;
}

} // namespace

int rank(const Mat<Rat>& M) {
    auto a = to_integer_rows(M);
    const int rows = M.rows, cols = M.cols;
    if (rows == 0 || cols == 0) return 0;

    std::vector<int> nnz(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[i][j] != 0) ++nnz[i];

    mpz_class prev = 1, t;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Pivot: sparsest row with a nonzero in this column, smallest
        // entry on ties. Keeps fill-in and growth down on the triangular
        // operator matrices this sees most.
        int p = -1;
        int best_nnz = std::numeric_limits<int>::max();
        size_t best_bits = std::numeric_limits<size_t>::max();
        for (int i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const size_t bits = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
            if (nnz[i] < best_nnz || (nnz[i] == best_nnz && bits < best_bits)) {
                p = i;
                best_nnz = nnz[i];
                best_bits = bits;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        std::swap(nnz[p], nnz[r]);

        const mpz_class& piv = a[r][c];
        const bool unit_prev = (prev == 1);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0 && piv == 1 && unit_prev) continue;
            const mpz_class ci = a[i][c];
            int cnt = 0;
            if (ci == 0) {
                // Row keeps its support; entries are rescaled by piv/prev
                // (exact, by the Bareiss identity).
                for (int j = c + 1; j < cols; ++j) {
                    mpz_class& x = a[i][j];
                    if (x == 0) continue;
                    mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
                    if (!unit_prev)
                        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
                    ++cnt;
                }
            } else {
                for (int j = c + 1; j < cols; ++j) {
                    mpz_class& x = a[i][j];
                    const mpz_class& rj = a[r][j];
                    if (x == 0 && rj == 0) continue;
                    mpz_mul(t.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
                    mpz_submul(t.get_mpz_t(), ci.get_mpz_t(), rj.get_mpz_t());
                    if (!unit_prev)
                        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    mpz_swap(x.get_mpz_t(), t.get_mpz_t());
                    if (x != 0) ++cnt;
                }
                a[i][c] = 0;
            }
            nnz[i] = cnt;
        }
        prev = piv;
        ++r;
    }
    return r;
}

int rank(const Mat<Fp>& M) {
    Mat<Fp> w = M;
    const int rows = w.rows, cols = w.cols;
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
            for (int j = c; j < cols; ++j) std::swap(w.at(p, j), w.at(r, j));
        const Fp inv = w.at(r, c).inv();
        for (int j = c; j < cols; ++j) w.at(r, j) *= inv;
        for (int i = r + 1; i < rows; ++i) {
            const Fp f = w.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

namespace detail {

int rank_rational_gauss(const Mat<Rat>& M) {
    Mat<Rat> w = M;
    const int rows = w.rows, cols = w.cols;
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
            for (int j = c; j < cols; ++j) std::swap(w.at(p, j), w.at(r, j));
        const Rat inv = w.at(r, c).inv();
        for (int j = c; j < cols; ++j) w.at(r, j) *= inv;
        for (int i = r + 1; i < rows; ++i) {
            const Rat f = w.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace detail

Polynomial<Rat> krylov_min_poly(const FaceElem<Rat>& a) {
    const FaceBasis& basis = FaceBasis::get(a.n());
    const int d = basis.size();
    bool small_ints = true;
    a.for_each([&](int, const Rat& c) {
        if (!c.is_integer() || mpz_sizeinbase(c.num().get_mpz_t(), 2) > 40) small_ints = false;
    });
    if (!small_ints) return detail::krylov_generic<Rat>(a, FaceElem<Rat>::unit(a.n()));

    // sparse integer columns of "right multiplication by a"
    std::vector<std::vector<std::pair<int, long long>>> cols(d);
    std::vector<long long> buf(d, 0);
    std::vector<int> touched;
    for (int j = 0; j < d; ++j) {
        const Face& fj = basis.face(j);
        a.for_each([&](int i, const Rat& c) {
            const int idx = basis.index(face_product(fj, basis.face(i)));
            if (buf[idx] == 0) touched.push_back(idx);
            buf[idx] += c.num().get_si();
        });
        auto& col = cols[j];
        for (int idx : touched) {
            if (buf[idx] != 0) col.emplace_back(idx, buf[idx]);
            buf[idx] = 0;
        }
        std::sort(col.begin(), col.end());
        touched.clear();
    }

    detail::LinearDependenceTracker<Rat> tracker;
    std::vector<Rat> v(d, Rat(0));
    v[basis.index(Face::unit(a.n()))] = Rat(1);
    while (true) {
        auto dep = tracker.add(v);
        if (dep) return Polynomial<Rat>(std::move(*dep));
        std::vector<Rat> next(d, Rat(0));
        for (int j = 0; j < d; ++j) {
            if (v[j].is_zero()) continue;
            for (const auto& [i, c] : cols[j]) next[i] += Rat(c) * v[j];
        }
        v = std::move(next);
    }
}

std::optional<std::vector<std::pair<long long, int>>> integer_roots(const Polynomial<Rat>& f,
                                                                    long long bound) {
    if (f.is_zero()) return std::nullopt;
    // Clear denominators; integer roots are unaffected.
    mpz_class l = 1;
    for (const Rat& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> c;
    c.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) c.push_back(q.num() * (l / q.den()));

    std::vector<std::pair<long long, int>> roots;
    int zero_mult = 0;
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(0, zero_mult);

    auto deflate_at = [&](long long k) -> bool {
        // synthetic division by (x - k); succeeds iff k is a root
        const mpz_class kz = static_cast<long>(k);
        std::vector<mpz_class> b(c.size() - 1);
        mpz_class acc = c.back();
        for (size_t i = c.size() - 1; i-- > 0;) {
            b[i] = acc;
            acc = c[i] + acc * kz;
        }
        if (acc != 0) return false;
        c = std::move(b);
        return true;
    };

    for (long long k = 1; k <= bound && c.size() > 1; ++k) {
        // Integer roots of an integer polynomial divide its constant term.
        if (!mpz_divisible_ui_p(c.front().get_mpz_t(), static_cast<unsigned long>(k))) continue;
        for (long long s : {k, -k}) {
            int mult = 0;
            while (c.size() > 1 && deflate_at(s)) ++mult;
            if (mult > 0) roots.emplace_back(s, mult);
        }
    }
    if (c.size() > 1) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::string> factored_str(const Polynomial<Rat>& f, long long root_bound) {
    if (f.is_zero()) return std::nullopt;
    auto roots = integer_roots(f, root_bound);
    if (!roots) return std::nullopt;
    std::string out;
    const Rat lead = f.coeffs().back();
    if (lead != Rat::one()) out += lead.str() + "*";
    for (const auto& [r, m] : *roots) {
        if (r == 0)
            out += "x";
        else if (r > 0)
            out += "(x-" + std::to_string(r) + ")";
        else
            out += "(x+" + std::to_string(-r) + ")";
        if (m > 1) out += "^" + std::to_string(m);
    }
    if (out.empty()) out = lead.str();
    return out;
}

} // namespace desalg
