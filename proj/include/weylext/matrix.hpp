#pragma once

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "weylext/scalar.hpp"

namespace weylext {

/// Dense integer matrix, row-major. Entries index (row, col) where columns
/// index the source basis and rows the target basis of a linear map.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

template <class F>
struct FieldMat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    FieldMat() = default;
    FieldMat(const F& f, int r, int c)
        : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}
    typename F::Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const typename F::Elem& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }
};

template <class F>
FieldMat<F> lift(const F& f, const IntMat& m) {
    FieldMat<F> out(f, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = f.from_int(m.a[i]);
    return out;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(const F& f, FieldMat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        auto inv = f.div(f.one(), m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto coef = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(const F& f, FieldMat<F> m) {
    return static_cast<int>(rref(f, m).size());
}

/// Rank and a basis of the kernel. Kernel vectors are exactly annihilated.
template <class F>
std::pair<int, std::vector<std::vector<typename F::Elem>>> rank_and_kernel(
    const F& f, FieldMat<F> m) {
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> kernel;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Elem> v(m.cols, f.zero());
        v[c] = f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m.at(static_cast<int>(r), c));
        kernel.push_back(std::move(v));
    }
    return {static_cast<int>(pivots.size()), std::move(kernel)};
}

template <class F>
FieldMat<F> mat_mul(const F& f, const FieldMat<F>& a, const FieldMat<F>& b) {
    if (a.cols != b.rows) throw InvariantError("mat_mul: shape mismatch");
    FieldMat<F> out(f, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

/// Whether A x = b is solvable over the field.
template <class F>
bool solvable(const F& f, const FieldMat<F>& a, const std::vector<typename F::Elem>& b) {
    if (static_cast<int>(b.size()) != a.rows) throw InvariantError("solvable: shape mismatch");
    FieldMat<F> aug(f, a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    FieldMat<F> plain = a;
    return rank(f, std::move(plain)) == rank(f, std::move(aug));
}

/// dim ker(d_out) - rank(d_in) with the complex condition d_out . d_in = 0
/// checked first. d_in maps into the middle term, d_out maps out of it.
template <class F>
int homology_dim(const F& f, const FieldMat<F>& d_in, const FieldMat<F>& d_out) {
    if (d_in.rows != d_out.cols)
        throw InvariantError("homology_dim: middle dimensions disagree");
    auto comp = mat_mul(f, d_out, d_in);
    for (int r = 0; r < comp.rows; ++r)
        for (int c = 0; c < comp.cols; ++c)
            if (!f.is_zero(comp.at(r, c))) {
                std::ostringstream os;
                os << "not a complex: (d_out . d_in)[" << r << "," << c << "] != 0";
                throw InvariantError(os.str());
            }
    int n = d_out.cols;
    int h = (n - rank(f, d_out)) - rank(f, d_in);
    if (h < 0) throw InvariantError("homology_dim: negative dimension");
    return h;
}

int homology_dim_int(const IntMat& d_in, const IntMat& d_out, FieldMode mode,
                     std::uint64_t prime);
int rank_int(const IntMat& m, FieldMode mode, std::uint64_t prime);

}  // namespace weylext
