#ifndef SIGMA2_MATRIX_HPP
#define SIGMA2_MATRIX_HPP

#include <utility>
#include <vector>

#include "sigma2/scalar.hpp"

namespace sigma2 {

template <class K>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<K> e;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {
        if (r < 1 || c < 1) throw Error("matrix dimensions must be positive");
    }
    Mat(int r, int c, std::vector<K> entries) : rows(r), cols(c), e(std::move(entries)) {
        if (e.size() != static_cast<std::size_t>(r) * c) throw Error("matrix entry count mismatch");
    }

    const K& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
    K& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<K> col(int c) const {
        std::vector<K> v(rows);
        for (int r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }
    std::vector<K> row(int r) const {
        std::vector<K> v(cols);
        for (int c = 0; c < cols; ++c) v[c] = at(r, c);
        return v;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    if (a.cols != b.rows) throw Error("matrix product shape mismatch");
    Mat<K> out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const K& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

// Greedy left-to-right column reduction. Exact rank, capped: stops as soon as
// more than `cap` independent columns are seen (returned rank is then cap+1).
// Out-param (optional) collects the indices of the independent columns found.
template <class K>
int rank_capped(const Mat<K>& m, int cap, std::vector<int>* basis_cols = nullptr) {
    struct Reduced {
        std::vector<K> v;
        int pivot;
    };
    std::vector<Reduced> basis;
    for (int c = 0; c < m.cols; ++c) {
        std::vector<K> v = m.col(c);
        for (const Reduced& b : basis) {
            const K& x = v[b.pivot];
            if (x.is_zero()) continue;
            K f = x / b.v[b.pivot];
            for (int r = 0; r < m.rows; ++r)
                if (!b.v[r].is_zero()) v[r] -= f * b.v[r];
        }
        int pivot = -1;
        for (int r = 0; r < m.rows; ++r)
            if (!v[r].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        basis.push_back({std::move(v), pivot});
        if (basis_cols) basis_cols->push_back(c);
        if (static_cast<int>(basis.size()) > cap) break;
    }
    return static_cast<int>(basis.size());
}

// Rank by elimination with full pivoting; among candidates the first entry of
// maximal height is chosen. Exact over the fraction field.
int exact_rank(const Mat<Rat>& m);

// Two-column basis B of a rank-2 column span together with a left inverse L
// (2 x B.rows, row-major) satisfying L * B = I, built from the first pair of
// independent rows of B.
struct BasisCompression {
    Mat<Rat> basis;
    std::vector<Rat> left;
};

BasisCompression basis_and_left_inverse(const Mat<Rat>& flat, const std::vector<int>& cols);

// Gauss-Jordan inverse; throws on a singular input.
Mat<Rat> inverse(const Mat<Rat>& m);

bool is_invertible(const Mat<Rat>& m);

}  // namespace sigma2

#endif
