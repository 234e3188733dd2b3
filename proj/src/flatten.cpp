#include "sigma2/flatten.hpp"

#include <algorithm>

namespace sigma2 {

int exact_rank(const Mat<Rat>& m) {
    Mat<Rat> a = m;
    int rank = 0;
    int n = std::min(a.rows, a.cols);
    std::vector<bool> row_used(a.rows, false), col_used(a.cols, false);

    while (rank < n) {
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = 0; r < a.rows; ++r) {
            if (row_used[r]) continue;
            for (int c = 0; c < a.cols; ++c) {
                if (col_used[c] || a.at(r, c).is_zero()) continue;
                mpz_class h = a.at(r, c).height();
                if (pr < 0 || h > best) {
                    best = h;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        row_used[pr] = true;
        col_used[pc] = true;
        ++rank;
        Rat piv_inv = a.at(pr, pc).inv();
        for (int r = 0; r < a.rows; ++r) {
            if (row_used[r] || a.at(r, pc).is_zero()) continue;
            Rat f = a.at(r, pc) * piv_inv;
            for (int c = 0; c < a.cols; ++c) {
                if (col_used[c]) continue;
                if (!a.at(pr, c).is_zero()) a.at(r, c) -= f * a.at(pr, c);
            }
            a.at(r, pc) = Rat(0);
        }
    }
    return rank;
}

Mat<Rat> inverse(const Mat<Rat>& m) {
    if (m.rows != m.cols) throw Error("inverse of a non-square matrix");
    int n = m.rows;
    Mat<Rat> a = m;
    Mat<Rat> inv = Mat<Rat>::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!a.at(r, k).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("singular matrix");
        if (piv != k) {
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(k, c));
                std::swap(inv.at(piv, c), inv.at(k, c));
            }
        }
        Rat d = a.at(k, k).inv();
        for (int c = 0; c < n; ++c) {
            a.at(k, c) *= d;
            inv.at(k, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || a.at(r, k).is_zero()) continue;
            Rat f = a.at(r, k);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(k, c);
                inv.at(r, c) -= f * inv.at(k, c);
            }
        }
    }
    return inv;
}

bool is_invertible(const Mat<Rat>& m) {
    return m.rows == m.cols && rank_capped(m, m.rows) == m.rows;
}

BasisCompression basis_and_left_inverse(const Mat<Rat>& flat, const std::vector<int>& cols) {
    if (cols.size() != 2) throw InternalError("basis compression expects two columns");
    int dim = flat.rows;
    Mat<Rat> basis(dim, 2);
    for (int r = 0; r < dim; ++r) {
        basis.at(r, 0) = flat.at(r, cols[0]);
        basis.at(r, 1) = flat.at(r, cols[1]);
    }
    int p1 = -1, p2 = -1;
    for (int r = 0; r < dim && p1 < 0; ++r)
        if (!basis.at(r, 0).is_zero() || !basis.at(r, 1).is_zero()) p1 = r;
    for (int r = p1 + 1; r < dim && p2 < 0; ++r) {
        Rat det = basis.at(p1, 0) * basis.at(r, 1) - basis.at(p1, 1) * basis.at(r, 0);
        if (!det.is_zero()) p2 = r;
    }
    if (p1 < 0 || p2 < 0) throw InternalError("rank-2 basis without independent rows");
    Mat<Rat> p(2, 2, {basis.at(p1, 0), basis.at(p1, 1), basis.at(p2, 0), basis.at(p2, 1)});
    Mat<Rat> pinv = inverse(p);
    std::vector<Rat> left(2 * static_cast<std::size_t>(dim));
    left[static_cast<std::size_t>(p1)] = pinv.at(0, 0);
    left[static_cast<std::size_t>(p2)] = pinv.at(0, 1);
    left[static_cast<std::size_t>(dim) + p1] = pinv.at(1, 0);
    left[static_cast<std::size_t>(dim) + p2] = pinv.at(1, 1);
    return {std::move(basis), std::move(left)};
}

Bipartition Bipartition::of(std::vector<int> j1, int order) {
    std::sort(j1.begin(), j1.end());
    if (j1.empty() || static_cast<int>(j1.size()) >= order)
        throw Error("bipartition groups must both be nonempty");
    std::vector<int> j2;
    std::size_t k = 0;
    for (int m = 0; m < order; ++m) {
        if (k < j1.size() && j1[k] == m) {
            if (k > 0 && j1[k - 1] == m) throw Error("bipartition repeats a mode");
            ++k;
        } else {
            j2.push_back(m);
        }
    }
    if (k != j1.size()) throw Error("bipartition mode out of range");
    return {std::move(j1), std::move(j2)};
}

std::vector<Bipartition> all_bipartitions(int order) {
    if (order < 2) return {};
    std::vector<Bipartition> out;
    // subsets of {1,...,d-1} joined with {0}, excluding the full set
    for (unsigned mask = 0; mask + 1 < (1u << (order - 1)); ++mask) {
        std::vector<int> j1{0};
        for (int m = 1; m < order; ++m)
            if (mask & (1u << (m - 1))) j1.push_back(m);
        out.push_back(Bipartition::of(std::move(j1), order));
    }
    return out;
}

std::vector<int> multilinear_ranks(const Tensor<Rat>& t) {
    std::vector<int> out(t.order());
    if (t.order() == 1) {
        out[0] = t.is_zero() ? 0 : 1;
        return out;
    }
    for (int m = 0; m < t.order(); ++m)
        out[m] = rank_capped(mode_flattening(t, m), t.dim(m));
    return out;
}

int max_flattening_rank(const Tensor<Rat>& t, int cap) {
    if (t.order() == 0) return t.is_zero() ? 0 : 1;
    if (t.order() == 1) return t.is_zero() ? 0 : 1;
    int best = 0;
    for (const Bipartition& p : all_bipartitions(t.order())) {
        int r = rank_capped(flattening(t, p), cap);
        best = std::max(best, r);
        if (best > cap) return best;
    }
    return best;
}

}  // namespace sigma2
