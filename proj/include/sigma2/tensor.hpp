#ifndef SIGMA2_TENSOR_HPP
#define SIGMA2_TENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sigma2/scalar.hpp"

namespace sigma2 {

// Dimensions (n_1+1, ..., n_d+1) of a dense tensor. Order 0 is legal for
// internal use (a single scalar entry); file parsers insist on order >= 1.
struct Shape {
    std::vector<int> dims;

    Shape() = default;
    explicit Shape(std::vector<int> d) : dims(std::move(d)) {
        for (int n : dims)
            if (n < 1) throw Error("tensor dimensions must be positive");
    }

    int order() const { return static_cast<int>(dims.size()); }
    int dim(int mode) const { return dims.at(mode); }
    std::size_t size() const {
        std::size_t n = 1;
        for (int d : dims) n *= static_cast<std::size_t>(d);
        return n;
    }
    bool operator==(const Shape& o) const { return dims == o.dims; }
    bool operator!=(const Shape& o) const { return dims != o.dims; }
};

template <class K>
using VecPerMode = std::vector<std::vector<K>>;  // one coordinate vector per mode

template <class K>
class Tensor {
public:
    Tensor() : shape_(std::vector<int>{}), e_(1) {}
    explicit Tensor(Shape s) : shape_(std::move(s)), e_(shape_.size()) {}
    Tensor(Shape s, std::vector<K> entries) : shape_(std::move(s)), e_(std::move(entries)) {
        if (e_.size() != shape_.size()) throw Error("entry count does not match shape");
    }

    const Shape& shape() const { return shape_; }
    int order() const { return shape_.order(); }
    int dim(int mode) const { return shape_.dim(mode); }
    std::size_t size() const { return e_.size(); }

    const K& operator[](std::size_t i) const { return e_[i]; }
    K& operator[](std::size_t i) { return e_[i]; }

    std::size_t flat_index(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (int m = 0; m < order(); ++m) f = f * dim(m) + static_cast<std::size_t>(idx[m]);
        return f;
    }
    const K& at(const std::vector<int>& idx) const { return e_[flat_index(idx)]; }
    K& at(const std::vector<int>& idx) { return e_[flat_index(idx)]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const K& x) { return x.is_zero(); });
    }
    bool operator==(const Tensor& o) const { return shape_ == o.shape_ && e_ == o.e_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    const std::vector<K>& entries() const { return e_; }

private:
    Shape shape_;
    std::vector<K> e_;
};

template <class K>
bool is_zero_vec(const std::vector<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

// Coordinate Segre map: entry (i_1,...,i_d) = prod_k vs[k][i_k].
template <class K>
Tensor<K> outer_product(const VecPerMode<K>& vs) {
    std::vector<int> dims;
    dims.reserve(vs.size());
    for (const auto& v : vs) {
        if (v.empty() || is_zero_vec(v)) throw Error("outer product factor is the zero vector");
        dims.push_back(static_cast<int>(v.size()));
    }
    Tensor<K> out{Shape(dims)};
    accumulate_outer(out, K(1), vs);
    return out;
}

// out += coeff * (x) vs, computed with running prefix products.
template <class K>
void accumulate_outer(Tensor<K>& out, const K& coeff, const VecPerMode<K>& vs) {
    int d = out.order();
    std::vector<int> idx(d, 0);
    std::vector<K> prefix(d + 1);
    prefix[0] = coeff;
    for (int m = 0; m < d; ++m) prefix[m + 1] = prefix[m] * vs[m][0];
    std::size_t flat = 0;
    for (;;) {
        out[flat] += prefix[d];
        ++flat;
        int m = d - 1;
        while (m >= 0 && ++idx[m] == out.dim(m)) {
            idx[m] = 0;
            --m;
        }
        if (m < 0) break;
        for (int k = m; k < d; ++k) prefix[k + 1] = prefix[k] * vs[k][idx[k]];
    }
    if (d == 0) return;
}

template <class K>
Tensor<K> slice(const Tensor<K>& t, int mode, int layer) {
    if (mode < 0 || mode >= t.order()) throw Error("slice: mode out of range");
    if (layer < 0 || layer >= t.dim(mode)) throw Error("slice: layer out of range");
    std::vector<int> dims;
    for (int m = 0; m < t.order(); ++m)
        if (m != mode) dims.push_back(t.dim(m));
    Tensor<K> out{Shape(dims)};

    std::size_t inner = 1;
    for (int m = mode + 1; m < t.order(); ++m) inner *= t.dim(m);
    std::size_t outer = t.size() / (inner * t.dim(mode));
    std::size_t w = 0;
    for (std::size_t o = 0; o < outer; ++o) {
        std::size_t base = (o * t.dim(mode) + layer) * inner;
        for (std::size_t i = 0; i < inner; ++i) out[w++] = t[base + i];
    }
    return out;
}

// Insert a new mode at `pos` carrying vector v: the inverse of factoring a
// rank-one direction out of one mode.
template <class K>
Tensor<K> insert_mode(const Tensor<K>& t, int pos, const std::vector<K>& v) {
    std::vector<int> dims;
    for (int m = 0; m < t.order(); ++m) {
        if (m == pos) dims.push_back(static_cast<int>(v.size()));
        dims.push_back(t.dim(m));
    }
    if (pos == t.order()) dims.push_back(static_cast<int>(v.size()));
    Tensor<K> out{Shape(dims)};

    std::size_t inner = 1;
    for (int m = pos; m < t.order(); ++m) inner *= t.dim(m);
    std::size_t outer = t.size() / inner;
    std::size_t w = 0;
    for (std::size_t o = 0; o < outer; ++o)
        for (const K& c : v)
            for (std::size_t i = 0; i < inner; ++i) out[w++] = c * t[o * inner + i];
    return out;
}

// Multilinear multiplication in one mode: rows x dims[mode] matrix, given
// row-major as a flat array.
template <class K>
Tensor<K> mode_apply(const Tensor<K>& t, int mode, const std::vector<K>& m_entries, int rows) {
    if (mode < 0 || mode >= t.order()) throw Error("mode_apply: mode out of range");
    int cols = t.dim(mode);
    if (rows < 1 || m_entries.size() != static_cast<std::size_t>(rows) * cols)
        throw Error("mode_apply: matrix shape does not match mode dimension");

    std::vector<int> dims = t.shape().dims;
    dims[mode] = rows;
    Tensor<K> out{Shape(dims)};

    std::size_t inner = 1;
    for (int m = mode + 1; m < t.order(); ++m) inner *= t.dim(m);
    std::size_t outer = t.size() / (inner * cols);
    for (std::size_t o = 0; o < outer; ++o) {
        for (int r = 0; r < rows; ++r) {
            std::size_t ob = (o * rows + r) * inner;
            for (int c = 0; c < cols; ++c) {
                const K& coef = m_entries[static_cast<std::size_t>(r) * cols + c];
                if (coef.is_zero()) continue;
                std::size_t ib = (o * cols + c) * inner;
                for (std::size_t i = 0; i < inner; ++i) out[ob + i] += coef * t[ib + i];
            }
        }
    }
    return out;
}

template <class K>
Tensor<K> linear_combine(const std::vector<std::pair<K, Tensor<K>>>& terms) {
    if (terms.empty()) throw Error("linear_combine: no terms");
    Tensor<K> out{terms.front().second.shape()};
    for (const auto& [c, t] : terms) {
        if (t.shape() != out.shape()) throw Error("linear_combine: shape mismatch");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * t[i];
    }
    return out;
}

// perm[k] = original mode placed at position k of the result.
template <class K>
Tensor<K> permute_modes(const Tensor<K>& t, const std::vector<int>& perm) {
    int d = t.order();
    if (static_cast<int>(perm.size()) != d) throw Error("permute_modes: bad permutation");
    std::vector<int> dims(d);
    for (int k = 0; k < d; ++k) dims[k] = t.dim(perm[k]);
    Tensor<K> out{Shape(dims)};

    std::vector<int> idx(d, 0), src(d, 0);
    for (std::size_t f = 0; f < out.size(); ++f) {
        for (int k = 0; k < d; ++k) src[perm[k]] = idx[k];
        out[f] = t.at(src);
        for (int m = d - 1; m >= 0; --m) {
            if (++idx[m] < dims[m]) break;
            idx[m] = 0;
        }
    }
    return out;
}

inline Tensor<QuadExt> to_quadext(const Tensor<Rat>& t) {
    std::vector<QuadExt> e(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) e[i] = QuadExt(t[i]);
    return Tensor<QuadExt>(t.shape(), std::move(e));
}

}  // namespace sigma2

#endif
