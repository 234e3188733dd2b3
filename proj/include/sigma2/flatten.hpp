#ifndef SIGMA2_FLATTEN_HPP
#define SIGMA2_FLATTEN_HPP

#include <vector>

#include "sigma2/matrix.hpp"
#include "sigma2/tensor.hpp"

namespace sigma2 {

// Partition of the mode set {0,...,d-1} into two nonempty groups, each kept
// sorted. Rows of the flattening run over j1, columns over j2.
struct Bipartition {
    std::vector<int> j1, j2;

    static Bipartition of(std::vector<int> j1, int order);
};

// All bipartitions up to transposition (mode 0 always lands in j1):
// 2^(d-1) - 1 of them for an order-d tensor.
std::vector<Bipartition> all_bipartitions(int order);

template <class K>
Mat<K> flattening(const Tensor<K>& t, const Bipartition& p) {
    if (p.j1.size() + p.j2.size() != static_cast<std::size_t>(t.order()))
        throw Error("bipartition does not match tensor order");
    std::size_t rows = 1, cols = 1;
    for (int m : p.j1) rows *= t.dim(m);
    for (int m : p.j2) cols *= t.dim(m);
    Mat<K> out(static_cast<int>(rows), static_cast<int>(cols));

    std::vector<int> idx(t.order(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t rr = r;
        for (auto it = p.j1.rbegin(); it != p.j1.rend(); ++it) {
            idx[*it] = static_cast<int>(rr % t.dim(*it));
            rr /= t.dim(*it);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t cc = c;
            for (auto it = p.j2.rbegin(); it != p.j2.rend(); ++it) {
                idx[*it] = static_cast<int>(cc % t.dim(*it));
                cc /= t.dim(*it);
            }
            out.at(static_cast<int>(r), static_cast<int>(c)) = t.at(idx);
        }
    }
    return out;
}

// Mode-k flattening, rows indexed by mode k.
template <class K>
Mat<K> mode_flattening(const Tensor<K>& t, int mode) {
    std::vector<int> rest;
    for (int m = 0; m < t.order(); ++m)
        if (m != mode) rest.push_back(m);
    Bipartition p{{mode}, rest};
    return flattening(t, p);
}

// Exact rank of the mode-k flattening for every mode. An order-1 tensor
// reports 1 (or 0 if zero): its only "flattening" is the vector itself.
std::vector<int> multilinear_ranks(const Tensor<Rat>& t);

// Maximum flattening rank over all bipartitions, short-circuiting as soon as
// some flattening exceeds `cap` (the value returned is then cap+1).
int max_flattening_rank(const Tensor<Rat>& t, int cap);

}  // namespace sigma2

#endif
