#ifndef SIGMA2_DECOMPOSE_HPP
#define SIGMA2_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigma2/classify.hpp"

namespace sigma2 {

// coeff * v_1 (x) ... (x) v_d, normalized so that each vector has last
// nonzero coordinate 1 and the absorbed scales live in coeff.
struct RankOneTerm {
    QuadExt coeff;
    VecPerMode<QuadExt> vectors;

    void normalize();
    std::string str() const;
    bool operator==(const RankOneTerm& o) const {
        return coeff == o.coeff && vectors == o.vectors;
    }
};

struct Decomposition {
    int claimed_rank = 0;
    std::vector<RankOneTerm> terms;
    mpz_class delta = 0;  // 0: all scalars rational

    // Order-independent fingerprint; two decompositions with the same term
    // multiset get the same key.
    std::string canonical_key() const;
};

// Factor a rank-one tensor into its mode vectors; exactness is checked by
// reconstruction and a failure reports that the input is not rank one.
RankOneTerm factor_rank_one(const Tensor<Rat>& t);

Decomposition decompose_rank_two(const Tensor<Rat>& core, const PencilRootStructure& roots);

// Tangent-vector normal form of a concise core:
//   core = alpha * w_1 (x) ... (x) w_q + sum_i beta_i * w_1 (x) .. v_i .. (x) w_q
// with {w_i, v_i} a basis of each mode's plane and every beta_i nonzero.
struct TangentFrame {
    int q = 0;
    VecPerMode<Rat> w;  // base point coordinates
    VecPerMode<Rat> v;  // tangent directions
    Rat alpha;
    std::vector<Rat> beta;

    Tensor<Rat> expand() const;
};

TangentFrame tangent_frame(const Tensor<Rat>& core);

// Free parameters for the tangent decomposition: one nonzero scalar per mode
// except the last, which is determined by the others.
struct TangentParams {
    std::vector<Rat> t;
};

Decomposition decompose_tangent(const TangentFrame& frame, const TangentParams& params);

// Map a decomposition of a concise core back to the ambient tensor.
Decomposition lift(const Decomposition& dec, const ConciseCore& cc);

Decomposition decompose(const Tensor<Rat>& t,
                        const std::optional<TangentParams>& params = std::nullopt);

// Same, reusing a classification the caller already holds.
Decomposition decompose(const Analysis& analysis, const Tensor<Rat>& t,
                        const std::optional<TangentParams>& params = std::nullopt);

bool verify(const Decomposition& dec, const Tensor<Rat>& t);

Tensor<QuadExt> reconstruct(const Decomposition& dec, const Shape& shape);

}  // namespace sigma2

#endif
