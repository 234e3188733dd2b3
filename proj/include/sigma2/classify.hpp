#ifndef SIGMA2_CLASSIFY_HPP
#define SIGMA2_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "sigma2/binquad.hpp"
#include "sigma2/flatten.hpp"

namespace sigma2 {

enum class Stratum { Zero, RankOne, GenericRank2, Tangent, BeyondSigmaTwo };

const char* stratum_name(Stratum s);

// Outcome of the border-rank gate and stratification. Rank is defined for
// everything except BeyondSigmaTwo; on the tangent stratum it equals q, the
// number of essential modes. Concise rank-2 points with exactly two essential
// modes are reported as GenericRank2: for q = 2 the tangent and generic
// classes coincide (any such tensor is simultaneously a sum of two
// decomposable tensors and a point of a tangent space).
struct BorderRankClass {
    Stratum tag;
    int q = 0;  // essential mode count for Tangent

    std::optional<int> rank() const;
    std::optional<int> border_rank() const;
    bool operator==(const BorderRankClass& o) const { return tag == o.tag && q == o.q; }
};

// Reduction of a tensor to its essential 2^q core. Modes of multilinear rank
// one are dropped (their fixed direction recorded); the others are compressed
// onto a 2-column basis of the mode's fiber span. Reconstruction is exact.
struct ConciseCore {
    struct Mode {
        bool dropped;
        std::vector<Rat> factor;  // dropped: fixed direction, last nonzero = 1
        Mat<Rat> basis;           // kept: dims x 2 embedding
        int slot = -1;            // kept: index of the core mode
    };

    Shape original_shape;
    Tensor<Rat> core;  // shape 2^q; order 0 when the input has rank one
    int q = 0;
    std::vector<Mode> modes;

    Tensor<Rat> reconstruct() const;
};

// Fails with an error when some mode has multilinear rank >= 3 or the input
// is zero.
ConciseCore concise_core(const Tensor<Rat>& t);

// Root structure of the rank-one locus of the two-slice pencil along `mode`.
// gcd_form is the primitive gcd of all 2x2 flattening minors of the pencil,
// a binary quadratic in the pencil parameters; its projective roots are the
// rank-one members. For q = 2 every nonzero pencil member is rank one and the
// canonical answer is the slices themselves, i.e. roots (0:1) and (1:0).
struct PencilRootStructure {
    int mode;
    BinQuad gcd_form;
    RootStructure structure;
};

PencilRootStructure slice_pencil_gcd(const Tensor<Rat>& core, int mode);

BorderRankClass classify(const Tensor<Rat>& t);

// Classification together with the concise core it was derived from, for
// callers that keep working with the tensor (decomposition, flattening
// bounds). The core is populated whenever the tensor passes the gate and is
// nonzero of order >= 2.
struct Analysis {
    BorderRankClass cls;
    std::optional<ConciseCore> core;
};

Analysis analyze(const Tensor<Rat>& t);

// The type of a point of sigma_2: minimal number of coordinate subspaces
// through a tangency point whose span contains it. Equals the rank on the
// tangent stratum. For GenericRank2 the value 2 is a convention and
// on_tangent_locus is false (the invariant is defined on tangent points).
struct TypeEta {
    int value;
    bool on_tangent_locus;
};

TypeEta type_eta(const Tensor<Rat>& t);
TypeEta type_eta_of(const BorderRankClass& cls);

}  // namespace sigma2

#endif
