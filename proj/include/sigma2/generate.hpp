#ifndef SIGMA2_GENERATE_HPP
#define SIGMA2_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma2/decompose.hpp"

namespace sigma2 {

// splitmix64: tiny, deterministic across platforms
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform in [lo, hi]
    long range(long lo, long hi);
    Rat rat(int height);                      // num in [-h, h], den in [1, h]
    Rat nonzero_rat(int height);
    std::vector<Rat> vec(int len, int height);           // any entries
    std::vector<Rat> nonzero_vec(int len, int height);   // not all zero
    std::vector<int> permutation(int n);
};

// Random invertible square matrix with entries of bounded height.
Mat<Rat> random_invertible(Rng& rng, int n, int height);

enum class GenKind { Rank1, Rank2, Tangent };

GenKind gen_kind_of(const std::string& name);
const char* gen_kind_name(GenKind k);

struct GenSpec {
    GenKind kind;
    Shape shape;
    std::optional<std::vector<int>> tangent_modes;  // Tangent only; default: all modes of dim >= 2
    std::uint64_t seed = 0;
    int height = 9;
};

// Ground truth recorded next to a generated tensor. Tangent instances also
// carry the frame they were built from.
struct Sidecar {
    std::string kind;
    Shape shape;
    std::uint64_t seed;
    std::string stratum;  // what a correct classifier reports
    int rank;
    int eta;
    std::vector<int> tangent_modes;            // empty unless kind == tangent
    VecPerMode<Rat> base_point;                // tangent: w_1, ..., w_d
    VecPerMode<Rat> directions;                // tangent: v_i for i in E, in E order
    Rat alpha;                                 // tangent: coefficient of the base point
    std::vector<Rat> beta;                     // tangent: direction coefficients, E order
};

struct GeneratedInstance {
    Tensor<Rat> tensor;
    Sidecar sidecar;
};

GeneratedInstance generate(const GenSpec& spec);

}  // namespace sigma2

#endif
