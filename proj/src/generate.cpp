#include "sigma2/generate.hpp"

#include <algorithm>

namespace sigma2 {

std::uint64_t Rng::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::rat(int height) {
    long num = range(-height, height);
    long den = range(1, height);
    return Rat(num, den);
}

Rat Rng::nonzero_rat(int height) {
    for (;;) {
        Rat r = rat(height);
        if (!r.is_zero()) return r;
    }
}

std::vector<Rat> Rng::vec(int len, int height) {
    std::vector<Rat> v(len);
    for (auto& x : v) x = rat(height);
    return v;
}

std::vector<Rat> Rng::nonzero_vec(int len, int height) {
    for (;;) {
        std::vector<Rat> v = vec(len, height);
        if (!is_zero_vec(v)) return v;
    }
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[static_cast<int>(next() % static_cast<std::uint64_t>(i + 1))]);
    return p;
}

Mat<Rat> random_invertible(Rng& rng, int n, int height) {
    for (;;) {
        Mat<Rat> m(n, n);
        for (auto& x : m.e) x = rng.rat(height);
        if (is_invertible(m)) return m;
    }
}

GenKind gen_kind_of(const std::string& name) {
    if (name == "rank1") return GenKind::Rank1;
    if (name == "rank2") return GenKind::Rank2;
    if (name == "tangent") return GenKind::Tangent;
    throw Error("unknown generator kind '" + name + "' (rank1, rank2, tangent)");
}

const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Rank1: return "rank1";
        case GenKind::Rank2: return "rank2";
        case GenKind::Tangent: return "tangent";
    }
    return "?";
}

namespace {

bool parallel(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

GeneratedInstance gen_rank1(const GenSpec& spec, Rng& rng) {
    VecPerMode<Rat> w;
    for (int m = 0; m < spec.shape.order(); ++m)
        w.push_back(rng.nonzero_vec(spec.shape.dim(m), spec.height));
    Rat scale = rng.nonzero_rat(spec.height);
    Tensor<Rat> t{spec.shape};
    accumulate_outer(t, scale, w);
    return {std::move(t),
            {"rank1", spec.shape, spec.seed, "rank1", 1, 1, {}}};
}

GeneratedInstance gen_rank2(const GenSpec& spec, Rng& rng) {
    int wide = 0;
    for (int d : spec.shape.dims) wide += d >= 2;
    if (wide < 2)
        throw Error("rank2 generation needs at least two modes of dimension >= 2");

    VecPerMode<Rat> u, v;
    for (int m = 0; m < spec.shape.order(); ++m) {
        int dim = spec.shape.dim(m);
        u.push_back(rng.nonzero_vec(dim, spec.height));
        if (dim >= 2) {
            for (;;) {
                std::vector<Rat> cand = rng.nonzero_vec(dim, spec.height);
                if (!parallel(u.back(), cand)) {
                    v.push_back(std::move(cand));
                    break;
                }
            }
        } else {
            v.push_back(u.back());
        }
    }
    Tensor<Rat> t{spec.shape};
    accumulate_outer(t, rng.nonzero_rat(spec.height), u);
    accumulate_outer(t, rng.nonzero_rat(spec.height), v);
    return {std::move(t),
            {"rank2", spec.shape, spec.seed, "rank2", 2, 2, {}}};
}

GeneratedInstance gen_tangent(const GenSpec& spec, Rng& rng) {
    std::vector<int> modes;
    if (spec.tangent_modes) {
        modes = *spec.tangent_modes;
        std::sort(modes.begin(), modes.end());
        if (std::adjacent_find(modes.begin(), modes.end()) != modes.end())
            throw Error("tangent mode set repeats a mode");
        for (int m : modes) {
            if (m < 0 || m >= spec.shape.order()) throw Error("tangent mode out of range");
            if (spec.shape.dim(m) < 2)
                throw Error("tangent modes need dimension >= 2");
        }
    } else {
        for (int m = 0; m < spec.shape.order(); ++m)
            if (spec.shape.dim(m) >= 2) modes.push_back(m);
    }
    if (modes.size() < 2) throw Error("tangent generation needs |E| >= 2");

    VecPerMode<Rat> w;
    for (int m = 0; m < spec.shape.order(); ++m)
        w.push_back(rng.nonzero_vec(spec.shape.dim(m), spec.height));

    Tensor<Rat> t{spec.shape};
    Rat alpha = rng.rat(spec.height);  // zero allowed
    accumulate_outer(t, alpha, w);
    VecPerMode<Rat> dirs;
    std::vector<Rat> betas;
    for (int m : modes) {
        std::vector<Rat> dir;
        for (;;) {
            dir = rng.nonzero_vec(spec.shape.dim(m), spec.height);
            if (!parallel(w[m], dir)) break;
        }
        Rat beta = rng.nonzero_rat(spec.height);
        VecPerMode<Rat> vs = w;
        vs[m] = dir;
        accumulate_outer(t, beta, vs);
        dirs.push_back(std::move(dir));
        betas.push_back(beta);
    }

    int k = static_cast<int>(modes.size());
    // tangent vectors perturbed in exactly two modes land in the rank-2
    // stratum: for k = 2 the tangent and generic classes coincide
    std::string stratum = k >= 3 ? "tangent" : "rank2";
    Sidecar side{"tangent", spec.shape, spec.seed, stratum, k, k, modes,
                 w, dirs, alpha, betas};
    return {std::move(t), std::move(side)};
}

}  // namespace

GeneratedInstance generate(const GenSpec& spec) {
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ull + 0x6a09e667f3bcc909ull);
    if (spec.height < 1) throw Error("height must be >= 1");
    switch (spec.kind) {
        case GenKind::Rank1: return gen_rank1(spec, rng);
        case GenKind::Rank2: return gen_rank2(spec, rng);
        case GenKind::Tangent: return gen_tangent(spec, rng);
    }
    throw InternalError("unreachable");
}

}  // namespace sigma2
