#include "sigma2/classify.hpp"

namespace sigma2 {

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Zero: return "zero";
        case Stratum::RankOne: return "rank1";
        case Stratum::GenericRank2: return "rank2";
        case Stratum::Tangent: return "tangent";
        case Stratum::BeyondSigmaTwo: return "beyond_sigma2";
    }
    return "?";
}

std::optional<int> BorderRankClass::rank() const {
    switch (tag) {
        case Stratum::Zero: return 0;
        case Stratum::RankOne: return 1;
        case Stratum::GenericRank2: return 2;
        case Stratum::Tangent: return q;
        case Stratum::BeyondSigmaTwo: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> BorderRankClass::border_rank() const {
    switch (tag) {
        case Stratum::Zero: return 0;
        case Stratum::RankOne: return 1;
        case Stratum::GenericRank2:
        case Stratum::Tangent: return 2;
        case Stratum::BeyondSigmaTwo: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Order-1 tensors have no bipartition; present the vector as a one-column
// matrix so the same column-span machinery applies.
Mat<Rat> mode_flattening_or_vector(const Tensor<Rat>& t, int mode) {
    if (t.order() == 1) return Mat<Rat>(t.dim(0), 1, t.entries());
    return mode_flattening(t, mode);
}

// Shared worker: nullopt signals a mode of multilinear rank >= 3.
std::optional<ConciseCore> try_concise(const Tensor<Rat>& t) {
    if (t.is_zero()) throw Error("zero tensor has no concise core");

    ConciseCore cc;
    cc.original_shape = t.shape();
    cc.modes.resize(t.order());
    Tensor<Rat> cur = t;
    int dropped = 0;

    for (int i = 0; i < t.order(); ++i) {
        int pos = i - dropped;
        int dim = t.dim(i);
        ConciseCore::Mode& info = cc.modes[i];

        Mat<Rat> f = mode_flattening_or_vector(cur, pos);
        std::vector<int> cols;
        int r = rank_capped(f, 2, &cols);
        if (r > 2) return std::nullopt;
        if (r == 0) throw InternalError("zero slice span in a nonzero tensor");

        if (r == 1) {
            std::vector<Rat> fiber = f.col(cols[0]);
            int k0 = -1;
            for (int k = dim - 1; k >= 0; --k)
                if (!fiber[k].is_zero()) {
                    k0 = k;
                    break;
                }
            Rat scale = fiber[k0].inv();
            info.dropped = true;
            info.factor.resize(dim);
            for (int k = 0; k < dim; ++k) info.factor[k] = fiber[k] * scale;
            cur = slice(cur, pos, k0);
            ++dropped;
            continue;
        }

        info.dropped = false;
        info.slot = cc.q++;
        if (dim == 2) {
            // already minimal; keep the native basis so a concise input
            // passes through untouched
            info.basis = Mat<Rat>::identity(2);
            continue;
        }
        BasisCompression bc = basis_and_left_inverse(f, cols);
        info.basis = bc.basis;
        cur = mode_apply(cur, pos, bc.left, 2);
    }

    cc.core = cur;
    return cc;
}

}  // namespace

ConciseCore concise_core(const Tensor<Rat>& t) {
    auto cc = try_concise(t);
    if (!cc) throw Error("not in sigma_2: a mode has multilinear rank >= 3");
    return *cc;
}

Tensor<Rat> ConciseCore::reconstruct() const {
    Tensor<Rat> v = core;
    for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
        const Mode& m = modes[i];
        if (m.dropped) {
            v = insert_mode(v, i, m.factor);
        } else {
            v = mode_apply(v, i, m.basis.e, m.basis.rows);
        }
    }
    return v;
}

PencilRootStructure slice_pencil_gcd(const Tensor<Rat>& core, int mode) {
    int q = core.order();
    if (q < 2) throw Error("slice pencil needs a core of order >= 2");
    for (int m = 0; m < q; ++m)
        if (core.dim(m) != 2) throw Error("slice pencil expects a 2 x ... x 2 core");
    if (mode < 0 || mode >= q) throw Error("slice pencil: mode out of range");

    Tensor<Rat> m0 = slice(core, mode, 0);
    Tensor<Rat> m1 = slice(core, mode, 1);

    if (q == 2) {
        // Every nonzero member of a pencil of vectors is already decomposable;
        // take the slices themselves as the two rank-one members.
        Mat<Rat> stack(2, 2, {m0[0], m0[1], m1[0], m1[1]});
        if (rank_capped(stack, 2) < 2)
            throw Error("pencil entirely rank <= 1 (input core is not concise)");
        BinQuad form{Rat(0), Rat(1), Rat(0)};
        return {mode, form, binary_quadratic_roots(form.a, form.b, form.c)};
    }

    // Each 2x2 minor of each flattening of l*M0 + m*M1 is a binary quadratic
    // in (l, m); the rank-one locus is the common zero set, i.e. the roots of
    // the family gcd.
    std::vector<BinQuad> minors;
    for (const Bipartition& p : all_bipartitions(q - 1)) {
        Mat<Rat> a = flattening(m0, p);
        Mat<Rat> b = flattening(m1, p);
        for (int r1 = 0; r1 < a.rows; ++r1)
            for (int r2 = r1 + 1; r2 < a.rows; ++r2)
                for (int c1 = 0; c1 < a.cols; ++c1)
                    for (int c2 = c1 + 1; c2 < a.cols; ++c2) {
                        const Rat &p11 = a.at(r1, c1), &p12 = a.at(r1, c2);
                        const Rat &p21 = a.at(r2, c1), &p22 = a.at(r2, c2);
                        const Rat &q11 = b.at(r1, c1), &q12 = b.at(r1, c2);
                        const Rat &q21 = b.at(r2, c1), &q22 = b.at(r2, c2);
                        BinQuad m{p11 * p22 - p12 * p21,
                                  p11 * q22 + q11 * p22 - p12 * q21 - q12 * p21,
                                  q11 * q22 - q12 * q21};
                        if (!m.is_zero()) minors.push_back(std::move(m));
                    }
    }

    auto g = family_gcd(minors);
    if (!g) throw Error("pencil entirely rank <= 1 (input core is not concise)");
    if (g->degree == 2)
        return {mode, g->quad, binary_quadratic_roots(g->quad.a, g->quad.b, g->quad.c)};
    if (g->degree == 1) {
        RootStructure rs{RootStructure::Kind::DegenerateLinear,
                         ProjRoot::of(QuadExt(-g->lin_m), QuadExt(g->lin_l)), {}, 0};
        return {mode, BinQuad{}, rs};
    }
    throw InternalError("pencil minors are coprime on a border-rank-2 core");
}

Analysis analyze(const Tensor<Rat>& t) {
    if (t.is_zero()) return {{Stratum::Zero, 0}, std::nullopt};
    if (t.order() <= 1) return {{Stratum::RankOne, 0}, std::nullopt};

    auto cc = try_concise(t);
    if (!cc) return {{Stratum::BeyondSigmaTwo, 0}, std::nullopt};
    int q = cc->q;
    if (q == 0) return {{Stratum::RankOne, 0}, std::move(cc)};
    if (q == 1) throw InternalError("concision produced a single essential mode");

    // All multilinear ranks are <= 2 here, but membership in sigma_2 needs
    // every grouped flattening to stay at rank <= 2 as well; flattening ranks
    // pass unchanged through concision, so test the core.
    if (max_flattening_rank(cc->core, 2) > 2) return {{Stratum::BeyondSigmaTwo, 0}, std::nullopt};

    if (q == 2) return {{Stratum::GenericRank2, 0}, std::move(cc)};

    PencilRootStructure prs = slice_pencil_gcd(cc->core, 0);
    switch (prs.structure.kind) {
        case RootStructure::Kind::TwoDistinct:
            return {{Stratum::GenericRank2, 0}, std::move(cc)};
        case RootStructure::Kind::DoubleRoot:
            return {{Stratum::Tangent, q}, std::move(cc)};
        case RootStructure::Kind::DegenerateLinear:
            throw InternalError("pencil gcd degenerated to a linear form");
    }
    throw InternalError("unreachable");
}

BorderRankClass classify(const Tensor<Rat>& t) {
    return analyze(t).cls;
}

TypeEta type_eta_of(const BorderRankClass& cls) {
    switch (cls.tag) {
        case Stratum::RankOne: return {1, true};
        case Stratum::Tangent: return {cls.q, true};
        case Stratum::GenericRank2: return {2, false};
        case Stratum::Zero: throw Error("type undefined for the zero tensor");
        case Stratum::BeyondSigmaTwo: throw Error("type undefined outside sigma_2");
    }
    throw InternalError("unreachable");
}

TypeEta type_eta(const Tensor<Rat>& t) {
    return type_eta_of(classify(t));
}

}  // namespace sigma2
