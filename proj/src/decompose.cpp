#include "sigma2/decompose.hpp"

#include <algorithm>

namespace sigma2 {

void RankOneTerm::normalize() {
    for (auto& v : vectors) {
        int last = -1;
        for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
            if (!v[k].is_zero()) {
                last = k;
                break;
            }
        if (last < 0) throw InternalError("zero vector in a rank-one term");
        QuadExt s = v[last];
        if (s == QuadExt(1)) continue;
        for (auto& x : v) x = x / s;
        coeff = coeff * s;
    }
}

std::string RankOneTerm::str() const {
    std::string out = coeff.str();
    for (const auto& v : vectors) {
        out += " (x) [";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out += ", ";
            out += v[k].str();
        }
        out += "]";
    }
    return out;
}

std::string Decomposition::canonical_key() const {
    std::vector<std::string> keys;
    keys.reserve(terms.size());
    for (const auto& t : terms) keys.push_back(t.str());
    std::sort(keys.begin(), keys.end());
    std::string out = "rank=" + std::to_string(claimed_rank) + ";delta=" + delta.get_str();
    for (const auto& k : keys) out += ";" + k;
    return out;
}

namespace {

// Fibers through the first nonzero entry recover the factors of a rank-one
// tensor: (x)_i fiber_i = t[m*]^(d-1) * t when rk(t) = 1.
template <class K>
std::optional<std::pair<K, VecPerMode<K>>> try_factor_rank_one(const Tensor<K>& t) {
    std::size_t pivot = t.size();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!t[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == t.size()) return std::nullopt;

    int d = t.order();
    std::vector<int> pidx(d);
    {
        std::size_t rest = pivot;
        for (int m = d - 1; m >= 0; --m) {
            pidx[m] = static_cast<int>(rest % t.dim(m));
            rest /= t.dim(m);
        }
    }
    VecPerMode<K> vs(d);
    std::vector<int> idx = pidx;
    for (int m = 0; m < d; ++m) {
        vs[m].resize(t.dim(m));
        for (int k = 0; k < t.dim(m); ++k) {
            idx[m] = k;
            vs[m][k] = t.at(idx);
        }
        idx[m] = pidx[m];
    }
    K coeff(1);
    K pv = t.at(pidx);
    for (int m = 1; m < d; ++m) coeff = coeff / pv;

    // exactness check doubles as the rank-one test
    Tensor<K> rebuilt{t.shape()};
    if (d == 0) {
        rebuilt[0] = pv;
    } else {
        accumulate_outer(rebuilt, coeff, vs);
    }
    if (!(rebuilt == t)) return std::nullopt;
    if (d == 0) return std::make_pair(pv, VecPerMode<K>{});
    return std::make_pair(coeff, vs);
}

RankOneTerm to_term(const std::pair<QuadExt, VecPerMode<QuadExt>>& f) {
    RankOneTerm term{f.first, f.second};
    term.normalize();
    return term;
}

VecPerMode<QuadExt> lift_vectors(const VecPerMode<Rat>& vs) {
    VecPerMode<QuadExt> out(vs.size());
    for (std::size_t m = 0; m < vs.size(); ++m) {
        out[m].resize(vs[m].size());
        for (std::size_t k = 0; k < vs[m].size(); ++k) out[m][k] = QuadExt(vs[m][k]);
    }
    return out;
}

}  // namespace

RankOneTerm factor_rank_one(const Tensor<Rat>& t) {
    auto f = try_factor_rank_one(to_quadext(t));
    if (!f) throw Error("tensor does not have rank one");
    if (t.order() == 0) throw Error("factor_rank_one needs at least one mode");
    return to_term(*f);
}

Decomposition decompose_rank_two(const Tensor<Rat>& core, const PencilRootStructure& roots) {
    if (roots.structure.kind != RootStructure::Kind::TwoDistinct)
        throw InternalError("rank-two split needs two distinct pencil roots");
    int q = core.order();
    int mode = roots.mode;

    Tensor<QuadExt> m0 = to_quadext(slice(core, mode, 0));
    Tensor<QuadExt> m1 = to_quadext(slice(core, mode, 1));
    const ProjRoot& r1 = roots.structure.r1;
    const ProjRoot& r2 = roots.structure.r2;

    auto member = [&](const ProjRoot& r) {
        return linear_combine<QuadExt>({{r.lambda, m0}, {r.mu, m1}});
    };
    auto f1 = try_factor_rank_one(member(r1));
    auto f2 = try_factor_rank_one(member(r2));
    if (!f1 || !f2) throw InternalError("pencil root member is not rank one");

    // core = a (x) S1 + b (x) S2 in the sliced mode, with
    // (a, b) = ((mu2, -l2), (-mu1, l1)) / (l1 mu2 - l2 mu1).
    QuadExt det = r1.lambda * r2.mu - r2.lambda * r1.mu;
    if (det.is_zero()) throw InternalError("pencil roots are not projectively distinct");
    QuadExt di = det.inv();
    std::vector<QuadExt> a{r2.mu * di, -(r2.lambda * di)};
    std::vector<QuadExt> b{-(r1.mu * di), r1.lambda * di};

    Decomposition dec;
    dec.claimed_rank = 2;
    dec.delta = roots.structure.delta;
    for (int which = 0; which < 2; ++which) {
        auto& f = which == 0 ? *f1 : *f2;
        VecPerMode<QuadExt> vs;
        vs.reserve(q);
        int src = 0;
        for (int m = 0; m < q; ++m) {
            if (m == mode)
                vs.push_back(which == 0 ? a : b);
            else
                vs.push_back(f.second[src++]);
        }
        dec.terms.push_back(to_term({f.first, std::move(vs)}));
    }
    return dec;
}

namespace {

std::vector<Rat> normalize_last_one(const std::vector<Rat>& v) {
    int last = -1;
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
        if (!v[k].is_zero()) {
            last = k;
            break;
        }
    if (last < 0) throw InternalError("zero direction vector");
    Rat s = v[last].inv();
    std::vector<Rat> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * s;
    return out;
}

// First standard basis vector independent of w.
std::vector<Rat> complement_of(const std::vector<Rat>& w) {
    if (!w[1].is_zero()) return {Rat(1), Rat(0)};
    return {Rat(0), Rat(1)};
}

// Base-point directions of a tangent core, one per mode skipping `mode`,
// read off the (unique) rank-one member of the slice pencil.
VecPerMode<Rat> base_from_double_root(const Tensor<Rat>& core, int mode) {
    PencilRootStructure prs = slice_pencil_gcd(core, mode);
    if (prs.structure.kind != RootStructure::Kind::DoubleRoot)
        throw Error("core is not a tangent point (pencil has no double root)");
    const ProjRoot& r = prs.structure.r1;
    if (!r.lambda.is_rational() || !r.mu.is_rational())
        throw InternalError("double root of a rational quadratic must be rational");
    Tensor<Rat> member = linear_combine<Rat>({{r.lambda.rational_part(), slice(core, mode, 0)},
                                              {r.mu.rational_part(), slice(core, mode, 1)}});
    auto f = try_factor_rank_one(member);
    if (!f) throw InternalError("double-root pencil member is not rank one");
    VecPerMode<Rat> out;
    for (auto& v : f->second) out.push_back(normalize_last_one(v));
    return out;
}

}  // namespace

Tensor<Rat> TangentFrame::expand() const {
    std::vector<int> dims(q, 2);
    Tensor<Rat> out{Shape(dims)};
    accumulate_outer(out, alpha, w);
    for (int i = 0; i < q; ++i) {
        VecPerMode<Rat> dir = w;
        dir[i] = v[i];
        accumulate_outer(out, beta[i], dir);
    }
    return out;
}

TangentFrame tangent_frame(const Tensor<Rat>& core) {
    int q = core.order();
    for (int m = 0; m < q; ++m)
        if (core.dim(m) != 2) throw Error("tangent frame expects a 2 x ... x 2 core");
    if (q < 2) throw Error("tangent frame needs a core of order >= 2");

    TangentFrame frame;
    frame.q = q;
    frame.w.resize(q);

    if (q == 2) {
        // The witness point is not unique here; pick the one adapted to e0:
        // w2 orthogonal to adj(C) e0 makes the u1 (x) u2 coefficient vanish.
        const Rat& c10 = core[2];
        const Rat& c11 = core[3];
        std::vector<Rat> y{c11, -c10};  // adj(C) * e0
        if (is_zero_vec(y)) throw Error("core is not concise (rank below two)");
        frame.w[0] = {Rat(1), Rat(0)};
        frame.w[1] = normalize_last_one({y[1], -y[0]});
    } else {
        VecPerMode<Rat> from0 = base_from_double_root(core, 0);
        VecPerMode<Rat> from1 = base_from_double_root(core, 1);
        frame.w[0] = from1[0];
        for (int j = 1; j < q; ++j) frame.w[j] = from0[j - 1];
        for (int j = 2; j < q; ++j)
            if (frame.w[j] != from1[j - 1])
                throw InternalError("inconsistent base point across slice modes");
    }

    frame.v.resize(q);
    for (int i = 0; i < q; ++i) frame.v[i] = complement_of(frame.w[i]);

    // Express the core in the per-mode bases (w_i, v_i); the only coefficients
    // a tangent vector can carry are the base monomial and one step in each
    // direction.
    Tensor<Rat> c = core;
    for (int i = 0; i < q; ++i) {
        Mat<Rat> basis(2, 2,
                       {frame.w[i][0], frame.v[i][0], frame.w[i][1], frame.v[i][1]});
        Mat<Rat> binv = inverse(basis);
        c = mode_apply(c, i, binv.e, 2);
    }
    frame.beta.resize(q);
    for (std::size_t f = 0; f < c.size(); ++f) {
        if (c[f].is_zero()) continue;
        int weight = 0, dir = -1;
        for (int m = 0; m < q; ++m)
            if (f & (static_cast<std::size_t>(1) << (q - 1 - m))) {
                ++weight;
                dir = m;
            }
        if (weight == 0) {
            frame.alpha = c[f];
        } else if (weight == 1) {
            frame.beta[dir] = c[f];
        } else if (q == 2) {
            throw Error("core is not a tangent point");
        } else {
            throw InternalError("tangent core has coefficients of weight >= 2");
        }
    }
    for (int i = 0; i < q; ++i)
        if (frame.beta[i].is_zero())
            throw InternalError("vanishing tangent coefficient contradicts conciseness");
    return frame;
}

Decomposition decompose_tangent(const TangentFrame& frame, const TangentParams& params) {
    int q = frame.q;
    if (static_cast<int>(params.t.size()) != q - 1)
        throw Error("expected " + std::to_string(q - 1) + " tangent parameters, got " +
                    std::to_string(params.t.size()));
    for (const Rat& t : params.t)
        if (t.is_zero()) throw Error("tangent parameters must be nonzero");

    // Terms c_i * (w_1 (x) .. (w_i + t_i v_i) .. (x) w_q) with c_i t_i = beta_i
    // and sum c_i = alpha; the last point is forced by the earlier ones.
    std::vector<Rat> c(q), t(q);
    Rat csum(0);
    for (int i = 0; i + 1 < q; ++i) {
        t[i] = params.t[i];
        c[i] = frame.beta[i] / t[i];
        csum += c[i];
    }
    c[q - 1] = frame.alpha - csum;
    if (c[q - 1].is_zero())
        throw Error("degenerate parameter choice (last coefficient vanishes); "
                    "retry with a different first parameter, e.g. t1 + 1");
    t[q - 1] = frame.beta[q - 1] / c[q - 1];

    Decomposition dec;
    dec.claimed_rank = q;
    dec.delta = 0;
    for (int i = 0; i < q; ++i) {
        VecPerMode<Rat> vs = frame.w;
        vs[i] = {frame.w[i][0] + t[i] * frame.v[i][0], frame.w[i][1] + t[i] * frame.v[i][1]};
        dec.terms.push_back(to_term({QuadExt(c[i]), lift_vectors(vs)}));
    }
    return dec;
}

Decomposition lift(const Decomposition& dec, const ConciseCore& cc) {
    Decomposition out;
    out.claimed_rank = dec.claimed_rank;
    out.delta = dec.delta;
    for (const RankOneTerm& term : dec.terms) {
        VecPerMode<QuadExt> vs;
        vs.reserve(cc.modes.size());
        for (const auto& m : cc.modes) {
            if (m.dropped) {
                std::vector<QuadExt> v(m.factor.size());
                for (std::size_t k = 0; k < v.size(); ++k) v[k] = QuadExt(m.factor[k]);
                vs.push_back(std::move(v));
            } else {
                const auto& u = term.vectors[m.slot];
                std::vector<QuadExt> v(m.basis.rows, QuadExt(0));
                for (int r = 0; r < m.basis.rows; ++r)
                    for (int c = 0; c < 2; ++c)
                        v[r] += QuadExt(m.basis.at(r, c)) * u[c];
                vs.push_back(std::move(v));
            }
        }
        out.terms.push_back(to_term({term.coeff, std::move(vs)}));
    }
    return out;
}

Tensor<QuadExt> reconstruct(const Decomposition& dec, const Shape& shape) {
    Tensor<QuadExt> acc{shape};
    for (const RankOneTerm& term : dec.terms) {
        if (term.vectors.size() != static_cast<std::size_t>(shape.order()))
            throw Error("decomposition term order does not match tensor shape");
        accumulate_outer(acc, term.coeff, term.vectors);
    }
    return acc;
}

bool verify(const Decomposition& dec, const Tensor<Rat>& t) {
    for (const RankOneTerm& term : dec.terms) {
        if (term.vectors.size() != static_cast<std::size_t>(t.order())) return false;
        for (int m = 0; m < t.order(); ++m)
            if (term.vectors[m].size() != static_cast<std::size_t>(t.dim(m))) return false;
    }
    if (sgn(dec.delta) == 0) {
        // rational decompositions reconstruct without extension arithmetic
        Tensor<Rat> acc{t.shape()};
        for (const RankOneTerm& term : dec.terms) {
            VecPerMode<Rat> vs(term.vectors.size());
            for (std::size_t m = 0; m < vs.size(); ++m) {
                vs[m].reserve(term.vectors[m].size());
                for (const QuadExt& x : term.vectors[m]) vs[m].push_back(x.rational_part());
            }
            accumulate_outer(acc, term.coeff.rational_part(), vs);
        }
        return acc == t;
    }
    return reconstruct(dec, t.shape()) == to_quadext(t);
}

Decomposition decompose(const Analysis& analysis, const Tensor<Rat>& t,
                        const std::optional<TangentParams>& params) {
    const BorderRankClass& cls = analysis.cls;

    if (params && cls.tag != Stratum::Tangent)
        throw Error("explicit parameters apply only to tangent-stratum inputs");

    Decomposition dec;
    switch (cls.tag) {
        case Stratum::Zero:
            dec = Decomposition{0, {}, 0};
            break;
        case Stratum::BeyondSigmaTwo:
            throw Error("not in sigma_2(X)");
        case Stratum::RankOne:
            dec = Decomposition{1, {factor_rank_one(t)}, 0};
            break;
        case Stratum::GenericRank2: {
            const ConciseCore& cc = *analysis.core;
            PencilRootStructure prs = slice_pencil_gcd(cc.core, 0);
            dec = lift(decompose_rank_two(cc.core, prs), cc);
            break;
        }
        case Stratum::Tangent: {
            const ConciseCore& cc = *analysis.core;
            TangentFrame frame = tangent_frame(cc.core);
            if (params) {
                dec = lift(decompose_tangent(frame, *params), cc);
            } else {
                // deterministic schedule: all ones, then bump the first
                // parameter until the forced coefficient is nonzero
                TangentParams p{std::vector<Rat>(frame.q - 1, Rat(1))};
                Decomposition core_dec;
                for (long bump = 1;; ++bump) {
                    try {
                        core_dec = decompose_tangent(frame, p);
                        break;
                    } catch (const Error&) {
                        if (bump > frame.q + 1)
                            throw InternalError("parameter schedule exhausted");
                        p.t[0] = Rat(bump + 1);
                    }
                }
                dec = lift(core_dec, cc);
            }
            break;
        }
    }

    if (!verify(dec, t)) throw InternalError("decomposition failed exact reconstruction");
    return dec;
}

Decomposition decompose(const Tensor<Rat>& t, const std::optional<TangentParams>& params) {
    return decompose(analyze(t), t, params);
}

}  // namespace sigma2
