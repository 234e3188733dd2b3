#include "sigma2/sympoly.hpp"

#include <numeric>

namespace sigma2 {

void HomPoly::add_term(const std::vector<int>& exponents, const Rat& c) {
    if (static_cast<int>(exponents.size()) != n_vars)
        throw Error("exponent tuple length does not match n_vars");
    int sum = 0;
    for (int e : exponents) {
        if (e < 0) throw Error("negative exponent");
        sum += e;
    }
    if (sum != degree) throw Error("exponent tuple does not sum to the degree");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

HomPoly linear_form(const std::vector<Rat>& c) {
    HomPoly f(static_cast<int>(c.size()), 1);
    std::vector<int> e(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        e[i] = 1;
        f.add_term(e, c[i]);
        e[i] = 0;
    }
    return f;
}

HomPoly poly_mul(const HomPoly& a, const HomPoly& b) {
    if (a.n_vars != b.n_vars) throw Error("polynomial variable counts differ");
    HomPoly out(a.n_vars, a.degree + b.degree);
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            std::vector<int> e(ea);
            for (int i = 0; i < a.n_vars; ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

HomPoly poly_pow(const HomPoly& a, int k) {
    if (k < 1) throw Error("poly_pow needs a positive exponent");
    HomPoly out = a;
    for (int i = 1; i < k; ++i) out = poly_mul(out, a);
    return out;
}

HomPoly poly_add(const HomPoly& a, const HomPoly& b) {
    if (a.n_vars != b.n_vars || a.degree != b.degree)
        throw Error("polynomial shapes differ");
    HomPoly out = a;
    for (const auto& [e, c] : b.coeffs) out.add_term(e, c);
    return out;
}

HomPoly poly_scale(const Rat& c, const HomPoly& a) {
    HomPoly out(a.n_vars, a.degree);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : a.coeffs) out.add_term(e, c * x);
    return out;
}

namespace {

Rat multinomial(int d, const std::vector<int>& e) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), d);
    mpz_class den = 1;
    for (int x : e) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), x);
        den *= f;
    }
    return Rat(num, den);
}

}  // namespace

Tensor<Rat> poly_to_tensor(const HomPoly& f) {
    if (f.is_zero()) throw Error("zero polynomial has no tensor");
    int n = f.n_vars, d = f.degree;
    Tensor<Rat> t{Shape(std::vector<int>(d, n))};

    std::vector<int> idx(d, 0), expo(n, 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        std::fill(expo.begin(), expo.end(), 0);
        for (int m = 0; m < d; ++m) ++expo[idx[m]];
        auto it = f.coeffs.find(expo);
        if (it != f.coeffs.end()) t[flat] = it->second / multinomial(d, expo);
        for (int m = d - 1; m >= 0; --m) {
            if (++idx[m] < n) break;
            idx[m] = 0;
        }
    }
    return t;
}

int symmetric_rank_br2(const HomPoly& f) {
    if (f.is_zero()) throw Error("zero polynomial");
    Tensor<Rat> t = poly_to_tensor(f);
    if (f.degree == 1) return 1;
    if (max_flattening_rank(t, 2) > 2) throw Error("not of border rank <= 2");

    std::vector<int> cols;
    int k = rank_capped(mode_flattening(t, 0), 2, &cols);
    if (k == 0) throw InternalError("zero tensor from a nonzero polynomial");
    if (k == 1) return 1;
    if (k > 2) throw InternalError("essential variable count above two past the gate");

    // one shared compression: the essential subspace of a symmetric tensor is
    // the same in every mode
    BasisCompression bc = basis_and_left_inverse(mode_flattening(t, 0), cols);
    Tensor<Rat> core = t;
    for (int m = 0; m < f.degree; ++m) core = mode_apply(core, m, bc.left, 2);
    {
        Tensor<Rat> back = core;
        for (int m = 0; m < f.degree; ++m) back = mode_apply(back, m, bc.basis.e, bc.basis.rows);
        if (!(back == t)) throw InternalError("symmetric compression failed to reconstruct");
    }

    PencilRootStructure prs = slice_pencil_gcd(core, 0);
    switch (prs.structure.kind) {
        case RootStructure::Kind::TwoDistinct: return 2;
        case RootStructure::Kind::DoubleRoot: return f.degree;
        case RootStructure::Kind::DegenerateLinear:
            throw InternalError("degenerate pencil gcd on a symmetric core");
    }
    throw InternalError("unreachable");
}

SymRankReport comon_check(const HomPoly& f) {
    if (f.is_zero()) throw Error("zero polynomial");
    Tensor<Rat> t = poly_to_tensor(f);
    BorderRankClass cls = classify(t);
    if (cls.tag == Stratum::BeyondSigmaTwo) throw Error("not of border rank <= 2");
    int tensor_rank = *cls.rank();
    int symmetric_rank = symmetric_rank_br2(f);
    return {tensor_rank, symmetric_rank, tensor_rank == symmetric_rank, cls.tag};
}

}  // namespace sigma2
