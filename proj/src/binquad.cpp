#include "sigma2/binquad.hpp"

namespace sigma2 {

ProjRoot ProjRoot::of(const QuadExt& l, const QuadExt& m) {
    if (!m.is_zero()) return {l / m, QuadExt(1)};
    if (l.is_zero()) throw InternalError("projective point (0:0)");
    return {QuadExt(1), QuadExt(0)};
}

QuadExt BinQuad::eval(const QuadExt& l, const QuadExt& m) const {
    return QuadExt(a) * l * l + QuadExt(b) * l * m + QuadExt(c) * m * m;
}

namespace {

mpz_class gcd3(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

}  // namespace

BinQuad BinQuad::primitive() const {
    if (is_zero()) return *this;
    mpz_class d = a.den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), b.den().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.den().get_mpz_t());
    Rat scale(d, mpz_class(1));
    mpz_class ia = (a * scale).num(), ib = (b * scale).num(), ic = (c * scale).num();
    mpz_class g = gcd3(abs(ia), abs(ib), abs(ic));
    ia /= g;
    ib /= g;
    ic /= g;
    mpz_class lead = sgn(ia) != 0 ? ia : (sgn(ib) != 0 ? ib : ic);
    if (sgn(lead) < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {Rat(ia, mpz_class(1)), Rat(ib, mpz_class(1)), Rat(ic, mpz_class(1))};
}

bool BinQuad::proportional_to(const BinQuad& o) const {
    return (a * o.b == b * o.a) && (a * o.c == c * o.a) && (b * o.c == c * o.b);
}

std::string BinQuad::str() const {
    return "[" + a.str() + ", " + b.str() + ", " + c.str() + "]";
}

RootStructure binary_quadratic_roots(const Rat& a, const Rat& b, const Rat& c) {
    if (a.is_zero() && b.is_zero() && c.is_zero()) throw Error("zero form");

    if (a.is_zero()) {
        if (b.is_zero()) {
            // c*m^2: double root at infinity
            return {RootStructure::Kind::DoubleRoot, ProjRoot::of(QuadExt(1), QuadExt(0)), {}, 0};
        }
        // m * (b*l + c*m): roots (-c/b : 1) and (1 : 0)
        ProjRoot finite = ProjRoot::of(QuadExt(-c / b), QuadExt(1));
        ProjRoot inf = ProjRoot::of(QuadExt(1), QuadExt(0));
        return {RootStructure::Kind::TwoDistinct, finite, inf, 0};
    }

    Rat disc = b * b - Rat(4) * a * c;
    Rat center = -b / (Rat(2) * a);
    if (disc.is_zero()) {
        return {RootStructure::Kind::DoubleRoot, ProjRoot::of(QuadExt(center), QuadExt(1)), {}, 0};
    }

    // sqrt(p/q) = sqrt(p*q)/q = s*sqrt(delta)/q with p*q = s^2 * delta
    mpz_class s;
    mpz_class delta = squarefree_decompose(disc.num() * disc.den(), s);
    Rat radical(s, disc.den());  // sqrt(disc) = radical * sqrt(delta)
    Rat half(1, 2);

    if (delta == 1) {
        Rat rt1 = center - radical * half / a;
        Rat rt2 = center + radical * half / a;
        if (rt2 < rt1) std::swap(rt1, rt2);
        return {RootStructure::Kind::TwoDistinct, ProjRoot::of(QuadExt(rt1), QuadExt(1)),
                ProjRoot::of(QuadExt(rt2), QuadExt(1)), 0};
    }

    Rat coef = radical * half / a;
    if (coef.sign() < 0) coef = -coef;
    QuadExt plus(center, coef, delta);
    QuadExt minus(center, -coef, delta);
    return {RootStructure::Kind::TwoDistinct, ProjRoot::of(plus, QuadExt(1)),
            ProjRoot::of(minus, QuadExt(1)), delta};
}

namespace {

struct Linear {
    Rat p, q;  // p*l + q*m
};

Linear normalize_linear(const Rat& p, const Rat& q) {
    BinQuad carrier{Rat(0), p, q};  // reuse the primitive scaling on (p, q)
    BinQuad n = carrier.primitive();
    return {n.b, n.c};
}

// Root of p*l + q*m as a projective point: (-q : p).
ProjRoot linear_root(const Linear& f) {
    return ProjRoot::of(QuadExt(-f.q), QuadExt(f.p));
}

bool vanishes_at(const BinQuad& f, const ProjRoot& r) {
    return f.eval(r.lambda, r.mu).is_zero();
}

// Rational roots of a nonzero quadratic, as linear factors over Q.
std::vector<Linear> rational_linear_factors(const BinQuad& f) {
    RootStructure rs = binary_quadratic_roots(f.a, f.b, f.c);
    std::vector<Linear> out;
    auto add = [&](const ProjRoot& r) {
        if (r.lambda.is_rational() && r.mu.is_rational())
            out.push_back(normalize_linear(r.mu.rational_part(), -r.lambda.rational_part()));
    };
    add(rs.r1);
    if (rs.kind == RootStructure::Kind::TwoDistinct) add(rs.r2);
    return out;
}

}  // namespace

BinForm form_gcd(const BinForm& f, const BinForm& g) {
    if (f.degree == 0 || g.degree == 0) return BinForm::constant();

    if (f.degree == 1 && g.degree == 1) {
        if (f.lin_l * g.lin_m == f.lin_m * g.lin_l) {
            Linear n = normalize_linear(f.lin_l, f.lin_m);
            return BinForm::linear(n.p, n.q);
        }
        return BinForm::constant();
    }

    if (f.degree == 1 || g.degree == 1) {
        const BinForm& lin = f.degree == 1 ? f : g;
        const BinForm& quad = f.degree == 1 ? g : f;
        Linear l{lin.lin_l, lin.lin_m};
        if (vanishes_at(quad.quad, linear_root(l))) {
            Linear n = normalize_linear(l.p, l.q);
            return BinForm::linear(n.p, n.q);
        }
        return BinForm::constant();
    }

    if (f.quad.proportional_to(g.quad)) return BinForm::quadratic(f.quad.primitive());

    // Non-proportional quadratics share at most one root, and a shared root of
    // two rational forms must itself be rational (irrational roots come in
    // conjugate pairs, and sharing a pair forces proportionality).
    for (const Linear& l : rational_linear_factors(f.quad)) {
        if (vanishes_at(g.quad, linear_root(l))) return BinForm::linear(l.p, l.q);
    }
    return BinForm::constant();
}

std::optional<BinForm> family_gcd(const std::vector<BinQuad>& forms) {
    std::optional<BinForm> acc;
    for (const BinQuad& f : forms) {
        if (f.is_zero()) continue;
        BinForm cur = BinForm::quadratic(f.primitive());
        acc = acc ? form_gcd(*acc, cur) : cur;
        if (acc->degree == 0) break;
    }
    return acc;
}

}  // namespace sigma2
