#ifndef SIGMA2_BINQUAD_HPP
#define SIGMA2_BINQUAD_HPP

#include <optional>
#include <vector>

#include "sigma2/scalar.hpp"

namespace sigma2 {

// Projective point (lambda : mu), scaled so the last nonzero coordinate is 1.
struct ProjRoot {
    QuadExt lambda, mu;

    static ProjRoot of(const QuadExt& l, const QuadExt& m);
    bool operator==(const ProjRoot& o) const { return lambda == o.lambda && mu == o.mu; }
    std::string str() const { return "(" + lambda.str() + " : " + mu.str() + ")"; }
};

struct RootStructure {
    enum class Kind { TwoDistinct, DoubleRoot, DegenerateLinear };
    Kind kind;
    ProjRoot r1;
    ProjRoot r2;        // only for TwoDistinct
    mpz_class delta;    // 0 when all roots are rational
};

// Binary quadratic a*l^2 + b*l*m + c*m^2.
struct BinQuad {
    Rat a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    QuadExt eval(const QuadExt& l, const QuadExt& m) const;
    Rat discriminant() const { return b * b - Rat(4) * a * c; }

    // Scale to coprime integer coefficients, first nonzero positive.
    BinQuad primitive() const;
    bool proportional_to(const BinQuad& o) const;
    std::string str() const;
};

// Root structure of a nonzero binary quadratic over Q, adjoining sqrt(delta)
// when the discriminant is not a rational square. All-zero input throws.
// The degenerate c*m^2 (a = b = 0) counts as a double root at (1 : 0), the
// mirror of a*l^2 having its double root at (0 : 1).
RootStructure binary_quadratic_roots(const Rat& a, const Rat& b, const Rat& c);

// A binary form of degree <= 2, as produced by gcds of quadratics.
struct BinForm {
    int degree = 0;          // 0, 1 or 2
    BinQuad quad;            // degree 2 payload
    Rat lin_l, lin_m;        // degree 1 payload: lin_l*l + lin_m*m

    static BinForm quadratic(const BinQuad& q) { return {2, q, {}, {}}; }
    static BinForm linear(const Rat& p, const Rat& q) { return {1, {}, p, q}; }
    static BinForm constant() { return {0, {}, {}, {}}; }
};

// Gcd of two nonzero binary forms of degree <= 2 over Q[l,m].
BinForm form_gcd(const BinForm& f, const BinForm& g);

// Gcd of a family of quadratics, ignoring identically-zero members.
// Returns nullopt when every member is zero.
std::optional<BinForm> family_gcd(const std::vector<BinQuad>& forms);

}  // namespace sigma2

#endif
