#ifndef SIGMA2_SYMPOLY_HPP
#define SIGMA2_SYMPOLY_HPP

#include <map>
#include <vector>

#include "sigma2/classify.hpp"

namespace sigma2 {

// Homogeneous polynomial in n_vars variables; exponent tuples sum to degree.
struct HomPoly {
    int n_vars = 1;
    int degree = 1;
    std::map<std::vector<int>, Rat> coeffs;  // nonzero coefficients only

    HomPoly() = default;
    HomPoly(int n, int d) : n_vars(n), degree(d) {
        if (n < 1 || d < 1) throw Error("polynomial needs n_vars >= 1 and degree >= 1");
    }

    void add_term(const std::vector<int>& exponents, const Rat& c);
    bool is_zero() const { return coeffs.empty(); }
};

HomPoly linear_form(const std::vector<Rat>& c);
HomPoly poly_mul(const HomPoly& a, const HomPoly& b);
HomPoly poly_pow(const HomPoly& a, int k);
HomPoly poly_add(const HomPoly& a, const HomPoly& b);
HomPoly poly_scale(const Rat& c, const HomPoly& a);

// Symmetric order-d tensor of f: entry (i_1,...,i_d) is the coefficient of
// x_{i_1}...x_{i_d} divided by its multinomial, so the entries of T sum back
// to f along symmetric index classes.
Tensor<Rat> poly_to_tensor(const HomPoly& f);

// Symmetric (Waring) rank for inputs of border rank at most 2: reduce to the
// essential <= 2 variables, then read the answer off the binary form's root
// structure: a pure d-th power has rank 1, a binary form with two distinct
// essential directions rank 2, and the double-root shape rank d.
int symmetric_rank_br2(const HomPoly& f);

struct SymRankReport {
    int tensor_rank;
    int symmetric_rank;
    bool equal;
    Stratum stratum;
};

// Tensor rank through the general pipeline and symmetric rank through the
// binary-form path; the two must agree for every input passing the gate.
SymRankReport comon_check(const HomPoly& f);

}  // namespace sigma2

#endif
