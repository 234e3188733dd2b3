#include "sigma2/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sigma2 {

Rat::Rat(long n, long d) {
    if (d == 0) throw Error("division by zero: rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw Error("division by zero: rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
}

Rat::Rat(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
    auto bad = [&] { return Error("malformed rational '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    std::string text(s);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpz_class(text), mpz_class(1));
        }
        std::string p = text.substr(0, slash);
        std::string q = text.substr(slash + 1);
        if (p.empty() || q.empty()) throw bad();
        mpz_class den(q);
        if (sgn(den) == 0) throw Error("zero denominator in '" + text + "'");
        return Rat(mpz_class(p), den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

Rat Rat::inv() const {
    if (is_zero()) throw Error("division by zero: inverse of 0");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rat::height() const {
    mpz_class n = abs(num());
    mpz_class d = den();
    return n > d ? n : d;
}

std::string Rat::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

namespace {

// Pollard-Brent with GMP arithmetic; inputs here are tiny by big-number
// standards (discriminants of pencil forms), so no cycle-batching tricks.
mpz_class pollard_brent(const mpz_class& n, unsigned long c0) {
    mpz_class x = 2, y = 2, d = 1, c = c0;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
        x = f(x);
        y = f(f(y));
        mpz_class diff = abs(x - y);
        if (sgn(diff) == 0) return 0;  // cycle without factor, retry with new c
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? mpz_class(0) : d;
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& primes);

void split_composite(const mpz_class& n, std::vector<mpz_class>& primes) {
    for (unsigned long c = 1;; ++c) {
        mpz_class d = pollard_brent(n, c);
        if (sgn(d) != 0) {
            factor_into(d, primes);
            factor_into(n / d, primes);
            return;
        }
        if (c > 64) throw InternalError("factoring failed (rho exhausted)");
    }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        primes.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_into(r, primes);
        factor_into(r, primes);
        return;
    }
    split_composite(n, primes);
}

}  // namespace

mpz_class squarefree_decompose(const mpz_class& n, mpz_class& sqrt_part) {
    if (sgn(n) == 0) throw InternalError("squarefree_decompose(0)");
    mpz_class m = abs(n);
    mpz_class s = 1, delta = sgn(n) < 0 ? -1 : 1;

    // strip small primes first; rho only sees the hard cofactor
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (unsigned long p : small) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) delta *= p;
    }
    if (m > 1) {
        std::vector<mpz_class> primes;
        factor_into(m, primes);
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            size_t e = j - i;
            for (size_t k = 0; k + 1 < e; k += 2) s *= primes[i];
            if (e % 2) delta *= primes[i];
            i = j;
        }
    }
    sqrt_part = s;
    return delta;
}

mpz_class join_delta(const mpz_class& d1, const mpz_class& d2) {
    if (sgn(d1) == 0) return d2;
    if (sgn(d2) == 0 || d1 == d2) return d1;
    throw Error("mismatched quadratic extension contexts: sqrt(" + d1.get_str() +
                ") vs sqrt(" + d2.get_str() + ")");
}

QuadExt::QuadExt(const Rat& a, const Rat& b, const mpz_class& delta) : a_(a), b_(b), delta_(delta) {
    if (b_.is_zero()) {
        delta_ = 0;
    } else if (sgn(delta_) == 0 || delta_ == 1) {
        throw Error("quadratic extension requires delta squarefree, not 0 or 1");
    }
}

Rat QuadExt::norm() const {
    return a_ * a_ - b_ * b_ * Rat(delta_, mpz_class(1));
}

QuadExt QuadExt::inv() const {
    if (is_zero()) throw Error("division by zero: inverse of 0");
    // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because delta is never a rational square.
    Rat n = norm();
    if (n.is_zero()) throw InternalError("zero norm for nonzero quadratic element");
    Rat ni = n.inv();
    return QuadExt(a_ * ni, -b_ * ni, delta_);
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    mpz_class d = join_delta(x.delta_, y.delta_);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    mpz_class d = join_delta(x.delta_, y.delta_);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    mpz_class d = join_delta(x.delta_, y.delta_);
    Rat dd(d, mpz_class(1));
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inv();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    if (!x.b_.is_zero() && x.delta_ != y.delta_) return false;
    return true;
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + (" + b_.str() + ")*sqrt(" + delta_.get_str() + ")";
}

}  // namespace sigma2
