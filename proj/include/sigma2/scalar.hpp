#ifndef SIGMA2_SCALAR_HPP
#define SIGMA2_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sigma2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violations that indicate a bug rather than bad input.
struct InternalError : Error {
    using Error::Error;
};

// Exact rational number. Always canonical: denominator > 0, gcd(num, den) = 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q);

    static Rat parse(std::string_view s);  // "p/q" or "p"

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat inv() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    // max(|num|, den); used by the elimination pivot rule.
    mpz_class height() const;

    std::string str() const;

private:
    mpq_class v_;
};

// Writes n = s^2 * delta with delta squarefree (sign kept in delta). n != 0.
mpz_class squarefree_decompose(const mpz_class& n, mpz_class& sqrt_part);

// Element a + b*sqrt(delta) of a quadratic extension of Q. A plain rational
// carries delta = 0 (and b = 0); such values combine with any context.
// Two genuine extension elements interoperate only when their deltas match.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rat& r) : a_(r) {}
    QuadExt(long n) : a_(Rat(n)) {}
    QuadExt(const Rat& a, const Rat& b, const mpz_class& delta);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const mpz_class& delta() const { return delta_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, delta_); }
    Rat norm() const;  // a^2 - b^2 * delta
    QuadExt inv() const;
    QuadExt operator-() const { return QuadExt(-a_, -b_, delta_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const;

private:
    Rat a_, b_;
    mpz_class delta_ = 0;
};

// Common context of two values; throws on a genuine mismatch.
mpz_class join_delta(const mpz_class& d1, const mpz_class& d2);

}  // namespace sigma2

#endif
