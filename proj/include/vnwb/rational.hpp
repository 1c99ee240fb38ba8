#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace vnwb {

using Rat = mpq_class;
using Int = mpz_class;

/// All library errors derive from this; the CLI maps the subclasses to
/// distinct exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or input (arity mismatch, malformed file, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// An enumeration-based operation ran out of budget.  The message names the
/// stage that exhausted; `achieved` optionally carries a partial result
/// description for certificates.
struct BudgetError : Error {
    std::string stage;
    std::string achieved;
    BudgetError(std::string st, const std::string& what, std::string got = {})
        : Error(what), stage(std::move(st)), achieved(std::move(got)) {}
};

inline Rat pow2(long e) {
    Rat r;
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), Rat(1).get_num_mpz_t(), static_cast<unsigned long>(e));
    else {
        r = 1;
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Naive height of a rational in lowest terms: max(|numerator|, denominator).
/// This is the "coefficient height" used by the canonical term enumeration.
inline Int rat_height(const Rat& x) {
    Int n = abs(x.get_num());
    const Int& d = x.get_den();
    return n > d ? n : d;
}

/// Dyadic enclosure of sqrt(r) for r >= 0: returns (lo, hi) with
/// lo <= sqrt(r) <= hi and hi - lo <= 2^-k.  Both endpoints have
/// denominator a power of two.
inline std::pair<Rat, Rat> sqrt_enclosure(const Rat& r, int k) {
    if (r < 0) throw ConfigError("sqrt_enclosure: negative input");
    if (r == 0) return {Rat(0), Rat(0)};
    // scale by 4^(k+1), integer sqrt, round both ways
    int kk = k + 1;
    Int num = r.get_num(), den = r.get_den();
    Int scaled = (num << (2 * kk)) / den;  // floor(r * 4^kk)
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    // s <= sqrt(r*4^kk) < s+2  (the +2 absorbs the floor in `scaled`)
    Rat lo(s), hi(s + 2);
    Rat scale = pow2(-kk);
    lo *= scale;
    hi *= scale;
    return {lo, hi};
}

/// Dyadic q with |sqrt(r) - q| < 2^-k.
inline Rat sqrt_dyadic(const Rat& r, int k) { return sqrt_enclosure(r, k + 1).first; }

/// Gaussian rational re + im*i.  Exact arithmetic throughout; equality is
/// decidable.
struct Scalar {
    Rat re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Scalar conj() const { return {re, -im}; }
    /// |z|^2, an exact nonnegative rational.
    Rat norm_sq() const { return re * re + im * im; }

    Scalar operator-() const { return {-re, -im}; }
    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Lexicographic (re, im) order; used only to fix canonical orderings.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return a.im < b.im;
    }
};

inline Scalar scalar_i() { return {Rat(0), Rat(1)}; }

/// Rational upper bound on |z|, exact when z is real or purely imaginary.
inline Rat scalar_abs_upper(const Scalar& z) {
    if (z.im == 0) return rat_abs(z.re);
    if (z.re == 0) return rat_abs(z.im);
    return sqrt_enclosure(z.norm_sq(), 30).second;
}

inline Int scalar_height(const Scalar& z) {
    Int a = rat_height(z.re), b = rat_height(z.im);
    // height of 0 as a component is 1 (0/1); a zero scalar never appears as
    // a stored coefficient, so the max below is >= 1.
    return a > b ? a : b;
}

inline std::string rat_str(const Rat& x) {
    return x.get_str();
}

/// Canonical printed form "(a/b)" or "(a/b+c/d i)" / "(a/b-c/d i)".
inline std::string scalar_str(const Scalar& z) {
    std::string s = "(";
    s += z.re.get_num().get_str() + "/" + z.re.get_den().get_str();
    if (z.im != 0) {
        Rat ia = rat_abs(z.im);
        s += (z.im < 0 ? "-" : "+");
        s += ia.get_num().get_str() + "/" + ia.get_den().get_str() + " i";
    }
    s += ")";
    return s;
}

}  // namespace vnwb
