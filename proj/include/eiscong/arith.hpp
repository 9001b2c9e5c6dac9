#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "eiscong/errors.hpp"
#include "eiscong/valuation.hpp"

namespace eiscong {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a num/den pair (gcd 1, positive denominator).
Rat make_rat(Int num, Int den);

// "num/den" with the "/den" part omitted for integers (GMP's own convention).
std::string rat_str(const Rat& x);

// Deterministic primality by trial division; meant for desk-scale inputs.
bool is_prime(long n);
bool is_odd_prime(long n);

// All primes q with lo < q <= hi, ascending.
std::vector<long> primes_in(long lo, long hi);

Int pow_ui(long base, unsigned long exp);

// a^e mod m for e >= 0.
Int pow_mod(const Int& base, const Int& exp, const Int& mod);

// Inverse mod m by extended Euclid; throws std::domain_error for non-units.
Int inv_mod(const Int& a, const Int& mod);

// p-adic valuation of an integer / rational; p must be an odd prime.
Val vp(const Int& x, long p);
Val vp(const Rat& x, long p);

// ---------------------------------------------------------------------------
// Residue: an element of Z/p^W for an odd prime p and W >= 1.

class Residue {
public:
    Residue(long p, int W, Int value);

    long p() const { return p_; }
    int W() const { return W_; }
    const Int& modulus() const { return mod_; }
    const Int& value() const { return value_; }

    Residue add(const Residue& o) const;
    Residue sub(const Residue& o) const;
    Residue mul(const Residue& o) const;
    Residue pow(const Int& e) const;
    Residue inv() const;  // std::domain_error if p | value

    bool operator==(const Residue& o) const {
        return p_ == o.p_ && W_ == o.W_ && value_ == o.value_;
    }

private:
    void check_compatible(const Residue& o) const;
    long p_;
    int W_;
    Int mod_;
    Int value_;
};

// Teichmuller lift: the (p-1)-th root of unity congruent to d mod p,
// computed as d^(p^(W-1)) mod p^W.  Requires p coprime to d.
Residue teichmuller(const Int& d, long p, int W);

// (<d> mod p^W, q_d mod p^(W-1)) with <d> = d/omega(d) = 1 + p*q_d.
// Requires W >= 2 so the q_d part has at least one digit.
std::pair<Residue, Residue> angle_and_q(const Int& d, long p, int W);

// ---------------------------------------------------------------------------
// ScaledResidue: a p-adic quantity of possibly negative valuation, kept as
// (valuation, unit residue) together with an absolute knowledge cap:
//
//      x == unit * p^val  (mod p^cap)
//
// Three states:
//   exact zero:  val = inf, unit = 0, cap = inf
//   unit form:   val = v_p(x) exactly, p does not divide unit,
//                0 < unit < p^(cap - val)
//   capped zero: unit = 0 with finite cap; all that is known is v_p(x) >= cap
//
// Relative precision W = cap - val for the unit form.

class ScaledResidue {
public:
    static ScaledResidue exact_zero(long p);
    static ScaledResidue capped_zero(long p, long cap);
    // Normalizes: strips p-powers out of `unit` into `val`; a residue that
    // vanishes entirely collapses to capped_zero(cap).
    static ScaledResidue from_parts(long p, long val, Int unit, long cap);
    // Anchors a plain residue at valuation 0 (cap = W).
    static ScaledResidue from_residue(const Residue& r);

    long p() const { return p_; }
    bool is_exact_zero() const { return unit_ == 0 && cap_.is_inf(); }
    bool is_capped_zero() const { return unit_ == 0 && !cap_.is_inf(); }
    bool has_unit() const { return unit_ != 0; }

    // Exact valuation (inf for the exact zero).  Callers must check
    // has_unit() / is_exact_zero(); the capped zero has no exact valuation.
    Val val() const;
    // Largest e such that x is known modulo p^e.
    Val cap() const { return cap_; }
    // Lower bound on v_p(x), defined in every state.
    Val val_lower_bound() const;
    const Int& unit() const { return unit_; }
    // Relative digits of the unit form.
    long rel_digits() const;

    ScaledResidue neg() const;
    ScaledResidue add(const ScaledResidue& o) const;
    ScaledResidue sub(const ScaledResidue& o) const { return add(o.neg()); }
    ScaledResidue mul(const ScaledResidue& o) const;
    // Multiply / add an exact rational (exact operands lose no precision).
    ScaledResidue mul_exact(const Rat& a) const;
    ScaledResidue add_exact(const Rat& a) const;

    // Value mod p^e (requires cap >= e and val >= 0).
    Int residue_mod(long e) const;

    bool operator==(const ScaledResidue& o) const {
        return p_ == o.p_ && val_ == o.val_ && cap_ == o.cap_ && unit_ == o.unit_;
    }

    std::string str() const;

private:
    ScaledResidue(long p, Val val, Val cap, Int unit)
        : p_(p), val_(val), cap_(cap), unit_(std::move(unit)) {}
    long p_;
    Val val_;   // unit form: exact valuation; capped zero: equals cap
    Val cap_;
    Int unit_;
};

// Normal form of an exact rational: val = v_p(x) and unit = x * p^(-val)
// mod p^W.  The zero maps to (val = inf, unit = 0).
ScaledResidue reduce_scaled(const Rat& x, long p, int W);

// ---------------------------------------------------------------------------
// Margin: the p-adic valuation of a difference, as established by a
// computation of bounded precision.  Either an exact value, a lower bound
// ("at least v"), or infinite (the difference is exactly zero).

struct Margin {
    enum class Kind { exact, at_least, infinite };
    Kind kind = Kind::exact;
    long v = 0;

    static Margin exact(long v) { return {Kind::exact, v}; }
    static Margin at_least(long v) { return {Kind::at_least, v}; }
    static Margin infinite() { return {Kind::infinite, 0}; }
    static Margin from_val(Val x) {
        return x.is_inf() ? infinite() : exact(x.finite());
    }

    bool passes(long N) const { return kind == Kind::infinite || v >= N; }
    // Lower bound as a Val (inf for the infinite margin).
    Val lower_bound() const {
        return kind == Kind::infinite ? Val::inf() : Val(v);
    }
    // Truncate anything established above `cap` to "at least cap".
    Margin truncated(long cap) const {
        if (kind == Kind::infinite) return *this;
        if (v > cap) return at_least(cap);
        return *this;
    }
    std::string str() const {
        switch (kind) {
            case Kind::infinite: return "inf";
            case Kind::at_least: return ">=" + std::to_string(v);
            default: return std::to_string(v);
        }
    }
    bool operator==(const Margin& o) const { return kind == o.kind && v == o.v; }
};

// Margin of x - y for a bounded-precision x and an exact rational y.
Margin margin_against_exact(const ScaledResidue& x, const Rat& y);
// Margin of x (i.e. of x - 0).
Margin margin_of(const ScaledResidue& x);

}  // namespace eiscong
