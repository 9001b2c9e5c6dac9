#include "eiscong/arith.hpp"

#include <stdexcept>

namespace eiscong {

Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (long d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool is_odd_prime(long n) { return n != 2 && is_prime(n); }

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long q = lo + 1; q <= hi; ++q) {
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

Int pow_ui(long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& mod) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t())) {
        throw std::domain_error("inv_mod: not a unit modulo " + mod.get_str());
    }
    return r;
}

namespace {

void require_odd_prime(long p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("p = " + std::to_string(p) +
                                    " is not an odd prime");
    }
}

// x * p^e with e of either sign.
Rat scale_pow(const Rat& x, long p, long e) {
    if (e >= 0) return x * Rat(pow_ui(p, static_cast<unsigned long>(e)));
    return x / Rat(pow_ui(p, static_cast<unsigned long>(-e)));
}

// Valuation of a nonzero integer, removing the p-part into `reduced`.
long vp_remove(const Int& x, long p, Int& reduced) {
    reduced = x;
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), reduced.get_mpz_t(),
                       static_cast<unsigned long>(p));
        if (r != 0) break;
        reduced = q;
        ++v;
    }
    return v;
}

}  // namespace

Val vp(const Int& x, long p) {
    require_odd_prime(p);
    if (x == 0) return Val::inf();
    Int tmp;
    return Val(vp_remove(x, p, tmp));
}

Val vp(const Rat& x, long p) {
    require_odd_prime(p);
    if (x == 0) return Val::inf();
    Int tmp;
    long vn = vp_remove(x.get_num(), p, tmp);
    long vd = vp_remove(x.get_den(), p, tmp);
    return Val(vn - vd);
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(long p, int W, Int value) : p_(p), W_(W) {
    require_odd_prime(p);
    if (W < 1) throw std::invalid_argument("Residue: W must be >= 1");
    mod_ = pow_ui(p, static_cast<unsigned long>(W));
    value_ = std::move(value);
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), mod_.get_mpz_t());
}

void Residue::check_compatible(const Residue& o) const {
    if (p_ != o.p_ || W_ != o.W_) {
        throw std::invalid_argument("Residue: mixed moduli");
    }
}

Residue Residue::add(const Residue& o) const {
    check_compatible(o);
    return Residue(p_, W_, value_ + o.value_);
}

Residue Residue::sub(const Residue& o) const {
    check_compatible(o);
    return Residue(p_, W_, value_ - o.value_);
}

Residue Residue::mul(const Residue& o) const {
    check_compatible(o);
    return Residue(p_, W_, value_ * o.value_);
}

Residue Residue::pow(const Int& e) const {
    return Residue(p_, W_, pow_mod(value_, e, mod_));
}

Residue Residue::inv() const { return Residue(p_, W_, inv_mod(value_, mod_)); }

Residue teichmuller(const Int& d, long p, int W) {
    require_odd_prime(p);
    if (W < 1) throw std::invalid_argument("teichmuller: W must be >= 1");
    if (mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
        throw std::invalid_argument("teichmuller: argument divisible by p");
    }
    Int mod = pow_ui(p, static_cast<unsigned long>(W));
    Int exp = pow_ui(p, static_cast<unsigned long>(W - 1));
    Int dd;
    mpz_fdiv_r(dd.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    return Residue(p, W, pow_mod(dd, exp, mod));
}

std::pair<Residue, Residue> angle_and_q(const Int& d, long p, int W) {
    if (W < 2) throw std::invalid_argument("angle_and_q: W must be >= 2");
    Residue omega = teichmuller(d, p, W);
    Int mod = omega.modulus();
    Int dd;
    mpz_fdiv_r(dd.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    Int angle = (dd * inv_mod(omega.value(), mod)) % mod;
    // <d> = 1 + p q_d  exactly; the digit shift is exact division.
    Int q = (angle - 1) / p;
    return {Residue(p, W, angle), Residue(p, W - 1, q)};
}

// ---------------------------------------------------------------------------
// ScaledResidue

ScaledResidue ScaledResidue::exact_zero(long p) {
    require_odd_prime(p);
    return ScaledResidue(p, Val::inf(), Val::inf(), 0);
}

ScaledResidue ScaledResidue::capped_zero(long p, long cap) {
    require_odd_prime(p);
    return ScaledResidue(p, Val(cap), Val(cap), 0);
}

ScaledResidue ScaledResidue::from_parts(long p, long val, Int unit, long cap) {
    require_odd_prime(p);
    if (cap <= val) return capped_zero(p, cap);
    Int window = pow_ui(p, static_cast<unsigned long>(cap - val));
    mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), window.get_mpz_t());
    if (unit == 0) return capped_zero(p, cap);
    Int reduced;
    long shift = vp_remove(unit, p, reduced);
    long v = val + shift;
    Int win2 = pow_ui(p, static_cast<unsigned long>(cap - v));
    mpz_fdiv_r(reduced.get_mpz_t(), reduced.get_mpz_t(), win2.get_mpz_t());
    return ScaledResidue(p, Val(v), Val(cap), reduced);
}

ScaledResidue ScaledResidue::from_residue(const Residue& r) {
    return from_parts(r.p(), 0, r.value(), r.W());
}

Val ScaledResidue::val() const {
    if (is_capped_zero()) {
        throw std::logic_error("ScaledResidue: capped zero has no exact valuation");
    }
    return val_;
}

Val ScaledResidue::val_lower_bound() const { return val_; }

long ScaledResidue::rel_digits() const {
    if (!has_unit()) return 0;
    return cap_.finite() - val_.finite();
}

ScaledResidue ScaledResidue::neg() const {
    if (!has_unit()) return *this;
    Int window = pow_ui(p_, static_cast<unsigned long>(rel_digits()));
    return ScaledResidue(p_, val_, cap_, window - unit_);
}

ScaledResidue ScaledResidue::add(const ScaledResidue& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ScaledResidue: mixed primes");
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    Val cap = vmin(cap_, o.cap_);
    Val anchor = vmin(val_, o.val_);
    if (anchor >= cap) return capped_zero(p_, cap.finite());
    long a = anchor.finite(), c = cap.finite();
    Int sum = 0;
    if (has_unit()) sum += unit_ * pow_ui(p_, static_cast<unsigned long>(val_.finite() - a));
    if (o.has_unit()) sum += o.unit_ * pow_ui(p_, static_cast<unsigned long>(o.val_.finite() - a));
    return from_parts(p_, a, std::move(sum), c);
}

ScaledResidue ScaledResidue::mul(const ScaledResidue& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ScaledResidue: mixed primes");
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_);
    if (is_capped_zero() || o.is_capped_zero()) {
        // v(xy) >= lb(x) + lb(y); nothing else survives.
        Val lb = val_ + o.val_;
        return capped_zero(p_, lb.finite());
    }
    long v = val_.finite() + o.val_.finite();
    long rel = std::min(rel_digits(), o.rel_digits());
    return from_parts(p_, v, unit_ * o.unit_, v + rel);
}

ScaledResidue ScaledResidue::mul_exact(const Rat& a) const {
    if (a == 0) return exact_zero(p_);
    if (is_exact_zero()) return *this;
    Val va = vp(a, p_);
    long sa = va.finite();
    if (is_capped_zero()) return capped_zero(p_, cap_.finite() + sa);
    long rel = rel_digits();
    Int window = pow_ui(p_, static_cast<unsigned long>(rel));
    // unit part of a: a * p^(-v_p(a)) mod p^rel
    Rat ua = scale_pow(a, p_, -sa);
    Int num = ua.get_num() % window;
    Int u = (num * inv_mod(ua.get_den(), window)) % window;
    return from_parts(p_, val_.finite() + sa, unit_ * u, cap_.finite() + sa);
}

ScaledResidue ScaledResidue::add_exact(const Rat& a) const {
    if (a == 0) return *this;
    if (is_exact_zero()) {
        throw std::logic_error("ScaledResidue: adding a rational to an exact "
                               "zero has no finite precision; reduce first");
    }
    long c = cap_.finite();
    Val va = vp(a, p_);
    if (va >= Val(c)) return *this;  // a vanishes inside the window
    return add(reduce_scaled(a, p_, static_cast<int>(c - va.finite())));
}

Int ScaledResidue::residue_mod(long e) const {
    if (Val(e) > cap_) throw PrecisionError("ScaledResidue: residue beyond cap");
    Int mod = pow_ui(p_, static_cast<unsigned long>(e));
    if (!has_unit()) return 0;
    if (val_.finite() < 0) {
        throw std::domain_error("ScaledResidue: negative valuation residue");
    }
    if (val_ >= Val(e)) return 0;
    return (unit_ * pow_ui(p_, static_cast<unsigned long>(val_.finite()))) % mod;
}

std::string ScaledResidue::str() const {
    if (is_exact_zero()) return "0";
    if (is_capped_zero()) return "O(" + std::to_string(p_) + "^" + cap_.str() + ")";
    return unit_.get_str() + "*" + std::to_string(p_) + "^" + val_.str() +
           " + O(" + std::to_string(p_) + "^" + cap_.str() + ")";
}

ScaledResidue reduce_scaled(const Rat& x, long p, int W) {
    require_odd_prime(p);
    if (W < 1) throw std::invalid_argument("reduce_scaled: W must be >= 1");
    if (x == 0) return ScaledResidue::exact_zero(p);
    Int num, den;
    long vn = vp_remove(x.get_num(), p, num);
    long vd = vp_remove(x.get_den(), p, den);
    long v = vn - vd;
    Int mod = pow_ui(p, static_cast<unsigned long>(W));
    Int u = (num % mod) * inv_mod(den, mod) % mod;
    if (u < 0) u += mod;
    return ScaledResidue::from_parts(p, v, std::move(u), v + W);
}

Margin margin_of(const ScaledResidue& x) {
    if (x.is_exact_zero()) return Margin::infinite();
    if (x.is_capped_zero()) return Margin::at_least(x.cap().finite());
    return Margin::exact(x.val().finite());
}

Margin margin_against_exact(const ScaledResidue& x, const Rat& y) {
    if (y == 0) return margin_of(x);
    if (x.is_exact_zero()) return Margin::from_val(vp(y, x.p()));
    Val vy = vp(y, x.p());
    if (x.is_capped_zero()) {
        long c = x.cap().finite();
        if (vy < Val(c)) return Margin::exact(vy.finite());
        return Margin::at_least(c);
    }
    long c = x.cap().finite();
    // surrogate for x: unit * p^val, exact below the cap
    Rat xs = scale_pow(Rat(x.unit()), x.p(), x.val().finite());
    Rat d = xs - y;
    Val vd = vp(d, x.p());
    if (vd < Val(c)) return Margin::exact(vd.finite());
    return Margin::at_least(c);
}

}  // namespace eiscong
