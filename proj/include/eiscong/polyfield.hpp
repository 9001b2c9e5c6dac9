#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eiscong/arith.hpp"

namespace eiscong {

// Polynomial over Z in the single variable t; coefficients indexed by power,
// normalized so the top coefficient is nonzero (empty vector = zero).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly variable();

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Int(0);
    }
    const Int& leading() const;

    Int eval(const Int& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly pow(unsigned long e) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
};

// Polynomial over Q; same layout.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly constant(Rat c);
    static QPoly variable();
    static QPoly from_int(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;

    // Index of the lowest nonzero coefficient (inf for zero).
    Val vt() const;
    Rat eval(const Rat& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rat& a) const;
    QPoly monic() const;
    // Euclidean division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    // Monic gcd by the Euclidean algorithm (degrees here are tiny).
    static QPoly gcd(QPoly a, QPoly b);
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

// Element of Q(t), kept reduced with a monic denominator; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(Rat(1))) {}
    RatFunc(QPoly num, QPoly den);
    explicit RatFunc(const IntPoly& p);
    explicit RatFunc(const QPoly& p);
    explicit RatFunc(const Rat& c);
    static RatFunc variable();

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // t-adic valuation: vt(num) - vt(den); inf for the zero function.
    Val vt() const;

    // Exact value at an integer point; throws PoleError at a denominator zero.
    Rat eval(const Int& x) const;

    // h = t^d * q with q(0) != 0; returns (d, q(0)).  Undefined for h = 0.
    std::pair<long, Rat> strip_t() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // o must be nonzero
    RatFunc operator-() const;
    RatFunc pow(long e) const;  // negative exponents invert; 0^negative errors
    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // The polynomial itself when the function is a polynomial with integer
    // coefficients; nullopt otherwise.
    std::optional<IntPoly> as_int_poly() const;

private:
    void normalize();
    QPoly num_, den_;
};

}  // namespace eiscong
