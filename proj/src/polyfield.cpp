#include "eiscong/polyfield.hpp"

#include <stdexcept>

namespace eiscong {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(c_); }

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::variable() { return IntPoly({Int(0), Int(1)}); }

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("IntPoly: zero has no leading coefficient");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r = c_;
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly r = constant(1);
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

QPoly QPoly::constant(Rat c) { return QPoly({std::move(c)}); }

QPoly QPoly::variable() { return QPoly({Rat(0), Rat(1)}); }

QPoly QPoly::from_int(const IntPoly& p) {
    std::vector<Rat> r;
    r.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) r.emplace_back(x);
    return QPoly(std::move(r));
}

const Rat& QPoly::leading() const {
    if (is_zero()) throw std::domain_error("QPoly: zero has no leading coefficient");
    return c_.back();
}

Val QPoly::vt() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return Val(static_cast<long>(i));
    }
    return Val::inf();
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& a) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= a;
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    QPoly rem = *this;
    std::vector<Rat> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        long k = rem.degree() - d.degree();
        Rat c = rem.leading() / d.leading();
        q[static_cast<std::size_t>(k)] = c;
        std::vector<Rat> shifted(static_cast<std::size_t>(k), Rat(0));
        for (const auto& x : d.coeffs()) shifted.push_back(x * c);
        rem = rem - QPoly(std::move(shifted));
    }
    return {QPoly(std::move(q)), rem};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
}

RatFunc::RatFunc(const IntPoly& p)
    : num_(QPoly::from_int(p)), den_(QPoly::constant(Rat(1))) {}

RatFunc::RatFunc(const QPoly& p) : num_(p), den_(QPoly::constant(Rat(1))) {}

RatFunc::RatFunc(const Rat& c)
    : num_(c == 0 ? QPoly() : QPoly::constant(c)), den_(QPoly::constant(Rat(1))) {}

RatFunc RatFunc::variable() { return RatFunc(QPoly::variable(), QPoly::constant(Rat(1))); }

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(Rat(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Val RatFunc::vt() const {
    if (num_.is_zero()) return Val::inf();
    return Val(num_.vt().finite() - den_.vt().finite());
}

Rat RatFunc::eval(const Int& x) const {
    Rat xr(x);
    Rat d = den_.eval(xr);
    if (d == 0) {
        throw PoleError("pole at t = " + x.get_str());
    }
    return num_.eval(xr) / d;
}

std::pair<long, Rat> RatFunc::strip_t() const {
    if (is_zero()) throw std::domain_error("strip_t: undefined for the zero function");
    long vn = num_.vt().finite();
    long vd = den_.vt().finite();
    Rat q0 = num_.coeff(static_cast<std::size_t>(vn)) /
             den_.coeff(static_cast<std::size_t>(vd));
    return {vn - vd, q0};
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by the zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc(QPoly::constant(Rat(1)), QPoly::constant(Rat(1))) / this->pow(-e);
    }
    RatFunc r{Rat(1)};
    RatFunc b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::optional<IntPoly> RatFunc::as_int_poly() const {
    if (den_.degree() != 0 || den_.coeff(0) != 1) return std::nullopt;
    std::vector<Int> c;
    c.reserve(num_.coeffs().size());
    for (const auto& x : num_.coeffs()) {
        if (x.get_den() != 1) return std::nullopt;
        c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

}  // namespace eiscong
