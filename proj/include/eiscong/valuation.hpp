#pragma once

#include <limits>
#include <string>

namespace eiscong {

// An integer valuation extended by +infinity (v(0) = inf).  Infinity absorbs
// addition and compares greater than every finite value.
class Val {
public:
    constexpr Val() : v_(0) {}
    constexpr Val(long v) : v_(v) {}

    static constexpr Val inf() {
        Val x;
        x.v_ = kInf;
        return x;
    }

    constexpr bool is_inf() const { return v_ == kInf; }

    // Finite value; callers must check is_inf() first.
    constexpr long finite() const { return v_; }

    friend constexpr Val operator+(Val a, Val b) {
        if (a.is_inf() || b.is_inf()) return inf();
        return Val(a.v_ + b.v_);
    }
    friend constexpr Val operator+(Val a, long b) {
        return a.is_inf() ? inf() : Val(a.v_ + b);
    }
    friend constexpr Val operator-(Val a, long b) {
        return a.is_inf() ? inf() : Val(a.v_ - b);
    }

    friend constexpr bool operator==(Val a, Val b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Val a, Val b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Val a, Val b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Val a, Val b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Val a, Val b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Val a, Val b) { return a.v_ >= b.v_; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr long kInf = std::numeric_limits<long>::max();
    long v_;
};

inline Val vmin(Val a, Val b) { return a < b ? a : b; }

}  // namespace eiscong
