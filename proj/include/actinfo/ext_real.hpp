// Extended real line: finite reals plus +inf, -inf, and an explicit
// "undefined" element. Log-based information measures take values here, so
// arithmetic must be total: Finite + PosInf = PosInf, PosInf + NegInf =
// Undefined, and Undefined absorbs every operation.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace actinfo {

class ExtReal {
  public:
    enum class Kind : std::uint8_t { Finite, PosInf, NegInf, Undefined };

    // Default-constructed value is Finite(0).
    constexpr ExtReal() noexcept : kind_(Kind::Finite), value_(0.0) {}

    static constexpr ExtReal finite(double v) noexcept { return ExtReal(Kind::Finite, v); }
    static constexpr ExtReal pos_inf() noexcept { return ExtReal(Kind::PosInf, 0.0); }
    static constexpr ExtReal neg_inf() noexcept { return ExtReal(Kind::NegInf, 0.0); }
    static constexpr ExtReal undefined() noexcept { return ExtReal(Kind::Undefined, 0.0); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    constexpr bool is_undefined() const noexcept { return kind_ == Kind::Undefined; }

    // The finite payload; throws for the non-finite kinds.
    double value() const {
        if (kind_ != Kind::Finite)
            throw std::logic_error("ExtReal::value() called on a non-finite value");
        return value_;
    }

    constexpr double value_or(double fallback) const noexcept {
        return kind_ == Kind::Finite ? value_ : fallback;
    }

    friend constexpr ExtReal operator-(ExtReal x) noexcept {
        switch (x.kind_) {
            case Kind::Finite: return finite(-x.value_);
            case Kind::PosInf: return neg_inf();
            case Kind::NegInf: return pos_inf();
            default: return undefined();
        }
    }

    friend constexpr ExtReal operator+(ExtReal a, ExtReal b) noexcept {
        if (a.kind_ == Kind::Undefined || b.kind_ == Kind::Undefined) return undefined();
        if (a.kind_ == Kind::Finite && b.kind_ == Kind::Finite) return finite(a.value_ + b.value_);
        if (a.kind_ == Kind::Finite) return b;
        if (b.kind_ == Kind::Finite) return a;
        // two infinities
        return a.kind_ == b.kind_ ? a : undefined();
    }

    friend constexpr ExtReal operator-(ExtReal a, ExtReal b) noexcept { return a + (-b); }

    // Scale by a strictly positive factor (used for log-base conversion);
    // infinities and Undefined pass through unchanged.
    constexpr ExtReal scaled(double positive_factor) const noexcept {
        return kind_ == Kind::Finite ? finite(value_ * positive_factor) : *this;
    }

    // Exact comparison; Undefined compares equal to Undefined.
    friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend constexpr bool operator!=(ExtReal a, ExtReal b) noexcept { return !(a == b); }

  private:
    constexpr ExtReal(Kind k, double v) noexcept : kind_(k), value_(v) {}

    Kind kind_;
    double value_;
};

// Same kind, and finite payloads within abs_tol of each other.
inline bool approx_equal(ExtReal a, ExtReal b, double abs_tol) noexcept {
    if (a.kind() != b.kind()) return false;
    if (!a.is_finite()) return true;
    return std::fabs(a.value_or(0.0) - b.value_or(0.0)) <= abs_tol;
}

// Sign in {-1, 0, +1}; PosInf -> +1, NegInf -> -1. Throws on Undefined.
inline int sign(ExtReal x) {
    switch (x.kind()) {
        case ExtReal::Kind::PosInf: return 1;
        case ExtReal::Kind::NegInf: return -1;
        case ExtReal::Kind::Finite: {
            double v = x.value_or(0.0);
            return (v > 0.0) - (v < 0.0);
        }
        default: throw std::logic_error("sign of undefined ExtReal");
    }
}

}  // namespace actinfo
