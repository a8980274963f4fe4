#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

namespace schemelab {

/**
 * Exact rational number modulo 1, kept reduced with 0 <= num < den.
 *
 * Represents the circle point exp(2*pi*i*num/den); multiplication of
 * roots of unity is angle addition, powers are integer multiples, so all
 * symmetry-group arithmetic stays exact.
 */
class RationalAngle {
public:
    RationalAngle() : num_(0), den_(1) {}

    RationalAngle(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    static RationalAngle zero() { return RationalAngle(); }
    static RationalAngle half() { return RationalAngle(1, 2); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    RationalAngle operator+(const RationalAngle& o) const {
        return RationalAngle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalAngle operator-(const RationalAngle& o) const {
        return RationalAngle(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalAngle operator-() const { return RationalAngle(-num_, den_); }

    /// k-fold multiple (the angle of the k-th power of the root of unity).
    RationalAngle times(std::int64_t k) const { return RationalAngle(num_ * k, den_); }

    bool operator==(const RationalAngle& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalAngle& o) const { return !(*this == o); }
    bool operator<(const RationalAngle& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }

    std::complex<double> to_complex() const {
        if (num_ == 0) return {1.0, 0.0};
        if (2 * num_ == den_) return {-1.0, 0.0};
        double t = 2.0 * 3.14159265358979323846 * static_cast<double>(num_) / static_cast<double>(den_);
        return {std::cos(t), std::sin(t)};
    }

    double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    void normalize() {
        if (den_ < 0) { den_ = -den_; num_ = -num_; }
        num_ %= den_;
        if (num_ < 0) num_ += den_;
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace schemelab
