#pragma once

#include "bdc/rat.hpp"

namespace bdc {

// v + a*ea + b*eb + ab*ea*eb with ea^2 = eb^2 = 0.
class Dual2 {
public:
    Rat v, a, b, ab;

    Dual2() = default;
    Dual2(int x) : v(x) {}
    Dual2(const Rat& x) : v(x) {}
    Dual2(Rat v_, Rat a_, Rat b_ = Rat(0), Rat ab_ = Rat(0))
        : v(std::move(v_)), a(std::move(a_)), b(std::move(b_)), ab(std::move(ab_)) {}

    bool is_zero() const { return v.is_zero() && a.is_zero() && b.is_zero() && ab.is_zero(); }

    Dual2& operator+=(const Dual2& o);
    Dual2& operator-=(const Dual2& o);
    Dual2& operator*=(const Dual2& o) { return *this = *this * o; }
    Dual2& operator/=(const Dual2& o) { return *this = *this / o; }

    friend Dual2 operator+(Dual2 x, const Dual2& y) { return x += y; }
    friend Dual2 operator-(Dual2 x, const Dual2& y) { return x -= y; }
    friend Dual2 operator*(const Dual2& x, const Dual2& y);
    // Requires y.v != 0.
    friend Dual2 operator/(const Dual2& x, const Dual2& y);
    friend Dual2 operator-(const Dual2& x) { return Dual2(-x.v, -x.a, -x.b, -x.ab); }

    friend bool operator==(const Dual2& x, const Dual2& y) {
        return x.v == y.v && x.a == y.a && x.b == y.b && x.ab == y.ab;
    }
    friend bool operator!=(const Dual2& x, const Dual2& y) { return !(x == y); }
};

Dual2 inverse(const Dual2& y);
std::ostream& operator<<(std::ostream& os, const Dual2& d);

}  // namespace bdc

namespace Eigen {
template <>
struct NumTraits<bdc::Dual2> : GenericNumTraits<bdc::Dual2> {
    using Real = bdc::Dual2;
    using NonInteger = bdc::Dual2;
    using Literal = bdc::Dual2;
    using Nested = bdc::Dual2;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 80,
        MulCost = 200
    };
    static bdc::Dual2 epsilon() { return bdc::Dual2(0); }
    static bdc::Dual2 dummy_precision() { return bdc::Dual2(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen
