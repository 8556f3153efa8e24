#include "bdc/dual2.hpp"

#include <ostream>
#include <stdexcept>

namespace bdc {

namespace {
// acc += x*y, skipping the GMP call when either side is zero.
inline void fma_into(Rat& acc, const Rat& x, const Rat& y) {
    if (!x.is_zero() && !y.is_zero()) acc += x * y;
}
}  // namespace

Dual2& Dual2::operator+=(const Dual2& o) {
    v += o.v;
    if (!o.a.is_zero()) a += o.a;
    if (!o.b.is_zero()) b += o.b;
    if (!o.ab.is_zero()) ab += o.ab;
    return *this;
}

Dual2& Dual2::operator-=(const Dual2& o) {
    v -= o.v;
    if (!o.a.is_zero()) a -= o.a;
    if (!o.b.is_zero()) b -= o.b;
    if (!o.ab.is_zero()) ab -= o.ab;
    return *this;
}

Dual2 operator*(const Dual2& x, const Dual2& y) {
    Dual2 r;
    r.v = x.v * y.v;
    fma_into(r.a, x.v, y.a);
    fma_into(r.a, x.a, y.v);
    fma_into(r.b, x.v, y.b);
    fma_into(r.b, x.b, y.v);
    fma_into(r.ab, x.v, y.ab);
    fma_into(r.ab, x.ab, y.v);
    fma_into(r.ab, x.a, y.b);
    fma_into(r.ab, x.b, y.a);
    return r;
}

Dual2 inverse(const Dual2& y) {
    if (y.v.is_zero()) throw std::domain_error("Dual2: inverse of an infinitesimal");
    Rat iv = Rat(1) / y.v;
    Rat iv2 = iv * iv;
    Dual2 r(iv);
    if (!y.a.is_zero()) r.a = -y.a * iv2;
    if (!y.b.is_zero()) r.b = -y.b * iv2;
    if (!y.ab.is_zero() || (!y.a.is_zero() && !y.b.is_zero()))
        r.ab = Rat(2) * y.a * y.b * iv2 * iv - y.ab * iv2;
    return r;
}

Dual2 operator/(const Dual2& x, const Dual2& y) {
    if (y.a.is_zero() && y.b.is_zero() && y.ab.is_zero()) {
        if (y.v.is_zero()) throw std::domain_error("Dual2: division by zero");
        Rat iv = Rat(1) / y.v;
        Dual2 r(x.v * iv);
        if (!x.a.is_zero()) r.a = x.a * iv;
        if (!x.b.is_zero()) r.b = x.b * iv;
        if (!x.ab.is_zero()) r.ab = x.ab * iv;
        return r;
    }
    return x * inverse(y);
}

std::ostream& operator<<(std::ostream& os, const Dual2& d) {
    return os << "(" << d.v << " + " << d.a << "ea + " << d.b << "eb + " << d.ab << "eab)";
}

}  // namespace bdc
