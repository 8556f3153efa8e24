#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bdc {

// Exact rational. Wraps mpq_class so that every operator returns a concrete
// value; Eigen kernels must never see GMP expression templates.
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    Rat(long long v) : q_(static_cast<long>(v)) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // "p" or "p/q", decimal, optional sign.
    static Rat parse(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    std::string str() const { return q_.get_str(); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_.get_mpq_t(), a.q_.get_mpq_t()); return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& r, int k);
std::size_t hash_value(const Rat& r);

}  // namespace bdc

template <>
struct std::hash<bdc::Rat> {
    std::size_t operator()(const bdc::Rat& r) const { return bdc::hash_value(r); }
};

namespace Eigen {
template <>
struct NumTraits<bdc::Rat> : GenericNumTraits<bdc::Rat> {
    using Real = bdc::Rat;
    using NonInteger = bdc::Rat;
    using Literal = bdc::Rat;
    using Nested = bdc::Rat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 40
    };
    static bdc::Rat epsilon() { return bdc::Rat(0); }
    static bdc::Rat dummy_precision() { return bdc::Rat(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen
