#pragma once

#include "bdc/rat.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdc {

// Sparse multivariate polynomial over Q in at most kMaxVars variables.
// Monomials are ordered lexicographically with variable 0 most significant;
// the first map entry is the leading term.
class Poly {
public:
    static constexpr int kMaxVars = 16;
    using Mono = std::array<std::uint8_t, kMaxVars>;
    using Terms = std::map<Mono, Rat, std::greater<Mono>>;

    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    Poly(const Rat& c);

    static Poly var(int k);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    int total_degree() const;
    Rat eval(const std::vector<Rat>& point) const;
    // names[k] is printed for variable k.
    std::string str(const std::vector<std::string>& names) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    // Exact division; throws InexactDivision when o does not divide *this.
    Poly& operator/=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(Poly a, const Poly& b) { return a /= b; }
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    void add_term(const Mono& m, const Rat& c);

private:
    Terms t_;
};

struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

// Multivariate division by a single divisor in lex order. The remainder is
// zero iff the divisor divides the dividend.
DivisionResult divide(const Poly& p, const Poly& d);
std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bdc

namespace Eigen {
template <>
struct NumTraits<bdc::Poly> : GenericNumTraits<bdc::Poly> {
    using Real = bdc::Poly;
    using NonInteger = bdc::Poly;
    using Literal = bdc::Poly;
    using Nested = bdc::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 50,
        AddCost = 500,
        MulCost = 5000
    };
    static bdc::Poly epsilon() { return bdc::Poly(0); }
    static bdc::Poly dummy_precision() { return bdc::Poly(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen
