#include "bdc/poly.hpp"

#include "bdc/errors.hpp"

#include <ostream>
#include <sstream>

namespace bdc {

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) t_.emplace(Mono{}, c);
}

Poly Poly::var(int k) {
    if (k < 0 || k >= kMaxVars) throw std::out_of_range("Poly::var: index out of range");
    Mono m{};
    m[k] = 1;
    Poly p;
    p.t_.emplace(m, Rat(1));
    return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    Rat out(0);
    for (const auto& [m, c] : t_) {
        Rat term = c;
        for (int k = 0; k < kMaxVars; ++k)
            if (m[k]) term *= pow(point.at(k), m[k]);
        out += term;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Poly::Mono m;
            for (int k = 0; k < Poly::kMaxVars; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
            r.add_term(m, ca * cb);
        }
    return r;
}

DivisionResult divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    const auto& [dm, dc] = *d.terms().begin();
    DivisionResult out;
    Poly rest = p;
    while (!rest.is_zero()) {
        const auto [rm, rc] = *rest.terms().begin();
        Poly::Mono q{};
        bool divisible = true;
        for (int k = 0; k < Poly::kMaxVars && divisible; ++k) {
            if (rm[k] < dm[k]) divisible = false;
            else q[k] = static_cast<std::uint8_t>(rm[k] - dm[k]);
        }
        if (!divisible) {
            // Leading term goes to the remainder; keep reducing the tail.
            Poly lt;
            lt.add_term(rm, rc);
            out.remainder += lt;
            rest -= lt;
            continue;
        }
        Poly t;
        t.add_term(q, rc / dc);
        out.quotient += t;
        rest -= t * d;
    }
    return out;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& d) {
    auto r = divide(p, d);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotient;
}

Poly& Poly::operator/=(const Poly& o) {
    auto q = exact_divide(*this, o);
    if (!q) throw InexactDivision();
    return *this = std::move(*q);
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        bool unit = true;
        for (auto e : m) unit = unit && e == 0;
        Rat a = c;
        if (!first) os << (a.sign() < 0 ? " - " : " + ");
        else if (a.sign() < 0) os << "-";
        a = abs(a);
        bool coef = unit || a != Rat(1);
        if (coef) os << a;
        bool star = coef;
        for (int k = 0; k < kMaxVars; ++k) {
            if (!m[k]) continue;
            if (star) os << "*";
            os << (k < static_cast<int>(names.size()) ? names[k] : "v" + std::to_string(k));
            if (m[k] > 1) os << "^" << int(m[k]);
            star = true;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str({}); }

}  // namespace bdc
