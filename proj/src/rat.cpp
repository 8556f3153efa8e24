#include "bdc/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace bdc {

Rat::Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    auto valid_int = [](const std::string& x) {
        std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    std::string a = t.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw std::invalid_argument("Rat: cannot parse '" + t + "'");
    if (a[0] == '+') a.erase(0, 1);
    if (b[0] == '+') b.erase(0, 1);
    mpz_class n(a), d(b);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + t + "'");
    Rat r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_.get_str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, int k) {
    if (k < 0) return pow(Rat(1) / r, -k);
    Rat out(1);
    for (int i = 0; i < k; ++i) out *= r;
    return out;
}

std::size_t hash_value(const Rat& r) {
    return std::hash<std::string>{}(r.str());
}

}  // namespace bdc
