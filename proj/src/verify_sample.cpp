#include "bdc/poissonmap.hpp"
#include "bdc/verify.hpp"

namespace bdc {

std::mt19937_64 trial_rng(const SamplePlan& plan, int trial, int attempt, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(plan.master_seed), static_cast<std::uint32_t>(plan.master_seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
    return std::mt19937_64(seq);
}

namespace {

bool minors_nonzero(const MatQ& u) {
    const int n = static_cast<int>(u.rows());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (trailing_minor<Rat>(u, i, j).is_zero()) return false;
    for (int k = 1; k <= n; ++k)
        if (det<Rat>(MatQ(u.topLeftCorner(k, k))).is_zero()) return false;
    return true;
}

}  // namespace

MatQ sample_sl(int n, const SamplePlan& plan, int trial, const Predicate& extra, std::uint64_t salt) {
    for (int attempt = 0; attempt < plan.resample_limit; ++attempt) {
        auto rng = trial_rng(plan, trial, attempt, salt);
        std::uniform_int_distribution<int> entry(-plan.bound, plan.bound), mag(1, plan.bound), coin(0, 1);
        MatQ l = identity<Rat>(n), v = identity<Rat>(n), d = zeros<Rat>(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                l(i, j) = Rat(entry(rng));
                v(j, i) = Rat(entry(rng));
            }
        Rat prod(1);
        for (int i = 0; i + 1 < n; ++i) {
            const int x = mag(rng) * (coin(rng) ? 1 : -1);
            d(i, i) = Rat(x);
            prod *= Rat(x);
        }
        d(n - 1, n - 1) = Rat(1) / prod;
        MatQ u = l * d * v;
        if (!minors_nonzero(u)) continue;
        if (extra) {
            bool ok = false;
            try {
                ok = extra(u);
            } catch (const NonGeneric&) {
            } catch (const std::domain_error&) {
            }
            if (!ok) continue;
        }
        return u;
    }
    throw ResourceLimit("sample_sl: resample limit exceeded");
}

MatQ sample_generic(const BDPair& p, const SamplePlan& plan, int trial, std::uint64_t salt) {
    auto seed = std::make_shared<Seed>(p);
    return sample_sl(
        p.n(), plan, trial,
        [&](const MatQ& u) {
            MatQ z = apply_h<Rat>(p, u);
            for (const auto& [ij, v] : seed->eval_all<Rat>(z))
                if (v.is_zero()) return false;
            for (const auto& [ij, v] : seed->eval_all<Rat>(u))
                if (v.is_zero()) return false;
            return true;
        },
        salt);
}

void CheckReport::fail(nlohmann::json witness) {
    pass = false;
    if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
}

nlohmann::json matrix_json(const MatQ& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

namespace {

nlohmann::json triple_json(const BDTriple& t) {
    nlohmann::json map = nlohmann::json::object();
    for (auto [a, b] : t.map()) map[std::to_string(a)] = b;
    return {{"gamma1", t.gamma1()}, {"gamma2", t.gamma2()}, {"map", map}};
}

}  // namespace

nlohmann::json pair_to_json(const BDPair& p) {
    return {{"n", p.n()}, {"rows", triple_json(p.rows)}, {"cols", triple_json(p.cols)}};
}

nlohmann::json to_json(const CheckReport& r) {
    return {{"check", r.name},         {"params", r.params},       {"pass", r.pass},
            {"witnesses", r.witnesses}, {"constants", r.constants}, {"seconds", r.seconds}};
}

}  // namespace bdc
