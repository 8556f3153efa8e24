#pragma once

#include "bdc/cluster.hpp"
#include "bdc/rmatrix.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace bdc {

struct SamplePlan {
    std::uint64_t master_seed = 1;
    int trials = 3;
    int bound = 3;
    int resample_limit = 200;
};

// Deterministic per-trial generator.
std::mt19937_64 trial_rng(const SamplePlan& plan, int trial, int attempt = 0, std::uint64_t salt = 0);

using Predicate = std::function<bool(const MatQ&)>;

// U = L D V with unitriangular L, V (entries in [-B,B]) and
// D = diag(d_1, ..., d_{n-1}, 1/(d_1...d_{n-1})). Resampled until every
// trailing minor F_ij and every leading principal minor is nonzero and
// `extra` holds. Throws ResourceLimit after plan.resample_limit attempts.
MatQ sample_sl(int n, const SamplePlan& plan, int trial, const Predicate& extra = {}, std::uint64_t salt = 0);

// Points where h is defined and every f_ij(h(U)) is nonzero.
MatQ sample_generic(const BDPair& p, const SamplePlan& plan, int trial, std::uint64_t salt = 0);

struct CheckReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json constants = nlohmann::json::object();
    double seconds = 0;

    void fail(nlohmann::json witness);
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json pair_to_json(const BDPair& p);
nlohmann::json matrix_json(const MatQ& m);

// Omega(u,w) = {log f_u, log f_w} over the seed functions, vertices in
// row-major order.
MatQ omega_matrix(const Seed& seed, const BracketSpec& spec, const MatQ& z);

CheckReport check_bts(const BDPair& p, const SamplePlan& plan);
CheckReport check_log_canonical(const BDPair& p, const SamplePlan& plan, SlotOrder order);
// Runs both slot orders; passes iff exactly one order (or two orders that
// coincide as brackets) is log-canonical. Reports the order.
CheckReport resolve_order(const BDPair& p, const SamplePlan& plan);
CheckReport check_compatibility(const BDPair& p, const SamplePlan& plan, SlotOrder order = SlotOrder::RowsCols);
CheckReport check_y_variables(const BDPair& p, const SamplePlan& plan);
CheckReport check_poisson_map(const BDPair& p, const SamplePlan& plan, SlotOrder order = SlotOrder::RowsCols);
CheckReport check_multiplicativity(int n, const SamplePlan& plan);
CheckReport check_jacobi(const BDPair& p, const SamplePlan& plan, BracketKind kind);
CheckReport check_r_operator(const BDTriple& t);
CheckReport check_zero_bracket(int n, const SamplePlan& plan);
CheckReport check_detdif(const BDPair& p, const SamplePlan& plan);
CheckReport check_jacobi_minors(int n, const SamplePlan& plan);
// det M(j,k) = det Mdag(j,k) for every i whose i-1 lies in a reversed row
// component and every admissible (j,k).
CheckReport check_minor_correspondence(const BDPair& p, const SamplePlan& plan);
CheckReport check_induction_step(const BDPair& p, Which which, int alpha, const SamplePlan& plan);
// Every removable root of the pair.
CheckReport check_induction_all(const BDPair& p, const SamplePlan& plan);
CheckReport check_seaweed(const BDTriple& rows, const SamplePlan& plan);
CheckReport check_regularity(const BDPair& p);

// Every valid triple for SL_n, n <= 6.
std::vector<BDTriple> enumerate_triples(int n);
// Aperiodic pairs drawn from enumerate_triples.
std::vector<BDPair> random_aperiodic_pairs(int n, int count, std::uint64_t seed);

// Suite names: bts, log_canonical, compatibility, y_variables, poisson_map,
// multiplicativity, jacobi, r_operator, zero_bracket, detdif, minor_dualities,
// induction_step, seaweed, regularity, all.
std::vector<std::string> suite_names();
std::vector<CheckReport> run_suite(const std::string& name, const BDPair& p, const SamplePlan& plan);

}  // namespace bdc
