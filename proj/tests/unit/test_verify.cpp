#include "bdc/poissonmap.hpp"
#include "bdc/verify.hpp"
#include "fixtures.hpp"

#include <algorithm>

using namespace bdc;

namespace {

void expect_pass(const CheckReport& r) { EXPECT_TRUE(r.pass) << r.name << ": " << to_json(r).dump(); }

BDPair reversed_pair() { return make_pair(test::reversed5(), empty_triple(5)); }

}  // namespace

TEST(Sample, DeterministicUnimodularGeneric) {
    SamplePlan plan;
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 3; ++t) {
            MatQ u = sample_sl(n, plan, t);
            EXPECT_EQ(u, sample_sl(n, plan, t));
            EXPECT_EQ(det<Rat>(u), Rat(1));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) EXPECT_FALSE(trailing_minor<Rat>(u, i, j).is_zero());
        }
    SamplePlan other;
    other.master_seed = 2;
    EXPECT_NE(sample_sl(4, plan, 0), sample_sl(4, other, 0));
    EXPECT_NE(sample_sl(4, plan, 0), sample_sl(4, plan, 1));
}

TEST(Sample, ResampleLimit) {
    SamplePlan plan;
    plan.resample_limit = 5;
    EXPECT_THROW(sample_sl(3, plan, 0, [](const MatQ&) { return false; }), ResourceLimit);
}

TEST(Sample, GenericPointsForH) {
    SamplePlan plan;
    auto p = test::running_example();
    MatQ u = sample_generic(p, plan, 0);
    Seed seed(p);
    for (const auto& [ij, v] : seed.eval_all<Rat>(apply_h<Rat>(p, u))) EXPECT_FALSE(v.is_zero());
}

// Count of valid triples: n = 3 has the empty one and 1->2, 2->1; n = 4 adds
// i->j for i != j and the two shifts {1,2} <-> {2,3}.
TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(enumerate_triples(2).size(), 1u);
    EXPECT_EQ(enumerate_triples(3).size(), 3u);
    EXPECT_EQ(enumerate_triples(4).size(), 9u);
    EXPECT_THROW(enumerate_triples(7), ResourceLimit);
}

TEST(Enumerate, RandomPairsAreAperiodic) {
    auto ps = random_aperiodic_pairs(5, 10, 3);
    EXPECT_EQ(ps.size(), 10u);
    for (const auto& p : ps) EXPECT_TRUE(is_aperiodic(p));
}

TEST(Checks, BtsSmallPairs) {
    SamplePlan plan;
    for (const auto& p : {empty_pair(3), test::single_root3(), reversed_pair()}) expect_pass(check_bts(p, plan));
}

TEST(Checks, LogCanonicalResolvesOneOrder) {
    SamplePlan plan;
    for (const auto& p : {empty_pair(3), test::single_root3()}) {
        auto r = resolve_order(p, plan);
        expect_pass(r);
        EXPECT_TRUE(r.constants.contains("order"));
    }
}

TEST(Checks, CompatibilityAndY) {
    SamplePlan plan;
    auto p = test::single_root3();
    auto order = resolve_order(p, plan).constants["order"] == "cols-rows" ? SlotOrder::ColsRows : SlotOrder::RowsCols;
    auto r = check_compatibility(p, plan, order);
    expect_pass(r);
    EXPECT_TRUE(r.constants.contains("lambda"));
    expect_pass(check_y_variables(p, plan));
}

TEST(Checks, BracketEngine) {
    SamplePlan plan;
    plan.trials = 1;
    expect_pass(check_multiplicativity(3, plan));
    expect_pass(check_jacobi(test::single_root3(), plan, BracketKind::Exotic));
    expect_pass(check_zero_bracket(3, plan));
    expect_pass(check_r_operator(test::single_root3().rows));
    expect_pass(check_detdif(test::single_root3(), plan));
}

TEST(Checks, MinorDualities) {
    SamplePlan plan;
    expect_pass(check_jacobi_minors(3, plan));
    auto r = check_minor_correspondence(reversed_pair(), plan);
    expect_pass(r);
    EXPECT_GT(r.constants["cases"].get<int>(), 0);
}

TEST(Checks, InductionAndSeaweed) {
    SamplePlan plan;
    expect_pass(check_induction_all(test::single_root3(), plan));
    expect_pass(check_seaweed(test::single_root3().rows, plan));
    expect_pass(check_regularity(test::single_root3()));
}

TEST(Checks, PoissonMapSingleRoot) {
    SamplePlan plan;
    plan.trials = 1;
    expect_pass(check_poisson_map(test::single_root3(), plan));
}

TEST(Checks, FailureIsReported) {
    CheckReport r;
    r.name = "probe";
    r.fail({{"k", 1}});
    EXPECT_FALSE(r.pass);
    auto j = to_json(r);
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["witnesses"].size(), 1u);
}

TEST(Suite, NamesAndUnknown) {
    auto names = suite_names();
    for (const char* n : {"bts", "seaweed", "regularity", "minor_dualities"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_THROW(run_suite("nope", empty_pair(3), SamplePlan{}), InvalidInput);
    auto rs = run_suite("bts", empty_pair(3), SamplePlan{});
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_TRUE(rs[0].pass);
}
