#include "bdc/verify.hpp"

namespace bdc {

namespace {

// Small mixed pair used where a check needs n <= 3.
BDPair small_pair() { return {validate(3, {1}, {2}, {{1, 2}}), validate(3, {2}, {1}, {{2, 1}})}; }

CheckReport skipped(const std::string& name, const std::string& why) {
    CheckReport r{name};
    r.constants["skipped"] = why;
    return r;
}

SlotOrder order_of(const CheckReport& r) {
    if (r.constants.contains("order") && r.constants["order"] == "cols-rows") return SlotOrder::ColsRows;
    return SlotOrder::RowsCols;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"bts",         "log_canonical", "compatibility", "y_variables", "poisson_map",     "multiplicativity",
            "jacobi",      "r_operator",    "zero_bracket",  "detdif",      "minor_dualities", "induction_step",
            "seaweed",     "regularity"};
}

std::vector<CheckReport> run_suite(const std::string& name, const BDPair& p, const SamplePlan& plan) {
    const int n = p.n();
    if (name == "all") {
        std::vector<CheckReport> out;
        CheckReport order = resolve_order(p, plan);
        out.push_back(order);
        for (const auto& s : suite_names()) {
            if (s == "log_canonical") continue;
            if (s == "compatibility") {
                out.push_back(check_compatibility(p, plan, order_of(order)));
                continue;
            }
            if (s == "poisson_map") {
                out.push_back(check_poisson_map(p, plan, order_of(order)));
                continue;
            }
            for (auto& r : run_suite(s, p, plan)) out.push_back(std::move(r));
        }
        return out;
    }
    if (name == "bts") return {check_bts(p, plan)};
    if (name == "log_canonical") return {resolve_order(p, plan)};
    if (name == "compatibility") return {check_compatibility(p, plan, order_of(resolve_order(p, plan)))};
    if (name == "y_variables") return {check_y_variables(p, plan)};
    if (name == "poisson_map") return {check_poisson_map(p, plan, order_of(resolve_order(p, plan)))};
    if (name == "multiplicativity") return {check_multiplicativity(std::min(n, 3), plan)};
    if (name == "jacobi") {
        const BDPair q = n <= 3 ? p : small_pair();
        return {check_jacobi(q, plan, BracketKind::Exotic), check_jacobi(q, plan, BracketKind::StandardCompanion)};
    }
    if (name == "r_operator") return {check_r_operator(p.rows), check_r_operator(p.cols)};
    if (name == "zero_bracket") return {check_zero_bracket(3, plan)};
    if (name == "detdif") return {check_detdif(n <= 4 ? p : small_pair(), plan)};
    if (name == "minor_dualities")
        return {check_jacobi_minors(3, plan), check_jacobi_minors(4, plan), check_minor_correspondence(p, plan)};
    if (name == "induction_step") return {check_induction_all(p, plan)};
    if (name == "seaweed") return {check_seaweed(p.rows, plan)};
    if (name == "regularity") {
        if (n > 3) return {skipped("regularity", "symbolic check limited to n <= 3")};
        return {check_regularity(p)};
    }
    throw InvalidInput("unknown suite: " + name);
}

}  // namespace bdc
