#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "weyl/verify.hpp"

using namespace weyl;

TEST_CASE("action_zero suite passes exhaustively and excludes size one") {
    const MapAlgebra ctx(2, trunc_poly(2));
    const SuiteReport report = verify_action_zero(ctx, 3);
    CHECK(report.passed());
    CHECK(report.suite == "action_zero");
    // sizes 2 and 3 over a two-element basis: 10 + 20 pairs
    CHECK(report.cases.size() == 30);
    for (const auto& entry : report.cases) CHECK(entry.key.find("k=") == std::string::npos);
    CHECK_THROWS_AS(verify_action_zero(ctx, 1), std::invalid_argument);
}

TEST_CASE("qivi suite passes and covers k = 0 .. bound") {
    const MapAlgebra ctx(2, trunc_poly(2));
    const SuiteReport report = verify_qivi(ctx, 2);
    CHECK(report.passed());
    // sizes 0,1,2: 1 + 4 + 10 cases
    CHECK(report.cases.size() == 15);
}

TEST_CASE("delta suite passes for both halves") {
    const MapAlgebra ctx(2, trunc_poly(2));
    const SuiteReport report = verify_delta(ctx, 2, 2);
    CHECK(report.passed());
    bool saw_word_case = false;
    bool saw_q_case = false;
    for (const auto& entry : report.cases) {
        if (entry.key.rfind("word=", 0) == 0) saw_word_case = true;
        if (entry.key.rfind("i=", 0) == 0) saw_q_case = true;
    }
    CHECK(saw_word_case);
    CHECK(saw_q_case);
}

TEST_CASE("qonv_basis suite aggregates tuple, sign, highest-weight and rank cases") {
    const MapAlgebra ctx(2, trunc_poly(2));
    const auto result = verify_qonv_and_basis(ctx, 1);
    CHECK(result.report.passed());
    CHECK(result.rank_value == 4);
    CHECK(result.signs.size() == 4);

    std::set<std::string> keys;
    for (const auto& entry : result.report.cases) keys.insert(entry.key);
    CHECK(keys.count("rank") == 1);
    CHECK(keys.count("highest_weight") == 1);
    CHECK(keys.count("sign_formula") == 1);
    CHECK(result.report.cases.size() == 4 + 3);
}

TEST_CASE("qonv_basis guard rejects oversized runs unless raised") {
    const MapAlgebra ctx(4, trunc_poly(3));
    CHECK_THROWS_AS(verify_qonv_and_basis(ctx, 3, Integer(100)), std::invalid_argument);
    CHECK_NOTHROW(verify_qonv_and_basis(ctx, 2, Integer(100)));  // sym_dim = 78
}

TEST_CASE("reports serialize to the suite schema") {
    const MapAlgebra ctx(2, trunc_poly(1));
    const SuiteReport report = verify_qivi(ctx, 1);
    const json j = report_to_json(report);
    CHECK(j.at("suite") == "qivi");
    CHECK(j.at("params").at("n") == 2);
    CHECK(j.at("params").contains("algebra"));
    CHECK(j.at("cases").is_array());
    CHECK(j.at("cases").size() == report.cases.size());
    for (const auto& entry : j.at("cases")) {
        CHECK(entry.contains("key"));
        CHECK(entry.at("pass").is_boolean());
    }
    CHECK(j.at("duration_ms").is_number_integer());
}

TEST_CASE("suite JSON is identical across runs apart from the duration field") {
    const MapAlgebra ctx(2, trunc_poly(2));
    json first = report_to_json(verify_qivi(ctx, 2));
    json second = report_to_json(verify_qivi(ctx, 2));
    first["duration_ms"] = 0;
    second["duration_ms"] = 0;
    CHECK(first.dump() == second.dump());
}

TEST_CASE("case keys replay through the single-case path") {
    const MapAlgebra ctx(2, trunc_poly(2));
    QCache cache(ctx.coeff);
    const SuiteReport report = verify_action_zero(ctx, 2);
    for (const auto& entry : report.cases) {
        // key format: i=..;phi=..;chi=..
        const auto i_end = entry.key.find(';');
        const int i = std::stoi(entry.key.substr(2, i_end - 2));
        const auto phi_end = entry.key.find(';', i_end + 1);
        const auto phi = parse_multiset_literal(
            entry.key.substr(i_end + 5, phi_end - i_end - 5), ctx.coeff);
        const auto chi = parse_multiset_literal(entry.key.substr(phi_end + 5), ctx.coeff);
        const Tensor image = act(ctx, cache.q_single(i, phi, chi),
                                 Tensor::pure({SlotIndex{i, ctx.coeff.unit_index()}}));
        CHECK(image.is_zero() == entry.pass);
    }
}

namespace {

// b1 * b1 lands back on the unit: products are not confined to one index.
AlgebraSpec group_algebra_z2() {
    std::vector<std::vector<AlgebraElement>> mul(2, std::vector<AlgebraElement>(2));
    mul[0][0].add_term(0, 1);
    mul[0][1].add_term(1, 1);
    mul[1][0].add_term(1, 1);
    mul[1][1].add_term(0, 1);  // g * g = 1
    return AlgebraSpec({"1", "g"}, 0, mul);
}

// a genuinely rational structure constant: e * e = e/2
AlgebraSpec half_idempotent_algebra() {
    std::vector<std::vector<AlgebraElement>> mul(2, std::vector<AlgebraElement>(2));
    mul[0][0].add_term(0, 1);
    mul[0][1].add_term(1, 1);
    mul[1][0].add_term(1, 1);
    mul[1][1].add_term(1, rational(1, 2));
    return AlgebraSpec({"1", "e"}, 0, mul);
}

}  // namespace

TEST_CASE("suites hold over non-nilpotent and rational-constant algebras") {
    for (const AlgebraSpec& spec : {group_algebra_z2(), half_idempotent_algebra()}) {
        CHECK_NOTHROW(spec.validate());
        const MapAlgebra ctx(2, spec);
        CHECK(verify_action_zero(ctx, 3).passed());
        CHECK(verify_qivi(ctx, 3).passed());
        CHECK(verify_delta(ctx, 2, 2).passed());
        for (int m = 0; m <= 2; ++m) {
            const auto result = verify_qonv_and_basis(ctx, m);
            CHECK(result.report.passed());
            CHECK(Integer(static_cast<long>(result.rank_value)) == sym_dim(2, 2, m));
        }
    }
}

TEST_CASE("one worked value over the order-two group algebra") {
    // q_1(0, 2chi_g) = (h_1 (x) g)^2 / 2 - (h_1 (x) 1) / 2, and its image on
    // (v_1 (x) 1)^(x)2 is exactly (v_1 (x) g)^(x)2
    const AlgebraSpec spec = group_algebra_z2();
    const MapAlgebra ctx(2, spec);
    const UElement q = q_single(1, Multiset<int>{}, Multiset<int>::scaled(1, 2), spec);
    const Tensor image = act(ctx, q, highest_weight_tensor(spec, 2));
    CHECK(image == Tensor::pure({SlotIndex{1, 1}, SlotIndex{1, 1}}));
}

TEST_CASE("cases appear in canonical enumeration order") {
    const MapAlgebra ctx(3, trunc_poly(1));
    const SuiteReport report = verify_action_zero(ctx, 3);
    // i ascending, then total size, then phi, then chi
    std::vector<std::string> keys;
    for (const auto& entry : report.cases) keys.push_back(entry.key);
    CHECK(keys.front().rfind("i=1;", 0) == 0);
    CHECK(keys.back().rfind("i=2;", 0) == 0);
    const SuiteReport again = verify_action_zero(ctx, 3);
    std::vector<std::string> keys_again;
    for (const auto& entry : again.cases) keys_again.push_back(entry.key);
    CHECK(keys == keys_again);
}
