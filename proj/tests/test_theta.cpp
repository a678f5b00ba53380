#include <catch_amalgamated.hpp>

#include "etaq/theta.hpp"

using namespace etaq;

namespace {

// Direct double-ended summation oracle for f(-q^a, -q^b).
zseries theta_oracle(std::int64_t a, std::int64_t b, std::int64_t order) {
    zseries s(order);
    for (std::int64_t n = -200; n <= 200; ++n) {
        const std::int64_t e = a * n * (n + 1) / 2 + b * n * (n - 1) / 2;
        if (e >= 0 && e <= order) s.c[e] += (n % 2 == 0 ? 1 : -1);
    }
    return s;
}

} // namespace

TEST_CASE("theta_f") {
    CHECK(theta_f({1, 2}, 50) == eta_series(1, 50));
    CHECK(theta_f({1, 1}, 9) == theta_oracle(1, 1, 9));
    CHECK(theta_f({1, 1}, 9).c[0] == 1);
    CHECK(theta_f({2, 4}, 40) == truncate(scale_q(theta_f({1, 2}, 20), 2), 40));
    SECTION("depends only on the exponent multiset") {
        for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {2, 5}, {3, 7}})
            CHECK(theta_f({a, b}, 80) == theta_f({b, a}, 80));
    }
    CHECK_THROWS_AS(theta_f({0, 1}, 10), std::invalid_argument);
}

TEST_CASE("phi and psi") {
    CHECK(phi_series(5) == from_coeffs({1, 2, 0, 0, 2, 0}));
    CHECK(psi_series(6) == from_coeffs({1, 1, 0, 1, 0, 0, 1}));
    SECTION("triple-product forms") {
        CHECK(phi_series(300) == compile({{2, 5}, {1, -2}, {4, -2}}, 300));
        CHECK(psi_series(200) == compile({{2, 2}, {1, -1}}, 200));
    }
}

TEST_CASE("p-dissection of f1") {
    for (std::int64_t p : {5, 7, 11, 13}) {
        const f1_dissection d = p_dissect_f1(p, 200);
        CHECK(d.sum() == eta_series(1, 200));
        CHECK(static_cast<std::int64_t>(d.terms.size()) == p - 1);
        const std::int64_t special_class = d.special_exp % p;
        for (const auto& t : d.terms) {
            CHECK(t.lead_exp % p != special_class);
            for (std::int64_t n = 0; n <= 200; ++n)
                if (t.part.c[n] != 0) REQUIRE(n % p == t.lead_exp % p);
        }
    }
    SECTION("distinguished exponent at p=5 is 1") {
        const f1_dissection d = p_dissect_f1(5, 40);
        CHECK(d.special_exp == 1);
        CHECK(d.special_k == -1);
    }
    SECTION("residue classes avoid 2 mod 7 at p=7") {
        const f1_dissection d = p_dissect_f1(7, 60);
        CHECK(d.special_exp % 7 == 2);
        for (const auto& t : d.terms) CHECK(t.lead_exp % 7 != 2);
    }
    CHECK_THROWS_AS(p_dissect_f1(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(p_dissect_f1(9, 10), std::invalid_argument);
}

TEST_CASE("p-dissection of f1^3") {
    const zseries f1 = eta_series(1, 300);
    const zseries cube = mul(mul(f1, f1), f1);
    for (std::int64_t p : {3, 5, 7, 11}) {
        const f1_cubed_dissection d = p_dissect_f1_cubed(p, 300);
        CHECK(d.sum() == cube);
        const std::int64_t special_class = d.special_exp % p;
        for (const auto& t : d.terms) {
            CHECK(t.lead_exp % p != special_class);
            for (std::int64_t n = 0; n <= 300; ++n)
                if (t.part.c[n] != 0) REQUIRE(n % p == t.lead_exp % p);
        }
    }
    SECTION("distinguished term at p=3 is -3 q") {
        const f1_cubed_dissection d = p_dissect_f1_cubed(3, 30);
        CHECK(d.special_exp == 1);
        CHECK(d.special.c[1] == -3);
    }
    SECTION("classes avoid 3 mod 5 at p=5") {
        const f1_cubed_dissection d = p_dissect_f1_cubed(5, 50);
        CHECK(d.special_exp % 5 == 3);
        for (const auto& t : d.terms) CHECK(t.lead_exp % 5 != 3);
    }
    CHECK_THROWS_AS(p_dissect_f1_cubed(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(p_dissect_f1_cubed(1, 10), std::invalid_argument);
}

TEST_CASE("identity catalog") {
    CHECK(identity_catalog().size() == 11);
    for (const auto& rec : identity_catalog()) {
        const identity_outcome out = verify_identity(rec, std::max<std::int64_t>(400, rec.min_order));
        INFO(rec.id << " first mismatch at " << out.first_mismatch);
        CHECK(out.equal);
    }
    SECTION("spec'd spot checks") {
        CHECK(verify_identity("inv_f1_sq_2dissect", 400).equal);
        CHECK(verify_identity("f5_over_f1_2dissect", 400).equal);
        CHECK(verify_identity("euler_5dissect", 300).equal);
    }
    SECTION("orders below the catalog minimum are rejected") {
        CHECK_THROWS_AS(verify_identity("euler_5dissect", 50), std::invalid_argument);
        CHECK_THROWS_AS(verify_identity("inv_f1f7_2dissect", 200), std::invalid_argument);
    }
    SECTION("unknown ids are rejected") {
        CHECK_THROWS_AS(verify_identity("no_such_identity", 400), std::invalid_argument);
    }
}

// The f6^2 f10^2/(f1^2 f3 f5 f15^2) quotient generates the even-indexed
// half of 1/(f1 f15); prefixing it with q does not give the odd half
// (their constant terms already disagree: the odd half starts at
// p_{1,15}(1) = 1). The catalog carries the even-part identity.
TEST_CASE("1/(f1 f15) halves sort correctly") {
    const std::int64_t N = 120;
    const zseries odd = extract(compile({{1, -1}, {15, -1}}, 2 * N + 1), 2, 1);
    const zseries quot = compile({{6, 2}, {10, 2}, {1, -2}, {3, -1}, {5, -1}, {15, -2}}, N);
    CHECK(odd.c[0] == 1);
    CHECK(shift(quot, 1).c[0] == 0);
    CHECK_FALSE(equal_to_order(odd, shift(quot, 1), N));
    const zseries even = extract(compile({{1, -1}, {15, -1}}, 2 * N), 2, 0);
    CHECK(equal_to_order(even, quot, N));
}
