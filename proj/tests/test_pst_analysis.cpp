#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "twalk/pst.hpp"
#include "twalk/sweep.hpp"

using namespace twalk;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pst certificate") {
    const PstCertificate yes = pst_certificate(BlockForm::parse("2,2"));
    CHECK(yes.has_pst);
    CHECK(yes.pair == std::pair<int, int>{1, 2});
    REQUIRE(yes.times.size() == 2);
    CHECK_THAT(yes.times[0], WithinAbs(kPi / 2, 1e-15));
    CHECK_THAT(yes.times[1], WithinAbs(3 * kPi / 2, 1e-15));

    const PstCertificate no = pst_certificate(BlockForm::parse("2,4"));
    CHECK_FALSE(no.has_pst);
    CHECK(no.violated_conditions == std::vector<std::string>{"m2 mod 4 ≠ 2"});

    CHECK(pst_certificate(BlockForm::parse("2,6,4,4")).has_pst);
    CHECK(pst_certificate(BlockForm::parse("3,2")).violated_conditions ==
          std::vector<std::string>{"m1≠2"});
    CHECK(pst_certificate(BlockForm::parse("2,2,3,4")).violated_conditions ==
          std::vector<std::string>{"m_j mod 4 ≠ 0 at j=3"});

    // Odd canonical forms: K_2 = Gamma(2) satisfies the conditions vacuously,
    // and clique-first shapes check the same block arithmetic.
    CHECK(pst_certificate(BlockForm::parse("1,1")).has_pst);
    CHECK(pst_certificate(BlockForm::parse("2,2,4")).has_pst);
    CHECK_FALSE(pst_certificate(BlockForm::parse("3")).has_pst);
}

TEST_CASE("off-diagonal upper bound over canonical blocks") {
    CHECK_THAT(offdiag_upper_bound(BlockForm::parse("2,6"), 2), WithinAbs(0.25, 1e-15));
    CHECK_THAT(offdiag_upper_bound(BlockForm::parse("2,6"), 1), WithinAbs(1.0, 1e-15));
    CHECK_THAT(offdiag_upper_bound(BlockForm::parse("2,2,1,2"), 3), WithinAbs(0.4, 1e-15));
    CHECK_THROWS_AS(offdiag_upper_bound(BlockForm::parse("2,6"), 3), std::invalid_argument);

    // Strictly detectable beyond the first block: bound < 1 for j0 >= 2.
    for (const char* blocks : {"2,2,1,2", "2,6,4,4", "2,2,4", "3,1,2"}) {
        const BlockForm form = BlockForm::parse(blocks);
        for (int j0 = 2; j0 <= static_cast<int>(form.canonical_blocks().size()); ++j0)
            CHECK(offdiag_upper_bound(form, j0) < 1.0);
    }
}

TEST_CASE("unit-modulus scan") {
    const auto hits22 = scan_unit_modulus(BlockForm::parse("2,2"));
    REQUIRE_FALSE(hits22.empty());
    for (const auto& hit : hits22) {
        CHECK(hit.i == 1);
        CHECK(hit.j == 2);
        const bool near_half = std::abs(hit.t - kPi / 2) < 2e-3;
        const bool near_three_half = std::abs(hit.t - 3 * kPi / 2) < 2e-3;
        CHECK((near_half || near_three_half));
    }

    CHECK(scan_unit_modulus(BlockForm::parse("2,4")).empty());

    const auto hits_k2 = scan_unit_modulus(BlockForm::parse("1,1"));
    REQUIRE_FALSE(hits_k2.empty());
    for (const auto& hit : hits_k2) CHECK(hit.i == 1);
}

TEST_CASE("certificate and scan agree on every canonical form with n <= 9") {
    for (const auto& form : enumerate_canonical_forms(2, 9)) {
        const bool certified = pst_certificate(form).has_pst;
        const auto hits = scan_unit_modulus(form);
        INFO("form " << form.str());
        REQUIRE(certified == !hits.empty());
        for (const auto& hit : hits) {
            REQUIRE(hit.i == 1);
            REQUIRE(hit.j == 2);
        }
    }
}
