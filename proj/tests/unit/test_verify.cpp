#include "doctest.h"

#include "chroma/verify.hpp"

using namespace chroma;

TEST_CASE("seeded helpers are deterministic") {
    std::mt19937_64 a(99), b(99);
    for (int rep = 0; rep < 10; ++rep) {
        CHECK(random_graph(6, a) == random_graph(6, b));
        CHECK(random_permutation(6, a) == random_permutation(6, b));
    }
}

TEST_CASE("verification reports are byte-stable for a fixed seed") {
    VerifyOptions opt;
    opt.exhaustive_d = 3;
    opt.sample_ds = {5};
    opt.sample_count = 10;
    opt.seed = 424242;
    opt.only_checks = {1, 2, 7, 8};
    std::string r1 = format_report(run_verification(opt));
    std::string r2 = format_report(run_verification(opt));
    CHECK(r1 == r2);
    CHECK(all_passed(run_verification(opt)));
}

TEST_CASE("the injected cut-rule fault trips the W-identity check") {
    VerifyOptions opt;
    opt.exhaustive_d = 3;
    opt.sample_ds = {};
    opt.only_checks = {1};
    opt.fault = Fault::cut_rule;
    auto results = run_verification(opt);
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].pass);
    CHECK_FALSE(all_passed(results));
    CHECK(results[0].detail.find("cut enumeration") != std::string::npos);
}

TEST_CASE("fixture builders match their edge lists") {
    CHECK(fixture_worked7().edge_count() == 5);
    CHECK(fixture_triangles5().edge_count() == 6);
    CHECK(fixture_chorded5().edge_count() == 6);
    CHECK(fixture_path4().edge_count() == 3);
    CHECK(fixture_star4().edge_count() == 3);
    CHECK(fixture_codec7().edge_count() == 6);
}
