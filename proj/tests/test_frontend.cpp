#include <catch2/catch_amalgamated.hpp>

#include <schubcalc/json_io.hpp>
#include <schubcalc/verify.hpp>

using namespace schubcalc;

static Permutation P(const std::string& s) { return parse_permutation(s); }
static Polynomial X(int i) { return Polynomial::variable(xv(i)); }
static Polynomial Y(int i) { return Polynomial::variable(yv(i)); }

TEST_CASE("polynomial json round-trip is byte identical") {
    Polynomial f = schubert_bjs(P("2143"), 0);
    json j = to_json(f);
    CHECK(polynomial_from_json(j) == f);
    CHECK(to_json(polynomial_from_json(j)).dump() == j.dump());

    CHECK(to_json(Polynomial()).dump() == R"({"terms":[]})");
    CHECK(polynomial_from_json(json::parse(R"({"terms":[]})")) == Polynomial());

    // mixed alphabets, negative indices, big coefficients
    Polynomial g = Polynomial(Int("123456789012345678901234567890")) * X(-2) * Y(3) - X(1);
    CHECK(polynomial_from_json(to_json(g)) == g);

    // the schema shape from the contract
    json expected = json::parse(
        R"({"terms":[{"c":"1","m":[["x",1,2]]},{"c":"1","m":[["x",1,1],["x",2,1]]},{"c":"1","m":[["x",1,1],["x",3,1]]}]})");
    CHECK(to_json(f) == expected);
}

TEST_CASE("permutation and involution round-trips") {
    for (const Permutation& w : all_permutations(4))
        CHECK(permutation_from_json(to_json(w)) == w);
    Involution z = Involution::symplectic(P("(1,4)(2,3)"));
    CHECK(involution_from_json(to_json(z)) == z);
    CHECK(to_json(z)["flavor"] == "Sp");
}

TEST_CASE("cellset round-trip") {
    CellSet d = rothe_diagram(P("35142"));
    CHECK(cellset_from_json(to_json(d)) == d);
}

TEST_CASE("malformed json rejected with location") {
    CHECK_THROWS_AS(json::parse("{\"terms\": ["), json::exception);
    try {
        json::parse("{\"terms\": [oops]}");
        FAIL("should have thrown");
    } catch (const json::exception& e) {
        // parse errors carry a byte position
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
    CHECK_THROWS_AS(polynomial_from_json(json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(involution_from_json(json::parse(R"({"flavor":"X","oneline":[1]})")),
                    std::invalid_argument);
}

TEST_CASE("diagram rendering matches the figure layout") {
    std::string grid = render_diagram(P("35142"), rothe_diagram(P("35142")));
    std::string expected =
        "□ □ × · ·\n"
        "□ ■ · ■ ×\n"
        "× · · · ·\n"
        "· ■ · × ·\n"
        "· × · · ·\n";
    CHECK(grid == expected);
}

TEST_CASE("suite registry covers the contract names") {
    std::vector<std::string> expect = {"dd-recurrence", "bjs-vs-dd",       "vex-det",
                                       "inv-recurrence", "vex-lg",         "fpf-og",
                                       "schur-pq-cross", "multiq",         "tableau-lg",
                                       "dearc",          "shapes",         "grassmannian-cors",
                                       "positivity"};
    std::vector<std::string> got;
    for (auto& s : suite_registry()) got.push_back(s.name);
    CHECK(got == expect);
    CHECK_THROWS_AS(run_verification("no-such-suite", 0, 1), std::invalid_argument);
}

TEST_CASE("verify all at bound 0 is a trivially empty pass") {
    auto reports = run_verification("all", 0, 1);
    CHECK(reports.size() == suite_registry().size());
    for (auto& r : reports) {
        CHECK(r.ok());
        CHECK(r.instances.empty());
    }
}

TEST_CASE("reports are byte-identical across thread counts") {
    auto r1 = run_verification("vex-lg", 4, 1);
    auto r2 = run_verification("vex-lg", 4, 3);
    REQUIRE(r1.size() == 1);
    REQUIRE(r2.size() == 1);
    CHECK(r1[0].to_json().dump() == r2[0].to_json().dump());
}

TEST_CASE("failures carry both sides and a repro command") {
    std::vector<Instance> instances;
    instances.push_back({"rigged", []() -> std::optional<std::pair<std::string, std::string>> {
                             return std::make_pair(std::string("left"), std::string("right"));
                         }});
    instances.push_back({"throws", []() -> std::optional<std::pair<std::string, std::string>> {
                             throw std::runtime_error("boom");
                         }});
    VerificationReport rep = run_suite("demo", 3, std::move(instances), 1);
    CHECK(rep.failed() == 2);
    CHECK_FALSE(rep.ok());
    CHECK(rep.instances[0].lhs == "left");
    CHECK(rep.instances[0].rhs == "right");
    CHECK(rep.instances[0].repro.find("schubcalc verify demo --n 3") == 0);
    CHECK(rep.instances[1].lhs.find("exception: boom") == 0);
    json j = rep.to_json();
    CHECK(j["failed"] == 2);
    CHECK(!j.contains("wall_seconds"));
}

TEST_CASE("term budget guard") {
    Polynomial::set_term_budget(4);
    Polynomial f;
    CHECK_THROWS_AS(
        [&] {
            Polynomial big(1);
            for (int i = 1; i <= 4; ++i) big *= Polynomial(1) + X(i);
            f = big;
        }(),
        std::runtime_error);
    Polynomial::set_term_budget(0);
    Polynomial big(1);
    for (int i = 1; i <= 4; ++i) big *= Polynomial(1) + X(i);
    CHECK(big.term_count() == 16);
}

TEST_CASE("og formula reports its calibration metadata") {
    auto r = orthogonal_pfaffian(Involution::symplectic(P("(1,3)(2,5)(4,6)")), 0,
                                 calibrated_og_sign());
    CHECK(r.representative_kind == "dearcR");
    CHECK(std::string(og_sign_name(r.sign)) == "(-1)^(j+k)");
    auto reports = run_verification("fpf-og", 4, 1);
    CHECK(reports[0].calibration == "(-1)^(j+k)");
}
