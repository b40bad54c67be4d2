#include <catch2/catch_amalgamated.hpp>

#include <schubcalc/cells.hpp>
#include <schubcalc/classify.hpp>
#include <schubcalc/involution.hpp>
#include <schubcalc/partition.hpp>
#include <schubcalc/permutation.hpp>

using namespace schubcalc;

static Permutation P(const std::string& s) { return parse_permutation(s); }
static Involution IO(const std::string& s) { return Involution::orthogonal(parse_permutation(s)); }
static Involution ISp(const std::string& s) { return Involution::symplectic(parse_permutation(s)); }

TEST_CASE("compose and identity behavior") {
    CHECK(compose(Permutation::identity(), P("35142")) == P("35142"));
    CHECK(compose(Permutation::simple(1), Permutation::simple(1)).is_identity());
    CHECK(compose(Permutation::simple(1), Permutation::simple(2)) == P("231"));
    // (u v)(i) = u(v(i)) spot check
    Permutation u = P("3142"), v = P("2413");
    for (int i = 1; i <= 4; ++i) CHECK(compose(u, v)(i) == u(v(i)));
}

TEST_CASE("padding is invisible") {
    Permutation w = P("2143");
    Permutation padded({2, 1, 4, 3, 5, 6});
    CHECK(w == padded);
    CHECK(length(w) == length(padded));
    CHECK(code(w) == code(padded));
    CHECK(rothe_diagram(w) == rothe_diagram(padded));
}

TEST_CASE("length") {
    CHECK(length(Permutation::identity()) == 0);
    CHECK(length(P("2143")) == 2);
    for (int n : {2, 3, 4, 5, 6})
        CHECK(length(Permutation::longest(n)) == n * (n - 1) / 2);
}

TEST_CASE("demazure product") {
    Permutation s1 = Permutation::simple(1), s2 = Permutation::simple(2);
    CHECK(demazure(s1, s1) == s1);
    CHECK(demazure(demazure(s1, s2), s1) == P("321"));
    CHECK(demazure(Permutation::identity(), P("45312")) == P("45312"));
    // associativity on all of S_4
    auto s4 = all_permutations(4);
    for (const auto& a : s4)
        for (const auto& b : s4)
            for (const auto& c : s4)
                REQUIRE(demazure(demazure(a, b), c) == demazure(a, demazure(b, c)));
}

TEST_CASE("rothe diagram and essential set match the worked figures") {
    CellSet d35142 = rothe_diagram(P("35142"));
    CHECK(d35142 == CellSet({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}, {4, 2}}));
    CHECK(essential_set(d35142) == CellSet({{2, 2}, {2, 4}, {4, 2}}));

    CellSet d31524 = rothe_diagram(P("31524"));
    CHECK(d31524 == CellSet({{1, 1}, {1, 2}, {3, 2}, {3, 4}}));
    CHECK(essential_set(d31524) == CellSet({{1, 2}, {3, 2}, {3, 4}}));

    CHECK(rothe_diagram(Permutation::identity()).empty());
    CHECK(essential_set(CellSet()).empty());
}

TEST_CASE("diagram size equals length, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n))
            REQUIRE(static_cast<int>(rothe_diagram(w).size()) == length(w));
}

TEST_CASE("vexillary predicate and chain criteria agree on S_6") {
    CHECK(is_vexillary(P("35142")));
    CHECK_FALSE(is_vexillary(P("31524")));
    CHECK_FALSE(is_vexillary(P("2143")));
    for (const auto& w : all_permutations(6)) {
        bool a = is_vexillary(w);
        bool b = is_vexillary_chain(w);
        bool c = rothe_rows_nested(w);
        REQUIRE(a == b);
        REQUIRE(a == c);
    }
}

TEST_CASE("code and shape") {
    CHECK(code(P("35142")) == std::vector<int>({2, 3, 0, 1}));
    CHECK(shape_of_code(code(P("35142"))) == Partition({3, 2, 1}));
    CHECK(code(Permutation::identity()).empty());
    CHECK(shape_of_code(code(Permutation::identity())).empty());
    // |shape(w)| = length(w) on all of S_5
    for (const auto& w : all_permutations(5)) {
        Partition sh = shape_of_code(code(w));
        int total = 0;
        for (int p : sh) total += p;
        REQUIRE(total == length(w));
    }
}

TEST_CASE("rank_submatrix") {
    CHECK(rank_submatrix(P("35142"), 2, 4) == 1);
    for (int n : {3, 5})
        for (const auto& w : all_permutations(n)) {
            CHECK(rank_submatrix(w, n, n) == n);
            CHECK(rank_submatrix(w, 0, 2) == 0);
        }
    CHECK_THROWS_AS(rank_submatrix(P("21"), -1, 0), std::out_of_range);
}

TEST_CASE("involution diagrams from the worked figures") {
    Involution y = IO("(1,3)(2,5)");
    CHECK(essential_set(involution_diagram(y.perm(), Flavor::O)) == CellSet({{2, 2}, {4, 2}}));
    CHECK(essential_set(involution_diagram(y.perm(), Flavor::Sp)) == CellSet({{2, 1}, {4, 2}}));
    CHECK(involution_diagram(Permutation::identity(), Flavor::O).empty());
    CHECK(involution_diagram(P("(1,4)(2,3)"), Flavor::Sp) == CellSet({{2, 1}, {3, 1}}));
}

TEST_CASE("involution codes and shapes") {
    CHECK(involution_shape(P("(1,5)(2,6)(4,7)"), Flavor::O) == Partition({4, 3, 1}));
    CHECK(involution_code(P("(1,4)(2,3)"), Flavor::Sp) == std::vector<int>({0, 1, 1}));
    CHECK(involution_shape(P("(1,4)(2,3)"), Flavor::Sp) == Partition({2}));
    CHECK(involution_shape(Permutation::identity(), Flavor::O).empty());
    CHECK(involution_shape(fpf_minimal(6), Flavor::Sp).empty());
}

TEST_CASE("atoms and reduced involution words match the worked examples") {
    CHECK(atoms(IO("(1,3)")) == std::vector<Permutation>({P("231"), P("312")}));
    CHECK(atoms(ISp("(1,4)(2,3)")) == std::vector<Permutation>({P("1342"), P("3124")}));
    CHECK(atoms(IO("1")) == std::vector<Permutation>({Permutation::identity()}));
    CHECK(atoms(IO("(1,4)(2,3)")) == std::vector<Permutation>({P("2431"), P("3412"), P("4213")}));

    auto words_o13 = reduced_involution_words(IO("(1,3)"));
    CHECK(words_o13 == std::vector<Word>({{1, 2}, {2, 1}}));
    auto words_sp = reduced_involution_words(ISp("(1,4)(2,3)"));
    CHECK(words_sp == std::vector<Word>({{2, 1}, {2, 3}}));

    std::vector<Word> expected8 = {{1, 3, 2, 3}, {1, 2, 3, 2}, {3, 1, 2, 3}, {2, 1, 3, 2},
                                   {2, 3, 1, 2}, {3, 2, 1, 2}, {3, 1, 2, 1}, {1, 3, 2, 1}};
    std::sort(expected8.begin(), expected8.end());
    CHECK(reduced_involution_words(IO("(1,4)(2,3)")) == expected8);
}

TEST_CASE("reduced words") {
    CHECK(reduced_words(P("2143")) == std::vector<Word>({{1, 3}, {3, 1}}));
    CHECK(reduced_words(Permutation::identity()) == std::vector<Word>({{}}));
    CHECK(reduced_words(Permutation::simple(3)).size() == 1);
    for (const auto& w : all_permutations(4))
        for (const auto& a : reduced_words(w)) {
            REQUIRE(static_cast<int>(a.size()) == length(w));
            REQUIRE(permutation_of_word(a) == w);
        }
}

TEST_CASE("atom and word lengths are consistent for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& y : all_involutions(n)) {
            const auto& at = atoms(y);
            REQUIRE(!at.empty());
            int lhat = involution_length(y);
            for (const auto& w : at) REQUIRE(length(w) == lhat);
        }
    for (int n : {2, 4, 6})
        for (const auto& z : all_fpf_involutions(n)) {
            const auto& at = atoms(z);
            REQUIRE(!at.empty());
            int lhat = involution_length(z);
            for (const auto& w : at) REQUIRE(length(w) == lhat);
        }
}

TEST_CASE("dearc") {
    Involution z = ISp("(1,3)(2,5)(4,6)");
    CHECK(dearc(z, DearcSide::R).perm() == P("(2,5)(4,6)"));
    CHECK(dearc(z, DearcSide::L).perm() == P("(1,3)(2,5)"));
    CHECK(dearc(ISp("(1,2)"), DearcSide::R).perm().is_identity());
    CHECK(dearc(ISp("(1,4)(2,3)"), DearcSide::R).perm() == P("(1,4)"));
    CHECK(dearc(ISp("(1,4)(2,3)"), DearcSide::L).perm() == P("(1,4)"));
    CHECK(dearc(z, DearcSide::R).flavor() == Flavor::O);
    CHECK_THROWS_AS(dearc(Involution::orthogonal(P("(1,3)")), DearcSide::R), std::invalid_argument);
}

TEST_CASE("pad operations") {
    CHECK(pad_left(P("21"), 2) == P("1243"));
    CHECK(pad_left(P("35142"), 0) == P("35142"));
    CHECK(sp_pad(ISp("(1,2)"), 2, true).perm() == P("(1,2)(3,4)"));
    CHECK_THROWS_AS(sp_pad(ISp("(1,2)"), 3, true), std::invalid_argument);
    CHECK_THROWS_AS(fpf_minimal(5), std::invalid_argument);
}

TEST_CASE("classification of the worked examples") {
    auto c1 = classify(IO("(1,5)(2,6)(4,7)"));
    CHECK(c1.i_grassmannian == 4);
    CHECK(essential_set(involution_diagram(P("(1,5)(2,6)(4,7)"), Flavor::O)) ==
          CellSet({{4, 2}, {4, 4}}));
    CHECK(c1.shape_o == Partition({4, 3, 1}));

    auto c2 = classify(IO("(1,3)(2,5)"));
    CHECK(c2.vexillary);
    CHECK_FALSE(c2.sp_vexillary);

    auto c3 = classify(IO("(1,2)(3,4)"));
    CHECK_FALSE(c3.vexillary);
    CHECK(essential_set(involution_diagram(P("(1,2)(3,4)"), Flavor::Sp)).is_sw_ne_chain());
    CHECK_FALSE(c3.sp_vexillary);

    auto cid = classify(Involution::orthogonal(Permutation::identity()));
    CHECK(cid.i_grassmannian == 0);

    CHECK(is_fpf_i_grassmannian(ISp("(1,3)(2,5)(4,6)")));
}

TEST_CASE("parsing and printing") {
    CHECK(parse_permutation("3 5 1 4 2") == P("35142"));
    CHECK(parse_permutation("3,5,1,4,2") == P("35142"));
    CHECK(parse_permutation("(1,5)(2,4)") == Permutation({5, 4, 3, 2, 1}));
    CHECK(to_oneline_string(P("35142")) == "3 5 1 4 2");
    CHECK(to_cycle_string(P("(1,5)(2,4)")) == "(1,5)(2,4)");
    CHECK_THROWS_AS(parse_permutation("3 5 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1,5)(5,2)"), std::invalid_argument);
}

TEST_CASE("cyc") {
    CHECK(cyc(Permutation::identity()) == 0);
    CHECK(cyc(P("(1,2)(3,4)")) == 2);
    for (int r : {1, 2, 3}) CHECK(cyc(fpf_minimal(2 * r)) == r);
}
