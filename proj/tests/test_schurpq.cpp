#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <schubcalc/schur_pq.hpp>

using namespace schubcalc;

static Polynomial X(int i) { return Polynomial::variable(xv(i)); }

static std::vector<VarRef> xvars(int n) {
    std::vector<VarRef> v;
    for (int i = 1; i <= n; ++i) v.push_back(xv(i));
    return v;
}

// strict partitions with parts drawn from {1..maxpart}
static std::vector<Partition> strict_partitions_upto(int maxpart) {
    std::vector<Partition> out;
    for (unsigned mask = 0; mask < (1u << maxpart); ++mask) {
        Partition p;
        for (int v = maxpart; v >= 1; --v)
            if (mask >> (v - 1) & 1) p.push_back(v);
        out.push_back(p);
    }
    return out;
}

TEST_CASE("pfaffian base cases") {
    Polynomial a = X(1), b = X(2), c = X(3), d = X(4), e = X(5), f = X(6);
    SquareMatrix<Polynomial> m2 = {{Polynomial(), a}, {-a, Polynomial()}};
    CHECK(pfaffian(m2) == a);
    SquareMatrix<Polynomial> m4 = {{Polynomial(), a, b, c},
                                   {-a, Polynomial(), d, e},
                                   {-b, -d, Polynomial(), f},
                                   {-c, -e, -f, Polynomial()}};
    CHECK(pfaffian(m4) == a * f - b * e + c * d);
    CHECK(pfaffian(SquareMatrix<Polynomial>{}) == Polynomial(1));

    SquareMatrix<Polynomial> odd(3, std::vector<Polynomial>(3));
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
    SquareMatrix<Polynomial> notskew = {{Polynomial(), a}, {a, Polynomial()}};
    CHECK_THROWS_AS(pfaffian(notskew), std::invalid_argument);
}

TEST_CASE("pf squared equals det on random integer skew matrices up to size 8") {
    std::mt19937 gen(20240811);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n : {2, 4, 6, 8})
        for (int trial = 0; trial < 4; ++trial) {
            SquareMatrix<Int> a(n, std::vector<Int>(n, Int(0)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = entry(gen);
                    a[i][j] = v;
                    a[j][i] = -v;
                }
            Int pf = pfaffian(a);
            REQUIRE(pf * pf == determinant(a));
        }
}

TEST_CASE("one-row Q values") {
    auto v2 = xvars(2);
    SeriesFamily fam = classical_family(v2, 1, 3);
    CHECK(q_row(0, fam.entries[0]) == Polynomial(1));
    CHECK(q_row(1, fam.entries[0]) == 2 * X(1) + 2 * X(2));
    CHECK(q_lambda({}, SeriesFamily()) == Polynomial(1));
}

TEST_CASE("two-row antisymmetry and zero padding, classically") {
    auto v3 = xvars(3);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            SeriesFamily fam = classical_family(v3, 2, a + b);
            Polynomial qab = q_pair(a, b, fam.entries[0], fam.entries[1]);
            Polynomial qba = q_pair(b, a, fam.entries[0], fam.entries[1]);
            REQUIRE(qab == -qba);
        }
    SeriesFamily f2 = classical_family(v3, 2, 2);
    CHECK(q_pair(0, 0, f2.entries[0], f2.entries[1]).is_zero());

    // swapping adjacent distinct parts flips the sign; appending 0 changes nothing
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> part(0, 4);
    for (int trial = 0; trial < 25; ++trial) {
        int len = 1 + trial % 3;
        std::vector<int> seq(len);
        bool allzero = true;
        for (int& v : seq) { v = part(gen); allzero &= (v == 0); }
        if (allzero) continue;
        Polynomial base = q_lambda_classical(seq, v3);
        for (int i = 0; i + 1 < len; ++i) {
            if (seq[i] == seq[i + 1]) continue;
            std::vector<int> swapped = seq;
            std::swap(swapped[i], swapped[i + 1]);
            REQUIRE(q_lambda_classical(swapped, v3) == -base);
        }
        std::vector<int> padded = seq;
        padded.push_back(0);
        REQUIRE(q_lambda_classical(padded, v3) == base);
    }

    // the literal Pfaffian itself alternates on distinct positive parts
    SeriesFamily fam3 = classical_family(v3, 3, 9);
    Polynomial sorted = q_lambda({4, 3, 1}, fam3);
    CHECK(q_lambda({3, 4, 1}, fam3) == -sorted);
    CHECK(q_lambda({3, 1, 4}, fam3) == sorted);
}

TEST_CASE("repeated parts vanish") {
    auto v3 = xvars(3);
    CHECK(q_lambda_classical({2, 2}, v3).is_zero());
    CHECK(q_lambda_classical({3, 1, 1}, v3).is_zero());
}

TEST_CASE("Q_431 expands as the printed Pfaffian") {
    auto v4 = xvars(4);
    SeriesFamily fam = classical_family(v4, 4, 8);
    const TruncatedSeries& c = fam.entries[0];
    Polynomial q43 = q_pair(4, 3, c, c);
    Polynomial q41 = q_pair(4, 1, c, c);
    Polynomial q31 = q_pair(3, 1, c, c);
    Polynomial expect = q43 * q_row(1, c) - q41 * q_row(3, c) + q_row(4, c) * q31;
    CHECK(q_lambda_classical({4, 3, 1}, v4) == expect);
}

TEST_CASE("tableau expansion basics") {
    CHECK(q_lambda_tableaux(StrictPartition({1}), {xv(1)}) == 2 * X(1));
    CHECK(q_lambda_tableaux(StrictPartition(), xvars(3)) == Polynomial(1));
    // two letters, shape (2,1): check symmetry and leading coefficient 2^2
    Polynomial q21 = q_lambda_tableaux(StrictPartition({2, 1}), xvars(2));
    CHECK(q21.swap_vars(xv(1), xv(2)) == q21);
    Monomial lead;
    lead.factors = {{xv(1), 2}, {xv(2), 1}};
    CHECK(q21.coefficient(lead) == 4);
}

TEST_CASE("tableau route matches the Pfaffian route, strict shapes in (4,3,2,1)") {
    for (int nletters : {3, 4}) {
        auto vars = xvars(nletters);
        for (const Partition& lam : strict_partitions_upto(4)) {
            Polynomial tab = lam.empty() ? Polynomial(1)
                                         : q_lambda_tableaux(StrictPartition(lam), vars);
            REQUIRE(q_lambda_classical(lam, vars) == tab);
        }
    }
}

TEST_CASE("P integrality for every strict shape in (4,3,2,1)") {
    auto vars = xvars(4);
    for (const Partition& lam : strict_partitions_upto(4)) {
        Polynomial p = p_lambda_classical(lam, vars);      // throws on failure
        if (lam == Partition({2})) {
            std::vector<VarRef> v = vars;
            CHECK(p == complete_homogeneous(2, v) + elementary(2, v));
        }
        if (lam.empty()) CHECK(p == Polynomial(1));
    }
}

TEST_CASE("multiparameter Q specializations") {
    auto vars = xvars(3);
    std::vector<Polynomial> zero_t(5, Polynomial());

    for (const Partition& lam : strict_partitions_upto(3)) {
        if (lam.empty()) continue;
        StrictPartition sp(lam);
        REQUIRE(multiparameter_q(sp, vars, zero_t) == q_lambda_tableaux(sp, vars));
    }

    // Q_{(1)}(x_1; t) = (x_1 - t_1) + (x_1 + t_1) = 2 x_1
    std::vector<Polynomial> t = {Polynomial::variable(yv(1)), Polynomial::variable(yv(2))};
    CHECK(multiparameter_q(StrictPartition({1}), {xv(1)}, t) == 2 * X(1));

    // independence of t_r for r > lambda_1
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> val(-4, 4);
    StrictPartition lam21({2, 1});
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial> t1 = {Polynomial(val(gen)), Polynomial(val(gen)),
                                      Polynomial(val(gen)), Polynomial(val(gen))};
        std::vector<Polynomial> t2 = t1;
        t2[2] = Polynomial(val(gen)); // indices beyond lambda_1 = 2
        t2[3] = Polynomial(val(gen));
        REQUIRE(multiparameter_q(lam21, vars, t1) == multiparameter_q(lam21, vars, t2));
    }

    CHECK_THROWS_AS(multiparameter_q(StrictPartition({3}), vars, t), std::invalid_argument);
}

TEST_CASE("triangular expansion in the Q basis") {
    auto vars = xvars(4);
    for (const Partition& lam : strict_partitions_upto(3)) {
        Polynomial f = lam.empty() ? Polynomial(1) : q_lambda_tableaux(StrictPartition(lam), vars);
        auto coeffs = expand_in_schur_q(f, 4);
        REQUIRE(coeffs.size() == 1);
        REQUIRE(coeffs.begin()->first == lam);
        REQUIRE(coeffs.begin()->second == 1);
    }
    // a positive combination round-trips
    Polynomial combo = Polynomial(3) * q_lambda_tableaux(StrictPartition({2, 1}), vars) +
                       q_lambda_tableaux(StrictPartition({3}), vars);
    auto coeffs = expand_in_schur_q(combo, 4);
    CHECK(coeffs[Partition({2, 1})] == 3);
    CHECK(coeffs[Partition({3})] == 1);
}
