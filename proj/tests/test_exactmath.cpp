#include <doctest.h>

#include <random>

#include "polyteach/lp.hpp"

using namespace polyteach;

namespace {

Rational randomRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

Matrix randomMatrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entry(rng);
    }
    return m;
}

}  // namespace

TEST_CASE("rationals stay canonical through construction and arithmetic") {
    CHECK(Rational(4, 2) == Rational(2));
    const Rational r(-3, 6);
    CHECK(numerator(r) == -1);
    CHECK(denominator(r) == 2);
    CHECK(toString(Rational(22, 7)) == "22/7");
    CHECK(toString(Rational(10, 5)) == "2");
    CHECK(toString(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = randomRational(rng);
        const Rational b = randomRational(rng);
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a / b) * b == a);
    }
}

TEST_CASE("parseRational round-trips and rejects malformed input") {
    CHECK(parseRational("22/7") == Rational(22, 7));
    CHECK(parseRational("-3/9") == Rational(-1, 3));
    CHECK(parseRational("5") == Rational(5));
    CHECK(parseRational("-5") == Rational(-5));
    CHECK(toString(parseRational("100/250")) == "2/5");
    CHECK_THROWS_AS(parseRational("1/0"), ParseError);
    CHECK_THROWS_AS(parseRational("a/b"), ParseError);
    CHECK_THROWS_AS(parseRational("1.5"), ParseError);
    CHECK_THROWS_AS(parseRational(""), ParseError);
    CHECK_THROWS_AS(parseRational("1/-2"), ParseError);
}

TEST_CASE("rank on pinned matrices") {
    CHECK(rank(Matrix::Identity(3, 3)) == 3);
    CHECK(rank(Matrix::Zero(2, 4)) == 0);
    Matrix m(3, 2);
    m << Rational(1), Rational(0),
         Rational(2), Rational(0),
         Rational(0), Rational(1);
    CHECK(rank(m) == 2);
}

TEST_CASE("rank is invariant under row permutation and row scaling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = randomMatrix(rng, 4, 3);
        const Eigen::Index r = rank(m);

        Matrix permuted = m;
        permuted.row(0).swap(permuted.row(3));
        permuted.row(1).swap(permuted.row(2));
        CHECK(rank(permuted) == r);

        Matrix scaled = m;
        scaled.row(2) *= Rational(-7, 3);
        CHECK(rank(scaled) == r);
    }
}

TEST_CASE("solveAffine on pinned systems") {
    SUBCASE("identity system is unique") {
        Vector rhs(2);
        rhs << Rational(2), Rational(3);
        const auto sol = solveAffine(Matrix::Identity(2, 2), rhs);
        CHECK(sol.kind == LinearSystemSolution::Kind::Unique);
        CHECK(sol.particular == rhs);
    }
    SUBCASE("one equation in the plane leaves a line") {
        Matrix m(1, 2);
        m << Rational(1), Rational(1);
        Vector rhs(1);
        rhs << Rational(1);
        const auto sol = solveAffine(m, rhs);
        CHECK(sol.kind == LinearSystemSolution::Kind::AffineSubspace);
        CHECK(sol.flatDimension() == 1);
        CHECK(m * sol.particular == rhs);
        CHECK((m * sol.nullBasis).cwiseAbs().sum() == 0);
    }
    SUBCASE("contradictory rows are infeasible") {
        Matrix m(2, 2);
        m << Rational(1), Rational(0),
             Rational(1), Rational(0);
        Vector rhs(2);
        rhs << Rational(0), Rational(1);
        CHECK(solveAffine(m, rhs).kind == LinearSystemSolution::Kind::Infeasible);
    }
    SUBCASE("rhs length mismatch throws") {
        CHECK_THROWS_AS(solveAffine(Matrix::Identity(2, 2), Vector::Zero(3)),
                        std::invalid_argument);
    }
}

TEST_CASE("solveAffine satisfies rank-nullity on random consistent systems") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Matrix m = randomMatrix(rng, 3, 4);
        Vector x0(4);
        for (Eigen::Index j = 0; j < 4; ++j) x0(j) = randomRational(rng);
        const Vector rhs = m * x0;
        const auto sol = solveAffine(m, rhs);
        REQUIRE(sol.kind != LinearSystemSolution::Kind::Infeasible);
        CHECK(sol.flatDimension() == 4 - rank(m));
        CHECK(m * sol.particular == rhs);
        for (Eigen::Index k = 0; k < sol.nullBasis.cols(); ++k) {
            CHECK((m * sol.nullBasis.col(k)).cwiseAbs().sum() == 0);
        }
    }
}

TEST_CASE("inverseExact inverts and rejects singular input") {
    std::mt19937_64 rng(31);
    int inverted = 0;
    while (inverted < 20) {
        const Matrix m = randomMatrix(rng, 3, 3);
        if (rank(m) < 3) {
            CHECK_THROWS_AS(inverseExact(m), std::invalid_argument);
            continue;
        }
        CHECK(inverseExact(m) * m == Matrix::Identity(3, 3));
        ++inverted;
    }
}

namespace {

StrictLP intervalLP(const Rational& lo, const Rational& hi) {
    StrictLP lp;
    lp.dimension = 1;
    Vector e(1);
    e << Rational(1);
    lp.constraints.push_back(StrictConstraint{e, lo, Sense::Greater});
    lp.constraints.push_back(StrictConstraint{e, hi, Sense::Less});
    return lp;
}

}  // namespace

TEST_CASE("strictlyFeasible on pinned systems") {
    SUBCASE("open interval") {
        const auto witness = strictlyFeasible(intervalLP(0, 1));
        REQUIRE(witness.has_value());
        CHECK((*witness)(0) > 0);
        CHECK((*witness)(0) < 1);
    }
    SUBCASE("contradiction") {
        CHECK_FALSE(strictlyFeasible(intervalLP(0, 0)).has_value());
    }
    SUBCASE("open triangle, witness re-checked against every constraint") {
        StrictLP lp;
        lp.dimension = 2;
        Vector ex(2), ey(2), diag(2);
        ex << Rational(1), Rational(0);
        ey << Rational(0), Rational(1);
        diag << Rational(1), Rational(1);
        lp.constraints.push_back(StrictConstraint{ex, Rational(0), Sense::Greater});
        lp.constraints.push_back(StrictConstraint{ey, Rational(0), Sense::Greater});
        lp.constraints.push_back(StrictConstraint{diag, Rational(1), Sense::Less});
        const auto witness = strictlyFeasible(lp);
        REQUIRE(witness.has_value());
        CHECK(satisfiesStrictly(*witness, lp));
    }
}

TEST_CASE("strictlyFeasible witness always satisfies strictly; verdict is scale-stable") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<long> scaleNum(1, 5);
    for (int trial = 0; trial < 80; ++trial) {
        StrictLP lp;
        lp.dimension = 2;
        for (int c = 0; c < 4; ++c) {
            Vector normal(2);
            normal << Rational(entry(rng)), Rational(entry(rng));
            if (normal(0) == 0 && normal(1) == 0) normal(0) = 1;
            lp.constraints.push_back(StrictConstraint{
                normal, Rational(entry(rng)),
                (entry(rng) & 1) ? Sense::Greater : Sense::Less});
        }
        const auto witness = strictlyFeasible(lp);
        if (witness) CHECK(satisfiesStrictly(*witness, lp));

        StrictLP scaled = lp;
        for (StrictConstraint& c : scaled.constraints) {
            const Rational factor(scaleNum(rng), scaleNum(rng));
            c.normal *= factor;
            c.bias *= factor;
        }
        CHECK(strictlyFeasible(scaled).has_value() == witness.has_value());
    }
}
