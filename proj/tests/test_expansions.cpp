#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "oracles.hpp"
#include "siegel/error.hpp"
#include "siegel/expansion.hpp"
#include "siegel/lattice.hpp"
#include "siegel/symmat.hpp"

using namespace siegel;

namespace {

SymMat sm(const std::vector<std::vector<int64_t>>& rows) { return SymMat::from_rows(rows); }

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("positive semidefiniteness of index matrices") {
    CHECK(psd_check(sm({{2, 2}, {2, 2}})));
    CHECK_FALSE(psd_check(sm({{0, 1}, {1, 0}})));
    CHECK(psd_check(SymMat::zero(2)));
    CHECK(psd_check(sm({{2}})));
    CHECK_FALSE(psd_check(sm({{-2}})));
    CHECK(psd_check(sm({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}})));
    CHECK_FALSE(psd_check(sm({{2, 0, 0}, {0, 2, 3}, {0, 3, 2}})));
    CHECK(psd_check_int(2, {2, -1, -1, 2}));
    CHECK_FALSE(psd_check_int(2, {2, 3, 3, 2}));
}

TEST_CASE("symmetric matrix helpers") {
    SymMat a = sm({{2, 1}, {1, 4}});
    CHECK(a.at(0, 1) == 1);
    CHECK(a.max_diagonal() == 4);
    CHECK(a.is_symmetric());
    CHECK(SymMat::zero(3).max_diagonal() == 0);
    CHECK(a == sm({{2, 1}, {1, 4}}));
    CHECK(sm({{0, 0}, {0, 2}}) < sm({{2, -1}, {-1, 2}}));
    CHECK(sm({{2, -1}, {-1, 2}}) < sm({{2, 0}, {0, 0}}));

    CHECK(int_matrix_det64(2, {2, 1, 1, 4}) == 7);
    CHECK(int_matrix_det64(1, {-3}) == -3);
    CHECK(int_matrix_det64(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}) == 1);
    CHECK(int_matrix_det(2, {2, 0, 0, 2}) == 4);
}

TEST_CASE("index enumeration inside the truncation box") {
    auto deg1 = enumerate_indices(1, 2);
    REQUIRE(deg1.size() == 3);
    CHECK(deg1[0] == sm({{0}}));
    CHECK(deg1[1] == sm({{2}}));
    CHECK(deg1[2] == sm({{4}}));

    auto deg2 = enumerate_indices(2, 1);
    std::vector<SymMat> expect = {
        sm({{0, 0}, {0, 0}}), sm({{0, 0}, {0, 2}}), sm({{2, -2}, {-2, 2}}),
        sm({{2, -1}, {-1, 2}}), sm({{2, 0}, {0, 0}}), sm({{2, 0}, {0, 2}}),
        sm({{2, 1}, {1, 2}}),  sm({{2, 2}, {2, 2}}),
    };
    std::sort(expect.begin(), expect.end());
    CHECK(deg2 == expect);

    auto deg2zero = enumerate_indices(2, 0);
    REQUIRE(deg2zero.size() == 1);
    CHECK(deg2zero[0] == SymMat::zero(2));

    for (int g : {1, 2, 3}) {
        auto all = enumerate_indices(g, 1);
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& s : all) {
            CHECK(psd_check(s));
            CHECK(s.max_diagonal() <= 2);
            bool even = true;
            for (int i = 0; i < g; ++i)
                even = even && s.at(i, i) % 2 == 0;
            CHECK(even);
        }
    }
}

TEST_CASE("insertion validates indices against the header") {
    RationalSiegel f;
    f.degree = 1;
    f.weight = 4;
    f.truncation = 2;
    f.complete = true;
    f.insert(sm({{2}}), Rational(240));
    CHECK(f.coefficient(sm({{2}})) == 240);
    CHECK(f.coefficient(sm({{4}})) == 0);

    CHECK(code_of([&] { f.insert(sm({{6}}), Rational(1)); }) == "InvalidIndex");
    CHECK(code_of([&] { f.insert(sm({{3}}), Rational(1)); }) == "InvalidIndex");
    CHECK(code_of([&] { f.insert(sm({{-2}}), Rational(1)); }) == "InvalidIndex");
    CHECK(code_of([&] { f.insert(sm({{2}}), Rational(9)); }) == "InvalidIndex");
    CHECK(code_of([&] { f.insert(sm({{0, 0}, {0, 0}}), Rational(1)); }) == "DegreeMismatch");

    size_t before = f.coefficients.size();
    f.insert(sm({{4}}), Rational(0));
    CHECK(f.coefficients.size() == before);

    RationalSiegel g2;
    g2.degree = 2;
    g2.truncation = 1;
    CHECK(code_of([&] { g2.insert(sm({{2, 3}, {3, 2}}), Rational(1)); }) == "InvalidIndex");
    g2.insert(sm({{2, 1}, {1, 2}}), Rational(1));

    RationalSiegel scaled;
    scaled.degree = 1;
    scaled.truncation = 1;
    scaled.denominator = 4;
    scaled.insert(sm({{3}}), Rational(1)); // odd diagonal is fine once d > 1
    CHECK(scaled.coefficient(sm({{3}})) == 1);

    CHECK_THROWS_AS(sm({{0, 1}, {2, 0}}), Error);
}

TEST_CASE("linear combinations match a dense series oracle") {
    auto e4 = classical_degree1(ClassicalForm::e4, 10);
    auto e6 = classical_degree1(ClassicalForm::e6, 10);
    auto delta = classical_degree1(ClassicalForm::delta, 10);

    auto e4cubed = pointwise_multiply(pointwise_multiply(e4, e4), e4);
    auto e6sq = pointwise_multiply(e6, e6);
    auto relation = linear_combine<Rational>(
        {{Rational(1), e4cubed}, {Rational(-1), e6sq}, {Rational(-1728), delta}});
    CHECK(relation.coefficients.empty());
    CHECK(relation.complete);
    CHECK(relation.weight == 12);
    CHECK(relation.truncation == 10);

    auto combo = linear_combine<Rational>({{Rational(5), e4cubed}, {Rational(7), delta}});
    auto want = oracle::qlin(Rational(5), oracle::to_qseries(e4cubed), Rational(7),
                             oracle::to_qseries(delta), 11);
    CHECK(oracle::to_qseries(combo) == want);

    auto doubled = linear_combine<Rational>({{Rational(2), e4}});
    CHECK(doubled.coefficient(sm({{2}})) == 480);
    CHECK(doubled.weight == 4);

    CHECK(code_of([&] {
              linear_combine<Rational>({{Rational(1), e4}, {Rational(1), e6}});
          }) == "WeightMismatch");
    CHECK(code_of([&] { linear_combine<Rational>({}); }) == "InvalidArgument");

    RationalSiegel deg2;
    deg2.degree = 2;
    deg2.weight = 4;
    CHECK(code_of([&] {
              linear_combine<Rational>({{Rational(1), e4}, {Rational(1), deg2}});
          }) == "DegreeMismatch");

    RationalSiegel rescaled = e4;
    rescaled.denominator = 2;
    CHECK(code_of([&] {
              linear_combine<Rational>({{Rational(1), e4}, {Rational(1), rescaled}});
          }) == "DenominatorMismatch");

    auto shorter = classical_degree1(ClassicalForm::e4, 3);
    auto trimmed = linear_combine<Rational>({{Rational(1), e4}, {Rational(1), shorter}});
    CHECK(trimmed.truncation == 3);
    CHECK(trimmed.coefficient(sm({{2}})) == 480);
}

TEST_CASE("pointwise products match a dense series oracle") {
    auto e4 = classical_degree1(ClassicalForm::e4, 6);
    auto prod = pointwise_multiply(e4, e4);
    CHECK(prod.weight == 8);
    CHECK(prod.truncation == 6);
    CHECK(prod.complete);
    CHECK(prod.coefficient(sm({{2}})) == 480);
    CHECK(oracle::to_qseries(prod) == oracle::qmul(oracle::to_qseries(e4), oracle::to_qseries(e4), 7));

    RationalSiegel one;
    one.degree = 1;
    one.weight = 0;
    one.truncation = 6;
    one.complete = true;
    one.insert(SymMat::zero(1), Rational(1));
    CHECK(pointwise_multiply(e4, one) == e4);

    RationalSiegel zero = one;
    zero.coefficients.clear();
    CHECK(pointwise_multiply(e4, zero).coefficients.empty());

    RationalSiegel partial = e4;
    partial.complete = false;
    CHECK(code_of([&] { pointwise_multiply(e4, partial); }) == "IncompleteData");

    RationalSiegel deg2;
    deg2.degree = 2;
    deg2.complete = true;
    CHECK(code_of([&] { pointwise_multiply(e4, deg2); }) == "DegreeMismatch");
}

TEST_CASE("pointwise products in a cyclotomic coefficient ring") {
    CyclotomicSiegel a;
    a.degree = 1;
    a.weight = 1;
    a.truncation = 1;
    a.complete = true;
    a.cyclotomic_order = 4;
    a.insert(SymMat::zero(1), root_of_unity(1, 4));
    a.insert(sm({{2}}), Cyclotomic::from_rational(Rational(3), 4));

    auto sq = pointwise_multiply(a, a);
    CHECK(sq.coefficient(SymMat::zero(1)) == Cyclotomic::from_rational(Rational(-1), 4));
    CHECK(sq.coefficient(sm({{2}})) == root_of_unity(1, 4).scaled(Rational(6)));

    CyclotomicSiegel b = a;
    b.cyclotomic_order = 8;
    b.coefficients.clear();
    CHECK(code_of([&] {
              linear_combine<Cyclotomic>({{Rational(1), a}, {Rational(1), b}});
          }) == "ScalarRingMismatch");
    CHECK(code_of([&] { a.insert(sm({{2}}), root_of_unity(1, 8)); }) == "ScalarRingMismatch");
}

TEST_CASE("unimodular substitutions re-index the expansion") {
    RationalSiegel f;
    f.degree = 2;
    f.weight = 4;
    f.truncation = 2;
    f.complete = true;
    f.insert(SymMat::zero(2), Rational(1));
    f.insert(sm({{2, 1}, {1, 2}}), Rational(7));
    f.insert(sm({{2, 0}, {0, 4}}), Rational(3));

    CHECK(unimodular_transform(f, {1, 0, 0, 1}) == f);

    auto swapped = unimodular_transform(f, {0, 1, 1, 0});
    CHECK(swapped.complete);
    CHECK(swapped.coefficient(sm({{4, 0}, {0, 2}})) == 3);
    CHECK(swapped.coefficient(sm({{2, 1}, {1, 2}})) == 7);
    CHECK(unimodular_transform(swapped, {0, 1, 1, 0}) == f);

    auto negated = unimodular_transform(f, {1, 0, 0, -1});
    CHECK(negated.complete);
    CHECK(negated.coefficient(sm({{2, -1}, {-1, 2}})) == 7);
    CHECK(negated.coefficient(sm({{2, 0}, {0, 4}})) == 3);

    auto sheared = unimodular_transform(f, {1, 1, 0, 1});
    CHECK_FALSE(sheared.complete);
    CHECK(sheared.coefficient(SymMat::zero(2)) == 1);
    CHECK(sheared.coefficients.size() == 1); // both nonzero indices leave the box

    CHECK(is_signed_permutation(2, {0, 1, 1, 0}));
    CHECK(is_signed_permutation(2, {1, 0, 0, -1}));
    CHECK_FALSE(is_signed_permutation(2, {1, 1, 0, 1}));

    CHECK(code_of([&] { unimodular_transform(f, {2, 0, 0, 1}); }) == "NonUnimodular");
    CHECK_THROWS_AS(unimodular_transform(f, {1, 0, 0}), Error);
}
