#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "weyl/algebra.hpp"

using weyl::AlgebraElement;
using weyl::AlgebraSpec;
using weyl::Multiset;
using weyl::Rational;

namespace {

AlgebraElement element(std::initializer_list<std::pair<int, long>> coords) {
    AlgebraElement e;
    for (const auto& [index, value] : coords) e.add_term(index, Rational(value));
    return e;
}

AlgebraElement random_element(const AlgebraSpec& spec, std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    AlgebraElement e;
    for (int i = 0; i < spec.dim(); ++i) e.add_term(i, Rational(coeff(rng)));
    return e;
}

}  // namespace

TEST_CASE("truncated polynomial algebras") {
    const AlgebraSpec one = weyl::trunc_poly(1);
    CHECK(one.dim() == 1);
    CHECK(one.basis_labels() == std::vector<std::string>{"1"});
    CHECK_NOTHROW(one.validate());

    const AlgebraSpec two = weyl::trunc_poly(2);
    const int t = two.index_of("t");
    CHECK(alg_mul(two, two.basis_element(t), two.basis_element(t)).is_zero());

    const AlgebraSpec three = weyl::trunc_poly(3);
    CHECK(alg_mul(three, three.basis_element(1), three.basis_element(1)) ==
          three.basis_element(three.index_of("t^2")));

    CHECK_THROWS_AS(weyl::trunc_poly(0), std::invalid_argument);
}

TEST_CASE("validation is total over all basis triples") {
    for (int N = 1; N <= 4; ++N) CHECK_NOTHROW(weyl::trunc_poly(N).validate());
}

TEST_CASE("validation reports distinct failures naming the offenders") {
    using weyl::algebra_error;

    // b1*b1 = b1 but b1*b0 = b1 breaks nothing; break commutativity instead
    std::vector<std::vector<AlgebraElement>> non_commutative(2, std::vector<AlgebraElement>(2));
    non_commutative[0][0].add_term(0, 1);
    non_commutative[0][1].add_term(1, 1);
    non_commutative[1][0].add_term(0, 1);  // b1 b0 = 1 != t = b0 b1
    const AlgebraSpec bad_comm({"1", "t"}, 0, non_commutative);
    try {
        bad_comm.validate();
        FAIL("expected commutativity failure");
    } catch (const algebra_error& error) {
        CHECK(error.which == algebra_error::kind::commutativity);
        CHECK(std::string(error.what()).find("(0,1)") != std::string::npos);
    }

    // unit row not the identity map
    std::vector<std::vector<AlgebraElement>> bad_unit_mul(2, std::vector<AlgebraElement>(2));
    bad_unit_mul[0][0].add_term(0, 1);
    bad_unit_mul[0][1].add_term(1, 2);
    bad_unit_mul[1][0].add_term(1, 2);
    const AlgebraSpec bad_unit({"1", "t"}, 0, bad_unit_mul);
    try {
        bad_unit.validate();
        FAIL("expected unit failure");
    } catch (const algebra_error& error) {
        CHECK(error.which == algebra_error::kind::unit);
    }

    // commutative and unital but not associative: (tt)s = ss = t, t(ts) = 0
    std::vector<std::vector<AlgebraElement>> non_assoc(3, std::vector<AlgebraElement>(3));
    auto set = [&non_assoc](int i, int j, int k, long value) {
        non_assoc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add_term(k, Rational(value));
    };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1);
    set(1, 0, 1, 1); set(2, 0, 2, 1);
    set(1, 1, 2, 1);  // t*t = s, t*s = s*t = 0
    set(2, 2, 1, 1);  // s*s = t
    const AlgebraSpec bad_assoc({"1", "t", "s"}, 0, non_assoc);
    try {
        bad_assoc.validate();
        FAIL("expected associativity failure");
    } catch (const algebra_error& error) {
        CHECK(error.which == algebra_error::kind::associativity);
        CHECK(std::string(error.what()).find("basis triple") != std::string::npos);
    }

    CHECK_THROWS_AS(AlgebraSpec({"1", "1"}, 0,
                                std::vector<std::vector<AlgebraElement>>(
                                    2, std::vector<AlgebraElement>(2))),
                    algebra_error);
    CHECK_THROWS_AS(AlgebraSpec({"1", "a:b"}, 0,
                                std::vector<std::vector<AlgebraElement>>(
                                    2, std::vector<AlgebraElement>(2))),
                    algebra_error);
}

TEST_CASE("multiplication is bilinear, commutative and unital") {
    const AlgebraSpec spec = weyl::trunc_poly(3);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const AlgebraElement x = random_element(spec, rng);
        const AlgebraElement y = random_element(spec, rng);
        CHECK(alg_mul(spec, x, y) == alg_mul(spec, y, x));
        CHECK(alg_mul(spec, spec.unit(), y) == y);
    }
    CHECK(alg_mul(spec, element({{0, 1}, {1, 2}}), element({{1, 1}})) ==
          element({{1, 1}, {2, 2}}));
}

TEST_CASE("pi multiplies out a multiset of basis elements") {
    const AlgebraSpec three = weyl::trunc_poly(3);
    CHECK(weyl::pi(three, {}) == three.unit());
    CHECK(weyl::pi(three, Multiset<int>::scaled(1, 2)) == three.basis_element(2));

    const AlgebraSpec two = weyl::trunc_poly(2);
    CHECK(weyl::pi(two, Multiset<int>::scaled(1, 2)).is_zero());

    for (int i = 0; i < three.dim(); ++i)
        CHECK(weyl::pi(three, Multiset<int>::characteristic(i)) == three.basis_element(i));
}

TEST_CASE("pi is multiplicative over multiset addition") {
    const AlgebraSpec spec = weyl::trunc_poly(4);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> mult(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Multiset<int> psi, rho;
        for (int i = 0; i < spec.dim(); ++i) {
            psi.add(i, mult(rng));
            rho.add(i, mult(rng));
        }
        CHECK(weyl::pi(spec, psi + rho) == alg_mul(spec, weyl::pi(spec, psi), weyl::pi(spec, rho)));
    }
}
