#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "weyl/envelope.hpp"

using namespace weyl;

namespace {

MapAlgebra context2() { return MapAlgebra(2, trunc_poly(2)); }

UElement random_uelement(const MapAlgebra& ctx, std::mt19937& rng, int max_words, int max_len) {
    std::uniform_int_distribution<int> wordcount(1, max_words);
    std::uniform_int_distribution<int> length(0, max_len);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> cartan(0, 1);
    std::uniform_int_distribution<int> simple(1, ctx.n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> basis(0, ctx.coeff.dim() - 1);
    UElement u;
    const int words = wordcount(rng);
    for (int w = 0; w < words; ++w) {
        Word word;
        const int len = length(rng);
        for (int l = 0; l < len; ++l) {
            const int i = simple(rng);
            const ChevalleyGenerator z =
                cartan(rng) ? ChevalleyGenerator::cartan(i)
                            : (sign(rng) ? ChevalleyGenerator::raising(i)
                                         : ChevalleyGenerator::lowering(i));
            word.push_back(CurrentGenerator{z, basis(rng)});
        }
        u.add_term(std::move(word), Rational(coeff(rng)));
    }
    return u;
}

Tensor random_tensor(const MapAlgebra& ctx, std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> termcount(1, 3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> weight(1, ctx.n);
    std::uniform_int_distribution<int> basis(0, ctx.coeff.dim() - 1);
    Tensor t(rank);
    const int terms = termcount(rng);
    for (int k = 0; k < terms; ++k) {
        SlotSequence slots;
        for (int p = 0; p < rank; ++p) slots.push_back(SlotIndex{weight(rng), basis(rng)});
        t.add_term(std::move(slots), Rational(coeff(rng)));
    }
    return t;
}

}  // namespace

TEST_CASE("gen expands an algebra element over its coordinates") {
    const MapAlgebra ctx = context2();

    const UElement h = gen(ChevalleyGenerator::cartan(1), ctx.coeff.unit());
    REQUIRE(h.terms().size() == 1);
    CHECK(h.coeff(Word{{ChevalleyGenerator::cartan(1), 0}}) == 1);

    AlgebraElement two_t;
    two_t.add_term(1, 2);
    const UElement x = gen(ChevalleyGenerator::lowering(1), two_t);
    REQUIRE(x.terms().size() == 1);
    CHECK(x.coeff(Word{{ChevalleyGenerator::lowering(1), 1}}) == 2);

    CHECK(gen(ChevalleyGenerator::cartan(1), AlgebraElement{}).is_zero());
}

TEST_CASE("u_mul concatenates words bilinearly") {
    const MapAlgebra ctx = context2();
    const UElement h1a = gen(ChevalleyGenerator::cartan(1), ctx.coeff.basis_element(0));
    const UElement h1b = gen(ChevalleyGenerator::cartan(1), ctx.coeff.basis_element(1));

    CHECK(u_mul(UElement::one(), h1a) == h1a);
    CHECK(u_mul(h1a, UElement::one()) == h1a);

    const UElement product = u_mul(h1a, h1b);
    REQUIRE(product.terms().size() == 1);
    const Word expected{{ChevalleyGenerator::cartan(1), 0}, {ChevalleyGenerator::cartan(1), 1}};
    CHECK(product.coeff(expected) == 1);
}

TEST_CASE("coproduct of the identity and of single generators") {
    const MapAlgebra ctx = context2();
    for (int k = 1; k <= 4; ++k) {
        const TensorUElement delta_one = coproduct(UElement::one(), k);
        REQUIRE(delta_one.terms().size() == 1);
        CHECK(delta_one.terms().begin()->first == std::vector<Word>(static_cast<std::size_t>(k)));
        CHECK(delta_one.terms().begin()->second == 1);
    }

    const UElement zb = gen(ChevalleyGenerator::lowering(1), ctx.coeff.basis_element(1));
    const TensorUElement split = coproduct(zb, 2);
    REQUIRE(split.terms().size() == 2);  // (z(x)b, 1) + (1, z(x)b)
    const Word letter{{ChevalleyGenerator::lowering(1), 1}};
    CHECK(split.terms().count({letter, Word{}}) == 1);
    CHECK(split.terms().count({Word{}, letter}) == 1);
}

TEST_CASE("coproduct of a two-letter word expands to all placements") {
    const MapAlgebra ctx = context2();
    const UElement w =
        u_mul(gen(ChevalleyGenerator::cartan(1), ctx.coeff.basis_element(0)),
              gen(ChevalleyGenerator::cartan(1), ctx.coeff.basis_element(1)));
    const TensorUElement expanded = coproduct(w, 2);
    CHECK(expanded.terms().size() == 4);  // (ab,1),(a,b),(b,a),(1,ab)
}

TEST_CASE("act implements the Leibniz rule") {
    const MapAlgebra ctx = context2();
    const Tensor w2 = highest_weight_tensor(ctx.coeff, 2);

    const Tensor moved = act(ctx, gen(ChevalleyGenerator::lowering(1), ctx.coeff.basis_element(1)), w2);
    Tensor expected(2);
    expected.add_term({SlotIndex{2, 1}, SlotIndex{1, 0}}, 1);
    expected.add_term({SlotIndex{1, 0}, SlotIndex{2, 1}}, 1);
    CHECK(moved == expected);

    CHECK(act(ctx, UElement::one(), moved) == moved);

    for (int m = 0; m <= 3; ++m) {
        const Tensor wm = highest_weight_tensor(ctx.coeff, m);
        CHECK(act(ctx, gen(ChevalleyGenerator::cartan(1), ctx.coeff.unit()), wm) == rational(m) * wm);
    }
}

TEST_CASE("action is a homomorphism for the product") {
    const MapAlgebra ctx = context2();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const UElement u = random_uelement(ctx, rng, 2, 2);
        const UElement v = random_uelement(ctx, rng, 2, 2);
        const Tensor t = random_tensor(ctx, rng, 2);
        CHECK(act(ctx, u_mul(u, v), t) == act(ctx, u, act(ctx, v, t)));
    }
}

TEST_CASE("action agrees with the componentwise coproduct action") {
    const MapAlgebra ctx = context2();
    std::mt19937 rng(29);
    for (int rank = 1; rank <= 3; ++rank)
        for (int trial = 0; trial < 10; ++trial) {
            const UElement u = random_uelement(ctx, rng, 2, 3);
            const Tensor t = random_tensor(ctx, rng, rank);
            CHECK(act(ctx, u, t) == act(ctx, coproduct(u, rank), t));
        }
}

TEST_CASE("coproduct factorization on short words") {
    const MapAlgebra ctx = context2();
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const UElement u = random_uelement(ctx, rng, 1, 3);
        for (int k = 2; k <= 3; ++k) {
            const TensorUElement direct = coproduct(u, k + 1);
            const TensorUElement composed = detail::expand_last(coproduct(u, k));
            CHECK(direct == composed);
        }
    }
}

TEST_CASE("gen is linear in the algebra coordinate") {
    const MapAlgebra ctx = context2();
    AlgebraElement a = ctx.coeff.basis_element(0);
    AlgebraElement b = ctx.coeff.basis_element(1);
    AlgebraElement sum = a;
    sum += b;
    const auto z = ChevalleyGenerator::raising(1);
    CHECK(gen(z, sum) == gen(z, a) + gen(z, b));
    CHECK(gen(z, rational(3) * a) == rational(3) * gen(z, a));
}
