#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "radrank/claborn.hpp"
#include "radrank/errors.hpp"
#include "radrank/model.hpp"
#include "random_models.hpp"

using namespace radrank;
using helpers::q;
using helpers::vec;

namespace {

Family all_nonempty(std::size_t k)
{
    Family f;
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << k); ++b) f.push_back(PrimeSet::from_bits(b));
    canonicalize(f);
    return f;
}

}  // namespace

TEST_CASE("Model sorts primes and checks its input")
{
    const Model m(1, {{"b", vec({1})}, {"a", vec({-1})}});
    CHECK(m.ids() == std::vector<PrimeId>{"a", "b"});
    CHECK(m.class_of(0) == vec({-1}));
    CHECK(m.index_of("b") == 1);
    CHECK_THROWS_AS(m.index_of("c"), ArgumentError);
    CHECK_THROWS_AS(Model(1, {}), ArgumentError);
    CHECK_THROWS_AS(Model(1, {{"a", vec({1})}, {"a", vec({2})}}), ArgumentError);
    CHECK_THROWS_AS(Model(2, {{"a", vec({1})}}), ShapeError);
}

TEST_CASE("v_membership examples")
{
    const Model d1 = gen_d1(4);
    CHECK(d1.classes() == helpers::cols(1, {{1}, {-1}, {1}, {-1}}));
    CHECK(v_membership(d1, d1.set_of({"P0", "P1"})));
    CHECK_FALSE(v_membership(d1, d1.set_of({"P0", "P2"})));

    const Model torsion = helpers::torsion_model(3, 2);
    for (PrimeSet s : all_nonempty(3)) CHECK(v_membership(torsion, s));

    CHECK_THROWS_AS(d1.set_of({"P7"}), ArgumentError);
    CHECK_THROWS_AS(v_membership(d1, PrimeSet()), ArgumentError);
    CHECK_THROWS_AS(v_membership(d1, PrimeSet::singleton(9)), ArgumentError);
}

TEST_CASE("enumerate_V examples")
{
    CHECK(enumerate_V(gen_d1(2)) == Family{PrimeSet::first(2)});
    CHECK(enumerate_V(helpers::torsion_model(2)) == all_nonempty(2));
    const Model d3 = gen_d3(2);
    CHECK(d3.classes() == helpers::cols(1, {{0}, {1}}));
    CHECK(enumerate_V(d3) == Family{PrimeSet::singleton(0)});
    CHECK_THROWS_AS(enumerate_V(gen_d1(5), 4), ResourceError);
}

TEST_CASE("PrincipalSupports from members")
{
    const PrincipalSupports v({"a", "b", "c"}, Family{PrimeSet::first(2), PrimeSet::first(3)});
    CHECK(v.contains(PrimeSet::first(2)));
    CHECK_FALSE(v.contains(PrimeSet::singleton(0)));
    CHECK_FALSE(v.contains(PrimeSet::singleton(5)));
    CHECK(v.ids_of(PrimeSet::first(2)) == std::vector<PrimeId>{"a", "b"});
    CHECK(v.members().size() == 2);
}

TEST_CASE("validate examples")
{
    auto r = validate(gen_d1(4));
    CHECK(r.positively_spanning);
    CHECK(r.witness_rich);
    CHECK(r.linear_rank == 1);

    r = validate(helpers::model(1, {{1}}));
    CHECK_FALSE(r.positively_spanning);

    r = validate(helpers::torsion_model(3));
    CHECK(r.positively_spanning);
    CHECK(r.linear_rank == 0);

    CHECK_FALSE(validate(gen_d3(4)).witness_rich);
}

TEST_CASE("transform examples")
{
    const Model d1 = gen_d1(4);
    CHECK(transform(d1, RationalMatrix::Identity(1, 1)) == d1);

    const Model tripled = transform(d1, RationalMatrix::Constant(1, 1, Rational(3)));
    CHECK(tripled.classes() == RationalMatrix(3 * d1.classes()));
    CHECK(enumerate_V(tripled) == enumerate_V(d1));

    const Model scaled = transform(d1, RationalMatrix::Identity(1, 1), {{"P2", q(5, 2)}});
    CHECK(scaled.class_of(2) == vec({q(5, 2)}));
    CHECK(scaled.class_of(1) == vec({-1}));

    CHECK_THROWS_AS(transform(d1, RationalMatrix::Zero(1, 1)), ArgumentError);
    CHECK_THROWS_AS(transform(d1, RationalMatrix::Identity(2, 2)), ArgumentError);
    CHECK_THROWS_AS(transform(d1, RationalMatrix::Identity(1, 1), {{"P0", Rational(0)}}), ArgumentError);
    CHECK_THROWS_AS(transform(d1, RationalMatrix::Identity(1, 1), {{"P0", Rational(-1)}}), ArgumentError);
    CHECK_THROWS_AS(transform(d1, RationalMatrix::Identity(1, 1), {{"Z", Rational(1)}}), ArgumentError);
}

TEST_CASE("property: membership is invariant under transform")
{
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index r = gen::uniform(rng, 0, 3);
        const Model m = gen::model_from_classes(gen::random_classes(rng, r, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), false));
        const Family before = enumerate_V(m);
        const Model t = transform(m, gen::random_invertible(rng, r), gen::random_scales(rng, m));
        CHECK(enumerate_V(t) == before);
    }
}

TEST_CASE("property: V is closed under union")
{
    std::mt19937 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        const Model m = gen::model_from_classes(
            gen::random_classes(rng, gen::uniform(rng, 1, 3), static_cast<std::size_t>(gen::uniform(rng, 2, 7)), false));
        const PrincipalSupports v(m);
        for (PrimeSet s : v.members())
            for (PrimeSet t : v.members()) CHECK(v.contains(s | t));
    }
}

TEST_CASE("property: every nonempty set is in V exactly when all classes vanish")
{
    std::mt19937 rng(66);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const Model m = gen::model_from_classes(gen::random_classes(rng, gen::uniform(rng, 0, 2), k, false));
        const bool all_zero = m.classes().isZero();
        CHECK((enumerate_V(m) == all_nonempty(k)) == all_zero);
    }
}

TEST_CASE("property: LP membership agrees with a bounded integer exponent search")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const Model m = gen::model_from_classes(gen::random_classes(rng, gen::uniform(rng, 1, 2), k, true, 2));
        for (PrimeSet s : all_nonempty(k)) CHECK(v_membership(m, s) == oracle::bounded_search_member(m, s));
    }
}

TEST_CASE("property: witness richness agrees with the quantifier form")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const Model m = gen::model_from_classes(
            gen::random_classes(rng, gen::uniform(rng, 1, 2), static_cast<std::size_t>(gen::uniform(rng, 2, 6)), false));
        const PrincipalSupports v(m);
        CHECK(is_witness_rich(v) == oracle::literal_witness_rich(v));
    }
    CHECK_FALSE(oracle::literal_witness_rich(PrincipalSupports(gen_d3(4))));
    CHECK(oracle::literal_witness_rich(PrincipalSupports(gen_d3(5))));
    for (std::size_t k = 2; k <= 6; ++k) {
        CHECK(oracle::literal_witness_rich(PrincipalSupports(gen_d1(k))) == is_witness_rich(PrincipalSupports(gen_d1(k))));
        CHECK(oracle::literal_witness_rich(PrincipalSupports(gen_d3(k))) == is_witness_rich(PrincipalSupports(gen_d3(k))));
    }
}
