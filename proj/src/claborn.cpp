#include "radrank/claborn.hpp"

namespace radrank {

Model claborn_model(const RelationSet& rel, const std::string& prefix)
{
    const auto k = static_cast<Eigen::Index>(rel.generators);
    if (k < 1) throw ArgumentError("claborn_model: at least one generator is required");
    if (rel.relations.rows() > 0 && rel.relations.cols() != k)
        throw ShapeError("claborn_model: relations have " + std::to_string(rel.relations.cols()) +
                         " coefficients, expected " + std::to_string(k));
    const IntegerMatrix relations = rel.relations.rows() > 0 ? rel.relations : IntegerMatrix(0, k);

    // With U R V = D, the change of coordinates g -> g V sends H onto the span
    // of d_i e_i, so the free part of G / H is read off the last k - rank
    // coordinates of row i of V.
    const SmithForm<Integer> snf = smith_normal_form(relations);
    const Eigen::Index free_rank = k - snf.rank();

    std::vector<std::pair<PrimeId, RationalVector>> primes;
    for (Eigen::Index i = 0; i < k; ++i)
        primes.emplace_back(prefix + std::to_string(i),
                            RationalVector(snf.V.row(i).tail(free_rank).transpose().cast<Rational>()));
    return Model(free_rank, std::move(primes));
}

namespace {

void check_k(std::size_t k)
{
    if (k < 2) throw ArgumentError("truncation needs k >= 2, got " + std::to_string(k));
}

// Rescales a rank-one model so that the given prime has class +1.
Model normalize(const Model& m, const std::string& unit_prime)
{
    const Rational c = m.class_of(m.index_of(unit_prime))(0);
    RationalMatrix scale(1, 1);
    scale(0, 0) = Rational(1) / c;
    return transform(m, scale);
}

RelationSet chain_relations(std::size_t k, std::size_t first, long coefficient)
{
    RelationSet rel{k, IntegerMatrix::Zero(static_cast<Eigen::Index>(k - 1 - first), static_cast<Eigen::Index>(k))};
    for (std::size_t n = first; n + 1 < k; ++n) {
        const auto row = static_cast<Eigen::Index>(n - first);
        rel.relations(row, static_cast<Eigen::Index>(n)) = 1;
        rel.relations(row, static_cast<Eigen::Index>(n + 1)) = coefficient;
    }
    return rel;
}

}  // namespace

RelationSet d1_relations(std::size_t k)
{
    check_k(k);
    return chain_relations(k, 0, 1);
}

RelationSet d2_relations(std::size_t k)
{
    check_k(k);
    return chain_relations(k, 0, 2);
}

RelationSet d3_relations(std::size_t k)
{
    check_k(k);
    RelationSet rel = chain_relations(k, 1, 1);
    IntegerMatrix all = IntegerMatrix::Zero(rel.relations.rows() + 1, static_cast<Eigen::Index>(k));
    all(0, 0) = 1;
    all.bottomRows(rel.relations.rows()) = rel.relations;
    rel.relations = std::move(all);
    return rel;
}

Model gen_d1(std::size_t k)
{
    return normalize(claborn_model(d1_relations(k), "P"), "P0");
}

Model gen_d2(std::size_t k)
{
    return normalize(claborn_model(d2_relations(k), "Q"), "Q0");
}

Model gen_d3(std::size_t k)
{
    return normalize(claborn_model(d3_relations(k), "R"), "R1");
}

}  // namespace radrank
