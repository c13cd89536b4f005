#pragma once

// Seeded generators for random class data.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radrank/cones.hpp"
#include "radrank/model.hpp"

namespace gen {

using namespace radrank;

inline int uniform(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937& rng, int bound = 9)
{
    return Rational(uniform(rng, -bound, bound)) / Rational(uniform(rng, 1, bound));
}

/// Class vectors with coordinates a/b, |a|, b <= bound, confined to the first
/// `support_dim` coordinates and occasionally zero.
inline RationalMatrix random_classes(std::mt19937& rng, Eigen::Index r, Eigen::Index support_dim, std::size_t k,
                                     bool integral, int bound = 9)
{
    RationalMatrix c = RationalMatrix::Zero(r, static_cast<Eigen::Index>(k));
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
        if (uniform(rng, 0, 9) == 0) continue;
        for (Eigen::Index i = 0; i < support_dim; ++i)
            c(i, j) = integral ? Rational(uniform(rng, -bound, bound)) : small_rational(rng, bound);
    }
    return c;
}

/// As above with support_dim drawn uniformly from 0..r, so all linear ranks
/// up to r occur.
inline RationalMatrix random_classes(std::mt19937& rng, Eigen::Index r, std::size_t k, bool integral, int bound = 9)
{
    return random_classes(rng, r, uniform(rng, 0, static_cast<int>(r)), k, integral, bound);
}

inline Model model_from_classes(const RationalMatrix& c, const std::string& prefix = "P")
{
    std::vector<std::pair<PrimeId, RationalVector>> primes;
    for (Eigen::Index j = 0; j < c.cols(); ++j) primes.emplace_back(prefix + std::to_string(j), c.col(j));
    return Model(c.rows(), std::move(primes));
}

/// Rejection sampling until the classes positively span their span. The
/// target linear rank is drawn first from 0..min(r, k - 1), the ranks that
/// k positively spanning vectors can reach, and kept fixed while sampling.
inline Model random_valid_model(std::mt19937& rng, Eigen::Index r, std::size_t k, bool integral = false, int bound = 9)
{
    const auto top = std::min<Eigen::Index>(r, static_cast<Eigen::Index>(k) - 1);
    const Eigen::Index target = uniform(rng, 0, static_cast<int>(top));
    for (;;) {
        RationalMatrix c = random_classes(rng, r, target, k, integral, bound);
        if (linear_rank(c) == target && positively_spans_its_span(c)) return model_from_classes(c);
    }
}

/// Criterion-2 style population: ambient rank 0..3, 3..8 primes.
inline std::vector<Model> valid_population(std::uint32_t seed, std::size_t count, std::size_t max_primes = 8)
{
    std::mt19937 rng(seed);
    std::vector<Model> out;
    for (std::size_t i = 0; i < count; ++i) {
        const Eigen::Index r = uniform(rng, 0, 3);
        const auto k = static_cast<std::size_t>(uniform(rng, 3, static_cast<int>(max_primes)));
        out.push_back(random_valid_model(rng, r, k));
    }
    return out;
}

inline RationalMatrix random_invertible(std::mt19937& rng, Eigen::Index r)
{
    for (;;) {
        RationalMatrix m(r, r);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) m(i, j) = small_rational(rng, 5);
        if (determinant(m) != 0) return m;
    }
}

inline std::map<PrimeId, Rational> random_scales(std::mt19937& rng, const Model& m)
{
    std::map<PrimeId, Rational> scales;
    for (const auto& id : m.ids()) scales[id] = Rational(uniform(rng, 1, 9)) / Rational(uniform(rng, 1, 9));
    return scales;
}

/// A uniformly random permutation of 0..n-1.
inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n)
{
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// The same class data with prime P_i renamed to position perm[i] (ids
/// "P<perm[i]>"), so V is carried over by the relabeling.
inline Model relabel(const Model& m, const std::vector<std::size_t>& perm)
{
    RationalMatrix c(m.ambient_rank(), m.classes().cols());
    for (std::size_t i = 0; i < perm.size(); ++i) c.col(static_cast<Eigen::Index>(perm[i])) = m.class_of(i);
    return model_from_classes(c);
}

}  // namespace gen
