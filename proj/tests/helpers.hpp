#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "radrank/model.hpp"
#include "radrank/ratlin.hpp"

namespace helpers {

using namespace radrank;

inline RationalVector vec(std::initializer_list<Rational> xs)
{
    RationalVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return v;
}

/// Matrix with the given columns, all of dimension `dim`.
inline RationalMatrix cols(Eigen::Index dim, std::initializer_list<std::initializer_list<Rational>> columns)
{
    RationalMatrix m(dim, static_cast<Eigen::Index>(columns.size()));
    Eigen::Index j = 0;
    for (const auto& c : columns) m.col(j++) = vec(c);
    return m;
}

inline RationalMatrix rows(std::initializer_list<std::initializer_list<Rational>> rs)
{
    const auto n = rs.size() == 0 ? 0 : static_cast<Eigen::Index>(rs.begin()->size());
    RationalMatrix m(static_cast<Eigen::Index>(rs.size()), n);
    Eigen::Index i = 0;
    for (const auto& r : rs) m.row(i++) = vec(r).transpose();
    return m;
}

inline Rational q(long num, long den = 1)
{
    return Rational(num) / Rational(den);
}

/// Model with primes <prefix>0, <prefix>1, ... of dimension `dim`.
inline Model model(Eigen::Index dim, std::initializer_list<std::initializer_list<Rational>> classes,
                   const std::string& prefix = "P")
{
    std::vector<std::pair<PrimeId, RationalVector>> primes;
    std::size_t i = 0;
    for (const auto& c : classes) {
        RationalVector v = dim == 0 ? RationalVector(0) : vec(c);
        primes.emplace_back(prefix + std::to_string(i++), v);
    }
    return Model(dim, std::move(primes));
}

/// k primes, all with zero class in Q^r.
inline Model torsion_model(std::size_t k, Eigen::Index r = 0)
{
    std::vector<std::pair<PrimeId, RationalVector>> primes;
    for (std::size_t i = 0; i < k; ++i) primes.emplace_back("P" + std::to_string(i), RationalVector::Zero(r));
    return Model(r, std::move(primes));
}

}  // namespace helpers
