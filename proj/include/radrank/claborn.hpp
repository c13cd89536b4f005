#pragma once

// Class data induced by a relation subgroup H of the free abelian group on
// x_0, ..., x_(k-1): prime P_i has class x_i + H in G / H, and psi(P_i) is its
// image in the free part (G / H) (x) Q.

#include <cstddef>
#include <string>

#include "radrank/model.hpp"

namespace radrank {

struct RelationSet {
    std::size_t generators = 0;
    IntegerMatrix relations;  ///< one relation per row, `generators` columns
};

/// Quotient Z^k / <relations> through the Smith normal form; the ambient rank
/// is k minus the rank of the relation matrix. Prime ids are prefix + index.
Model claborn_model(const RelationSet& rel, const std::string& prefix = "x");

/// First k primes of the three counterexample domains, normalized to
///   D1: psi(P_n) = (-1)^n              (relations x_n + x_(n+1))
///   D2: psi(Q_n) = (-1)^n / 2^n        (relations x_n + 2 x_(n+1))
///   D3: psi(R_0) = 0, psi(R_n) = (-1)^(n+1) for n >= 1
///                                      (relations x_0 and x_n + x_(n+1), n >= 1)
/// Each is the quotient computed by claborn_model composed with a linear
/// isomorphism of Q. Throws ArgumentError for k < 2.
RelationSet d1_relations(std::size_t k);
RelationSet d2_relations(std::size_t k);
RelationSet d3_relations(std::size_t k);
Model gen_d1(std::size_t k);
Model gen_d2(std::size_t k);
Model gen_d3(std::size_t k);

}  // namespace radrank
