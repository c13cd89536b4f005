#pragma once

// Almost inverses, inverse bases and weak Reay chains; recovery of the rank of
// the class group from V(D) alone.
//
// Most operations come in two forms: one on a Model, which reads the class
// vectors (cone side), and one on PrincipalSupports, which only consults
// membership in V (poset side). recover_rank uses the poset side exclusively.

#include <cstddef>
#include <vector>

#include "radrank/model.hpp"

namespace radrank {

/// Almost inverses of delta: primes Q such that {Q} u T is in V for some
/// (possibly empty) T contained in delta. Decided by v_membership alone.
/// Throws ResourceError when |delta| > max_delta.
PrimeSet inv_enum(const Model& m, PrimeSet delta, std::size_t max_delta = 12);
PrimeSet inv_enum(const PrincipalSupports& v, PrimeSet delta);

/// Primes Q with psi(Q) in the negative cone of psi(delta).
PrimeSet inv_cone(const Model& m, PrimeSet delta);

/// U is contained in Inv(U).
bool is_self_inverse(const Model& m, PrimeSet u);
bool is_self_inverse(const PrincipalSupports& v, PrimeSet u);

/// Inv(delta) is every prime of the model, and no prime of delta can be
/// dropped without losing that.
bool is_inverse_basis(const Model& m, PrimeSet delta);
bool is_inverse_basis(const PrincipalSupports& v, PrimeSet delta);

/// Greedy inverse basis: primes are dropped in ascending id order whenever
/// the rest still has every prime as an almost inverse. The Model form tests
/// that through positive spanning of the span of all classes; the
/// PrincipalSupports form through inv_enum. Both throw PreconditionError when
/// Inv(all primes) is not all primes.
PrimeSet find_inverse_basis(const Model& m);
PrimeSet find_inverse_basis(const PrincipalSupports& v);

/// Strictly increasing chain {} = U_0 < U_1 < ... < U_s = delta of
/// self-inverse sets. The blocks U_i \ U_(i-1) form a weak Reay partition.
struct ReayChain {
    std::vector<PrimeSet> levels;

    std::size_t blocks() const { return levels.empty() ? 0 : levels.size() - 1; }
    std::vector<PrimeSet> partition() const;
};

/// Longest chain of self-inverse subsets of an inverse basis, lexicographically
/// least among the longest. Throws PreconditionError unless delta is an
/// inverse basis and ResourceError when |delta| > max_delta.
ReayChain max_reay_chain(const Model& m, PrimeSet delta, std::size_t max_delta = 12);
ReayChain max_reay_chain(const PrincipalSupports& v, PrimeSet delta, std::size_t max_delta = 12);

struct RankAnalysis {
    PrimeSet inverse_basis;
    ReayChain chain;
    std::size_t rank = 0;  ///< |inverse_basis| - chain.blocks()
};

RankAnalysis analyze_rank(const PrincipalSupports& v);

/// Rank of the class group, computed from V(m) only.
std::size_t recover_rank(const PrincipalSupports& v);
std::size_t recover_rank(const Model& m, std::size_t max_primes = 12);

}  // namespace radrank
