#pragma once

// V(D) as a commutative semigroup under union: divisibility, product
// coprimality, maximal product-proper subsets and their correspondence with
// primes, and isomorphisms between two such semigroups.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "radrank/model.hpp"

namespace radrank {

/// X | Y in (V, u): X is a subset of Y.
constexpr bool divides(PrimeSet x, PrimeSet y)
{
    return x.subset_of(y);
}

/// The semigroup operation: intersection of radical ideals, union of supports.
constexpr PrimeSet meet(PrimeSet x, PrimeSet y)
{
    return x | y;
}

/// The semigroup definition of product coprimality, evaluated literally in
/// the finite semigroup V: for every Z in V and every B_1, ..., B_n in V with
/// Z = a_j u B_j for all j, each a_j divides the union of the B_i, i != j.
/// Throws ArgumentError for fewer than two members or a member outside V.
bool product_coprime_raw(const PrincipalSupports& v, std::span<const PrimeSet> tuple);

/// The members have no common prime. Throws ArgumentError for fewer than two
/// members.
bool product_coprime_supports(std::span<const PrimeSet> tuple);

/// No subfamily of two or more members is product-coprime, i.e. all members
/// share a prime. Families with at most one member are product-proper.
/// Throws ArgumentError unless fam is a proper subset of V.
bool is_product_proper(const PrincipalSupports& v, const Family& fam);

/// Members of V containing the prime.
Family nu(const PrincipalSupports& v, std::size_t prime);

/// The unique prime lying in every member. Throws StructureError when the
/// common intersection is not a single prime.
std::size_t theta(const PrincipalSupports& v, const Family& fam);

/// Maximal product-proper subsets of V, one per prime in prime order (the
/// family nu(P) for prime P). Throws PreconditionError on models that are not
/// witness-rich, where this correspondence is not guaranteed.
std::vector<Family> mprop(const PrincipalSupports& v);

/// Position in B of the image of each prime of A.
using PrimeBijection = std::vector<std::size_t>;
/// An explicit map between supports.
using SupportMap = std::map<PrimeSet, PrimeSet>;

PrimeSet image_of(const PrimeBijection& eta, PrimeSet s);
/// S -> eta(S) restricted to the members of V(A).
SupportMap induced_map(const PrincipalSupports& a, const PrimeBijection& eta);

struct ExtendedIso {
    PrimeBijection eta;
    bool verified = false;  ///< eta(S) = phi(S) for every S in V(A)
};

/// Extends an isomorphism phi: V(A) -> V(B) to the bijection of primes
/// eta = theta_B o phi o nu_A. Throws ArgumentError when phi is not an
/// isomorphism of semilattices, PreconditionError when either side is not
/// witness-rich and StructureError when phi does not carry mprop(A) onto
/// mprop(B).
ExtendedIso extend_iso(const PrincipalSupports& a, const PrincipalSupports& b, const SupportMap& phi);

/// A bijection eta of primes with S in V(A) iff eta(S) in V(B) for every
/// nonempty S, or nullopt when none exists. Exhaustive backtracking, pruned
/// by the per-prime count of members of each size; the lexicographically
/// least bijection is returned.
std::optional<PrimeBijection> find_iso(const PrincipalSupports& a, const PrincipalSupports& b);

}  // namespace radrank
