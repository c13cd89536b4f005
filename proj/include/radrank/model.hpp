#pragma once

// Class data of a (truncated) Dedekind domain and the family V(D) of supports
// of principal ideals.
//
// A prime P is stored only through its image psi(P) of its ideal class in
// Cl(D) (x) Q. A nonempty finite set S of primes is the support V(x) of some
// nonzero nonunit x exactly when sum e_P [P] = 0 in Cl(D) for some integers
// e_P >= 1; since torsion is killed by a further multiple, that holds iff
// sum lambda_P psi(P) = 0 for some rationals lambda_P >= 1.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radrank/index_set.hpp"
#include "radrank/ratlin.hpp"

namespace radrank {

using PrimeId = std::string;
/// A set of primes, by position in the owning model.
using PrimeSet = IndexSet;
/// A finite set of supports in canonical order (see canonical_less).
using Family = std::vector<PrimeSet>;

void canonicalize(Family& family);

class Model {
public:
    /// Primes are reordered by ascending id. Throws ArgumentError on an empty
    /// prime list or duplicate ids, ShapeError on a class vector of the wrong
    /// length.
    Model(Eigen::Index ambient_rank, std::vector<std::pair<PrimeId, RationalVector>> primes);

    Eigen::Index ambient_rank() const { return classes_.rows(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<PrimeId>& ids() const { return ids_; }
    const PrimeId& id(std::size_t i) const { return ids_.at(i); }
    std::size_t index_of(std::string_view id) const;

    /// psi of every prime, one column per prime.
    const RationalMatrix& classes() const { return classes_; }
    RationalVector class_of(std::size_t i) const { return classes_.col(static_cast<Eigen::Index>(i)); }
    RationalMatrix classes_of(PrimeSet s) const;

    PrimeSet all() const { return PrimeSet::first(size()); }
    PrimeSet set_of(std::span<const PrimeId> ids) const;
    PrimeSet set_of(std::initializer_list<std::string_view> ids) const;
    std::vector<PrimeId> ids_of(PrimeSet s) const;

    friend bool operator==(const Model&, const Model&) = default;

private:
    std::vector<PrimeId> ids_;
    RationalMatrix classes_;
};

/// S in V(m). Throws ArgumentError when S is empty or mentions a position
/// outside the model.
bool v_membership(const Model& m, PrimeSet s);

/// The family V(m) as a membership table over all subsets of the primes.
class PrincipalSupports {
public:
    /// Decides membership of every nonempty subset. Throws ResourceError
    /// when the model has more than max_primes primes.
    explicit PrincipalSupports(const Model& m, std::size_t max_primes = 12);
    /// Builds the poset directly from its members (no class data needed).
    PrincipalSupports(std::vector<PrimeId> ids, const Family& members);

    std::size_t size() const { return ids_.size(); }
    const std::vector<PrimeId>& ids() const { return ids_; }
    const PrimeId& id(std::size_t i) const { return ids_.at(i); }
    std::size_t index_of(std::string_view id) const;
    PrimeSet all() const { return PrimeSet::first(size()); }
    std::vector<PrimeId> ids_of(PrimeSet s) const;

    bool contains(PrimeSet s) const { return s.subset_of(all()) && member_[s.bits()]; }
    const Family& members() const { return members_; }

private:
    std::vector<PrimeId> ids_;
    std::vector<char> member_;
    Family members_;
};

/// All nonempty S with v_membership(m, S), canonical order.
Family enumerate_V(const Model& m, std::size_t max_primes = 12);

/// For every prime P and every set T of primes, some member of V avoids P
/// and contains T \ {P}.
bool is_witness_rich(const PrincipalSupports& v);

struct ModelReport {
    bool positively_spanning = false;
    bool witness_rich = false;
    Eigen::Index linear_rank = 0;
};

ModelReport validate(const Model& m, std::size_t max_primes = 12);

/// Replaces every psi(P) by scale_P * (M psi(P)). Primes missing from
/// `scales` keep scale 1. Throws ArgumentError on a singular or non-square M,
/// a non-positive scale or an unknown prime id.
Model transform(const Model& m, const RationalMatrix& linear, const std::map<PrimeId, Rational>& scales = {});

}  // namespace radrank
