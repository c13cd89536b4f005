#pragma once

// Positive cones over Q^n: positive spanning, positive bases and weak Reay
// partitions.

#include <cstddef>
#include <string>
#include <vector>

#include "radrank/index_set.hpp"
#include "radrank/ratlin.hpp"

namespace radrank {

/// A finite labeled family of vectors of a common dimension. Repeated vectors
/// are allowed under distinct labels. Elements are kept in ascending label
/// order, and positions refer to that order.
class GeneratorSet {
public:
    explicit GeneratorSet(Eigen::Index dimension = 0);
    GeneratorSet(std::vector<std::string> labels, const RationalMatrix& columns);
    /// Labels x0, x1, ... (zero padded so that label order is column order).
    static GeneratorSet from_columns(const RationalMatrix& columns);

    void add(std::string label, const RationalVector& v);

    Eigen::Index dimension() const { return vectors_.rows(); }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// One column per element.
    const RationalMatrix& vectors() const { return vectors_; }
    RationalVector vector(std::size_t i) const { return vectors_.col(static_cast<Eigen::Index>(i)); }
    std::size_t position(const std::string& label) const;

    GeneratorSet subset(IndexSet positions) const;
    IndexSet all() const { return IndexSet::first(size()); }

private:
    std::vector<std::string> labels_;
    RationalMatrix vectors_;
};

/// pos(columns) == span(columns), decided by testing -x in pos(columns) for
/// every column x. True for the empty set.
bool positively_spans_its_span(const RationalMatrix& columns);
bool positively_spans_its_span(const GeneratorSet& x);

/// pos(X) = Q^n and no single removal keeps that property.
bool is_positive_basis(const GeneratorSet& x, Eigen::Index n);

/// Greedy removal in ascending label order: an element is dropped whenever
/// the remaining ones still positively span Q^n. Throws PreconditionError
/// unless pos(X) = Q^n.
GeneratorSet extract_positive_basis(const GeneratorSet& x, Eigen::Index n);

/// Ordered partition X_1, ..., X_s such that pos(X_1 u ... u X_i) is a linear
/// subspace for every i.
struct WeakReayPartition {
    std::vector<std::vector<std::string>> blocks;
    std::vector<IndexSet> chain;  ///< prefix unions {} = U_0 < ... < U_s = X, by position

    std::size_t size() const { return blocks.size(); }
};

/// Weak Reay partition with the largest number of blocks, by exhaustive
/// longest-chain search over the subsets of X. Ties go to the
/// lexicographically least chain. Throws PreconditionError when pos(X) is not
/// a subspace (no weak Reay partition exists) and ResourceError when
/// |X| > max_size.
WeakReayPartition max_weak_reay(const GeneratorSet& x, std::size_t max_size = 12);

}  // namespace radrank
