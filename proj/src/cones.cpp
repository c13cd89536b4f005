#include "radrank/cones.hpp"

#include <algorithm>
#include <numeric>

namespace radrank {

GeneratorSet::GeneratorSet(Eigen::Index dimension) : vectors_(dimension, 0)
{
    if (dimension < 0) throw ShapeError("GeneratorSet: negative dimension");
}

GeneratorSet::GeneratorSet(std::vector<std::string> labels, const RationalMatrix& columns)
    : vectors_(columns.rows(), 0)
{
    if (static_cast<Eigen::Index>(labels.size()) != columns.cols())
        throw ShapeError("GeneratorSet: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(columns.cols()) + " vectors");
    for (std::size_t i = 0; i < labels.size(); ++i)
        add(std::move(labels[i]), columns.col(static_cast<Eigen::Index>(i)));
}

GeneratorSet GeneratorSet::from_columns(const RationalMatrix& columns)
{
    const auto count = static_cast<std::size_t>(columns.cols());
    const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i) {
        std::string digits = std::to_string(i);
        labels.push_back("x" + std::string(width - digits.size(), '0') + digits);
    }
    return GeneratorSet(std::move(labels), columns);
}

void GeneratorSet::add(std::string label, const RationalVector& v)
{
    if (v.size() != dimension())
        throw ShapeError("GeneratorSet: vector '" + label + "' has dimension " + std::to_string(v.size()) +
                         ", expected " + std::to_string(dimension()));
    if (size() >= IndexSet::capacity) throw ResourceError("GeneratorSet: too many elements");
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it != labels_.end() && *it == label) throw ArgumentError("GeneratorSet: duplicate label '" + label + "'");
    const auto at = static_cast<Eigen::Index>(it - labels_.begin());
    labels_.insert(it, std::move(label));

    RationalMatrix grown(dimension(), vectors_.cols() + 1);
    grown.leftCols(at) = vectors_.leftCols(at);
    grown.col(at) = v;
    grown.rightCols(vectors_.cols() - at) = vectors_.rightCols(vectors_.cols() - at);
    vectors_ = std::move(grown);
}

std::size_t GeneratorSet::position(const std::string& label) const
{
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw ArgumentError("GeneratorSet: unknown label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

GeneratorSet GeneratorSet::subset(IndexSet positions) const
{
    GeneratorSet out(dimension());
    for (std::size_t i : positions.indices()) {
        if (i >= size()) throw ArgumentError("GeneratorSet: position out of range");
        out.labels_.push_back(labels_[i]);
    }
    out.vectors_.resize(dimension(), static_cast<Eigen::Index>(out.labels_.size()));
    Eigen::Index c = 0;
    for (std::size_t i : positions.indices()) out.vectors_.col(c++) = vectors_.col(static_cast<Eigen::Index>(i));
    return out;
}

bool positively_spans_its_span(const RationalMatrix& columns)
{
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        const RationalVector opposite = -columns.col(j);
        if (!cone_member(opposite, columns)) return false;
    }
    return true;
}

bool positively_spans_its_span(const GeneratorSet& x)
{
    return positively_spans_its_span(x.vectors());
}

namespace {

bool spans_space(const RationalMatrix& columns, Eigen::Index n)
{
    return linear_rank(columns) == n && positively_spans_its_span(columns);
}

RationalMatrix drop_column(const RationalMatrix& m, Eigen::Index j)
{
    RationalMatrix out(m.rows(), m.cols() - 1);
    out.leftCols(j) = m.leftCols(j);
    out.rightCols(m.cols() - j - 1) = m.rightCols(m.cols() - j - 1);
    return out;
}

void check_dimension(const GeneratorSet& x, Eigen::Index n, const char* op)
{
    if (x.dimension() != n)
        throw ShapeError(std::string(op) + ": vectors of dimension " + std::to_string(x.dimension()) +
                         " in Q^" + std::to_string(n));
}

}  // namespace

bool is_positive_basis(const GeneratorSet& x, Eigen::Index n)
{
    check_dimension(x, n, "is_positive_basis");
    const RationalMatrix& v = x.vectors();
    if (!spans_space(v, n)) return false;
    for (Eigen::Index j = 0; j < v.cols(); ++j)
        if (spans_space(drop_column(v, j), n)) return false;
    return true;
}

GeneratorSet extract_positive_basis(const GeneratorSet& x, Eigen::Index n)
{
    check_dimension(x, n, "extract_positive_basis");
    if (!spans_space(x.vectors(), n))
        throw PreconditionError("extract_positive_basis: the vectors do not positively span Q^" + std::to_string(n));
    IndexSet kept = x.all();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const IndexSet trial = kept.without(i);
        if (spans_space(x.subset(trial).vectors(), n)) kept = trial;
    }
    return x.subset(kept);
}

WeakReayPartition max_weak_reay(const GeneratorSet& x, std::size_t max_size)
{
    const std::size_t n = x.size();
    if (n > max_size)
        throw ResourceError("max_weak_reay: " + std::to_string(n) + " vectors exceed the bound " +
                            std::to_string(max_size));
    std::vector<char> closed(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < closed.size(); ++m)
        closed[m] = positively_spans_its_span(x.subset(IndexSet::from_bits(m)));

    WeakReayPartition out;
    out.chain = longest_closed_chain(closed, n);
    if (out.chain.empty())
        throw PreconditionError("max_weak_reay: the positive cone of the whole set is not a linear subspace");
    for (std::size_t i = 1; i < out.chain.size(); ++i) {
        std::vector<std::string> block;
        for (std::size_t p : (out.chain[i] - out.chain[i - 1]).indices()) block.push_back(x.labels()[p]);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace radrank
