#include "radrank/rank.hpp"

#include <functional>

#include "radrank/cones.hpp"

namespace radrank {

PrimeSet inv_enum(const Model& m, PrimeSet delta, std::size_t max_delta)
{
    if (!delta.subset_of(m.all())) throw ArgumentError("inv_enum: set refers to primes outside the model");
    if (delta.size() > max_delta)
        throw ResourceError("inv_enum: " + std::to_string(delta.size()) + " primes exceed the bound " +
                            std::to_string(max_delta));
    PrimeSet found;
    const std::uint64_t d = delta.bits();
    for (std::uint64_t t = d;; t = (t - 1) & d) {
        for (std::size_t q = 0; q < m.size(); ++q)
            if (!found.contains(q) && v_membership(m, PrimeSet::from_bits(t).with(q))) found = found.with(q);
        if (t == 0) break;
    }
    return found;
}

PrimeSet inv_enum(const PrincipalSupports& v, PrimeSet delta)
{
    if (!delta.subset_of(v.all())) throw ArgumentError("inv_enum: set refers to primes outside the model");
    PrimeSet found;
    const std::uint64_t d = delta.bits();
    for (std::uint64_t t = d;; t = (t - 1) & d) {
        for (std::size_t q = 0; q < v.size(); ++q)
            if (v.contains(PrimeSet::from_bits(t).with(q))) found = found.with(q);
        if (t == 0) break;
    }
    return found;
}

PrimeSet inv_cone(const Model& m, PrimeSet delta)
{
    const RationalMatrix gens = m.classes_of(delta);
    PrimeSet found;
    for (std::size_t q = 0; q < m.size(); ++q) {
        const RationalVector opposite = -m.class_of(q);
        if (cone_member(opposite, gens)) found = found.with(q);
    }
    return found;
}

bool is_self_inverse(const Model& m, PrimeSet u)
{
    return u.subset_of(inv_cone(m, u));
}

bool is_self_inverse(const PrincipalSupports& v, PrimeSet u)
{
    return u.subset_of(inv_enum(v, u));
}

namespace {

// Cone-side test for Inv(delta) = all primes: psi(delta) positively spans
// the span of all the classes.
struct ConeSpan {
    const Model& m;
    Eigen::Index target = linear_rank(m.classes());

    bool operator()(PrimeSet delta) const
    {
        const RationalMatrix gens = m.classes_of(delta);
        return linear_rank(gens) == target && positively_spans_its_span(gens);
    }
};

struct PosetSpan {
    const PrincipalSupports& v;

    bool operator()(PrimeSet delta) const { return inv_enum(v, delta) == v.all(); }
};

template <typename Spans>
bool minimal_spanning(PrimeSet delta, const Spans& spans)
{
    if (!spans(delta)) return false;
    for (std::size_t p : delta.indices())
        if (spans(delta.without(p))) return false;
    return true;
}

template <typename Spans>
PrimeSet greedy_basis(PrimeSet all, const Spans& spans)
{
    if (!spans(all))
        throw PreconditionError("find_inverse_basis: Inv of all primes is not all primes (the classes do not "
                                "positively span their span)");
    PrimeSet delta = all;
    for (std::size_t p : all.indices())
        if (spans(delta.without(p))) delta = delta.without(p);
    return delta;
}

ReayChain longest_chain(PrimeSet delta, std::size_t max_delta, const std::function<bool(PrimeSet)>& self_inverse)
{
    const std::vector<std::size_t> pos = delta.indices();
    if (pos.size() > max_delta)
        throw ResourceError("max_reay_chain: " + std::to_string(pos.size()) + " primes exceed the bound " +
                            std::to_string(max_delta));
    auto lift = [&](IndexSet local) {
        PrimeSet s;
        for (std::size_t i : local.indices()) s = s.with(pos[i]);
        return s;
    };
    std::vector<char> closed(std::size_t{1} << pos.size());
    for (std::uint64_t b = 0; b < closed.size(); ++b) closed[b] = self_inverse(lift(IndexSet::from_bits(b)));
    ReayChain chain;
    for (IndexSet level : longest_closed_chain(closed, pos.size())) chain.levels.push_back(lift(level));
    return chain;
}

}  // namespace

std::vector<PrimeSet> ReayChain::partition() const
{
    std::vector<PrimeSet> out;
    for (std::size_t i = 1; i < levels.size(); ++i) out.push_back(levels[i] - levels[i - 1]);
    return out;
}

bool is_inverse_basis(const Model& m, PrimeSet delta)
{
    return minimal_spanning(delta, ConeSpan{m});
}

bool is_inverse_basis(const PrincipalSupports& v, PrimeSet delta)
{
    return minimal_spanning(delta, PosetSpan{v});
}

PrimeSet find_inverse_basis(const Model& m)
{
    return greedy_basis(m.all(), ConeSpan{m});
}

PrimeSet find_inverse_basis(const PrincipalSupports& v)
{
    return greedy_basis(v.all(), PosetSpan{v});
}

ReayChain max_reay_chain(const Model& m, PrimeSet delta, std::size_t max_delta)
{
    if (!is_inverse_basis(m, delta)) throw PreconditionError("max_reay_chain: not an inverse basis");
    return longest_chain(delta, max_delta, [&](PrimeSet u) { return is_self_inverse(m, u); });
}

ReayChain max_reay_chain(const PrincipalSupports& v, PrimeSet delta, std::size_t max_delta)
{
    if (!is_inverse_basis(v, delta)) throw PreconditionError("max_reay_chain: not an inverse basis");
    return longest_chain(delta, max_delta, [&](PrimeSet u) { return is_self_inverse(v, u); });
}

RankAnalysis analyze_rank(const PrincipalSupports& v)
{
    RankAnalysis out;
    out.inverse_basis = find_inverse_basis(v);
    out.chain = max_reay_chain(v, out.inverse_basis);
    out.rank = out.inverse_basis.size() - out.chain.blocks();
    return out;
}

std::size_t recover_rank(const PrincipalSupports& v)
{
    return analyze_rank(v).rank;
}

std::size_t recover_rank(const Model& m, std::size_t max_primes)
{
    return recover_rank(PrincipalSupports(m, max_primes));
}

}  // namespace radrank
