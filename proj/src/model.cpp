#include "radrank/model.hpp"

#include <algorithm>
#include <numeric>

#include "radrank/cones.hpp"

namespace radrank {

void canonicalize(Family& family)
{
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

namespace {

std::size_t find_id(const std::vector<PrimeId>& ids, std::string_view id)
{
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw ArgumentError("unknown prime '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - ids.begin());
}

std::vector<PrimeId> ids_in(const std::vector<PrimeId>& ids, PrimeSet s)
{
    std::vector<PrimeId> out;
    for (std::size_t i : s.indices()) out.push_back(ids.at(i));
    return out;
}

}  // namespace

Model::Model(Eigen::Index ambient_rank, std::vector<std::pair<PrimeId, RationalVector>> primes)
{
    if (ambient_rank < 0) throw ArgumentError("model: negative ambient rank");
    if (primes.empty()) throw ArgumentError("model: at least one prime is required");
    if (primes.size() > IndexSet::capacity)
        throw ResourceError("model: at most " + std::to_string(IndexSet::capacity) + " primes are supported");
    std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    classes_.resize(ambient_rank, static_cast<Eigen::Index>(primes.size()));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        auto& [id, v] = primes[i];
        if (i > 0 && id == ids_.back()) throw ArgumentError("model: duplicate prime id '" + id + "'");
        if (v.size() != ambient_rank)
            throw ShapeError("model: class of '" + id + "' has length " + std::to_string(v.size()) +
                             ", ambient rank is " + std::to_string(ambient_rank));
        classes_.col(static_cast<Eigen::Index>(i)) = v;
        ids_.push_back(std::move(id));
    }
}

std::size_t Model::index_of(std::string_view id) const
{
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw ArgumentError("unknown prime '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - ids_.begin());
}

RationalMatrix Model::classes_of(PrimeSet s) const
{
    if (!s.subset_of(all())) throw ArgumentError("prime set refers to primes outside the model");
    RationalMatrix out(ambient_rank(), static_cast<Eigen::Index>(s.size()));
    Eigen::Index c = 0;
    for (std::size_t i : s.indices()) out.col(c++) = classes_.col(static_cast<Eigen::Index>(i));
    return out;
}

PrimeSet Model::set_of(std::span<const PrimeId> ids) const
{
    PrimeSet s;
    for (const auto& id : ids) s = s.with(index_of(id));
    return s;
}

PrimeSet Model::set_of(std::initializer_list<std::string_view> ids) const
{
    PrimeSet s;
    for (auto id : ids) s = s.with(index_of(id));
    return s;
}

std::vector<PrimeId> Model::ids_of(PrimeSet s) const
{
    return ids_in(ids_, s);
}

bool v_membership(const Model& m, PrimeSet s)
{
    if (s.empty()) throw ArgumentError("v_membership: supports are nonempty");
    return strict_zero_combination(m.classes_of(s)).has_value();
}

PrincipalSupports::PrincipalSupports(const Model& m, std::size_t max_primes) : ids_(m.ids())
{
    if (m.size() > max_primes)
        throw ResourceError("enumerating V: " + std::to_string(m.size()) + " primes exceed the bound " +
                            std::to_string(max_primes));
    member_.assign(std::size_t{1} << m.size(), 0);
    for (std::uint64_t b = 1; b < member_.size(); ++b) {
        const auto s = PrimeSet::from_bits(b);
        if (v_membership(m, s)) {
            member_[b] = 1;
            members_.push_back(s);
        }
    }
    canonicalize(members_);
}

PrincipalSupports::PrincipalSupports(std::vector<PrimeId> ids, const Family& members) : ids_(std::move(ids))
{
    if (ids_.empty()) throw ArgumentError("PrincipalSupports: at least one prime is required");
    if (ids_.size() > 24) throw ResourceError("PrincipalSupports: too many primes for a membership table");
    auto sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ArgumentError("PrincipalSupports: duplicate prime id");
    member_.assign(std::size_t{1} << ids_.size(), 0);
    for (PrimeSet s : members) {
        if (s.empty() || !s.subset_of(all())) throw ArgumentError("PrincipalSupports: invalid member");
        member_[s.bits()] = 1;
        members_.push_back(s);
    }
    canonicalize(members_);
}

std::size_t PrincipalSupports::index_of(std::string_view id) const
{
    return find_id(ids_, id);
}

std::vector<PrimeId> PrincipalSupports::ids_of(PrimeSet s) const
{
    return ids_in(ids_, s);
}

Family enumerate_V(const Model& m, std::size_t max_primes)
{
    return PrincipalSupports(m, max_primes).members();
}

bool is_witness_rich(const PrincipalSupports& v)
{
    // V is closed under union, so the condition for P holds for every T at
    // once iff the union of the members avoiding P is everything but P.
    for (std::size_t p = 0; p < v.size(); ++p) {
        PrimeSet reach;
        bool any = false;
        for (PrimeSet s : v.members()) {
            if (s.contains(p)) continue;
            reach = reach | s;
            any = true;
        }
        if (!any || reach != v.all().without(p)) return false;
    }
    return true;
}

ModelReport validate(const Model& m, std::size_t max_primes)
{
    ModelReport r;
    r.positively_spanning = positively_spans_its_span(m.classes());
    r.linear_rank = linear_rank(m.classes());
    r.witness_rich = is_witness_rich(PrincipalSupports(m, max_primes));
    return r;
}

Model transform(const Model& m, const RationalMatrix& linear, const std::map<PrimeId, Rational>& scales)
{
    const Eigen::Index r = m.ambient_rank();
    if (linear.rows() != r || linear.cols() != r)
        throw ArgumentError("transform: expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
    if (linear_rank(linear) != r) throw ArgumentError("transform: matrix is singular");
    for (const auto& [id, s] : scales) {
        m.index_of(id);
        if (s <= 0) throw ArgumentError("transform: scale of '" + id + "' is not positive");
    }
    std::vector<std::pair<PrimeId, RationalVector>> primes;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto it = scales.find(m.id(i));
        const Rational s = it == scales.end() ? Rational(1) : it->second;
        primes.emplace_back(m.id(i), RationalVector(s * (linear * m.class_of(i))));
    }
    return Model(r, std::move(primes));
}

}  // namespace radrank
