#include "radrank/semilattice.hpp"

#include <algorithm>

namespace radrank {

namespace {

void check_tuple(std::span<const PrimeSet> tuple, const char* op)
{
    if (tuple.size() < 2) throw ArgumentError(std::string(op) + ": at least two members are required");
}

}  // namespace

bool product_coprime_raw(const PrincipalSupports& v, std::span<const PrimeSet> tuple)
{
    check_tuple(tuple, "product_coprime_raw");
    PrimeSet all;
    for (PrimeSet a : tuple) {
        if (!v.contains(a)) throw ArgumentError("product_coprime_raw: tuple member is not in V");
        all = all | a;
    }
    const std::size_t n = tuple.size();
    std::vector<std::vector<PrimeSet>> candidates(n);
    for (PrimeSet z : v.members()) {
        if (!all.subset_of(z)) continue;
        bool complete = true;
        for (std::size_t j = 0; j < n; ++j) {
            candidates[j].clear();
            for (PrimeSet b : v.members())
                if ((tuple[j] | b) == z) candidates[j].push_back(b);
            complete = complete && !candidates[j].empty();
        }
        if (!complete) continue;
        // a_j fails to divide the union of the other B_i for some system iff
        // one of its primes can be avoided by every B_i, i != j, independently.
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t p : tuple[j].indices()) {
                bool avoidable = true;
                for (std::size_t i = 0; i < n && avoidable; ++i) {
                    if (i == j) continue;
                    avoidable = std::any_of(candidates[i].begin(), candidates[i].end(),
                                            [p](PrimeSet b) { return !b.contains(p); });
                }
                if (avoidable) return false;
            }
        }
    }
    return true;
}

bool product_coprime_supports(std::span<const PrimeSet> tuple)
{
    check_tuple(tuple, "product_coprime_supports");
    PrimeSet common = tuple.front();
    for (PrimeSet a : tuple) common = common & a;
    return common.empty();
}

bool is_product_proper(const PrincipalSupports& v, const Family& fam)
{
    for (PrimeSet s : fam)
        if (!v.contains(s)) throw ArgumentError("is_product_proper: family member is not in V");
    Family sorted = fam;
    canonicalize(sorted);
    if (sorted == v.members()) throw ArgumentError("is_product_proper: the family is all of V");
    if (sorted.size() <= 1) return true;
    PrimeSet common = sorted.front();
    for (PrimeSet s : sorted) common = common & s;
    return !common.empty();
}

Family nu(const PrincipalSupports& v, std::size_t prime)
{
    if (prime >= v.size()) throw ArgumentError("nu: prime position out of range");
    Family out;
    for (PrimeSet s : v.members())
        if (s.contains(prime)) out.push_back(s);
    return out;
}

std::size_t theta(const PrincipalSupports& v, const Family& fam)
{
    if (fam.empty()) throw StructureError("theta: empty family");
    PrimeSet common = v.all();
    for (PrimeSet s : fam) common = common & s;
    if (common.size() != 1)
        throw StructureError("theta: members share " + std::to_string(common.size()) + " primes, expected exactly one");
    return common.indices().front();
}

std::vector<Family> mprop(const PrincipalSupports& v)
{
    if (!is_witness_rich(v))
        throw PreconditionError("mprop: the model is not witness-rich; maximal product-proper sets need not "
                                "correspond to primes at this truncation");
    std::vector<Family> out;
    for (std::size_t p = 0; p < v.size(); ++p) out.push_back(nu(v, p));
    return out;
}

PrimeSet image_of(const PrimeBijection& eta, PrimeSet s)
{
    PrimeSet out;
    for (std::size_t i : s.indices()) out = out.with(eta.at(i));
    return out;
}

SupportMap induced_map(const PrincipalSupports& a, const PrimeBijection& eta)
{
    SupportMap phi;
    for (PrimeSet s : a.members()) phi.emplace(s, image_of(eta, s));
    return phi;
}

namespace {

void check_isomorphism(const PrincipalSupports& a, const PrincipalSupports& b, const SupportMap& phi)
{
    if (phi.size() != a.members().size()) throw ArgumentError("extend_iso: phi is not defined on all of V(A)");
    std::map<PrimeSet, PrimeSet> inverse;
    for (const auto& [x, y] : phi) {
        if (!a.contains(x)) throw ArgumentError("extend_iso: phi is defined outside V(A)");
        if (!b.contains(y)) throw ArgumentError("extend_iso: phi takes a value outside V(B)");
        if (!inverse.emplace(y, x).second) throw ArgumentError("extend_iso: phi is not injective");
    }
    if (inverse.size() != b.members().size()) throw ArgumentError("extend_iso: phi is not onto V(B)");
    for (const auto& [x1, y1] : phi) {
        for (const auto& [x2, y2] : phi) {
            if (divides(x1, x2) != divides(y1, y2)) throw ArgumentError("extend_iso: phi does not preserve order");
            const auto it = phi.find(meet(x1, x2));
            if (it == phi.end() || it->second != meet(y1, y2))
                throw ArgumentError("extend_iso: phi does not preserve the semigroup operation");
        }
    }
}

}  // namespace

ExtendedIso extend_iso(const PrincipalSupports& a, const PrincipalSupports& b, const SupportMap& phi)
{
    check_isomorphism(a, b, phi);
    if (a.size() != b.size()) throw ArgumentError("extend_iso: the models have different numbers of primes");
    const std::vector<Family> target = mprop(b);
    const std::vector<Family> source = mprop(a);

    ExtendedIso out;
    std::vector<char> used(b.size(), 0);
    for (const Family& y : source) {
        Family image;
        for (PrimeSet s : y) image.push_back(phi.at(s));
        canonicalize(image);
        const auto it = std::find(target.begin(), target.end(), image);
        if (it == target.end()) throw StructureError("extend_iso: phi does not carry mprop(A) onto mprop(B)");
        const std::size_t q = theta(b, *it);
        if (used[q]++) throw StructureError("extend_iso: induced map on primes is not injective");
        out.eta.push_back(q);
    }
    out.verified = std::all_of(phi.begin(), phi.end(), [&](const auto& kv) { return image_of(out.eta, kv.first) == kv.second; });
    return out;
}

namespace {

// signature[p][s]: number of members of size s + 1 containing prime p.
std::vector<std::vector<std::size_t>> degree_signatures(const PrincipalSupports& v)
{
    std::vector<std::vector<std::size_t>> sig(v.size(), std::vector<std::size_t>(v.size(), 0));
    for (PrimeSet s : v.members())
        for (std::size_t p : s.indices()) ++sig[p][s.size() - 1];
    return sig;
}

struct IsoSearch {
    const PrincipalSupports& a;
    const PrincipalSupports& b;
    std::vector<std::vector<std::size_t>> sig_a;
    std::vector<std::vector<std::size_t>> sig_b;
    PrimeBijection eta;
    std::vector<char> used;

    bool consistent(std::size_t depth) const
    {
        // Every subset of the assigned primes that contains the newest one.
        const std::uint64_t older = (std::uint64_t{1} << depth) - 1;
        for (std::uint64_t sub = older;; sub = (sub - 1) & older) {
            const auto s = PrimeSet::from_bits(sub).with(depth);
            if (a.contains(s) != b.contains(image_of(eta, s))) return false;
            if (sub == 0) break;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == a.size()) return true;
        for (std::size_t q = 0; q < b.size(); ++q) {
            if (used[q] || sig_a[depth] != sig_b[q]) continue;
            eta.push_back(q);
            used[q] = 1;
            if (consistent(depth) && extend(depth + 1)) return true;
            used[q] = 0;
            eta.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<PrimeBijection> find_iso(const PrincipalSupports& a, const PrincipalSupports& b)
{
    if (a.size() != b.size() || a.members().size() != b.members().size()) return std::nullopt;
    IsoSearch search{a, b, degree_signatures(a), degree_signatures(b), {}, std::vector<char>(b.size(), 0)};
    if (!search.extend(0)) return std::nullopt;
    return search.eta;
}

}  // namespace radrank
