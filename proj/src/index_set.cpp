#include "radrank/index_set.hpp"

#include <optional>

namespace radrank {

std::vector<IndexSet> longest_closed_chain(std::span<const char> closed, std::size_t n)
{
    if (n >= 32) throw ResourceError("longest_closed_chain: ground set too large");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (closed.size() != full + 1) throw ShapeError("longest_closed_chain: closure table has the wrong size");

    // remaining[m]: number of steps in the longest chain from m up to the full
    // set, or -1 when m is not closed or cannot reach it.
    std::vector<int> remaining(full + 1, -1);
    for (std::uint64_t m = full + 1; m-- > 0;) {
        if (!closed[m]) continue;
        if (m == full) {
            remaining[m] = 0;
            continue;
        }
        const std::uint64_t rest = full & ~m;
        int best = -1;
        for (std::uint64_t sub = rest; sub != 0; sub = (sub - 1) & rest)
            if (remaining[m | sub] >= 0 && remaining[m | sub] + 1 > best) best = remaining[m | sub] + 1;
        remaining[m] = best;
    }
    if (remaining[0] < 0) return {};

    std::vector<IndexSet> chain{IndexSet()};
    std::uint64_t cur = 0;
    while (cur != full) {
        const std::uint64_t rest = full & ~cur;
        std::optional<IndexSet> next;
        for (std::uint64_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
            const auto cand = IndexSet::from_bits(cur | sub);
            if (remaining[cand.bits()] != remaining[cur] - 1) continue;
            if (!next || lex_less(cand, *next)) next = cand;
        }
        cur = next->bits();
        chain.push_back(*next);
    }
    return chain;
}

}  // namespace radrank
