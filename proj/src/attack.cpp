#include "cascnet/attack.hpp"

#include <algorithm>
#include <numeric>

#include "cascnet/error.hpp"
#include "cascnet/rng.hpp"

namespace cascnet {

std::string to_string(AttackStrategy s) {
    return s == AttackStrategy::Hlea ? "hlea" : "llea";
}

AttackStrategy attack_strategy_from_string(const std::string& name) {
    if (name == "hlea" || name == "HLEA") return AttackStrategy::Hlea;
    if (name == "llea" || name == "LLEA") return AttackStrategy::Llea;
    throw InputError("unknown attack strategy \"" + name + "\" (expected hlea or llea)");
}

std::vector<EdgeId> select_attack_set(const Network& net, std::span<const double> initial_loads,
                                      AttackStrategy strategy, std::uint32_t m_a,
                                      std::uint64_t seed) {
    const EdgeId m = net.edge_count();
    if (m_a > m)
        throw InputError("attack set size " + std::to_string(m_a) + " exceeds edge count " +
                         std::to_string(m));
    if (initial_loads.size() != m) throw InputError("initial_loads size does not match edge count");
    if (m_a == 0) return {};

    // Sort by load with EdgeId as deterministic secondary key; loads of
    // equal degree products compare exactly equal, so the tied block at the
    // cutoff is well defined.
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    const bool high_first = strategy == AttackStrategy::Hlea;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        if (initial_loads[a] != initial_loads[b])
            return high_first ? initial_loads[a] > initial_loads[b]
                              : initial_loads[a] < initial_loads[b];
        return a < b;
    });

    const double cutoff = initial_loads[order[m_a - 1]];
    std::size_t tied_begin = m_a - 1;
    while (tied_begin > 0 && initial_loads[order[tied_begin - 1]] == cutoff) --tied_begin;
    std::size_t tied_end = m_a;
    while (tied_end < m && initial_loads[order[tied_end]] == cutoff) ++tied_end;

    std::vector<EdgeId> selected(order.begin(), order.begin() + tied_begin);

    // Partial Fisher-Yates over the tied block for the remaining slots.
    std::vector<EdgeId> tied(order.begin() + tied_begin, order.begin() + tied_end);
    Rng rng(seed);
    const std::size_t need = m_a - tied_begin;
    for (std::size_t i = 0; i < need; ++i) {
        const std::size_t j = i + uniform_below(rng, tied.size() - i);
        std::swap(tied[i], tied[j]);
        selected.push_back(tied[i]);
    }
    return selected;
}

}  // namespace cascnet
