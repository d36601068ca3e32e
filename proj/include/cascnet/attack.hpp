#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cascnet/graph.hpp"

namespace cascnet {

enum class AttackStrategy : std::uint8_t {
    Hlea,  // remove the highest-load edges
    Llea,  // remove the lowest-load edges
};

std::string to_string(AttackStrategy s);
AttackStrategy attack_strategy_from_string(const std::string& name);  // throws InputError

// The m_a edges with highest (HLEA) or lowest (LLEA) initial load. Edges
// strictly past the cutoff load are always included; the tied block at the
// cutoff fills the remaining slots uniformly at random under `seed`.
std::vector<EdgeId> select_attack_set(const Network& net, std::span<const double> initial_loads,
                                      AttackStrategy strategy, std::uint32_t m_a,
                                      std::uint64_t seed);

}  // namespace cascnet
