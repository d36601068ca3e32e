#include <doctest.h>

#include <algorithm>
#include <random>

#include "cascnet/attack.hpp"
#include "cascnet/error.hpp"
#include "cascnet/loadmodel.hpp"
#include "cascnet/netgen.hpp"

#include "testutil.hpp"

using namespace cascnet;

namespace {

std::vector<double> loads_for(const Network& net, double delta) {
    std::vector<double> loads(net.edge_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e) loads[e] = initial_load(net, e, delta);
    return loads;
}

}  // namespace

TEST_CASE("hlea and llea pick the expected path edges") {
    const Network p4 = testutil::path(4);  // loads 2, 4, 2 at delta=1
    const auto loads = loads_for(p4, 1.0);

    const auto high = select_attack_set(p4, loads, AttackStrategy::Hlea, 1, 1);
    CHECK(high == std::vector<EdgeId>{1});

    const auto low = select_attack_set(p4, loads, AttackStrategy::Llea, 1, 1);
    REQUIRE(low.size() == 1);
    CHECK((low[0] == 0 || low[0] == 2));
}

TEST_CASE("tied block is sampled uniformly") {
    const Network p4 = testutil::path(4);
    const auto loads = loads_for(p4, 1.0);
    int picked_first = 0;
    const int trials = 10000;
    for (int seed = 0; seed < trials; ++seed) {
        const auto set = select_attack_set(p4, loads, AttackStrategy::Llea, 1, seed);
        if (set[0] == 0) ++picked_first;
    }
    const double freq = double(picked_first) / trials;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("degenerate full selection on a regular graph") {
    const Network ring = generate_ws({12, 4, 0.0}, 1);
    const auto loads = loads_for(ring, 1.3);
    auto set = select_attack_set(ring, loads, AttackStrategy::Hlea, ring.edge_count(), 3);
    std::sort(set.begin(), set.end());
    CHECK(set.size() == ring.edge_count());
    CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
}

TEST_CASE("selection respects the load cutoff") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Network net = generate_ba({3, 2, 60}, rng());
        const auto loads = loads_for(net, 0.8);
        for (auto strategy : {AttackStrategy::Hlea, AttackStrategy::Llea}) {
            const auto set = select_attack_set(net, loads, strategy, 10, rng());
            std::vector<char> in_set(net.edge_count(), 0);
            for (EdgeId e : set) in_set[e] = 1;
            double worst_selected = loads[set[0]], best_unselected = loads[set[0]];
            bool any_unselected = false;
            for (EdgeId e = 0; e < net.edge_count(); ++e) {
                if (in_set[e]) {
                    worst_selected = strategy == AttackStrategy::Hlea
                                         ? std::min(worst_selected, loads[e])
                                         : std::max(worst_selected, loads[e]);
                } else {
                    best_unselected = any_unselected
                                          ? (strategy == AttackStrategy::Hlea
                                                 ? std::max(best_unselected, loads[e])
                                                 : std::min(best_unselected, loads[e]))
                                          : loads[e];
                    any_unselected = true;
                }
            }
            REQUIRE(any_unselected);
            if (strategy == AttackStrategy::Hlea) CHECK(worst_selected >= best_unselected);
            else CHECK(worst_selected <= best_unselected);
        }
    }
}

TEST_CASE("selected set is invariant across delta up to ties") {
    std::mt19937_64 rng(19);
    const Network net = generate_ba({3, 2, 60}, rng());
    // load order equals degree-product order for every delta > 0
    auto sorted_set = [&](double delta) {
        auto set = select_attack_set(net, loads_for(net, delta), AttackStrategy::Hlea, 10, 4);
        std::sort(set.begin(), set.end());
        return set;
    };
    CHECK(sorted_set(0.3) == sorted_set(1.0));
    CHECK(sorted_set(1.0) == sorted_set(2.0));
}

TEST_CASE("oversized attack set is rejected") {
    const Network tri = testutil::triangle();
    CHECK_THROWS_AS(select_attack_set(tri, loads_for(tri, 1.0), AttackStrategy::Hlea, 4, 1),
                    InputError);
}

TEST_CASE("strategy names round-trip") {
    CHECK(attack_strategy_from_string("hlea") == AttackStrategy::Hlea);
    CHECK(attack_strategy_from_string("LLEA") == AttackStrategy::Llea);
    CHECK(to_string(AttackStrategy::Llea) == "llea");
    CHECK_THROWS_AS(attack_strategy_from_string("random"), InputError);
}
