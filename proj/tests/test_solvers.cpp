#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "copq/errors.hpp"
#include "copq/instance.hpp"
#include "copq/rng.hpp"
#include "copq/solvers.hpp"

using namespace copq;

namespace {

TspInstance uniform_tsp(int n) {
    TspInstance inst;
    inst.d = SquareMatrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) inst.d.at(i, j) = 1.0;
        }
    }
    return inst;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Minimum cost over every completion of the prefix, by recursion.
double min_completion(const ProblemInstance& inst, Permutation prefix) {
    const int n = instance_size(inst);
    std::vector<bool> used(n, false);
    for (int v : prefix) used[v] = true;
    double best = std::numeric_limits<double>::infinity();
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            best = std::min(best, instance_cost(inst, prefix));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
            used[v] = false;
        }
    };
    recurse(recurse);
    return best;
}

} // namespace

TEST_CASE("branch and bound solves the uniform 3-city tour") {
    const SolveResult res = bnb_solve(ProblemInstance{uniform_tsp(3)});
    CHECK(res.cost == 3.0);
    CHECK(is_permutation(res.pi, 3));
}

TEST_CASE("branch and bound matches brute force at the largest guarded sizes") {
    const ProblemInstance tsp7 = random_instance(true, 7, 2024);
    CHECK(bnb_solve(tsp7).cost == doctest::Approx(brute_force_optimum(tsp7).cost));
    const ProblemInstance qap6 = random_instance(false, 6, 77);
    CHECK(bnb_solve(qap6).cost == doctest::Approx(brute_force_optimum(qap6).cost));
}

TEST_CASE("branch and bound equals brute force across sizes and seeds") {
    for (const bool tsp : {true, false}) {
        for (int n = 3; n <= 8; ++n) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const ProblemInstance inst = random_instance(tsp, n, 1000 + seed);
                const SolveResult res = bnb_solve(inst);
                CHECK(res.cost == doctest::Approx(brute_force_optimum(inst).cost));
                CHECK(instance_cost(inst, res.pi) == doctest::Approx(res.cost));
            }
        }
    }
}

TEST_CASE("branch and bound audit mode sees no bound violations") {
    BnbOptions opts;
    opts.audit = true;
    for (const bool tsp : {true, false}) {
        const ProblemInstance inst = random_instance(tsp, 7, 5);
        const SolveResult res = bnb_solve(inst, opts);
        CHECK(res.meta.audit_violations == 0);
        CHECK(res.meta.nodes_explored <= static_cast<long long>(factorial(7)));
        CHECK(res.meta.nodes_expanded > 0);
    }
}

TEST_CASE("branch and bound guards its size cap") {
    CHECK_THROWS_AS(bnb_solve(random_instance(true, 13, 1)), SizeLimitError);
    BnbOptions tight;
    tight.max_n = 5;
    CHECK_THROWS_AS(bnb_solve(random_instance(true, 6, 1), tight), SizeLimitError);
}

TEST_CASE("lower bound is admissible on a uniform instance") {
    const ProblemInstance inst{uniform_tsp(3)};
    CHECK(lower_bound(inst, {}) <= 3.0);
}

TEST_CASE("lower bound of a full permutation is the exact cost") {
    for (const bool tsp : {true, false}) {
        const ProblemInstance inst = random_instance(tsp, 5, 8);
        const Permutation pi{2, 0, 4, 1, 3};
        CHECK(lower_bound(inst, pi) == doctest::Approx(instance_cost(inst, pi)));
    }
}

TEST_CASE("lower bound never exceeds the best completion") {
    Rng rng(314);
    for (const bool tsp : {true, false}) {
        const ProblemInstance inst = random_instance(tsp, 5, 31);
        for (int trial = 0; trial < 40; ++trial) {
            Permutation pool(5);
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 4; i > 0; --i) std::swap(pool[i], pool[rng.next_int(0, i)]);
            const int len = rng.next_int(0, 5);
            const Permutation prefix(pool.begin(), pool.begin() + len);
            CHECK(lower_bound(inst, prefix) <=
                  doctest::Approx(min_completion(inst, prefix)).epsilon(1e-12));
        }
    }
}

TEST_CASE("lower bound rejects invalid prefixes") {
    const ProblemInstance inst = random_instance(true, 4, 1);
    CHECK_THROWS_AS(lower_bound(inst, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound(inst, {0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound(inst, {0, 1, 2, 3, 2}), std::invalid_argument);
}

TEST_CASE("annealing finds the uniform 3-city optimum on every seed") {
    const ProblemInstance inst{uniform_tsp(3)};
    const SaConfig cfg{0.01, 10, 0.8, 10.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(sa_solve(inst, cfg, seed).cost == 3.0);
    }
}

TEST_CASE("annealing reaches the tour optimum almost always at n=5") {
    const ProblemInstance inst = random_instance(true, 5, 6);
    const double best = brute_force_optimum(inst).cost;
    const SaConfig cfg{0.01, 10, 0.8, 10.0};
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        if (sa_solve(inst, cfg, seed).cost == doctest::Approx(best)) ++hits;
    }
    CHECK(hits >= 29);
}

TEST_CASE("annealing lands within one percent of the assignment optimum at n=5") {
    const ProblemInstance inst = random_instance(false, 5, 1);
    const double best = brute_force_optimum(inst).cost;
    const SaConfig cfg{1.0, 20, 0.90, 20.0};
    int exact = 0;
    int near = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const double cost = sa_solve(inst, cfg, seed).cost;
        if (cost == doctest::Approx(best)) ++exact;
        if (best / cost >= 0.99) ++near;
    }
    CHECK(exact >= 24);
    CHECK(near >= 29);
}

TEST_CASE("annealing is reproducible and self-consistent") {
    const ProblemInstance inst = random_instance(false, 6, 12);
    const SaConfig cfg{1.0, 20, 0.90, 20.0};
    const SolveResult a = sa_solve(inst, cfg, 42);
    const SolveResult b = sa_solve(inst, cfg, 42);
    CHECK(a.pi == b.pi);
    CHECK(a.cost == b.cost);
    CHECK(a.meta.moves_accepted == b.meta.moves_accepted);
    CHECK(a.meta.temperature_steps == b.meta.temperature_steps);
    CHECK(instance_cost(inst, a.pi) == doctest::Approx(a.cost));
}

TEST_CASE("annealing never returns worse than its starting permutation") {
    const ProblemInstance inst = random_instance(true, 6, 9);
    const SaConfig cfg{0.01, 10, 0.8, 10.0};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        // Reconstruct the seeded initial shuffle the solver uses.
        Rng rng(derive_seed(seed, 0x5a));
        Permutation initial(6);
        std::iota(initial.begin(), initial.end(), 0);
        for (int i = 5; i > 0; --i) std::swap(initial[i], initial[rng.next_int(0, i)]);
        CHECK(sa_solve(inst, cfg, seed).cost <= instance_cost(inst, initial));
    }
}

TEST_CASE("annealing runs the geometric schedule down to the floor") {
    const ProblemInstance inst = random_instance(true, 4, 3);
    const SolveResult res = sa_solve(inst, SaConfig{0.01, 10, 0.8, 10.0}, 1);
    // 10 * 0.8^k stays >= 0.01 for k = 0..30
    CHECK(res.meta.temperature_steps == 31);
    const SolveResult qap = sa_solve(random_instance(false, 4, 3), SaConfig{1.0, 20, 0.90, 20.0}, 1);
    CHECK(qap.meta.temperature_steps == 29);
}

TEST_CASE("annealing validates its configuration") {
    const ProblemInstance inst = random_instance(true, 4, 1);
    CHECK_THROWS_AS(sa_solve(inst, SaConfig{0.0, 10, 0.8, 10.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sa_solve(inst, SaConfig{0.01, 0, 0.8, 10.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sa_solve(inst, SaConfig{0.01, 10, 1.0, 10.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sa_solve(inst, SaConfig{0.01, 10, 0.8, 0.0}, 1), std::invalid_argument);
}
