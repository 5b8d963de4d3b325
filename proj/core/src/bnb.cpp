#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "copq/errors.hpp"
#include "copq/solvers.hpp"

namespace copq {

namespace {

void check_prefix(const Permutation& partial, int n) {
    if (static_cast<int>(partial.size()) > n) {
        throw std::invalid_argument("prefix longer than instance size");
    }
    std::vector<bool> seen(n, false);
    for (int v : partial) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("prefix is not part of a permutation");
        }
        seen[v] = true;
    }
}

// Committed tour edges plus, for every city not yet placed, the cheapest edge
// leaving it. Each unplaced city contributes exactly one outgoing edge to any
// completed tour, so the sum of per-city minima cannot exceed the true cost.
double tsp_bound(const TspInstance& inst, const Permutation& partial) {
    const int n = inst.size();
    const int k = static_cast<int>(partial.size());
    double bound = 0.0;
    for (int p = 0; p + 1 < k; ++p) bound += inst.d.at(partial[p], partial[p + 1]);
    if (k == n) return bound + inst.d.at(partial[n - 1], partial[0]);

    std::vector<bool> placed(n, false);
    for (int v : partial) placed[v] = true;
    for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        double cheapest = std::numeric_limits<double>::infinity();
        for (int v = 0; v < n; ++v) {
            if (v != u) cheapest = std::min(cheapest, inst.d.at(u, v));
        }
        bound += cheapest;
    }
    return bound;
}

// Committed facility interactions plus a rearrangement-inequality bound on the
// rest: the undetermined flow entries sorted descending, paired with the
// undetermined distance entries sorted ascending. Any completion induces a
// bijection between those two multisets, and no pairing multiplies to less.
double qap_bound(const QapInstance& inst, const Permutation& partial) {
    const int n = inst.size();
    const int m = static_cast<int>(partial.size());
    std::vector<bool> loc_used(n, false);
    for (int l : partial) loc_used[l] = true;

    double bound = 0.0;
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            bound += inst.b.at(k, l) * inst.c.at(partial[k], partial[l]);
        }
    }
    if (m == n) return bound;

    std::vector<double> flows;
    std::vector<double> dists;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k == l) continue;
            if (k >= m || l >= m) flows.push_back(inst.b.at(k, l));
            if (!loc_used[k] || !loc_used[l]) dists.push_back(inst.c.at(k, l));
        }
    }
    std::sort(flows.begin(), flows.end(), std::greater<double>());
    std::sort(dists.begin(), dists.end());
    for (std::size_t i = 0; i < flows.size(); ++i) bound += flows[i] * dists[i];

    // Self-interaction of undetermined facilities, if the diagonals are nonzero.
    double min_diag = std::numeric_limits<double>::infinity();
    for (int l = 0; l < n; ++l) {
        if (!loc_used[l]) min_diag = std::min(min_diag, inst.c.at(l, l));
    }
    for (int k = m; k < n; ++k) bound += inst.b.at(k, k) * min_diag;
    return bound;
}

struct Node {
    Permutation prefix;
    double bound;
    long long seq; // FIFO tie-break keeps the pop order deterministic
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.seq > b.seq;
    }
};

} // namespace

double lower_bound(const ProblemInstance& inst, const Permutation& partial) {
    check_prefix(partial, instance_size(inst));
    if (const auto* t = std::get_if<TspInstance>(&inst)) return tsp_bound(*t, partial);
    return qap_bound(std::get<QapInstance>(inst), partial);
}

SolveResult bnb_solve(const ProblemInstance& inst, const BnbOptions& opts) {
    const int n = instance_size(inst);
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");
    if (n > opts.max_n) {
        throw SizeLimitError("branch and bound is limited to n <= " +
                             std::to_string(opts.max_n) + ", got n = " + std::to_string(n));
    }

    const auto start = std::chrono::steady_clock::now();
    SolveResult result;

    // Greedy dive: extend by the child of smallest bound until complete. This
    // seeds the incumbent so best-first pruning bites immediately.
    Permutation incumbent;
    {
        Permutation prefix;
        std::vector<bool> used(n, false);
        for (int depth = 0; depth < n; ++depth) {
            int best_v = -1;
            double best_b = std::numeric_limits<double>::infinity();
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                prefix.push_back(v);
                const double b = lower_bound(inst, prefix);
                prefix.pop_back();
                if (b < best_b) {
                    best_b = b;
                    best_v = v;
                }
            }
            prefix.push_back(best_v);
            used[best_v] = true;
        }
        incumbent = prefix;
    }
    double incumbent_cost = instance_cost(inst, incumbent);
    result.meta.nodes_explored = 1;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
    long long seq = 0;
    queue.push({{}, lower_bound(inst, {}), seq++});

    while (!queue.empty()) {
        Node node = queue.top();
        queue.pop();
        if (node.bound >= incumbent_cost) {
            ++result.meta.nodes_pruned;
            continue;
        }
        if (static_cast<int>(node.prefix.size()) == n) {
            const double cost = instance_cost(inst, node.prefix);
            ++result.meta.nodes_explored;
            if (cost < incumbent_cost) {
                incumbent_cost = cost;
                incumbent = node.prefix;
            }
            continue;
        }
        if (opts.audit && node.bound > incumbent_cost) ++result.meta.audit_violations;
        ++result.meta.nodes_expanded;

        std::vector<bool> used(n, false);
        for (int v : node.prefix) used[v] = true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            Node child;
            child.prefix = node.prefix;
            child.prefix.push_back(v);
            child.bound = lower_bound(inst, child.prefix);
            child.seq = seq++;
            if (child.bound >= incumbent_cost) {
                ++result.meta.nodes_pruned;
            } else {
                queue.push(std::move(child));
            }
        }
    }

    result.pi = incumbent;
    result.cost = incumbent_cost;
    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace copq
