#include "copq/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "copq/errors.hpp"
#include "copq/rng.hpp"

namespace copq {

double SquareMatrix::max_entry() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, v);
    return m;
}

int instance_size(const ProblemInstance& inst) {
    return std::visit([](const auto& p) { return p.size(); }, inst);
}

const std::string& instance_name(const ProblemInstance& inst) {
    return std::visit([](const auto& p) -> const std::string& { return p.name; }, inst);
}

bool is_tsp(const ProblemInstance& inst) {
    return std::holds_alternative<TspInstance>(inst);
}

double tour_cost(const TspInstance& inst, const Permutation& pi) {
    const int n = inst.size();
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
        total += inst.d.at(pi[p], pi[(p + 1) % n]);
    }
    return total;
}

double qap_cost(const QapInstance& inst, const Permutation& pi) {
    const int n = inst.size();
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            total += inst.b.at(k, l) * inst.c.at(pi[k], pi[l]);
        }
    }
    return total;
}

double instance_cost(const ProblemInstance& inst, const Permutation& pi) {
    if (const auto* t = std::get_if<TspInstance>(&inst)) return tour_cost(*t, pi);
    return qap_cost(std::get<QapInstance>(inst), pi);
}

bool is_permutation(const Permutation& pi, int n) {
    if (static_cast<int>(pi.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Optimum brute_force_optimum(const ProblemInstance& inst) {
    const int n = instance_size(inst);
    if (n > 9) {
        throw SizeLimitError("brute force enumeration is limited to n <= 9, got n = " +
                             std::to_string(n));
    }
    if (n <= 0) throw std::invalid_argument("instance is empty");

    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 0);

    Optimum best{pi, instance_cost(inst, pi)};
    // std::next_permutation walks lexicographic order, so keeping the first
    // strict improvement yields the lexicographically smallest minimizer.
    while (std::next_permutation(pi.begin(), pi.end())) {
        const double c = instance_cost(inst, pi);
        if (c < best.cost) {
            best.pi = pi;
            best.cost = c;
        }
    }
    return best;
}

namespace {

SquareMatrix random_symmetric(int n, Rng& rng) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = rng.next_int(1, 10);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return m;
}

} // namespace

ProblemInstance random_instance(bool tsp, int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");
    Rng rng(derive_seed(seed, tsp ? 0x7451 : 0x9a41));
    const std::string tag = (tsp ? "tsp" : "qap") + std::to_string(n) + "-" + std::to_string(seed);
    if (tsp) {
        TspInstance inst;
        inst.name = tag;
        inst.d = random_symmetric(n, rng);
        return inst;
    }
    QapInstance inst;
    inst.name = tag;
    inst.b = random_symmetric(n, rng);
    inst.c = random_symmetric(n, rng);
    return inst;
}

} // namespace copq
