#ifndef COPQ_INSTANCE_HPP
#define COPQ_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace copq {

/// Dense n-by-n matrix stored row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, double fill = 0.0)
        : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }

    double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    double max_entry() const;

    bool operator==(const SquareMatrix& other) const = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

/// Travelling salesman instance: d.at(i, j) is the cost of the directed leg
/// from city i to city j. The diagonal is zero.
struct TspInstance {
    std::string name;
    SquareMatrix d;

    int size() const { return d.size(); }
};

/// Quadratic assignment instance: flows b between facilities, distances c
/// between locations. Both diagonals are zero.
struct QapInstance {
    std::string name;
    SquareMatrix b; // flow
    SquareMatrix c; // distance

    int size() const { return b.size(); }
};

using ProblemInstance = std::variant<TspInstance, QapInstance>;

using Permutation = std::vector<int>;

int instance_size(const ProblemInstance& inst);
const std::string& instance_name(const ProblemInstance& inst);
bool is_tsp(const ProblemInstance& inst);

/// Cost of the closed tour visiting pi[0], pi[1], ..., pi[n-1], pi[0].
double tour_cost(const TspInstance& inst, const Permutation& pi);

/// Assignment cost sum_{k,l} b[k][l] * c[pi[k]][pi[l]] where pi maps
/// facility -> location.
double qap_cost(const QapInstance& inst, const Permutation& pi);

double instance_cost(const ProblemInstance& inst, const Permutation& pi);

/// True iff pi is a permutation of 0..n-1.
bool is_permutation(const Permutation& pi, int n);

struct Optimum {
    Permutation pi;
    double cost = 0.0;
};

/// Exhaustive minimum over all n! permutations. Ties resolve to the
/// lexicographically smallest permutation. Guarded at n <= 9.
Optimum brute_force_optimum(const ProblemInstance& inst);

/// Seeded random instance with symmetric integer entries in [1, 10] and a
/// zero diagonal ([1, 10] independently for both QAP matrices).
ProblemInstance random_instance(bool tsp, int n, std::uint64_t seed);

} // namespace copq

#endif
