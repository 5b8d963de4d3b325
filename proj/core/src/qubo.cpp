#include "copq/qubo.hpp"

#include <stdexcept>
#include <vector>

namespace copq {

void QuboModel::add_linear(int i, double c) {
    if (i < 0 || i >= num_vars) throw std::invalid_argument("variable index out of range");
    linear[i] += c;
}

void QuboModel::add_quadratic(int i, int j, double c) {
    if (i < 0 || i >= num_vars || j < 0 || j >= num_vars) {
        throw std::invalid_argument("variable index out of range");
    }
    if (i == j) {
        linear[i] += c;
        return;
    }
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += c;
}

double qubo_eval(const QuboModel& q, const std::string& bits) {
    if (static_cast<int>(bits.size()) != q.num_vars) {
        throw std::invalid_argument("bitstring length does not match variable count");
    }
    std::vector<int> x(q.num_vars);
    for (int k = 0; k < q.num_vars; ++k) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
        }
        x[k] = bits[k] - '0';
    }
    double value = q.offset;
    for (const auto& [i, c] : q.linear) value += c * x[i];
    for (const auto& [key, c] : q.quadratic) value += c * x[key.first] * x[key.second];
    return value;
}

namespace {

// A * (1 - sum_{k in group} x_k)^2, expanded.
void add_one_hot_penalty(QuboModel& q, const std::vector<int>& group, double weight) {
    q.offset += weight;
    for (std::size_t a = 0; a < group.size(); ++a) {
        q.add_linear(group[a], -weight);
        for (std::size_t b = a + 1; b < group.size(); ++b) {
            q.add_quadratic(group[a], group[b], 2.0 * weight);
        }
    }
}

void add_one_hot_rows_and_columns(QuboModel& q, int n, double weight) {
    for (int p = 0; p < n; ++p) {
        std::vector<int> column;
        for (int i = 0; i < n; ++i) column.push_back(i * n + p);
        add_one_hot_penalty(q, column, weight);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        for (int p = 0; p < n; ++p) row.push_back(i * n + p);
        add_one_hot_penalty(q, row, weight);
    }
}

} // namespace

QuboModel encode_tsp(const TspInstance& inst, double A) {
    if (A <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    const int n = inst.size();
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");

    QuboModel q;
    q.num_vars = n * n;
    q.penalty = A;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int p = 0; p < n; ++p) {
                q.add_quadratic(i * n + p, j * n + (p + 1) % n, inst.d.at(i, j));
            }
        }
    }
    add_one_hot_rows_and_columns(q, n, A);
    return q;
}

QuboModel encode_qap(const QapInstance& inst, double B) {
    if (B <= 0.0) throw std::invalid_argument("penalty weight must be positive");
    const int n = inst.size();
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");

    QuboModel q;
    q.num_vars = n * n;
    q.penalty = B;
    for (int u = 0; u < n; ++u) {
        for (int m = 0; m < n; ++m) {
            for (int l = 0; l < n; ++l) {
                for (int k = 0; k < n; ++k) {
                    const double coeff = inst.b.at(u, m) * inst.c.at(l, k);
                    if (coeff != 0.0) q.add_quadratic(u * n + l, m * n + k, coeff);
                }
            }
        }
    }
    add_one_hot_rows_and_columns(q, n, B);
    return q;
}

double default_penalty(const ProblemInstance& inst) {
    const int n = instance_size(inst);
    if (const auto* t = std::get_if<TspInstance>(&inst)) {
        return n * t->d.max_entry() + 1.0;
    }
    const auto& q = std::get<QapInstance>(inst);
    return static_cast<double>(n) * n * q.b.max_entry() * q.c.max_entry() + 1.0;
}

QuboModel encode(const ProblemInstance& inst, double penalty) {
    if (const auto* t = std::get_if<TspInstance>(&inst)) return encode_tsp(*t, penalty);
    return encode_qap(std::get<QapInstance>(inst), penalty);
}

} // namespace copq
