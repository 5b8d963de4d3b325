#include "copq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace copq {

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile level must be in [0, 1]");
    std::sort(values.begin(), values.end());
    const double h = p * (static_cast<double>(values.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(h));
    return values[lo] + (h - lo) * (values[hi] - values[lo]);
}

SuccessRates success_rates(const std::vector<TrialRecord>& records, double optimum) {
    if (records.empty()) throw std::invalid_argument("no trial records");
    SuccessRates out;
    out.exact_match_semantics = optimum <= 0.0;
    int hit99 = 0;
    int hit95 = 0;
    for (const auto& r : records) {
        if (!r.feasible || !r.cost) continue;
        if (out.exact_match_semantics) {
            if (*r.cost == optimum) {
                ++hit99;
                ++hit95;
            }
            continue;
        }
        const double ratio = optimum / *r.cost;
        if (ratio >= 0.99) ++hit99;
        if (ratio >= 0.95) ++hit95;
    }
    const double denom = static_cast<double>(records.size());
    out.sr99 = 100.0 * hit99 / denom;
    out.sr95 = 100.0 * hit95 / denom;
    return out;
}

UncertaintySummary uncertainty_stats(const std::vector<TrialRecord>& records) {
    UncertaintySummary out;
    std::vector<double> percents;
    for (const auto& r : records) {
        if (r.feasible) percents.push_back(100.0 * r.probability);
    }
    out.n_feasible = static_cast<int>(percents.size());
    if (percents.empty()) return out;

    double sum = 0.0;
    double mn = percents.front();
    double mx = percents.front();
    for (double v : percents) {
        sum += v;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    const double mean = sum / percents.size();
    double var = 0.0;
    for (double v : percents) var += (v - mean) * (v - mean);
    var /= percents.size();

    out.mean = mean;
    out.max = mx;
    out.min = mn;
    out.std_dev = std::sqrt(var);
    return out;
}

AverageTimes average_times(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no trial records");
    std::vector<double> times;
    times.reserve(records.size());
    for (const auto& r : records) times.push_back(r.elapsed_s);

    AverageTimes out;
    double sum = 0.0;
    for (double t : times) sum += t;
    out.at_s = sum / times.size();

    const double q1 = quantile(times, 0.25);
    const double q3 = quantile(times, 0.75);
    const double fence = q3 + 1.5 * (q3 - q1);
    double kept_sum = 0.0;
    int kept = 0;
    for (double t : times) {
        if (t <= fence) {
            kept_sum += t;
            ++kept;
        }
    }
    out.mt_s = kept > 0 ? kept_sum / kept : out.at_s;
    return out;
}

MetricsSummary summarize(const std::vector<TrialRecord>& records, double optimum) {
    MetricsSummary out;
    out.rates = success_rates(records, optimum);
    int feasible = 0;
    for (const auto& r : records) feasible += r.feasible ? 1 : 0;
    out.feasibility = 100.0 * feasible / static_cast<double>(records.size());
    const AverageTimes times = average_times(records);
    out.at_s = times.at_s;
    out.mt_s = times.mt_s;
    out.uncertainty = uncertainty_stats(records);
    return out;
}

} // namespace copq
