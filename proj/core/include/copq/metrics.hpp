#ifndef COPQ_METRICS_HPP
#define COPQ_METRICS_HPP

#include <optional>
#include <vector>

#include "copq/vqa.hpp"

namespace copq {

/// Statistics of probability*100 over the feasible trials. All four moments
/// are absent when no trial was feasible (rendered as dashes downstream).
struct UncertaintySummary {
    int n_feasible = 0;
    std::optional<double> mean;
    std::optional<double> max;
    std::optional<double> min;
    std::optional<double> std_dev; ///< population standard deviation
};

struct SuccessRates {
    double sr99 = 0.0; ///< percent of trials with optimum/cost >= 0.99
    double sr95 = 0.0;
    /// Set when optimum <= 0: the ratio is undefined, so success means
    /// cost == optimum exactly.
    bool exact_match_semantics = false;
};

struct MetricsSummary {
    SuccessRates rates;
    double feasibility = 0.0; ///< percent of feasible trials
    double at_s = 0.0;        ///< mean elapsed seconds
    double mt_s = 0.0;        ///< mean after dropping upper Tukey-fence outliers
    UncertaintySummary uncertainty;
};

/// A feasible trial succeeds at level L iff optimum/cost >= L; infeasible
/// trials always fail. Percentages are over all trials.
SuccessRates success_rates(const std::vector<TrialRecord>& records, double optimum);

UncertaintySummary uncertainty_stats(const std::vector<TrialRecord>& records);

struct AverageTimes {
    double at_s = 0.0;
    double mt_s = 0.0;
};

/// at: arithmetic mean of elapsed seconds. mt: mean after removing values
/// above Q3 + 1.5*IQR, with quartiles from linear interpolation of order
/// statistics.
AverageTimes average_times(const std::vector<TrialRecord>& records);

MetricsSummary summarize(const std::vector<TrialRecord>& records, double optimum);

/// Linearly interpolated quantile of a sample (p in [0, 1]).
double quantile(std::vector<double> values, double p);

} // namespace copq

#endif
