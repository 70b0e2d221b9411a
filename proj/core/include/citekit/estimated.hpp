#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "citekit/lognormal.hpp"

namespace citekit {

/// Whether a record's log moments were measured from raw data or derived
/// from (m, v) through the log-normal assumption.
enum class MomentSource { measured, derived };

/// One journal: identity, paper count and both moment sets (a summary-table
/// row). Log moments are optional; when absent they are derived on demand.
struct JournalRecord {
    std::string id;
    std::string name;
    int n_papers = 0;
    ArithMoments arith;
    std::optional<LogMoments> log;
    MomentSource log_source = MomentSource::derived;
};

/// Throws std::invalid_argument if the record violates its invariants
/// (n_papers >= 1, m >= 1, v >= 0, sigma >= 0 when present).
void validate(const JournalRecord& j);

/// The log moments indicator formulas run on: the measured ones when the
/// record carries them, otherwise arith_to_log(j.arith).
LogMoments effective_log(const JournalRecord& j);

/// Journal Impact Factor is simply the mean citation count m.
inline double impact_factor(const JournalRecord& j) { return j.arith.m; }

/// Thrown when a pairwise comparison is undefined: both distributions are
/// point masses at the same value.
class DegenerateComparisonError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct HIndexEstimate {
    double h_real = 0.0;  ///< fixed point of h = N * ccdf(h + 1)
    int h_int = 0;        ///< floor(h_real)
};

/// Estimated journal h-index: the unique fixed point of
///   h = N * P(C > h + 1)
/// under the fitted log-normal, solved by bisection on [0, N] (the right
/// hand side is strictly decreasing in h). The residual of the returned
/// root is below 1e-6. sigma = 0 degenerates to a point mass where every
/// paper has c = exp(mu) - 1 citations and h = min(N, c) in closed form.
HIndexEstimate estimate_h_index(const JournalRecord& j);

/// Citation success index: the probability that a random paper from t has
/// more citations than a random paper from r,
///   S = Phi( (mu_t - mu_r) / sqrt(sigma_t^2 + sigma_r^2) ).
/// If both sigmas are zero the comparison is a step: 0 or 1 for unequal
/// mus, DegenerateComparisonError for equal ones.
double csi(const LogMoments& t, const LogMoments& r);

/// Group-group success rate: csi applied to the moment-matched parameters
/// of the mean of k_t samples from t and k_r samples from r.
double group_csi(const LogMoments& t, int k_t, const LogMoments& r, int k_r);

enum class KappaStatus {
    found,              ///< minimal pair located
    limit_unreachable,  ///< even k -> infinity cannot reach the threshold
    cap_exceeded,       ///< a pair may exist but lies beyond the search cap
};

struct KappaResult {
    long long kappa_t = 0;  ///< set when reachable
    long long kappa_r = 0;
    double success_at_kappa = 0.0;  ///< group CSI at the pair (or the k->inf limit)
    double threshold = 0.0;
    bool reachable = false;
    KappaStatus status = KappaStatus::limit_unreachable;
};

/// Smallest coupled sample sizes at which the group-group success rate of t
/// over r reaches the threshold. Sizes are coupled by the dispersion rule
/// k_r = max(1, round(k_t * v_r / v_t)) (ratio 1 when either v is zero);
/// the real-valued root in k_t is bracketed and bisected, then the
/// neighboring integer pairs are scanned so the returned pair is minimal.
/// Reachability requires t's implied arithmetic mean to strictly dominate;
/// pairs beyond `cap` (either component) report cap_exceeded instead.
KappaResult min_representative_size(const JournalRecord& t, const JournalRecord& r,
                                    double threshold = 0.9, long long cap = 1'000'000);

/// Average percentile rank per journal id, each in [0, 1].
using RankTable = std::map<std::string, double>;

/// Estimated average rank of every journal's papers within the pooled set:
///   R_t = sum_r N_r * S(t, r) / sum_s N_s
/// with the self term contributing N_t * 0.5. The N-weighted mean of the
/// table is 0.5 by complementarity. Summation runs in ascending id order so
/// results are byte-stable. Throws std::invalid_argument on an empty set or
/// duplicate ids and propagates csi degeneracy errors.
RankTable average_rank(std::span<const JournalRecord> records);

/// Provenance of a pairwise comparison's numbers.
enum class Provenance { empirical, estimated, monte_carlo };

/// Bundle of the pairwise indicators for one (t, r) comparison.
struct ComparisonResult {
    std::string t_id;
    std::string r_id;
    double csi_value = 0.0;
    int k_t = 1;
    int k_r = 1;
    double group_csi_value = 0.0;
    KappaResult kappa;
    Provenance provenance = Provenance::estimated;
};

/// Full moment-based comparison of two journals: one-one CSI, group CSI at
/// (k_t, k_r) and the minimum representative sizes at the threshold.
ComparisonResult compare_estimated(const JournalRecord& t, const JournalRecord& r,
                                   int k_t, int k_r, double threshold = 0.9,
                                   long long cap = 1'000'000);

}  // namespace citekit
