#include "citekit/estimated.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace citekit {

void validate(const JournalRecord& j)
{
    if (j.id.empty())
        throw std::invalid_argument("journal record: id must not be empty");
    if (j.n_papers < 1)
        throw std::invalid_argument("journal record '" + j.id + "': n_papers must be >= 1");
    if (!(j.arith.m >= 1.0))
        throw std::invalid_argument("journal record '" + j.id + "': m must be >= 1");
    if (!(j.arith.v >= 0.0))
        throw std::invalid_argument("journal record '" + j.id + "': v must be >= 0");
    if (j.log && !(j.log->sigma >= 0.0))
        throw std::invalid_argument("journal record '" + j.id + "': sigma must be >= 0");
}

LogMoments effective_log(const JournalRecord& j)
{
    return j.log ? *j.log : arith_to_log(j.arith);
}

HIndexEstimate estimate_h_index(const JournalRecord& j)
{
    validate(j);
    const LogMoments lm = effective_log(j);
    const double n = static_cast<double>(j.n_papers);

    double h;
    if (lm.sigma == 0.0) {
        // point mass: every paper has exactly c = exp(mu) - 1 citations
        h = std::min(n, std::expm1(lm.mu));
    } else if (n * lognormal_ccdf(n + 1.0, lm) >= n) {
        // saturated journal: essentially every paper is cited more than N
        // times, so the fixed point sits exactly on the upper boundary
        h = n;
    } else {
        // g(h) = h - N * ccdf(h + 1) is strictly increasing with
        // g(0) <= 0 < g(N); bisect until the bracket is negligible.
        double lo = 0.0;
        double hi = n;
        for (int iter = 0; iter < 200 && (hi - lo) > 1e-11; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid - n * lognormal_ccdf(mid + 1.0, lm) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        h = 0.5 * (lo + hi);
    }
    return HIndexEstimate{h, static_cast<int>(std::floor(h))};
}

double csi(const LogMoments& t, const LogMoments& r)
{
    if (!(t.sigma >= 0.0) || !(r.sigma >= 0.0))
        throw std::domain_error("csi: sigma must be >= 0");

    const double denom = std::hypot(t.sigma, r.sigma);
    if (denom == 0.0) {
        if (t.mu == r.mu)
            throw DegenerateComparisonError(
                "csi: both journals are identical point masses; comparison undefined");
        return t.mu > r.mu ? 1.0 : 0.0;
    }
    return std_normal_cdf((t.mu - r.mu) / denom);
}

double group_csi(const LogMoments& t, int k_t, const LogMoments& r, int k_r)
{
    return csi(group_moments(t, k_t).log(), group_moments(r, k_r).log());
}

namespace {

// Coupled group success rate along the dispersion rule k_r/k_t = v_r/v_t,
// for real or integer k_t. Either v being zero collapses the rule to
// k_r = k_t.
struct CoupledSuccess {
    LogMoments lm_t;
    LogMoments lm_r;
    double ratio;

    CoupledSuccess(const JournalRecord& t, const JournalRecord& r)
        : lm_t(effective_log(t)),
          lm_r(effective_log(r)),
          ratio(t.arith.v > 0.0 && r.arith.v > 0.0 ? r.arith.v / t.arith.v : 1.0)
    {
    }

    long long coupled_kr(long long k_t) const
    {
        return std::max(1LL, std::llround(static_cast<double>(k_t) * ratio));
    }

    double at_real(double k_t) const
    {
        const double k_r = std::max(1.0, k_t * ratio);
        return csi(mean_log_moments(lm_t, k_t), mean_log_moments(lm_r, k_r));
    }

    double at_int(long long k_t) const
    {
        return csi(mean_log_moments(lm_t, static_cast<double>(k_t)),
                   mean_log_moments(lm_r, static_cast<double>(coupled_kr(k_t))));
    }
};

}  // namespace

KappaResult min_representative_size(const JournalRecord& t, const JournalRecord& r,
                                    double threshold, long long cap)
{
    validate(t);
    validate(r);
    if (!(threshold > 0.5 && threshold < 1.0))
        throw std::invalid_argument("min_representative_size: threshold must be in (0.5, 1)");
    if (cap < 1)
        throw std::invalid_argument("min_representative_size: cap must be >= 1");

    KappaResult result;
    result.threshold = threshold;

    const CoupledSuccess s(t, r);

    // The k -> infinity limit compares the implied arithmetic means; without
    // strict dominance of t no sample size reaches a threshold above 0.5.
    const double mean_t = log_to_arith(s.lm_t).m;
    const double mean_r = log_to_arith(s.lm_r).m;
    if (!(mean_t > mean_r)) {
        result.status = KappaStatus::limit_unreachable;
        result.success_at_kappa = mean_t == mean_r ? 0.5 : 0.0;
        return result;
    }

    const auto finish = [&](long long k_t) {
        // walk down over local rounding wiggles so the pair is minimal
        while (k_t > 1 && s.at_int(k_t - 1) >= threshold)
            --k_t;
        result.kappa_t = k_t;
        result.kappa_r = s.coupled_kr(k_t);
        result.success_at_kappa = s.at_int(k_t);
        result.reachable = true;
        result.status = KappaStatus::found;
        return result;
    };

    if (s.at_int(1) >= threshold)
        return finish(1);

    // bracket the real-valued root in k_t, geometrically
    double lo = 1.0;
    double hi = 2.0;
    while (s.at_real(hi) < threshold) {
        lo = hi;
        hi *= 2.0;
        if (lo > static_cast<double>(cap)) {
            result.status = KappaStatus::cap_exceeded;
            result.success_at_kappa = s.at_real(static_cast<double>(cap));
            return result;
        }
    }
    for (int iter = 0; iter < 200 && hi - lo > 0.25; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (s.at_real(mid) < threshold ? lo : hi) = mid;
    }

    // scan the neighboring integers upward until the threshold holds
    long long k_t = std::max(1LL, static_cast<long long>(std::floor(lo)));
    while (s.at_int(k_t) < threshold) {
        ++k_t;
        if (k_t > cap) {
            result.status = KappaStatus::cap_exceeded;
            result.success_at_kappa = s.at_int(cap);
            return result;
        }
    }
    if (s.coupled_kr(k_t) > cap) {
        result.status = KappaStatus::cap_exceeded;
        result.success_at_kappa = s.at_int(k_t);
        return result;
    }
    return finish(k_t);
}

RankTable average_rank(std::span<const JournalRecord> records)
{
    if (records.empty())
        throw std::invalid_argument("average_rank: journal set must not be empty");

    std::vector<const JournalRecord*> sorted;
    sorted.reserve(records.size());
    double total = 0.0;
    for (const JournalRecord& j : records) {
        validate(j);
        sorted.push_back(&j);
        total += static_cast<double>(j.n_papers);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const JournalRecord* a, const JournalRecord* b) { return a->id < b->id; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i]->id == sorted[i - 1]->id)
            throw std::invalid_argument("average_rank: duplicate journal id '" + sorted[i]->id +
                                        "'");

    std::vector<LogMoments> lms(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        lms[i] = effective_log(*sorted[i]);

    RankTable table;
    for (std::size_t ti = 0; ti < sorted.size(); ++ti) {
        double acc = 0.0;
        for (std::size_t ri = 0; ri < sorted.size(); ++ri) {
            const double s = (ri == ti) ? 0.5 : csi(lms[ti], lms[ri]);
            acc += static_cast<double>(sorted[ri]->n_papers) * s;
        }
        table.emplace(sorted[ti]->id, acc / total);
    }
    return table;
}

ComparisonResult compare_estimated(const JournalRecord& t, const JournalRecord& r, int k_t,
                                   int k_r, double threshold, long long cap)
{
    validate(t);
    validate(r);
    if (k_t < 1 || k_r < 1)
        throw std::invalid_argument("compare_estimated: group sizes must be >= 1");

    const LogMoments lt = effective_log(t);
    const LogMoments lr = effective_log(r);

    ComparisonResult res;
    res.t_id = t.id;
    res.r_id = r.id;
    res.k_t = k_t;
    res.k_r = k_r;
    res.csi_value = csi(lt, lr);
    res.group_csi_value = group_csi(lt, k_t, lr, k_r);
    res.kappa = min_representative_size(t, r, threshold, cap);
    res.provenance = Provenance::estimated;
    return res;
}

}  // namespace citekit
