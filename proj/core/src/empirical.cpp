#include "citekit/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "citekit/rng.hpp"

namespace citekit {

namespace {

void require_counts(std::span<const double> counts, const char* where)
{
    if (counts.empty())
        throw std::invalid_argument(std::string(where) + ": citation vector must not be empty");
}

}  // namespace

std::pair<ArithMoments, LogMoments> empirical_moments(std::span<const double> counts)
{
    require_counts(counts, "empirical_moments");

    const double n = static_cast<double>(counts.size());
    double sum = 0.0;
    double log_sum = 0.0;
    for (const double c : counts) {
        // integer citation data is >= 0; continuous synthetic samples only
        // guarantee c + 1 > 0, which is all the logarithm needs
        if (!(c > -1.0))
            throw std::invalid_argument("empirical_moments: counts need c + 1 > 0");
        sum += c + 1.0;
        log_sum += std::log1p(c);
    }
    const double m = sum / n;
    const double mu = log_sum / n;

    double sq = 0.0;
    double log_sq = 0.0;
    for (const double c : counts) {
        const double d = (c + 1.0) - m;
        const double ld = std::log1p(c) - mu;
        sq += d * d;
        log_sq += ld * ld;
    }
    // population (divisor n) standard deviations
    return {ArithMoments{m, std::sqrt(sq / n)}, LogMoments{mu, std::sqrt(log_sq / n)}};
}

int empirical_h_index(std::span<const double> counts)
{
    require_counts(counts, "empirical_h_index");

    std::vector<double> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    int h = 0;
    while (h < static_cast<int>(sorted.size()) && sorted[h] >= static_cast<double>(h + 1))
        ++h;
    return h;
}

double empirical_csi(std::span<const double> t, std::span<const double> r)
{
    require_counts(t, "empirical_csi");
    require_counts(r, "empirical_csi");

    std::vector<double> sorted_r(r.begin(), r.end());
    std::sort(sorted_r.begin(), sorted_r.end());

    // half units: 2 per win, 1 per tie; exact in integers
    std::uint64_t half_units = 0;
    for (const double c : t) {
        const auto lo = std::lower_bound(sorted_r.begin(), sorted_r.end(), c);
        const auto hi = std::upper_bound(lo, sorted_r.end(), c);
        half_units += 2 * static_cast<std::uint64_t>(lo - sorted_r.begin()) +
                      static_cast<std::uint64_t>(hi - lo);
    }
    return static_cast<double>(half_units) /
           (2.0 * static_cast<double>(t.size()) * static_cast<double>(r.size()));
}

double empirical_group_csi(std::span<const double> t, int k_t, std::span<const double> r,
                           int k_r, int trials, std::uint64_t seed)
{
    require_counts(t, "empirical_group_csi");
    require_counts(r, "empirical_group_csi");
    if (k_t < 1 || k_r < 1)
        throw std::invalid_argument("empirical_group_csi: group sizes must be >= 1");
    if (trials < 1)
        throw std::invalid_argument("empirical_group_csi: trials must be >= 1");

    Rng rng(seed);
    std::uint64_t half_units = 0;
    for (int trial = 0; trial < trials; ++trial) {
        double sum_t = 0.0;
        for (int i = 0; i < k_t; ++i)
            sum_t += t[uniform_index(rng, t.size())];
        double sum_r = 0.0;
        for (int i = 0; i < k_r; ++i)
            sum_r += r[uniform_index(rng, r.size())];
        // compare means by cross multiplication: exact for integer counts
        const double lhs = sum_t * static_cast<double>(k_r);
        const double rhs = sum_r * static_cast<double>(k_t);
        if (lhs > rhs)
            half_units += 2;
        else if (lhs == rhs)
            half_units += 1;
    }
    return static_cast<double>(half_units) / (2.0 * static_cast<double>(trials));
}

KappaResult empirical_kappa(std::span<const double> t, std::span<const double> r,
                            double threshold, int trials, std::uint64_t seed, long long cap)
{
    if (!(threshold > 0.5 && threshold < 1.0))
        throw std::invalid_argument("empirical_kappa: threshold must be in (0.5, 1)");
    if (cap < 1)
        throw std::invalid_argument("empirical_kappa: cap must be >= 1");

    const auto [arith_t, log_t] = empirical_moments(t);
    const auto [arith_r, log_r] = empirical_moments(r);

    KappaResult result;
    result.threshold = threshold;

    if (!(arith_t.m > arith_r.m)) {
        result.status = KappaStatus::limit_unreachable;
        result.success_at_kappa = arith_t.m == arith_r.m ? 0.5 : 0.0;
        return result;
    }

    const double ratio =
        arith_t.v > 0.0 && arith_r.v > 0.0 ? arith_r.v / arith_t.v : 1.0;

    for (long long k_t = 1; k_t <= cap; ++k_t) {
        const long long k_r = std::max(1LL, std::llround(static_cast<double>(k_t) * ratio));
        if (k_r > cap)
            break;
        const double success =
            empirical_group_csi(t, static_cast<int>(k_t), r, static_cast<int>(k_r), trials,
                                splitmix64(seed ^ static_cast<std::uint64_t>(k_t)));
        if (success >= threshold) {
            result.kappa_t = k_t;
            result.kappa_r = k_r;
            result.success_at_kappa = success;
            result.reachable = true;
            result.status = KappaStatus::found;
            return result;
        }
    }
    result.status = KappaStatus::cap_exceeded;
    return result;
}

RankTable empirical_average_rank(
    std::span<const std::pair<std::string, CitationVector>> journals)
{
    if (journals.empty())
        throw std::invalid_argument("empirical_average_rank: journal set must not be empty");

    std::size_t total = 0;
    for (const auto& [id, counts] : journals) {
        if (counts.empty())
            throw std::invalid_argument("empirical_average_rank: journal '" + id +
                                        "' has no papers");
        total += counts.size();
    }

    // pool all papers, tagged with their journal index
    std::vector<std::pair<double, std::uint32_t>> pooled;
    pooled.reserve(total);
    for (std::size_t ji = 0; ji < journals.size(); ++ji)
        for (const double c : journals[ji].second)
            pooled.emplace_back(c, static_cast<std::uint32_t>(ji));
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // per-paper percentile in half units: 2 * (# strictly below) + (# tied,
    // the paper itself included); accumulate per journal
    std::vector<std::uint64_t> half_units(journals.size(), 0);
    std::size_t run_begin = 0;
    while (run_begin < pooled.size()) {
        std::size_t run_end = run_begin;
        while (run_end < pooled.size() && pooled[run_end].first == pooled[run_begin].first)
            ++run_end;
        const std::uint64_t contribution =
            2 * static_cast<std::uint64_t>(run_begin) +
            static_cast<std::uint64_t>(run_end - run_begin);
        for (std::size_t i = run_begin; i < run_end; ++i)
            half_units[pooled[i].second] += contribution;
        run_begin = run_end;
    }

    RankTable table;
    for (std::size_t ji = 0; ji < journals.size(); ++ji) {
        const auto [it, inserted] = table.emplace(
            journals[ji].first,
            static_cast<double>(half_units[ji]) /
                (2.0 * static_cast<double>(total) *
                 static_cast<double>(journals[ji].second.size())));
        if (!inserted)
            throw std::invalid_argument("empirical_average_rank: duplicate journal id '" +
                                        journals[ji].first + "'");
    }
    return table;
}

}  // namespace citekit
