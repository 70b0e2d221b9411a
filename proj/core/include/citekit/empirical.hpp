#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citekit/estimated.hpp"
#include "citekit/lognormal.hpp"

namespace citekit {

/// Raw per-paper citation counts of one journal, order irrelevant. Stored as
/// doubles so the same operations run on integer counts and on continuous
/// synthetic samples.
using CitationVector = std::vector<double>;

/// Arithmetic and logarithmic moments of the shifted counts (c + 1):
/// m = mean(c+1), v = population std of (c+1), mu = mean(ln(c+1)),
/// sigma = population std of ln(c+1). Throws std::invalid_argument on an
/// empty vector or a negative count.
std::pair<ArithMoments, LogMoments> empirical_moments(std::span<const double> counts);

/// Largest h such that at least h papers have at least h citations,
/// computed on the raw (unshifted) counts.
int empirical_h_index(std::span<const double> counts);

/// Probability of superiority over all |t|*|r| ordered pairs, ties at half
/// credit, so empirical_csi(t, r) + empirical_csi(r, t) = 1. Sort-and-merge,
/// O(n log n).
double empirical_csi(std::span<const double> t, std::span<const double> r);

/// Monte Carlo group-group success rate: the fraction of trials (ties at
/// half credit) in which the mean of k_t draws with replacement from t
/// exceeds the mean of k_r draws from r. Deterministic given the seed.
double empirical_group_csi(std::span<const double> t, int k_t, std::span<const double> r,
                           int k_r, int trials, std::uint64_t seed);

/// Empirical minimum representative sizes: ascending search in k_t, with
/// k_r coupled through the two vectors' empirical dispersion ratio, until
/// empirical_group_csi reaches the threshold. Unreachable when t's mean
/// does not strictly dominate; cap_exceeded when the search passes `cap`.
KappaResult empirical_kappa(std::span<const double> t, std::span<const double> r,
                            double threshold, int trials, std::uint64_t seed,
                            long long cap = 1'000'000);

/// Average percentile of each journal's papers when all papers are pooled
/// and ranked by citations; a paper's percentile counts strictly lower
/// papers fully and ties (itself included) at half. With this convention
/// the table equals the N-weighted aggregation of empirical_csi exactly.
RankTable empirical_average_rank(
    std::span<const std::pair<std::string, CitationVector>> journals);

}  // namespace citekit
