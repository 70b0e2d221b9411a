// Independent test oracles. Everything here is deliberately written against
// the definitions (series, quadrature, exhaustive enumeration) rather than
// against the library code paths it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace oracle {

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

// erf by Taylor series, accurate for moderate |z|.
inline long double erf_series(long double z)
{
    long double term = z;
    long double sum = z;
    for (int n = 1; n < 300; ++n) {
        term *= -z * z / n;
        const long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(static_cast<double>(add)) <
            1e-22 * std::fabs(static_cast<double>(sum)))
            break;
    }
    return sum * 2.0L / std::sqrt(kPi);
}

// erfc by the classical continued fraction (modified Lentz), for z > 2:
//   erfc(z) e^{z^2} sqrt(pi) = 1 / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
inline long double erfc_continued_fraction(long double z)
{
    const long double tiny = 1e-30L;
    long double f = z;  // b0 = z, partial numerators a_n = n/2
    long double c = z;
    long double d = 0.0L;
    for (int n = 1; n < 300; ++n) {
        const long double a = n / 2.0L;
        d = z + a * d;
        if (d == 0.0L)
            d = tiny;
        c = z + a / c;
        if (c == 0.0L)
            c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(static_cast<double>(delta - 1.0L)) < 1e-20)
            break;
    }
    return std::exp(-z * z) / std::sqrt(kPi) / f;
}

// Standard normal CDF, good to ~1e-18 absolute over |x| <= 8.
inline long double std_normal_cdf(long double x)
{
    const long double z = std::fabs(x) / std::sqrt(2.0L);
    long double tail;  // P(X > |x|)
    if (z < 2.0L)
        tail = 0.5L * (1.0L - erf_series(z));
    else
        tail = 0.5L * erfc_continued_fraction(z);
    return x >= 0.0L ? 1.0L - tail : tail;
}

// Adaptive Simpson quadrature.
template <class F>
long double simpson_step(const F& f, long double a, long double b, long double fa,
                         long double fm, long double fb, long double whole, long double tol,
                         int depth)
{
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m);
    const long double rm = 0.5L * (m + b);
    const long double flm = f(lm);
    const long double frm = f(rm);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    if (depth <= 0 || std::fabs(static_cast<double>(left + right - whole)) <=
                          15.0 * static_cast<double>(tol))
        return left + right + (left + right - whole) / 15.0L;
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0L, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0L, depth - 1);
}

template <class F>
long double adaptive_simpson(const F& f, long double a, long double b, long double tol,
                             int depth = 40)
{
    const long double m = 0.5L * (a + b);
    const long double fa = f(a);
    const long double fm = f(m);
    const long double fb = f(b);
    const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Extended-precision moment conversions, straight from the two closed forms.
struct LogPair {
    long double mu;
    long double sigma;
};
struct ArithPair {
    long double m;
    long double v;
};

inline LogPair arith_to_log(long double m, long double v)
{
    const long double r2 = (v / m) * (v / m);
    return {std::log(m / std::sqrt(1.0L + r2)), std::sqrt(std::log1p(r2))};
}

inline ArithPair log_to_arith(long double mu, long double sigma)
{
    const long double m = std::exp(mu + 0.5L * sigma * sigma);
    return {m, m * std::sqrt(std::expm1(sigma * sigma))};
}

// Exhaustive pairwise probability of superiority with half ties; O(|t| |r|).
inline double exhaustive_csi(std::span<const double> t, std::span<const double> r)
{
    std::uint64_t half_units = 0;
    for (const double a : t)
        for (const double b : r) {
            if (a > b)
                half_units += 2;
            else if (a == b)
                half_units += 1;
        }
    return static_cast<double>(half_units) /
           (2.0 * static_cast<double>(t.size()) * static_cast<double>(r.size()));
}

// h-index by definition: the largest h with at least h entries >= h.
inline int exhaustive_h_index(std::span<const double> counts)
{
    int best = 0;
    for (int h = 1; h <= static_cast<int>(counts.size()); ++h) {
        int at_least = 0;
        for (const double c : counts)
            if (c >= static_cast<double>(h))
                ++at_least;
        if (at_least >= h)
            best = h;
    }
    return best;
}

// Pearson correlation of two equal-length series.
inline double pearson(std::span<const double> x, std::span<const double> y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Spearman rank correlation (average ranks for ties).
inline std::vector<double> midranks(std::span<const double> x)
{
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && x[order[j]] == x[order[i]])
            ++j;
        const double rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j - 1)) + 1.0;
        for (std::size_t k = i; k < j; ++k)
            ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

inline double spearman(std::span<const double> x, std::span<const double> y)
{
    const std::vector<double> rx = midranks(x);
    const std::vector<double> ry = midranks(y);
    return pearson(rx, ry);
}

}  // namespace oracle
