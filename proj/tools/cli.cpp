#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "citekit/dataset.hpp"
#include "citekit/empirical.hpp"
#include "citekit/estimated.hpp"
#include "citekit/montecarlo.hpp"
#include "citekit/results.hpp"
#include "citekit/rng.hpp"

namespace citekit::cli {

namespace {

// Input problems that are not CSV parse errors (unknown id, no rows, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<JournalRecord> load_summary_nonempty(const std::string& path)
{
    std::vector<JournalRecord> records = load_summary(path);
    if (records.empty())
        throw DataError(path + ": summary contains no journals");
    std::sort(records.begin(), records.end(),
              [](const JournalRecord& a, const JournalRecord& b) { return a.id < b.id; });
    return records;
}

const JournalRecord& find_record(const std::vector<JournalRecord>& records,
                                 const std::string& key)
{
    for (const JournalRecord& j : records)
        if (j.id == key)
            return j;
    for (const JournalRecord& j : records)
        if (j.name == key)
            return j;
    throw DataError("no journal with id or name '" + key + "' in the summary");
}

std::string status_name(KappaStatus status)
{
    switch (status) {
    case KappaStatus::found: return "found";
    case KappaStatus::limit_unreachable: return "limit-unreachable";
    default: return "cap-exceeded";
    }
}

int do_summarize(const std::string& input, const std::string& format, std::ostream& out,
                 std::ostream& err)
{
    const CitationData data = load_citations(input);
    for (const std::string& w : data.warnings)
        err << "warning: " << w << "\n";

    ResultTable table;
    table.columns = {"id",    "name",  "n_papers",   "m",            "v",
                     "mu",    "sigma", "mu_derived", "sigma_derived"};
    for (const auto& [id, counts] : data.journals) {
        const auto [am, lm] = empirical_moments(counts);
        const LogMoments derived = arith_to_log(am);
        table.rows.push_back({id, id, static_cast<long long>(counts.size()), am.m, am.v, lm.mu,
                              lm.sigma, derived.mu, derived.sigma});
    }
    write_results(table, out, parse_format(format));
    return kExitOk;
}

int do_indicators(const std::string& summary, std::ostream& out)
{
    const std::vector<JournalRecord> records = load_summary_nonempty(summary);

    ResultTable table;
    table.columns = {"id", "name", "n_papers", "jif", "h_real", "h_int"};
    for (const JournalRecord& j : records) {
        const HIndexEstimate h = estimate_h_index(j);
        table.rows.push_back({j.id, j.name, static_cast<long long>(j.n_papers),
                              impact_factor(j), h.h_real, static_cast<long long>(h.h_int)});
    }
    write_results(table, out, OutputFormat::csv);
    return kExitOk;
}

int do_compare(const std::string& summary, const std::string& t_key, const std::string& r_key,
               int k_t, int k_r, double threshold, std::ostream& out)
{
    const std::vector<JournalRecord> records = load_summary_nonempty(summary);
    const JournalRecord& t = find_record(records, t_key);
    const JournalRecord& r = find_record(records, r_key);
    const ComparisonResult res = compare_estimated(t, r, k_t, k_r, threshold);

    ResultTable table;
    table.columns = {"t_id",    "r_id",      "csi",              "k_t",
                     "k_r",     "group_csi", "kappa_t",          "kappa_r",
                     "success_at_kappa",     "kappa_status",     "threshold",
                     "provenance"};
    std::vector<Cell> row{res.t_id,
                          res.r_id,
                          res.csi_value,
                          static_cast<long long>(res.k_t),
                          static_cast<long long>(res.k_r),
                          res.group_csi_value};
    if (res.kappa.reachable) {
        row.emplace_back(res.kappa.kappa_t);
        row.emplace_back(res.kappa.kappa_r);
    } else {
        row.emplace_back(std::string{});
        row.emplace_back(std::string{});
    }
    row.emplace_back(res.kappa.success_at_kappa);
    row.emplace_back(status_name(res.kappa.status));
    row.emplace_back(res.kappa.threshold);
    row.emplace_back(std::string("estimated"));
    table.rows.push_back(std::move(row));
    write_results(table, out, OutputFormat::csv);
    return kExitOk;
}

int do_rank(const std::string& summary, std::ostream& out)
{
    const std::vector<JournalRecord> records = load_summary_nonempty(summary);
    const RankTable ranks = average_rank(records);

    double weighted = 0.0;
    double total = 0.0;
    for (const JournalRecord& j : records) {
        weighted += static_cast<double>(j.n_papers) * ranks.at(j.id);
        total += static_cast<double>(j.n_papers);
    }
    if (std::fabs(weighted / total - 0.5) > 1e-12)
        throw std::logic_error("rank: weighted-mean identity violated, refusing to write");

    std::vector<const JournalRecord*> order;
    for (const JournalRecord& j : records)
        order.push_back(&j);
    std::sort(order.begin(), order.end(), [&](const JournalRecord* a, const JournalRecord* b) {
        const double ra = ranks.at(a->id);
        const double rb = ranks.at(b->id);
        return ra != rb ? ra > rb : a->id < b->id;
    });

    ResultTable table;
    table.columns = {"id", "name", "n_papers", "avg_rank"};
    for (const JournalRecord* j : order)
        table.rows.push_back(
            {j->id, j->name, static_cast<long long>(j->n_papers), ranks.at(j->id)});
    write_results(table, out, OutputFormat::csv);
    return kExitOk;
}

int do_validate(const std::string& summary, std::int64_t seed, int samples, double tolerance,
                std::ostream& out)
{
    const std::vector<JournalRecord> records = load_summary_nonempty(summary);
    SimulationConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.n_samples = samples;
    cfg.tolerance = tolerance;
    const ValidationReport report = validate_all(records, cfg);
    write_results(report_table(report), out, OutputFormat::json);
    return report.all_pass() ? kExitOk : kExitValidation;
}

struct PlotSource {
    // records carry only (m, v); the estimated axis is always the
    // two-core-indicator route, matching the synthetic data
    std::vector<JournalRecord> records;
    std::map<std::string, CitationVector> vectors;  // per-journal raw or synthetic counts
    bool synthetic = false;
};

PlotSource plot_source(const std::string& citations, const std::string& summary,
                       const std::string& figure, std::uint64_t seed, int n_samples)
{
    PlotSource src;
    if (!citations.empty()) {
        CitationData data = load_citations(citations);
        if (data.journals.empty())
            throw DataError(citations + ": no journals in citations file");
        for (auto& [id, counts] : data.journals) {
            const auto [am, lm] = empirical_moments(counts);
            JournalRecord rec;
            rec.id = id;
            rec.name = id;
            rec.n_papers = static_cast<int>(counts.size());
            rec.arith = am;
            src.records.push_back(std::move(rec));
            src.vectors.emplace(id, std::move(counts));
        }
    } else {
        src.synthetic = true;
        std::vector<JournalRecord> loaded = load_summary_nonempty(summary);
        for (JournalRecord& j : loaded) {
            j.log.reset();
            j.log_source = MomentSource::derived;
            const int n = figure == "h" ? j.n_papers : n_samples;
            src.vectors.emplace(
                j.id, sample_lognormal(arith_to_log(j.arith), n,
                                       derive_seed(seed, "sample/" + j.id), false));
            src.records.push_back(std::move(j));
        }
    }
    std::sort(src.records.begin(), src.records.end(),
              [](const JournalRecord& a, const JournalRecord& b) { return a.id < b.id; });
    return src;
}

int do_plot_data(const std::string& figure, const std::string& citations,
                 const std::string& summary, std::int64_t seed_arg, std::ostream& out,
                 std::ostream& err)
{
    const std::uint64_t seed = static_cast<std::uint64_t>(seed_arg);
    constexpr int kSyntheticSamples = 100'000;
    constexpr int kGroupTrials = 100'000;
    constexpr int kKappaTrials = 50'000;
    constexpr long long kKappaMaxKt = 50;

    const PlotSource src = plot_source(citations, summary, figure, seed, kSyntheticSamples);

    ResultTable table;
    table.meta = {{"figure", figure},
                  {"source", src.synthetic ? "synthetic" : "citations"},
                  {"seed", std::to_string(seed_arg)},
                  {"generator", std::string(kGeneratorName)}};
    if (src.synthetic)
        table.meta.emplace_back("n_samples", std::to_string(kSyntheticSamples));

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const auto track = [&](double real, double est) {
        lo = std::min({lo, real, est});
        hi = std::max({hi, real, est});
    };

    const auto& recs = src.records;
    if (figure == "h") {
        table.columns = {"id", "real", "estimated"};
        for (const JournalRecord& j : recs) {
            const CitationVector& cv = src.vectors.at(j.id);
            const double real = static_cast<double>(empirical_h_index(cv));
            const double est = estimate_h_index(j).h_real;
            track(real, est);
            table.rows.push_back({j.id, real, est});
        }
    } else if (figure == "rank") {
        table.columns = {"id", "real", "estimated"};
        std::vector<std::pair<std::string, CitationVector>> pooled;
        for (const JournalRecord& j : recs)
            pooled.emplace_back(j.id, src.vectors.at(j.id));
        const RankTable real_rank = empirical_average_rank(pooled);
        // weight the estimated side by the pooled sizes; in synthetic mode
        // every journal holds kSyntheticSamples papers, not its real N
        std::vector<JournalRecord> weighted = recs;
        for (JournalRecord& j : weighted)
            j.n_papers = static_cast<int>(src.vectors.at(j.id).size());
        const RankTable est_rank = average_rank(weighted);
        for (const JournalRecord& j : recs) {
            const double real = real_rank.at(j.id);
            const double est = est_rank.at(j.id);
            track(real, est);
            table.rows.push_back({j.id, real, est});
        }
    } else if (figure == "csi" || figure == "group-csi") {
        table.columns = {"t_id", "r_id", "real", "estimated"};
        const bool grouped = figure == "group-csi";
        const int k = 10;  // the usual group size for this comparison
        if (grouped)
            table.meta.emplace_back("k", std::to_string(k));
        for (std::size_t ti = 0; ti < recs.size(); ++ti) {
            for (std::size_t ri = ti + 1; ri < recs.size(); ++ri) {
                const JournalRecord& t = recs[ti];
                const JournalRecord& r = recs[ri];
                const LogMoments lt = effective_log(t);
                const LogMoments lr = effective_log(r);
                const std::string tag = t.id + ":" + r.id;
                try {
                    double real;
                    double est;
                    if (grouped) {
                        est = group_csi(lt, k, lr, k);
                        real = empirical_group_csi(src.vectors.at(t.id), k,
                                                   src.vectors.at(r.id), k, kGroupTrials,
                                                   derive_seed(seed, "group/" + tag));
                    } else {
                        est = csi(lt, lr);
                        real = empirical_csi(src.vectors.at(t.id), src.vectors.at(r.id));
                    }
                    track(real, est);
                    table.rows.push_back({t.id, r.id, real, est});
                } catch (const DegenerateComparisonError&) {
                    err << "warning: skipping degenerate pair " << tag << "\n";
                }
            }
        }
    } else if (figure == "kappa") {
        table.columns = {"t_id", "r_id", "component", "real", "estimated"};
        for (std::size_t ai = 0; ai < recs.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < recs.size(); ++bi) {
                const double mean_a = log_to_arith(effective_log(recs[ai])).m;
                const double mean_b = log_to_arith(effective_log(recs[bi])).m;
                if (mean_a == mean_b)
                    continue;  // unreachable from either side
                const JournalRecord& t = mean_a > mean_b ? recs[ai] : recs[bi];
                const JournalRecord& r = mean_a > mean_b ? recs[bi] : recs[ai];
                const KappaResult est = min_representative_size(t, r, 0.9, kKappaMaxKt + 1);
                if (!est.reachable || est.kappa_t > kKappaMaxKt) {
                    err << "warning: skipping pair " << t.id << ":" << r.id
                        << " (estimated kappa beyond plot bound)\n";
                    continue;
                }
                const KappaResult real = empirical_kappa(
                    src.vectors.at(t.id), src.vectors.at(r.id), 0.9, kKappaTrials,
                    derive_seed(seed, "kappa/" + t.id + ":" + r.id), 2 * est.kappa_t + 10);
                if (!real.reachable) {
                    err << "warning: empirical kappa search for " << t.id << ":" << r.id
                        << " exceeded its cap\n";
                    continue;
                }
                track(static_cast<double>(real.kappa_t), static_cast<double>(est.kappa_t));
                track(static_cast<double>(real.kappa_r), static_cast<double>(est.kappa_r));
                table.rows.push_back({t.id, r.id, std::string("t"),
                                      static_cast<double>(real.kappa_t),
                                      static_cast<double>(est.kappa_t)});
                table.rows.push_back({t.id, r.id, std::string("r"),
                                      static_cast<double>(real.kappa_r),
                                      static_cast<double>(est.kappa_r)});
            }
        }
    }

    if (!table.rows.empty()) {
        table.meta.emplace_back("identity_min", format_number(lo));
        table.meta.emplace_back("identity_max", format_number(hi));
    }
    write_results(table, out, OutputFormat::csv);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"citekit: journal citation indicators from raw counts or from the two core\n"
                 "indicators (mean m and standard deviation v of c+1) under a log-normal model.\n"
                 "Exit codes: 0 ok, 2 usage, 3 input data error, 4 domain/invariant error,\n"
                 "5 validation failure."};
    app.name("citekit");
    app.require_subcommand(1);

    std::string input;
    std::string summary;
    std::string format = "csv";
    std::string t_key;
    std::string r_key;
    std::string figure;
    std::string citations;
    int k_t = 10;
    int k_r = 10;
    double threshold = 0.9;
    std::int64_t seed = 0;
    int samples = 100'000;
    double tolerance = 0.02;

    CLI::App* cmd_summarize =
        app.add_subcommand("summarize", "Per-journal moment table from raw citation counts");
    cmd_summarize->add_option("--input", input, "citations CSV (journal_id,paper_id,citations)")
        ->required();
    cmd_summarize->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* cmd_indicators =
        app.add_subcommand("indicators", "JIF and estimated h-index per journal");
    cmd_indicators->add_option("--summary", summary, "summary CSV (id,name,n_papers,m,v[,mu,sigma])")
        ->required();

    CLI::App* cmd_compare =
        app.add_subcommand("compare", "CSI, group CSI and minimum representative sizes for a pair");
    cmd_compare->add_option("--summary", summary, "summary CSV")->required();
    cmd_compare->add_option("--t", t_key, "id (or name) of journal t, the compared side")
        ->required();
    cmd_compare->add_option("--r", r_key, "id (or name) of journal r, the reference side")
        ->required();
    cmd_compare->add_option("--kt", k_t, "group size for t")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_compare->add_option("--kr", k_r, "group size for r")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_compare->add_option("--threshold", threshold, "kappa success threshold, in (0.5, 1)")
        ->capture_default_str();

    CLI::App* cmd_rank = app.add_subcommand("rank", "Estimated average percentile rank per journal");
    cmd_rank->add_option("--summary", summary, "summary CSV")->required();

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "Monte Carlo cross-check of every moment-based indicator");
    cmd_validate->add_option("--summary", summary, "summary CSV")->required();
    cmd_validate->add_option("--seed", seed, "random seed (runs are deterministic)")->required();
    cmd_validate->add_option("--samples", samples, "synthetic papers per journal / MC trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_validate->add_option("--tolerance", tolerance, "pass bound for probability indicators")
        ->capture_default_str();

    CLI::App* cmd_plot =
        app.add_subcommand("plot-data", "Real-vs-estimated scatter data for one indicator");
    cmd_plot->add_option("--figure", figure, "one of: h, csi, group-csi, kappa, rank")
        ->check(CLI::IsMember({"h", "csi", "group-csi", "kappa", "rank"}))
        ->required();
    CLI::Option* opt_citations =
        cmd_plot->add_option("--citations", citations, "citations CSV for the empirical axis");
    CLI::Option* opt_summary =
        cmd_plot->add_option("--summary", summary, "summary CSV; the real axis becomes synthetic");
    opt_citations->excludes(opt_summary);
    opt_summary->excludes(opt_citations);
    cmd_plot->add_option("--seed", seed, "random seed")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_summarize))
            return do_summarize(input, format, out, err);
        if (app.got_subcommand(cmd_indicators))
            return do_indicators(summary, out);
        if (app.got_subcommand(cmd_compare))
            return do_compare(summary, t_key, r_key, k_t, k_r, threshold, out);
        if (app.got_subcommand(cmd_rank))
            return do_rank(summary, out);
        if (app.got_subcommand(cmd_validate))
            return do_validate(summary, seed, samples, tolerance, out);
        if (app.got_subcommand(cmd_plot)) {
            if (citations.empty() && summary.empty()) {
                err << "plot-data: one of --citations or --summary is required\n";
                return kExitUsage;
            }
            return do_plot_data(figure, citations, summary, seed, out, err);
        }
        err << "no subcommand selected\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::logic_error& e) {  // invalid_argument, domain_error, degenerate pairs
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

int run(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace citekit::cli
