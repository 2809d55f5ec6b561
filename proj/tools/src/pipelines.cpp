// Copyright 2026 The mdseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdseq_cli/pipelines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <random>

#include "mdseq/digits.hpp"
#include "mdseq/equidist.hpp"
#include "mdseq/numeric.hpp"
#include "mdseq/swb.hpp"
#include "mdseq_cli/svg.hpp"

namespace mdseq::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

// Published measured fractions, rows by size, columns by offset 1..5.
constexpr std::array<std::array<double, 5>, 4> kPublishedCoverage{{
    {0.0909039, 0.0908987, 0.0908935, 0.0908884, 0.0908832},
    {0.166657, 0.166648, 0.166638, 0.166629, 0.166619},
    {0.199989, 0.199977, 0.199966, 0.199954, 0.199943},
    {0.249986, 0.249972, 0.249957, 0.249943, 0.249929},
}};

std::optional<double> published_coverage(double size, std::size_t j) {
    for (std::size_t r = 0; r < 4; ++r) {
        if (std::abs(size - kCoverageSizes[r]) < 1e-12 && j >= 1 && j <= 5) return kPublishedCoverage[r][j - 1];
    }
    return std::nullopt;
}

std::string cell(double v) { return CsvTable::cell(v); }
std::string cell(std::size_t v) { return CsvTable::cell(v); }
std::string cell(std::optional<double> v) { return CsvTable::cell(v); }

std::vector<double> iota_from_one(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
    return v;
}

std::vector<double> absolute(std::span<const double> v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](double x) { return std::abs(x); });
    return out;
}

Plot make_plot(std::string title, std::string x_label, std::string y_label, bool log_x = false,
               bool log_y = false) {
    Plot p;
    p.title = std::move(title);
    p.x_label = std::move(x_label);
    p.y_label = std::move(y_label);
    p.log_x = log_x;
    p.log_y = log_y;
    return p;
}

void log_line(const std::string& text) { std::cerr << "mdseq: " << text << '\n'; }

}  // namespace

// ---------------------------------------------------------------------------

Workspace::Workspace(RunConfig config, fs::path data_dir, fs::path battery_file)
    : config_(std::move(config)),
      data_dir_(std::move(data_dir)),
      battery_file_(std::move(battery_file)),
      hash_(config_hash(config_)) {}

const PrimeTable& Workspace::primes() {
    if (!primes_) primes_ = sieve_primes(config_.prime_limit);
    return *primes_;
}

const GapSequence& Workspace::gaps() {
    if (!gaps_) gaps_ = prime_gaps(primes());
    return *gaps_;
}

std::size_t Workspace::gap_prefix() { return std::min(kDefaultGapPrefix, gaps().size()); }

const MetaDistanceSequence& Workspace::md() {
    if (!md_) {
        md_ = build_meta_distances(gaps(), config_.dyad, gap_prefix());
        if (md_->values.size() < 2) {
            throw ComputationError("dyad " + config_.dyad.to_string() + " occurs too rarely below prime_limit " +
                                   std::to_string(config_.prime_limit));
        }
    }
    return *md_;
}

const UnitSequence& Workspace::md_unit() {
    if (!md_unit_) md_unit_ = normalize(md(), Normalization::max_scale);
    return *md_unit_;
}

const std::vector<UnitSequence>& Workspace::sequences() {
    if (!sequences_) {
        std::vector<UnitSequence> seqs{md_unit()};
        const std::size_t length = 4 * config_.budget;
        seqs.push_back(swb_sequence(config_.seed, length));
        const GapSequence& g = gaps();
        const std::vector<double> intervals(g.gaps.begin(),
                                            g.gaps.begin() + static_cast<std::ptrdiff_t>(std::min(length, g.size())));
        seqs.push_back(normalize(intervals, Normalization::max_scale, "prime_gaps"));
        for (const char* name : {"pi", "e", "sqrt71"}) {
            seqs.push_back(to_unit_sequence(load_digit_file(data_dir_ / (std::string(name) + ".txt")),
                                            Normalization::digit_rule));
        }
        sequences_ = std::move(seqs);
    }
    return *sequences_;
}

const std::vector<Integrand>& Workspace::battery() {
    if (!battery_) battery_ = battery_file_.empty() ? default_battery() : load_battery(battery_file_);
    return *battery_;
}

fs::path Workspace::emit(CsvTable table, const std::string& name) const {
    table.add_metadata("config_hash", hash_);
    const fs::path path = config_.output_dir / name;
    table.write(path);
    written_.push_back(path);
    return path;
}

fs::path Workspace::emit_svg(const std::string& svg, const std::string& name) const {
    const fs::path path = config_.output_dir / name;
    write_text(path, svg);
    written_.push_back(path);
    return path;
}

// ---------------------------------------------------------------------------

void run_generate(Workspace& ws) {
    const MetaDistanceSequence& md = ws.md();
    const UnitSequence& unit = ws.md_unit();
    CsvTable t({"j", "occurrence_index", "next_occurrence_index", "md", "normalized"});
    for (std::size_t j = 0; j < md.values.size(); ++j) {
        t.row({std::to_string(j + 1), std::to_string(md.occurrence_indices[j]),
               std::to_string(md.occurrence_indices[j + 1]), std::to_string(md.values[j]), cell(unit[j])});
    }
    t.add_metadata("provenance", md.provenance);
    t.add_metadata("occurrences", std::to_string(md.occurrence_indices.size()));
    ws.emit(std::move(t), "md.csv");

    CsvTable s({"sequence", "index", "value", "normalization", "range_max"});
    for (const UnitSequence& seq : ws.sequences()) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            s.row({seq.label(), std::to_string(i + 1), cell(seq[i]), to_string(seq.normalization()),
                   cell(seq.range_max())});
        }
    }
    ws.emit(std::move(s), "sequences.csv");

    const JumpingChampion champ = jumping_champion(ws.gaps(), ws.gap_prefix());
    const DyadCounts counts = count_dyad_conventions(ws.gaps(), ws.config().dyad, ws.gap_prefix());
    CsvTable c({"gap_prefix", "champion", "dyad", "ordered", "reversed", "unordered", "non_overlapping"});
    c.row({std::to_string(ws.gap_prefix()), std::to_string(champ.champion), ws.config().dyad.to_string(),
           std::to_string(counts.ordered), std::to_string(counts.reversed), std::to_string(counts.unordered),
           std::to_string(counts.non_overlapping)});
    ws.emit(std::move(c), "dyad_counts.csv");
    log_line("Md" + md.pattern.to_string() + ": " + std::to_string(md.values.size()) + " values from " +
             std::to_string(md.occurrence_indices.size()) + " occurrences");
}

void run_coverage(Workspace& ws) {
    const RunConfig& cfg = ws.config();
    const UnitSequence& seq = ws.md_unit();

    std::vector<CoverageReport> rows;
    for (double size : cfg.sizes) rows.push_back(interval_coverage_test(seq, size));
    ws.emit(coverage_csv(rows), "coverage.csv");

    std::vector<std::string> header{"size"};
    for (std::size_t j : cfg.offsets) header.push_back("j" + std::to_string(j));
    header.insert(header.end(), {"expected_published", "analytic_uniform"});
    CsvTable wide(header);
    CsvTable targets({"size", "offset_j", "measured_fraction", "published_measured", "abs_difference", "within_0.01"});
    for (double size : cfg.sizes) {
        std::vector<std::string> r{cell(size)};
        CoverageReport last;
        for (std::size_t j : cfg.offsets) {
            last = well_distributed_test(seq, size, j);
            r.push_back(cell(last.measured_fraction));
            if (const auto published = published_coverage(size, j)) {
                const double diff = std::abs(last.measured_fraction - *published);
                targets.row({cell(size), cell(j), cell(last.measured_fraction), cell(*published), cell(diff),
                             diff <= 0.01 ? "true" : "false"});
            }
        }
        r.push_back(cell(last.expected_published));
        r.push_back(cell(last.analytic_uniform));
        wide.row(std::move(r));
    }
    ws.emit(std::move(wide), "well_distributed.csv");
    ws.emit(std::move(targets), "coverage_targets.csv");
}

void run_discrepancy(Workspace& ws) {
    const RunConfig& cfg = ws.config();
    const UnitSequence& seq = ws.md_unit();
    const DiscrepancyReport rep = erdos_turan_bound(seq, cfg.n_max, cfg.constant_C);
    CsvTable bound = discrepancy_csv(rep);
    ws.emit(std::move(bound), "weyl_bound.csv");

    const CauchyReport cauchy = convergence_analysis(rep, cfg.epsilon);
    ws.emit(cauchy_csv(cauchy), "cauchy.csv");
    ws.emit(cauchy_fits_csv(cauchy), "cauchy_fits.csv");

    const std::string note = "config_hash=" + ws.hash();
    const std::vector<double> n = iota_from_one(rep.partial_bounds.size());
    Plot p1 = make_plot("Erdos-Turan partial bounds, C = " + format_double(cfg.constant_C), "n", "bound", true);
    p1.series.push_back({"partial bound", n, rep.partial_bounds});
    p1.horizontal_rules.push_back(rep.supremum_bound);
    ws.emit_svg(render_svg(p1, note), "weyl_bound.svg");

    const std::vector<double> nd = iota_from_one(cauchy.differences.size());
    Plot p2 = make_plot("Successive differences of the bound", "n", "|difference|", true, true);
    p2.series.push_back({"|difference|", nd, absolute(cauchy.differences), SeriesStyle::points, kPalette[0]});
    p2.series.push_back({"|fitted power law|", nd, absolute(cauchy.fitted), SeriesStyle::line, kPalette[1]});
    ws.emit_svg(render_svg(p2, note), "cauchy_fits.svg");

    Plot p3 = make_plot("Residuals against the epsilon tube", "n", "residual", true);
    p3.series.push_back({"residual", nd, cauchy.residuals, SeriesStyle::points, kPalette[0]});
    p3.horizontal_rules = {cfg.epsilon, -cfg.epsilon};
    ws.emit_svg(render_svg(p3, note), "cauchy_tube.svg");

    log_line("Erdos-Turan supremum " + format_double(rep.supremum_bound) + " over n <= " + std::to_string(cfg.n_max) +
             (cauchy.converged() ? ", tube entered at N0 = " + std::to_string(*cauchy.tube_entry_index)
                                 : ", tube not entered"));
}

void run_integrate(Workspace& ws) {
    const RunConfig& cfg = ws.config();
    const std::vector<UnitSequence>& seqs = ws.sequences();
    const BatteryTable table = kernel_battery(seqs, ws.battery(), cfg.budget, cfg.tolerance);
    ws.emit(battery_csv(table), "battery.csv");

    std::vector<StatsReport> stats;
    std::vector<std::string> labels;
    std::vector<BoxSummary> boxes;
    for (const UnitSequence& seq : seqs) {
        std::vector<double> pct;
        for (const BatteryRow& r : table.rows) {
            if (r.sequence == seq.label()) pct.push_back(100.0 * r.relative_error);
        }
        stats.push_back(descriptive_stats(pct, OutlierRule::iqr_1_5));
        labels.push_back(seq.label());

        std::sort(pct.begin(), pct.end());
        const double q1 = sorted_quantile(pct, 0.25), q3 = sorted_quantile(pct, 0.75);
        const double lo_fence = q1 - 1.5 * (q3 - q1), hi_fence = q3 + 1.5 * (q3 - q1);
        const auto lo = std::find_if(pct.begin(), pct.end(), [&](double v) { return v >= lo_fence; });
        const auto hi = std::find_if(pct.rbegin(), pct.rend(), [&](double v) { return v <= hi_fence; });
        boxes.push_back({seq.label(), *lo, q1, sorted_quantile(pct, 0.5), q3, *hi});
    }
    CsvTable st = stats_csv(stats, labels);
    st.add_metadata("units", "percent relative error");
    ws.emit(std::move(st), "battery_stats.csv");

    CsvTable fm({"sequence", "family", "mean_relative_error", "count"});
    for (const FamilyMean& m : table.family_means) {
        fm.row({m.sequence, to_string(m.family), cell(m.mean_relative_error), cell(m.count)});
    }
    for (const UnitSequence& seq : seqs) {
        fm.add_metadata("multiplicative_advantage[" + seq.label() + "]",
                        CsvTable::cell(table.multiplicative_advantage(seq.label())));
    }
    ws.emit(std::move(fm), "family_means.csv");
    ws.emit_svg(render_boxes("Percentage error by sequence", "% relative error", boxes, "config_hash=" + ws.hash()),
                "battery_iqr.svg");
}

bool EntropyRow::reproduces() const {
    return published_value && std::abs(report.entropy - *published_value) <= tolerance;
}

std::vector<EntropyRow> entropy_rows(Workspace& ws) {
    const fs::path& data = ws.data_dir();
    std::vector<EntropyRow> rows;
    const auto add = [&](EntropyReport r, std::string how, std::optional<double> published, double tol) {
        rows.push_back({std::move(r), std::move(how), published, tol});
    };
    const auto ints = [](std::span<const std::uint8_t> d) { return std::vector<std::int64_t>(d.begin(), d.end()); };

    {
        const auto s = load_symbol_file(data / "coin.txt");
        add(shannon_entropy(s, "coin"), "exact", 0.30103, 1e-5);
    }
    {
        const auto s = load_symbol_file(data / "dice.txt");
        add(shannon_entropy(s, "dice"), "exact", 0.778151, 1e-6);
    }
    for (const char* name : {"pi", "e", "sqrt71"}) {
        const DigitStream d = load_digit_file(data / (std::string(name) + ".txt"));
        add(shannon_entropy(ints(d.digits), std::string(name) + "_digits"), "exact", 0.30103, 1e-5);
    }

    const GapSequence& gaps = ws.gaps();
    const std::size_t gap_count = std::min<std::size_t>(gaps.size(), 999'999);
    const std::vector<std::int64_t> g(gaps.gaps.begin(), gaps.gaps.begin() + static_cast<std::ptrdiff_t>(gap_count));
    add(shannon_entropy(g, "prime_gaps"), "exact", 1.26895, 1e-5);

    {
        std::vector<std::int64_t> exps;
        for (const std::string& tok : load_symbol_file(data / "mersenne_exponents.txt")) exps.push_back(std::stoll(tok));
        std::vector<std::int64_t> diffs;
        for (std::size_t i = 1; i < exps.size(); ++i) diffs.push_back(exps[i] - exps[i - 1]);
        add(shannon_entropy(diffs, "mersenne_exponent_gaps"), "exact", 1.63164, 1e-5);
        add(shannon_entropy(exps, "mersenne_exponents"), "exact", 1.6721, 1e-4);
    }

    add(shannon_entropy(ws.md().values, "md_" + std::to_string(ws.md().pattern.first) + "_" +
                                            std::to_string(ws.md().pattern.second)),
        "exact", 2.13791, 0.05);

    constexpr std::size_t kDraws = 1'000'000;
    std::mt19937_64 rng(ws.config().seed);
    std::vector<std::int64_t> pos(kDraws), sym(kDraws);
    std::vector<double> reals(kDraws);
    for (auto& v : pos) v = 1 + static_cast<std::int64_t>(rng() % 1'000'000);
    for (auto& v : sym) v = -1'000'000 + static_cast<std::int64_t>(rng() % 2'000'001);
    for (auto& v : reals) v = -1e6 + 2e6 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    add(shannon_entropy(pos, "uniform_int_1_1e6"), "exact", 5.75118, 0.02);
    add(shannon_entropy(sym, "uniform_int_pm1e6"), "exact", 5.86415, 0.02);
    add(shannon_entropy(reals, Symbolization::exact(), "uniform_real_pm1e6"), "exact", 6.0, 1e-6);

    std::vector<std::int64_t> int_diffs(kDraws - 1);
    std::vector<double> real_diffs(kDraws - 1);
    for (std::size_t i = 1; i < kDraws; ++i) {
        int_diffs[i - 1] = pos[i] - pos[i - 1];
        real_diffs[i - 1] = reals[i] - reals[i - 1];
    }
    add(shannon_entropy(int_diffs, "uniform_int_differences"), "exact", 0.0, 1e-6);
    add(shannon_entropy(real_diffs, Symbolization::exact(), "uniform_real_differences"), "exact", 0.0, 1e-6);

    const PrimeTable& pt = ws.primes();
    const std::size_t pc = std::min<std::size_t>(pt.count(), kDraws);
    const std::vector<std::int64_t> first(pt.primes.begin(), pt.primes.begin() + static_cast<std::ptrdiff_t>(pc));
    add(shannon_entropy(first, "first_primes"), "exact", 6.0, 1e-6);
    return rows;
}

void run_entropy(Workspace& ws) {
    CsvTable t({"label", "entropy", "symbol_count", "distinct_symbols", "symbolization", "published_value", "tolerance",
                "reproduces"});
    for (const EntropyRow& r : entropy_rows(ws)) {
        t.row({r.report.label, cell(r.report.entropy), cell(r.report.symbol_count), cell(r.report.distinct_symbols),
               r.symbolization, cell(r.published_value), cell(r.tolerance), r.reproduces() ? "true" : "false"});
    }
    t.add_metadata("log_base", "10");
    ws.emit(std::move(t), "entropy.csv");
}

void run_gue(Workspace& ws) {
    const std::vector<CdfStep> cdf = empirical_cdf(ws.md_unit());
    CsvTable c({"x", "F", "gue_r2"});
    std::vector<double> xs, fs_, r2;
    for (const CdfStep& s : cdf) {
        c.row({cell(s.x), cell(s.F), cell(gue_r2(s.x))});
        xs.push_back(s.x);
        fs_.push_back(s.F);
        r2.push_back(gue_r2(s.x));
    }
    ws.emit(std::move(c), "gue_cdf.csv");

    const FitResult fit = fit_gue_model(cdf, kGueInitialGuess);
    CsvTable params = fit_params_csv(fit);
    params.add_metadata("initial_a", format_double(kGueInitialGuess[0]));
    params.add_metadata("initial_b", format_double(kGueInitialGuess[1]));
    ws.emit(std::move(params), "gue_fit.csv");
    ws.emit(fit_grid_csv(fit), "gue_grid.csv");

    const std::string note = "config_hash=" + ws.hash();
    Plot p5 = make_plot("Empirical CDF of normalized Md and GUE r2", "x", "value");
    p5.series.push_back({"empirical CDF", xs, fs_, SeriesStyle::step, kPalette[0]});
    p5.series.push_back({"r2 GUE", xs, r2, SeriesStyle::line, kPalette[1]});
    ws.emit_svg(render_svg(p5, note), "gue_cdf.svg");

    std::vector<double> fitted, lo, hi;
    for (const BandPoint& b : fit.bands) {
        fitted.push_back(b.fitted);
        lo.push_back(b.lower);
        hi.push_back(b.upper);
    }
    Plot p6 = make_plot("Fit 1 - b sin^2(a x)/x^2 with " + format_double(100 * fit.band_level) + "% bands", "x", "F");
    p6.series.push_back({"empirical CDF", xs, fs_, SeriesStyle::points, kPalette[0]});
    p6.series.push_back({"fit", xs, fitted, SeriesStyle::line, kPalette[1]});
    p6.series.push_back({"lower band", xs, lo, SeriesStyle::line, kPalette[2], true});
    p6.series.push_back({"upper band", xs, hi, SeriesStyle::line, kPalette[2], true});
    ws.emit_svg(render_svg(p6, note), "gue_fit.svg");

    Plot p7 = make_plot("Fit residuals", "x", "F - fit");
    p7.series.push_back({"residual", xs, fit.residuals, SeriesStyle::points, kPalette[0]});
    p7.horizontal_rules.push_back(0.0);
    ws.emit_svg(render_svg(p7, note), "gue_residuals.svg");
    log_line("CDF fit a = " + format_double(fit.a) + ", b = " + format_double(fit.b) + ", rms " +
             format_double(fit.rms_residual));
}

void run(std::string_view sub, Workspace& ws) {
    if (sub == "generate") return run_generate(ws);
    if (sub == "coverage") return run_coverage(ws);
    if (sub == "discrepancy") return run_discrepancy(ws);
    if (sub == "integrate") return run_integrate(ws);
    if (sub == "entropy") return run_entropy(ws);
    if (sub == "gue") return run_gue(ws);
    if (sub == "all") {
        for (std::string_view s : kSubcommands) {
            if (s != "all") run(s, ws);
        }
        return;
    }
    throw ConfigError("unknown subcommand '" + std::string(sub) + "'");
}

}  // namespace mdseq::cli
