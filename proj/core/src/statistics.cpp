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

#include <algorithm>
#include <cmath>

#include "mdseq/analysis.hpp"
#include "mdseq/errors.hpp"
#include "mdseq/numeric.hpp"

namespace mdseq {

std::string to_string(OutlierRule rule) {
    switch (rule) {
        case OutlierRule::none: return "none";
        case OutlierRule::iqr_1_5: return "iqr_1.5";
    }
    return "unknown";
}

StatsReport descriptive_stats(std::span<const double> data, OutlierRule rule) {
    if (rule == OutlierRule::iqr_1_5 && data.size() < 4) {
        throw DomainError("descriptive_stats: the 1.5 IQR rule needs at least 4 points");
    }
    if (data.size() < 2) throw DomainError("descriptive_stats: need at least 2 points");

    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    StatsReport r;
    r.rule = to_string(rule);
    if (rule == OutlierRule::iqr_1_5) {
        const double q1 = sorted_quantile(sorted, 0.25);
        const double q3 = sorted_quantile(sorted, 0.75);
        const double lo = q1 - 1.5 * (q3 - q1);
        const double hi = q3 + 1.5 * (q3 - q1);
        std::vector<double> kept;
        for (double v : sorted) {
            if (v >= lo && v <= hi) kept.push_back(v);
        }
        r.outliers_excluded = sorted.size() - kept.size();
        sorted = std::move(kept);
        if (sorted.size() < 2) throw DomainError("descriptive_stats: fewer than 2 points left after exclusion");
    }
    const double n = static_cast<double>(sorted.size());
    r.count = sorted.size();
    r.mean = pairwise_sum(sorted) / n;
    std::vector<double> d2(sorted.size()), d3(sorted.size()), d4(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double d = sorted[i] - r.mean;
        d2[i] = d * d;
        d3[i] = d2[i] * d;
        d4[i] = d2[i] * d2[i];
    }
    const double m2 = pairwise_sum(d2) / n;
    const double m3 = pairwise_sum(d3) / n;
    const double m4 = pairwise_sum(d4) / n;
    if (!(m2 > 0.0)) throw DomainError("descriptive_stats: data have zero spread");
    r.stdev = std::sqrt(m2 * n / (n - 1.0));
    r.skewness = m3 / std::pow(m2, 1.5);
    r.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    r.median = sorted_quantile(sorted, 0.5);
    r.iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
    return r;
}

}  // namespace mdseq
