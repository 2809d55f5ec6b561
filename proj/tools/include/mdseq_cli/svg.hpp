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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mdseq::cli {

enum class SeriesStyle { line, points, step };

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    SeriesStyle style = SeriesStyle::line;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
    std::vector<double> horizontal_rules;  ///< dashed grey reference lines
};

/// One box per sequence: whiskers at the most extreme points within the fences.
struct BoxSummary {
    std::string label;
    double whisker_low = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_high = 0.0;
};

/// Standalone SVG documents. Coordinates are printed with fixed precision
/// so identical input gives identical bytes. `note` lands in a comment.
std::string render_svg(const Plot& plot, const std::string& note);
std::string render_boxes(const std::string& title, const std::string& y_label,
                         const std::vector<BoxSummary>& boxes, const std::string& note);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mdseq::cli
