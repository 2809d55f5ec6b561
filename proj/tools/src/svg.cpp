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

#include "mdseq_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace mdseq::cli {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;

std::string fixed(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string header(const std::string& title, const std::string& note) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- " + escape(note) + " -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) + "\" height=\"" +
         fixed(kHeight, 0) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + escape(title) +
         "</text>\n";
    return s;
}

struct Axis {
    double lo = 0, hi = 1;
    bool log = false;
    double pixel_lo = 0, pixel_hi = 1;

    double map(double v) const {
        const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }
    std::vector<double> ticks() const {
        std::vector<double> t;
        if (log) {
            for (double e = std::ceil(lo); e <= hi + 1e-9; ++e) t.push_back(std::pow(10.0, e));
        } else {
            for (int i = 0; i <= 5; ++i) t.push_back(lo + (hi - lo) * i / 5.0);
        }
        return t;
    }
};

Axis make_axis(std::vector<double> values, bool log, double p0, double p1) {
    Axis a;
    a.log = log;
    a.pixel_lo = p0;
    a.pixel_hi = p1;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v : values) {
        if (!std::isfinite(v) || (log && v <= 0)) continue;
        const double w = log ? std::log10(v) : v;
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    if (log) {
        lo = std::floor(lo);
        hi = std::ceil(hi);
    } else {
        const double pad = 0.04 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
    a.lo = lo;
    a.hi = hi;
    return a;
}

bool drawable(double x, double y, const Axis& ax, const Axis& ay) {
    return std::isfinite(x) && std::isfinite(y) && (!ax.log || x > 0) && (!ay.log || y > 0);
}

std::string frame(const Axis& ax, const Axis& ay, const std::string& x_label, const std::string& y_label) {
    std::string s;
    s += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(kWidth - kLeft - kRight) +
         "\" height=\"" + fixed(kHeight - kTop - kBottom) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ax.ticks()) {
        const double px = ax.map(t);
        s += "<line x1=\"" + fixed(px) + "\" y1=\"" + fixed(kHeight - kBottom) + "\" x2=\"" + fixed(px) + "\" y2=\"" +
             fixed(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fixed(px) + "\" y=\"" + fixed(kHeight - kBottom + 18) + "\" text-anchor=\"middle\">" +
             tick_label(t) + "</text>\n";
    }
    for (double t : ay.ticks()) {
        const double py = ay.map(t);
        s += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(py) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
             fixed(py) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py + 4) + "\" text-anchor=\"end\">" + tick_label(t) +
             "</text>\n";
    }
    s += "<text x=\"" + fixed((kLeft + kWidth - kRight) / 2) + "\" y=\"" + fixed(kHeight - 15) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
    s += "<text transform=\"translate(18," + fixed((kTop + kHeight - kBottom) / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(y_label) + "</text>\n";
    return s;
}

}  // namespace

std::string render_svg(const Plot& plot, const std::string& note) {
    std::vector<double> xs, ys;
    for (const Series& s : plot.series) {
        if (s.x.size() != s.y.size()) throw std::invalid_argument("render_svg: series '" + s.name + "' x/y mismatch");
        xs.insert(xs.end(), s.x.begin(), s.x.end());
        ys.insert(ys.end(), s.y.begin(), s.y.end());
    }
    ys.insert(ys.end(), plot.horizontal_rules.begin(), plot.horizontal_rules.end());
    const Axis ax = make_axis(xs, plot.log_x, kLeft, kWidth - kRight);
    const Axis ay = make_axis(ys, plot.log_y, kHeight - kBottom, kTop);

    std::string out = header(plot.title, note);
    out += frame(ax, ay, plot.x_label, plot.y_label);
    for (double r : plot.horizontal_rules) {
        if (!drawable(std::pow(10.0, ax.lo), r, ax, ay)) continue;
        const double py = ay.map(r);
        out += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(py) + "\" x2=\"" + fixed(kWidth - kRight) +
               "\" y2=\"" + fixed(py) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const Series& s = plot.series[k];
        if (s.style == SeriesStyle::points) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!drawable(s.x[i], s.y[i], ax, ay)) continue;
                out += "<circle cx=\"" + fixed(ax.map(s.x[i])) + "\" cy=\"" + fixed(ay.map(s.y[i])) +
                       "\" r=\"1.6\" fill=\"" + s.color + "\"/>\n";
            }
        } else {
            std::string pts;
            double last_py = 0;
            bool have_last = false;
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!drawable(s.x[i], s.y[i], ax, ay)) continue;
                const double px = ax.map(s.x[i]), py = ay.map(s.y[i]);
                if (s.style == SeriesStyle::step && have_last) pts += fixed(px) + "," + fixed(last_py) + " ";
                pts += fixed(px) + "," + fixed(py) + " ";
                last_py = py;
                have_last = true;
            }
            out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.3\"" +
                   (s.dashed ? " stroke-dasharray=\"6 3\"" : "") + " points=\"" + pts + "\"/>\n";
        }
        const double ly = kTop + 14 + 18.0 * static_cast<double>(k);
        out += "<rect x=\"" + fixed(kWidth - kRight + 12) + "\" y=\"" + fixed(ly - 9) +
               "\" width=\"14\" height=\"10\" fill=\"" + s.color + "\"/>\n";
        out += "<text x=\"" + fixed(kWidth - kRight + 32) + "\" y=\"" + fixed(ly) + "\">" + escape(s.name) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_boxes(const std::string& title, const std::string& y_label, const std::vector<BoxSummary>& boxes,
                         const std::string& note) {
    std::vector<double> ys;
    for (const BoxSummary& b : boxes) {
        ys.push_back(b.whisker_low);
        ys.push_back(b.whisker_high);
    }
    const Axis ay = make_axis(ys, false, kHeight - kBottom, kTop);
    Axis ax;
    ax.lo = 0;
    ax.hi = static_cast<double>(boxes.size());
    ax.pixel_lo = kLeft;
    ax.pixel_hi = kWidth - kRight;

    std::string out = header(title, note);
    out += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(kWidth - kLeft - kRight) +
           "\" height=\"" + fixed(kHeight - kTop - kBottom) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ay.ticks()) {
        const double py = ay.map(t);
        out += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py + 4) + "\" text-anchor=\"end\">" +
               tick_label(t) + "</text>\n";
    }
    out += "<text transform=\"translate(18," + fixed((kTop + kHeight - kBottom) / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">" + escape(y_label) + "</text>\n";
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const BoxSummary& b = boxes[i];
        const double cx = ax.map(static_cast<double>(i) + 0.5);
        const double half = 0.3 * (ax.map(1.0) - ax.map(0.0));
        out += "<line x1=\"" + fixed(cx) + "\" y1=\"" + fixed(ay.map(b.whisker_low)) + "\" x2=\"" + fixed(cx) +
               "\" y2=\"" + fixed(ay.map(b.whisker_high)) + "\" stroke=\"black\"/>\n";
        out += "<rect x=\"" + fixed(cx - half) + "\" y=\"" + fixed(ay.map(b.q3)) + "\" width=\"" + fixed(2 * half) +
               "\" height=\"" + fixed(ay.map(b.q1) - ay.map(b.q3)) +
               "\" fill=\"#aec7e8\" stroke=\"black\"/>\n";
        out += "<line x1=\"" + fixed(cx - half) + "\" y1=\"" + fixed(ay.map(b.median)) + "\" x2=\"" +
               fixed(cx + half) + "\" y2=\"" + fixed(ay.map(b.median)) + "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fixed(cx) + "\" y=\"" + fixed(kHeight - kBottom + 18) + "\" text-anchor=\"middle\">" +
               escape(b.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mdseq::cli
