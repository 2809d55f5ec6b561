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

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mdseq/errors.hpp"
#include "mdseq/qmc.hpp"

namespace mdseq {

std::string to_string(FactorKind kind) {
    switch (kind) {
        case FactorKind::cosine: return "cos";
        case FactorKind::exp_neg: return "exp_neg";
        case FactorKind::identity: return "x";
    }
    return "unknown";
}

FactorKind parse_factor_kind(std::string_view text) {
    if (text == "cos") return FactorKind::cosine;
    if (text == "exp_neg") return FactorKind::exp_neg;
    if (text == "x") return FactorKind::identity;
    throw DomainError("unknown factor kind '" + std::string(text) + "' (expected cos, exp_neg or x)");
}

namespace {

double factor(FactorKind kind, double x) {
    switch (kind) {
        case FactorKind::cosine: return std::cos(x);
        case FactorKind::exp_neg: return std::exp(-x);
        case FactorKind::identity: return x;
    }
    return 0.0;
}

// Exact integral of the factor over [lo, hi].
double factor_integral(FactorKind kind, const Bounds& b) {
    switch (kind) {
        case FactorKind::cosine: return std::sin(b.upper) - std::sin(b.lower);
        case FactorKind::exp_neg: return std::exp(-b.lower) - std::exp(-b.upper);
        case FactorKind::identity: return 0.5 * (b.upper * b.upper - b.lower * b.lower);
    }
    return 0.0;
}

double product_reference(FactorKind kind, const std::vector<Bounds>& domain) {
    double v = 1.0;
    for (const Bounds& b : domain) v *= factor_integral(kind, b);
    return v;
}

double sum_reference(FactorKind kind, const std::vector<Bounds>& domain) {
    double total = 0.0;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        double term = factor_integral(kind, domain[i]);
        for (std::size_t j = 0; j < domain.size(); ++j) {
            if (j != i) term *= domain[j].width();
        }
        total += term;
    }
    return total;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

double parse_number(std::string_view s, std::size_t line, const char* field) {
    std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
        throw ParseError("battery line " + std::to_string(line) + ": bad " + field + " '" + buf + "'", line);
    }
    return v;
}

}  // namespace

Integrand make_factor_integrand(FactorKind kind, IntegrandFamily family, std::vector<Bounds> domain,
                                std::string label) {
    Integrand f;
    f.dimension = domain.size();
    f.family = family;
    switch (family) {
        case IntegrandFamily::multiplicative:
            f.evaluator = [kind](std::span<const double> x) {
                double v = 1.0;
                for (double xi : x) v *= factor(kind, xi);
                return v;
            };
            f.reference_value = product_reference(kind, domain);
            break;
        case IntegrandFamily::additive:
            f.evaluator = [kind](std::span<const double> x) {
                double v = 0.0;
                for (double xi : x) v += factor(kind, xi);
                return v;
            };
            f.reference_value = sum_reference(kind, domain);
            break;
        case IntegrandFamily::mixed:
            f.evaluator = [kind](std::span<const double> x) {
                double p = 1.0, s = 0.0;
                for (double xi : x) {
                    const double g = factor(kind, xi);
                    p *= g;
                    s += g;
                }
                return p + s;
            };
            f.reference_value = product_reference(kind, domain) + sum_reference(kind, domain);
            break;
    }
    if (label.empty()) {
        const char* op = family == IntegrandFamily::multiplicative ? "prod"
                         : family == IntegrandFamily::additive    ? "sum"
                                                                  : "prod+sum";
        label = std::string(op) + "_" + to_string(kind) + "_" + std::to_string(f.dimension) + "d";
    }
    f.label = std::move(label);
    f.domain = std::move(domain);
    validate(f);
    return f;
}

std::vector<Integrand> default_battery() {
    std::vector<Integrand> out;
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (IntegrandFamily fam : {IntegrandFamily::multiplicative, IntegrandFamily::additive}) {
            for (FactorKind kind : {FactorKind::cosine, FactorKind::exp_neg, FactorKind::identity}) {
                out.push_back(make_factor_integrand(kind, fam, std::vector<Bounds>(dim, Bounds{0.0, 1.0})));
            }
        }
    }
    return out;
}

std::vector<Integrand> parse_battery(std::string_view text) {
    std::vector<Integrand> out;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        const auto cols = split(line, ',');
        if (!header_seen) {
            if (cols.size() != 6 || cols[0] != "name" || cols[1] != "family" || cols[2] != "kind" ||
                cols[3] != "dimension" || cols[4] != "bounds" || cols[5] != "reference") {
                throw ParseError("battery line " + std::to_string(line_no) +
                                     ": expected header name,family,kind,dimension,bounds,reference",
                                 line_no);
            }
            header_seen = true;
            continue;
        }
        if (cols.size() != 6) {
            throw ParseError("battery line " + std::to_string(line_no) + ": expected 6 fields, got " +
                                 std::to_string(cols.size()),
                             line_no);
        }
        try {
            const IntegrandFamily family = parse_family(cols[1]);
            const FactorKind kind = parse_factor_kind(cols[2]);
            const double dim_value = parse_number(cols[3], line_no, "dimension");
            if (dim_value < 1 || dim_value > 4 || dim_value != std::floor(dim_value)) {
                throw ParseError("battery line " + std::to_string(line_no) + ": dimension must be 1..4", line_no);
            }
            const auto dim = static_cast<std::size_t>(dim_value);
            std::vector<Bounds> domain;
            for (std::string_view axis : split(cols[4], '|')) {
                const auto ends = split(axis, ':');
                if (ends.size() != 2) {
                    throw ParseError("battery line " + std::to_string(line_no) + ": bounds need lo:hi", line_no);
                }
                domain.push_back({parse_number(ends[0], line_no, "lower bound"),
                                  parse_number(ends[1], line_no, "upper bound")});
            }
            if (domain.size() == 1 && dim > 1) domain.resize(dim, domain.front());
            if (domain.size() != dim) {
                throw ParseError("battery line " + std::to_string(line_no) + ": bounds/dimension mismatch", line_no);
            }
            Integrand f = make_factor_integrand(kind, family, std::move(domain), std::string(cols[0]));
            if (!cols[5].empty()) f.reference_value = parse_number(cols[5], line_no, "reference");
            validate(f);
            out.push_back(std::move(f));
        } catch (const DomainError& e) {
            throw ParseError("battery line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        if (eol == text.size()) break;
    }
    if (out.empty()) throw ParseError("battery file defines no integrands", line_no);
    return out;
}

std::vector<Integrand> load_battery(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open battery file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_battery(buf.str());
}

void require_family_coverage(std::span<const Integrand> battery) {
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        bool mult = false, add = false;
        for (const Integrand& f : battery) {
            if (f.dimension != dim) continue;
            mult = mult || f.family == IntegrandFamily::multiplicative;
            add = add || f.family == IntegrandFamily::additive;
        }
        if (!mult || !add) {
            throw DomainError("battery lacks a multiplicative or additive integrand in dimension " +
                              std::to_string(dim));
        }
    }
}

}  // namespace mdseq
