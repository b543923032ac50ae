#include "kac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kac {

void ResidualReport::add(const std::string& name, double residual, double tolerance) {
    bool ok = std::isfinite(residual) && residual < tolerance;
    entries_.push_back({name, residual, tolerance, ok});
}

void ResidualReport::add_at_least(const std::string& name, double value, double threshold) {
    bool ok = std::isfinite(value) && value >= threshold;
    entries_.push_back({name, value, threshold, ok});
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
    for (auto e : other.entries_) {
        e.name = prefix + e.name;
        entries_.push_back(e);
    }
}

bool ResidualReport::all_pass() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass; });
}

const ResidualEntry& ResidualReport::at(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw std::out_of_range("no report entry " + name);
}

bool ResidualReport::has(const std::string& name) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

double ResidualReport::max_residual() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.residual);
    return m;
}

std::string ResidualReport::summary() const {
    std::string out;
    char buf[64];
    for (const auto& e : entries_) {
        std::snprintf(buf, sizeof buf, "%.3e < %.1e", e.residual, e.tolerance);
        out += (e.pass ? "  ok    " : "  FAIL  ") + e.name + "  " + buf + "\n";
    }
    return out;
}

}  // namespace kac
