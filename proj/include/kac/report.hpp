#pragma once

#include <string>
#include <vector>

namespace kac {

struct ResidualEntry {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

class ResidualReport {
public:
    void add(const std::string& name, double residual, double tolerance);
    // Entry that passes when the value is at least the threshold.
    void add_at_least(const std::string& name, double value, double threshold);
    void merge(const ResidualReport& other, const std::string& prefix = "");

    bool all_pass() const;
    const std::vector<ResidualEntry>& entries() const { return entries_; }
    const ResidualEntry& at(const std::string& name) const;
    double residual(const std::string& name) const { return at(name).residual; }
    bool has(const std::string& name) const;
    double max_residual() const;
    std::string summary() const;

private:
    std::vector<ResidualEntry> entries_;
};

}  // namespace kac
