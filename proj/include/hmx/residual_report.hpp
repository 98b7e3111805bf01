#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmx {

struct Residual {
    std::string name;
    double value = 0.0;
    /// +inf marks an informational entry that never fails.
    double tolerance = std::numeric_limits<double>::infinity();

    bool pass() const { return value <= tolerance; }
};

/// Named residual norms produced by verification operations.
class ResidualReport {
public:
    void add(std::string name, double value,
             double tolerance = std::numeric_limits<double>::infinity()) {
        items_.push_back({std::move(name), value, tolerance});
    }
    void append(const ResidualReport& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
    }

    const std::vector<Residual>& items() const noexcept { return items_; }
    bool contains(const std::string& name) const;
    /// Throws std::out_of_range when absent.
    double value(const std::string& name) const;
    bool all_pass() const;

private:
    std::vector<Residual> items_;
};

inline bool ResidualReport::contains(const std::string& name) const {
    for (const auto& r : items_)
        if (r.name == name) return true;
    return false;
}

inline double ResidualReport::value(const std::string& name) const {
    for (const auto& r : items_)
        if (r.name == name) return r.value;
    throw std::out_of_range("no residual named " + name);
}

inline bool ResidualReport::all_pass() const {
    for (const auto& r : items_)
        if (!r.pass()) return false;
    return true;
}

}  // namespace hmx
