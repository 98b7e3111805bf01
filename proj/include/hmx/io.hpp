#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmx/residual_report.hpp"
#include "hmx/tensor_core.hpp"

namespace hmx {

inline constexpr std::string_view kFormatName = "hmx-hypermatrix";
inline constexpr std::string_view kFormatVersion = "1";

struct Metadata {
    std::optional<std::uint64_t> seed;
    std::string description;
};

struct HypermatrixFile {
    std::string version{kFormatVersion};
    Hypermatrix value;
    Metadata metadata;
};

/// JSON text, one [re, im] pair per line; doubles use the shortest
/// representation that round-trips. Throws DomainError on NaN or Inf.
std::string serialize(const Hypermatrix& h, const Metadata& meta = {});

/// Throws ParseError (with line and column) on malformed text and
/// ShapeError when the entry count disagrees with the shape.
HypermatrixFile parse_file(std::string_view text);
Hypermatrix parse(std::string_view text);

Hypermatrix read_hypermatrix(const std::filesystem::path& path);
HypermatrixFile read_hypermatrix_file(const std::filesystem::path& path);
void write_hypermatrix(const std::filesystem::path& path, const Hypermatrix& h,
                       const Metadata& meta = {});

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// "%.17g"
std::string format_double(double v);

struct ReportEntry {
    std::string name;
    double value = 0.0;
    /// Absent for informational entries.
    std::optional<double> tolerance;

    bool pass() const { return !tolerance || value <= *tolerance; }
};

struct ReportFile {
    std::vector<std::string> command;
    /// (path, digest) per input file, in argument order.
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ReportEntry> values;
    /// Free-form scalar results (complex values, flags) rendered as text.
    std::vector<std::pair<std::string, std::string>> results;
    double wall_time = 0.0;

    void add(const ResidualReport& r);
    void add(std::string name, double value, std::optional<double> tolerance = std::nullopt);
    void note(std::string name, std::string text);
    bool all_pass() const;

    /// Pretty JSON; `with_timing = false` drops the wall-time field.
    std::string to_json(bool with_timing = true) const;
};

std::string format_complex(Complex z);

}  // namespace hmx
