#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Time-binned photon counts from a storage experiment, plus the CSV format
// used on disk. The header/one-count-per-line layout is a compatibility
// contract covered by golden tests.

namespace vapormem {

enum class HistogramRole { signal, reference, noise };

std::string to_string(HistogramRole role);
HistogramRole histogram_role_from_string(const std::string& s);

struct Histogram {
    double bin_width_ns = 0.0;
    double start_time_ns = 0.0;
    std::vector<std::uint64_t> counts;
    HistogramRole role = HistogramRole::signal;
    double integration_time_s = 0.0;
    double repetition_rate_hz = 0.0;
    std::optional<double> mean_photon_number;

    void validate() const;

    double end_time_ns() const {
        return start_time_ns + bin_width_ns * static_cast<double>(counts.size());
    }
    double bin_lo_ns(std::size_t i) const {
        return start_time_ns + bin_width_ns * static_cast<double>(i);
    }
};

// CSV: `# key=value` header lines, then one count per line.
void write_histogram_csv(const Histogram& h, std::ostream& os);
void write_histogram_csv(const Histogram& h, const std::string& path);

// Throws std::runtime_error with the 1-based line number on malformed input.
Histogram read_histogram_csv(std::istream& is, const std::string& name = "<stream>");
Histogram read_histogram_csv(const std::string& path);

}  // namespace vapormem
