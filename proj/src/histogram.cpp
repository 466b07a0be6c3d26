#include "vapormem/histogram.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vapormem/textio.hpp"

namespace vapormem {

std::string to_string(HistogramRole role) {
    switch (role) {
        case HistogramRole::signal: return "signal";
        case HistogramRole::reference: return "reference";
        default: return "noise";
    }
}

HistogramRole histogram_role_from_string(const std::string& s) {
    if (s == "signal") return HistogramRole::signal;
    if (s == "reference") return HistogramRole::reference;
    if (s == "noise") return HistogramRole::noise;
    throw std::runtime_error("unknown histogram role '" + s + "'");
}

void Histogram::validate() const {
    if (!(bin_width_ns > 0.0))
        throw std::invalid_argument("Histogram: bin_width_ns must be > 0");
    if (counts.empty()) throw std::invalid_argument("Histogram: no bins");
}

void write_histogram_csv(const Histogram& h, std::ostream& os) {
    h.validate();
    os << "# bin_width_ns=" << format_double(h.bin_width_ns) << '\n';
    os << "# start_time_ns=" << format_double(h.start_time_ns) << '\n';
    os << "# role=" << to_string(h.role) << '\n';
    os << "# integration_time_s=" << format_double(h.integration_time_s) << '\n';
    os << "# repetition_rate_hz=" << format_double(h.repetition_rate_hz) << '\n';
    if (h.mean_photon_number)
        os << "# mean_photon_number=" << format_double(*h.mean_photon_number) << '\n';
    for (const auto c : h.counts) os << c << '\n';
}

void write_histogram_csv(const Histogram& h, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_histogram_csv(h, os);
}

Histogram read_histogram_csv(std::istream& is, const std::string& name) {
    Histogram h;
    bool have_bin_width = false, have_start = false, have_role = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq == std::string::npos) fail("malformed header line (expected key=value)");
            std::string key = trim(body.substr(0, eq));
            std::string value = trim(body.substr(eq + 1));
            try {
                if (key == "bin_width_ns") {
                    h.bin_width_ns = parse_double(value);
                    have_bin_width = true;
                } else if (key == "start_time_ns") {
                    h.start_time_ns = parse_double(value);
                    have_start = true;
                } else if (key == "role") {
                    h.role = histogram_role_from_string(value);
                    have_role = true;
                } else if (key == "integration_time_s") {
                    h.integration_time_s = parse_double(value);
                } else if (key == "repetition_rate_hz") {
                    h.repetition_rate_hz = parse_double(value);
                } else if (key == "mean_photon_number") {
                    h.mean_photon_number = parse_double(value);
                } else {
                    fail("unknown header key '" + key + "'");
                }
            } catch (const std::runtime_error&) {
                throw;
            } catch (const std::exception& e) {
                fail(std::string("bad header value: ") + e.what());
            }
            continue;
        }
        const std::string t = trim(line);
        std::uint64_t c = 0;
        const auto* first = t.data();
        const auto* last = t.data() + t.size();
        const auto [ptr, ec] = std::from_chars(first, last, c);
        if (ec != std::errc{} || ptr != last) fail("expected a non-negative integer count");
        h.counts.push_back(c);
    }
    lineno += 1;
    if (!have_bin_width) fail("missing required header bin_width_ns");
    if (!have_start) fail("missing required header start_time_ns");
    if (!have_role) fail("missing required header role");
    if (h.counts.empty()) fail("histogram has no count lines");
    h.validate();
    return h;
}

Histogram read_histogram_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    return read_histogram_csv(is, path);
}

}  // namespace vapormem
