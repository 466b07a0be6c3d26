#include "vapormem/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vapormem {

namespace {

constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
}

inline void philox_round(std::array<std::uint64_t, 4>& c, const std::array<std::uint64_t, 2>& k) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, c[0], hi0, lo0);
    mulhilo(kM1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(std::uint64_t counter_lo) const {
    std::array<std::uint64_t, 4> c{counter_lo, 0, 0, 0};
    std::array<std::uint64_t, 2> k = key_;
    philox_round(c, k);
    for (int r = 1; r < 10; ++r) {
        k[0] += kW0;
        k[1] += kW1;
        philox_round(c, k);
    }
    return c;
}

std::uint64_t Philox4x64::next_u64() {
    if (buffered_ == 0) {
        buffer_ = block(counter_++);
        buffered_ = 4;
    }
    return buffer_[4 - buffered_--];
}

double Philox4x64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::array<double, 2> Philox4x64::next_normal_pair() {
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

namespace {
// Knuth's multiplicative method; only safe for means where exp(-mean) does
// not underflow.
std::uint64_t poisson_small(Philox4x64& rng, double mean) {
    const double threshold = std::exp(-mean);
    std::uint64_t n = 0;
    double prod = rng.next_double();
    while (prod > threshold) {
        ++n;
        prod *= rng.next_double();
    }
    return n;
}
}  // namespace

std::uint64_t poisson_sample(Philox4x64& rng, double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson_sample: mean must be >= 0");
    if (mean == 0.0) return 0;
    std::uint64_t total = 0;
    while (mean > 500.0) {
        total += poisson_small(rng, 500.0);
        mean -= 500.0;
    }
    return total + poisson_small(rng, mean);
}

}  // namespace vapormem
