#include "vapormem/mc.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "vapormem/rng.hpp"

namespace vapormem {

namespace {

constexpr std::size_t kChunkAtoms = 4096;
constexpr std::uint64_t kVelocityStream = 0x01;

struct ChunkMoments {
    std::vector<kernels::PhaseMoments> per_time;
};

}  // namespace

void McConfig::validate() const {
    if (n_atoms < 1) throw std::invalid_argument("McConfig: n_atoms must be >= 1");
    vapor.validate();
    geometry.validate();
    double prev = -1.0;
    for (double t : times_ns) {
        if (t < 0.0) throw std::invalid_argument("McConfig: times must be non-negative");
        if (t <= prev) throw std::invalid_argument("McConfig: times must be strictly increasing");
        prev = t;
    }
    if (components.empty())
        throw std::invalid_argument("McConfig: at least one storage component required");
    if (n_workers < 1) throw std::invalid_argument("McConfig: n_workers must be >= 1");
}

double wavevector_mismatch_rad_per_m(const SpinwaveGeometry& geom) {
    const SpinwaveWavelength lam = spinwave_wavelength(geom);
    if (lam.doppler_free)
        throw std::invalid_argument("geometry is Doppler-free (zero wavevector mismatch)");
    return 2.0 * std::numbers::pi / (lam.microns * 1e-6);
}

std::vector<McPoint> simulate_decay(const McConfig& cfg) {
    cfg.validate();
    if (cfg.times_ns.empty()) return {};

    const double v_th = thermal_velocity_m_per_s(cfg.vapor);
    const double dk = wavevector_mismatch_rad_per_m(cfg.geometry);
    const auto accum = kernels::select_phase_accum(cfg.kernel);

    const std::size_t n_times = cfg.times_ns.size();
    const std::size_t n_chunks = (cfg.n_atoms + kChunkAtoms - 1) / kChunkAtoms;
    std::vector<ChunkMoments> chunk_results(n_chunks);

    // Atoms are partitioned into fixed chunks; chunk c draws its velocities
    // from substream (seed, c), so the result is independent of worker count.
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&]() {
        std::vector<double> velocities(kChunkAtoms);
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) break;
            const std::size_t count =
                std::min<std::size_t>(kChunkAtoms, cfg.n_atoms - c * kChunkAtoms);
            Philox4x64 rng = substream(cfg.seed, kVelocityStream, c);
            for (std::size_t i = 0; i < count; i += 2) {
                const auto z = rng.next_normal_pair();
                velocities[i] = v_th * z[0];
                if (i + 1 < count) velocities[i + 1] = v_th * z[1];
            }
            ChunkMoments cm;
            cm.per_time.reserve(n_times);
            for (std::size_t ti = 0; ti < n_times; ++ti) {
                const double scale = dk * cfg.times_ns[ti] * 1e-9;  // rad per (m/s)
                cm.per_time.push_back(accum(velocities.data(), count, scale));
            }
            chunk_results[c] = std::move(cm);
        }
    };

    if (cfg.n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(cfg.n_workers);
        for (int w = 0; w < cfg.n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Reduce chunks in fixed index order.
    std::vector<kernels::PhaseMoments> total(n_times);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        for (std::size_t ti = 0; ti < n_times; ++ti) {
            const auto& m = chunk_results[c].per_time[ti];
            auto& t = total[ti];
            t.sum_cos += m.sum_cos;
            t.sum_sin += m.sum_sin;
            t.sum_cos2 += m.sum_cos2;
            t.sum_sin2 += m.sum_sin2;
            t.sum_cossin += m.sum_cossin;
        }
    }

    const double n = static_cast<double>(cfg.n_atoms);

    // Per-atom observable is zeta = W(t) * e^{i theta}, with the component sum
    // W(t) common to all atoms. raw(t) = |mean zeta|^2.
    auto raw_at = [&](std::size_t ti, double t_ns, double& var_raw) {
        std::complex<double> w{0.0, 0.0};
        for (const auto& comp : cfg.components) {
            const double phase = 2.0 * std::numbers::pi * comp.splitting_offset_mhz * 1e-3 * t_ns;
            w += comp.amplitude * std::exp(std::complex<double>{0.0, phase});
        }
        const auto& m = total[ti];
        const double mc = m.sum_cos / n;
        const double ms = m.sum_sin / n;
        const double mr = w.real() * mc - w.imag() * ms;
        const double mi = w.real() * ms + w.imag() * mc;
        const double raw = mr * mr + mi * mi;

        var_raw = 0.0;
        if (cfg.n_atoms >= 2) {
            // second moments of (Re zeta, Im zeta) from the (cos, sin) moments
            const double ecc = m.sum_cos2 / n;
            const double ess = m.sum_sin2 / n;
            const double ecs = m.sum_cossin / n;
            const double wr = w.real(), wi = w.imag();
            const double err2 = wr * wr * ecc - 2.0 * wr * wi * ecs + wi * wi * ess;
            const double eii2 = wr * wr * ess + 2.0 * wr * wi * ecs + wi * wi * ecc;
            const double eri = (wr * wr - wi * wi) * ecs + wr * wi * (ecc - ess);
            const double bessel = n / (n - 1.0);
            const double var_mr = std::max(0.0, (err2 - mr * mr) * bessel) / n;
            const double var_mi = std::max(0.0, (eii2 - mi * mi) * bessel) / n;
            const double cov = (eri - mr * mi) * bessel / n;
            // delta method for raw = mr^2 + mi^2
            var_raw = 4.0 * mr * mr * var_mr + 4.0 * mi * mi * var_mi + 8.0 * mr * mi * cov;
            var_raw = std::max(0.0, var_raw);
        }
        return raw;
    };

    // Normalization reference at t = 0: all phases vanish, so it can be
    // evaluated without extra sampling. If times[0] == 0 this makes the first
    // efficiency exactly 1.
    double raw0;
    if (cfg.times_ns.front() == 0.0) {
        double ignore;
        raw0 = raw_at(0, 0.0, ignore);
    } else {
        double wsum = 0.0;
        for (const auto& comp : cfg.components) wsum += comp.amplitude;
        raw0 = wsum * wsum;  // mean of e^{i*0} is exactly 1
    }
    if (raw0 == 0.0) throw std::invalid_argument("simulate_decay: zero amplitude sum at t=0");

    std::vector<McPoint> out;
    out.reserve(n_times);
    for (std::size_t ti = 0; ti < n_times; ++ti) {
        double var_raw;
        const double raw = raw_at(ti, cfg.times_ns[ti], var_raw);
        out.push_back({cfg.times_ns[ti], raw / raw0, std::sqrt(var_raw) / raw0});
    }
    return out;
}

DeviationReport compare_curves(const std::vector<McPoint>& a, const std::vector<McPoint>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_curves: time grids differ in length");
    DeviationReport rep;
    rep.n = a.size();
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].t_ns != b[i].t_ns)
            throw std::invalid_argument("compare_curves: time grids do not match");
        const double dev = std::abs(a[i].efficiency - b[i].efficiency);
        rep.max_abs = std::max(rep.max_abs, dev);
        sum_sq += dev * dev;
    }
    rep.rms = a.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(a.size()));
    return rep;
}

DeviationReport compare_to_model(const std::vector<McPoint>& mc,
                                 const SpinwaveModelParams& p,
                                 const HyperfineSplittings& hf) {
    if (mc.empty()) throw std::invalid_argument("compare_to_model: empty MC result");
    p.validate();
    const double model0 = efficiency_at(p.t0_ns, p, hf);
    if (model0 == 0.0) throw std::invalid_argument("compare_to_model: model vanishes at t0");
    DeviationReport rep;
    rep.n = mc.size();
    double sum_sq = 0.0;
    for (const auto& pt : mc) {
        const double model = efficiency_at(pt.t_ns, p, hf) / model0;
        const double dev = std::abs(pt.efficiency - model);
        rep.max_abs = std::max(rep.max_abs, dev);
        sum_sq += dev * dev;
    }
    rep.rms = std::sqrt(sum_sq / static_cast<double>(mc.size()));
    return rep;
}

}  // namespace vapormem
