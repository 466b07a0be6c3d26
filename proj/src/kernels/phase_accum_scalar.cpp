#include "vapormem/kernels/phase_accum.hpp"

#include "vapormem/kernels/sincos.hpp"

namespace vapormem::kernels {

PhaseMoments phase_accum_scalar(const double* velocities, std::size_t n, double scale) {
    double acc_c[4] = {0, 0, 0, 0};
    double acc_s[4] = {0, 0, 0, 0};
    double acc_cc[4] = {0, 0, 0, 0};
    double acc_ss[4] = {0, 0, 0, 0};
    double acc_cs[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lane = i & 3;
        const double theta = scale * velocities[i];
        double s, c;
        sincos_scalar(theta, s, c);
        acc_c[lane] += c;
        acc_s[lane] += s;
        acc_cc[lane] = std::fma(c, c, acc_cc[lane]);
        acc_ss[lane] = std::fma(s, s, acc_ss[lane]);
        acc_cs[lane] = std::fma(c, s, acc_cs[lane]);
    }
    PhaseMoments m;
    m.sum_cos = (acc_c[0] + acc_c[1]) + (acc_c[2] + acc_c[3]);
    m.sum_sin = (acc_s[0] + acc_s[1]) + (acc_s[2] + acc_s[3]);
    m.sum_cos2 = (acc_cc[0] + acc_cc[1]) + (acc_cc[2] + acc_cc[3]);
    m.sum_sin2 = (acc_ss[0] + acc_ss[1]) + (acc_ss[2] + acc_ss[3]);
    m.sum_cossin = (acc_cs[0] + acc_cs[1]) + (acc_cs[2] + acc_cs[3]);
    return m;
}

}  // namespace vapormem::kernels
