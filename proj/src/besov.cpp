#include "coneatoms/besov.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coneatoms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void put_extended(std::ostringstream& os, double v) {
    if (std::isinf(v))
        os << "\"inf\"";
    else
        os << v;
}

} // namespace

std::string IndexReport::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"q_tilde\":";
    put_extended(os, q_tilde);
    os << ",\"q_index\":";
    put_extended(os, q_index);
    os << ",\"embedding_ok\":" << (embedding_ok ? "true" : "false")
       << ",\"isomorphism_ok\":" << (isomorphism_ok ? "true" : "false")
       << ",\"atomic_ok\":" << (atomic_ok ? "true" : "false")
       << ",\"rank2_extended_flag\":" << (rank2_extended_flag ? "true" : "false")
       << "}";
    return os.str();
}

double qtilde_index(const ConeDescriptor& cone, const ParamSet& params) {
    const double nR = static_cast<double>(cone.n) / cone.R;
    const double pp = params.p_prime();
    if (!(nR > pp)) return kInf;
    return (params.nu + nR - 1.0) / (nR / pp - 1.0);
}

double q_index(const ConeDescriptor& cone, const ParamSet& params) {
    if (cone.n <= cone.R) return kInf;
    const double nR = static_cast<double>(cone.n) / cone.R;
    const double mp = std::min(params.p, params.p_prime());
    return mp * (params.nu + nR - 1.0) / (nR - 1.0);
}

IndexReport index_gate(const ConeDescriptor& cone, const ParamSet& params) {
    IndexReport rep;
    rep.q_tilde = qtilde_index(cone, params);
    rep.q_index = q_index(cone, params);
    const double nR = static_cast<double>(cone.n) / cone.R;
    rep.embedding_ok = params.q < rep.q_tilde;
    rep.isomorphism_ok = params.nu > nR - 1.0 && params.q < rep.q_index;
    rep.atomic_ok = rep.isomorphism_ok && params.p >= 1.0 &&
                    std::isfinite(params.p);
    rep.rank2_extended_flag = cone.R == 2;
    return rep;
}

double besov_norm(const ConeDescriptor& cone, const GridFunction& f,
                  const Partition& partition, const ParamSet& params) {
    if (!f.grid.compatible(partition.grid))
        throw std::invalid_argument("grid mismatch");
    const double dwn = std::pow(f.grid.dw(), f.grid.dims);
    // spectral reference mass for the skip rule
    double fmass = 0.0;
    for (const cd& z : f.spectrum) fmass += std::norm(z);
    fmass = std::sqrt(fmass * dwn);

    double acc = 0.0;
    for (const auto& w : partition.windows) {
        double wmass = 0.0;
        for (const auto& [flat, v] : w.values)
            wmass += std::norm(f.spectrum[flat] * v);
        wmass = std::sqrt(wmass * dwn);
        if (wmass <= 1e-14 * fmass) continue;
        GridFunction piece = window_convolve(f, w);
        double np = lp_norm(piece, params.p);
        if (!std::isfinite(np)) throw std::runtime_error("non-finite window norm");
        acc += std::pow(det(cone, w.center), -params.nu) *
               std::pow(np, params.q);
    }
    return std::pow(acc, 1.0 / params.q);
}

double sequence_norm(const std::vector<cd>& coeffs, const AtomSystem& system,
                     const ParamSet& params) {
    if (coeffs.size() != system.total)
        throw std::invalid_argument("coefficient count mismatch");
    const ConeDescriptor& cone = system.cone;
    const double alpha = params.nu -
                         params.q * cone.n / (2.0 * cone.R) -
                         static_cast<double>(cone.n) / cone.R;
    double acc = 0.0;
    for (const auto& grp : system.groups) {
        double inner = 0.0;
        for (std::size_t k = 0; k < grp.count; ++k)
            inner += std::pow(std::abs(coeffs[grp.offset + k]), params.p);
        if (inner <= 0.0) continue;
        inner *= grp.box_vol;
        acc += std::pow(inner, params.q / params.p) *
               std::pow(det(cone, grp.y), alpha) * grp.ball_vol;
    }
    return std::pow(acc, 1.0 / params.q);
}

} // namespace coneatoms
