#include "coneatoms/spectral.hpp"

#include "coneatoms/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace coneatoms {

double bump(double s) {
    double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s2));
}

Partition build_partition(const ConeDescriptor& cone, const ConeLattice& lattice,
                          const FrequencyGrid& grid) {
    if (cone.n != grid.dims)
        throw std::invalid_argument("cone/grid dimension mismatch");
    if (grid.dw() > lattice.delta)
        throw std::invalid_argument("grid too coarse for the lattice balls");

    const std::size_t total = grid.size();
    const std::size_t J = lattice.points.size();

    // cached factorizations and determinants of the centers
    std::vector<GroupElement> hs(J);
    std::vector<double> cdet(J);
    for (std::size_t j = 0; j < J; ++j) {
        hs[j] = factorize(cone, lattice.points[j]);
        cdet[j] = det(cone, lattice.points[j]);
    }
    const double detlo = std::exp(-2.0 * cone.R);
    const double dethi = std::exp(2.0 * cone.R);

    struct Hit {
        std::uint32_t flat;
        std::uint32_t j;
        double value;
    };
    const int nw = worker_count();
    const std::size_t chunk = (total + nw - 1) / nw;
    std::vector<std::vector<Hit>> hits(nw);
    std::vector<std::vector<std::uint32_t>> masks(nw);

    std::vector<std::thread> pool;
    for (int t = 0; t < nw; ++t) {
        std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
            std::vector<std::pair<std::uint32_t, double>> local;
            for (std::size_t i = lo; i < hi; ++i) {
                Vec w = grid.freq_point(i);
                if (!contains(cone, w)) continue;
                double dw = det(cone, w);
                local.clear();
                double sum = 0.0;
                for (std::size_t j = 0; j < J; ++j) {
                    double ratio = dw / cdet[j];
                    if (ratio < detlo || ratio > dethi) continue;
                    double d =
                        distance_from_e(cone, act_inverse(cone, hs[j], w));
                    if (d >= 2.0) continue;
                    double b = bump(d / 2.0);
                    if (b <= 0.0) continue;
                    local.emplace_back(static_cast<std::uint32_t>(j), b);
                    sum += b;
                }
                if (sum <= 0.0) continue;
                masks[t].push_back(static_cast<std::uint32_t>(i));
                for (auto& [j, b] : local) {
                    double v = b / sum;
                    if (v > 0.0)
                        hits[t].push_back({static_cast<std::uint32_t>(i), j, v});
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    Partition part;
    part.grid = grid;
    part.windows.resize(J);
    for (std::size_t j = 0; j < J; ++j) {
        part.windows[j].j = static_cast<int>(j);
        part.windows[j].center = lattice.points[j];
    }
    for (int t = 0; t < nw; ++t) {
        for (const Hit& h : hits[t]) part.windows[h.j].values.emplace_back(h.flat, h.value);
        part.interior_mask.insert(part.interior_mask.end(), masks[t].begin(),
                                  masks[t].end());
    }
    // chunks are in flat-index order already; keep windows sorted too
    for (auto& w : part.windows)
        std::sort(w.values.begin(), w.values.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return part;
}

GridFunction window_convolve(const GridFunction& f, const SpectralWindow& window) {
    std::vector<cd> spec(f.grid.size(), cd(0.0, 0.0));
    for (const auto& [flat, v] : window.values) {
        if (flat >= spec.size())
            throw std::invalid_argument("window/grid mismatch");
        spec[flat] = f.spectrum[flat] * v;
    }
    return from_spectrum(f.grid, std::move(spec));
}

GridFunction sharp_projection(const GridFunction& f, const Partition& partition) {
    if (!f.grid.compatible(partition.grid))
        throw std::invalid_argument("grid mismatch");
    std::vector<cd> spec(f.grid.size(), cd(0.0, 0.0));
    for (const auto& w : partition.windows)
        for (const auto& [flat, v] : w.values) spec[flat] += f.spectrum[flat] * v;
    return from_spectrum(f.grid, std::move(spec));
}

void write_window_csv(std::ostream& os, const Partition& partition, int j) {
    const auto& w = partition.windows.at(j);
    os << "flat";
    for (int d = 0; d < partition.grid.dims; ++d) os << ",w" << d;
    os << ",value\n";
    char buf[64];
    for (const auto& [flat, v] : w.values) {
        os << flat;
        Vec p = partition.grid.freq_point(flat);
        for (int d = 0; d < partition.grid.dims; ++d) {
            std::snprintf(buf, sizeof buf, ",%.17g", p(d));
            os << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        os << buf << "\n";
    }
}

} // namespace coneatoms
