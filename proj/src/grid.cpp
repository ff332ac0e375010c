#include "coneatoms/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace coneatoms {

FrequencyGrid make_grid(int dims, int N, double L) {
    if (dims < 1 || dims > 3) throw std::invalid_argument("grid dims must be 1..3");
    if (N < 4 || (N & (N - 1)) != 0)
        throw std::invalid_argument("grid N must be a power of two >= 4");
    if (!(L > 0.0)) throw std::invalid_argument("grid L must be positive");
    FrequencyGrid g;
    g.dims = dims;
    g.N = N;
    g.L = L;
    return g;
}

std::vector<cd> dft(const FrequencyGrid& grid, const std::vector<cd>& in,
                    bool forward) {
    if (in.size() != grid.size()) throw std::invalid_argument("dft: size mismatch");
    const int n = grid.dims;
    const int N = grid.N;
    const std::size_t total = grid.size();

    // Center both grids: f(x_m), x_m = (m - N/2) dx, and w_k = (k - N/2) dw.
    // exp(-i x_m w_k) = exp(-2 pi i m k / N) (-1)^m (-1)^k exp(-i pi N/2)
    // per axis, so a plain FFT with (-1)^(sum m) pre/post twiddles does it.
    std::vector<cd> buf(total);
    for (std::size_t i = 0; i < total; ++i) {
        int idx[3];
        grid.decode(i, idx);
        int s = 0;
        for (int d = 0; d < n; ++d) s += idx[d];
        buf[i] = (s & 1) ? -in[i] : in[i];
    }

    {
        static std::mutex plan_mutex;
        std::lock_guard<std::mutex> lock(plan_mutex);
        int dims_arr[3] = {N, N, N};
        fftw_plan plan = fftw_plan_dft(
            n, dims_arr, reinterpret_cast<fftw_complex*>(buf.data()),
            reinterpret_cast<fftw_complex*>(buf.data()),
            forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    const double cell = forward ? grid.dx() : grid.dw();
    const double amp = std::pow(cell / std::sqrt(2.0 * M_PI), n);
    // per-axis constant exp(-+i pi N / 2)
    const double ang = (forward ? -1.0 : 1.0) * 0.5 * M_PI * N * n;
    const cd constant = std::polar(amp, ang);

    std::vector<cd> out(total);
    for (std::size_t i = 0; i < total; ++i) {
        int idx[3];
        grid.decode(i, idx);
        int s = 0;
        for (int d = 0; d < n; ++d) s += idx[d];
        out[i] = constant * ((s & 1) ? -buf[i] : buf[i]);
    }
    return out;
}

GridFunction from_spatial(const FrequencyGrid& grid, std::vector<cd> samples) {
    GridFunction f;
    f.grid = grid;
    f.spectrum = dft(grid, samples, true);
    f.spatial = std::move(samples);
    return f;
}

GridFunction from_spectrum(const FrequencyGrid& grid, std::vector<cd> spec) {
    GridFunction f;
    f.grid = grid;
    f.spatial = dft(grid, spec, false);
    f.spectrum = std::move(spec);
    return f;
}

GridFunction zero_function(const FrequencyGrid& grid) {
    GridFunction f;
    f.grid = grid;
    f.spatial.assign(grid.size(), cd(0.0, 0.0));
    f.spectrum.assign(grid.size(), cd(0.0, 0.0));
    return f;
}

double lp_norm(const GridFunction& f, double p) {
    double s = 0.0;
    for (const cd& v : f.spatial) s += std::pow(std::abs(v), p);
    return std::pow(s * std::pow(f.grid.dx(), f.grid.dims), 1.0 / p);
}

double l2_norm(const GridFunction& f) {
    double s = 0.0;
    for (const cd& v : f.spatial) s += std::norm(v);
    return std::sqrt(s * std::pow(f.grid.dx(), f.grid.dims));
}

double spectral_l2(const GridFunction& f) {
    double s = 0.0;
    for (const cd& v : f.spectrum) s += std::norm(v);
    return std::sqrt(s * std::pow(f.grid.dw(), f.grid.dims));
}

GridFunction add(const GridFunction& a, const GridFunction& b) {
    if (!a.grid.compatible(b.grid)) throw std::invalid_argument("grid mismatch");
    GridFunction out;
    out.grid = a.grid;
    out.spatial.resize(a.spatial.size());
    out.spectrum.resize(a.spectrum.size());
    for (std::size_t i = 0; i < a.spatial.size(); ++i) {
        out.spatial[i] = a.spatial[i] + b.spatial[i];
        out.spectrum[i] = a.spectrum[i] + b.spectrum[i];
    }
    return out;
}

GridFunction scale(const GridFunction& a, cd factor) {
    GridFunction out;
    out.grid = a.grid;
    out.spatial.resize(a.spatial.size());
    out.spectrum.resize(a.spectrum.size());
    for (std::size_t i = 0; i < a.spatial.size(); ++i) {
        out.spatial[i] = factor * a.spatial[i];
        out.spectrum[i] = factor * a.spectrum[i];
    }
    return out;
}

double spectral_leakage(const ConeDescriptor& cone, const GridFunction& f) {
    if (cone.n != f.grid.dims)
        throw std::invalid_argument("cone/grid dimension mismatch");
    double inside = 0.0, outside = 0.0;
    const std::size_t total = f.grid.size();
    for (std::size_t i = 0; i < total; ++i) {
        double m = std::norm(f.spectrum[i]);
        if (m == 0.0) continue;
        if (contains(cone, f.grid.freq_point(i)))
            inside += m;
        else
            outside += m;
    }
    double sum = inside + outside;
    return sum > 0.0 ? outside / sum : 0.0;
}

} // namespace coneatoms
