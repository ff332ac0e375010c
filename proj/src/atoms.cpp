#include "coneatoms/atoms.hpp"

#include "coneatoms/parallel.hpp"
#include "coneatoms/rng.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace coneatoms {

namespace {

// Matrix of the linear action of h on V in packed coordinates.
Mat action_matrix(const ConeDescriptor& cone, const GroupElement& h) {
    Mat M(cone.n, cone.n);
    Vec basis = Vec::Zero(cone.n);
    for (int d = 0; d < cone.n; ++d) {
        basis(d) = 1.0;
        M.col(d) = act(cone, h, basis);
        basis(d) = 0.0;
    }
    return M;
}

// Lebesgue and invariant (Delta^{-n/R} dy) volumes of the ball
// B_radius(e), by rejection sampling from an enclosing box whose
// eigenvalue bound e^radius gives the coordinate ranges.
void ball_volumes(const ConeDescriptor& cone, double radius, std::uint64_t seed,
                  double* lebesgue, double* invariant) {
    if (cone.kind == ConeKind::halfline) {
        if (lebesgue) *lebesgue = 2.0 * std::sinh(radius);
        if (invariant) *invariant = 2.0 * radius;
        return;
    }
    const double hi = std::exp(radius);
    Vec lo_box(cone.n), hi_box(cone.n);
    if (cone.kind == ConeKind::lorentz) {
        lo_box(0) = 0.0;
        hi_box(0) = hi;
        for (int d = 1; d < cone.n; ++d) {
            lo_box(d) = -hi;
            hi_box(d) = hi;
        }
    } else {
        // packed SPD: diagonal entries in (0, e^radius], off-diagonal
        // bounded by sqrt(2) e^radius in packed scale
        int idx = 0;
        for (int i = 0; i < cone.m; ++i)
            for (int jj = i; jj < cone.m; ++jj) {
                if (i == jj) {
                    lo_box(idx) = 0.0;
                    hi_box(idx) = hi;
                } else {
                    lo_box(idx) = -std::sqrt(2.0) * hi;
                    hi_box(idx) = std::sqrt(2.0) * hi;
                }
                ++idx;
            }
    }
    double box_vol = 1.0;
    for (int d = 0; d < cone.n; ++d) box_vol *= hi_box(d) - lo_box(d);

    const int samples = 400000;
    Rng rng(seed);
    const double expo = -static_cast<double>(cone.n) / cone.R;
    double acc_leb = 0.0, acc_inv = 0.0;
    Vec y(cone.n);
    for (int s = 0; s < samples; ++s) {
        for (int d = 0; d < cone.n; ++d) y(d) = rng.uniform(lo_box(d), hi_box(d));
        if (!contains(cone, y)) continue;
        if (distance_from_e(cone, y) >= radius) continue;
        acc_leb += 1.0;
        acc_inv += std::pow(det(cone, y), expo);
    }
    if (lebesgue) *lebesgue = box_vol * acc_leb / samples;
    if (invariant) *invariant = box_vol * acc_inv / samples;
}

std::size_t group_of(const AtomSystem& system, std::size_t i) {
    for (std::size_t g = 0; g < system.groups.size(); ++g) {
        const AtomGroup& grp = system.groups[g];
        if (i >= grp.offset && i < grp.offset + grp.count) return g;
    }
    throw std::out_of_range("atom index out of range");
}

// Analysis half of the frame pairing: for every translate k of the
// group, sum_s g[s] * base[s] * exp(+i step k.u_s). Deterministic
// ordered reduction over support chunks.
void group_analysis(const AtomGroup& grp, int dims, double step,
                    const std::vector<cd>& spec, double dwn,
                    std::vector<cd>& out) {
    out.assign(grp.count, cd(0.0, 0.0));
    const std::size_t S = grp.support.size();
    const int nw = worker_count();
    const std::size_t chunk =
        std::max<std::size_t>(1, (S + nw - 1) / nw);
    std::vector<std::vector<cd>> partial(nw);

    auto work = [&](int t) {
        std::size_t lo = t * chunk, hi = std::min(S, lo + chunk);
        if (lo >= hi) return;
        auto& acc = partial[t];
        acc.assign(grp.count, cd(0.0, 0.0));
        int span[3] = {1, 1, 1};
        for (int d = 0; d < dims; ++d) span[d] = grp.kmax[d] - grp.kmin[d] + 1;
        for (std::size_t s = lo; s < hi; ++s) {
            cd gs = spec[grp.support[s]] * (grp.base[s] * dwn);
            if (gs == cd(0.0, 0.0)) continue;
            const Vec& u = grp.u[s];
            cd rot[3], p0;
            for (int d = 0; d < dims; ++d)
                rot[d] = std::polar(1.0, step * u(d));
            p0 = std::polar(1.0, step * (grp.kmin[0] * u(0) +
                                         (dims > 1 ? grp.kmin[1] * u(1) : 0.0) +
                                         (dims > 2 ? grp.kmin[2] * u(2) : 0.0)));
            std::size_t idx = 0;
            if (dims == 1) {
                cd p = p0;
                for (int k = 0; k < span[0]; ++k) {
                    acc[idx++] += gs * p;
                    p *= rot[0];
                }
            } else if (dims == 2) {
                cd pa = p0;
                for (int k0 = 0; k0 < span[0]; ++k0) {
                    cd pb = pa;
                    for (int k1 = 0; k1 < span[1]; ++k1) {
                        acc[idx++] += gs * pb;
                        pb *= rot[1];
                    }
                    pa *= rot[0];
                }
            } else {
                cd pa = p0;
                for (int k0 = 0; k0 < span[0]; ++k0) {
                    cd pb = pa;
                    for (int k1 = 0; k1 < span[1]; ++k1) {
                        cd pc = pb;
                        for (int k2 = 0; k2 < span[2]; ++k2) {
                            acc[idx++] += gs * pc;
                            pc *= rot[2];
                        }
                        pb *= rot[1];
                    }
                    pa *= rot[0];
                }
            }
        }
    };
    if (nw <= 1 || S * grp.count < 1u << 16) {
        work(0);
        for (std::size_t t = 1; t * chunk < S; ++t) work(static_cast<int>(t));
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nw && static_cast<std::size_t>(t) * chunk < S; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < nw; ++t) {
        if (partial[t].empty()) continue;
        for (std::size_t k = 0; k < grp.count; ++k) out[k] += partial[t][k];
    }
}

// Synthesis half: out[support[s]] += base[s] * sum_k c_k exp(-i step k.u_s);
// parallel over support points (disjoint targets).
void group_synthesis(const AtomGroup& grp, int dims, double step,
                     const std::vector<cd>& coeffs, std::vector<cd>& out) {
    const std::size_t S = grp.support.size();
    int span[3] = {1, 1, 1};
    for (int d = 0; d < dims; ++d) span[d] = grp.kmax[d] - grp.kmin[d] + 1;
    parallel_for(S, [&](std::size_t s) {
        const Vec& u = grp.u[s];
        cd rot[3];
        for (int d = 0; d < dims; ++d) rot[d] = std::polar(1.0, -step * u(d));
        cd p0 = std::polar(
            1.0, -step * (grp.kmin[0] * u(0) +
                          (dims > 1 ? grp.kmin[1] * u(1) : 0.0) +
                          (dims > 2 ? grp.kmin[2] * u(2) : 0.0)));
        cd total(0.0, 0.0);
        std::size_t idx = 0;
        if (dims == 1) {
            cd p = p0;
            for (int k = 0; k < span[0]; ++k) {
                total += coeffs[idx++] * p;
                p *= rot[0];
            }
        } else if (dims == 2) {
            cd pa = p0;
            for (int k0 = 0; k0 < span[0]; ++k0) {
                cd pb = pa;
                for (int k1 = 0; k1 < span[1]; ++k1) {
                    total += coeffs[idx++] * pb;
                    pb *= rot[1];
                }
                pa *= rot[0];
            }
        } else {
            cd pa = p0;
            for (int k0 = 0; k0 < span[0]; ++k0) {
                cd pb = pa;
                for (int k1 = 0; k1 < span[1]; ++k1) {
                    cd pc = pb;
                    for (int k2 = 0; k2 < span[2]; ++k2) {
                        total += coeffs[idx++] * pc;
                        pc *= rot[2];
                    }
                    pb *= rot[1];
                }
                pa *= rot[0];
            }
        }
        out[grp.support[s]] += grp.base[s] * total;
    });
}

double spec_norm(const std::vector<cd>& v) {
    double s = 0.0;
    for (const cd& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<std::uint32_t> union_support(const AtomSystem& system) {
    std::vector<std::uint32_t> u;
    for (const auto& g : system.groups)
        u.insert(u.end(), g.support.begin(), g.support.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

} // namespace

double MotherWavelet::spectrum_at(const ConeDescriptor& cone, const Vec& u) const {
    if (!contains(cone, u)) return 0.0;
    double d = distance_from_e(cone, u);
    if (d >= radius) return 0.0;
    return bump(d / radius);
}

GridFunction mother_grid_function(const ConeDescriptor& cone,
                                  const MotherWavelet& mother,
                                  const FrequencyGrid& grid) {
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < spec.size(); ++i)
        spec[i] = mother.spectrum_at(cone, grid.freq_point(i));
    return from_spectrum(grid, std::move(spec));
}

double invariant_ball_volume(const ConeDescriptor& cone, double radius,
                             std::uint64_t seed) {
    double inv = 0.0;
    ball_volumes(cone, radius, seed, nullptr, &inv);
    return inv;
}

AtomSystem build_atom_system(const ConeDescriptor& cone,
                             const ConeLattice& lattice, double spatial_step,
                             const MotherWavelet& mother,
                             const FrequencyGrid& grid, std::uint64_t seed) {
    if (cone.n != grid.dims)
        throw std::invalid_argument("cone/grid dimension mismatch");
    if (spatial_step <= 0.0) throw std::invalid_argument("spatial_step <= 0");
    if (lattice.points.empty()) throw std::invalid_argument("empty lattice");

    AtomSystem system;
    system.cone = cone;
    system.grid = grid;
    system.mother = mother;
    system.delta = lattice.delta;
    system.lambda = lattice.lambda;
    system.spatial_step = spatial_step;

    double leb_e = 0.0, inv_vol = 0.0;
    ball_volumes(cone, lattice.lambda * lattice.delta, seed ^ 0x9e3779b97f4a7c15ull,
                 &leb_e, &inv_vol);
    system.inv_ball_volume = inv_vol;

    const double stepn = std::pow(spatial_step, cone.n);
    const double X = 0.5 * grid.N * grid.dx();
    const std::size_t total_cells = grid.size();

    // mother discrete spectral norm squared (dw^n factor cancels in the
    // normalization ratio, so plain sums suffice)
    double mother_mass = 0.0;
    for (std::size_t i = 0; i < total_cells; ++i) {
        double v = mother.spectrum_at(cone, grid.freq_point(i));
        mother_mass += v * v;
    }
    if (mother_mass <= 0.0)
        throw std::invalid_argument("mother wavelet not resolved on the grid");

    const double detlo = std::exp(-cone.R * mother.radius);
    const double dethi = std::exp(cone.R * mother.radius);

    std::size_t offset = 0;
    for (const Vec& y : lattice.points) {
        AtomGroup grp;
        grp.y = y;
        grp.h = factorize(cone, y);
        const double cdet = det(cone, y);

        // band support: grid points w with psihat(h^T w) > 0
        std::vector<std::uint32_t> sup;
        std::vector<double> vals;
        std::vector<Vec> us;
        {
            const int nw = worker_count();
            const std::size_t chunk = (total_cells + nw - 1) / nw;
            std::vector<std::vector<std::uint32_t>> psup(nw);
            std::vector<std::vector<double>> pval(nw);
            std::vector<std::vector<Vec>> pu(nw);
            std::vector<std::thread> pool;
            for (int t = 0; t < nw; ++t) {
                std::size_t lo = t * chunk, hi = std::min(total_cells, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, t, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i) {
                        Vec w = grid.freq_point(i);
                        if (!contains(cone, w)) continue;
                        // det(h^T w) = Delta(y) Delta(w)
                        double ratio = det(cone, w) * cdet;
                        if (ratio < detlo || ratio > dethi) continue;
                        Vec u = act_transpose(cone, grp.h, w);
                        double v = mother.spectrum_at(cone, u);
                        if (v <= 0.0) continue;
                        psup[t].push_back(static_cast<std::uint32_t>(i));
                        pval[t].push_back(v);
                        pu[t].push_back(std::move(u));
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < nw; ++t) {
                sup.insert(sup.end(), psup[t].begin(), psup[t].end());
                vals.insert(vals.end(), pval[t].begin(), pval[t].end());
                for (auto& u : pu[t]) us.push_back(std::move(u));
            }
        }
        if (sup.empty())
            throw std::invalid_argument("atom band not resolved on the grid");

        // the band must sit inside the frequency box
        int idx[3];
        for (std::uint32_t flat : sup) {
            grid.decode(flat, idx);
            for (int d = 0; d < grid.dims; ++d)
                if (idx[d] == 0 || idx[d] == grid.N - 1)
                    throw std::invalid_argument("atom band touches the grid edge");
        }

        // exact discrete normalization: |atom|_2 = |psi|_2
        double band_mass = 0.0;
        for (double v : vals) band_mass += v * v;
        grp.absdet_sqrt = std::sqrt(mother_mass / band_mass);
        grp.support = std::move(sup);
        grp.u = std::move(us);
        grp.base.resize(vals.size());
        for (std::size_t s = 0; s < vals.size(); ++s)
            grp.base[s] = grp.absdet_sqrt * vals[s];

        Mat Hinv = action_matrix(cone, grp.h).inverse();
        std::size_t count = 1;
        for (int d = 0; d < cone.n; ++d) {
            double reach = Hinv.row(d).cwiseAbs().sum() * X;
            int K = static_cast<int>(std::ceil(reach / spatial_step));
            grp.kmin[d] = -K;
            grp.kmax[d] = K;
            count *= static_cast<std::size_t>(2 * K + 1);
        }
        grp.count = count;
        grp.offset = offset;
        offset += count;
        if (offset > 5000000)
            throw std::invalid_argument("atom system too large");

        grp.box_vol = grp.h.abs_det * stepn;
        grp.ball_vol = std::pow(cdet, static_cast<double>(cone.n) / cone.R) * leb_e;
        grp.weight = inv_vol * stepn;
        system.groups.push_back(std::move(grp));
    }
    system.total = offset;

    // Monte Carlo cell audit: within a group the spatial boxes tile V, so
    // multiplicity at (y, x) is the count of covering cone balls at y.
    {
        Rng rng(seed + 1);
        const double rad = lattice.lambda * lattice.delta;
        int probes = 2000, covered = 0, max_mult = 0;
        for (int p = 0; p < probes; ++p) {
            Vec y = sample_region_point(cone, lattice.region, rad, rng);
            int mult = 0;
            for (const auto& g : system.groups)
                if (distance(cone, g.y, y) < rad) ++mult;
            if (mult > 0) ++covered;
            max_mult = std::max(max_mult, mult);
        }
        system.coverage = static_cast<double>(covered) / probes;
        system.overlap_observed = max_mult;
    }
    return system;
}

std::pair<std::size_t, std::array<int, 3>> atom_location(const AtomSystem& system,
                                                         std::size_t i) {
    std::size_t g = group_of(system, i);
    const AtomGroup& grp = system.groups[g];
    std::size_t rem = i - grp.offset;
    std::array<int, 3> k{0, 0, 0};
    for (int d = system.cone.n - 1; d >= 0; --d) {
        int span = grp.kmax[d] - grp.kmin[d] + 1;
        k[d] = grp.kmin[d] + static_cast<int>(rem % span);
        rem /= span;
    }
    return {g, k};
}

Vec atom_position(const AtomSystem& system, std::size_t i) {
    auto [g, k] = atom_location(system, i);
    const AtomGroup& grp = system.groups[g];
    Vec t(system.cone.n);
    for (int d = 0; d < system.cone.n; ++d) t(d) = system.spatial_step * k[d];
    return act(system.cone, grp.h, t);
}

GridFunction atom_eval(const AtomSystem& system, std::size_t i) {
    auto [g, k] = atom_location(system, i);
    const AtomGroup& grp = system.groups[g];
    std::vector<cd> spec(system.grid.size(), cd(0.0, 0.0));
    for (std::size_t s = 0; s < grp.support.size(); ++s) {
        double phase = 0.0;
        for (int d = 0; d < system.cone.n; ++d)
            phase += system.spatial_step * k[d] * grp.u[s](d);
        spec[grp.support[s]] = grp.base[s] * std::polar(1.0, -phase);
    }
    return from_spectrum(system.grid, std::move(spec));
}

std::vector<cd> frame_apply(const AtomSystem& system, const std::vector<cd>& spec) {
    if (spec.size() != system.grid.size())
        throw std::invalid_argument("spectrum size mismatch");
    const double dwn = std::pow(system.grid.dw(), system.cone.n);
    std::vector<cd> out(spec.size(), cd(0.0, 0.0));
    std::vector<cd> coeffs;
    for (const auto& grp : system.groups) {
        group_analysis(grp, system.cone.n, system.spatial_step, spec, dwn, coeffs);
        for (cd& c : coeffs) c *= grp.weight;
        group_synthesis(grp, system.cone.n, system.spatial_step, coeffs, out);
    }
    return out;
}

GridFunction synthesize(const std::vector<cd>& coeffs, const AtomSystem& system,
                        const FrequencyGrid& grid) {
    if (!grid.compatible(system.grid))
        throw std::invalid_argument("grid mismatch");
    if (coeffs.size() != system.total)
        throw std::invalid_argument("coefficient count mismatch");
    std::vector<cd> out(grid.size(), cd(0.0, 0.0));
    std::vector<cd> local;
    for (const auto& grp : system.groups) {
        local.assign(coeffs.begin() + grp.offset,
                     coeffs.begin() + grp.offset + grp.count);
        group_synthesis(grp, system.cone.n, system.spatial_step, local, out);
    }
    return from_spectrum(grid, std::move(out));
}

CoeffSequence analyze(const GridFunction& f, const AtomSystem& system,
                      double tol, int max_iter, std::uint64_t seed) {
    if (!f.grid.compatible(system.grid))
        throw std::invalid_argument("grid mismatch");
    CoeffSequence result;
    const double fnorm = spec_norm(f.spectrum);
    if (fnorm == 0.0) {
        result.values.assign(system.total, cd(0.0, 0.0));
        return result;
    }

    const auto usup = union_support(system);
    if (usup.empty()) throw std::invalid_argument("empty atom system");

    // frame bounds by power iteration on S (restricted to the band union)
    Rng rng(seed);
    std::vector<cd> v(f.spectrum.size(), cd(0.0, 0.0));
    for (std::uint32_t idx : usup) v[idx] = cd(rng.normal(), rng.normal());
    double B = 0.0;
    for (int it = 0; it < 25; ++it) {
        std::vector<cd> w = frame_apply(system, v);
        B = spec_norm(w) / spec_norm(v);
        double inv = 1.0 / spec_norm(w);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] * inv;
    }
    const double shift = 1.02 * B;
    for (std::uint32_t idx : usup) v[idx] = cd(rng.normal(), rng.normal());
    double mu = 0.0;
    for (int it = 0; it < 25; ++it) {
        std::vector<cd> w = frame_apply(system, v);
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = shift * v[i] - w[i];
        mu = spec_norm(w) / spec_norm(v);
        double inv = 1.0 / spec_norm(w);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] * inv;
    }
    double A = shift - mu;
    if (A <= 0.0) A = 1e-6 * B;
    result.frame_lower = A;
    result.frame_upper = B;

    // conjugate gradient on S restricted to the band union. S is positive
    // definite there but its edge modes carry tiny eigenvalues; since S is
    // near-diagonal in frequency those modes barely overlap interior data,
    // so plain (unpreconditioned) CG converges on the components that
    // matter. Mass outside the union is unreachable and shows up honestly
    // in the reported residual.
    std::vector<cd> g(f.spectrum.size(), cd(0.0, 0.0));
    std::vector<cd> r(f.spectrum.size(), cd(0.0, 0.0));
    for (std::uint32_t idx : usup) r[idx] = f.spectrum[idx];
    std::vector<cd> p = r;
    double rs = 0.0;
    for (std::uint32_t idx : usup) rs += std::norm(r[idx]);
    double res = rs == 0.0 ? 0.0 : std::sqrt(rs) / fnorm;
    int iters = 0;
    for (int it = 1; it <= max_iter && res > tol; ++it) {
        std::vector<cd> Sp = frame_apply(system, p);
        double pSp = 0.0;
        for (std::uint32_t idx : usup)
            pSp += (std::conj(p[idx]) * Sp[idx]).real();
        if (pSp <= 0.0) break;
        const double alpha = rs / pSp;
        double rs_next = 0.0;
        for (std::uint32_t idx : usup) {
            g[idx] += alpha * p[idx];
            r[idx] -= alpha * Sp[idx];
            rs_next += std::norm(r[idx]);
        }
        const double beta = rs_next / rs;
        rs = rs_next;
        for (std::uint32_t idx : usup) p[idx] = r[idx] + beta * p[idx];
        res = std::sqrt(rs) / fnorm;
        iters = it;
    }
    // honest residual of the reconstruction against the full input
    {
        std::vector<cd> Sg = frame_apply(system, g);
        double rn = 0.0;
        for (std::size_t i = 0; i < Sg.size(); ++i)
            rn += std::norm(f.spectrum[i] - Sg[i]);
        res = std::sqrt(rn) / fnorm;
    }
    result.residual = res;
    result.iterations = iters;

    const double dwn = std::pow(system.grid.dw(), system.cone.n);
    result.values.assign(system.total, cd(0.0, 0.0));
    std::vector<cd> coeffs;
    for (const auto& grp : system.groups) {
        group_analysis(grp, system.cone.n, system.spatial_step, g, dwn, coeffs);
        for (std::size_t k = 0; k < grp.count; ++k)
            result.values[grp.offset + k] = grp.weight * coeffs[k];
    }
    return result;
}

TubeFunction bergman_atom_eval(const AtomSystem& system, std::size_t i,
                               const Partition& partition, const TubeGrid& tgrid) {
    return extend_full(system.cone, atom_eval(system, i), partition, tgrid);
}

CoeffSequence bergman_analyze(const TubeFunction& F, const AtomSystem& system,
                              double tol, int max_iter, double amplification_cap,
                              std::uint64_t seed) {
    GridFunction f = restrict_height(system.cone, F, F.tgrid.min_height,
                                     amplification_cap);
    return analyze(f, system, tol, max_iter, seed);
}

TubeFunction bergman_synthesize(const std::vector<cd>& coeffs,
                                const AtomSystem& system,
                                const Partition& partition,
                                const TubeGrid& tgrid) {
    GridFunction g = synthesize(coeffs, system, system.grid);
    return extend_full(system.cone, g, partition, tgrid);
}

void write_coeffs_csv(std::ostream& os, const AtomSystem& system,
                      const std::vector<cd>& coeffs) {
    const int n = system.cone.n;
    os << "i";
    for (int d = 0; d < n; ++d) os << ",y" << d;
    for (int d = 0; d < n; ++d) os << ",x" << d;
    os << ",re,im\n";
    char buf[64];
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto [g, k] = atom_location(system, i);
        (void)k;
        Vec x = atom_position(system, i);
        os << i;
        for (int d = 0; d < n; ++d) {
            std::snprintf(buf, sizeof buf, ",%.17g", system.groups[g].y(d));
            os << buf;
        }
        for (int d = 0; d < n; ++d) {
            std::snprintf(buf, sizeof buf, ",%.17g", x(d));
            os << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", coeffs[i].real(),
                      coeffs[i].imag());
        os << buf << "\n";
    }
}

} // namespace coneatoms
