#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace numrad {

namespace {

constexpr std::size_t kGridPoints = 1024;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> spectrum_at(const ComplexMatrix& t, double theta) {
    return hermitian_eigenvalues(rotated_real_part(t, theta));
}

// Golden-section maximization of f over [a, b] down to bracket width tol.
// Returns the best (theta, value) among all evaluated points, which can only
// undershoot the true maximum of the bracket by about slope * tol.
template <typename F>
std::pair<double, double> golden_refine(F&& f, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    double best_t = fc >= fd ? c : d;
    double best_v = std::max(fc, fd);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
            if (fc > best_v) { best_v = fc; best_t = c; }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
            if (fd > best_v) { best_v = fd; best_t = d; }
        }
    }
    return {best_t, best_v};
}

double wrap_angle(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    // fmod can land exactly on 2*pi after the correction
    if (theta >= kTwoPi) theta = 0.0;
    return theta;
}

// Indices of grid-local maxima (circular neighbourhood), best five first.
std::vector<std::size_t> top_local_maxima(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = v[(i + n - 1) % n], right = v[(i + 1) % n];
        if (v[i] >= left && v[i] >= right) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
    if (peaks.size() > 5) peaks.resize(5);
    return peaks;
}

// Shared driver: maximize a spectral functional of the rotated real part.
// Candidates within tol of the best value resolve to the smallest angle.
template <typename F>
std::pair<double, double> maximize_over_rotations(const std::vector<double>& grid_values, F&& f,
                                                  double tol) {
    const std::size_t n = grid_values.size();
    const double step = kTwoPi / static_cast<double>(n);
    std::vector<std::pair<double, double>> candidates;  // (theta, value)
    for (std::size_t i : top_local_maxima(grid_values)) {
        const double center = step * static_cast<double>(i);
        auto [theta, value] = golden_refine(f, center - step, center + step, tol);
        if (grid_values[i] > value) {
            theta = center;
            value = grid_values[i];
        }
        candidates.emplace_back(wrap_angle(theta), value);
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) best = std::max(best, c.second);
    // ties resolve to the smallest angle, and raw grid points compete too:
    // when the profile is flat (e.g. T unitarily equivalent to e^{i theta}T
    // for all theta) this lands exactly on theta = 0
    const double tie = std::max(tol, 1e-12);
    for (std::size_t k = 0; k < n; ++k)
        candidates.emplace_back(step * static_cast<double>(k), grid_values[k]);
    double theta_star = 0.0, value = best;
    double best_angle = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
        if (c.second >= best - tie && c.first < best_angle) {
            best_angle = c.first;
            theta_star = c.first;
            value = c.second;
        }
    }
    return {theta_star, value};
}

void check_tol(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
}

} // namespace

ComplexMatrix rotated_real_part(const ComplexMatrix& t, double theta) {
    if (!t.is_square()) throw std::invalid_argument("square matrix required");
    const cplx phase = std::polar(1.0, theta);
    const std::size_t n = t.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = (phase * t(i, i)).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (phase * t(i, j) + std::conj(phase * t(j, i)));
            h(i, j) = m;
            h(j, i) = std::conj(m);
        }
    }
    return h;
}

std::vector<std::vector<double>> rotated_spectrum_grid_serial(const ComplexMatrix& t,
                                                              std::size_t points) {
    std::vector<std::vector<double>> out(points);
    for (std::size_t k = 0; k < points; ++k)
        out[k] = spectrum_at(t, kTwoPi * static_cast<double>(k) / static_cast<double>(points));
    return out;
}

std::vector<std::vector<double>> rotated_spectrum_grid(const ComplexMatrix& t, std::size_t points) {
    std::vector<std::vector<double>> out(points);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t k = 0; k < points; ++k)
        out[k] = spectrum_at(t, kTwoPi * static_cast<double>(k) / static_cast<double>(points));
    return out;
}

RadiusResult numerical_radius(const ComplexMatrix& t, double tol) {
    check_tol(tol);
    const auto spectra = rotated_spectrum_grid(t, kGridPoints);
    std::vector<double> grid(kGridPoints);
    for (std::size_t k = 0; k < kGridPoints; ++k) grid[k] = spectra[k].back();

    auto lambda_max = [&](double theta) { return spectrum_at(t, theta).back(); };
    const double theta_star = maximize_over_rotations(grid, lambda_max, tol).first;

    RadiusResult out;
    out.theta_star = theta_star;
    HermitianEigen eig = hermitian_eig(rotated_real_part(t, theta_star));
    out.value = eig.eigenvalues.back();
    // within a numerically degenerate top group, take the smallest column index
    const std::size_t n = eig.eigenvalues.size();
    std::size_t pick = n - 1;
    while (pick > 0 && eig.eigenvalues.back() - eig.eigenvalues[pick - 1] < 1e-9) --pick;
    out.maximizer.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.maximizer[i] = eig.eigenvectors(i, pick);
    return out;
}

std::vector<double> p_numerical_radius_multi(const ComplexMatrix& t, const std::vector<double>& ps,
                                             double tol) {
    check_tol(tol);
    for (double p : ps)
        if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");
    const auto spectra = rotated_spectrum_grid(t, kGridPoints);

    auto norm_of = [](const std::vector<double>& lam, double p) {
        std::vector<double> sv(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) sv[i] = std::abs(lam[i]);
        return schatten_from_singulars(sv, p);
    };

    std::vector<double> out;
    out.reserve(ps.size());
    for (double p : ps) {
        std::vector<double> grid(kGridPoints);
        for (std::size_t k = 0; k < kGridPoints; ++k) grid[k] = norm_of(spectra[k], p);
        auto f = [&](double theta) { return norm_of(spectrum_at(t, theta), p); };
        out.push_back(maximize_over_rotations(grid, f, tol).second);
    }
    return out;
}

double p_numerical_radius(const ComplexMatrix& t, double p, double tol) {
    return p_numerical_radius_multi(t, {p}, tol).front();
}

} // namespace numrad
