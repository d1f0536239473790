#include "numrad/ensembles.hpp"

#include <cmath>
#include <stdexcept>

#include "numrad/linalg.hpp"

namespace numrad {

namespace {

ComplexMatrix ginibre(Rng& rng, std::size_t n) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

// Unitary factor of a ginibre sample by modified Gram-Schmidt.  A column that
// collapses (probability zero at these dimensions) falls back to a standard
// basis vector before re-orthogonalizing.
ComplexMatrix haar_like_unitary(Rng& rng, std::size_t n) {
    ComplexMatrix g = ginibre(rng, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t prev = 0; prev < k; ++prev) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, prev)) * g(i, k);
            for (std::size_t i = 0; i < n; ++i) g(i, k) -= dot * g(i, prev);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, k));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {
            for (std::size_t i = 0; i < n; ++i) g(i, k) = i == k ? 1.0 : 0.0;
            for (std::size_t prev = 0; prev < k; ++prev) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, prev)) * g(i, k);
                for (std::size_t i = 0; i < n; ++i) g(i, k) -= dot * g(i, prev);
            }
            nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, k));
            nrm = std::sqrt(nrm);
        }
        for (std::size_t i = 0; i < n; ++i) g(i, k) /= nrm;
    }
    return g;
}

} // namespace

std::optional<Ensemble> parse_ensemble(const std::string& name) {
    if (name == "ginibre") return Ensemble::ginibre;
    if (name == "hermitian") return Ensemble::hermitian;
    if (name == "normal") return Ensemble::normal;
    if (name == "nilpotent") return Ensemble::nilpotent;
    if (name == "contraction") return Ensemble::contraction;
    if (name == "psd") return Ensemble::psd;
    return std::nullopt;
}

const char* ensemble_name(Ensemble e) {
    switch (e) {
    case Ensemble::ginibre: return "ginibre";
    case Ensemble::hermitian: return "hermitian";
    case Ensemble::normal: return "normal";
    case Ensemble::nilpotent: return "nilpotent";
    case Ensemble::contraction: return "contraction";
    case Ensemble::psd: return "psd";
    }
    return "ginibre";
}

ComplexMatrix random_matrix(Rng& rng, std::size_t dim, Ensemble ensemble) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    switch (ensemble) {
    case Ensemble::ginibre: return ginibre(rng, dim);
    case Ensemble::hermitian: {
        const ComplexMatrix g = ginibre(rng, dim);
        return cplx(0.5, 0.0) * (g + g.adjoint());
    }
    case Ensemble::normal: {
        const ComplexMatrix v = haar_like_unitary(rng, dim);
        ComplexMatrix d(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) d(i, i) = rng.complex_gaussian();
        return v * d * v.adjoint();
    }
    case Ensemble::nilpotent: {
        ComplexMatrix g(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) g(i, j) = rng.complex_gaussian();
        return g;
    }
    case Ensemble::contraction: {
        ComplexMatrix g = ginibre(rng, dim);
        const double nrm = operator_norm(g);
        if (nrm > 0.0) g = cplx(1.0 / nrm, 0.0) * g;
        return g;
    }
    case Ensemble::psd: {
        const ComplexMatrix g = ginibre(rng, dim);
        return g.adjoint() * g;
    }
    }
    throw std::invalid_argument("unknown ensemble");
}

cvec random_unit_vector(Rng& rng, std::size_t dim) {
    cvec v(dim);
    double nrm2 = 0.0;
    do {
        nrm2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = rng.complex_gaussian();
            nrm2 += std::norm(v[i]);
        }
    } while (nrm2 < 1e-24);
    const double inv = 1.0 / std::sqrt(nrm2);
    for (cplx& c : v) c *= inv;
    return v;
}

} // namespace numrad
