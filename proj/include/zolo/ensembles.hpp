#pragma once

#include <vector>

#include "zolo/rng.hpp"
#include "zolo/structured.hpp"

// Seeded instance builders for the reference ensembles.  Every RNG draw is
// sequenced explicitly: two draws in one argument list would leave the stream
// order to the compiler and break byte-reproducibility of seeded output.

namespace zolo {

struct FigureGeometry {
    double a, b, c, d; // x-interval [a,b], y-interval [c,d]
};

// The three Cauchy/Loewner test geometries (cross-ratios ~1.492, ~8.841, ~251.46).
inline std::vector<FigureGeometry> cauchy_figure_geometries() {
    return {{-8.5, -2.0, 3.0, 10.0}, {-100.0, -3.0, 3.0, 100.0}, {-101.0, 2.8, 3.0, 100.0}};
}

// Pick ensemble: equispaced nodes in [a,b], standard normal data.
inline StructuredMatrixSpec make_pick_instance(double a, double b, int n, Rng& rng) {
    auto x = equispaced_nodes(a, b, n);
    auto s = gaussian_vector(rng, n);
    return StructuredMatrixSpec::pick(std::move(x), std::move(s), a, b);
}

// Cauchy ensemble: Chebyshev nodes in each interval, standard normal data.
inline StructuredMatrixSpec make_cauchy_instance(const FigureGeometry& g, int n, Rng& rng) {
    auto x = chebyshev_nodes(g.a, g.b, n);
    auto y = chebyshev_nodes(g.c, g.d, n);
    auto s = gaussian_vector(rng, n);
    auto t = gaussian_vector(rng, n);
    return StructuredMatrixSpec::cauchy(std::move(x), std::move(y), std::move(s), std::move(t),
                                        g.a, g.b, g.c, g.d);
}

inline StructuredMatrixSpec make_loewner_instance(const FigureGeometry& g, int n, Rng& rng) {
    auto x = chebyshev_nodes(g.a, g.b, n);
    auto y = chebyshev_nodes(g.c, g.d, n);
    auto r = gaussian_vector(rng, n);
    auto s = gaussian_vector(rng, n);
    return StructuredMatrixSpec::loewner(std::move(x), std::move(y), std::move(r), std::move(s),
                                         g.a, g.b, g.c, g.d);
}

// Krylov ensemble: equispaced Hermitian spectrum on [-1,1], standard normal vector.
inline StructuredMatrixSpec make_krylov_instance(int n, Rng& rng) {
    auto x = equispaced_nodes(-1.0, 1.0, n);
    auto w = gaussian_vector(rng, n);
    return StructuredMatrixSpec::krylov(std::move(x), std::move(w), n);
}

// Vandermonde ensemble: sorted uniform random abscissas in [-1,1].
inline StructuredMatrixSpec make_vandermonde_instance(int n, Rng& rng) {
    auto x = uniform_random_sorted(rng, -1.0, 1.0, n);
    return StructuredMatrixSpec::vandermonde(std::move(x), n);
}

} // namespace zolo
