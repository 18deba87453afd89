#ifndef ZBD_SPECTRAL_HPP
#define ZBD_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zbd/graph.hpp"

namespace zbd {

constexpr double kDefaultSpectralTol = 1e-9;

// all eigenvalues of the adjacency matrix, ascending; cyclic Jacobi to
// off-diagonal Frobenius norm < tol/n. Requires n <= 5000.
std::vector<double> adjacency_spectrum(const Graph& g, double tol = kDefaultSpectralTol);

// second largest |eigenvalue|; throws std::domain_error unless g is
// connected and regular
double second_eigenvalue_abs(const Graph& g, double tol = kDefaultSpectralTol);

struct SpectralReport {
    bool regular = false;
    int degree = 0;
    int n = 0;
    long long girth = -1;  // informational only, -1 = acyclic
    double lambda = 0.0;
    double expansion_constant = 0.0;  // (k - lambda) / 2k
    double stable_set_bound = 0.0;    // (lambda / k) * n
    // inequalities evaluated at lambda + tol, so Witnessed is sound
    bool i1 = false;  // k > lambda
    bool i2 = false;  // 1 - lambda/k >= 1/2
    bool i3 = false;  // 4 lambda / (k - lambda) <= 1/2
    bool witnessed = false;
};

// Witnessed means g has no non-empty splitting stable set in either mode.
// Never throws: non-regular or disconnected input is Inconclusive.
SpectralReport expansion_non_zykov(const Graph& g, double tol = kDefaultSpectralTol);

std::string spectral_report_to_json(const SpectralReport& r);

struct MixingReport {
    int samples = 0;
    int passed = 0;
    double min_slack = 0.0;  // min over samples of e(B,C) - (k-lambda-tol)|B||C|/n
};

// audits e(B,C) >= (k - lambda - tol)|B||C|/n on seeded random bipartitions;
// throws std::domain_error unless g is connected regular
MixingReport mixing_check(const Graph& g, int partitions, uint64_t seed,
                          double tol = kDefaultSpectralTol);

}  // namespace zbd

#endif
