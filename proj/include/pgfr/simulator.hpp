#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "pgfr/graphs.hpp"

namespace pgfr {

/// Walk amplitudes restricted to a vertex pair at one time.
struct PairProfile {
    double t = 0.0;
    std::complex<double> alpha;  ///< amplitude at a
    std::complex<double> beta;   ///< amplitude at b
    double leakage = 0.0;        ///< 1 - |alpha|^2 - |beta|^2
    /// -conj(alpha) * beta / conj(beta); absent when beta is (numerically) zero.
    std::optional<std::complex<double>> gamma;
};

struct SearchConfig {
    double t_max = 1.0e4;
    std::int64_t grid_points = 1'000'000;
    int refine_top = 32;
    int refine_iters = 60;
    double beta_floor = 1.0e-3;
};

/// Full amplitude vector of H(t) e_a via the closed-form character sum
/// (entry c is (1/n) sum_r exp(-i t lambda_r) chi_r(c - a)).
/// OpenMP-parallel over target vertices; amplitudes_serial is the plain-loop
/// reference and computes bit-identical values.
std::vector<std::complex<double>> amplitudes(const CayleyGraph& g, std::int64_t a, double t);
std::vector<std::complex<double>> amplitudes_serial(const CayleyGraph& g, std::int64_t a, double t);

/// alpha/beta/leakage for the pair (a, b) at time t; O(n).
PairProfile pair_profile(const CayleyGraph& g, std::int64_t a, std::int64_t b, double t);

/// Scans t over a uniform grid on (0, t_max], keeps the best candidates by
/// leakage among those with |beta| >= beta_floor, refines each by bracketed
/// golden-section minimization, discards refined candidates below the floor
/// and returns the rest sorted by (leakage, t). Deterministic for a fixed
/// config. The grid pass is OpenMP-parallel over disjoint time chunks;
/// search_times_serial is the single-thread reference.
std::vector<PairProfile> search_times(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                                      const SearchConfig& cfg = {});
std::vector<PairProfile> search_times_serial(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                                             const SearchConfig& cfg = {});

/// H(t) e_a by scaling-and-squaring a truncated series on the dense adjacency
/// matrix. Independent of the character-sum path; n <= 512.
std::vector<std::complex<double>> matrix_exponential_oracle(const CayleyGraph& g, std::int64_t a,
                                                            double t);

struct PgstQuality {
    double quality = 0.0;  ///< max found |beta|^2, in [0, 1]
    double t = 0.0;        ///< time achieving it
};

/// Numerical transfer-quality metric: max |beta|^2 over the searched times.
/// Evidence only, never a decision.
PgstQuality pgst_quality(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                         const SearchConfig& cfg = {});

/// Time-scan CSV: header t,alpha_re,alpha_im,beta_re,beta_im,leakage and one
/// row per profile, in the given order. Floats use 17 significant digits.
void write_scan_csv(std::ostream& os, const std::vector<PairProfile>& profiles);

}  // namespace pgfr
