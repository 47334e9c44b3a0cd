#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nbperc/digraph.hpp"
#include "nbperc/hashimoto.hpp"
#include "nbperc/sparse_pattern.hpp"

namespace nbperc {

enum class RadiusMethod { power_shifted, nilpotent_detected, gelfand_fallback };

std::string_view to_string(RadiusMethod method);

struct SpectralOptions {
    /// Convergence target on the Collatz-Wielandt bracket of rho + 1.
    double tol = 1e-10;
    /// 0 selects 10 * dim + 1000.
    std::size_t max_iter = 0;
    /// Widest bracket accepted when max_iter runs out before tol is met.
    double fallback_tol = 1e-6;
};

/// Spectral radius with a certified bracket: lower <= rho(M) <= upper.
struct RadiusEstimate {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    RadiusMethod method = RadiusMethod::nilpotent_detected;
    std::size_t iterations = 0;
    /// upper - lower.
    double residual = 0.0;
};

/// Spectral radius of a 0/1 matrix.
///
/// The matrix is split into its irreducible diagonal blocks (strongly
/// connected components of the pattern).  If every block is a singleton the
/// matrix is nilpotent and rho = 0 exactly.  Otherwise each nontrivial block
/// is run through power iteration on M + I from the all-ones vector; the
/// shift makes the iteration converge on periodic blocks.  Min and max of
/// (Bx)_i / x_i bracket rho(B) for positive x on an irreducible block, so the
/// result is certified at every step.  When max_iter runs out the growth rate
/// ||B^k 1||^(1/k) is reported, clamped into the bracket, and accepted if the
/// bracket is narrower than fallback_tol; otherwise NonConvergenceError.
RadiusEstimate spectral_radius(const SparsePattern& op, const SpectralOptions& options = {});

RadiusEstimate adjacency_spectral_radius(const DiGraph& g, const SpectralOptions& options = {});

struct InducedNorms {
    /// max_u |successors(u)| = max row sum of H = ||H^T||_1.  Controls out-walks.
    std::size_t row = 0;
    /// max_v |predecessors(v)| = max column sum of H = ||H||_1.  Controls in-walks.
    std::size_t col = 0;
};

InducedNorms induced_norms(const HashimotoOperator& h);

struct PerronVector {
    /// Left Perron-Frobenius vector (xi H = rho xi), unit 1-norm, entries > 0.
    std::vector<double> xi;
    double rho = 0.0;
    /// max_i xi_i / min_j xi_j.
    double gamma = 1.0;
    /// ||xi H - rho xi||_1 / ||xi||_1.
    double residual = 0.0;
    std::size_t iterations = 0;
};

/// Requires a strongly connected oriented line graph; throws
/// NotStronglyConnectedError naming an arc outside the component of arc 0
/// (or the first arc with no successor) otherwise.
PerronVector left_perron_vector(const HashimotoOperator& h, const SpectralOptions& options = {});

struct SpectralReport {
    double rho_H = 0.0;
    double rho_A = 0.0;
    RadiusEstimate hashimoto;
    RadiusEstimate adjacency;
    std::size_t norm_row = 0;
    std::size_t norm_col = 0;
    std::optional<std::vector<double>> left_pf;
    std::optional<double> gamma_L;
    bool olg_strongly_connected = false;
    std::size_t iterations = 0;
    double residual = 0.0;
    RadiusMethod method = RadiusMethod::nilpotent_detected;
};

/// rho(H), rho(A), both norms, and the Perron data when the OLG is strongly
/// connected.
SpectralReport analyze_spectrum(const HashimotoOperator& h, const SpectralOptions& options = {});

}  // namespace nbperc
