// Fundamental solutions of the elliptic equation with singular first-order
// coefficients and wave terms:
//   sum_i u_{x_i x_i} + sum_{j<=n} (2 alpha_j / x_j) u_{x_j}
//     - (sum_k lambda_k^2) u = 0
// on the orthant x_1..x_n > 0 in R^m, with 0 < 2 alpha_j < 1.
#pragma once

#include "hyperfun/confluent.hpp"

namespace hyperfun {

struct SingularConfig {
    int m = 3;                       // space dimension, at least 3
    int n = 1;                       // number of singular coordinates
    std::vector<double> alpha;       // n entries, 0 < 2 alpha_j < 1
    std::vector<double> lambda_sq;   // squared wave numbers, any sign

    int p() const { return static_cast<int>(lambda_sq.size()); }
    double lambda_sq_sum() const {
        double s = 0;
        for (double v : lambda_sq) s += v;
        return s;
    }
    void validate() const;
};

struct PointPair {
    std::vector<double> x;
    std::vector<double> x0;
};

// Derived quantities of a point pair: the squared distance r^2, the squared
// reflected distances r_j^2 = r^2 + 4 x_j x0_j, the series arguments
// xi_j = -4 x_j x0_j / r^2 and eta_k = -lambda_k^2 r^2 / 4, and the exponent
// and normalization ladders over k = 0..n.
struct SolutionGeometry {
    double r_sq = 0.0;
    std::vector<double> rj_sq;
    std::vector<double> xi;
    std::vector<double> eta;
    std::vector<double> alpha_tilde;
    std::vector<double> gamma;
};

// Exponent of the k-th solution,
//   alpha~_k = m/2 + k - 1 - sum_{i<=k} alpha_i + sum_{i>k} alpha_i.
double alpha_tilde_k(const SingularConfig& cfg, int k);

// Normalization constant of the k-th solution,
//   gamma_k = 2^{2 alpha~_k - m} Gamma(alpha~_k) / pi^{m/2}
//             prod_{j<=k} Gamma(1-alpha_j)/Gamma(2-2alpha_j)
//             prod_{i>k}  Gamma(alpha_i)/Gamma(2alpha_i).
double gamma_coefficient(const SingularConfig& cfg, int k);

// Hypergeometric parameter set of the k-th solution: a = alpha~_k,
// b_l = 1-alpha_l and c_l = 2-2alpha_l for l <= k, b_l = alpha_l and
// c_l = 2alpha_l beyond.
HaParams solution_params(const SingularConfig& cfg, int k);

// Requires x and x0 interior (x_j and x0_j above 1e-8 for the singular
// coordinates) and x != x0.
SolutionGeometry geometry(const SingularConfig& cfg, const PointPair& pt);

// The k-th fundamental solution
//   q_k = gamma_k prod_{i<=k} (x_i x0_i)^{1-2 alpha_i} (r^2)^{-alpha~_k}
//         H(alpha~_k; b; c)(xi, eta),
// k in 0..n. Several wave terms enter the series through the sum of the eta
// arguments, which is exact. Away from the singularity (sum |xi| <= 0.7) the
// series is summed directly; deeper in, the evaluation switches to a
// descending expansion in eta whose complete-function factors are continued
// through their transformed lattice expansion. That route is asymptotic for
// n >= 2 with nonzero wave numbers far from the singular point and raises
// ConvergenceError if its terms grow before reaching tolerance.
double fundamental_solution(const SingularConfig& cfg, const PointPair& pt,
                            int k, const Truncation& t);

// Route-pinned variants for cross-checking: the direct series (valid while
// sum |xi_j| < 1) and the descending continuation, regardless of the
// automatic switch. Both agree where their domains overlap.
double fundamental_solution_near(const SingularConfig& cfg, const PointPair& pt,
                                 int k, const Truncation& t);
double fundamental_solution_far(const SingularConfig& cfg, const PointPair& pt,
                                int k, const Truncation& t);

struct ProbeSample {
    double radius = 0.0;
    double scaled = 0.0;
};

// Approach-the-singularity diagnostic: walks x = x0 + r * direction/|d| over
// the given radii and reports
//   q_k (r^2)^{(m-2)/2} prod_l (r_l^2)^{b_l}  /  0F1(1-alpha~_k; L r^2/4),
// L = sum lambda_k^2. For k = 0 this converges to probe_limit as r -> 0; for
// k >= 1 it stays bounded with a direction-dependent limit. Small radii push
// the continuation lattice ratio toward one, so the probe raises the
// truncation tail budget to at least 3e-3, in line with its percent-scale
// readings; production evaluation through fundamental_solution stays strict.
std::vector<ProbeSample> singularity_probe(const SingularConfig& cfg,
                                           const std::vector<double>& x0,
                                           const std::vector<double>& direction,
                                           const std::vector<double>& radii,
                                           int k, const Truncation& t);

// Closed-form limit of the k = 0 probe, 2^{2 alpha~_0 - m} Gamma(m/2-1) / pi^{m/2}.
double probe_limit(const SingularConfig& cfg);

}  // namespace hyperfun
