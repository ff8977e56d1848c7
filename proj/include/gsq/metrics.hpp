#ifndef GSQ_METRICS_HPP
#define GSQ_METRICS_HPP

#include <string>
#include <vector>

#include "gsq/states.hpp"

namespace gsq {

// Quadrature variances of Q = (A+A^dag)/sqrt(2), P = (A-A^dag)/(sqrt(2) i)
// together with the state-dependent uncertainty bound (1/2)|<[Q,P]>| and
// the same quantities on the vacuum |0>.
struct QuadratureReport {
    double dQ = 0.0;
    double dP = 0.0;
    double bound = 0.0; // (1/2)|<[Q,P]>| on the state
    double dQ0 = 0.0;
    double dP0 = 0.0;
    double bound0 = 0.0;     // k(1)/2
    double product_gap = 0.0; // dQ*dP - bound
};

enum class SqueezedQuadrature { None, Q, P };

std::string to_string(SqueezedQuadrature q);

// Builds the truncated ladder matrices (dimension N+3 so the n+/-2 reach of
// the second moments is absorbed) and evaluates all expectation values by
// applying them to the embedded coefficient vector. Throws
// TruncationTooTight when the top coefficients would contaminate the
// second moments.
QuadratureReport quadrature_report(const StateVector& state);

// Which quadrature variance, if any, lies below the state's own bound.
SqueezedQuadrature classify_squeezing(const QuadratureReport& report);

// <[A, A^dag]> = sum_n |c_n|^2 (k(n+1) - k(n)); independent closed-form
// route for the commutator that the matrix path must reproduce.
double ladder_commutator_expectation(const StateVector& state);

// Mandel statistics of the plain Fock number operator n = a^dag a.
struct MandelReport {
    double mean_n = 0.0;
    double var_n = 0.0;
    double Q = 0.0; // var_n / mean_n - 1
};

// Throws UndefinedMandel when mean_n < 1e-14 (vacuum-dominated corner).
MandelReport mandel_report(const StateVector& state);

// One row of a parameter sweep; failed rows keep the error text.
struct SweepRow {
    Complex alpha{0.0, 0.0};
    Complex xi{0.0, 0.0};
    bool ok = false;
    std::string error;
    QuadratureReport quad;
    SqueezedQuadrature squeezed = SqueezedQuadrature::None;
    double mandel_Q = 0.0; // NaN when undefined for the row
    double mean_n = 0.0;
    int n_used = 0;
};

// One state per real alpha at fixed xi; base supplies truncation settings.
// Construction errors are captured per row rather than propagated.
std::vector<SweepRow> squeezing_sweep(const SpectrumModel& model,
                                      const std::vector<double>& alphas,
                                      Complex xi, const StateParams& base,
                                      int threads = 1);

} // namespace gsq

#endif
