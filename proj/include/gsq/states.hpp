#ifndef GSQ_STATES_HPP
#define GSQ_STATES_HPP

#include <complex>
#include <string>
#include <vector>

#include "gsq/spectrum.hpp"

namespace gsq {

using Complex = std::complex<double>;

// Parameters of a generalized squeezed state |alpha, xi>, the solution of
// (A + xi A^dag)|alpha,xi> = alpha |alpha,xi> with |xi| < 1.
struct StateParams {
    Complex alpha{0.0, 0.0};
    Complex xi{0.0, 0.0};
    int n_max = 512;               // hard truncation cap
    double tail_tolerance = 1e-12; // relative tail-window mass to stop at
};

// Truncated, normalized Fock expansion of |alpha, xi>.
struct StateVector {
    std::vector<Complex> coeffs; // c_0 .. c_N, sum |c_n|^2 = 1
    StateParams params;
    SpectrumModel model;
    double norm_constant = 1.0; // N(alpha,xi); c_n = ctilde_n / N, ctilde_0 = 1
    double tail_mass = 0.0;     // relative mass of the trailing window at cutoff

    int top_index() const { return static_cast<int>(coeffs.size()) - 1; }
    double mean_photon_number() const; // sum n |c_n|^2
};

// xi = (delta/|delta|) tanh(|delta|); 0 for delta = 0. Always |xi| < 1.
Complex xi_from_delta(Complex delta);

// J(alpha, xi, 0..n_max) by the three-term recurrence
//   J(n+1) = alpha J(n) - xi k(n) J(n-1),  J(0) = 1, J(1) = alpha.
// Throws RecurrenceOverflow if the unscaled values leave the floating
// range; use scaled_coefficients for large n instead.
std::vector<Complex> recurrence_J(const SpectrumModel& model, Complex alpha,
                                  Complex xi, int n_max);

// Closed-form coefficient g(n,m): the m-fold nested sum of products
// k(j_1)...k(j_m) over 1 <= j_1, j_{i+1} >= j_i + 2, j_i <= n-2m+2i-1,
// with g(n,0) = 1. Verification oracle, exponential in m; n is capped.
double closed_form_g(const SpectrumModel& model, int n, int m);

// Closed-form J(alpha,xi,n) = sum_{m=0}^{floor(n/2)} (-xi)^m alpha^(n-2m) g(n,m).
Complex closed_form_J(const SpectrumModel& model, Complex alpha, Complex xi,
                      int n);

// Constructs the normalized state by recurring directly on the scaled
// coefficients ctilde_n = J(n)/sqrt(k(n)!):
//   ctilde_{n+1} = (alpha ctilde_n - xi sqrt(k(n)) ctilde_{n-1}) / sqrt(k(n+1)).
// The truncation N grows until the relative mass of the last few terms
// drops below params.tail_tolerance; throws NonConvergent if that never
// happens before n_max, InvalidXi if |xi| >= 1.
StateVector scaled_coefficients(const SpectrumModel& model,
                                const StateParams& params);

// Harmonic-oscillator oracle: unnormalized coefficients
//   (xi/2)^(n/2) H_n(alpha / sqrt(2 xi)) / sqrt(n!)
// with the complex Hermite recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
// Requires xi != 0 (coherent branch is alpha^n / sqrt(n!)).
std::vector<Complex> ho_hermite_coefficients(Complex alpha, Complex xi,
                                             int n_max);

// Residual ||(A + xi A^dag)|psi> - alpha|psi>|| of the truncated state,
// dominated by the last retained coefficients.
double eigen_relation_residual(const StateVector& state);

struct IdentityReport {
    struct Line {
        std::string name;
        double max_rel_dev = 0.0;
        long checks = 0;
    };
    std::vector<Line> lines;

    double max_deviation() const;
    bool all_within(double tol) const;
};

// Verifies the g(n,m) recurrence identities
//   id1: g(2n+1,1)   = g(2n,1) + k(2n)
//   id2: g(2n+1,m+1) = g(2n,m+1) + k(2n) g(2n-1,m)
//   id3: g(2n+2,n+1) = k(2n+1) g(2n,n)
//   id4: g(2n+2,1)   = g(2n+1,1) + k(2n+1)
//   id5: g(2n+2,m+1) = g(2n+1,m+1) + k(2n+1) g(2n,m)
// for all applicable n <= n_max, returning per-identity worst deviations.
IdentityReport appendix_identity_check(const SpectrumModel& model, int n_max);

} // namespace gsq

#endif
