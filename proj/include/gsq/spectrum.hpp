#ifndef GSQ_SPECTRUM_HPP
#define GSQ_SPECTRUM_HPP

#include <string>
#include <vector>

namespace gsq {

enum class SpectrumKind { HarmonicOscillator, RosenMorse, Tabulated };

// Spectrum function k(n) that defines the generalized ladder operators
//
//   A |n> = sqrt(k(n)) |n-1>,   A^dag |n> = sqrt(k(n+1)) |n+1>,
//
// so that A^dag A |n> = k(n) |n>. Every model has k(0) = 0 and k(n) > 0
// for n >= 1. Instances are immutable and safe to share across threads.
class SpectrumModel {
public:
    // k(n) = n.
    static SpectrumModel harmonic_oscillator();

    // k(n) = n (n + 2d + 2) [1 + b^2 / ((d+1)^2 (n+d+1)^2)], b, d >= 0.
    static SpectrumModel rosen_morse(double b, double d);

    // User-supplied k(1), k(2), ..., all strictly positive and finite.
    static SpectrumModel tabulated(std::vector<double> k_values);

    // Spectrum value k(n). Throws TabulatedOutOfRange past the table end.
    double k(int n) const;

    // sqrt(k(n)) for n >= 1, the ladder matrix element <n-1|A|n>.
    double sqrt_k(int n) const;

    SpectrumKind kind() const { return kind_; }
    double b() const { return b_; }
    double d() const { return d_; }
    const std::vector<double>& table() const { return table_; }

    // Largest n with k(n) defined (INT_MAX for the analytic models).
    int max_level() const;

    std::string name() const;

private:
    SpectrumModel(SpectrumKind kind, double b, double d,
                  std::vector<double> table);

    SpectrumKind kind_;
    double b_ = 0.0;
    double d_ = 0.0;
    std::vector<double> table_; // k(1), k(2), ...
};

// Rosen-Morse eigenvalue E_n = (n+d+1)^2 - b^2/(n+d+1)^2. Requires d > -1.
double rosen_morse_energy(double b, double d, int n);

} // namespace gsq

#endif
