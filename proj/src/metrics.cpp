#include "gsq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gsq/errors.hpp"
#include "gsq/parallel.hpp"

namespace gsq {

namespace {

// Contribution the top two coefficients are allowed to make to the second
// moments before the report is considered unreliable.
constexpr double kSecondMomentGuard = 1e-8;

// Relative margin below the bound before a variance counts as squeezed;
// keeps intelligent states (variance == bound up to roundoff) at "none".
constexpr double kSqueezeSlack = 1e-9;

// Dense truncated operator in the Fock basis, row-major.
struct DenseOperator {
    int dim = 0;
    std::vector<Complex> a;

    Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }

    std::vector<Complex> apply(const std::vector<Complex>& v) const {
        std::vector<Complex> out(static_cast<std::size_t>(dim));
        for (int r = 0; r < dim; ++r) {
            Complex acc{0.0, 0.0};
            const Complex* row = a.data() + static_cast<std::size_t>(r) * dim;
            for (int c = 0; c < dim; ++c)
                acc += row[c] * v[static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r)] = acc;
        }
        return out;
    }
};

Complex dot(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

// Q = (A + A^dag)/sqrt(2) and P = (A - A^dag)/(sqrt(2) i) as explicit
// truncated matrices of the given dimension.
void build_quadrature_matrices(const SpectrumModel& model, int dim,
                               DenseOperator& q, DenseOperator& p) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    q.dim = p.dim = dim;
    q.a.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    p.a.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    for (int n = 1; n < dim; ++n) {
        const double s = model.sqrt_k(n) * inv_sqrt2;
        q.at(n - 1, n) = {s, 0.0};
        q.at(n, n - 1) = {s, 0.0};
        p.at(n - 1, n) = {0.0, -s};
        p.at(n, n - 1) = {0.0, s};
    }
}

struct SecondMoments {
    double mean_q, mean_p, var_q, var_p, bound;
};

SecondMoments moments_from_matrices(const SpectrumModel& model, int dim,
                                    const std::vector<Complex>& v) {
    DenseOperator q, p;
    build_quadrature_matrices(model, dim, q, p);
    const auto qv = q.apply(v);
    const auto pv = p.apply(v);

    SecondMoments m{};
    m.mean_q = dot(v, qv).real();
    m.mean_p = dot(v, pv).real();
    const double q2 = dot(qv, qv).real();
    const double p2 = dot(pv, pv).real();
    m.var_q = std::max(0.0, q2 - m.mean_q * m.mean_q);
    m.var_p = std::max(0.0, p2 - m.mean_p * m.mean_p);

    // <[Q,P]> via the same matrices; purely imaginary for Hermitian Q, P.
    const Complex comm = dot(v, q.apply(pv)) - dot(v, p.apply(qv));
    m.bound = 0.5 * std::abs(comm.imag());
    return m;
}

} // namespace

std::string to_string(SqueezedQuadrature q) {
    switch (q) {
    case SqueezedQuadrature::None:
        return "none";
    case SqueezedQuadrature::Q:
        return "Q";
    case SqueezedQuadrature::P:
        return "P";
    }
    return "none";
}

QuadratureReport quadrature_report(const StateVector& state) {
    const int top = state.top_index();
    if (top < 0)
        throw std::invalid_argument("quadrature_report: empty state");
    const int dim = top + 3; // absorbs the n+/-2 reach of Q^2, P^2

    if (state.model.max_level() < dim - 1) {
        std::ostringstream msg;
        msg << "quadrature_report: spectrum table ends at "
            << state.model.max_level() << " but k(" << dim - 1
            << ") is needed for the second moments";
        throw TabulatedOutOfRange(msg.str());
    }

    const double edge_mass =
        std::norm(state.coeffs[static_cast<std::size_t>(top)]) +
        (top >= 1 ? std::norm(state.coeffs[static_cast<std::size_t>(top) - 1])
                  : 0.0);
    if (edge_mass * state.model.k(dim - 1) > kSecondMomentGuard) {
        std::ostringstream msg;
        msg << "quadrature_report: top coefficients contribute "
            << edge_mass * state.model.k(dim - 1)
            << " to the second moments (guard " << kSecondMomentGuard << ")";
        throw TruncationTooTight(msg.str());
    }

    std::vector<Complex> v(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    std::copy(state.coeffs.begin(), state.coeffs.end(), v.begin());
    const SecondMoments on_state = moments_from_matrices(state.model, dim, v);

    std::vector<Complex> vac(4, Complex{0.0, 0.0});
    vac[0] = {1.0, 0.0};
    const SecondMoments on_vacuum = moments_from_matrices(state.model, 4, vac);

    QuadratureReport report;
    report.dQ = std::sqrt(on_state.var_q);
    report.dP = std::sqrt(on_state.var_p);
    report.bound = on_state.bound;
    report.dQ0 = std::sqrt(on_vacuum.var_q);
    report.dP0 = std::sqrt(on_vacuum.var_p);
    report.bound0 = on_vacuum.bound;
    report.product_gap = report.dQ * report.dP - report.bound;
    return report;
}

SqueezedQuadrature classify_squeezing(const QuadratureReport& report) {
    const double margin = kSqueezeSlack * std::max(report.bound, 1.0);
    const double q_depth = report.bound - report.dQ * report.dQ;
    const double p_depth = report.bound - report.dP * report.dP;
    if (q_depth > margin && q_depth >= p_depth)
        return SqueezedQuadrature::Q;
    if (p_depth > margin)
        return SqueezedQuadrature::P;
    return SqueezedQuadrature::None;
}

double ladder_commutator_expectation(const StateVector& state) {
    double acc = 0.0;
    for (int n = 0; n <= state.top_index(); ++n)
        acc += std::norm(state.coeffs[static_cast<std::size_t>(n)]) *
               (state.model.k(n + 1) - state.model.k(n));
    return acc;
}

MandelReport mandel_report(const StateVector& state) {
    double mean = 0.0;
    double mean_sq = 0.0;
    for (int n = 0; n <= state.top_index(); ++n) {
        const double w = std::norm(state.coeffs[static_cast<std::size_t>(n)]);
        mean += n * w;
        mean_sq += static_cast<double>(n) * n * w;
    }
    if (mean < 1e-14)
        throw UndefinedMandel("mandel_report: <n> ~ 0, Mandel Q undefined");
    MandelReport report;
    report.mean_n = mean;
    report.var_n = std::max(0.0, mean_sq - mean * mean);
    report.Q = report.var_n / mean - 1.0;
    return report;
}

std::vector<SweepRow> squeezing_sweep(const SpectrumModel& model,
                                      const std::vector<double>& alphas,
                                      Complex xi, const StateParams& base,
                                      int threads) {
    std::vector<SweepRow> rows(alphas.size());
    detail::parallel_for_chunks(alphas.size(), threads, [&](std::size_t lo,
                                                            std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            SweepRow& row = rows[i];
            row.alpha = {alphas[i], 0.0};
            row.xi = xi;
            try {
                StateParams params = base;
                params.alpha = row.alpha;
                params.xi = xi;
                const StateVector state = scaled_coefficients(model, params);
                row.quad = quadrature_report(state);
                row.squeezed = classify_squeezing(row.quad);
                row.mean_n = state.mean_photon_number();
                row.n_used = state.top_index();
                try {
                    row.mandel_Q = mandel_report(state).Q;
                } catch (const UndefinedMandel&) {
                    row.mandel_Q = std::numeric_limits<double>::quiet_NaN();
                }
                row.ok = true;
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
        }
    });
    return rows;
}

} // namespace gsq
