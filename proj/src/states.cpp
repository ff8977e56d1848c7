#include "gsq/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gsq/errors.hpp"

namespace gsq {

namespace {

// Enumeration cost of closed_form_g grows combinatorially; the scaled
// recurrence is the production path for anything larger.
constexpr int kMaxClosedFormN = 32;

// Trailing |ctilde|^2 window used for the truncation criterion.
constexpr int kTailWindow = 5;

// Earliest index at which the adaptive construction may stop, so the
// window is never evaluated while the coefficients are still ramping up.
constexpr int kMinStopIndex = 8;

} // namespace

double StateVector::mean_photon_number() const {
    double mean = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        mean += static_cast<double>(n) * std::norm(coeffs[n]);
    return mean;
}

Complex xi_from_delta(Complex delta) {
    const double r = std::abs(delta);
    if (r == 0.0)
        return {0.0, 0.0};
    if (!std::isfinite(r))
        throw std::invalid_argument("xi_from_delta: delta must be finite");
    return delta / r * std::tanh(r);
}

std::vector<Complex> recurrence_J(const SpectrumModel& model, Complex alpha,
                                  Complex xi, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("recurrence_J: n_max must be >= 1");
    std::vector<Complex> j(static_cast<std::size_t>(n_max) + 1);
    j[0] = {1.0, 0.0};
    j[1] = alpha;
    for (int n = 1; n < n_max; ++n) {
        j[n + 1] = alpha * j[n] - xi * model.k(n) * j[n - 1];
        if (!std::isfinite(std::abs(j[n + 1]))) {
            std::ostringstream msg;
            msg << "recurrence_J: |J| overflowed at n = " << n + 1
                << "; use scaled_coefficients";
            throw RecurrenceOverflow(msg.str());
        }
    }
    return j;
}

double closed_form_g(const SpectrumModel& model, int n, int m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("closed_form_g: n, m must be >= 0");
    if (m > n / 2) {
        std::ostringstream msg;
        msg << "closed_form_g: m = " << m << " exceeds floor(n/2) with n = " << n;
        throw DomainError(msg.str());
    }
    if (n > kMaxClosedFormN) {
        std::ostringstream msg;
        msg << "closed_form_g: n = " << n << " exceeds the enumeration cap "
            << kMaxClosedFormN;
        throw std::invalid_argument(msg.str());
    }
    if (m == 0)
        return 1.0;

    // Index i runs 1..m; j_i ranges over [j_{i-1}+2, n-2m+2i-1].
    std::function<double(int, int)> sum_from = [&](int i, int lo) -> double {
        const int hi = n - 2 * m + 2 * i - 1;
        double acc = 0.0;
        for (int j = lo; j <= hi; ++j) {
            const double kj = model.k(j);
            acc += (i == m) ? kj : kj * sum_from(i + 1, j + 2);
        }
        return acc;
    };
    return sum_from(1, 1);
}

Complex closed_form_J(const SpectrumModel& model, Complex alpha, Complex xi,
                      int n) {
    if (n < 0)
        throw std::invalid_argument("closed_form_J: n must be >= 0");
    std::vector<Complex> alpha_pow(static_cast<std::size_t>(n) + 1);
    alpha_pow[0] = {1.0, 0.0};
    for (int p = 1; p <= n; ++p)
        alpha_pow[p] = alpha_pow[p - 1] * alpha;

    Complex acc{0.0, 0.0};
    Complex neg_xi_pow{1.0, 0.0};
    for (int m = 0; m <= n / 2; ++m) {
        acc += neg_xi_pow * alpha_pow[n - 2 * m] * closed_form_g(model, n, m);
        neg_xi_pow *= -xi;
    }
    return acc;
}

StateVector scaled_coefficients(const SpectrumModel& model,
                                const StateParams& params) {
    if (!(std::abs(params.xi) < 1.0)) {
        std::ostringstream msg;
        msg << "scaled_coefficients: |xi| = " << std::abs(params.xi)
            << " must be < 1";
        throw InvalidXi(msg.str());
    }
    if (!std::isfinite(std::abs(params.alpha)))
        throw std::invalid_argument("scaled_coefficients: alpha must be finite");
    if (params.n_max < 2)
        throw std::invalid_argument("scaled_coefficients: n_max must be >= 2");
    if (!(params.tail_tolerance > 0.0) || !(params.tail_tolerance < 1.0))
        throw std::invalid_argument(
            "scaled_coefficients: tail_tolerance must be in (0, 1)");

    const int cap = std::min(params.n_max, model.max_level());

    std::vector<Complex> ct;
    ct.reserve(static_cast<std::size_t>(std::min(cap, 64)) + 1);
    ct.push_back({1.0, 0.0});
    double total = 1.0;
    double log_rescale = 0.0;

    auto window_mass = [&]() {
        double w = 0.0;
        const int lo = std::max(0, static_cast<int>(ct.size()) - kTailWindow);
        for (int i = lo; i < static_cast<int>(ct.size()); ++i)
            w += std::norm(ct[static_cast<std::size_t>(i)]);
        return w;
    };

    bool converged = false;
    for (int n = 0; n < cap; ++n) {
        // ctilde_{n+1} = (alpha ctilde_n - xi sqrt(k(n)) ctilde_{n-1}) / sqrt(k(n+1))
        Complex next = params.alpha * ct[static_cast<std::size_t>(n)];
        if (n >= 1)
            next -= params.xi * model.sqrt_k(n) *
                    ct[static_cast<std::size_t>(n) - 1];
        next /= model.sqrt_k(n + 1);
        ct.push_back(next);
        total += std::norm(next);

        // Keep the running magnitudes comfortably inside the double range.
        if (total > 1e250) {
            for (auto& c : ct)
                c *= 1e-125;
            total *= 1e-250;
            log_rescale += 125.0 * std::log(10.0);
        }

        if (n + 1 >= kMinStopIndex && window_mass() <= params.tail_tolerance * total) {
            converged = true;
            break;
        }
    }

    const double tail = window_mass() / total;
    if (!converged && tail > params.tail_tolerance) {
        std::ostringstream msg;
        msg << "scaled_coefficients: tail mass " << tail << " > "
            << params.tail_tolerance << " at truncation cap " << cap;
        throw NonConvergent(msg.str());
    }

    const double inv_norm = 1.0 / std::sqrt(total);
    for (auto& c : ct)
        c *= inv_norm;

    StateVector state{std::move(ct), params, model, 1.0, tail};
    state.norm_constant = std::exp(0.5 * std::log(total) + log_rescale);
    return state;
}

std::vector<Complex> ho_hermite_coefficients(Complex alpha, Complex xi,
                                             int n_max) {
    if (xi == Complex{0.0, 0.0})
        throw DomainError(
            "ho_hermite_coefficients: xi = 0 (use the coherent-state branch)");
    if (!(std::abs(xi) < 1.0))
        throw InvalidXi("ho_hermite_coefficients: |xi| must be < 1");
    if (n_max < 0)
        throw std::invalid_argument("ho_hermite_coefficients: n_max must be >= 0");

    // w = sqrt(xi/2) on the principal branch; the Hermite argument is then
    // alpha/(2w) = alpha/sqrt(2 xi) with the same branch.
    const Complex w = std::sqrt(xi * 0.5);
    const Complex x = alpha / (2.0 * w);

    std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1);
    Complex h_prev{1.0, 0.0}; // H_0
    Complex h_cur = 2.0 * x;  // H_1
    Complex scale{1.0, 0.0};  // w^n / sqrt(n!)
    coeffs[0] = {1.0, 0.0};
    for (int n = 1; n <= n_max; ++n) {
        scale *= w / std::sqrt(static_cast<double>(n));
        coeffs[static_cast<std::size_t>(n)] = scale * h_cur;
        const Complex h_next =
            2.0 * x * h_cur - 2.0 * static_cast<double>(n) * h_prev;
        h_prev = h_cur;
        h_cur = h_next;
    }
    return coeffs;
}

double eigen_relation_residual(const StateVector& state) {
    const auto& c = state.coeffs;
    const int top = state.top_index();
    const Complex alpha = state.params.alpha;
    const Complex xi = state.params.xi;
    double acc = 0.0;
    // (A v)_n = sqrt(k(n+1)) v_{n+1}; (A^dag v)_n = sqrt(k(n)) v_{n-1}.
    for (int n = 0; n <= top + 1; ++n) {
        Complex r{0.0, 0.0};
        if (n + 1 <= top)
            r += state.model.sqrt_k(n + 1) * c[static_cast<std::size_t>(n) + 1];
        if (n >= 1 && n - 1 <= top)
            r += xi * state.model.sqrt_k(n) * c[static_cast<std::size_t>(n) - 1];
        if (n <= top)
            r -= alpha * c[static_cast<std::size_t>(n)];
        acc += std::norm(r);
    }
    return std::sqrt(acc);
}

double IdentityReport::max_deviation() const {
    double worst = 0.0;
    for (const auto& line : lines)
        worst = std::max(worst, line.max_rel_dev);
    return worst;
}

bool IdentityReport::all_within(double tol) const {
    return max_deviation() <= tol;
}

IdentityReport appendix_identity_check(const SpectrumModel& model, int n_max) {
    if (n_max < 2)
        throw std::invalid_argument("appendix_identity_check: n_max must be >= 2");

    // The largest g argument is 2n+2; stay within the enumeration cap and,
    // for tabulated spectra, within the table (k up to 2n+1 is needed).
    int n_hi = std::min(n_max, (kMaxClosedFormN - 2) / 2);
    if (model.max_level() < std::numeric_limits<int>::max())
        n_hi = std::min(n_hi, (model.max_level() - 1) / 2);

    IdentityReport report;
    report.lines = {{"id1", 0.0, 0}, {"id2", 0.0, 0}, {"id3", 0.0, 0},
                    {"id4", 0.0, 0}, {"id5", 0.0, 0}};

    auto record = [&](int which, double lhs, double rhs) {
        const double denom = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        auto& line = report.lines[static_cast<std::size_t>(which)];
        line.max_rel_dev = std::max(line.max_rel_dev, std::abs(lhs - rhs) / denom);
        ++line.checks;
    };

    for (int n = 1; n <= n_hi; ++n) {
        record(0, closed_form_g(model, 2 * n + 1, 1),
               closed_form_g(model, 2 * n, 1) + model.k(2 * n));
        for (int m = 1; m <= n - 1; ++m)
            record(1, closed_form_g(model, 2 * n + 1, m + 1),
                   closed_form_g(model, 2 * n, m + 1) +
                       model.k(2 * n) * closed_form_g(model, 2 * n - 1, m));
        record(2, closed_form_g(model, 2 * n + 2, n + 1),
               model.k(2 * n + 1) * closed_form_g(model, 2 * n, n));
        record(3, closed_form_g(model, 2 * n + 2, 1),
               closed_form_g(model, 2 * n + 1, 1) + model.k(2 * n + 1));
        for (int m = 1; m <= n - 1; ++m)
            record(4, closed_form_g(model, 2 * n + 2, m + 1),
                   closed_form_g(model, 2 * n + 1, m + 1) +
                       model.k(2 * n + 1) * closed_form_g(model, 2 * n, m));
    }
    return report;
}

} // namespace gsq
