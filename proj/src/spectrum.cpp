#include "gsq/spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gsq/errors.hpp"

namespace gsq {

SpectrumModel::SpectrumModel(SpectrumKind kind, double b, double d,
                             std::vector<double> table)
    : kind_(kind), b_(b), d_(d), table_(std::move(table)) {}

SpectrumModel SpectrumModel::harmonic_oscillator() {
    return SpectrumModel(SpectrumKind::HarmonicOscillator, 0.0, 0.0, {});
}

SpectrumModel SpectrumModel::rosen_morse(double b, double d) {
    if (!(b >= 0.0) || !std::isfinite(b))
        throw std::invalid_argument("rosen_morse: b must be finite and >= 0");
    if (!(d >= 0.0) || !std::isfinite(d))
        throw std::invalid_argument("rosen_morse: d must be finite and >= 0");
    return SpectrumModel(SpectrumKind::RosenMorse, b, d, {});
}

SpectrumModel SpectrumModel::tabulated(std::vector<double> k_values) {
    for (std::size_t i = 0; i < k_values.size(); ++i) {
        if (!(k_values[i] > 0.0) || !std::isfinite(k_values[i])) {
            std::ostringstream msg;
            msg << "tabulated: k(" << i + 1 << ") = " << k_values[i]
                << " must be finite and > 0";
            throw std::invalid_argument(msg.str());
        }
    }
    return SpectrumModel(SpectrumKind::Tabulated, 0.0, 0.0,
                         std::move(k_values));
}

double SpectrumModel::k(int n) const {
    if (n < 0)
        throw std::invalid_argument("k(n): n must be >= 0");
    if (n == 0)
        return 0.0;
    switch (kind_) {
    case SpectrumKind::HarmonicOscillator:
        return static_cast<double>(n);
    case SpectrumKind::RosenMorse: {
        const double nd = static_cast<double>(n);
        const double s = nd + d_ + 1.0;
        const double corr = 1.0 + b_ * b_ / ((d_ + 1.0) * (d_ + 1.0) * s * s);
        return nd * (nd + 2.0 * d_ + 2.0) * corr;
    }
    case SpectrumKind::Tabulated:
        if (static_cast<std::size_t>(n) > table_.size()) {
            std::ostringstream msg;
            msg << "tabulated spectrum: k(" << n << ") requested, table ends at "
                << table_.size();
            throw TabulatedOutOfRange(msg.str());
        }
        return table_[static_cast<std::size_t>(n) - 1];
    }
    throw std::logic_error("k(n): unknown spectrum kind");
}

double SpectrumModel::sqrt_k(int n) const {
    if (n < 1)
        throw std::invalid_argument("sqrt_k(n): n must be >= 1");
    return std::sqrt(k(n));
}

int SpectrumModel::max_level() const {
    if (kind_ == SpectrumKind::Tabulated)
        return static_cast<int>(table_.size());
    return std::numeric_limits<int>::max();
}

std::string SpectrumModel::name() const {
    switch (kind_) {
    case SpectrumKind::HarmonicOscillator:
        return "ho";
    case SpectrumKind::RosenMorse: {
        std::ostringstream s;
        s << "rosen_morse(b=" << b_ << ",d=" << d_ << ")";
        return s.str();
    }
    case SpectrumKind::Tabulated: {
        std::ostringstream s;
        s << "table[" << table_.size() << "]";
        return s.str();
    }
    }
    return "unknown";
}

double rosen_morse_energy(double b, double d, int n) {
    if (n < 0)
        throw std::invalid_argument("rosen_morse_energy: n must be >= 0");
    if (!(d > -1.0))
        throw std::invalid_argument("rosen_morse_energy: requires d > -1");
    const double s = static_cast<double>(n) + d + 1.0;
    return s * s - b * b / (s * s);
}

} // namespace gsq
