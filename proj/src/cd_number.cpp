#include "cdgamma/cd_number.hpp"

#include "cdgamma/errors.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace cdgamma {

namespace {

constexpr std::size_t kMaxDim = std::size_t{1} << kMaxLevel;

void check_level(int level) {
    if (level < 1 || level > kMaxLevel) {
        throw Error(ErrorKind::invalid_input,
                    "Cayley-Dickson level must lie in [1, " + std::to_string(kMaxLevel) +
                        "], got " + std::to_string(level));
    }
}

void check_same_level(const CDNumber& a, const CDNumber& b) {
    if (a.level() != b.level()) {
        throw Error(ErrorKind::level_mismatch, "operands have levels " + std::to_string(a.level()) +
                                                   " and " + std::to_string(b.level()));
    }
}

// Basis products of the doubling construction satisfy e_i e_j = s(i,j) e_{i^j}.
// The table for the largest level contains every smaller level as its
// top-left block, because (a,0)(b,0) = (ab,0).
struct SignTable {
    std::vector<std::int8_t> sign;

    SignTable() : sign(kMaxDim * kMaxDim) {
        sign[0] = 1;
        for (std::size_t half = 1; half < kMaxDim; half <<= 1) {
            for (std::size_t i = 0; i < 2 * half; ++i) {
                for (std::size_t j = 0; j < 2 * half; ++j) {
                    if (i < half && j < half) continue;
                    const std::size_t il = i & (half - 1);
                    const std::size_t jl = j & (half - 1);
                    int s = 0;
                    if (i < half) {
                        // (a1,0)(0,b2) = (0, b2 a1)
                        s = at(jl, il);
                    } else if (j < half) {
                        // (0,a2)(b1,0) = (0, a2 b1*)
                        s = at(il, jl) * (jl == 0 ? 1 : -1);
                    } else {
                        // (0,a2)(0,b2) = (-b2* a2, 0)
                        s = -at(jl, il) * (jl == 0 ? 1 : -1);
                    }
                    sign[i * kMaxDim + j] = static_cast<std::int8_t>(s);
                }
            }
        }
    }

    int at(std::size_t i, std::size_t j) const { return sign[i * kMaxDim + j]; }
};

const SignTable& sign_table() {
    static const SignTable table;
    return table;
}

} // namespace

CDNumber::CDNumber(int level) : level_(level) {
    check_level(level);
    coords_.assign(std::size_t{1} << level, 0.0);
}

CDNumber::CDNumber(int level, std::vector<double> coords) : level_(level), coords_(std::move(coords)) {
    check_level(level);
    if (coords_.size() != (std::size_t{1} << level)) {
        throw Error(ErrorKind::invalid_input, "level " + std::to_string(level) + " needs " +
                                                  std::to_string(std::size_t{1} << level) +
                                                  " coordinates, got " + std::to_string(coords_.size()));
    }
}

CDNumber::CDNumber(int level, std::initializer_list<double> coords)
    : CDNumber(level, std::vector<double>(coords)) {}

CDNumber CDNumber::real(int level, double x) {
    CDNumber z(level);
    z.coords_[0] = x;
    return z;
}

CDNumber CDNumber::unit(int level, std::size_t index, double scale) {
    CDNumber z(level);
    if (index >= z.dim()) {
        throw Error(ErrorKind::invalid_input,
                    "basis index " + std::to_string(index) + " out of range at level " + std::to_string(level));
    }
    z.coords_[index] = scale;
    return z;
}

CDNumber CDNumber::pure() const {
    CDNumber z = *this;
    z.coords_[0] = 0.0;
    return z;
}

double CDNumber::norm_sq() const noexcept {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return s;
}

double CDNumber::norm() const noexcept {
    // hypot-style scaling keeps tiny and huge values finite
    double scale = 0.0;
    for (double c : coords_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double s = 0.0;
    for (double c : coords_) s += (c / scale) * (c / scale);
    return scale * std::sqrt(s);
}

double CDNumber::pure_norm() const noexcept {
    double scale = 0.0;
    for (std::size_t i = 1; i < coords_.size(); ++i) scale = std::max(scale, std::abs(coords_[i]));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double s = 0.0;
    for (std::size_t i = 1; i < coords_.size(); ++i) s += (coords_[i] / scale) * (coords_[i] / scale);
    return scale * std::sqrt(s);
}

bool CDNumber::is_real(double tol) const noexcept {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (std::abs(coords_[i]) > tol) return false;
    }
    return true;
}

CDNumber CDNumber::operator-() const {
    CDNumber z = *this;
    for (double& c : z.coords_) c = -c;
    return z;
}

CDNumber& CDNumber::operator+=(const CDNumber& other) {
    check_same_level(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

CDNumber& CDNumber::operator-=(const CDNumber& other) {
    check_same_level(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

CDNumber& CDNumber::operator*=(double s) noexcept {
    for (double& c : coords_) c *= s;
    return *this;
}

CDNumber& CDNumber::operator/=(double s) noexcept {
    for (double& c : coords_) c /= s;
    return *this;
}

CDNumber operator+(CDNumber a, double s) {
    a[0] += s;
    return a;
}

CDNumber operator+(double s, CDNumber a) {
    a[0] += s;
    return a;
}

CDNumber operator-(CDNumber a, double s) {
    a[0] -= s;
    return a;
}

CDNumber operator-(double s, const CDNumber& a) {
    CDNumber z = -a;
    z[0] += s;
    return z;
}

CDNumber cd_add(const CDNumber& a, const CDNumber& b) { return a + b; }

CDNumber cd_sub(const CDNumber& a, const CDNumber& b) { return a - b; }

CDNumber cd_mul(const CDNumber& a, const CDNumber& b) {
    check_same_level(a, b);
    const std::size_t n = a.dim();
    const SignTable& table = sign_table();
    CDNumber out(a.level());
    auto x = a.coords();
    auto y = b.coords();
    auto r = out.coords();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        const std::int8_t* row = &table.sign[i * kMaxDim];
        for (std::size_t j = 0; j < n; ++j) {
            r[i ^ j] += row[j] * (x[i] * y[j]);
        }
    }
    return out;
}

CDNumber cd_conj(const CDNumber& z) {
    CDNumber c = -z;
    c[0] = z[0];
    return c;
}

CDNumber cd_inverse(const CDNumber& z) {
    const double n2 = z.norm_sq();
    if (n2 == 0.0) throw Error(ErrorKind::singular, "inverse of zero");
    CDNumber inv = cd_conj(z) / n2;
    if (z.level() >= 4) {
        const double tol = 1e-12;
        CDNumber one = CDNumber::real(z.level(), 1.0);
        if (max_abs_diff(z * inv, one) > tol || max_abs_diff(inv * z, one) > tol) {
            throw Error(ErrorKind::zero_divisor, "conj(z)/|z|^2 fails to invert z at level " +
                                                     std::to_string(z.level()));
        }
    }
    return inv;
}

double inner(const CDNumber& a, const CDNumber& b) {
    check_same_level(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

CDNumber commutator(const CDNumber& a, const CDNumber& b) { return a * b - b * a; }

CDNumber associator(const CDNumber& a, const CDNumber& b, const CDNumber& c) {
    return (a * b) * c - a * (b * c);
}

double max_abs_diff(const CDNumber& a, const CDNumber& b) {
    check_same_level(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double distance(const CDNumber& a, const CDNumber& b) { return (a - b).norm(); }

PureImaginaryUnit::PureImaginaryUnit(const CDNumber& z) : value_(z.pure()) {
    const double n = value_.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorKind::invalid_input, "pure imaginary unit requires a nonzero finite pure part");
    }
    value_ /= n;
}

PureImaginaryUnit PureImaginaryUnit::basis(int level, std::size_t index) {
    if (index == 0) throw Error(ErrorKind::invalid_input, "e_0 is not imaginary");
    return PureImaginaryUnit(CDNumber::unit(level, index));
}

OrthoDecomposition ortho_decompose(const CDNumber& q_prime, const CDNumber& p_prime) {
    if (q_prime.level() != p_prime.level()) {
        throw Error(ErrorKind::level_mismatch, "ortho_decompose: operand levels differ");
    }
    if (q_prime.re() != 0.0 || p_prime.re() != 0.0) {
        throw Error(ErrorKind::invalid_input, "ortho_decompose expects pure imaginary inputs");
    }
    const double p2 = p_prime.norm_sq();
    if (std::sqrt(p2) < kDegenerateEps) {
        return {CDNumber(q_prime.level()), q_prime, p_prime};
    }
    CDNumber parallel = p_prime * (inner(q_prime, p_prime) / p2);
    CDNumber perpendicular = q_prime - parallel;
    return {std::move(parallel), std::move(perpendicular), p_prime};
}

int basis_product_sign(std::size_t i, std::size_t j) {
    if (i >= kMaxDim || j >= kMaxDim) throw Error(ErrorKind::invalid_input, "basis index out of range");
    return sign_table().at(i, j);
}

} // namespace cdgamma
