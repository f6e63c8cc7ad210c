#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cdgamma {

/// Highest doubling level supported by the multiplication table (256 coordinates).
inline constexpr int kMaxLevel = 8;

/// Tolerance below which a pure part counts as zero in ortho_decompose.
inline constexpr double kDegenerateEps = 1e-12;

/// Element of the Cayley-Dickson algebra A_v, stored as 2^v real coordinates.
/// coords[0] is the real part, coords[i] the coefficient of e_i.
class CDNumber {
public:
    /// Zero at the given level.
    explicit CDNumber(int level);
    CDNumber(int level, std::vector<double> coords);
    CDNumber(int level, std::initializer_list<double> coords);

    static CDNumber real(int level, double x);
    static CDNumber unit(int level, std::size_t index, double scale = 1.0);

    int level() const noexcept { return level_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }
    std::span<double> coords() noexcept { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }

    double re() const noexcept { return coords_[0]; }
    /// z - Re(z).
    CDNumber pure() const;
    double norm() const noexcept;
    double norm_sq() const noexcept;
    /// Norm of the pure part.
    double pure_norm() const noexcept;
    bool is_real(double tol = 0.0) const noexcept;

    CDNumber operator-() const;
    CDNumber& operator+=(const CDNumber& other);
    CDNumber& operator-=(const CDNumber& other);
    CDNumber& operator*=(double s) noexcept;
    CDNumber& operator/=(double s) noexcept;

    friend bool operator==(const CDNumber&, const CDNumber&) = default;

private:
    int level_;
    std::vector<double> coords_;
};

CDNumber cd_add(const CDNumber& a, const CDNumber& b);
CDNumber cd_sub(const CDNumber& a, const CDNumber& b);
/// Doubling-construction product (a1,a2)(b1,b2) = (a1 b1 - b2* a2, b2 a1 + a2 b1*).
CDNumber cd_mul(const CDNumber& a, const CDNumber& b);
CDNumber cd_conj(const CDNumber& z);
/// conj(z)/|z|^2, post-verified as a two-sided inverse. Throws singular on zero
/// and zero_divisor when the product check fails (possible from level 4 on).
CDNumber cd_inverse(const CDNumber& z);
/// Scalar product Re(a conj(b)); equals the Euclidean dot product of the coordinates.
double inner(const CDNumber& a, const CDNumber& b);

inline CDNumber operator+(CDNumber a, const CDNumber& b) { return a += b; }
inline CDNumber operator-(CDNumber a, const CDNumber& b) { return a -= b; }
inline CDNumber operator*(const CDNumber& a, const CDNumber& b) { return cd_mul(a, b); }
inline CDNumber operator*(CDNumber a, double s) { return a *= s; }
inline CDNumber operator*(double s, CDNumber a) { return a *= s; }
inline CDNumber operator/(CDNumber a, double s) { return a /= s; }
CDNumber operator+(CDNumber a, double s);
CDNumber operator+(double s, CDNumber a);
CDNumber operator-(CDNumber a, double s);
CDNumber operator-(double s, const CDNumber& a);

/// ab - ba
CDNumber commutator(const CDNumber& a, const CDNumber& b);
/// (ab)c - a(bc)
CDNumber associator(const CDNumber& a, const CDNumber& b, const CDNumber& c);

/// Largest coordinate difference.
double max_abs_diff(const CDNumber& a, const CDNumber& b);
double distance(const CDNumber& a, const CDNumber& b);

/// Unit-norm element of I_v (zero real part).
class PureImaginaryUnit {
public:
    /// Normalizes the pure part of z; throws invalid_input if it vanishes.
    explicit PureImaginaryUnit(const CDNumber& z);
    static PureImaginaryUnit basis(int level, std::size_t index);

    const CDNumber& value() const noexcept { return value_; }
    int level() const noexcept { return value_.level(); }
    operator const CDNumber&() const noexcept { return value_; }

private:
    CDNumber value_;
};

/// q' = parallel + perpendicular with respect to a reference pure element p'.
struct OrthoDecomposition {
    CDNumber parallel;
    CDNumber perpendicular;
    CDNumber reference;
};

/// Splits the pure element q_prime into parts parallel and orthogonal to p_prime.
/// A reference with norm below kDegenerateEps yields (0, q_prime).
OrthoDecomposition ortho_decompose(const CDNumber& q_prime, const CDNumber& p_prime);

/// Sign s with e_i e_j = s e_{i xor j} (indices below 2^kMaxLevel).
int basis_product_sign(std::size_t i, std::size_t j);

} // namespace cdgamma
