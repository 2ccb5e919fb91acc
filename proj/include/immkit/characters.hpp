#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "immkit/partition.hpp"
#include "immkit/rational.hpp"

namespace immkit {

/// Class function on S_n, one exact value per cycle type, indexed in
/// partitions_of(n) order.
class TraceVector {
public:
    TraceVector() = default;
    explicit TraceVector(int n);  // zero trace
    TraceVector(int n, std::vector<Rational> values);

    int degree() const noexcept { return n_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& at(const Partition& cycle_type) const;
    const Rational& at(std::size_t index) const { return values_[index]; }
    /// Value at the identity (cycle type 1^n).
    const Rational& at_identity() const { return values_.back(); }

    TraceVector& operator+=(const TraceVector& other);
    TraceVector& operator-=(const TraceVector& other);
    TraceVector& operator*=(const Rational& scalar);
    friend TraceVector operator+(TraceVector a, const TraceVector& b) { return a += b; }
    friend TraceVector operator-(TraceVector a, const TraceVector& b) { return a -= b; }
    friend TraceVector operator*(const Rational& s, TraceVector a) { return a *= s; }
    friend bool operator==(const TraceVector&, const TraceVector&) = default;

private:
    int n_ = 0;
    std::vector<Rational> values_;
};

enum class Basis { monomial, elementary, homogeneous, power_sum, schur, forgotten };

/// "m", "e", "h", "p", "s", "f".
std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// Homogeneous degree-n symmetric function with coefficients in one basis.
class SymmetricFunction {
public:
    SymmetricFunction() = default;
    SymmetricFunction(int n, Basis basis);  // zero
    SymmetricFunction(int n, Basis basis, std::vector<Rational> coeffs);

    /// The basis element b_lambda itself.
    static SymmetricFunction basis_element(Basis basis, const Partition& lambda);

    int degree() const noexcept { return n_; }
    Basis basis() const noexcept { return basis_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coefficient(const Partition& lambda) const;

    SymmetricFunction& operator+=(const SymmetricFunction& other);  // bases must agree
    SymmetricFunction& operator*=(const Rational& scalar);
    friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) { return a += b; }
    friend SymmetricFunction operator*(const Rational& s, SymmetricFunction a) { return a *= s; }
    friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;

private:
    int n_ = 0;
    Basis basis_ = Basis::power_sum;
    std::vector<Rational> coeffs_;
};

/// Full character table of S_n via Murnaghan-Nakayama. Row lambda, column
/// mu hold chi^lambda(mu), both in partitions_of(n) order. Memoized per n;
/// safe to call from several threads.
const std::vector<std::vector<Integer>>& character_table(int n);

/// Kostka matrix K[lambda][mu], memoized per n.
const std::vector<std::vector<Integer>>& kostka_matrix(int n);

TraceVector irreducible_character(const Partition& lambda);

enum class TraceFamily { irreducible, induced_sign, induced_trivial, power_sum, monomial, forgotten };

std::string_view family_name(TraceFamily f);
/// Accepts the long names above and the short aliases chi, eps, eta, psi, phi, gamma.
TraceFamily parse_family(std::string_view name);
/// The basis that the Frobenius map sends this family to.
Basis frobenius_image(TraceFamily f);

TraceVector named_trace(TraceFamily family, const Partition& lambda);

/// Frobenius characteristic in the power-sum basis: coefficient of p_lambda
/// is theta(lambda)/z_lambda.
SymmetricFunction frobenius(const TraceVector& theta);
TraceVector inverse_frobenius(const SymmetricFunction& sf);

SymmetricFunction to_power_basis(const SymmetricFunction& sf);
/// Re-expresses sf in the target basis (exact).
SymmetricFunction convert(const SymmetricFunction& sf, Basis target);

/// The involution omega, returned in the basis of the input.
SymmetricFunction omega(const SymmetricFunction& sf);

/// Product of two symmetric functions, returned in the power-sum basis.
SymmetricFunction multiply(const SymmetricFunction& a, const SymmetricFunction& b);

/// theta^l: sum of monomial traces phi^mu over mu with exactly l parts.
/// Throws std::invalid_argument unless 1 <= l <= n.
TraceVector theta_level(int n, int l);

struct HookThetaExpansion {
    int n = 0;
    int k = 0;
    /// coeffs[l-1] is the coefficient of theta^l in chi^{k 1^{n-k}}.
    std::vector<Integer> coeffs;
    /// diff[l-1] is the coefficient of theta^l in
    /// imm(chi^{k1^{n-k}})/C(n-1,k-1) - imm(chi^{(k-1)1^{n-k+1}})/C(n-1,k-2),
    /// from the closed form. Empty when k = 1.
    std::vector<Rational> diff;
};

/// Throws std::invalid_argument unless 1 <= k <= n.
HookThetaExpansion hook_in_theta_basis(int n, int k);

}  // namespace immkit
