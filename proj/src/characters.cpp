#include "immkit/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace immkit {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;
using PowerSumPoly = std::map<Partition, Rational>;

int sign_of(const Partition& mu) { return (mu.size() - mu.length()) % 2 == 0 ? 1 : -1; }

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

// ---- Murnaghan-Nakayama -------------------------------------------------

using MnMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>;

// chi^lambda at cycle type mu, removing rim hooks of length mu[0], mu[1], ...
Integer murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu, MnMemo& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    const int r = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> moved(beta);
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            int part = moved[j] - (len - 1 - j);
            if (part > 0) smaller.push_back(part);
        }
        Integer sub = murnaghan_nakayama(smaller, rest, memo);
        if (between % 2) total -= sub;
        else total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<std::vector<Integer>> build_character_table(int n) {
    const auto& parts = partitions_of(n);
    MnMemo memo;
    std::vector<std::vector<Integer>> table(parts.size(), std::vector<Integer>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            table[i][j] = murnaghan_nakayama(parts[i].parts(), parts[j].parts(), memo);
    return table;
}

// ---- exact linear algebra ----------------------------------------------

QMatrix invert(QMatrix a) {
    const std::size_t n = a.size();
    QMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular transition matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Rational> apply(const QMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

// ---- power-sum expansions ----------------------------------------------

PowerSumPoly poly_multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) out[merge(pa, pb)] += ca * cb;
    return out;
}

// Newton recurrences: k h_k = sum_i p_i h_{k-i},  k e_k = sum_i (-1)^{i-1} p_i e_{k-i}.
std::vector<PowerSumPoly> newton_series(int n, bool elementary) {
    std::vector<PowerSumPoly> series(static_cast<std::size_t>(n) + 1);
    series[0][Partition{}] = 1;
    for (int k = 1; k <= n; ++k) {
        PowerSumPoly acc;
        for (int i = 1; i <= k; ++i) {
            const bool negative = elementary && (i % 2 == 0);
            for (const auto& [mu, c] : series[static_cast<std::size_t>(k - i)]) {
                Rational term = c;
                if (negative) term = -term;
                acc[merge(mu, Partition{i})] += term;
            }
        }
        for (auto& [mu, c] : acc) c /= k;
        series[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return series;
}

struct Transition {
    QMatrix to_p;    // column lambda = p-coordinates of b_lambda
    QMatrix from_p;  // inverse, filled on demand
};

QMatrix inverse_kostka(int n) {
    const auto& k = kostka_matrix(n);
    const std::size_t sz = k.size();
    QMatrix inv(sz, std::vector<Rational>(sz, 0));
    for (std::size_t j = 0; j < sz; ++j) {
        inv[j][j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            Rational acc = 0;
            for (std::size_t m = i + 1; m <= j; ++m)
                if (k[i][m] != 0) acc += Rational(k[i][m]) * inv[m][j];
            inv[i][j] = -acc;
        }
    }
    return inv;
}

QMatrix build_to_p(int n, Basis basis);

std::recursive_mutex transition_mutex;
std::map<std::pair<int, Basis>, std::unique_ptr<Transition>> transition_cache;

Transition& transition(int n, Basis basis) {
    std::lock_guard lock(transition_mutex);
    auto& slot = transition_cache[{n, basis}];
    if (!slot) {
        auto t = std::make_unique<Transition>();
        t->to_p = build_to_p(n, basis);
        slot = std::move(t);
    }
    return *slot;
}

const QMatrix& to_p_matrix(int n, Basis basis) { return transition(n, basis).to_p; }

const QMatrix& from_p_matrix(int n, Basis basis) {
    std::lock_guard lock(transition_mutex);
    Transition& t = transition(n, basis);
    if (t.from_p.empty()) t.from_p = invert(t.to_p);
    return t.from_p;
}

QMatrix build_to_p(int n, Basis basis) {
    const auto& parts = partitions_of(n);
    const std::size_t sz = parts.size();
    QMatrix t(sz, std::vector<Rational>(sz, 0));
    switch (basis) {
    case Basis::power_sum:
        for (std::size_t i = 0; i < sz; ++i) t[i][i] = 1;
        break;
    case Basis::schur: {
        const auto& chi = character_table(n);
        for (std::size_t mu = 0; mu < sz; ++mu) {
            const Rational inv_z(Integer(1), z_value(parts[mu]));
            for (std::size_t lam = 0; lam < sz; ++lam) t[mu][lam] = Rational(chi[lam][mu]) * inv_z;
        }
        break;
    }
    case Basis::elementary:
    case Basis::homogeneous: {
        const auto series = newton_series(n, basis == Basis::elementary);
        for (std::size_t lam = 0; lam < sz; ++lam) {
            PowerSumPoly prod{{Partition{}, Rational(1)}};
            for (int part : parts[lam].parts()) prod = poly_multiply(prod, series[static_cast<std::size_t>(part)]);
            for (const auto& [mu, c] : prod) t[partition_index(mu)][lam] = c;
        }
        break;
    }
    case Basis::monomial: {
        // s = K m  =>  m_lambda = sum_nu (K^{-1})_{lambda,nu} s_nu
        const QMatrix& ts = to_p_matrix(n, Basis::schur);
        const QMatrix kinv = inverse_kostka(n);
        for (std::size_t mu = 0; mu < sz; ++mu)
            for (std::size_t lam = 0; lam < sz; ++lam) {
                Rational acc = 0;
                for (std::size_t nu = lam; nu < sz; ++nu)
                    if (kinv[lam][nu] != 0) acc += ts[mu][nu] * kinv[lam][nu];
                t[mu][lam] = acc;
            }
        break;
    }
    case Basis::forgotten: {
        // f_lambda = omega(m_lambda)
        const QMatrix& tm = to_p_matrix(n, Basis::monomial);
        for (std::size_t mu = 0; mu < sz; ++mu)
            for (std::size_t lam = 0; lam < sz; ++lam) t[mu][lam] = sign_of(parts[mu]) * tm[mu][lam];
        break;
    }
    }
    return t;
}

void check_degree(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
}

}  // namespace

// ---- TraceVector -----------------------------------------------------------

TraceVector::TraceVector(int n) : n_(n), values_(partitions_of(n).size(), 0) {}

TraceVector::TraceVector(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != partitions_of(n).size())
        throw std::invalid_argument("trace vector must have one value per partition of n");
}

const Rational& TraceVector::at(const Partition& cycle_type) const {
    if (cycle_type.size() != n_) throw std::invalid_argument("cycle type has the wrong size");
    return values_[partition_index(cycle_type)];
}

TraceVector& TraceVector::operator+=(const TraceVector& other) {
    if (other.n_ != n_) throw std::invalid_argument("trace degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

TraceVector& TraceVector::operator-=(const TraceVector& other) {
    if (other.n_ != n_) throw std::invalid_argument("trace degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

TraceVector& TraceVector::operator*=(const Rational& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

// ---- SymmetricFunction -----------------------------------------------------

std::string_view basis_name(Basis b) {
    switch (b) {
    case Basis::monomial: return "m";
    case Basis::elementary: return "e";
    case Basis::homogeneous: return "h";
    case Basis::power_sum: return "p";
    case Basis::schur: return "s";
    case Basis::forgotten: return "f";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    for (Basis b : {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::power_sum, Basis::schur,
                    Basis::forgotten})
        if (basis_name(b) == name) return b;
    throw std::invalid_argument("unknown basis: " + std::string(name));
}

SymmetricFunction::SymmetricFunction(int n, Basis basis)
    : n_(n), basis_(basis), coeffs_(partitions_of(n).size(), 0) {}

SymmetricFunction::SymmetricFunction(int n, Basis basis, std::vector<Rational> coeffs)
    : n_(n), basis_(basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != partitions_of(n).size())
        throw std::invalid_argument("symmetric function must have one coefficient per partition of n");
}

SymmetricFunction SymmetricFunction::basis_element(Basis basis, const Partition& lambda) {
    check_degree(lambda.size());
    SymmetricFunction sf(lambda.size(), basis);
    sf.coeffs_[partition_index(lambda)] = 1;
    return sf;
}

const Rational& SymmetricFunction::coefficient(const Partition& lambda) const {
    if (lambda.size() != n_) throw std::invalid_argument("partition has the wrong size");
    return coeffs_[partition_index(lambda)];
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& other) {
    if (other.n_ != n_ || other.basis_ != basis_)
        throw std::invalid_argument("symmetric function degree/basis mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

SymmetricFunction& SymmetricFunction::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

// ---- tables ------------------------------------------------------------------

const std::vector<std::vector<Integer>>& character_table(int n) {
    check_degree(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<std::vector<Integer>>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<std::vector<Integer>>>(build_character_table(n));
    return *slot;
}

const std::vector<std::vector<Integer>>& kostka_matrix(int n) {
    check_degree(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<std::vector<Integer>>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        const auto& parts = partitions_of(n);
        std::vector<std::vector<Integer>> k(parts.size(), std::vector<Integer>(parts.size(), 0));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j)
                if (majorizes(parts[i], parts[j])) k[i][j] = kostka(parts[i], parts[j]);
        slot = std::make_unique<const std::vector<std::vector<Integer>>>(std::move(k));
    }
    return *slot;
}

TraceVector irreducible_character(const Partition& lambda) {
    check_degree(lambda.size());
    const auto& row = character_table(lambda.size())[partition_index(lambda)];
    std::vector<Rational> values(row.begin(), row.end());
    return TraceVector(lambda.size(), std::move(values));
}

// ---- families ------------------------------------------------------------

std::string_view family_name(TraceFamily f) {
    switch (f) {
    case TraceFamily::irreducible: return "irreducible";
    case TraceFamily::induced_sign: return "induced_sign";
    case TraceFamily::induced_trivial: return "induced_trivial";
    case TraceFamily::power_sum: return "power_sum";
    case TraceFamily::monomial: return "monomial";
    case TraceFamily::forgotten: return "forgotten";
    }
    return "?";
}

TraceFamily parse_family(std::string_view name) {
    static const std::pair<std::string_view, TraceFamily> aliases[] = {
        {"irreducible", TraceFamily::irreducible}, {"chi", TraceFamily::irreducible},
        {"induced_sign", TraceFamily::induced_sign}, {"eps", TraceFamily::induced_sign},
        {"induced_trivial", TraceFamily::induced_trivial}, {"eta", TraceFamily::induced_trivial},
        {"power_sum", TraceFamily::power_sum}, {"psi", TraceFamily::power_sum},
        {"monomial", TraceFamily::monomial}, {"phi", TraceFamily::monomial},
        {"forgotten", TraceFamily::forgotten}, {"gamma", TraceFamily::forgotten},
    };
    for (const auto& [alias, f] : aliases)
        if (alias == name) return f;
    throw std::invalid_argument("unknown trace family: " + std::string(name));
}

Basis frobenius_image(TraceFamily f) {
    switch (f) {
    case TraceFamily::irreducible: return Basis::schur;
    case TraceFamily::induced_sign: return Basis::elementary;
    case TraceFamily::induced_trivial: return Basis::homogeneous;
    case TraceFamily::power_sum: return Basis::power_sum;
    case TraceFamily::monomial: return Basis::monomial;
    case TraceFamily::forgotten: return Basis::forgotten;
    }
    throw std::logic_error("unreachable");
}

TraceVector named_trace(TraceFamily family, const Partition& lambda) {
    check_degree(lambda.size());
    const int n = lambda.size();
    switch (family) {
    case TraceFamily::irreducible:
        return irreducible_character(lambda);
    case TraceFamily::power_sum: {
        TraceVector psi(n);
        std::vector<Rational> values(psi.values());
        values[partition_index(lambda)] = Rational(z_value(lambda));
        return TraceVector(n, std::move(values));
    }
    default:
        return inverse_frobenius(SymmetricFunction::basis_element(frobenius_image(family), lambda));
    }
}

// ---- Frobenius and basis changes ----------------------------------------

SymmetricFunction frobenius(const TraceVector& theta) {
    const auto& parts = partitions_of(theta.degree());
    std::vector<Rational> coeffs(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) coeffs[i] = theta.at(i) / Rational(z_value(parts[i]));
    return SymmetricFunction(theta.degree(), Basis::power_sum, std::move(coeffs));
}

TraceVector inverse_frobenius(const SymmetricFunction& sf) {
    const SymmetricFunction p = to_power_basis(sf);
    const auto& parts = partitions_of(sf.degree());
    std::vector<Rational> values(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) values[i] = p.coeffs()[i] * Rational(z_value(parts[i]));
    return TraceVector(sf.degree(), std::move(values));
}

SymmetricFunction to_power_basis(const SymmetricFunction& sf) {
    if (sf.basis() == Basis::power_sum) return sf;
    return SymmetricFunction(sf.degree(), Basis::power_sum, apply(to_p_matrix(sf.degree(), sf.basis()), sf.coeffs()));
}

SymmetricFunction convert(const SymmetricFunction& sf, Basis target) {
    if (sf.basis() == target) return sf;
    const SymmetricFunction p = to_power_basis(sf);
    if (target == Basis::power_sum) return p;
    return SymmetricFunction(sf.degree(), target, apply(from_p_matrix(sf.degree(), target), p.coeffs()));
}

SymmetricFunction omega(const SymmetricFunction& sf) {
    SymmetricFunction p = to_power_basis(sf);
    const auto& parts = partitions_of(sf.degree());
    std::vector<Rational> coeffs(p.coeffs());
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (sign_of(parts[i]) < 0) coeffs[i] = -coeffs[i];
    return convert(SymmetricFunction(sf.degree(), Basis::power_sum, std::move(coeffs)), sf.basis());
}

SymmetricFunction multiply(const SymmetricFunction& a, const SymmetricFunction& b) {
    const SymmetricFunction pa = to_power_basis(a), pb = to_power_basis(b);
    const auto& pa_parts = partitions_of(a.degree());
    const auto& pb_parts = partitions_of(b.degree());
    SymmetricFunction out(a.degree() + b.degree(), Basis::power_sum);
    std::vector<Rational> coeffs(out.coeffs());
    for (std::size_t i = 0; i < pa_parts.size(); ++i) {
        if (pa.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < pb_parts.size(); ++j) {
            if (pb.coeffs()[j] == 0) continue;
            coeffs[partition_index(merge(pa_parts[i], pb_parts[j]))] += pa.coeffs()[i] * pb.coeffs()[j];
        }
    }
    return SymmetricFunction(out.degree(), Basis::power_sum, std::move(coeffs));
}

TraceVector theta_level(int n, int l) {
    check_degree(n);
    if (l < 1 || l > n) throw std::invalid_argument("theta_level requires 1 <= l <= n");
    SymmetricFunction sum(n, Basis::monomial);
    std::vector<Rational> coeffs(sum.coeffs());
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].length() == l) coeffs[i] = 1;
    return inverse_frobenius(SymmetricFunction(n, Basis::monomial, std::move(coeffs)));
}

HookThetaExpansion hook_in_theta_basis(int n, int k) {
    check_degree(n);
    if (k < 1 || k > n) throw std::invalid_argument("hook_in_theta_basis requires 1 <= k <= n");
    HookThetaExpansion out;
    out.n = n;
    out.k = k;
    for (int l = 1; l <= n; ++l) out.coeffs.push_back(binomial(l - 1, n - k));
    if (k >= 2) {
        const Integer dim = binomial(n - 1, k - 1);
        for (int l = 1; l <= n; ++l) {
            if (l <= n - k) {
                out.diff.emplace_back(0);
            } else if (l == n - k + 1) {
                out.diff.emplace_back(Integer(1), dim);
            } else {
                Rational c(binomial(l - 1, n - k) * (n - l), dim * (k - 1));
                c.canonicalize();
                out.diff.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace immkit
