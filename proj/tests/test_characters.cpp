#include <doctest.h>

#include "immkit/characters.hpp"
#include "oracles.hpp"

using namespace immkit;

TEST_CASE("character table matches the Jacobi-Trudi reference") {
    for (int n = 1; n <= 6; ++n) {
        const auto& table = character_table(n);
        const auto& parts = partitions_of(n);
        for (std::size_t l = 0; l < parts.size(); ++l)
            for (std::size_t m = 0; m < parts.size(); ++m)
                CHECK(Rational(table[l][m]) == oracle::character(parts[l], parts[m]));
    }
}

TEST_CASE("small character values") {
    CHECK(irreducible_character(Partition{2, 1}).at(Partition{2, 1}) == 0);
    CHECK(irreducible_character(Partition{2, 1}).at(Partition{3}) == -1);
    CHECK(irreducible_character(Partition{3, 1}).at_identity() == 3);
    CHECK(irreducible_character(Partition{2, 2}).at(Partition{2, 2}) == 2);
    CHECK(irreducible_character(Partition{1, 1, 1, 1}).at(Partition{2, 1, 1}) == -1);
}

TEST_CASE("row and column orthogonality, degrees") {
    for (int n = 1; n <= 7; ++n) {
        const auto& table = character_table(n);
        const auto& parts = partitions_of(n);
        const std::size_t p = parts.size();
        for (std::size_t a = 0; a < p; ++a) {
            CHECK(table[a].back() == syt_count(parts[a]));
            for (std::size_t b = 0; b < p; ++b) {
                Rational rows = 0, cols = 0;
                for (std::size_t m = 0; m < p; ++m) rows += Rational(table[a][m] * table[b][m]) / Rational(z_value(parts[m]));
                for (std::size_t l = 0; l < p; ++l) cols += Rational(table[l][a] * table[l][b]);
                CHECK(rows == (a == b ? 1 : 0));
                CHECK(cols == (a == b ? Rational(z_value(parts[a])) : Rational(0)));
            }
        }
    }
}

TEST_CASE("named traces at the identity and basic identities") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            // eps^lambda(e) = eta^lambda(e) = n!/prod lambda_i!
            Integer index = factorial(n);
            for (int part : lambda.parts()) index /= factorial(part);
            CHECK(named_trace(TraceFamily::induced_sign, lambda).at_identity() == Rational(index));
            CHECK(named_trace(TraceFamily::induced_trivial, lambda).at_identity() == Rational(index));
            CHECK(named_trace(TraceFamily::irreducible, lambda) == irreducible_character(lambda));
            // psi^lambda is z_lambda times the class indicator.
            const auto psi = named_trace(TraceFamily::power_sum, lambda);
            for (const auto& mu : partitions_of(n))
                CHECK(psi.at(mu) == (mu == lambda ? Rational(z_value(lambda)) : Rational(0)));
        }
    // eps^{(n)} is the sign character, eta^{(n)} the trivial one.
    const auto sgn = named_trace(TraceFamily::induced_sign, Partition{3});
    CHECK(sgn.at(Partition{2, 1}) == -1);
    CHECK(sgn.at(Partition{3}) == 1);
    CHECK(named_trace(TraceFamily::induced_trivial, Partition{3}).at(Partition{2, 1}) == 1);
}

TEST_CASE("Frobenius roundtrips and basis conversions") {
    for (int n = 1; n <= 6; ++n) {
        for (Basis b : {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::power_sum, Basis::schur,
                        Basis::forgotten}) {
            for (const auto& lambda : partitions_of(n)) {
                auto sf = SymmetricFunction::basis_element(b, lambda);
                CHECK(frobenius(inverse_frobenius(sf)) == to_power_basis(sf));
                for (Basis c : {Basis::monomial, Basis::schur, Basis::elementary})
                    CHECK(convert(convert(sf, c), b) == sf);
            }
        }
        for (const auto& lambda : partitions_of(n)) {
            auto chi = irreducible_character(lambda);
            CHECK(inverse_frobenius(frobenius(chi)) == chi);
            CHECK(convert(frobenius(chi), Basis::schur) == SymmetricFunction::basis_element(Basis::schur, lambda));
            CHECK(convert(SymmetricFunction::basis_element(Basis::homogeneous, lambda), Basis::monomial).coefficient(lambda) >= 1);
        }
    }
}

TEST_CASE("Schur functions in the power-sum basis match Jacobi-Trudi") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto s = to_power_basis(SymmetricFunction::basis_element(Basis::schur, lambda));
            auto ref = oracle::schur_in_p(lambda);
            for (const auto& mu : partitions_of(n)) {
                auto it = ref.find(mu.parts());
                CHECK(s.coefficient(mu) == (it == ref.end() ? Rational(0) : it->second));
            }
        }
}

TEST_CASE("h expands in Schur functions with Kostka coefficients") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto h = convert(SymmetricFunction::basis_element(Basis::homogeneous, mu), Basis::schur);
            for (const auto& lambda : partitions_of(n)) CHECK(h.coefficient(lambda) == Rational(kostka(lambda, mu)));
        }
}

TEST_CASE("omega swaps e and h, s_lambda and s_lambda', m and f") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto e = SymmetricFunction::basis_element(Basis::elementary, lambda);
            auto h = SymmetricFunction::basis_element(Basis::homogeneous, lambda);
            CHECK(to_power_basis(omega(e)) == to_power_basis(h));
            auto s = SymmetricFunction::basis_element(Basis::schur, lambda);
            CHECK(convert(omega(s), Basis::schur) == SymmetricFunction::basis_element(Basis::schur, transpose(lambda)));
            auto m = SymmetricFunction::basis_element(Basis::monomial, lambda);
            auto f = SymmetricFunction::basis_element(Basis::forgotten, lambda);
            CHECK(to_power_basis(omega(m)) == to_power_basis(f));
        }
}

TEST_CASE("multiplication of basis elements") {
    auto e1 = SymmetricFunction::basis_element(Basis::elementary, Partition{1});
    auto e11 = multiply(e1, e1);
    CHECK(convert(e11, Basis::schur) ==
          SymmetricFunction(2, Basis::schur, {Rational(1), Rational(1)}));
    auto h2 = SymmetricFunction::basis_element(Basis::homogeneous, Partition{2});
    auto h21 = multiply(h2, SymmetricFunction::basis_element(Basis::homogeneous, Partition{1}));
    CHECK(to_power_basis(h21) == to_power_basis(SymmetricFunction::basis_element(Basis::homogeneous, Partition{2, 1})));
}

TEST_CASE("hooks expand in theta levels with binomial coefficients") {
    for (int n = 1; n <= 7; ++n) {
        TraceVector total(n);
        for (int l = 1; l <= n; ++l) total += theta_level(n, l);
        // The theta levels add up to the sum of all monomial traces, whose image is h_n.
        CHECK(frobenius(total) == to_power_basis(SymmetricFunction::basis_element(Basis::homogeneous, Partition{n})));
        for (int k = 1; k <= n; ++k) {
            auto exp = hook_in_theta_basis(n, k);
            TraceVector sum(n);
            for (int l = 1; l <= n; ++l) sum += Rational(exp.coeffs[static_cast<std::size_t>(l - 1)]) * theta_level(n, l);
            CHECK(sum == irreducible_character(Partition::hook(n, k)));
        }
    }
    CHECK_THROWS_AS(theta_level(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(hook_in_theta_basis(3, 4), std::invalid_argument);
}

TEST_CASE("closed form of the normalized hook differences") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 2; k <= n; ++k) {
            auto hi = hook_in_theta_basis(n, k);
            auto lo = hook_in_theta_basis(n, k - 1);
            for (int l = 1; l <= n; ++l) {
                const auto i = static_cast<std::size_t>(l - 1);
                Rational direct = Rational(hi.coeffs[i]) / Rational(binomial(n - 1, k - 1)) -
                                  Rational(lo.coeffs[i]) / Rational(binomial(n - 1, k - 2));
                CHECK(hi.diff[i] == direct);
                CHECK(hi.diff[i] >= 0);
            }
        }
    CHECK(hook_in_theta_basis(3, 1).diff.empty());
}

TEST_CASE("trace and family parsing") {
    CHECK(parse_family("chi") == TraceFamily::irreducible);
    CHECK(parse_family("eps") == TraceFamily::induced_sign);
    CHECK(parse_family("eta") == TraceFamily::induced_trivial);
    CHECK(parse_family("psi") == TraceFamily::power_sum);
    CHECK(parse_family("phi") == TraceFamily::monomial);
    CHECK(parse_family("gamma") == TraceFamily::forgotten);
    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
    CHECK(parse_basis("s") == Basis::schur);
    CHECK_THROWS_AS(parse_basis("q"), std::invalid_argument);
    CHECK_THROWS_AS(TraceVector(3, {Rational(1)}), std::invalid_argument);
}
