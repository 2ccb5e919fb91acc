#include <doctest.h>

#include "immkit/errors.hpp"
#include "immkit/immanant.hpp"
#include "oracles.hpp"

using namespace immkit;

namespace {

ExactMatrix ones(int n) {
    ExactMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 1;
    return a;
}

ExactMatrix diagonal(std::initializer_list<long> d) {
    ExactMatrix a(static_cast<int>(d.size()));
    int i = 0;
    for (long v : d) a(i, i) = v, ++i;
    return a;
}

}  // namespace

TEST_CASE("determinant and permanent against the Leibniz expansion") {
    Rng rng(11);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            auto a = oracle::random_matrix(n, rng);
            CHECK(determinant(a) == oracle::det(a));
            CHECK(permanent(a) == oracle::per(a));
        }
    CHECK(determinant(ExactMatrix::identity(5)) == 1);
    CHECK(permanent(ExactMatrix::identity(5)) == 1);
    CHECK(permanent(ones(2)) == 2);
    CHECK(permanent(ones(4)) == 24);
    CHECK(determinant(ExactMatrix{{1, 2, 1}, {1, 4, 4}, {0, 3, 5}}) == 1);
    CHECK(determinant(ExactMatrix{{1, 2, 1}, {1, 4, 4}, {0, 2, 5}}) == 4);
    CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(ExactMatrix{{make_rational(1, 2), 1}, {1, make_rational(1, 3)}}) == make_rational(-5, 6));
}

TEST_CASE("immanants with sign and trivial traces are det and per") {
    Rng rng(12);
    for (int n = 1; n <= 6; ++n) {
        auto sgn = named_trace(TraceFamily::induced_sign, Partition{n});
        auto triv = named_trace(TraceFamily::induced_trivial, Partition{n});
        for (int t = 0; t < 3; ++t) {
            auto a = oracle::random_matrix(n, rng);
            CHECK(immanant(sgn, a) == determinant(a));
            CHECK(immanant(triv, a) == permanent(a));
        }
        CHECK(immanant(sgn, ExactMatrix::identity(n)) == 1);
    }
}

TEST_CASE("immanants agree with the definition for every irreducible character") {
    Rng rng(13);
    for (int n = 1; n <= 5; ++n) {
        auto a = oracle::random_matrix(n, rng);
        for (const auto& lambda : partitions_of(n)) {
            auto chi = irreducible_character(lambda);
            Rational expected = oracle::leibniz(a, [&](const std::vector<int>& w) { return chi.at(oracle::cycles(w)); });
            CHECK(immanant(chi, a) == expected);
            CHECK(immanant(chi, ExactMatrix::identity(n)) == Rational(syt_count(lambda)));
        }
    }
}

TEST_CASE("immanants are linear in the trace") {
    Rng rng(14);
    auto a = oracle::random_matrix(4, rng);
    auto x = irreducible_character(Partition{3, 1});
    auto y = named_trace(TraceFamily::monomial, Partition{2, 1, 1});
    Rational p = make_rational(2, 3), q = make_rational(-5, 2);
    CHECK(immanant(p * x + q * y, a) == p * immanant(x, a) + q * immanant(y, a));
}

TEST_CASE("induced character immanants equal ordered block sums") {
    Rng rng(15);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 4; ++t) {
            auto a = oracle::random_matrix(n, rng);
            for (const auto& lambda : partitions_of(n)) {
                CHECK(lmw_sign(lambda, a) == immanant(named_trace(TraceFamily::induced_sign, lambda), a));
                CHECK(lmw_trivial(lambda, a) == immanant(named_trace(TraceFamily::induced_trivial, lambda), a));
            }
        }
    CHECK(lmw_sign(Partition{1, 1, 1}, diagonal({2, 3, 5})) == 6 * 30);
    CHECK(lmw_trivial(Partition{1, 1, 1}, diagonal({2, 3, 5})) == 6 * 30);
    CHECK(lmw_sign(Partition{2, 1}, ones(3)) == 0);
    CHECK(lmw_trivial(Partition{2, 1}, ones(3)) == 6);
    CHECK(lmw_sign(Partition{3}, ones(3)) == 0);
}

TEST_CASE("normalized immanants and hook chains") {
    CHECK(normalized_immanant(irreducible_character(Partition{2, 1}), ExactMatrix::identity(3)) == 1);
    auto zero_at_identity = irreducible_character(Partition{2, 1}) - irreducible_character(Partition{2, 1});
    CHECK_THROWS_AS(normalized_immanant(zero_at_identity, ExactMatrix::identity(3)), DivisionByZeroError);
    CHECK(hook_chain(ones(2)) == std::vector<Rational>{2, 0});
    CHECK(hook_chain(ExactMatrix::identity(4)) == std::vector<Rational>(4, Rational(1)));
    auto a = ExactMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
    auto chain = hook_chain(a);
    CHECK(chain.front() == permanent(a));
    CHECK(chain.back() == determinant(a));
    CHECK(chain[1] == immanant(irreducible_character(Partition{2, 1}), a) / 2);
}

TEST_CASE("class sums respect the cap") {
    CHECK_THROWS_AS(class_sums(ExactMatrix::identity(4), 3), ResourceLimitError);
    auto sums = class_sums(ones(3));
    CHECK(sums == std::vector<Rational>{2, 3, 1});
}

TEST_CASE("total nonnegativity scan") {
    CHECK(is_totally_nonnegative(ExactMatrix{{1, 1}, {1, 2}}));
    CHECK(is_totally_positive(ExactMatrix{{1, 1}, {1, 2}}));
    CHECK_FALSE(is_totally_nonnegative(ExactMatrix{{1, 2}, {1, 1}}));
    CHECK(is_totally_nonnegative(ones(3)));
    CHECK_FALSE(is_totally_positive(ones(3)));
    CHECK(principal_minor(ExactMatrix{{2, 1}, {1, 2}}, 0b11) == 3);
}
