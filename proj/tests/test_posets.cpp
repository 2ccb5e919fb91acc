#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "immkit/chromatic.hpp"
#include "immkit/errors.hpp"
#include "immkit/immanant.hpp"
#include "immkit/poset.hpp"
#include "immkit/ptableau.hpp"
#include "oracles.hpp"

using namespace immkit;

namespace {

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

PTableau tableau(std::vector<std::vector<int>> rows_one_based, std::optional<std::pair<int, int>> mark = {}) {
    PTableau u;
    std::vector<int> shape;
    for (auto& row : rows_one_based) {
        for (int& x : row) --x;
        shape.push_back(static_cast<int>(row.size()));
    }
    u.shape = Partition(shape);
    u.rows = std::move(rows_one_based);
    u.mark = mark;
    return u;
}

}  // namespace

TEST_CASE("poset construction closes relations and rejects cycles") {
    auto p = Poset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK(p.relations().size() == 3);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 2}}), std::invalid_argument);
    CHECK(p.naturally_labeled());
    CHECK_FALSE(p.relabel(Permutation({2, 1, 0})).naturally_labeled());
    CHECK(p.induced({2, 0}).less(1, 0));
}

TEST_CASE("unit interval order recognition") {
    CHECK(is_unit_interval_order(Poset::chain(5)));
    CHECK(is_unit_interval_order(Poset::antichain(4)));
    CHECK(is_unit_interval_order(fixtures::staircase_poset()));
    // 1<3<5, 1<4, 2<4, 2<5 has no induced 3+1 or 2+2 either.
    CHECK(is_unit_interval_order(fixtures::tableau_poset()));
    auto three_plus_one = Poset::from_relations(4, {{0, 1}, {1, 2}});
    auto two_plus_two = Poset::from_relations(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_3plus1_free(three_plus_one));
    CHECK_FALSE(is_unit_interval_order(three_plus_one));
    CHECK(is_3plus1_free(two_plus_two));
    CHECK_FALSE(is_unit_interval_order(two_plus_two));
}

TEST_CASE("incomparability graphs") {
    CHECK(incomparability_graph(Poset::chain(4)).edge_count() == 0);
    CHECK(incomparability_graph(Poset::antichain(4)) == Graph::complete(4));
    auto g = incomparability_graph(fixtures::staircase_poset());
    CHECK(g.edge_count() == 7);
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(1, 4));
}

TEST_CASE("permutations and Bruhat order") {
    CHECK(parse_permutation("34521").to_string() == "34521");
    CHECK(parse_permutation("3,4,5,2,1") == parse_permutation("34521"));
    CHECK_THROWS_AS(parse_permutation("112"), std::invalid_argument);
    CHECK(parse_permutation("2,1,3,4,5,6,7,8,10,9").to_string() == "2,1,3,4,5,6,7,8,10,9");
    CHECK(parse_permutation("2314").cycle_type() == Partition{3, 1});
    CHECK(parse_permutation("2314").inverse() == parse_permutation("3124"));
    CHECK(bruhat_leq(parse_permutation("213"), parse_permutation("321")));
    CHECK_FALSE(bruhat_leq(parse_permutation("231"), parse_permutation("312")));
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& w : perms) {
            CHECK(bruhat_leq(Permutation::identity(n), w));
            auto down = oracle::bruhat_down(w.images());
            for (const auto& v : perms) CHECK(bruhat_leq(v, w) == (down.count(v.images()) == 1));
        }
    }
    CHECK(avoids_312(parse_permutation("34521")));
    CHECK_FALSE(avoids_312(parse_permutation("312")));
    CHECK_FALSE(avoids_312(parse_permutation("4132")));
}

TEST_CASE("beta labeling and w(P) on the staircase example") {
    auto p = fixtures::staircase_poset();
    CHECK(beta_statistic(p) == std::vector<int>{-2, -1, 0, 1, 2});
    auto r = algorithm_P_to_C(p);
    CHECK(r.w.to_string() == "34521");
    CHECK(r.labeling == Permutation::identity(5));
    CHECK(avoids_312(r.w));
    for (const auto& v : r.ideal) CHECK(bruhat_leq(v, r.w));
    CHECK(r.ideal.size() == oracle::bruhat_down(r.w.images()).size());
    auto a = antiadjacency(r.labeled);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            bool zero = (i == 0 && j == 3) || (i == 0 && j == 4) || (i == 1 && j == 4);
            CHECK(a(i, j) == (zero ? 0 : 1));
        }
    CHECK(is_totally_nonnegative(a));
}

TEST_CASE("w(P) for chains and antichains") {
    for (int n = 1; n <= 5; ++n) {
        auto chain = algorithm_P_to_C(Poset::chain(n));
        CHECK(chain.w == Permutation::identity(n));
        CHECK(chain.ideal.size() == 1);
        auto anti = algorithm_P_to_C(Poset::antichain(n));
        CHECK(anti.w == Permutation::longest(n));
        CHECK(Integer(static_cast<unsigned long>(anti.ideal.size())) == factorial(n));
        CHECK(antiadjacency(Poset::antichain(n)) == antiadjacency(anti.labeled));
    }
    auto a = antiadjacency(Poset::chain(3));
    CHECK(a == ExactMatrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(algorithm_P_to_C(Poset::from_relations(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(algorithm_P_to_C(Poset::antichain(9)), ResourceLimitError);
    CHECK_THROWS_AS(antiadjacency(Poset::chain(3).relabel(Permutation({2, 1, 0}))), std::invalid_argument);
}

TEST_CASE("unit interval orders are counted by Catalan numbers and give distinct 312-avoiders") {
    for (int n = 1; n <= 7; ++n) {
        auto uios = enumerate_uios(n);
        CHECK(Integer(static_cast<unsigned long>(uios.size())) == catalan(n));
        std::set<Permutation> ws;
        std::set<Poset> classes;
        for (const auto& p : uios) {
            CHECK(is_unit_interval_order(p));
            auto w = uio_permutation(p);
            CHECK(avoids_312(w));
            ws.insert(w);
            if (n <= 6) classes.insert(canonical_form(p));
        }
        CHECK(ws.size() == uios.size());
        if (n <= 6) CHECK(classes.size() == uios.size());
        std::size_t avoiders = 0;
        for (const auto& w : all_permutations(n)) avoiders += avoids_312(w);
        CHECK(avoiders == ws.size());
    }
    CHECK(enumerate_uios(3).size() == 5);
    CHECK(enumerate_uios(4).size() == 14);
}

TEST_CASE("poset enumeration up to isomorphism") {
    const std::size_t expected[] = {1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_posets(7), ResourceLimitError);
    // Unit interval orders among all posets.
    for (int n = 1; n <= 5; ++n) {
        std::size_t uios = 0;
        for (const auto& p : enumerate_posets(n)) uios += is_unit_interval_order(p);
        CHECK(Integer(static_cast<unsigned long>(uios)) == catalan(n));
    }
}

TEST_CASE("summing sign-type traces over the Bruhat ideal counts colorings") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_uios(n)) {
            auto r = algorithm_P_to_C(p);
            auto g = incomparability_graph(p);
            for (const auto& lambda : partitions_of(n)) {
                auto eps = named_trace(TraceFamily::induced_sign, lambda);
                Rational sum = 0;
                for (const auto& v : r.ideal) sum += eps.at(v.cycle_type());
                CHECK(sum == Rational(colorings_of_type(g, lambda)));
            }
        }
}

TEST_CASE("the ideal is the support of the antiadjacency matrix and the matrix is TNN") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_uios(n)) {
            auto r = algorithm_P_to_C(p);
            auto a = antiadjacency(r.labeled);
            std::set<Permutation> ideal(r.ideal.begin(), r.ideal.end());
            for (const auto& v : all_permutations(n)) {
                bool support = true;
                for (int i = 0; i < n; ++i) support = support && a(i, v[static_cast<std::size_t>(i)]) != 0;
                CHECK(support == (ideal.count(v) == 1));
            }
            CHECK(is_totally_nonnegative(a));
        }
}

TEST_CASE("descents and records on hand examples") {
    auto p = fixtures::tableau_poset();
    auto t = tableau({{1, 3}, {2, 4}, {5}});
    auto u = tableau({{1, 2, 3}, {5, 4}});
    auto v = tableau({{3, 1, 2}, {5, 4}});
    auto w = tableau({{5, 4, 1, 2, 3}});
    CHECK(records(p, t) == 5);
    CHECK(descents(p, v) == 1);
    CHECK(is_standard(p, u));
    CHECK_FALSE(is_column_strict(p, t));
    CHECK_FALSE(is_row_semistrict(p, v));
    CHECK(is_column_strict(p, v));
    CHECK(descents(p, w) == 1);
    CHECK(records(p, w) == 1);
    CHECK(records(p, u) == 2);
    CHECK(records(p, v) == 2);
    CHECK(is_row_semistrict(p, t));
    CHECK(is_row_semistrict(p, u));
    CHECK(is_column_strict(p, u));
    CHECK(is_column_strict(p, w));
    CHECK_FALSE(is_standard(p, v));
    auto standard = enumerate_ptableaux(p, Partition{3, 2}, TableauKind::standard);
    CHECK(std::find(standard.begin(), standard.end(), u) != standard.end());
    for (const auto& x : standard) CHECK(is_standard(p, x));
}

TEST_CASE("P-tableau counts for chains, antichains and the trace identities") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(count_ptableaux(Poset::chain(n), lambda, TableauKind::standard) == syt_count(lambda));
            CHECK(count_ptableaux(Poset::antichain(n), lambda, TableauKind::any) == factorial(n));
        }
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(chi_hook_eval(Poset::chain(n), k) == binomial(n - 1, k - 1));
            // No relations: only a single row survives the column condition.
            CHECK(chi_hook_eval(Poset::antichain(n), k) == (k == n ? factorial(n) : Integer(0)));
        }
    // A single column must be a chain of the whole poset.
    CHECK(chi_hook_eval(fixtures::staircase_poset(), 1) == 0);
}

TEST_CASE("P-tableau counts evaluate traces on incomparability graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) {
            auto g = incomparability_graph(p);
            for (const auto& lambda : partitions_of(n)) {
                CHECK(Rational(count_ptableaux(p, transpose(lambda), TableauKind::column_strict)) ==
                      trace_of_graph(named_trace(TraceFamily::induced_sign, lambda), g));
                CHECK(Rational(count_ptableaux(p, lambda, TableauKind::row_semistrict)) ==
                      trace_of_graph(named_trace(TraceFamily::induced_trivial, lambda), g));
                if (lambda.is_hook())
                    CHECK(Rational(chi_hook_eval(p, lambda[0])) == trace_of_graph(irreducible_character(lambda), g));
            }
        }
}

TEST_CASE("marked tableaux and the injection on the worked example") {
    auto p = fixtures::tableau_poset();
    auto c3 = enumerate_ptableaux(p, Partition{3, 1, 1}, TableauKind::standard);
    CHECK(c3.size() == 1);
    CHECK(chi_hook_eval(p, 3) == 1);
    auto first = tableau({{1, 2, 4}, {3}, {5}}, std::make_pair(1, 0));
    auto second = tableau({{1, 2, 4}, {3}, {5}}, std::make_pair(2, 0));
    CHECK(f_k_injection(p, first) == tableau({{1, 3, 2, 4}, {5}}, std::make_pair(0, 1)));
    CHECK(f_k_injection(p, second) == tableau({{1, 2, 5, 4}, {3}}, std::make_pair(0, 2)));
    CHECK(f_k_inverse(p, f_k_injection(p, first)) == first);
    CHECK(f_k_inverse(p, f_k_injection(p, second)) == second);
    // Marked tableaux counted by the difference: e.g. 2 marked in 5|1,3,2,4.
    CHECK(marked_difference_count(p, 4) == 3 * chi_hook_eval(p, 4) - 2 * chi_hook_eval(p, 3));
    CHECK(column_marked_tableaux(p, 4).size() == 2);
    CHECK_THROWS_AS(f_k_injection(p, tableau({{1, 2, 4}, {3}, {5}})), std::invalid_argument);
    CHECK_THROWS_AS(f_k_injection(p, tableau({{1, 2, 4}, {3}, {5}}, std::make_pair(0, 1))), std::invalid_argument);
    CHECK_THROWS_AS(f_k_injection(p, tableau({{2, 1, 4}, {3}, {5}}, std::make_pair(1, 0))), std::invalid_argument);
    CHECK_THROWS_AS(marked_difference_count(p, 1), std::invalid_argument);
}

TEST_CASE("hook difference identity and the injection on all small posets") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n))
            for (int k = 2; k <= n; ++k) {
                const Integer lhs = marked_difference_count(p, k);
                CHECK(lhs == (k - 1) * chi_hook_eval(p, k) - (n - k + 1) * chi_hook_eval(p, k - 1));
                auto domain = column_marked_tableaux(p, k);
                auto target = row_marked_tableaux(p, k);
                CHECK(Integer(static_cast<unsigned long>(domain.size())) == (n - k + 1) * chi_hook_eval(p, k - 1));
                CHECK(Integer(static_cast<unsigned long>(target.size())) == (k - 1) * chi_hook_eval(p, k));
                std::set<PTableau> targets(target.begin(), target.end()), images;
                for (const auto& u : domain) {
                    auto v = f_k_injection(p, u);
                    CHECK(targets.count(v) == 1);
                    CHECK(f_k_inverse(p, v) == u);
                    images.insert(v);
                }
                CHECK(images.size() == domain.size());
                CHECK(Integer(static_cast<unsigned long>(target.size() - images.size())) == lhs);
            }
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) CHECK(marked_difference_count(Poset::chain(n), k) == 0);
}
