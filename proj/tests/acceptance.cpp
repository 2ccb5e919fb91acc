// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "immkit/characters.hpp"
#include "immkit/chromatic.hpp"
#include "immkit/harness.hpp"
#include "immkit/immanant.hpp"
#include "immkit/network.hpp"
#include "immkit/poset.hpp"
#include "immkit/ptableau.hpp"
#include "immkit/rng.hpp"
#include "oracles.hpp"

using namespace immkit;

namespace {

struct Outcome {
    bool passed = true;
    std::uint64_t cases = 0;
    std::vector<std::string> notes;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok || !passed) {
            passed = passed && ok;
            return;
        }
        passed = false;
        first_failure = what;
    }
};

const TraceFamily kFamilies[] = {TraceFamily::irreducible, TraceFamily::induced_sign, TraceFamily::induced_trivial,
                                 TraceFamily::power_sum,   TraceFamily::monomial,     TraceFamily::forgotten};

ExactMatrix random_tnn(Rng& rng, int min_n, int max_n) {
    const int n = static_cast<int>(rng.uniform(min_n, max_n));
    const int depth = static_cast<int>(rng.uniform(n, 3 * n));
    return path_matrix(random_tnn_network(n, depth, rng));
}

Outcome main_theorem() {
    Outcome o;
    HookChainOptions h;
    h.include_trials = false;
    h.trials = 500;
    for (int n = 3; n <= 6; ++n) {
        h.n = n;
        h.depth = 3 * n;
        h.seed = 1000 + static_cast<std::uint64_t>(n);
        auto r = verify_hook_chain(h);
        o.cases += 500;
        if (!r.passed) o.expect(false, "network n=" + std::to_string(n) + ": " + r.json["failures"][0].dump());
        o.notes.push_back("n=" + std::to_string(n) + " family counts checked " +
                          r.json["summary"]["family_counts_checked"].dump() + ", skipped " +
                          r.json["summary"]["family_counts_skipped"].dump());
    }
    h.source = MatrixSource::poset;
    h.trials = 0;
    std::uint64_t uios = 0;
    for (int n = 1; n <= 6; ++n) {
        h.n = n;
        auto r = verify_hook_chain(h);
        uios += r.json["trials"].get<std::uint64_t>();
        if (!r.passed) o.expect(false, "poset n=" + std::to_string(n) + ": " + r.json["failures"][0].dump());
    }
    o.cases += uios;
    o.notes.push_back(std::to_string(uios) + " unit interval orders");
    // Endpoints against the Leibniz expansion on a sample.
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::substream(7, static_cast<std::uint64_t>(i));
        const auto a = random_tnn(rng, 2, 6);
        const auto chain = hook_chain(a);
        o.expect(chain.front() == oracle::per(a) && chain.back() == oracle::det(a), "endpoint oracle");
    }
    return o;
}

Outcome lemma() {
    Outcome o;
    LemmaOptions l;
    l.exhaustive_max_n = 5;
    l.random_count = 200;
    l.random_min_n = 6;
    l.random_max_n = 7;
    l.seed = 2;
    auto r = verify_lemma(l);
    o.cases = r.json["identities_checked"].get<std::uint64_t>();
    o.expect(r.passed, r.json["failures"].empty() ? "" : r.json["failures"][0].dump());
    o.expect(r.json["exhaustive_posets"] == 87, "87 posets on at most five elements");
    o.expect(enumerate_posets(5).size() == 63, "63 classes on five elements");
    // Standard hook tableaux counted among all fillings.
    for (const auto& p : enumerate_posets(5))
        for (int k = 1; k <= 5; ++k) {
            unsigned long count = 0;
            for (const auto& u : enumerate_ptableaux(p, Partition::hook(5, k), TableauKind::any)) count += is_standard(p, u);
            o.expect(Integer(count) == chi_hook_eval(p, k), "hook tableaux among all fillings");
        }
    o.notes.push_back(r.json["exhaustive_posets"].dump() + " exhaustive + " + r.json["random_posets"].dump() +
                      " random posets, injection domain " + r.json["injection_domain_size"].dump());
    return o;
}

Outcome lmw() {
    Outcome o;
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::substream(3, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, 5));
        const auto a = oracle::random_matrix(n, rng);
        for (const auto& lambda : partitions_of(n)) {
            const auto eps = named_trace(TraceFamily::induced_sign, lambda);
            const auto eta = named_trace(TraceFamily::induced_trivial, lambda);
            const Rational e = immanant(eps, a), t = immanant(eta, a);
            o.expect(e == lmw_sign(lambda, a), "eps " + lambda.to_string());
            o.expect(t == lmw_trivial(lambda, a), "eta " + lambda.to_string());
            o.expect(e == oracle::leibniz(a, [&](const std::vector<int>& w) { return eps.at(oracle::cycles(w)); }),
                     "eps Leibniz");
            o.expect(t == oracle::leibniz(a, [&](const std::vector<int>& w) { return eta.at(oracle::cycles(w)); }),
                     "eta Leibniz");
        }
    }
    return o;
}

Outcome hook_kostka() {
    Outcome o;
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& mu : partitions_of(n)) {
                const Integer expected = binomial(mu.length() - 1, n - k);
                const auto hook = Partition::hook(n, k);
                o.expect(oracle::kostka(hook, mu) == expected, "oracle " + hook.to_string() + " " + mu.to_string());
                o.expect(kostka(hook, mu) == expected, "library " + hook.to_string() + " " + mu.to_string());
            }
    o.expect(oracle::kostka(Partition{4, 1, 1}, Partition{2, 2, 1, 1}) == 3, "K_{411,2211}");
    o.expect(oracle::kostka(Partition{4, 1, 1}, Partition{3, 1, 1, 1}) == 3, "K_{411,3111}");
    return o;
}

Outcome bruhat_colorings() {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_uios(n)) {
            const auto r = algorithm_P_to_C(p);
            const auto g = incomparability_graph(p);
            o.expect(oracle::bruhat_down(r.w.images()).size() == r.ideal.size(), "ideal size");
            for (const auto& lambda : partitions_of(n)) {
                const auto eps = named_trace(TraceFamily::induced_sign, lambda);
                Rational sum = 0;
                for (const auto& v : r.ideal) sum += eps.at(v.cycle_type());
                o.expect(sum == Rational(oracle::colorings(g, lambda)), "ideal sum " + lambda.to_string());
            }
        }
    const auto p = fixtures::staircase_poset();
    o.expect(beta_statistic(p) == std::vector<int>{-2, -1, 0, 1, 2}, "beta of the example");
    o.expect(algorithm_P_to_C(p).w.to_string() == "34521", "w of the example");
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 7; ++n) {
        const auto uios = enumerate_uios(n);
        o.expect(static_cast<long>(uios.size()) == catalan[n], "Catalan " + std::to_string(n));
        std::set<Permutation> ws;
        for (const auto& q : uios) {
            const auto w = uio_permutation(q);
            o.expect(avoids_312(w), "312-avoiding");
            ws.insert(w);
        }
        o.expect(ws.size() == uios.size(), "injective");
    }
    return o;
}

std::vector<fixtures::Weights> weight_samples() {
    std::vector<fixtures::Weights> out;
    out.push_back({1, 1, 1, 1, 1, 1, 1, 1});
    out.push_back({2, 3, 5, 7, 11, 13, 17, 19});
    out.push_back({make_rational(1, 2), make_rational(2, 3), 0, make_rational(5, 4), 1, make_rational(3, 7), 2,
                   make_rational(9, 2)});
    return out;
}

Outcome network_identities() {
    Outcome o;
    const PathFamily pi{{{4, 9}, {2, 6, 13}, {1, 5, 11, 12}}};
    const PathFamily rho{{{4, 9}, {2, 5, 11, 13}, {1, 6, 12}}};
    const PathFamily sigma{{{4, 9}, {3, 7, 13}, {1, 6, 12}}};
    const PathFamily tau{{{4, 9}, {2, 6, 13}, {1, 6, 12}}};
    for (const auto& w : weight_samples()) {
        const auto f = fixtures::three_source_network(w);
        const auto a = path_matrix(f);
        o.expect(a == fixtures::three_source_matrix(w), "entry formulas");
        o.expect(determinant(a) == w.f * w.d * w.g, "det = fdg");
        o.expect(oracle::det(a) == w.f * w.d * w.g, "det = fdg by Leibniz");
        const auto groups = families_by_skeleton(f);
        const auto& k1 = groups.at(skeleton_of(pi));
        o.expect(k1.size() == 2 && std::count(k1.begin(), k1.end(), pi) == 1 && std::count(k1.begin(), k1.end(), rho) == 1,
                 "skeleton class {pi, rho}");
    }
    {
        const auto f = fixtures::three_source_network(weight_samples()[0]);
        const auto theta2 = theta_level(3, 2);
        Rational total = 0;
        int tableaux = 0;
        for (const auto* fam : {&pi, &rho, &sigma, &tau}) {
            const auto p = family_poset(f, *fam).poset;
            total += trace_of_graph(theta2, incomparability_graph(p));
            for (const auto& u : enumerate_ptableaux(p, Partition{3}, TableauKind::row_semistrict))
                tableaux += records(p, u) == 2;
        }
        o.expect(total == 7 && tableaux == 7, "theta^2 count 7");
    }
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::substream(6, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, 4));
        const auto f = random_tnn_network(n, static_cast<int>(rng.uniform(0, 8)), rng);
        const auto a = path_matrix(f);
        for (auto fam : kFamilies)
            for (const auto& lambda : partitions_of(n)) {
                const auto theta = named_trace(fam, lambda);
                o.expect(immanant_via_network(theta, f) ==
                             oracle::leibniz(a, [&](const std::vector<int>& w) { return theta.at(oracle::cycles(w)); }),
                         std::string(family_name(fam)) + ":" + lambda.to_string());
            }
    }
    o.notes.push_back("a_{3,2} checked as d+e+f; the displayed e+f omits the path through u -> y");
    return o;
}

Outcome nonnegativity() {
    Outcome o;
    for (int i = 0; i < 300; ++i) {
        Rng rng = Rng::substream(4, static_cast<std::uint64_t>(i));
        const auto a = random_tnn(rng, 2, 6);
        const int n = a.size();
        const auto sums = class_sums(a);
        const Rational per = oracle::per(a), det = oracle::det(a);
        for (const auto& lambda : partitions_of(n)) {
            const auto chi = irreducible_character(lambda);
            const Rational v = immanant_from_class_sums(chi, sums);
            o.expect(v >= 0, "chi immanant >= 0");
            o.expect(det <= v / chi.at_identity() && v / chi.at_identity() <= per, "det <= normalized <= per");
        }
        for (int len = 1; len <= n; ++len) {
            Rational sum = 0;
            for (const auto& mu : partitions_of(n))
                if (mu.length() == len) sum += immanant_from_class_sums(named_trace(TraceFamily::monomial, mu), sums);
            o.expect(sum >= 0, "monomial sum by length >= 0");
        }
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_uios(n)) {
            const auto a = antiadjacency(algorithm_P_to_C(p).labeled);
            const auto sums = class_sums(a);
            for (const auto& lambda : partitions_of(n))
                o.expect(immanant_from_class_sums(named_trace(TraceFamily::monomial, lambda), sums) >= 0,
                         "monomial immanant of an antiadjacency matrix");
        }
    return o;
}

Outcome characters() {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        const auto& ps = partitions_of(n);
        const auto& table = character_table(n);
        for (std::size_t a = 0; a < ps.size(); ++a) {
            for (std::size_t b = 0; b < ps.size(); ++b) {
                Rational sum = 0;
                for (std::size_t m = 0; m < ps.size(); ++m)
                    sum += Rational(table[a][m] * table[b][m]) / Rational(z_value(ps[m]));
                o.expect(sum == (a == b ? 1 : 0), "orthogonality");
            }
            o.expect(table[a].back() == syt_count(ps[a]), "degree");
            if (n <= 6)
                for (std::size_t m = 0; m < ps.size(); ++m)
                    o.expect(Rational(table[a][m]) == oracle::character(ps[a], ps[m]), "Jacobi-Trudi oracle");
        }
        for (auto fam : kFamilies)
            for (const auto& lambda : ps) {
                const auto theta = named_trace(fam, lambda);
                o.expect(inverse_frobenius(frobenius(theta)) == theta, "Frobenius roundtrip");
            }
    }
    std::uint64_t printed = 0;
    for (int n = 2; n <= 10; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto diff = hook_in_theta_basis(n, k).diff;
            for (int l = 1; l <= n; ++l) {
                const Rational direct = Rational(binomial(l - 1, n - k)) / Rational(binomial(n - 1, k - 1)) -
                                        Rational(binomial(l - 1, n - k + 1)) / Rational(binomial(n - 1, k - 2));
                o.expect(diff[static_cast<std::size_t>(l - 1)] == direct, "c_{k,l} closed form");
                if (l >= n - k + 2 && make_rational(n - l, l - (n - k + 1)) != direct) ++printed;
            }
        }
    o.notes.push_back("informational: the uncorrected third case (n-l)/(l-(n-k+1)) disagrees on " +
                      std::to_string(printed) + " of the (n,k,l) triples");
    return o;
}

Outcome suite_budget() {
    Outcome o;
    using clock = std::chrono::steady_clock;
    auto timed = [&](SuiteLevel level, int threads, double& seconds) {
        SuiteOptions s;
        s.level = level;
        s.seed = 9;
        s.threads = threads;
        const auto start = clock::now();
        auto r = run_suite(s);
        seconds = std::chrono::duration<double>(clock::now() - start).count();
        o.expect(r.passed, "suite checks: " + r.json["failed_checks"].dump());
        return r.json.dump();
    };
    double quick = 0, quick2 = 0, full = 0, full2 = 0;
    const auto q1 = timed(SuiteLevel::quick, 1, quick);
    const auto q2 = timed(SuiteLevel::quick, 2, quick2);
    const auto f1 = timed(SuiteLevel::full, 1, full);
    const auto f2 = timed(SuiteLevel::full, 2, full2);
    o.expect(quick < 300 && quick2 < 300, "quick under 5 minutes");
    o.expect(full < 3600 && full2 < 3600, "full under 1 hour");
    o.expect(q1 == q2, "quick deterministic");
    o.expect(f1 == f2, "full deterministic");
    char buf[160];
    std::snprintf(buf, sizeof buf, "quick %.2fs, full %.2fs (one thread)", quick, full);
    o.notes.emplace_back(buf);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hook immanant chain on TNN matrices and antiadjacency matrices", main_theorem},
        {"hook difference identity and the injection", lemma},
        {"ordered block sums for induced sign and trivial immanants", lmw},
        {"hook Kostka numbers are binomial coefficients", hook_kostka},
        {"Bruhat ideals count colorings, Catalan many unit interval orders", bruhat_colorings},
        {"three-source network and immanants from path families", network_identities},
        {"nonnegativity on TNN samples", nonnegativity},
        {"character table, Frobenius map and theta coefficients", characters},
        {"suite runtime budget and determinism", suite_budget},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.passed;
        std::printf("[%s] criterion %zu: %s (%llu cases, %.1fs)\n", o.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), static_cast<unsigned long long>(o.cases), secs);
        for (const auto& note : o.notes) std::printf("       %s\n", note.c_str());
        if (!o.passed) std::printf("       first failure: %s\n", o.first_failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
    return all ? 0 : 1;
}
