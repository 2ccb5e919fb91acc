#include <algorithm>
#include <functional>

#include "immkit/characters.hpp"
#include "immkit/chromatic.hpp"
#include "immkit/harness.hpp"
#include "immkit/immanant.hpp"
#include "immkit/network.hpp"
#include "immkit/poset.hpp"
#include "immkit/ptableau.hpp"
#include "immkit/rng.hpp"
#include "parallel.hpp"

namespace immkit {

namespace {

constexpr std::size_t kStoredFailures = 10;

struct Check {
    std::string module, name;
    bool passed = true;
    std::uint64_t cases = 0;
    Json detail = Json::object();
    Json failures = Json::array();

    // Counts one case; records a witness when ok is false.
    void expect(bool ok, const std::function<Json()>& witness = {}) {
        ++cases;
        if (ok) return;
        passed = false;
        if (failures.size() < kStoredFailures) failures.push_back(witness ? witness() : Json{{"case", cases}});
    }
    void merge(const Check& other) {
        cases += other.cases;
        passed = passed && other.passed;
        for (const auto& f : other.failures)
            if (failures.size() < kStoredFailures) failures.push_back(f);
    }
};

struct Sizes {
    int cap;            // general size limit
    int kostka;         // hook Kostka, syt, majorization order
    int transpose;
    int z_sum;
    int theta_diff;     // second-proof coefficients
    int character;      // orthogonality, Frobenius, Kostka consistency
    int tnn_samples;
    int tnn_n;
    int lmw_matrices;
    int lmw_n;
    int poset_n;        // Bruhat ideals, antiadjacency, monomial nonnegativity
    int uio_n;          // Catalan and 312 avoidance
    int lemma_exhaustive;
    int lemma_random;
    int lemma_min_n, lemma_max_n;
    int graph_n;
    int orientation_n;
    int network_samples;
    int network_n;
    int factor_samples;
    int factor_n;
    int chain_trials;
    int chain_max_n;
    int pate_trials;
};

Sizes sizes_for(SuiteLevel level) {
    if (level == SuiteLevel::quick)
        return {5, 5, 5, 5, 5, 5, 40, 5, 50, 5, 5, 5, 5, 50, 4, 5, 5, 5, 30, 4, 20, 5, 50, 5, 30};
    return {7, 8, 9, 10, 10, 7, 500, 6, 50, 5, 6, 7, 5, 200, 6, 7, 6, 6, 200, 4, 100, 5, 500, 7, 200};
}

// Independent stream per named purpose and index.
Rng stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return Rng::substream(Rng::splitmix64(seed ^ Rng::splitmix64(tag)), index);
}

Rational small_rational(Rng& rng, bool signed_values) {
    const long num = static_cast<long>(rng.uniform(signed_values ? -9 : 0, 9));
    return make_rational(num, static_cast<long>(rng.uniform(1, 4)));
}

ExactMatrix random_rational_matrix(int n, Rng& rng) {
    ExactMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = small_rational(rng, true);
    return a;
}

std::vector<ExactMatrix> tnn_samples(std::uint64_t seed, int count, int min_n, int max_n, int threads) {
    return detail::parallel_map<ExactMatrix>(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        Rng rng = stream(seed, 11, i);
        const int n = static_cast<int>(rng.uniform(min_n, max_n));
        const int depth = static_cast<int>(rng.uniform(n, 3 * n));
        return path_matrix(random_tnn_network(n, depth, rng));
    });
}

Graph random_graph(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(1, 2)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

constexpr TraceFamily kFamilies[] = {TraceFamily::irreducible,   TraceFamily::induced_sign, TraceFamily::induced_trivial,
                                     TraceFamily::power_sum,     TraceFamily::monomial,     TraceFamily::forgotten};

// Trace specs of the monomial traces phi^mu with l(mu) = len.
Json monomial_specs(int n, int len) {
    Json out = Json::array();
    for (const auto& mu : partitions_of(n))
        if (mu.length() == len) out.push_back("phi:" + mu.to_string());
    return out;
}

Json lambda_case(const Partition& lambda) { return Json{{"lambda", to_json(lambda)}}; }

// ---- partitions ----

Check transpose_involution(const Sizes& s) {
    Check c{"partitions", "transpose_involution"};
    for (int n = 1; n <= s.transpose; ++n)
        for (const auto& l : partitions_of(n)) c.expect(transpose(transpose(l)) == l, [&] { return lambda_case(l); });
    return c;
}

Check hook_kostka(const Sizes& s) {
    Check c{"partitions", "hook_kostka"};
    for (int n = 1; n <= s.kostka; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& mu : partitions_of(n))
                c.expect(kostka(Partition::hook(n, k), mu) == binomial(mu.length() - 1, n - k),
                         [&] { return Json{{"k", k}, {"mu", to_json(mu)}}; });
    return c;
}

Check syt_hook_lengths(const Sizes& s) {
    Check c{"partitions", "syt_count"};
    for (int n = 1; n <= s.kostka; ++n)
        for (const auto& l : partitions_of(n))
            c.expect(syt_count(l) == kostka(l, Partition::column(n)), [&] { return lambda_case(l); });
    return c;
}

Check class_sizes(const Sizes& s) {
    Check c{"partitions", "class_sizes"};
    for (int n = 1; n <= s.z_sum; ++n) {
        Integer total = 0;
        for (const auto& l : partitions_of(n)) total += factorial(n) / z_value(l);
        c.expect(total == factorial(n), [&] { return Json{{"n", n}}; });
    }
    return c;
}

Check majorization_order(const Sizes& s) {
    Check c{"partitions", "majorization_order"};
    for (int n = 1; n <= s.kostka; ++n) {
        const auto& ps = partitions_of(n);
        for (const auto& a : ps) {
            c.expect(majorizes(a, a), [&] { return lambda_case(a); });
            for (const auto& b : ps) {
                if (a != b) c.expect(!(majorizes(a, b) && majorizes(b, a)), [&] { return lambda_case(a); });
                if (!majorizes(a, b)) continue;
                for (const auto& d : ps)
                    if (majorizes(b, d)) c.expect(majorizes(a, d), [&] { return lambda_case(d); });
            }
        }
    }
    return c;
}

// ---- characters ----

Check orthogonality(const Sizes& s, bool inject_fault) {
    Check c{"characters", "orthogonality"};
    for (int n = 1; n <= s.character; ++n) {
        auto table = character_table(n);
        if (inject_fault && n == std::min(3, s.character)) table[0][0] += 1;
        const auto& ps = partitions_of(n);
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a; b < ps.size(); ++b) {
                Rational sum = 0;
                for (std::size_t m = 0; m < ps.size(); ++m)
                    sum += Rational(table[a][m] * table[b][m]) / Rational(z_value(ps[m]));
                c.expect(sum == (a == b ? 1 : 0), [&] {
                    return Json{{"lambda", to_json(ps[a])}, {"nu", to_json(ps[b])}, {"inner_product", to_json(sum)}};
                });
            }
        for (std::size_t a = 0; a < ps.size(); ++a)
            c.expect(table[a].back() == syt_count(ps[a]), [&] { return Json{{"dimension", to_json(ps[a])}}; });
    }
    if (inject_fault) c.detail["fault_injected"] = true;
    return c;
}

Check frobenius_roundtrip(const Sizes& s) {
    Check c{"characters", "frobenius_roundtrip"};
    for (int n = 1; n <= s.character; ++n)
        for (auto f : kFamilies)
            for (const auto& l : partitions_of(n)) {
                const auto theta = named_trace(f, l);
                const auto image = frobenius(theta);
                c.expect(inverse_frobenius(image) == theta, [&] { return Json{{"trace", std::string(family_name(f)) + ":" + l.to_string()}}; });
                c.expect(convert(image, frobenius_image(f)) == SymmetricFunction::basis_element(frobenius_image(f), l),
                         [&] { return Json{{"image", std::string(family_name(f)) + ":" + l.to_string()}}; });
            }
    return c;
}

Check kostka_expansions(const Sizes& s) {
    Check c{"characters", "kostka_expansions"};
    for (int n = 1; n <= s.character; ++n) {
        const auto& ps = partitions_of(n);
        const auto& k = kostka_matrix(n);
        for (std::size_t a = 0; a < ps.size(); ++a) {
            TraceVector via_phi(n), via_gamma(n);
            const std::size_t t = partition_index(transpose(ps[a]));
            for (std::size_t m = 0; m < ps.size(); ++m) {
                via_phi += Rational(k[a][m]) * named_trace(TraceFamily::monomial, ps[m]);
                via_gamma += Rational(k[t][m]) * named_trace(TraceFamily::forgotten, ps[m]);
            }
            const auto chi = irreducible_character(ps[a]);
            c.expect(via_phi == chi, [&] { return lambda_case(ps[a]); });
            c.expect(via_gamma == chi, [&] { return lambda_case(ps[a]); });
        }
    }
    return c;
}

Check hook_theta_expansion(const Sizes& s) {
    Check c{"characters", "hook_theta_expansion"};
    for (int n = 1; n <= s.character; ++n)
        for (int k = 1; k <= n; ++k) {
            TraceVector sum(n);
            for (int l = 1; l <= n; ++l) sum += Rational(binomial(l - 1, n - k)) * theta_level(n, l);
            c.expect(sum == irreducible_character(Partition::hook(n, k)), [&] { return Json{{"n", n}, {"k", k}}; });
        }
    return c;
}

Check theta_coefficients(const Sizes& s) {
    Check c{"characters", "theta_difference_coefficients"};
    std::uint64_t printed_mismatch = 0;
    for (int n = 2; n <= s.theta_diff; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto diff = hook_in_theta_basis(n, k).diff;
            for (int l = 1; l <= n; ++l) {
                const Rational direct = Rational(binomial(l - 1, n - k)) / Rational(binomial(n - 1, k - 1)) -
                                        Rational(binomial(l - 1, n - k + 1)) / Rational(binomial(n - 1, k - 2));
                const Rational& closed = diff[static_cast<std::size_t>(l - 1)];
                c.expect(closed == direct && closed >= 0, [&] {
                    return Json{{"n", n}, {"k", k}, {"l", l}, {"closed_form", to_json(closed)}, {"difference", to_json(direct)}};
                });
                if (l >= n - k + 2 && Rational(n - l, l - (n - k + 1)) != direct) ++printed_mismatch;
            }
        }
    c.detail["uncorrected_ratio_mismatches"] = printed_mismatch;
    return c;
}

// ---- immanants ----

Check lmw(const Sizes& s, std::uint64_t seed) {
    Check c{"immanants", "lmw_block_sums"};
    for (int i = 0; i < s.lmw_matrices; ++i) {
        Rng rng = stream(seed, 21, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, s.lmw_n));
        const auto a = random_rational_matrix(n, rng);
        const auto sums = class_sums(a);
        for (const auto& l : partitions_of(n)) {
            const Rational eps = immanant_from_class_sums(named_trace(TraceFamily::induced_sign, l), sums);
            const Rational eta = immanant_from_class_sums(named_trace(TraceFamily::induced_trivial, l), sums);
            c.expect(eps == lmw_sign(l, a), [&] { return Json{{"matrix", to_json(a)}, {"trace", "eps:" + l.to_string()}}; });
            c.expect(eta == lmw_trivial(l, a), [&] { return Json{{"matrix", to_json(a)}, {"trace", "eta:" + l.to_string()}}; });
        }
    }
    return c;
}

Check linearity_and_endpoints(const Sizes& s, std::uint64_t seed) {
    Check c{"immanants", "linearity_and_endpoints"};
    for (int i = 0; i < s.lmw_matrices; ++i) {
        Rng rng = stream(seed, 22, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, std::min(s.cap, 6)));
        const auto a = random_rational_matrix(n, rng);
        const auto& ps = partitions_of(n);
        const auto& l = ps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ps.size()) - 1))];
        const auto& m = ps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ps.size()) - 1))];
        const Rational x = small_rational(rng, true), y = small_rational(rng, true);
        const auto theta = named_trace(TraceFamily::irreducible, l);
        const auto tau = named_trace(TraceFamily::power_sum, m);
        c.expect(immanant(x * theta + y * tau, a) == x * immanant(theta, a) + y * immanant(tau, a),
                 [&] { return Json{{"matrix", to_json(a)}, {"trace", "chi:" + l.to_string()}}; });
        c.expect(immanant(irreducible_character(Partition::column(n)), a) == determinant(a),
                 [&] { return Json{{"matrix", to_json(a)}, {"trace", "chi:" + Partition::column(n).to_string()}}; });
        c.expect(immanant(irreducible_character(Partition{n}), a) == permanent(a),
                 [&] { return Json{{"matrix", to_json(a)}, {"trace", "chi:" + std::to_string(n)}}; });
    }
    return c;
}

Check tnn_inequalities(const std::vector<ExactMatrix>& samples, int threads) {
    auto parts = detail::parallel_map<Check>(samples.size(), threads, [&](std::size_t i) {
        Check c;
        const auto& a = samples[i];
        const int n = a.size();
        const auto sums = class_sums(a);
        const Rational per = permanent(a), det = determinant(a);
        for (const auto& l : partitions_of(n)) {
            const auto chi = irreducible_character(l);
            const Rational v = immanant_from_class_sums(chi, sums);
            const Rational norm = v / chi.at_identity();
            c.expect(v >= 0 && det <= norm && norm <= per, [&] {
                return Json{{"matrix", to_json(a)}, {"trace", "chi:" + l.to_string()}, {"value", to_json(v)}};
            });
        }
        for (int len = 1; len <= n; ++len) {
            Rational sum = 0;
            for (const auto& mu : partitions_of(n))
                if (mu.length() == len) sum += immanant_from_class_sums(named_trace(TraceFamily::monomial, mu), sums);
            c.expect(sum >= 0, [&] {
                return Json{{"matrix", to_json(a)}, {"traces", monomial_specs(n, len)}, {"value", to_json(sum)}};
            });
        }
        const auto chain = hook_chain(a);
        c.expect(std::is_sorted(chain.rbegin(), chain.rend()) && chain.front() == per && chain.back() == det,
                 [&] { return Json{{"matrix", to_json(a)}, {"trace", "chi:" + Partition::hook(n, n).to_string()}}; });
        return c;
    });
    Check total{"immanants", "tnn_inequalities"};
    for (const auto& p : parts) total.merge(p);
    total.detail["matrices"] = samples.size();
    return total;
}

Check majorization_on_tnn(const std::vector<ExactMatrix>& samples, int threads) {
    auto parts = detail::parallel_map<Check>(samples.size(), threads, [&](std::size_t i) {
        Check c;
        const auto& a = samples[i];
        const int n = a.size();
        const auto sums = class_sums(a);
        const auto& ps = partitions_of(n);
        std::vector<Rational> norm;
        for (const auto& l : ps) {
            const auto eps = named_trace(TraceFamily::induced_sign, l);
            norm.push_back(immanant_from_class_sums(eps, sums) / eps.at_identity());
        }
        for (std::size_t x = 0; x < ps.size(); ++x)
            for (std::size_t y = 0; y < ps.size(); ++y)
                if (x != y && majorizes(ps[y], ps[x]))
                    c.expect(norm[x] >= norm[y], [&] {
                        return Json{{"matrix", to_json(a)}, {"trace", "eps:" + ps[x].to_string()},
                                    {"other_trace", "eps:" + ps[y].to_string()}};
                    });
        return c;
    });
    Check total{"immanants", "sign_majorization"};
    for (const auto& p : parts) total.merge(p);
    return total;
}

// ---- posets ----

Check poset_counts(const Sizes& s) {
    Check c{"posets", "isomorphism_classes"};
    const int expected[] = {1, 1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= std::min(s.poset_n, 6); ++n)
        c.expect(enumerate_posets(n).size() == static_cast<std::size_t>(expected[n]), [&] { return Json{{"n", n}}; });
    return c;
}

Check lemma_check(const Sizes& s, std::uint64_t seed) {
    Check c{"posets", "hook_difference_and_injection"};
    LemmaOptions o;
    o.exhaustive_max_n = s.lemma_exhaustive;
    o.random_count = s.lemma_random;
    o.random_min_n = s.lemma_min_n;
    o.random_max_n = s.lemma_max_n;
    o.seed = seed;
    auto r = verify_lemma(o);
    c.cases = r.json["identities_checked"].get<std::uint64_t>();
    c.passed = r.passed;
    for (const auto& f : r.json["failures"])
        if (c.failures.size() < kStoredFailures) c.failures.push_back(f);
    c.detail = Json{{"exhaustive_posets", r.json["exhaustive_posets"]},
                    {"random_posets", r.json["random_posets"]},
                    {"injection_domain_size", r.json["injection_domain_size"]}};
    return c;
}

Check from_report(std::string module, std::string name, const Report& r) {
    Check c{std::move(module), std::move(name)};
    c.passed = r.passed;
    c.cases = 1;
    for (const auto& f : r.json["failures"])
        if (c.failures.size() < kStoredFailures) c.failures.push_back(f);
    return c;
}

// ---- chromatic ----

Check graph_traces(const Sizes& s, std::uint64_t seed) {
    Check c{"chromatic", "graph_traces_by_basis"};
    for (int n = 1; n <= std::min(s.graph_n, 6); ++n)
        for (int i = 0; i < 4; ++i) {
            Rng rng = stream(seed, 31, static_cast<std::uint64_t>(n * 16 + i));
            const auto g = random_graph(n, rng);
            const auto x = chromatic_symmetric_function(g);
            const auto sb = convert(x, Basis::schur);
            const auto eb = convert(x, Basis::elementary);
            const auto hb = convert(x, Basis::homogeneous);
            for (const auto& l : partitions_of(n)) {
                auto witness = [&] { return Json{{"graph", to_json(g)}, {"lambda", to_json(l)}}; };
                c.expect(trace_of_graph(irreducible_character(transpose(l)), x) == sb.coefficient(l), witness);
                c.expect(trace_of_graph(named_trace(TraceFamily::monomial, l), x) == eb.coefficient(l), witness);
                c.expect(trace_of_graph(named_trace(TraceFamily::forgotten, l), x) == hb.coefficient(l), witness);
                c.expect(trace_of_graph(named_trace(TraceFamily::induced_sign, l), x) == Rational(colorings_of_type(g, l)), witness);
                if (n <= 5)
                    c.expect(trace_of_graph(named_trace(TraceFamily::induced_trivial, l), x) ==
                                 Rational(induced_acyclic_sequences(g, l)),
                             witness);
            }
        }
    return c;
}

Check orientation_sources(const Sizes& s, std::uint64_t seed) {
    Check c{"chromatic", "theta_levels_count_sources"};
    for (int n = 1; n <= s.orientation_n; ++n)
        for (int i = 0; i < 4; ++i) {
            Rng rng = stream(seed, 32, static_cast<std::uint64_t>(n * 16 + i));
            const auto g = random_graph(n, rng);
            const auto counts = acyclic_orientation_source_counts(g);
            Integer total = 0;
            for (int l = 1; l <= n; ++l) {
                total += counts[static_cast<std::size_t>(l - 1)];
                c.expect(Rational(counts[static_cast<std::size_t>(l - 1)]) == trace_of_graph(theta_level(n, l), g),
                         [&] { return Json{{"graph", to_json(g)}, {"sources", l}}; });
            }
            c.expect(total == acyclic_orientation_count(g), [&] { return Json{{"graph", to_json(g)}}; });
        }
    return c;
}

Check hook_traces_nonnegative(const Sizes& s) {
    Check c{"chromatic", "hook_traces_nonnegative"};
    std::uint64_t negative_non_hook = 0;
    for (int n = 1; n <= std::min(s.poset_n, 6); ++n)
        for (const auto& p : enumerate_posets(n)) {
            const auto x = chromatic_symmetric_function(incomparability_graph(p));
            for (const auto& l : partitions_of(n)) {
                const Rational v = trace_of_graph(irreducible_character(l), x);
                if (l.is_hook())
                    c.expect(v >= 0, [&] { return Json{{"poset", to_json(p)}, {"trace", "chi:" + l.to_string()}}; });
                else if (v < 0)
                    ++negative_non_hook;
            }
        }
    c.detail["negative_non_hook_values"] = negative_non_hook;
    return c;
}

// ---- networks ----

std::vector<PlanarNetwork> small_networks(std::uint64_t seed, int count, int max_n) {
    std::vector<PlanarNetwork> out;
    for (int i = 0; i < count; ++i) {
        Rng rng = stream(seed, 41, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, max_n));
        out.push_back(random_tnn_network(n, static_cast<int>(rng.uniform(0, 6)), rng));
    }
    return out;
}

Check network_identities(const std::vector<PlanarNetwork>& networks, int threads) {
    auto parts = detail::parallel_map<Check>(networks.size(), threads, [&](std::size_t i) {
        Check c;
        const auto& f = networks[i];
        const int n = f.order();
        const auto a = path_matrix(f);
        const auto weights = family_poset_weights(f);
        auto via_families = [&](const std::function<Rational(const Poset&)>& value) {
            Rational sum = 0;
            for (const auto& [p, w] : weights) sum += w * value(p);
            return sum;
        };
        auto witness = [&](const std::string& trace) { return [&, trace] { return Json{{"network", to_json(f)}, {"matrix", to_json(a)}, {"trace", trace}}; }; };
        c.expect(lindstrom_det(f) == determinant(a), witness("chi:" + Partition::column(n).to_string()));
        for (auto fam : kFamilies)
            for (const auto& l : partitions_of(n)) {
                const auto theta = named_trace(fam, l);
                const Rational direct = immanant(theta, a);
                const Rational by_graph = via_families([&](const Poset& p) { return trace_of_graph(theta, incomparability_graph(p)); });
                c.expect(direct == by_graph, witness(std::string(family_name(fam)) + ":" + l.to_string()));
            }
        for (int len = 1; len <= n; ++len) {
            Rational lhs = 0;
            for (const auto& mu : partitions_of(n))
                if (mu.length() == len) lhs += immanant(named_trace(TraceFamily::monomial, mu), a);
            const Rational rhs = via_families([&](const Poset& p) {
                long count = 0;
                for (const auto& u : enumerate_ptableaux(p, Partition{n}, TableauKind::row_semistrict)) count += records(p, u) == len;
                return Rational(count);
            });
            c.expect(lhs == rhs && lhs >= 0, [&] {
                return Json{{"network", to_json(f)}, {"matrix", to_json(a)}, {"traces", monomial_specs(n, len)},
                            {"values", Json{{"immanants", to_json(lhs)}, {"tableaux", to_json(rhs)}}}};
            });
        }
        return c;
    });
    Check total{"networks", "family_identities"};
    for (const auto& p : parts) total.merge(p);
    total.detail["networks"] = networks.size();
    return total;
}

Check factorization(const Sizes& s, std::uint64_t seed) {
    Check c{"networks", "factor_roundtrip"};
    for (int i = 0; i < s.factor_samples; ++i) {
        Rng rng = stream(seed, 42, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(1, s.factor_n));
        // Chips along reduced words of the longest permutation with positive weights.
        std::vector<Chip> chips;
        for (int r = 0; r + 1 < n; ++r)
            for (int j = n - 2; j >= r; --j) chips.push_back({ChipKind::lower, j, small_rational(rng, false) + 1});
        for (int r = 0; r < n; ++r) chips.push_back({ChipKind::scale, r, small_rational(rng, false) + 1});
        for (int r = n - 2; r >= 0; --r)
            for (int j = r; j <= n - 2; ++j) chips.push_back({ChipKind::upper, j, small_rational(rng, false) + 1});
        const auto a = path_matrix(PlanarNetwork::from_chips(n, chips));
        c.expect(is_totally_positive(a), [&] { return Json{{"matrix", to_json(a)}}; });
        c.expect(path_matrix(factor_to_network(a)) == a, [&] { return Json{{"matrix", to_json(a)}}; });
    }
    return c;
}

Check closure_flags(const std::vector<PlanarNetwork>& networks) {
    Check c{"networks", "family_poset_closure"};
    std::uint64_t families = 0, closure_added = 0;
    for (const auto& f : networks)
        for (const auto& [skeleton, list] : families_by_skeleton(f))
            for (const auto& fam : list) {
                ++families;
                if (family_poset(f, fam).closure_added) ++closure_added;
            }
    c.cases = families;
    c.detail = Json{{"families", families}, {"closure_added", closure_added}};
    return c;
}

}  // namespace

Report run_suite(const SuiteOptions& o) {
    const Sizes s = sizes_for(o.level);
    std::vector<Check> checks;
    checks.push_back(transpose_involution(s));
    checks.push_back(hook_kostka(s));
    checks.push_back(syt_hook_lengths(s));
    checks.push_back(class_sizes(s));
    checks.push_back(majorization_order(s));

    checks.push_back(orthogonality(s, o.inject_fault));
    checks.push_back(frobenius_roundtrip(s));
    checks.push_back(kostka_expansions(s));
    checks.push_back(hook_theta_expansion(s));
    checks.push_back(theta_coefficients(s));

    const auto samples = tnn_samples(o.seed, s.tnn_samples, 2, s.tnn_n, o.threads);
    checks.push_back(lmw(s, o.seed));
    checks.push_back(linearity_and_endpoints(s, o.seed));
    checks.push_back(tnn_inequalities(samples, o.threads));
    checks.push_back(majorization_on_tnn(samples, o.threads));

    checks.push_back(poset_counts(s));
    checks.push_back(from_report("posets", "uio_bijection", verify_bijection(s.uio_n)));
    checks.push_back(lemma_check(s, o.seed));
    checks.push_back(from_report("posets", "hikita_nonnegativity", verify_hikita(s.poset_n)));

    checks.push_back(graph_traces(s, o.seed));
    checks.push_back(orientation_sources(s, o.seed));
    checks.push_back(hook_traces_nonnegative(s));

    const auto networks = small_networks(o.seed, s.network_samples, s.network_n);
    checks.push_back(network_identities(networks, o.threads));
    checks.push_back(factorization(s, o.seed));
    auto deeper = networks;
    for (int i = 0; i < s.network_samples; ++i) {
        Rng rng = stream(o.seed, 43, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(3, 5));
        deeper.push_back(random_tnn_network(n, 3 * n, rng));
    }
    checks.push_back(closure_flags(deeper));

    {
        Check c{"harness", "hook_chains"};
        HookChainOptions h;
        h.seed = o.seed;
        h.threads = o.threads;
        h.include_trials = false;
        for (int n = 3; n <= s.chain_max_n; ++n) {
            h.n = n;
            h.depth = 3 * n;
            h.trials = s.chain_trials;
            h.source = MatrixSource::network;
            auto r = verify_hook_chain(h);
            Check part = from_report("", "", r);
            part.cases = static_cast<std::uint64_t>(s.chain_trials);
            c.merge(part);
            c.detail["network_n" + std::to_string(n)] = r.json["summary"];
        }
        for (int n = 1; n <= std::min(s.chain_max_n, 6); ++n) {
            h.n = n;
            h.trials = 0;
            h.source = MatrixSource::poset;
            auto r = verify_hook_chain(h);
            Check part = from_report("", "", r);
            part.cases = r.json["trials"].get<std::uint64_t>();
            c.merge(part);
        }
        checks.push_back(std::move(c));
    }
    {
        Check c{"harness", "pate_hooks"};
        PateOptions p;
        p.n = std::min(s.cap, 6);
        p.trials = s.pate_trials;
        p.seed = o.seed;
        p.threads = o.threads;
        auto r = explore_pate(p);
        c.passed = r.passed;
        c.cases = static_cast<std::uint64_t>(p.trials);
        std::uint64_t other = 0;
        for (const auto& pair : r.json["pairs"])
            if (!pair["hook"].get<bool>()) other += pair["violations"].get<std::uint64_t>();
        c.detail = Json{{"n", p.n}, {"hook_violations", r.json["hook_violations"]}, {"non_hook_violations", other}};
        checks.push_back(std::move(c));
    }
    {
        Check c{"harness", "thread_determinism"};
        HookChainOptions h;
        h.n = 4;
        h.trials = 12;
        h.seed = o.seed;
        h.threads = 1;
        const auto one = verify_hook_chain(h).json.dump();
        h.threads = std::max(2, o.threads);
        c.expect(one == verify_hook_chain(h).json.dump());
        PateOptions p;
        p.n = 4;
        p.trials = 12;
        p.seed = o.seed;
        p.threads = 1;
        const auto pate_one = explore_pate(p).json.dump();
        p.threads = std::max(2, o.threads);
        c.expect(pate_one == explore_pate(p).json.dump());
        checks.push_back(std::move(c));
    }

    Report r;
    Json list = Json::array();
    Json failed = Json::array();
    for (auto& c : checks) {
        r.passed = r.passed && c.passed;
        if (!c.passed) failed.push_back(c.module + "/" + c.name);
        Json j{{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
        if (!c.detail.empty()) j["detail"] = std::move(c.detail);
        if (!c.failures.empty()) j["failures"] = std::move(c.failures);
        list.push_back(std::move(j));
    }
    r.json["command"] = "suite";
    r.json["level"] = o.level == SuiteLevel::quick ? "quick" : "full";
    r.json["seed"] = o.seed;
    r.json["passed"] = r.passed;
    r.json["failed_checks"] = std::move(failed);
    r.json["checks"] = std::move(list);
    return r;
}

}  // namespace immkit
