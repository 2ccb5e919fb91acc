#include "immkit/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "immkit/characters.hpp"
#include "immkit/chromatic.hpp"
#include "immkit/errors.hpp"
#include "immkit/immanant.hpp"
#include "immkit/network.hpp"
#include "immkit/poset.hpp"
#include "immkit/ptableau.hpp"
#include "immkit/rng.hpp"
#include "parallel.hpp"

namespace immkit {

namespace {

Json rational_list(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

std::string hook_spec(int n, int k) { return "chi:" + Partition::hook(n, k).to_string(); }

std::string_view source_name(MatrixSource s) {
    switch (s) {
        case MatrixSource::network: return "network";
        case MatrixSource::poset: return "poset";
        case MatrixSource::file: return "file";
    }
    return "network";
}

struct ChainTrial {
    bool passed = true;
    bool first_proof_checked = false;
    bool first_proof_skipped = false;
    bool first_proof_passed = true;
    Json json;
    Json witnesses = Json::array();
};

// Checks the hook chain of `a`; adds the verdicts and witnesses to t.
void check_chain(const ExactMatrix& a, ChainTrial& t) {
    const int n = a.size();
    const auto chain = hook_chain(a);
    const Rational per = permanent(a);
    const Rational det = determinant(a);
    Json checks = Json::object();
    bool decreasing = true;
    for (int k = n; k >= 2; --k) {
        const Rational& upper = chain[static_cast<std::size_t>(n - k)];
        const Rational& lower = chain[static_cast<std::size_t>(n - k + 1)];
        if (upper < lower) {
            decreasing = false;
            t.witnesses.push_back(Json{{"check", "decreasing"},
                                       {"k", k},
                                       {"matrix", to_json(a)},
                                       {"trace", hook_spec(n, k)},
                                       {"lower_trace", hook_spec(n, k - 1)},
                                       {"values", Json{{"r_k", to_json(upper)}, {"r_k-1", to_json(lower)}}}});
        }
    }
    const bool top = chain.front() == per;
    const bool bottom = chain.back() == det;
    if (!top)
        t.witnesses.push_back(Json{{"check", "per"},
                                   {"matrix", to_json(a)},
                                   {"trace", hook_spec(n, n)},
                                   {"values", Json{{"r_n", to_json(chain.front())}, {"per", to_json(per)}}}});
    if (!bottom)
        t.witnesses.push_back(Json{{"check", "det"},
                                   {"matrix", to_json(a)},
                                   {"trace", hook_spec(n, 1)},
                                   {"values", Json{{"r_1", to_json(chain.back())}, {"det", to_json(det)}}}});
    checks["decreasing"] = decreasing;
    checks["per"] = top;
    checks["det"] = bottom;
    t.passed = decreasing && top && bottom;
    t.json["chain"] = rational_list(chain);
    t.json["checks"] = checks;
}

// (k-1) imm(chi^{k1^{n-k}}) - (n-k+1) imm(chi^{(k-1)1^{n-k+1}}) against the
// weighted count of marked tableaux over path families.
void check_family_counts(const PlanarNetwork& f, const ExactMatrix& a, std::size_t cap, ChainTrial& t) {
    const int n = f.order();
    std::map<Poset, Rational> weights;
    try {
        weights = family_poset_weights(f, cap);
    } catch (const ResourceLimitError&) {
        t.first_proof_skipped = true;
        t.json["checks"]["family_counts"] = "skipped";
        return;
    }
    t.first_proof_checked = true;
    const auto chain = hook_chain(a);
    auto imm = [&](int k) -> Rational { return chain[static_cast<std::size_t>(n - k)] * Rational(binomial(n - 1, k - 1)); };
    for (int k = 2; k <= n; ++k) {
        const Rational lhs = Rational(k - 1) * imm(k) - Rational(n - k + 1) * imm(k - 1);
        Rational rhs = 0;
        for (const auto& [poset, weight] : weights) rhs += weight * Rational(marked_difference_count(poset, k));
        if (lhs != rhs) {
            t.first_proof_passed = false;
            t.witnesses.push_back(Json{{"check", "family_counts"},
                                       {"k", k},
                                       {"matrix", to_json(a)},
                                       {"trace", hook_spec(n, k)},
                                       {"lower_trace", hook_spec(n, k - 1)},
                                       {"values", Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}}}});
        }
    }
    t.json["checks"]["family_counts"] = t.first_proof_passed;
    t.json["families"] = static_cast<std::uint64_t>(weights.size());
    t.passed = t.passed && t.first_proof_passed;
}

}  // namespace

Report verify_hook_chain(const HookChainOptions& o) {
    if (o.n < 1 || o.n > kDefaultPermutationCap) throw std::invalid_argument("n out of range");
    std::vector<Poset> uios;
    std::size_t count = static_cast<std::size_t>(std::max(o.trials, 0));
    switch (o.source) {
        case MatrixSource::network: break;
        case MatrixSource::poset:
            uios = enumerate_uios(o.n);
            if (o.trials == 0) count = uios.size();
            break;
        case MatrixSource::file:
            if (!o.matrix) throw std::invalid_argument("file source needs a matrix");
            count = 1;
            break;
    }

    auto trials = detail::parallel_map<ChainTrial>(count, o.threads, [&](std::size_t i) {
        ChainTrial t;
        t.json["trial"] = static_cast<std::uint64_t>(i);
        if (o.source == MatrixSource::network) {
            Rng rng = Rng::substream(o.seed, i);
            const auto f = random_tnn_network(o.n, o.depth, rng);
            const auto a = path_matrix(f);
            t.json["network"] = to_json(f);
            t.json["matrix"] = to_json(a);
            check_chain(a, t);
            check_family_counts(f, a, o.family_cap, t);
        } else if (o.source == MatrixSource::poset) {
            std::size_t pick = i;
            if (o.trials != 0) {
                Rng rng = Rng::substream(o.seed, i);
                pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(uios.size()) - 1));
            }
            const auto labeled = algorithm_P_to_C(uios[pick]).labeled;
            const auto a = antiadjacency(labeled);
            t.json["poset"] = to_json(labeled);
            t.json["matrix"] = to_json(a);
            check_chain(a, t);
        } else {
            t.json["matrix"] = to_json(*o.matrix);
            check_chain(*o.matrix, t);
        }
        t.json["passed"] = t.passed;
        return t;
    });

    Report r;
    std::size_t failures = 0, checked = 0, skipped = 0, family_failures = 0;
    Json trial_list = Json::array();
    Json witnesses = Json::array();
    for (auto& t : trials) {
        if (!t.passed) ++failures;
        if (t.first_proof_checked) ++checked;
        if (t.first_proof_skipped) ++skipped;
        if (!t.first_proof_passed) ++family_failures;
        for (auto& w : t.witnesses) {
            w["trial"] = t.json["trial"];
            witnesses.push_back(std::move(w));
        }
        if (o.include_trials) trial_list.push_back(std::move(t.json));
    }
    r.passed = failures == 0;
    r.json["command"] = "verify-hook-chain";
    r.json["source"] = source_name(o.source);
    r.json["n"] = o.n;
    if (o.source == MatrixSource::network) r.json["depth"] = o.depth;
    r.json["trials"] = static_cast<std::uint64_t>(count);
    r.json["seed"] = o.seed;
    r.json["passed"] = r.passed;
    r.json["summary"] = Json{{"failures", failures},
                             {"family_counts_checked", checked},
                             {"family_counts_skipped", skipped},
                             {"family_counts_failures", family_failures}};
    r.json["failures"] = std::move(witnesses);
    if (o.include_trials) r.json["results"] = std::move(trial_list);
    return r;
}

Report explore_pate(const PateOptions& o) {
    if (o.n < 1 || o.n > kDefaultPermutationCap) throw std::invalid_argument("n out of range");
    struct Pair {
        Partition lambda, mu;
        TraceVector chi_lambda, chi_mu;
        Rational dim_lambda, dim_mu;
    };
    std::vector<Pair> pairs;
    for (const auto& lambda : partitions_of(o.n)) {
        if (lambda == Partition::column(o.n)) continue;
        Partition mu = pate_successor(lambda);
        pairs.push_back({lambda, mu, irreducible_character(lambda), irreducible_character(mu),
                         Rational(syt_count(lambda)), Rational(syt_count(mu))});
    }
    struct Finding {
        std::size_t pair;
        Rational lhs, rhs;
    };
    struct Trial {
        Json matrix;
        std::vector<Finding> findings;
    };
    auto trials = detail::parallel_map<Trial>(static_cast<std::size_t>(std::max(o.trials, 0)), o.threads,
                                              [&](std::size_t i) {
        Rng rng = Rng::substream(o.seed, i);
        const auto a = path_matrix(random_tnn_network(o.n, o.depth, rng));
        const auto sums = class_sums(a);
        Trial t;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const Rational lhs = immanant_from_class_sums(pairs[j].chi_lambda, sums) / pairs[j].dim_lambda;
            const Rational rhs = immanant_from_class_sums(pairs[j].chi_mu, sums) / pairs[j].dim_mu;
            if (lhs < rhs) t.findings.push_back({j, lhs, rhs});
        }
        if (!t.findings.empty()) t.matrix = to_json(a);
        return t;
    });

    std::vector<std::size_t> violations(pairs.size(), 0);
    std::size_t hook_violations = 0;
    Json examples = Json::array();
    for (std::size_t i = 0; i < trials.size(); ++i)
        for (const auto& f : trials[i].findings) {
            ++violations[f.pair];
            const auto& pr = pairs[f.pair];
            if (pr.lambda.is_hook()) ++hook_violations;
            if (examples.size() < o.max_examples)
                examples.push_back(Json{{"trial", i},
                                        {"lambda", to_json(pr.lambda)},
                                        {"mu", to_json(pr.mu)},
                                        {"matrix", trials[i].matrix},
                                        {"trace", "chi:" + pr.lambda.to_string()},
                                        {"other_trace", "chi:" + pr.mu.to_string()},
                                        {"values", Json{{"lambda", to_json(f.lhs)}, {"mu", to_json(f.rhs)}}}});
        }
    Json pair_list = Json::array();
    for (std::size_t j = 0; j < pairs.size(); ++j)
        pair_list.push_back(Json{{"lambda", to_json(pairs[j].lambda)},
                                 {"mu", to_json(pairs[j].mu)},
                                 {"hook", pairs[j].lambda.is_hook()},
                                 {"checked", trials.size()},
                                 {"violations", violations[j]}});
    Report r;
    r.passed = hook_violations == 0;
    r.json["command"] = "explore-pate";
    r.json["n"] = o.n;
    r.json["depth"] = o.depth;
    r.json["trials"] = trials.size();
    r.json["seed"] = o.seed;
    r.json["passed"] = r.passed;
    r.json["hook_violations"] = hook_violations;
    r.json["pairs"] = std::move(pair_list);
    r.json["examples"] = std::move(examples);
    return r;
}

namespace {

struct LemmaResult {
    std::size_t identities = 0;
    std::size_t injections = 0;
    Json failures = Json::array();
};

void check_lemma(const Poset& p, LemmaResult& out) {
    const int n = p.size();
    for (int k = 2; k <= n; ++k) {
        const Integer lhs = marked_difference_count(p, k);
        const Integer upper = chi_hook_eval(p, k), lower = chi_hook_eval(p, k - 1);
        const Integer rhs = (k - 1) * upper - (n - k + 1) * lower;
        ++out.identities;
        if (lhs != rhs)
            out.failures.push_back(Json{{"check", "identity"},
                                        {"poset", to_json(p)},
                                        {"k", k},
                                        {"values", Json{{"marked", to_string(lhs)}, {"difference", to_string(rhs)}}}});
        const auto domain = column_marked_tableaux(p, k);
        const auto target = row_marked_tableaux(p, k);
        const std::set<PTableau> targets(target.begin(), target.end());
        std::set<PTableau> images;
        bool ok = true;
        for (const auto& u : domain) {
            const auto v = f_k_injection(p, u);
            ok = ok && targets.count(v) == 1 && f_k_inverse(p, v) == u;
            images.insert(v);
        }
        ok = ok && images.size() == domain.size() &&
             Integer(static_cast<unsigned long>(target.size() - images.size())) == lhs;
        out.injections += domain.size();
        if (!ok)
            out.failures.push_back(Json{{"check", "injection"}, {"poset", to_json(p)}, {"k", k}});
    }
}

}  // namespace

Report verify_lemma(const LemmaOptions& o) {
    if (o.exhaustive_max_n > 6) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
    if (o.random_count > 0 && (o.random_min_n < 1 || o.random_min_n > o.random_max_n || o.random_max_n > 8))
        throw std::invalid_argument("random poset sizes out of range");
    std::vector<Poset> posets;
    for (int n = 1; n <= o.exhaustive_max_n; ++n)
        for (auto& p : enumerate_posets(n)) posets.push_back(std::move(p));
    const std::size_t exhaustive = posets.size();
    for (int i = 0; i < o.random_count; ++i) {
        Rng rng = Rng::substream(o.seed, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform(o.random_min_n, o.random_max_n));
        const int num = static_cast<int>(rng.uniform(1, 3));
        posets.push_back(random_poset(n, rng, num, 4));
    }
    LemmaResult total;
    for (const auto& p : posets) check_lemma(p, total);
    Report r;
    r.passed = total.failures.empty();
    r.json["command"] = "verify-lemma";
    r.json["seed"] = o.seed;
    r.json["passed"] = r.passed;
    r.json["exhaustive_max_n"] = o.exhaustive_max_n;
    r.json["exhaustive_posets"] = exhaustive;
    r.json["random_posets"] = posets.size() - exhaustive;
    r.json["identities_checked"] = total.identities;
    r.json["injection_domain_size"] = total.injections;
    r.json["failures"] = std::move(total.failures);
    return r;
}

Report verify_bijection(int max_n) {
    if (max_n < 1 || max_n > 9) throw std::invalid_argument("max_n must be in 1..9");
    Report r;
    Json rows = Json::array();
    Json failures = Json::array();
    Integer catalan = 1;
    for (int n = 1; n <= max_n; ++n) {
        catalan = catalan * 2 * (2 * n - 1) / (n + 1);
        const auto uios = enumerate_uios(n);
        std::set<Permutation> ws;
        bool all_avoid = true;
        for (const auto& p : uios) {
            const auto w = uio_permutation(p);
            all_avoid = all_avoid && avoids_312(w);
            ws.insert(w);
        }
        std::size_t avoiders = 0;
        for (const auto& w : all_permutations(n))
            if (avoids_312(w)) ++avoiders;
        const bool counts = Integer(static_cast<unsigned long>(uios.size())) == catalan &&
                            Integer(static_cast<unsigned long>(avoiders)) == catalan;
        const bool injective = ws.size() == uios.size();
        Json row{{"n", n},
                 {"uios", uios.size()},
                 {"avoiders_312", avoiders},
                 {"catalan", to_string(catalan)},
                 {"distinct_w", ws.size()},
                 {"all_312_avoiding", all_avoid}};
        bool ok = counts && injective && all_avoid;
        if (n <= 6) {
            bool colorings = true, support = true, tnn = true;
            const auto perms = all_permutations(n);
            for (const auto& p : uios) {
                const auto lab = algorithm_P_to_C(p);
                const auto g = incomparability_graph(p);
                for (const auto& lambda : partitions_of(n)) {
                    const auto eps = named_trace(TraceFamily::induced_sign, lambda);
                    Rational sum = 0;
                    for (const auto& v : lab.ideal) sum += eps.at(v.cycle_type());
                    if (sum != Rational(colorings_of_type(g, lambda))) {
                        colorings = false;
                        failures.push_back(Json{{"check", "ideal_colorings"},
                                                {"poset", to_json(lab.labeled)},
                                                {"lambda", to_json(lambda)},
                                                {"values", Json{{"ideal_sum", to_json(sum)},
                                                                {"colorings", to_string(colorings_of_type(g, lambda))}}}});
                    }
                }
                const auto a = antiadjacency(lab.labeled);
                const std::set<Permutation> ideal(lab.ideal.begin(), lab.ideal.end());
                for (const auto& v : perms) {
                    bool nonzero = true;
                    for (int i = 0; i < n; ++i) nonzero = nonzero && a(i, v[static_cast<std::size_t>(i)]) != 0;
                    if (nonzero != (ideal.count(v) == 1)) support = false;
                }
                if (!is_totally_nonnegative(a)) {
                    tnn = false;
                    failures.push_back(Json{{"check", "tnn"}, {"poset", to_json(lab.labeled)}, {"matrix", to_json(a)}});
                }
            }
            row["ideal_colorings"] = colorings;
            row["ideal_is_support"] = support;
            row["antiadjacency_tnn"] = tnn;
            ok = ok && colorings && support && tnn;
        }
        if (!counts || !injective || !all_avoid) failures.push_back(Json{{"check", "catalan"}, {"n", n}});
        row["passed"] = ok;
        r.passed = r.passed && ok;
        rows.push_back(std::move(row));
    }
    r.json["command"] = "verify-bijection";
    r.json["max_n"] = max_n;
    r.json["passed"] = r.passed;
    r.json["sizes"] = std::move(rows);
    r.json["failures"] = std::move(failures);
    return r;
}

Report verify_hikita(int max_n) {
    if (max_n < 1 || max_n > 6) throw std::invalid_argument("max_n must be in 1..6");
    Report r;
    Json rows = Json::array();
    Json failures = Json::array();
    for (int n = 1; n <= max_n; ++n) {
        std::size_t claw_free = 0, negative_elsewhere = 0, immanants = 0;
        for (const auto& p : enumerate_posets(n)) {
            const auto e = convert(chromatic_symmetric_function(incomparability_graph(p)), Basis::elementary);
            const bool free = is_3plus1_free(p);
            if (free) ++claw_free;
            for (const auto& lambda : partitions_of(n)) {
                const Rational& c = e.coefficient(lambda);
                if (c >= 0) continue;
                if (free)
                    failures.push_back(Json{{"check", "trace"},
                                            {"poset", to_json(p)},
                                            {"trace", "phi:" + lambda.to_string()},
                                            {"value", to_json(c)}});
                else
                    ++negative_elsewhere;
            }
        }
        for (const auto& p : enumerate_uios(n)) {
            const auto lab = algorithm_P_to_C(p);
            const auto a = antiadjacency(lab.labeled);
            const auto sums = class_sums(a);
            const auto g = incomparability_graph(p);
            for (const auto& lambda : partitions_of(n)) {
                const auto phi = named_trace(TraceFamily::monomial, lambda);
                const Rational imm = immanant_from_class_sums(phi, sums);
                Rational ideal_sum = 0;
                for (const auto& v : lab.ideal) ideal_sum += phi.at(v.cycle_type());
                const Rational graph = trace_of_graph(phi, g);
                ++immanants;
                if (imm < 0 || imm != ideal_sum || imm != graph)
                    failures.push_back(Json{{"check", "immanant"},
                                            {"poset", to_json(lab.labeled)},
                                            {"matrix", to_json(a)},
                                            {"trace", "phi:" + lambda.to_string()},
                                            {"values", Json{{"immanant", to_json(imm)},
                                                            {"ideal_sum", to_json(ideal_sum)},
                                                            {"graph_trace", to_json(graph)}}}});
            }
        }
        rows.push_back(Json{{"n", n},
                            {"claw_free_posets", claw_free},
                            {"negative_coefficients_with_claw", negative_elsewhere},
                            {"immanants_checked", immanants}});
    }
    r.passed = failures.empty();
    r.json["command"] = "verify-hikita";
    r.json["max_n"] = max_n;
    r.json["passed"] = r.passed;
    r.json["sizes"] = std::move(rows);
    r.json["failures"] = std::move(failures);
    return r;
}

Report compute(const std::string& trace_spec, const ExactMatrix& a) {
    const auto theta = parse_trace_spec(trace_spec);
    if (theta.degree() != a.size()) throw std::invalid_argument("trace degree does not match the matrix size");
    const Rational value = immanant(theta, a);
    Report r;
    r.json["command"] = "compute";
    r.json["trace"] = trace_spec;
    r.json["n"] = a.size();
    r.json["matrix"] = to_json(a);
    r.json["immanant"] = to_json(value);
    if (theta.at_identity() != 0)
        r.json["normalized"] = to_json(value / theta.at_identity());
    else
        r.json["normalized"] = nullptr;
    r.json["passed"] = true;
    return r;
}

namespace {

bool flat(const Json& v) {
    if (v.is_object()) return false;
    if (!v.is_array()) return true;
    return std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
}

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_array()) {
        for (const auto& e : v) s += (s.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
    } else {
        s = v.is_string() ? v.get<std::string>() : v.dump();
    }
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Objects of `rows` flattened to their scalar fields, header from the first.
std::string table(const Json& rows) {
    std::vector<std::string> keys;
    for (const auto& row : rows)
        for (const auto& [key, value] : row.items())
            if (flat(value) && std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    std::ostringstream out;
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) out << ',';
            if (row.contains(keys[i])) out << csv_cell(row[keys[i]]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string report_csv(const Json& report) {
    for (const char* key : {"checks", "results", "pairs", "sizes"})
        if (report.contains(key) && report[key].is_array()) {
            if (std::string(key) != "results") return table(report[key]);
            Json rows = Json::array();
            for (const auto& t : report[key]) {
                Json row{{"trial", t["trial"]}, {"passed", t["passed"]}};
                std::string chain;
                for (const auto& v : t["chain"]) chain += (chain.empty() ? "" : ";") + v.get<std::string>();
                row["chain"] = chain;
                rows.push_back(std::move(row));
            }
            return table(rows);
        }
    Json row = Json::object();
    for (const auto& [key, value] : report.items())
        if (!value.is_structured()) row[key] = value;
    return table(Json::array({row}));
}

}  // namespace immkit
