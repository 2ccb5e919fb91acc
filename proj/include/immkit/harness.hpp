#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "immkit/json_io.hpp"
#include "immkit/matrix.hpp"

namespace immkit {

/// Outcome of a verification command. `json` is the full report; it
/// depends only on the inputs (never on timing or thread count).
struct Report {
    bool passed = true;
    Json json;
};

enum class MatrixSource { network, poset, file };

struct HookChainOptions {
    MatrixSource source = MatrixSource::network;
    int n = 4;
    int depth = 12;
    /// For the poset source, 0 means every unit interval order of size n.
    int trials = 100;
    std::uint64_t seed = 1;
    std::optional<ExactMatrix> matrix;  // file source
    int threads = 1;
    /// Networks with more path families than this skip the family-count check.
    std::size_t family_cap = 20000;
    bool include_trials = true;
};

/// Checks r_n >= ... >= r_1 with r_n = per and r_1 = det on each trial. For
/// network sources also checks, for each k, that
/// (k-1) imm(chi^{k1^{n-k}}) - (n-k+1) imm(chi^{(k-1)1^{n-k+1}}) equals the
/// weighted sum of marked_difference_count over path families.
Report verify_hook_chain(const HookChainOptions& options);

struct PateOptions {
    int n = 5;
    int depth = 15;
    int trials = 200;
    std::uint64_t seed = 1;
    int threads = 1;
    std::size_t max_examples = 20;
};

/// Compares normalized chi^lambda and chi^{pate_successor(lambda)} immanants
/// on random TNN matrices. Violations for non-hook shapes are recorded as
/// findings; only hook violations make the report fail.
Report explore_pate(const PateOptions& options);

struct LemmaOptions {
    int exhaustive_max_n = 5;  // every poset up to isomorphism, n <= 6
    int random_count = 200;
    int random_min_n = 6;
    int random_max_n = 7;
    std::uint64_t seed = 1;
};

/// Hook difference identity and the injection, on every small poset and on
/// random posets.
Report verify_lemma(const LemmaOptions& options);

/// Unit interval orders against 312-avoiding permutations (Catalan counts,
/// injectivity), Bruhat ideals against colorings, antiadjacency matrices.
Report verify_bijection(int max_n);

/// Monomial traces on (3+1)-free incomparability graphs and monomial
/// immanants of antiadjacency matrices are nonnegative.
Report verify_hikita(int max_n);

/// Evaluates a trace on a matrix (the re-check path for failure witnesses).
Report compute(const std::string& trace_spec, const ExactMatrix& a);

enum class SuiteLevel { quick, full };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::quick;
    std::uint64_t seed = 1;
    int threads = 1;
    /// Corrupts a private copy of a character table before the
    /// orthogonality check, which must then fail.
    bool inject_fault = false;
};

/// Runs every property check at the sizes of the chosen level.
Report run_suite(const SuiteOptions& options);

/// Flat CSV view of a report.
std::string report_csv(const Json& report);

}  // namespace immkit
