#pragma once

#include <vector>

#include "immkit/characters.hpp"
#include "immkit/matrix.hpp"
#include "immkit/partition.hpp"

namespace immkit {

/// Largest n for which immanants are evaluated by enumerating S_n.
inline constexpr int kDefaultPermutationCap = 9;

/// Cycle type of a permutation given in 0-based one-line notation.
Partition cycle_type(std::span<const int> perm);

/// S_mu = sum over w of cycle type mu of prod_i a_{i,w(i)}, in
/// partitions_of(n) order. Every immanant is a dot product with these.
/// Throws ResourceLimitError when n exceeds the cap.
std::vector<Rational> class_sums(const ExactMatrix& a, int cap = kDefaultPermutationCap);

/// sum_w theta(ctype(w)) prod_i a_{i,w(i)}.
Rational immanant(const TraceVector& theta, const ExactMatrix& a, int cap = kDefaultPermutationCap);
Rational immanant_from_class_sums(const TraceVector& theta, const std::vector<Rational>& sums);

/// Ryser inclusion-exclusion over column subsets in Gray-code order.
Rational permanent(const ExactMatrix& a);
Rational permanent(const std::vector<std::vector<Rational>>& rows);

/// Sum over ordered sequences (I_1,...,I_l) of disjoint subsets with
/// |I_j| = lambda_j of prod_j det(A_{I_j,I_j}); equals imm(eps^lambda).
Rational lmw_sign(const Partition& lambda, const ExactMatrix& a);
/// Same with permanents; equals imm(eta^lambda).
Rational lmw_trivial(const Partition& lambda, const ExactMatrix& a);

/// imm(theta, A) / theta(e). Throws DivisionByZeroError when theta(e) = 0.
Rational normalized_immanant(const TraceVector& theta, const ExactMatrix& a, int cap = kDefaultPermutationCap);

/// [r_n, r_{n-1}, ..., r_1] with r_k = imm(chi^{k1^{n-k}}, A) / C(n-1,k-1);
/// r_n = per(A), r_1 = det(A).
std::vector<Rational> hook_chain(const ExactMatrix& a, int cap = kDefaultPermutationCap);

}  // namespace immkit
