#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "immkit/partition.hpp"
#include "immkit/poset.hpp"

namespace immkit {

/// Filling of a Young diagram by the elements of a poset. rows[0] is the
/// first (longest) row; cell (i, j) is rows[i][j].
struct PTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    std::optional<std::pair<int, int>> mark;

    friend bool operator==(const PTableau&, const PTableau&) = default;
    friend auto operator<=>(const PTableau&, const PTableau&) = default;
};

enum class TableauKind { any, column_strict, row_semistrict, standard };

/// Each entry is less in P than the entry directly above it.
bool is_column_strict(const Poset& p, const PTableau& u);
/// No descents.
bool is_row_semistrict(const Poset& p, const PTableau& u);
bool is_standard(const Poset& p, const PTableau& u);

/// Cells (i, j) with U_{i,j} >_P U_{i,j+1}.
int descents(const Poset& p, const PTableau& u);
/// Cells (i, j) whose entry is above every earlier entry of its row in P;
/// the first cell of every row counts.
int records(const Poset& p, const PTableau& u);

/// All fillings of the given kind, in lexicographic order of rows.
/// Throws std::invalid_argument if |lambda| != |P|.
std::vector<PTableau> enumerate_ptableaux(const Poset& p, const Partition& lambda, TableauKind kind);
Integer count_ptableaux(const Poset& p, const Partition& lambda, TableauKind kind);

/// Number of standard P-tableaux of shape k1^{n-k}.
Integer chi_hook_eval(const Poset& p, int k);

/// Standard tableaux of shape (k-1)1^{n-k+1}, each copied once per marked
/// first-column cell below the corner. Throws unless 2 <= k <= n.
std::vector<PTableau> column_marked_tableaux(const Poset& p, int k);
/// Standard tableaux of shape k1^{n-k}, each copied once per marked
/// first-row cell right of the corner. Throws unless 2 <= k <= n.
std::vector<PTableau> row_marked_tableaux(const Poset& p, int k);

/// Removes the marked first-column entry and inserts it into the first row
/// as far right as possible while staying a record. Throws
/// std::invalid_argument when u is not a marked standard hook tableau with
/// the mark in the first column below the corner.
PTableau f_k_injection(const Poset& p, const PTableau& u);
/// Moves the marked first-row entry back into the first column at the
/// position that keeps the column a chain.
PTableau f_k_inverse(const Poset& p, const PTableau& v);

/// Standard tableaux of shape k1^{n-k} with a marked first-row entry
/// (right of the corner) incomparable to some entry in an earlier column.
/// Throws unless 2 <= k <= n.
Integer marked_difference_count(const Poset& p, int k);

}  // namespace immkit
