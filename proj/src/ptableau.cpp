#include "immkit/ptableau.hpp"

#include <bit>
#include <stdexcept>

namespace immkit {
namespace {

bool check_rows(TableauKind kind) { return kind == TableauKind::row_semistrict || kind == TableauKind::standard; }
bool check_columns(TableauKind kind) { return kind == TableauKind::column_strict || kind == TableauKind::standard; }

template <class Visit>
class Filler {
public:
    Filler(const Poset& p, const Partition& lambda, TableauKind kind, Visit visit)
        : p_(p), lambda_(lambda), kind_(kind), visit_(visit) {
        if (lambda.size() != p.size()) throw std::invalid_argument("shape size must equal the poset size");
        u_.shape = lambda;
        for (int part : lambda.parts()) u_.rows.emplace_back(static_cast<std::size_t>(part), -1);
    }

    void run() { place(0, 0, 0); }

private:
    void place(std::size_t i, std::size_t j, std::uint32_t used) {
        if (i == u_.rows.size()) {
            visit_(u_);
            return;
        }
        if (j == u_.rows[i].size()) {
            place(i + 1, 0, used);
            return;
        }
        for (int x = 0; x < p_.size(); ++x) {
            if (used >> x & 1U) continue;
            if (check_rows(kind_) && j > 0 && p_.less(x, u_.rows[i][j - 1])) continue;
            if (check_columns(kind_) && i > 0 && !p_.less(u_.rows[i - 1][j], x)) continue;
            u_.rows[i][j] = x;
            place(i, j + 1, used | 1U << x);
        }
        u_.rows[i][j] = -1;
    }

    const Poset& p_;
    const Partition& lambda_;
    TableauKind kind_;
    Visit visit_;
    PTableau u_;
};

void check_hook_index(const Poset& p, int k) {
    if (k < 2 || k > p.size()) throw std::invalid_argument("k must lie in 2..n");
}

void check_filling(const Poset& p, const PTableau& u) {
    if (u.shape.size() != p.size() || static_cast<int>(u.rows.size()) != u.shape.length())
        throw std::invalid_argument("tableau does not match the poset");
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < u.rows.size(); ++i) {
        if (static_cast<int>(u.rows[i].size()) != u.shape[i]) throw std::invalid_argument("row length mismatch");
        for (int x : u.rows[i]) {
            if (x < 0 || x >= p.size() || (seen >> x & 1U)) throw std::invalid_argument("entries must be distinct elements");
            seen |= 1U << x;
        }
    }
}

}  // namespace

bool is_column_strict(const Poset& p, const PTableau& u) {
    for (std::size_t i = 1; i < u.rows.size(); ++i)
        for (std::size_t j = 0; j < u.rows[i].size(); ++j)
            if (!p.less(u.rows[i - 1][j], u.rows[i][j])) return false;
    return true;
}

bool is_row_semistrict(const Poset& p, const PTableau& u) { return descents(p, u) == 0; }

bool is_standard(const Poset& p, const PTableau& u) { return is_column_strict(p, u) && is_row_semistrict(p, u); }

int descents(const Poset& p, const PTableau& u) {
    int count = 0;
    for (const auto& row : u.rows)
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (p.less(row[j + 1], row[j])) ++count;
    return count;
}

int records(const Poset& p, const PTableau& u) {
    int count = 0;
    for (const auto& row : u.rows)
        for (std::size_t j = 0; j < row.size(); ++j) {
            bool record = true;
            for (std::size_t t = 0; t < j && record; ++t) record = p.less(row[t], row[j]);
            if (record) ++count;
        }
    return count;
}

std::vector<PTableau> enumerate_ptableaux(const Poset& p, const Partition& lambda, TableauKind kind) {
    std::vector<PTableau> out;
    auto visit = [&out](const PTableau& u) { out.push_back(u); };
    Filler<decltype(visit)>(p, lambda, kind, visit).run();
    return out;
}

Integer count_ptableaux(const Poset& p, const Partition& lambda, TableauKind kind) {
    unsigned long count = 0;
    auto visit = [&count](const PTableau&) { ++count; };
    Filler<decltype(visit)>(p, lambda, kind, visit).run();
    return Integer(count);
}

Integer chi_hook_eval(const Poset& p, int k) {
    if (k < 1 || k > p.size()) throw std::invalid_argument("k must lie in 1..n");
    return count_ptableaux(p, Partition::hook(p.size(), k), TableauKind::standard);
}

std::vector<PTableau> column_marked_tableaux(const Poset& p, int k) {
    check_hook_index(p, k);
    std::vector<PTableau> out;
    for (auto& u : enumerate_ptableaux(p, Partition::hook(p.size(), k - 1), TableauKind::standard))
        for (int i = 1; i < u.shape.length(); ++i) {
            u.mark = std::make_pair(i, 0);
            out.push_back(u);
        }
    return out;
}

std::vector<PTableau> row_marked_tableaux(const Poset& p, int k) {
    check_hook_index(p, k);
    std::vector<PTableau> out;
    for (auto& u : enumerate_ptableaux(p, Partition::hook(p.size(), k), TableauKind::standard))
        for (int j = 1; j < u.shape[0]; ++j) {
            u.mark = std::make_pair(0, j);
            out.push_back(u);
        }
    return out;
}

PTableau f_k_injection(const Poset& p, const PTableau& u) {
    check_filling(p, u);
    if (!u.shape.is_hook() || !is_standard(p, u)) throw std::invalid_argument("expected a standard hook tableau");
    if (!u.mark || u.mark->second != 0 || u.mark->first < 1 || u.mark->first >= u.shape.length())
        throw std::invalid_argument("mark must sit in the first column below the corner");
    const int n = p.size();
    const int k = u.shape[0] + 1;
    const int removed = u.rows[static_cast<std::size_t>(u.mark->first)][0];

    std::vector<int> row = u.rows[0];
    std::size_t pos = 1;
    for (std::size_t t = 1; t <= row.size(); ++t) {
        bool fits = true;
        for (std::size_t s = 0; s < t && fits; ++s) fits = p.less(row[s], removed);
        if (fits) pos = t;
    }
    row.insert(row.begin() + static_cast<std::ptrdiff_t>(pos), removed);

    PTableau v;
    v.shape = Partition::hook(n, k);
    v.rows.push_back(std::move(row));
    for (std::size_t i = 1; i < u.rows.size(); ++i)
        if (static_cast<int>(i) != u.mark->first) v.rows.push_back(u.rows[i]);
    v.mark = std::make_pair(0, static_cast<int>(pos));
    return v;
}

PTableau f_k_inverse(const Poset& p, const PTableau& v) {
    check_filling(p, v);
    if (!v.shape.is_hook() || v.shape[0] < 2) throw std::invalid_argument("expected a hook tableau with at least two columns");
    if (!v.mark || v.mark->first != 0 || v.mark->second < 1 || v.mark->second >= v.shape[0])
        throw std::invalid_argument("mark must sit in the first row right of the corner");
    const int n = p.size();
    const int k = v.shape[0];
    const int removed = v.rows[0][static_cast<std::size_t>(v.mark->second)];

    std::vector<int> column;
    for (const auto& row : v.rows) column.push_back(row[0]);
    std::size_t pos = 0;
    while (pos < column.size() && p.less(column[pos], removed)) ++pos;
    if (pos == 0) throw std::invalid_argument("marked entry cannot sit above the corner");
    column.insert(column.begin() + static_cast<std::ptrdiff_t>(pos), removed);

    PTableau u;
    u.shape = Partition::hook(n, k - 1);
    std::vector<int> first = v.rows[0];
    first.erase(first.begin() + v.mark->second);
    u.rows.push_back(std::move(first));
    for (std::size_t i = 1; i < column.size(); ++i) u.rows.push_back({column[i]});
    u.mark = std::make_pair(static_cast<int>(pos), 0);
    return u;
}

Integer marked_difference_count(const Poset& p, int k) {
    check_hook_index(p, k);
    unsigned long count = 0;
    auto visit = [&](const PTableau& u) {
        std::uint32_t earlier = 0;
        for (const auto& row : u.rows) earlier |= 1U << row[0];
        for (std::size_t j = 1; j < u.rows[0].size(); ++j) {
            const int x = u.rows[0][j];
            for (std::uint32_t rest = earlier; rest != 0; rest &= rest - 1) {
                const int y = std::countr_zero(rest);
                if (!p.comparable(x, y)) {
                    ++count;
                    break;
                }
            }
            earlier |= 1U << x;
        }
    };
    Filler<decltype(visit)>(p, Partition::hook(p.size(), k), TableauKind::standard, visit).run();
    return Integer(count);
}

}  // namespace immkit
