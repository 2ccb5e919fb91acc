#include "immkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "immkit/immanant.hpp"

namespace immkit {

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
    std::vector<char> seen(w_.size(), 0);
    for (int x : w_) {
        if (x < 0 || x >= static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - 1 - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const { return immkit::cycle_type(std::span<const int>(w_)); }

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = w_.size() <= 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(w_[i] + 1);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + std::string(text));
            w.push_back(c - '1');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string piece(text.substr(pos, end - pos));
            if (piece.empty()) throw std::invalid_argument("bad permutation: " + std::string(text));
            w.push_back(std::stoi(piece) - 1);
            pos = end + 1;
        }
    }
    return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    const int n = v.size();
    if (w.size() != n) throw std::invalid_argument("Bruhat comparison needs equal sizes");
    // Compare #{k <= i : v_k >= j} with the same count for w, row by row.
    std::vector<int> cv(static_cast<std::size_t>(n) + 1, 0), cw(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= v[static_cast<std::size_t>(i)]; ++j) ++cv[static_cast<std::size_t>(j)];
        for (int j = 0; j <= w[static_cast<std::size_t>(i)]; ++j) ++cw[static_cast<std::size_t>(j)];
        for (int j = 0; j < n; ++j)
            if (cv[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

bool avoids_312(const Permutation& w) {
    const int n = w.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(k)] &&
                    w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(i)])
                    return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace immkit
