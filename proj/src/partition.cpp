#include "immkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace immkit {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    // Largest-first recursion yields reverse lexicographic order directly.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::hook(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hook requires 1 <= k <= n");
    std::vector<int> parts{k};
    parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
    return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool Partition::is_hook() const noexcept {
    return parts_.size() <= 1 || parts_[1] == 1;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

const std::vector<Partition>& partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<Partition>>(enumerate_partitions(n));
    return *slot;
}

std::size_t partition_index(const Partition& lambda) {
    const auto& all = partitions_of(lambda.size());
    // reverse lexicographic: search with greater<>
    auto it = std::lower_bound(all.begin(), all.end(), lambda, std::greater<>());
    if (it == all.end() || *it != lambda) throw std::logic_error("partition not found");
    return static_cast<std::size_t>(it - all.begin());
}

Partition transpose(const Partition& lambda) {
    if (lambda.length() == 0) return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts())
        for (int i = 0; i < row; ++i) ++cols[static_cast<std::size_t>(i)];
    return Partition(std::move(cols));
}

Integer z_value(const Partition& lambda) {
    Integer z = 1;
    for (int p : lambda.parts()) z *= p;
    for (int i = 1; i <= lambda.size(); ++i) z *= factorial(lambda.multiplicity(i));
    return z;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka requires partitions of the same size");
    const int rows = lambda.length();
    // cells in row-major order; grid[r][c] holds the entry
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> remaining(mu.parts());
    const int letters = mu.length();
    Integer count = 0;

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c == lambda[r]) {
            ++next_r;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= letters; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            grid[r][c] = v;
            fill(next_r, next_c);
            ++remaining[v - 1];
        }
    };
    if (rows > 0) fill(0, 0);
    return count;
}

Integer syt_count(const Partition& lambda) {
    const Partition conj = transpose(lambda);
    Integer hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

bool majorizes(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("majorizes requires partitions of the same size");
    int sm = 0, sl = 0;
    const std::size_t len = static_cast<std::size_t>(std::max(mu.length(), lambda.length()));
    for (std::size_t i = 0; i < len; ++i) {
        sm += mu.part_or_zero(i);
        sl += lambda.part_or_zero(i);
        if (sl > sm) return false;
    }
    return true;
}

Partition pate_successor(const Partition& lambda) {
    if (lambda.length() == 0 || lambda[0] == 1)
        throw std::invalid_argument("pate_successor undefined for a single column");
    const int k = lambda.multiplicity(lambda[0]);
    std::vector<int> parts(lambda.parts());
    for (int i = 0; i < k; ++i) --parts[static_cast<std::size_t>(i)];
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition::from_unsorted(std::move(parts));
}

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("empty partition");
    std::vector<int> parts;
    if (s.find(',') == std::string::npos) {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("malformed partition: " + s);
            parts.push_back(ch - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= s.size()) {
            auto end = s.find(',', start);
            if (end == std::string::npos) end = s.size();
            std::string tok = s.substr(start, end - start);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed partition: " + s);
            parts.push_back(std::stoi(tok));
            start = end + 1;
        }
    }
    return Partition(std::move(parts));
}

}  // namespace immkit
