#include "opfree/ncpart.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

#include "opfree/errors.hpp"

namespace opfree {
namespace {

void check_size(int n, int limit, const char* what) {
    if (n < 1 || n > limit) {
        std::ostringstream os;
        os << what << ": ground set size " << n << " outside [1, " << limit << "]";
        throw SizeLimitError(os.str());
    }
}

void grow_set_partitions(int i, int n, std::vector<Block>& blocks, std::vector<SetPartition>& out) {
    if (i == n) {
        out.emplace_back(n, blocks);
        return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        blocks[k].push_back(i);
        grow_set_partitions(i + 1, n, blocks, out);
        blocks[k].pop_back();
    }
    blocks.push_back({i});
    grow_set_partitions(i + 1, n, blocks, out);
    blocks.pop_back();
}

// `open` lists the blocks that may still receive elements, innermost last.
// Joining an open block closes every block opened after it.
void grow_nc(int i, int n, std::vector<Block>& blocks, std::vector<int>& open,
             std::vector<NcPartition>& out) {
    if (i == n) {
        out.emplace_back(SetPartition(n, blocks));
        return;
    }
    for (std::size_t t = 0; t < open.size(); ++t) {
        const int target = open[t];
        std::vector<int> saved(open.begin() + static_cast<std::ptrdiff_t>(t) + 1, open.end());
        open.resize(t + 1);
        blocks[static_cast<std::size_t>(target)].push_back(i);
        grow_nc(i + 1, n, blocks, open, out);
        blocks[static_cast<std::size_t>(target)].pop_back();
        open.insert(open.end(), saved.begin(), saved.end());
    }
    blocks.push_back({i});
    open.push_back(static_cast<int>(blocks.size()) - 1);
    grow_nc(i + 1, n, blocks, open, out);
    open.pop_back();
    blocks.pop_back();
}

void grow_pairings(std::vector<bool>& used, std::vector<Block>& blocks, int n,
                   std::vector<SetPartition>& out) {
    int first = 0;
    while (first < n && used[static_cast<std::size_t>(first)]) ++first;
    if (first == n) {
        out.emplace_back(n, blocks);
        return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = true;
        blocks.push_back({first, j});
        grow_pairings(used, blocks, n, out);
        blocks.pop_back();
        used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
}

// All non-crossing pairings of the interval [lo, hi).
std::vector<std::vector<Block>> nc_pairings_of(int lo, int hi) {
    if (lo == hi) return {{}};
    std::vector<std::vector<Block>> result;
    for (int j = lo + 1; j < hi; j += 2) {
        const auto inner = nc_pairings_of(lo + 1, j);
        const auto outer = nc_pairings_of(j + 1, hi);
        for (const auto& in : inner)
            for (const auto& out : outer) {
                std::vector<Block> blocks;
                blocks.reserve(1 + in.size() + out.size());
                blocks.push_back({lo, j});
                blocks.insert(blocks.end(), in.begin(), in.end());
                blocks.insert(blocks.end(), out.begin(), out.end());
                result.push_back(std::move(blocks));
            }
    }
    return result;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 0) throw InvalidArgument("SetPartition: negative ground set size");
    owner_.assign(static_cast<std::size_t>(n_), -1);
    for (auto& b : blocks_) {
        if (b.empty()) throw InvalidArgument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        for (int e : blocks_[k]) {
            if (e < 0 || e >= n_) throw InvalidArgument("SetPartition: element out of range");
            auto& slot = owner_[static_cast<std::size_t>(e)];
            if (slot != -1) throw InvalidArgument("SetPartition: blocks overlap");
            slot = static_cast<int>(k);
        }
    if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end())
        throw InvalidArgument("SetPartition: blocks do not cover the ground set");
}

bool SetPartition::is_pairing() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 2; });
}

bool SetPartition::is_interval() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.back() - b.front() + 1 == static_cast<int>(b.size()); });
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) os << ',';
        os << '(';
        for (std::size_t t = 0; t < blocks_[k].size(); ++t) {
            if (t) os << ',';
            os << blocks_[k][t] + 1;
        }
        os << ')';
    }
    os << '}';
    return os.str();
}

bool is_noncrossing(const SetPartition& p) {
    // A crossing a<b<c<d needs some block to leave and re-enter the span of another.
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (p.block_of(b) == p.block_of(a)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (p.block_of(c) != p.block_of(a)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (p.block_of(d) == p.block_of(b)) return false;
            }
        }
    return true;
}

NcPartition::NcPartition(SetPartition base) : base_(std::move(base)) {
    if (!is_noncrossing(base_)) throw InvalidArgument("NcPartition: partition " + base_.to_string() + " is crossing");
    const auto& blocks = base_.blocks();
    const std::size_t count = blocks.size();
    parent_.assign(count, kRoot);
    children_.assign(count, {});
    for (std::size_t inner = 0; inner < count; ++inner) {
        const int lo = blocks[inner].front();
        const int hi = blocks[inner].back();
        int best_gap_start = -1;
        for (std::size_t outer = 0; outer < count; ++outer) {
            if (outer == inner) continue;
            const auto& ob = blocks[outer];
            for (std::size_t t = 0; t + 1 < ob.size(); ++t)
                if (ob[t] < lo && hi < ob[t + 1] && ob[t] > best_gap_start) {
                    best_gap_start = ob[t];
                    parent_[inner] = static_cast<int>(outer);
                }
        }
    }
    // Blocks are already ordered by minimum, so pushing in index order keeps children sorted.
    for (std::size_t k = 0; k < count; ++k) {
        if (parent_[k] == kRoot)
            roots_.push_back(static_cast<int>(k));
        else
            children_[static_cast<std::size_t>(parent_[k])].push_back(static_cast<int>(k));
    }
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    check_size(n, kMaxPartitionSize, "enumerate_set_partitions");
    std::vector<SetPartition> out;
    out.reserve(static_cast<std::size_t>(bell(n)));
    std::vector<Block> blocks;
    grow_set_partitions(0, n, blocks, out);
    return out;
}

std::vector<NcPartition> enumerate_nc(int n) {
    check_size(n, kMaxPartitionSize, "enumerate_nc");
    std::vector<NcPartition> out;
    out.reserve(static_cast<std::size_t>(catalan(n)));
    std::vector<Block> blocks;
    std::vector<int> open;
    grow_nc(0, n, blocks, open, out);
    return out;
}

std::vector<NcPartition> enumerate_ncpp(int n) {
    check_size(n, kMaxPairingSize, "enumerate_ncpp");
    std::vector<NcPartition> out;
    if (n % 2 != 0) return out;
    for (auto& blocks : nc_pairings_of(0, n)) out.emplace_back(SetPartition(n, std::move(blocks)));
    return out;
}

std::vector<SetPartition> enumerate_pairings(int n) {
    check_size(n, kMaxPairingSize, "enumerate_pairings");
    std::vector<SetPartition> out;
    if (n % 2 != 0) return out;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<Block> blocks;
    grow_pairings(used, blocks, n, out);
    return out;
}

const std::vector<NcPartition>& nc_partitions(int n) {
    check_size(n, kMaxPartitionSize, "nc_partitions");
    static std::array<std::once_flag, kMaxPartitionSize + 1> once;
    static std::array<std::vector<NcPartition>, kMaxPartitionSize + 1> cache;
    const auto slot = static_cast<std::size_t>(n);
    std::call_once(once[slot], [&] { cache[slot] = enumerate_nc(n); });
    return cache[slot];
}

NcPartition single_block(int n) {
    Block all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return NcPartition(SetPartition(n, {std::move(all)}));
}

std::uint64_t catalan(int k) {
    // C_{j+1} = sum_{i<=j} C_i C_{j-i}
    std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
    c[0] = 1;
    for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - 1 - i)];
    return c[static_cast<std::size_t>(std::max(k, 0))];
}

std::uint64_t bell(int n) {
    // Bell triangle: each row starts with the last entry of the previous row.
    if (n <= 0) return 1;
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

std::uint64_t pairing_count(int n) {
    if (n % 2 != 0) return 0;
    std::uint64_t r = 1;
    for (int k = n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
    return r;
}

}  // namespace opfree
