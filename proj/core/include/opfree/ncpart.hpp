#pragma once

// Set partitions, non-crossing partitions and pairings of {0, ..., n-1}.
//
// Ground-set elements are 0-based in code; reports print them 1-based.

#include <cstdint>
#include <string>
#include <vector>

namespace opfree {

inline constexpr int kMaxPartitionSize = 12;  ///< guard for Bell / Catalan enumeration
inline constexpr int kMaxPairingSize = 14;    ///< guard for pairing enumeration

using Block = std::vector<int>;

/// Partition of {0..n-1} in canonical form: blocks sorted internally and by minimum.
class SetPartition {
public:
    /// Validates and canonicalises; throws InvalidArgument on overlap, gaps or empty blocks.
    SetPartition(int n, std::vector<Block> blocks);

    int size() const noexcept { return n_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    /// Index of the block containing element `i`.
    int block_of(int i) const { return owner_.at(static_cast<std::size_t>(i)); }

    bool is_pairing() const noexcept;
    bool is_interval() const noexcept;

    /// 1-based rendering, e.g. "{(1,3),(2)}".
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.blocks_ < b.blocks_;
    }

private:
    int n_;
    std::vector<Block> blocks_;
    std::vector<int> owner_;
};

/// Non-crossing partition together with its nesting forest.
///
/// Block b is a child of block a iff b sits strictly between two consecutive
/// elements of a and a is the innermost block with that property.
class NcPartition {
public:
    static constexpr int kRoot = -1;

    /// Throws InvalidArgument if `base` is crossing.
    explicit NcPartition(SetPartition base);

    const SetPartition& base() const noexcept { return base_; }
    int size() const noexcept { return base_.size(); }
    const std::vector<Block>& blocks() const noexcept { return base_.blocks(); }

    int parent(int block) const { return parent_.at(static_cast<std::size_t>(block)); }
    const std::vector<int>& children(int block) const {
        return children_.at(static_cast<std::size_t>(block));
    }
    const std::vector<int>& roots() const noexcept { return roots_; }

    std::string to_string() const { return base_.to_string(); }

    friend bool operator==(const NcPartition& a, const NcPartition& b) { return a.base_ == b.base_; }
    friend bool operator<(const NcPartition& a, const NcPartition& b) { return a.base_ < b.base_; }

private:
    SetPartition base_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;  // ordered by minimum element
    std::vector<int> roots_;                  // ordered by minimum element
};

bool is_noncrossing(const SetPartition& p);

std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<NcPartition> enumerate_nc(int n);
std::vector<NcPartition> enumerate_ncpp(int n);
std::vector<SetPartition> enumerate_pairings(int n);

/// Shared, lazily built copy of enumerate_nc(n); safe to call concurrently.
const std::vector<NcPartition>& nc_partitions(int n);

/// The one-block partition of {0..n-1}.
NcPartition single_block(int n);

std::uint64_t catalan(int k);
std::uint64_t bell(int n);
/// (n-1)!! for even n, 0 for odd n: the number of pairings of an n-set.
std::uint64_t pairing_count(int n);

}  // namespace opfree
