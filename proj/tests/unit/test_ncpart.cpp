#include <doctest.h>

#include <algorithm>
#include <set>

#include <opfree/errors.hpp>
#include <opfree/ncpart.hpp>

#include "oracles.hpp"

using namespace opfree;

namespace {

SetPartition from_labels(const std::vector<int>& labels) {
    std::map<int, Block> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(static_cast<int>(i));
    std::vector<Block> out;
    for (auto& [l, b] : blocks) out.push_back(b);
    return SetPartition(static_cast<int>(labels.size()), out);
}

template <typename T>
std::set<SetPartition> as_set(const std::vector<T>& parts) {
    std::set<SetPartition> s;
    for (const auto& p : parts) {
        if constexpr (std::is_same_v<T, NcPartition>)
            s.insert(p.base());
        else
            s.insert(p);
    }
    return s;
}

}  // namespace

TEST_CASE("set partitions are canonical and counted by Bell numbers") {
    auto one = enumerate_set_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].to_string() == "{(1)}");
    CHECK(enumerate_set_partitions(3).size() == 5);
    CHECK(enumerate_set_partitions(4).size() == 15);
    for (int n = 1; n <= 9; ++n) {
        const auto parts = enumerate_set_partitions(n);
        CHECK(parts.size() == oracle::bell_recurrence(n));
        CHECK(bell(n) == oracle::bell_recurrence(n));
        CHECK(as_set(parts).size() == parts.size());
        for (const auto& p : parts)
            for (std::size_t b = 1; b < p.blocks().size(); ++b)
                CHECK(p.blocks()[b - 1].front() < p.blocks()[b].front());
    }
}

TEST_CASE("SetPartition canonicalises and validates") {
    SetPartition p(4, {{3, 1}, {2, 0}});
    CHECK(p.to_string() == "{(1,3),(2,4)}");
    CHECK(p.block_of(3) == 1);
    CHECK_THROWS_AS(SetPartition(3, {{0, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(SetPartition(3, {{0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SetPartition(2, {{0, 1}, {}}), InvalidArgument);
}

TEST_CASE("crossing test on the defining configurations") {
    CHECK_FALSE(is_noncrossing(SetPartition(4, {{0, 2}, {1, 3}})));
    CHECK(is_noncrossing(SetPartition(4, {{0, 3}, {1, 2}})));
    CHECK(is_noncrossing(SetPartition(3, {{0, 1, 2}})));
    CHECK_THROWS_AS(NcPartition(SetPartition(4, {{0, 2}, {1, 3}})), InvalidArgument);
}

TEST_CASE("direct NC generation equals the filtered set partitions") {
    CHECK(enumerate_nc(3).size() == 5);
    CHECK(enumerate_nc(4).size() == 14);
    CHECK(enumerate_nc(6).size() == 132);
    for (int n = 1; n <= 10; ++n) {
        std::set<SetPartition> filtered;
        for (const auto& labels : oracle::restricted_growth_strings(n))
            if (!oracle::crossing(labels)) filtered.insert(from_labels(labels));
        const auto direct = enumerate_nc(n);
        CHECK(direct.size() == catalan(n));
        CHECK(as_set(direct) == filtered);
    }
}

TEST_CASE("the only crossing partition of four points is removed") {
    std::set<SetPartition> all = as_set(enumerate_set_partitions(4));
    for (const auto& p : enumerate_nc(4)) all.erase(p.base());
    REQUIRE(all.size() == 1);
    CHECK(all.begin()->to_string() == "{(1,3),(2,4)}");
}

TEST_CASE("pairings and non-crossing pairings") {
    CHECK(enumerate_pairings(4).size() == 3);
    CHECK(enumerate_pairings(6).size() == 15);
    CHECK(enumerate_pairings(3).empty());
    CHECK(enumerate_ncpp(5).empty());
    const auto two = enumerate_ncpp(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].to_string() == "{(1,2)}");
    std::set<std::string> four;
    for (const auto& p : enumerate_ncpp(4)) four.insert(p.to_string());
    CHECK(four == std::set<std::string>{"{(1,2),(3,4)}", "{(1,4),(2,3)}"});

    for (int n = 2; n <= 12; n += 2) {
        std::set<SetPartition> filtered;
        for (const auto& p : enumerate_pairings(n))
            if (is_noncrossing(p)) filtered.insert(p);
        const auto direct = enumerate_ncpp(n);
        CHECK(direct.size() == catalan(n / 2));
        CHECK(as_set(direct) == filtered);
        CHECK(enumerate_pairings(n).size() == pairing_count(n));
        for (const auto& p : direct) CHECK(p.base().is_pairing());
    }
}

TEST_CASE("size guards fail loudly") {
    CHECK_THROWS_AS(enumerate_set_partitions(0), SizeLimitError);
    CHECK_THROWS_AS(enumerate_set_partitions(13), SizeLimitError);
    CHECK_THROWS_AS(enumerate_nc(13), SizeLimitError);
    CHECK_THROWS_AS(enumerate_ncpp(15), SizeLimitError);
    CHECK_THROWS_AS(enumerate_pairings(16), SizeLimitError);
    CHECK_NOTHROW(enumerate_ncpp(14));
}

TEST_CASE("nesting forest") {
    NcPartition p(SetPartition(6, {{0, 5}, {1, 2}, {3}, {4}}));
    CHECK(p.roots() == std::vector<int>{0});
    CHECK(p.children(0) == std::vector<int>{1, 2, 3});

    NcPartition deep(SetPartition(6, {{0, 5}, {1, 4}, {2, 3}}));
    CHECK(deep.parent(2) == 1);
    CHECK(deep.parent(1) == 0);
    CHECK(deep.parent(0) == NcPartition::kRoot);

    for (int n = 1; n <= 8; ++n)
        for (const auto& pi : enumerate_nc(n)) {
            // flattening the forest visits every block exactly once
            std::vector<int> seen;
            std::function<void(int)> walk = [&](int b) {
                seen.push_back(b);
                for (int c : pi.children(b)) {
                    CHECK(pi.parent(c) == b);
                    walk(c);
                }
            };
            for (int r : pi.roots()) walk(r);
            std::sort(seen.begin(), seen.end());
            CHECK(seen.size() == pi.blocks().size());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            if (pi.base().is_interval()) CHECK(pi.roots().size() == pi.blocks().size());
        }
}
