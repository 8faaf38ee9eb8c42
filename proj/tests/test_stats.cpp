#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "weary/families.hpp"
#include "weary/stats.hpp"

using namespace weary;

namespace {

const parking_function pf_ten({1, 2, 5, 1, 5, 5, 6, 5, 1, 1});

cayley_tree fig_tree() {
    return cayley_tree::from_map(
        {{1, 7}, {2, 5}, {3, 7}, {4, 2}, {5, 0}, {6, 1}, {7, 0}, {8, 5}, {9, 1}});
}

} // namespace

TEST_CASE("parking statistics of the ten-car example") {
    const pf_stats_t s = pf_stats(pf_ten);
    CHECK(s.len == 10);
    CHECK(s.lucky == 3);
    CHECK(s.dis == 23);
    CHECK(s.probes == 33);
    CHECK(s.ones == 4);
    CHECK(s.absent == 7);
    CHECK(s.mult == std::vector<long long>{7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0});
    CHECK(s.rec_set == std::vector<int>{1, 2, 4, 9, 10});
}

TEST_CASE("parking statistics of tiny inputs") {
    const pf_stats_t id3 = pf_stats(parking_function({1, 2, 3}));
    CHECK(id3.len == 3);
    CHECK(id3.lucky == 3);
    CHECK(id3.dis == 0);
    CHECK(id3.probes == 3);
    CHECK(id3.ones == 1);
    CHECK(id3.absent == 1);
    CHECK(id3.mult == std::vector<long long>{1, 3, 0, 0});

    const pf_stats_t empty = pf_stats(parking_function{});
    CHECK(empty.len == 0);
    CHECK(empty.lucky == 0);
    CHECK(empty.dis == 0);
    CHECK(empty.probes == 0);
    CHECK(empty.ones == 0);
    CHECK(empty.mult == std::vector<long long>{1});
    CHECK(empty.absent == 1);   // the single value 1 never appears
    CHECK(empty.rec_set.empty());
}

TEST_CASE("multiplicity sequence invariants") {
    for (int n = 0; n <= 5; ++n)
        for_each_parking_function(n, {}, [&](const parking_function& p) {
            const pf_stats_t s = pf_stats(p);
            long long values = 0, weighted = 0;
            for (std::size_t i = 0; i < s.mult.size(); ++i) {
                values += s.mult[i];
                weighted += static_cast<long long>(i) * s.mult[i];
            }
            CHECK(values == n + 1);
            CHECK(weighted == n);
            CHECK(s.mult[0] == s.absent);
            CHECK(s.probes == s.dis + s.len);
        });
}

TEST_CASE("displacement equals the priority-vector deficit") {
    for (int n = 0; n <= 5; ++n)
        for_each_parking_function(n, {}, [&](const parking_function& p) {
            const priority_vector pv = priority_vector_of(p);
            long long deficit = 0;
            for (int i = 1; i <= n; ++i)
                deficit += i - pv.at(i);
            CHECK(pf_stats(p).dis == deficit);
        });
}

TEST_CASE("tree statistics of the ten-car example tree") {
    const cayley_tree t = rho(pf_ten);
    const tree_stats_t s = tree_stats(t);
    CHECK(s.ord == 10);
    CHECK(s.deg_root == 4);
    CHECK(s.leaves == 7);
    CHECK(s.sasc == 2);
    CHECK(s.chseq == std::vector<long long>{7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0});
    CHECK(s.wait == 33);
    CHECK(s.psa == 3);
    // the oracle value; the sum of i - parent(i) over the forced parent map
    CHECK(s.diff == 15);
}

TEST_CASE("tree statistics of tiny trees") {
    const tree_stats_t bare = tree_stats(cayley_tree{});
    CHECK(bare.ord == 0);
    CHECK(bare.diff == 0);
    CHECK(bare.deg_root == 0);
    CHECK(bare.leaves == 0);
    CHECK(bare.sasc == 0);
    CHECK(bare.wait == 0);
    CHECK(bare.psa == 0);
    CHECK(bare.chseq == std::vector<long long>{1});

    const tree_stats_t path3 = tree_stats(cayley_tree({0, 1, 2}));
    CHECK(path3.diff == 3);
    CHECK(path3.sasc == 3);
    CHECK(path3.wait == 3);
    CHECK(path3.psa == 3);
    CHECK(path3.deg_root == 1);
    CHECK(path3.leaves == 1);
}

TEST_CASE("children sequence invariants") {
    for (int n = 0; n <= 5; ++n)
        for_each_tree(n, {}, [&](const cayley_tree& t) {
            const tree_stats_t s = tree_stats(t);
            long long vertices = 0, weighted = 0;
            for (std::size_t i = 0; i < s.chseq.size(); ++i) {
                vertices += s.chseq[i];
                weighted += static_cast<long long>(i) * s.chseq[i];
            }
            CHECK(vertices == n + 1);
            CHECK(weighted == n);
            // the root has a child whenever n >= 1, so chseq[0] counts leaves
            if (n >= 1)
                CHECK(s.chseq[0] == s.leaves);
        });
}

TEST_CASE("priority tree fixtures") {
    CHECK(priority_tree(rho(pf_ten)) == arrival_tree(pf_ten));
    const cayley_tree inc({0, 1, 1, 2});
    CHECK(priority_tree(inc) == inc);
    CHECK(encode(priority_tree(fig_tree())) == record_code(9, {1, 2, 0, 4, 4, 5, 1, 5}));
    CHECK(priority_tree(cayley_tree{}) == cayley_tree{});
}

TEST_CASE("priority tree is the arrival tree of the preference sequence") {
    for (int n = 0; n <= 5; ++n)
        for_each_tree(n, {}, [&](const cayley_tree& t) {
            const cayley_tree pt = priority_tree(t);
            CHECK(pt == arrival_tree(rho_inv(t)));
            CHECK(is_increasing(pt));
        });
}

TEST_CASE("hexads of the fixtures agree under rho") {
    CHECK(hexad_tree(rho(pf_ten)) == hexad_pf(pf_ten));
    CHECK(hexad_tree(cayley_tree{}) == hexad_pf(parking_function{}));
    for_each_parking_function(3, {}, [&](const parking_function& p) {
        CHECK(hexad_pf(p) == hexad_tree(rho(p)));
    });
}

TEST_CASE("statistics transport one by one under rho") {
    for (int n = 0; n <= 5; ++n)
        for_each_tree(n, {}, [&](const cayley_tree& t) {
            const tree_stats_t ts = tree_stats(t);
            const pf_stats_t ps = pf_stats(rho_inv(t));
            CHECK(ts.wait == ps.probes);
            CHECK(ts.psa == ps.lucky);
            CHECK(ts.deg_root == ps.ones);
            CHECK(ts.chseq == ps.mult);
            CHECK(ts.ord == ps.len);
            CHECK(ts.rec_set == ps.rec_set);
            if (n >= 1)
                CHECK(ts.leaves == ps.absent);
            else
                CHECK(ts.leaves == ps.absent - 1);   // the bare root is not a leaf
        });
}

TEST_CASE("hexad multisets coincide across the two sides") {
    for (int n = 0; n <= 5; ++n) {
        std::map<stat_hexad, long long> tree_side, parking_side;
        for_each_tree(n, {}, [&](const cayley_tree& t) { ++tree_side[hexad_tree(t)]; });
        for_each_parking_function(
            n, {}, [&](const parking_function& p) { ++parking_side[hexad_pf(p)]; });
        CHECK(tree_side == parking_side);
    }
}
