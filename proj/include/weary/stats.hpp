#pragma once

// Statistics on parking functions and Cayley trees, the priority tree, and
// the six-tuples whose joint distributions coincide on the two sides.

#include <vector>

#include "parking.hpp"
#include "tree.hpp"

namespace weary {

struct pf_stats_t {
    std::vector<int> rec_set;        // records of the bird's-eye permutation
    long long len = 0;
    long long lucky = 0;             // cars with zero displacement
    long long dis = 0;               // total failed probes
    long long probes = 0;            // dis + len
    long long ones = 0;              // appearances of preference 1
    long long absent = 0;            // values of 1..n+1 that never appear
    std::vector<long long> mult;     // mult[i] = #values of 1..n+1 used i times

    auto operator<=>(const pf_stats_t&) const = default;
};

struct tree_stats_t {
    std::vector<int> rec_set;
    long long ord = 0;
    long long diff = 0;              // sum of i - parent(i)
    long long deg_root = 0;
    long long leaves = 0;            // childless non-root vertices
    long long sasc = 0;              // vertices whose parent is x - 1
    long long wait = 0;              // diff of the priority tree
    long long psa = 0;               // sasc of the priority tree
    std::vector<long long> chseq;    // chseq[i] = #vertices with i children

    auto operator<=>(const tree_stats_t&) const = default;
};

// Aligned six-tuple: (records, wait|probes, psa|lucky, deg_root|ones,
// chseq|mult, ord|len).  Field names follow the parking side.
struct stat_hexad {
    std::vector<int> records;
    long long probes = 0;
    long long lucky = 0;
    long long ones = 0;
    std::vector<long long> mult;
    long long len = 0;

    auto operator<=>(const stat_hexad&) const = default;
};

inline pf_stats_t pf_stats(const parking_function& p) {
    const int n = p.length();
    pf_stats_t s;
    s.len = n;
    s.rec_set = classical_park(p).left_to_right_maxima();

    for (const park_step& st : classical_park_trace(p)) {
        s.dis += static_cast<long long>(st.probes.size()) - 1;
        if (st.probes.size() == 1)
            ++s.lucky;
    }
    s.probes = s.dis + s.len;

    std::vector<long long> uses(n + 2, 0);
    for (int a : p.prefs()) {
        ++uses[a];
        if (a == 1)
            ++s.ones;
    }
    s.mult.assign(n + 1, 0);
    for (int v = 1; v <= n + 1; ++v)
        ++s.mult[uses[v]];
    s.absent = s.mult[0];
    return s;
}

// The tree relabelled by the inverse of its weary permutation: the i-th
// visited vertex becomes i.  Always increasing.
inline cayley_tree priority_tree(const cayley_tree& t) {
    const permutation visit = weary_permutation(t);
    const permutation pos = visit.inverse();
    std::vector<int> parent(t.order());
    for (int i = 1; i <= t.order(); ++i) {
        const int p = t.parent(visit(i));
        parent[i - 1] = p == 0 ? 0 : pos(p);
    }
    return cayley_tree(std::move(parent));
}

inline tree_stats_t tree_stats(const cayley_tree& t) {
    const int n = t.order();
    tree_stats_t s;
    s.ord = n;
    s.rec_set = records(t);

    const std::vector<int> kids = t.children_counts();
    s.deg_root = kids[0];
    s.chseq.assign(n + 1, 0);
    for (int v = 0; v <= n; ++v)
        ++s.chseq[kids[v]];
    for (int v = 1; v <= n; ++v) {
        if (kids[v] == 0)
            ++s.leaves;
        s.diff += v - t.parent(v);
        if (t.parent(v) == v - 1)
            ++s.sasc;
    }

    const cayley_tree pt = priority_tree(t);
    for (int v = 1; v <= n; ++v) {
        s.wait += v - pt.parent(v);
        if (pt.parent(v) == v - 1)
            ++s.psa;
    }
    return s;
}

inline stat_hexad hexad_pf(const parking_function& p) {
    pf_stats_t s = pf_stats(p);
    return {std::move(s.rec_set), s.probes, s.lucky, s.ones, std::move(s.mult), s.len};
}

inline stat_hexad hexad_tree(const cayley_tree& t) {
    tree_stats_t s = tree_stats(t);
    return {std::move(s.rec_set), s.wait, s.psa, s.deg_root, std::move(s.chseq), s.ord};
}

} // namespace weary
