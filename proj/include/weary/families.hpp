#pragma once

// Exhaustive enumerators over trees, codes, preference sequences and parent
// maps; membership predicates for the restricted families; the first-record
// counting identities; and the forest bridge.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codec.hpp"
#include "parking.hpp"
#include "stats.hpp"
#include "tree.hpp"

namespace weary {

struct side_mismatch : error {
    using error::error;
};

// Deterministic slice of an enumeration stream: element i is processed when
// i % total == index.
struct shard_spec {
    long long index = 0;
    long long total = 1;

    bool accepts(long long i) const { return i % total == index; }
};

inline shard_spec make_shard(long long index, long long total) {
    if (total < 1 || index < 0 || index >= total)
        throw bad_domain("shard index must lie in 0..total-1");
    return {index, total};
}

namespace detail {

// odometer over {lo..hi}^len in lexicographic order
template <typename Fn>
void for_each_word(int len, int lo, int hi, const shard_spec& shard, Fn&& fn) {
    std::vector<int> w(len, lo);
    long long idx = 0;
    for (;;) {
        if (shard.accepts(idx))
            fn(std::as_const(w));
        ++idx;
        int pos = len - 1;
        while (pos >= 0 && w[pos] == hi)
            w[pos--] = lo;
        if (pos < 0)
            return;
        ++w[pos];
    }
}

} // namespace detail

// All (n+1)^{n-1} record codes of order n, lexicographically.
template <typename Fn>
void for_each_code(int n, const shard_spec& shard, Fn&& fn) {
    if (n < 1)
        return;
    detail::for_each_word(n - 1, 0, n, shard, [&](const std::vector<int>& w) {
        fn(record_code(n, w));
    });
}

// All Cayley trees of order n, in the lexicographic order of their codes.
template <typename Fn>
void for_each_tree(int n, const shard_spec& shard, Fn&& fn) {
    if (n == 0) {
        if (shard.accepts(0))
            fn(cayley_tree{});
        return;
    }
    for_each_code(n, shard, [&](const record_code& c) { fn(decode(c)); });
}

// All n^n preference sequences, lexicographically.
template <typename Fn>
void for_each_preference_sequence(int n, const shard_spec& shard, Fn&& fn) {
    if (n == 0) {
        if (shard.accepts(0))
            fn(std::vector<int>{});
        return;
    }
    detail::for_each_word(n, 1, n, shard, fn);
}

// The (n+1)^{n-1} parking functions of length n, filtered from the n^n
// preference sequences by the classical process itself.
template <typename Fn>
void for_each_parking_function(int n, const shard_spec& shard, Fn&& fn) {
    for_each_preference_sequence(n, shard, [&](const std::vector<int>& prefs) {
        if (try_park(prefs))
            fn(parking_function(std::vector<int>(prefs)));
    });
}

// All (n+1)^n parent maps 1..n -> 0..n; the flag marks the acyclic ones.
// Independent of the codec, so it serves as the brute-force tree oracle.
template <typename Fn>
void for_each_parent_map(int n, const shard_spec& shard, Fn&& fn) {
    if (n == 0) {
        if (shard.accepts(0))
            fn(std::vector<int>{}, true);
        return;
    }
    detail::for_each_word(n, 0, n, shard, [&](const std::vector<int>& w) {
        bool valid = true;
        for (int i = 1; i <= n && valid; ++i) {
            int v = i;
            int steps = 0;
            while (v != 0 && steps <= n) {
                v = w[v - 1];
                ++steps;
            }
            valid = v == 0;
        }
        fn(w, valid);
    });
}

enum class family_side { tree, parking };

enum class family_kind {
    all,
    increasing,
    subexceedant,
    path,
    permutation,
    catalan,
    pf02,
    kary,
    pfle,
    stirling,
    first_records,
};

struct family_spec {
    family_side side = family_side::tree;
    family_kind kind = family_kind::all;
    int k = 0;
};

inline family_spec make_family(family_side side, family_kind kind, int k = 0) {
    switch (kind) {
    case family_kind::all:
    case family_kind::stirling:
        break;
    case family_kind::increasing:
    case family_kind::path:
    case family_kind::catalan:
        if (side != family_side::tree)
            throw side_mismatch("tree-side family requested on the parking side");
        break;
    case family_kind::kary:
    case family_kind::first_records:
        if (side != family_side::tree)
            throw side_mismatch("tree-side family requested on the parking side");
        if (k < 1)
            throw bad_domain("family parameter k must be at least 1");
        break;
    case family_kind::subexceedant:
    case family_kind::permutation:
    case family_kind::pf02:
        if (side != family_side::parking)
            throw side_mismatch("parking-side family requested on the tree side");
        break;
    case family_kind::pfle:
        if (side != family_side::parking)
            throw side_mismatch("parking-side family requested on the tree side");
        if (k < 1)
            throw bad_domain("family parameter k must be at least 1");
        break;
    }
    return {side, kind, k};
}

// "kary:2", "first_records:3", plain names otherwise
inline family_spec parse_family(family_side side, const std::string& text) {
    std::string name = text;
    int k = 0;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        try {
            k = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw bad_domain("bad family parameter in '" + text + "'");
        }
    }
    static const std::map<std::string, family_kind> kinds = {
        {"all", family_kind::all},
        {"increasing", family_kind::increasing},
        {"subexceedant", family_kind::subexceedant},
        {"path", family_kind::path},
        {"permutation", family_kind::permutation},
        {"catalan", family_kind::catalan},
        {"pf02", family_kind::pf02},
        {"kary", family_kind::kary},
        {"pfle", family_kind::pfle},
        {"stirling", family_kind::stirling},
        {"first_records", family_kind::first_records},
    };
    const auto it = kinds.find(name);
    if (it == kinds.end())
        throw bad_domain("unknown family '" + name + "'");
    return make_family(side, it->second, k);
}

// Every vertex has at most one child, so the tree is a single chain leaving
// the root.  The far endpoint need not be n.
inline bool is_path_from_root(const cayley_tree& t) {
    for (int c : t.children_counts())
        if (c > 1)
            return false;
    return true;
}

// Word over the multiset {1,1,...,m,m} in which any value between the two
// copies of i exceeds i.
inline bool is_stirling_word(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    if (n % 2 != 0)
        return false;
    const int m = n / 2;
    std::vector<int> first(m + 1, 0), second(m + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        const int v = word[pos - 1];
        if (v < 1 || v > m)
            return false;
        if (first[v] == 0)
            first[v] = pos;
        else if (second[v] == 0)
            second[v] = pos;
        else
            return false;
    }
    for (int v = 1; v <= m; ++v) {
        if (second[v] == 0)
            return false;
        for (int pos = first[v] + 1; pos < second[v]; ++pos)
            if (word[pos - 1] < v)
                return false;
    }
    return true;
}

inline bool family_contains(const family_spec& s, const cayley_tree& t) {
    if (s.side != family_side::tree)
        throw side_mismatch("parking-side family applied to a tree");
    switch (s.kind) {
    case family_kind::all:
        return true;
    case family_kind::increasing:
        return is_increasing(t);
    case family_kind::path:
        return is_path_from_root(t);
    case family_kind::catalan:
        for (int c : t.children_counts())
            if (c != 0 && c != 2)
                return false;
        return true;
    case family_kind::kary:
        for (int c : t.children_counts())
            if (c > s.k)
                return false;
        return true;
    case family_kind::first_records: {
        const std::vector<int> fr = first_records(t);
        if (static_cast<int>(fr.size()) != s.k)
            return false;
        for (int i = 0; i < s.k; ++i)
            if (fr[i] != i + 1)
                return false;
        return true;
    }
    case family_kind::stirling:
        // extensional: no direct characterization is known
        return is_stirling_word(rho_inv(t).prefs());
    default:
        throw side_mismatch("parking-side family applied to a tree");
    }
}

inline bool family_contains(const family_spec& s, const parking_function& p) {
    if (s.side != family_side::parking)
        throw side_mismatch("tree-side family applied to a parking function");
    switch (s.kind) {
    case family_kind::all:
        return true;
    case family_kind::subexceedant: {
        for (int i = 1; i <= p.length(); ++i)
            if (p.pref(i) > i)
                return false;
        return true;
    }
    case family_kind::permutation: {
        std::vector<char> seen(p.length() + 1, 0);
        for (int a : p.prefs()) {
            if (seen[a])
                return false;
            seen[a] = 1;
        }
        return true;
    }
    case family_kind::pf02:
    case family_kind::pfle: {
        std::vector<int> uses(p.length() + 2, 0);
        for (int a : p.prefs())
            ++uses[a];
        for (int v = 1; v <= p.length() + 1; ++v) {
            if (s.kind == family_kind::pf02 && uses[v] != 0 && uses[v] != 2)
                return false;
            if (s.kind == family_kind::pfle && uses[v] > s.k)
                return false;
        }
        return true;
    }
    case family_kind::stirling:
        return is_stirling_word(p.prefs());
    default:
        throw side_mismatch("tree-side family applied to a parking function");
    }
}

inline long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

// (n+1)^{n-1}, which also counts the parking functions of length n
inline long long trees_of_order(int n) { return n == 0 ? 1 : ipow(n + 1, n - 1); }

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Forests rooted at exactly [k] number k * n^{n-k-1}; the k = n boundary is
// the single forest of isolated vertices.
inline long long first_record_count_formula(int n, int k) {
    if (k < 1 || k > n)
        throw k_out_of_range("k must lie in 1.." + std::to_string(n));
    if (k == n)
        return 1;
    return k * ipow(n, n - k - 1);
}

inline long long count_first_record_trees_lex(int n, int k) {
    if (k < 1 || k > n)
        throw k_out_of_range("k must lie in 1.." + std::to_string(n));
    long long count = 0;
    for_each_code(n, {}, [&](const record_code& c) {
        if (lex_range_membership(c, k))
            ++count;
    });
    return count;
}

inline long long count_first_record_trees(int n, int k) {
    if (k < 1 || k > n)
        throw k_out_of_range("k must lie in 1.." + std::to_string(n));
    const family_spec spec = make_family(family_side::tree, family_kind::first_records, k);
    long long count = 0;
    for_each_tree(n, {}, [&](const cayley_tree& t) {
        if (family_contains(spec, t))
            ++count;
    });
    return count;
}

template <typename Fn>
void enumerate_first_record_trees(int n, int k, Fn&& fn) {
    if (k < 1 || k > n)
        throw k_out_of_range("k must lie in 1.." + std::to_string(n));
    const family_spec spec = make_family(family_side::tree, family_kind::first_records, k);
    for_each_tree(n, {}, [&](const cayley_tree& t) {
        if (family_contains(spec, t))
            fn(t);
    });
}

// A forest on [n] as a parent map with 0 marking component roots.  Deleting
// the root of a Cayley tree and reading the same parent map gives the forest
// rooted at the former root's children; the bridge is that reinterpretation.
class forest {
  public:
    forest() = default;

    explicit forest(std::vector<int> parents) : tree_(std::move(parents)) {}

    int size() const { return tree_.order(); }
    const std::vector<int>& parents() const { return tree_.parents(); }

    std::vector<int> roots() const { return first_records(tree_); }

    auto operator<=>(const forest&) const = default;

  private:
    cayley_tree tree_;   // reuses the reach-the-root validation
};

inline forest forest_bridge(const cayley_tree& t) { return forest(t.parents()); }

inline cayley_tree forest_bridge_inv(const forest& f) { return cayley_tree(f.parents()); }

// f(n, k) = sum_j C(n-k, j) f(n-1, k+j-1) in exact integers, with the
// boundary values f(m, 0) = 0 and f(m, m) = 1.
inline bool takacs_term_check(int n, int k) {
    if (n < 2 || k < 1 || k > n)
        throw k_out_of_range("need n >= 2 and k in 1..n");
    const auto f = [](int m, int l) -> long long {
        if (l <= 0 || l > m)
            return 0;
        if (l == m)
            return 1;
        return l * ipow(m, m - l - 1);
    };
    long long sum = 0;
    for (int j = 0; j <= n - k; ++j)
        sum += binomial(n - k, j) * f(n - 1, k + j - 1);
    return sum == f(n, k);
}

inline bool takacs_identity_check(int n) {
    for (int k = 1; k <= n; ++k)
        if (!takacs_term_check(n, k))
            return false;
    return true;
}

inline bool log_concavity_check(int n) {
    if (n < 2)
        throw bad_domain("log-concavity check needs n >= 2");
    for (int k = 2; k <= n - 1; ++k) {
        const long long mid = first_record_count_formula(n, k);
        if (mid * mid <
            first_record_count_formula(n, k - 1) * first_record_count_formula(n, k + 1))
            return false;
    }
    return true;
}

inline long long double_factorial_odd(int m) {
    long long r = 1;
    for (int i = 3; i <= 2 * m - 1; i += 2)
        r *= i;
    return m >= 1 ? r : 1;
}

// Distinct rearrangements of {1,1,...,m,m} with the nesting property, in
// lexicographic order.
template <typename Fn>
void for_each_stirling_permutation(int m, const shard_spec& shard, Fn&& fn) {
    std::vector<int> word;
    for (int v = 1; v <= m; ++v) {
        word.push_back(v);
        word.push_back(v);
    }
    std::sort(word.begin(), word.end());
    long long idx = 0;
    do {
        if (is_stirling_word(word)) {
            if (shard.accepts(idx))
                fn(std::as_const(word));
            ++idx;
        }
    } while (std::next_permutation(word.begin(), word.end()));
}

// rho must carry the parking family exactly onto the tree family, and the
// restricted hexad multisets must coincide.
inline bool duality_check(const family_spec& tree_family, const family_spec& parking_family,
                          int n) {
    if (tree_family.side != family_side::tree || parking_family.side != family_side::parking)
        throw side_mismatch("duality check wants a tree family and a parking family");

    std::map<stat_hexad, long long> tree_hexads, parking_hexads;
    long long members_a = 0, members_b = 0;
    bool ok = true;

    for_each_tree(n, {}, [&](const cayley_tree& t) {
        if (family_contains(tree_family, t)) {
            ++members_a;
            ++tree_hexads[hexad_tree(t)];
        }
    });

    std::map<cayley_tree, long long> image;
    for_each_parking_function(n, {}, [&](const parking_function& p) {
        if (!family_contains(parking_family, p))
            return;
        ++members_b;
        ++parking_hexads[hexad_pf(p)];
        const cayley_tree t = rho(p);
        if (!family_contains(tree_family, t))
            ok = false;
        ++image[t];
    });

    for (const auto& [t, count] : image)
        if (count != 1)
            ok = false;   // rho must stay injective on the family
    return ok && members_a == members_b && tree_hexads == parking_hexads;
}

} // namespace weary
