#pragma once

// The record code of a Cayley tree: a bijection between trees on {0} u [n]
// and sequences of length n-1 over 0..n.  Non-record positions carry the
// vertex's parent; record positions carry the attachment sequence.

#include <algorithm>
#include <utility>
#include <vector>

#include "tree.hpp"

namespace weary {

struct entry_out_of_range : error {
    using error::error;
};

struct k_out_of_range : error {
    using error::error;
};

struct not_a_path : error {
    using error::error;
};

struct wrong_endpoints : error {
    using error::error;
};

// Sequence c_1 .. c_{n-1} over 0..n; carries its order explicitly because a
// length of n-1 is ambiguous for n = 1.
class record_code {
  public:
    record_code() = default;   // the empty code of order 1

    record_code(int order, std::vector<int> entries)
        : order_(order), entries_(std::move(entries)) {
        if (order_ < 1)
            throw bad_domain("code order must be at least 1");
        if (static_cast<int>(entries_.size()) != order_ - 1)
            throw bad_domain("code of order " + std::to_string(order_) + " needs " +
                             std::to_string(order_ - 1) + " entries, got " +
                             std::to_string(entries_.size()));
        for (int c : entries_)
            if (c < 0 || c > order_)
                throw entry_out_of_range("code entry " + std::to_string(c) +
                                         " outside 0.." + std::to_string(order_));
    }

    int order() const { return order_; }
    const std::vector<int>& entries() const { return entries_; }

    auto operator<=>(const record_code&) const = default;

  private:
    int order_ = 1;
    std::vector<int> entries_;
};

inline record_code encode(const cayley_tree& t) {
    const int n = t.order();
    if (n == 0)
        throw empty_tree("the bare root has no record code");

    const std::vector<int> recs = records(t);
    std::vector<char> is_rec(n + 1, 0);
    for (int r : recs)
        is_rec[r] = 1;

    // record positions among 1..n-1 are the records below n, in increasing
    // order; they receive the parents of the 2nd, 3rd, ... records
    std::vector<int> entries(n - 1, 0);
    std::size_t next = 1;
    for (int i = 1; i <= n - 1; ++i) {
        if (is_rec[i])
            entries[i - 1] = t.parent(recs[next++]);
        else
            entries[i - 1] = t.parent(i);
    }
    return record_code(n, std::move(entries));
}

struct code_classification {
    std::vector<int> records;       // ascending, always contains n
    std::vector<int> non_records;   // ascending

    auto operator<=>(const code_classification&) const = default;
};

// i < n is a non-record iff the walk i, c_i, c_{c_i}, ... attains a value
// larger than i before reaching 0.  A walk over at most n values either
// terminates or cycles, so n steps suffice.
inline code_classification classify(const record_code& c) {
    const int n = c.order();
    const std::vector<int>& e = c.entries();
    code_classification out;
    for (int i = 1; i <= n - 1; ++i) {
        int v = e[i - 1];
        bool rec = true;
        int steps = 1;
        while (v != 0 && steps <= n) {
            if (v > i) {
                rec = false;
                break;
            }
            v = e[v - 1];
            ++steps;
        }
        (rec ? out.records : out.non_records).push_back(i);
    }
    out.records.push_back(n);
    return out;
}

inline cayley_tree decode(const record_code& c) {
    const int n = c.order();
    const std::vector<int>& e = c.entries();
    const code_classification cls = classify(c);

    std::vector<int> parent(n, 0);
    for (int i : cls.non_records)
        parent[i - 1] = e[i - 1];
    const std::vector<int>& r = cls.records;
    parent[r.front() - 1] = 0;
    for (std::size_t j = 0; j + 1 < r.size(); ++j)
        parent[r[j + 1] - 1] = e[r[j] - 1];
    return cayley_tree(std::move(parent));
}

// Every vertex appears in the code as often as it has children; the root one
// time fewer.
inline bool multiplicity_check(const cayley_tree& t) {
    const int n = t.order();
    if (n == 0)
        throw empty_tree("no record code for the bare root");
    std::vector<int> mult(n + 1, 0);
    const record_code code = encode(t);
    for (int c : code.entries())
        ++mult[c];
    const std::vector<int> kids = t.children_counts();
    if (mult[0] != kids[0] - 1)
        return false;
    for (int v = 1; v <= n; ++v)
        if (mult[v] != kids[v])
            return false;
    return true;
}

inline bool is_subexceedant(const record_code& c) {
    for (int i = 1; i <= c.order() - 1; ++i)
        if (c.entries()[i - 1] > i)
            return false;
    return true;
}

// Bounds for the codes of trees whose root children are exactly 1..k:
// 0^{k-1} 1^{n-k} below and 0^{k-1} k n^{n-k-1} above, truncated to length
// n-1.  The codes of those trees are the ones between the two entrywise;
// the lexicographic interval between them is strictly larger once n >= k+3,
// and no longer matches the k n^{n-k-1} count.
inline std::pair<std::vector<int>, std::vector<int>> lex_range_bounds(int n, int k) {
    if (k < 1 || k > n)
        throw k_out_of_range("k must lie in 1.." + std::to_string(n));
    std::vector<int> lo, hi;
    lo.reserve(n - 1);
    hi.reserve(n - 1);
    for (int i = 0; i < k - 1; ++i) {
        lo.push_back(0);
        hi.push_back(0);
    }
    for (int i = k - 1; i < n - 1; ++i)
        lo.push_back(1);
    if (static_cast<int>(hi.size()) < n - 1)
        hi.push_back(k);
    while (static_cast<int>(hi.size()) < n - 1)
        hi.push_back(n);
    return {std::move(lo), std::move(hi)};
}

inline bool lex_range_membership(const record_code& c, int k) {
    const auto [lo, hi] = lex_range_bounds(c.order(), k);
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (c.entries()[i] < lo[i] || c.entries()[i] > hi[i])
            return false;
    return true;
}

// True when the entries are a permutation word of 1..n-1, which happens
// exactly for path graphs with endpoints 0 and n.
inline bool code_is_permutation(const record_code& c) {
    const int n = c.order();
    std::vector<char> seen(n, 0);
    for (int x : c.entries()) {
        if (x < 1 || x > n - 1 || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

// Labels of a path graph read from the root's neighbour to the far endpoint.
inline std::vector<int> path_word(const cayley_tree& t) {
    const int n = t.order();
    if (n == 0)
        throw not_a_path("the bare root has no path word");
    const std::vector<std::vector<int>> ch = t.children();
    for (int v = 0; v <= n; ++v)
        if (ch[v].size() > 1)
            throw not_a_path("vertex " + std::to_string(v) + " has more than one child");
    std::vector<int> word;
    word.reserve(n);
    int v = ch[0].empty() ? 0 : ch[0][0];
    while (v != 0) {
        word.push_back(v);
        v = ch[v].empty() ? 0 : ch[v][0];
    }
    if (static_cast<int>(word.size()) != n)
        throw not_a_path("tree is not a single chain from the root");
    return word;
}

// Foata's fundamental transformation: split the word before each
// left-to-right maximum and read the blocks as cycles.
inline permutation foata(const std::vector<int>& word) {
    [[maybe_unused]] permutation check{std::vector<int>(word)};   // validates the letters
    const int m = static_cast<int>(word.size());
    std::vector<int> one_line(m);
    std::size_t start = 0;
    int best = 0;
    for (std::size_t i = 0; i <= word.size(); ++i) {
        if (i == word.size() || word[i] > best) {
            if (i > start) {
                for (std::size_t j = start; j + 1 < i; ++j)
                    one_line[word[j] - 1] = word[j + 1];
                one_line[word[i - 1] - 1] = word[start];
            }
            if (i < word.size()) {
                best = word[i];
                start = i;
            }
        }
    }
    return permutation(std::move(one_line));
}

// The code of a path with endpoints 0 and n, read as a permutation of
// 1..n-1, equals the inverse of the Foata transform of the path word with
// its final n removed.
inline bool verify_foata(const cayley_tree& t) {
    std::vector<int> word = path_word(t);
    if (word.back() != t.order())
        throw wrong_endpoints("path must end at the largest label");
    word.pop_back();
    return encode(t).entries() == foata(word).inverse().word();
}

} // namespace weary
