#pragma once

// Rooted labelled trees on {0} u [n], where 0 stands for the root, together
// with record vertices and the bonsai/attachment decomposition obtained by
// cutting every edge that leaves a record.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weary {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a key/value of the input lies outside the required domain
struct bad_domain : error {
    using error::error;
};

// some vertex never reaches the root by iterating the parent map
struct cycle_detected : error {
    using error::error;
};

// operation undefined on the bare root
struct empty_tree : error {
    using error::error;
};

struct dangling_attachment : error {
    using error::error;
};

// A rooted labelled tree on {0} u [n].  Immutable after construction; the
// constructor rejects parent maps that do not reach the root from every
// vertex.  Order 0 is the bare root.
class cayley_tree {
  public:
    cayley_tree() = default;

    explicit cayley_tree(std::vector<int> parents) : parent_(std::move(parents)) {
        const int n = order();
        for (int i = 1; i <= n; ++i) {
            const int p = parent_[i - 1];
            if (p < 0 || p > n)
                throw bad_domain("parent of vertex " + std::to_string(i) +
                                 " out of range: " + std::to_string(p));
        }
        for (int i = 1; i <= n; ++i) {
            int v = i;
            int steps = 0;
            while (v != 0 && steps <= n) {
                v = parent_[v - 1];
                ++steps;
            }
            if (v != 0)
                throw cycle_detected("vertex " + std::to_string(i) +
                                     " never reaches the root");
        }
    }

    // keys must be exactly 1..n
    static cayley_tree from_map(const std::map<int, int>& parent) {
        std::vector<int> p;
        p.reserve(parent.size());
        int expect = 1;
        for (const auto& [v, q] : parent) {
            if (v != expect)
                throw bad_domain("parent map keys must be exactly 1..n");
            ++expect;
            p.push_back(q);
        }
        return cayley_tree(std::move(p));
    }

    int order() const { return static_cast<int>(parent_.size()); }

    int parent(int v) const {
        if (v < 1 || v > order())
            throw bad_domain("no vertex " + std::to_string(v));
        return parent_[v - 1];
    }

    const std::vector<int>& parents() const { return parent_; }

    // entry v = number of children of v, for v in 0..n
    std::vector<int> children_counts() const {
        std::vector<int> c(order() + 1, 0);
        for (int p : parent_)
            ++c[p];
        return c;
    }

    // sorted child lists, index 0..n
    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> c(order() + 1);
        for (int v = 1; v <= order(); ++v)
            c[parent_[v - 1]].push_back(v);
        return c;
    }

    auto operator<=>(const cayley_tree&) const = default;

  private:
    std::vector<int> parent_;
};

inline cayley_tree validate_tree(const std::map<int, int>& parent) {
    return cayley_tree::from_map(parent);
}

// A vertex is a record when its label is the largest along its path to the
// root.  The root itself is never a record; n is always one.
inline std::vector<int> records(const cayley_tree& t) {
    std::vector<int> out;
    for (int v = 1; v <= t.order(); ++v) {
        bool rec = true;
        for (int a = t.parent(v); a != 0; a = t.parent(a)) {
            if (a > v) {
                rec = false;
                break;
            }
        }
        if (rec)
            out.push_back(v);
    }
    return out;
}

// sorted children of the root; these are exactly the records adjacent to it
inline std::vector<int> first_records(const cayley_tree& t) {
    std::vector<int> out;
    for (int v = 1; v <= t.order(); ++v)
        if (t.parent(v) == 0)
            out.push_back(v);
    return out;
}

inline bool is_increasing(const cayley_tree& t) {
    for (int v = 1; v <= t.order(); ++v)
        if (t.parent(v) >= v)
            return false;
    return true;
}

inline bool is_planted(const cayley_tree& t) {
    return t.order() >= 1 && t.children_counts()[0] == 1;
}

// A tree on an arbitrary finite label set whose root is its only record.
// The parent map sends the root to 0.
struct bonsai {
    int root = 0;
    std::map<int, int> parent;

    auto operator<=>(const bonsai&) const = default;
};

struct record_decomposition {
    std::vector<bonsai> bonsais;      // ordered by increasing root label
    std::vector<int> attachments;     // parents of the 2nd, 3rd, ... roots

    auto operator<=>(const record_decomposition&) const = default;
};

inline record_decomposition bonsai_decomposition(const cayley_tree& t) {
    const int n = t.order();
    if (n == 0)
        throw empty_tree("the bare root has no bonsai decomposition");

    const std::vector<int> recs = records(t);
    std::vector<char> is_rec(n + 1, 0);
    for (int r : recs)
        is_rec[r] = 1;

    // nearest record weakly above each vertex; every path to the root passes
    // through one
    std::vector<int> owner(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int u = v;
        while (!is_rec[u])
            u = t.parent(u);
        owner[v] = u;
    }

    record_decomposition d;
    std::map<int, std::size_t> index_of_root;
    for (std::size_t j = 0; j < recs.size(); ++j) {
        bonsai b;
        b.root = recs[j];
        b.parent[b.root] = 0;
        index_of_root[recs[j]] = j;
        d.bonsais.push_back(std::move(b));
    }
    for (int v = 1; v <= n; ++v) {
        if (is_rec[v])
            continue;
        d.bonsais[index_of_root[owner[v]]].parent[v] = t.parent(v);
    }
    for (std::size_t j = 1; j < recs.size(); ++j)
        d.attachments.push_back(t.parent(recs[j]));
    return d;
}

inline cayley_tree reassemble(const record_decomposition& d) {
    if (d.bonsais.empty())
        throw empty_tree("nothing to reassemble");
    if (d.attachments.size() + 1 != d.bonsais.size())
        throw bad_domain("attachment sequence must be one shorter than the bonsai sequence");

    std::size_t total = 0;
    int prev_root = 0;
    for (const bonsai& b : d.bonsais) {
        if (b.root <= prev_root)
            throw bad_domain("bonsai roots must be strictly increasing");
        prev_root = b.root;
        auto it = b.parent.find(b.root);
        if (it == b.parent.end() || it->second != 0)
            throw bad_domain("bonsai root must map to the sentinel 0");
        for (const auto& [v, p] : b.parent) {
            if (v < 1)
                throw bad_domain("bonsai labels must be positive");
            if (v > b.root)
                throw bad_domain("bonsai root must carry the largest label");
            if (v != b.root && (p == 0 || b.parent.find(p) == b.parent.end()))
                throw bad_domain("bonsai parent must stay inside the bonsai");
        }
        // walk every vertex to the sentinel; the label set is finite
        for (const auto& [v, p] : b.parent) {
            int u = v;
            std::size_t steps = 0;
            while (u != 0 && steps <= b.parent.size()) {
                u = b.parent.at(u);
                ++steps;
            }
            if (u != 0)
                throw cycle_detected("bonsai vertex never reaches its root");
        }
        total += b.parent.size();
    }

    const int n = static_cast<int>(total);
    std::vector<int> parent(n, -1);
    std::vector<char> attachable(n + 1, 0);
    attachable[0] = 1;
    for (std::size_t j = 0; j < d.bonsais.size(); ++j) {
        const bonsai& b = d.bonsais[j];
        const int root_parent = j == 0 ? 0 : d.attachments[j - 1];
        if (root_parent < 0 || root_parent > n || !attachable[root_parent])
            throw dangling_attachment("attachment target " + std::to_string(root_parent) +
                                      " is not available for bonsai " + std::to_string(j + 1));
        for (const auto& [v, p] : b.parent) {
            if (v > n || parent[v - 1] != -1)
                throw bad_domain("bonsai vertex sets must partition 1..n");
            parent[v - 1] = v == b.root ? root_parent : p;
        }
        for (const auto& [v, p] : b.parent)
            attachable[v] = 1;
    }
    return cayley_tree(std::move(parent));
}

// A permutation of [n] in one-line notation.
class permutation {
  public:
    permutation() = default;

    explicit permutation(std::vector<int> word) : word_(std::move(word)) {
        const int n = size();
        std::vector<char> seen(n + 1, 0);
        for (int x : word_) {
            if (x < 1 || x > n || seen[x])
                throw bad_domain("not a permutation word of 1..n");
            seen[x] = 1;
        }
    }

    int size() const { return static_cast<int>(word_.size()); }

    int operator()(int i) const {
        if (i < 1 || i > size())
            throw bad_domain("permutation argument out of range");
        return word_[i - 1];
    }

    const std::vector<int>& word() const { return word_; }

    permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (int i = 1; i <= size(); ++i)
            inv[word_[i - 1] - 1] = i;
        return permutation(std::move(inv));
    }

    std::vector<int> left_to_right_maxima() const {
        std::vector<int> out;
        int best = 0;
        for (int x : word_)
            if (x > best) {
                out.push_back(x);
                best = x;
            }
        return out;
    }

    auto operator<=>(const permutation&) const = default;

  private:
    std::vector<int> word_;
};

} // namespace weary
