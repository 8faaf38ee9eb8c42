#pragma once

// Weary parking on trees (priority-first search), the classical parking
// process for preference sequences, and the record-preserving bijection
// between the two worlds: rho sends a parking function to its parking tree,
// rho_inv reads the preference sequence off a tree.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tree.hpp"

namespace weary {

struct not_a_parking_function : error {
    int car;
    explicit not_a_parking_function(int car_)
        : error("car " + std::to_string(car_) + " cannot park"), car(car_) {}
};

namespace detail {

// bird's-eye permutation (spot -> car), or the first stuck car
struct park_outcome {
    std::vector<int> spot_car;   // index 1..n, empty on failure
    int stuck_car = 0;
};

inline park_outcome simulate_park(const std::vector<int>& prefs) {
    const int n = static_cast<int>(prefs.size());
    park_outcome out;
    out.spot_car.assign(n + 1, 0);
    for (int car = 1; car <= n; ++car) {
        int s = prefs[car - 1];
        if (s < 1 || s > n) {
            out.stuck_car = car;
            out.spot_car.clear();
            return out;
        }
        while (s <= n && out.spot_car[s] != 0)
            ++s;
        if (s > n) {
            out.stuck_car = car;
            out.spot_car.clear();
            return out;
        }
        out.spot_car[s] = car;
    }
    return out;
}

} // namespace detail

inline std::optional<permutation> try_park(const std::vector<int>& prefs) {
    detail::park_outcome out = detail::simulate_park(prefs);
    if (out.spot_car.empty())
        return std::nullopt;
    return permutation(std::vector<int>(out.spot_car.begin() + 1, out.spot_car.end()));
}

// Classical parking: car i probes its preferred spot, then walks forward to
// the first free one.  Succeeding for every car is the definition of a
// parking function, so this doubles as the membership test.
inline permutation classical_park(const std::vector<int>& prefs) {
    detail::park_outcome out = detail::simulate_park(prefs);
    if (out.spot_car.empty())
        throw not_a_parking_function(out.stuck_car);
    return permutation(std::vector<int>(out.spot_car.begin() + 1, out.spot_car.end()));
}

// A preference sequence accepted by the classical parking process.
class parking_function {
  public:
    parking_function() = default;   // the empty parking function

    explicit parking_function(std::vector<int> prefs) : prefs_(std::move(prefs)) {
        detail::park_outcome out = detail::simulate_park(prefs_);
        if (out.spot_car.empty())
            throw not_a_parking_function(out.stuck_car);
    }

    int length() const { return static_cast<int>(prefs_.size()); }

    int pref(int car) const {
        if (car < 1 || car > length())
            throw bad_domain("no car " + std::to_string(car));
        return prefs_[car - 1];
    }

    const std::vector<int>& prefs() const { return prefs_; }

    auto operator<=>(const parking_function&) const = default;

  private:
    std::vector<int> prefs_;
};

inline permutation classical_park(const parking_function& p) {
    return classical_park(p.prefs());
}

struct park_step {
    int car = 0;
    std::vector<int> probes;   // spots tried, the last one succeeds
    int spot = 0;
};

inline std::vector<park_step> classical_park_trace(const parking_function& p) {
    const int n = p.length();
    std::vector<int> spot_car(n + 1, 0);
    std::vector<park_step> steps;
    steps.reserve(n);
    for (int car = 1; car <= n; ++car) {
        park_step st;
        st.car = car;
        int s = p.pref(car);
        st.probes.push_back(s);
        while (spot_car[s] != 0) {
            ++s;
            st.probes.push_back(s);
        }
        st.spot = s;
        spot_car[s] = car;
        steps.push_back(std::move(st));
    }
    return steps;
}

// Priority-first search from the root: repeatedly visit the smallest
// unvisited vertex whose parent has been visited.  Position i of the result
// holds the i-th visited vertex.
inline permutation weary_permutation(const cayley_tree& t) {
    const std::vector<std::vector<int>> ch = t.children();
    std::vector<int> word;
    word.reserve(t.order());
    std::set<int> frontier(ch[0].begin(), ch[0].end());
    while (!frontier.empty()) {
        const int v = *frontier.begin();
        frontier.erase(frontier.begin());
        word.push_back(v);
        frontier.insert(ch[v].begin(), ch[v].end());
    }
    return permutation(std::move(word));
}

namespace detail {

// Bonsai-word recursion on a tree over an arbitrary label set (0 = root):
// emit each bonsai root in increasing order, replace the root by 0 inside
// its bonsai, drop singletons and recurse.
inline void weary_bonsai_word(const std::map<int, int>& parent, std::vector<int>& out) {
    if (parent.empty())
        return;
    std::map<int, int> nearest_record;   // vertex -> its bonsai root
    std::map<int, std::vector<int>> members;
    for (const auto& [v, p] : parent) {
        bool rec = true;
        for (int a = p; a != 0; a = parent.at(a)) {
            if (a > v) {
                rec = false;
                break;
            }
        }
        if (rec)
            members[v];   // roots seed the member lists
        nearest_record[v] = rec ? v : 0;
    }
    for (const auto& [v, p] : parent) {
        if (nearest_record[v] != 0)
            continue;
        int u = v;
        while (nearest_record.at(u) == 0 || nearest_record.at(u) != u)
            u = parent.at(u);
        nearest_record[v] = u;
    }
    for (const auto& [v, r] : nearest_record)
        if (v != r)
            members[r].push_back(v);
    for (const auto& [root, verts] : members) {
        out.push_back(root);
        std::map<int, int> sub;
        for (int v : verts)
            sub[v] = parent.at(v) == root ? 0 : parent.at(v);
        weary_bonsai_word(sub, out);
    }
}

} // namespace detail

inline permutation weary_permutation_recursive(const cayley_tree& t) {
    std::map<int, int> parent;
    for (int v = 1; v <= t.order(); ++v)
        parent[v] = t.parent(v);
    std::vector<int> word;
    word.reserve(t.order());
    detail::weary_bonsai_word(parent, word);
    return permutation(std::move(word));
}

// Preference of car i: one past the parking position of its parent, with the
// root parked at position 0.  Always a parking function.
inline parking_function preference_sequence(const cayley_tree& t) {
    const permutation pos = weary_permutation(t).inverse();
    std::vector<int> prefs(t.order());
    for (int v = 1; v <= t.order(); ++v) {
        const int p = t.parent(v);
        prefs[v - 1] = (p == 0 ? 0 : pos(p)) + 1;
    }
    return parking_function(std::move(prefs));
}

// Subexceedant sequence with sigma_i <= i; sigma_i is the spot preferred by
// the car that ends up parked at spot i.
class priority_vector {
  public:
    priority_vector() = default;

    explicit priority_vector(std::vector<int> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] < 1 || values_[i] > static_cast<int>(i) + 1)
                throw bad_domain("priority vector must be subexceedant");
    }

    int length() const { return static_cast<int>(values_.size()); }

    int at(int i) const {
        if (i < 1 || i > length())
            throw bad_domain("priority vector index out of range");
        return values_[i - 1];
    }

    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const priority_vector&) const = default;

  private:
    std::vector<int> values_;
};

inline priority_vector priority_vector_of(const parking_function& p) {
    const permutation birdseye = classical_park(p);
    std::vector<int> values(p.length());
    for (int i = 1; i <= p.length(); ++i)
        values[i - 1] = p.pref(birdseye(i));
    return priority_vector(std::move(values));
}

// Increasing tree with parent(i) = sigma_i - 1; its record code is
// (sigma_2 - 1, ..., sigma_n - 1).
inline cayley_tree arrival_tree(const parking_function& p) {
    const priority_vector pv = priority_vector_of(p);
    std::vector<int> parent(p.length());
    for (int i = 1; i <= p.length(); ++i)
        parent[i - 1] = pv.at(i) - 1;
    return cayley_tree(std::move(parent));
}

// The arrival tree relabelled through the bird's-eye permutation:
// parent(i) = omega(pref(i) - 1) with omega(0) = 0.
inline cayley_tree parking_tree(const parking_function& p) {
    const permutation birdseye = classical_park(p);
    std::vector<int> parent(p.length());
    for (int i = 1; i <= p.length(); ++i) {
        const int s = p.pref(i) - 1;
        parent[i - 1] = s == 0 ? 0 : birdseye(s);
    }
    return cayley_tree(std::move(parent));
}

inline cayley_tree rho(const parking_function& p) { return parking_tree(p); }

inline parking_function rho_inv(const cayley_tree& t) { return preference_sequence(t); }

// Cars that park at their preferred spot; these occupy the fixed points of
// the priority vector.
inline std::vector<int> lucky_set(const parking_function& p) {
    const permutation birdseye = classical_park(p);
    const priority_vector pv = priority_vector_of(p);
    std::vector<int> cars;
    for (int i = 1; i <= p.length(); ++i)
        if (pv.at(i) == i)
            cars.push_back(birdseye(i));
    std::sort(cars.begin(), cars.end());
    return cars;
}

} // namespace weary
