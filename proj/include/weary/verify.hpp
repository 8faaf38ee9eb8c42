#pragma once

// Exhaustive verification engine.  Every check aggregates two shard-summable
// tallies (objects examined, violations found) plus a closed-form expected
// object count, so reports from a sharded run merge to the byte-identical
// report of the unsharded run.

#include <array>
#include <future>
#include <string>
#include <vector>

#include <json.hpp>

#include "codec.hpp"
#include "families.hpp"
#include "parking.hpp"
#include "stats.hpp"
#include "text.hpp"
#include "tree.hpp"

namespace weary {

struct check_row {
    std::string name;
    long long objects = 0;
    long long violations = 0;
    long long expected = -1;   // -1 when no closed-form count applies

    bool passed() const {
        return violations == 0 && (expected < 0 || objects == expected);
    }

    auto operator<=>(const check_row&) const = default;
};

struct verify_report {
    std::string schema = "weary.verify/1";
    int n_max = 0;
    long long shard_index = 0;
    long long shard_total = 1;
    std::vector<check_row> checks;

    bool complete() const { return shard_total == 1; }

    bool passed() const {
        if (!complete())
            return false;
        for (const check_row& c : checks)
            if (!c.passed())
                return false;
        return true;
    }

    auto operator<=>(const verify_report&) const = default;
};

namespace detail {

enum row_id : int {
    row_round_trip,
    row_bijection,
    row_record_preservation,
    row_equidistribution,
    row_counts_trees,
    row_counts_parent_maps,
    row_counts_parking_functions,
    row_counts_increasing,
    row_counts_subexceedant,
    row_counts_paths,
    row_counts_permutations,
    row_counts_fr_lex,
    row_counts_fr_enum,
    row_counts_forests,
    row_foata,
    row_takacs,
    row_log_concavity,
    row_dual_increasing,
    row_dual_path,
    row_dual_catalan,
    row_dual_kary2,
    row_dual_kary3,
    row_dual_stirling,
    row_count_
};

inline const std::array<const char*, row_count_>& row_names() {
    static const std::array<const char*, row_count_> names = {
        "round_trip",
        "bijection",
        "record_preservation",
        "equidistribution",
        "counts/trees",
        "counts/parent_maps",
        "counts/parking_functions",
        "counts/increasing_trees",
        "counts/subexceedant_pfs",
        "counts/path_trees",
        "counts/permutation_pfs",
        "counts/first_records_lex",
        "counts/first_records_enum",
        "counts/forests",
        "foata",
        "takacs",
        "log_concavity",
        "duality/increasing_subexceedant",
        "duality/path_permutation",
        "duality/catalan_pf02",
        "duality/kary2_pfle2",
        "duality/kary3_pfle3",
        "duality/stirling",
    };
    return names;
}

struct tallies {
    std::array<long long, row_count_> objects{};
    std::array<long long, row_count_> violations{};

    void hit(row_id r, bool ok) {
        ++objects[r];
        if (!ok)
            ++violations[r];
    }
};

// shared tree-side work for the code stream and the bare root
inline void tree_side_checks(const cayley_tree& t, const std::vector<int>& recs, tallies& y) {
    const parking_function pf = rho_inv(t);
    y.hit(row_bijection, rho(pf) == t);

    const permutation w = weary_permutation(t);
    bool rp = weary_permutation_recursive(t) == w;
    rp = rp && classical_park(pf) == w;
    rp = rp && w.left_to_right_maxima() == recs;
    y.hit(row_record_preservation, rp);

    bool eq = hexad_tree(t) == hexad_pf(pf);
    const cayley_tree pt = priority_tree(t);
    eq = eq && pt == arrival_tree(pf);
    eq = eq && is_increasing(pt);
    try {
        priority_vector_of(pf);   // the constructor enforces subexceedance
        eq = eq && static_cast<long long>(lucky_set(pf).size()) == pf_stats(pf).lucky;
    } catch (const error&) {
        eq = false;
    }
    y.hit(row_equidistribution, eq);
}

inline void pass_tree_side(int n, const shard_spec& shard, tallies& y) {
    if (n == 0) {
        if (!shard.accepts(0))
            return;
        const cayley_tree bare;
        ++y.objects[row_counts_trees];
        ++y.objects[row_counts_increasing];
        ++y.objects[row_counts_paths];
        tree_side_checks(bare, {}, y);
        return;
    }

    const family_spec increasing = make_family(family_side::tree, family_kind::increasing);
    for_each_code(n, shard, [&](const record_code& c) {
        ++y.objects[row_counts_trees];

        cayley_tree t;
        try {
            t = decode(c);
        } catch (const error&) {
            y.hit(row_round_trip, false);
            return;
        }

        const std::vector<int> recs = records(t);
        bool ok = encode(t) == c;
        ok = ok && classify(c).records == recs;
        ok = ok && reassemble(bonsai_decomposition(t)) == t;
        ok = ok && multiplicity_check(t);
        ok = ok && !recs.empty() && recs.back() == n && t.parent(recs.front()) == 0;
        const std::vector<int> kids = t.children_counts();
        long long kid_sum = 0;
        for (int k : kids)
            kid_sum += k;
        ok = ok && kid_sum == n;
        const bool incr = family_contains(increasing, t);
        ok = ok && is_subexceedant(c) == incr;
        const bool path = is_path_from_root(t);
        ok = ok && code_is_permutation(c) == (path && kids[n] == 0);
        y.hit(row_round_trip, ok);

        if (incr)
            ++y.objects[row_counts_increasing];
        if (path)
            ++y.objects[row_counts_paths];

        const std::vector<int> fr = first_records(t);
        const int fr_k = static_cast<int>(fr.size());
        const bool fr_initial = !fr.empty() && fr.back() == fr_k;
        if (fr_initial)
            ++y.objects[row_counts_fr_enum];
        for (int k = 1; k <= n; ++k) {
            const bool member = lex_range_membership(c, k);
            const bool direct = fr_initial && fr_k == k;
            if (member)
                y.hit(row_counts_fr_lex, member == direct);
            else if (direct)
                y.hit(row_counts_fr_lex, false);
        }

        tree_side_checks(t, recs, y);
    });
}

inline void pass_parent_maps(int n, const shard_spec& shard, tallies& y) {
    for_each_parent_map(n, shard, [&](const std::vector<int>& pm, bool valid) {
        if (!valid)
            return;
        ++y.objects[row_counts_parent_maps];
        const cayley_tree t{std::vector<int>(pm)};
        y.hit(row_round_trip, n == 0 || decode(encode(t)) == t);

        const forest f = forest_bridge(t);
        const std::vector<int> roots = f.roots();
        const int k = static_cast<int>(roots.size());
        const bool initial = n == 0 || (!roots.empty() && roots.back() == k);
        bool ok = forest_bridge_inv(f) == t && roots == first_records(t);
        if (n >= 1 && initial)
            y.hit(row_counts_forests, ok);
        else if (!ok)
            ++y.violations[row_counts_forests];
    });
}

inline void pass_parking_side(int n, const shard_spec& shard, tallies& y) {
    const family_spec subexceedant = make_family(family_side::parking, family_kind::subexceedant);
    const family_spec perm = make_family(family_side::parking, family_kind::permutation);
    const struct {
        row_id row;
        family_spec tree_family;
        family_spec parking_family;
    } pairs[] = {
        {row_dual_increasing, make_family(family_side::tree, family_kind::increasing),
         subexceedant},
        {row_dual_path, make_family(family_side::tree, family_kind::path), perm},
        {row_dual_catalan, make_family(family_side::tree, family_kind::catalan),
         make_family(family_side::parking, family_kind::pf02)},
        {row_dual_kary2, make_family(family_side::tree, family_kind::kary, 2),
         make_family(family_side::parking, family_kind::pfle, 2)},
        {row_dual_kary3, make_family(family_side::tree, family_kind::kary, 3),
         make_family(family_side::parking, family_kind::pfle, 3)},
    };

    for_each_preference_sequence(n, shard, [&](const std::vector<int>& prefs) {
        if (!try_park(prefs))
            return;
        ++y.objects[row_counts_parking_functions];
        const parking_function pf{std::vector<int>(prefs)};
        const cayley_tree t = rho(pf);
        y.hit(row_bijection, rho_inv(t) == pf);
        y.hit(row_record_preservation,
              records(t) == classical_park(pf).left_to_right_maxima());

        if (family_contains(subexceedant, pf))
            ++y.objects[row_counts_subexceedant];
        if (family_contains(perm, pf))
            ++y.objects[row_counts_permutations];
        for (const auto& pair : pairs)
            y.hit(pair.row,
                  family_contains(pair.parking_family, pf) ==
                      family_contains(pair.tree_family, t));
    });
}

inline void pass_foata(int n, const shard_spec& shard, tallies& y) {
    if (n < 1)
        return;
    std::vector<int> word(n - 1);
    for (int i = 0; i < n - 1; ++i)
        word[i] = i + 1;
    long long idx = 0;
    do {
        if (!shard.accepts(idx++))
            continue;
        std::vector<int> parent(n, 0);
        for (int j = 0; j + 1 < n - 1; ++j)
            parent[word[j + 1] - 1] = word[j];
        if (n >= 2) {
            parent[word[0] - 1] = 0;
            parent[n - 1] = word[n - 2];
        }
        const cayley_tree t{std::move(parent)};
        bool ok = false;
        try {
            std::vector<int> expect = word;
            expect.push_back(n);
            ok = verify_foata(t) && path_word(t) == expect;
        } catch (const error&) {
            ok = false;
        }
        y.hit(row_foata, ok);
    } while (std::next_permutation(word.begin(), word.end()));
}

inline void pass_arithmetic(int n_max, const shard_spec& shard, tallies& y) {
    long long takacs_idx = 0;
    long long logc_idx = 0;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k)
            if (shard.accepts(takacs_idx++))
                y.hit(row_takacs, takacs_term_check(n, k));
        for (int k = 2; k <= n - 1; ++k)
            if (shard.accepts(logc_idx++)) {
                const long long mid = first_record_count_formula(n, k);
                y.hit(row_log_concavity,
                      mid * mid >= first_record_count_formula(n, k - 1) *
                                       first_record_count_formula(n, k + 1));
            }
    }
}

inline void pass_stirling(int n_max, const shard_spec& shard, tallies& y) {
    for (int m = 0; 2 * m <= n_max; ++m) {
        for_each_stirling_permutation(m, shard, [&](const std::vector<int>& word) {
            bool ok = false;
            if (try_park(word)) {
                const parking_function pf{std::vector<int>(word)};
                ok = rho_inv(rho(pf)) == pf;
            }
            y.hit(row_dual_stirling, ok);
        });
    }
}

inline std::array<long long, row_count_> expected_objects(int n_max) {
    long long trees_total = 0, fact_total = 0, fr_total = 0, foata_total = 0;
    long long takacs_pairs = 0, logc_triples = 0, stirling_total = 0;
    for (int n = 0; n <= n_max; ++n) {
        trees_total += trees_of_order(n);
        fact_total += factorial(n);
        if (n >= 1) {
            foata_total += factorial(n - 1);
            for (int k = 1; k <= n; ++k)
                fr_total += first_record_count_formula(n, k);
        }
        if (n >= 2) {
            takacs_pairs += n;
            logc_triples += n - 2;
        }
        if (n % 2 == 0)
            stirling_total += double_factorial_odd(n / 2);
    }

    std::array<long long, row_count_> e{};
    e[row_round_trip] = 2 * trees_total - 1;   // codes plus valid parent maps
    e[row_bijection] = 2 * trees_total;
    e[row_record_preservation] = 2 * trees_total;
    e[row_equidistribution] = trees_total;
    e[row_counts_trees] = trees_total;
    e[row_counts_parent_maps] = trees_total;
    e[row_counts_parking_functions] = trees_total;
    e[row_counts_increasing] = fact_total;
    e[row_counts_subexceedant] = fact_total;
    e[row_counts_paths] = fact_total;
    e[row_counts_permutations] = fact_total;
    e[row_counts_fr_lex] = fr_total;
    e[row_counts_fr_enum] = fr_total;
    e[row_counts_forests] = fr_total;
    e[row_foata] = foata_total;
    e[row_takacs] = takacs_pairs;
    e[row_log_concavity] = logc_triples;
    e[row_dual_increasing] = trees_total;
    e[row_dual_path] = trees_total;
    e[row_dual_catalan] = trees_total;
    e[row_dual_kary2] = trees_total;
    e[row_dual_kary3] = trees_total;
    e[row_dual_stirling] = stirling_total;
    return e;
}

inline verify_report run_verify_single(int n_max, const shard_spec& shard) {
    tallies y;
    for (int n = 0; n <= n_max; ++n) {
        pass_tree_side(n, shard, y);
        pass_parent_maps(n, shard, y);
        pass_parking_side(n, shard, y);
        pass_foata(n, shard, y);
    }
    pass_arithmetic(n_max, shard, y);
    pass_stirling(n_max, shard, y);

    const std::array<long long, row_count_> expected = expected_objects(n_max);
    verify_report r;
    r.n_max = n_max;
    r.shard_index = shard.index;
    r.shard_total = shard.total;
    for (int i = 0; i < row_count_; ++i)
        r.checks.push_back({row_names()[i], y.objects[i], y.violations[i], expected[i]});
    return r;
}

inline verify_report sum_reports(const std::vector<verify_report>& parts, long long shard_index,
                                 long long shard_total) {
    if (parts.empty())
        throw bad_domain("nothing to merge");
    verify_report out = parts.front();
    out.shard_index = shard_index;
    out.shard_total = shard_total;
    for (std::size_t p = 1; p < parts.size(); ++p) {
        const verify_report& r = parts[p];
        if (r.schema != out.schema || r.n_max != out.n_max ||
            r.checks.size() != out.checks.size())
            throw bad_domain("reports disagree on schema or n_max");
        for (std::size_t i = 0; i < out.checks.size(); ++i) {
            check_row& a = out.checks[i];
            const check_row& b = r.checks[i];
            if (a.name != b.name || a.expected != b.expected)
                throw bad_domain("reports disagree on check '" + a.name + "'");
            a.objects += b.objects;
            a.violations += b.violations;
        }
    }
    return out;
}

} // namespace detail

// Run every check up to n_max.  A sharded run covers the slice of each
// enumeration stream with index % total == shard.index; threads fan out over
// sub-shards and merge, so the result does not depend on the thread count.
inline verify_report run_verify(int n_max, const shard_spec& shard = {}, int threads = 1) {
    if (n_max < 0)
        throw bad_domain("n_max must be nonnegative");
    if (n_max > 12)
        throw bad_domain("n_max above 12 would overflow the exact counts");
    if (threads <= 1)
        return detail::run_verify_single(n_max, shard);

    std::vector<std::future<verify_report>> futures;
    futures.reserve(threads);
    for (int j = 0; j < threads; ++j) {
        const shard_spec sub{shard.index + shard.total * j, shard.total * threads};
        futures.push_back(std::async(std::launch::async, [n_max, sub] {
            return detail::run_verify_single(n_max, sub);
        }));
    }
    std::vector<verify_report> parts;
    parts.reserve(threads);
    for (auto& f : futures)
        parts.push_back(f.get());
    return detail::sum_reports(parts, shard.index, shard.total);
}

// Merge a full set of shard reports into the report of the unsharded run.
inline verify_report merge_reports(std::vector<verify_report> parts) {
    if (parts.empty())
        throw bad_domain("nothing to merge");
    std::sort(parts.begin(), parts.end(),
              [](const verify_report& a, const verify_report& b) {
                  return a.shard_index < b.shard_index;
              });
    const long long total = parts.front().shard_total;
    if (static_cast<long long>(parts.size()) != total)
        throw bad_domain("expected " + std::to_string(total) + " shard reports, got " +
                         std::to_string(parts.size()));
    for (long long i = 0; i < total; ++i)
        if (parts[i].shard_index != i || parts[i].shard_total != total)
            throw bad_domain("shard reports must cover indices 0..total-1 exactly once");
    return detail::sum_reports(parts, 0, 1);
}

inline nlohmann::ordered_json report_to_json_value(const verify_report& r) {
    nlohmann::ordered_json j;
    j["schema"] = r.schema;
    j["n_max"] = r.n_max;
    if (r.complete())
        j["shard"] = nullptr;
    else
        j["shard"] = {{"index", r.shard_index}, {"total", r.shard_total}};
    j["complete"] = r.complete();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const check_row& c : r.checks) {
        nlohmann::ordered_json row;
        row["name"] = c.name;
        row["objects"] = c.objects;
        row["violations"] = c.violations;
        if (c.expected >= 0)
            row["expected"] = c.expected;
        else
            row["expected"] = nullptr;
        if (r.complete())
            row["pass"] = c.passed();
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    if (r.complete())
        j["pass"] = r.passed();
    return j;
}

inline std::string report_to_json(const verify_report& r) {
    return report_to_json_value(r).dump(2) + "\n";
}

inline verify_report report_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad report JSON: ") + e.what(), 0);
    }
    try {
        verify_report r;
        r.schema = j.at("schema").get<std::string>();
        r.n_max = j.at("n_max").get<int>();
        if (!j.at("shard").is_null()) {
            r.shard_index = j["shard"].at("index").get<long long>();
            r.shard_total = j["shard"].at("total").get<long long>();
        }
        for (const auto& row : j.at("checks")) {
            check_row c;
            c.name = row.at("name").get<std::string>();
            c.objects = row.at("objects").get<long long>();
            c.violations = row.at("violations").get<long long>();
            c.expected = row.at("expected").is_null() ? -1 : row.at("expected").get<long long>();
            r.checks.push_back(std::move(c));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed report: ") + e.what(), 0);
    }
}

inline std::string report_to_text(const verify_report& r) {
    std::string out;
    for (const check_row& c : r.checks) {
        std::string line;
        if (r.complete())
            line = c.passed() ? "PASS" : "FAIL";
        else
            line = "PART";
        line += " " + c.name + " objects=" + std::to_string(c.objects) +
                " violations=" + std::to_string(c.violations);
        if (c.expected >= 0)
            line += " expected=" + std::to_string(c.expected);
        out += line + "\n";
    }
    if (r.complete())
        out += std::string(r.passed() ? "PASS" : "FAIL") + " overall n_max=" +
               std::to_string(r.n_max) + "\n";
    else
        out += "PARTIAL shard " + std::to_string(r.shard_index) + "/" +
               std::to_string(r.shard_total) + " n_max=" + std::to_string(r.n_max) + "\n";
    return out;
}

} // namespace weary
