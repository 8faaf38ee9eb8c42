// Command-line front end: record-code conversions, parking simulations with
// traces, statistic tables over exhaustive enumerations, and the full
// verification suite.
//
// Exit codes: 0 on success, 1 on verification failure, 2 on input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weary/codec.hpp"
#include "weary/families.hpp"
#include "weary/parking.hpp"
#include "weary/stats.hpp"
#include "weary/text.hpp"
#include "weary/tree.hpp"
#include "weary/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_input_error = 2;

// Inline tokens, or a single file name holding them.
std::vector<int> gather_tokens(const std::vector<std::string>& args) {
    if (args.size() == 1) {
        bool numeric = !args[0].empty() &&
                       args[0].find_first_not_of("-0123456789") == std::string::npos;
        if (!numeric) {
            std::ifstream in(args[0]);
            if (!in)
                throw weary::parse_error("cannot open file '" + args[0] + "'", 0);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return weary::parse_integers(buffer.str());
        }
    }
    std::string joined;
    for (const std::string& a : args) {
        joined += a;
        joined += ' ';
    }
    return weary::parse_integers(joined);
}

ordered_json hexad_json(const weary::stat_hexad& h) {
    return ordered_json::array(
        {h.records, h.probes, h.lucky, h.ones, h.mult, h.len});
}

std::string join_longs(const std::vector<long long>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

weary::shard_spec parse_shard(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw weary::bad_domain("shard must look like i/t");
    try {
        return weary::make_shard(std::stoll(text.substr(0, slash)),
                                 std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw weary::bad_domain("shard must look like i/t");
    } catch (const std::out_of_range&) {
        throw weary::bad_domain("shard must look like i/t");
    }
}

int cmd_encode(const std::vector<std::string>& args) {
    const weary::cayley_tree t = weary::tree_from_tokens(gather_tokens(args));
    std::cout << weary::to_text(weary::encode(t)) << "\n";
    return exit_ok;
}

int cmd_decode(const std::vector<std::string>& args) {
    const weary::record_code c = weary::code_from_tokens(gather_tokens(args));
    std::cout << weary::to_text(weary::decode(c)) << "\n";
    return exit_ok;
}

int cmd_park(const std::vector<std::string>& args, bool trace, const std::string& format) {
    const weary::parking_function p = weary::pf_from_tokens(gather_tokens(args));
    const weary::permutation birdseye = weary::classical_park(p);
    if (format == "json") {
        ordered_json j;
        j["preferences"] = p.prefs();
        j["birdseye"] = birdseye.word();
        if (trace) {
            ordered_json steps = ordered_json::array();
            for (const weary::park_step& st : weary::classical_park_trace(p))
                steps.push_back(
                    {{"car", st.car}, {"probes", st.probes}, {"spot", st.spot}});
            j["trace"] = std::move(steps);
        }
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    if (trace)
        for (const weary::park_step& st : weary::classical_park_trace(p))
            std::cout << "car " << st.car << ": probes " << join_ints(st.probes)
                      << " -> spot " << st.spot << "\n";
    std::cout << weary::to_text(birdseye) << "\n";
    return exit_ok;
}

int cmd_weary(const std::vector<std::string>& args, bool trace, const std::string& format) {
    const weary::cayley_tree t = weary::tree_from_tokens(gather_tokens(args));
    const weary::permutation w = weary::weary_permutation(t);
    if (format == "json") {
        ordered_json j;
        j["tree"] = t.parents();
        j["weary"] = w.word();
        if (trace) {
            ordered_json steps = ordered_json::array();
            for (int i = 1; i <= w.size(); ++i)
                steps.push_back({{"step", i}, {"vertex", w(i)}, {"parent", t.parent(w(i))}});
            j["trace"] = std::move(steps);
        }
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    if (trace)
        for (int i = 1; i <= w.size(); ++i)
            std::cout << "step " << i << ": vertex " << w(i) << " (parent "
                      << t.parent(w(i)) << ")\n";
    std::cout << weary::to_text(w) << "\n";
    return exit_ok;
}

int cmd_stats(const std::string& side, const std::vector<std::string>& args,
              const std::string& format) {
    const std::vector<int> tokens = gather_tokens(args);
    if (side == "tree") {
        const weary::cayley_tree t = weary::tree_from_tokens(tokens);
        const weary::tree_stats_t s = weary::tree_stats(t);
        if (format == "json") {
            ordered_json j;
            j["object"] = weary::to_text(t);
            j["hexad"] = hexad_json(weary::hexad_tree(t));
            j["records"] = s.rec_set;
            j["ord"] = s.ord;
            j["diff"] = s.diff;
            j["deg_root"] = s.deg_root;
            j["leaves"] = s.leaves;
            j["chseq"] = s.chseq;
            j["sasc"] = s.sasc;
            j["wait"] = s.wait;
            j["psa"] = s.psa;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "object: " << weary::to_text(t) << "\n"
                      << "records: {" << join_ints(s.rec_set, ",") << "}\n"
                      << "ord: " << s.ord << "\ndiff: " << s.diff
                      << "\ndeg_root: " << s.deg_root << "\nleaves: " << s.leaves
                      << "\nchseq: (" << join_longs(s.chseq, ",") << ")\nsasc: " << s.sasc
                      << "\nwait: " << s.wait << "\npsa: " << s.psa << "\n";
        }
        return exit_ok;
    }
    if (side == "pf") {
        const weary::parking_function p = weary::pf_from_tokens(tokens);
        const weary::pf_stats_t s = weary::pf_stats(p);
        if (format == "json") {
            ordered_json j;
            j["object"] = weary::to_text(p);
            j["hexad"] = hexad_json(weary::hexad_pf(p));
            j["records"] = s.rec_set;
            j["len"] = s.len;
            j["lucky"] = s.lucky;
            j["dis"] = s.dis;
            j["probes"] = s.probes;
            j["ones"] = s.ones;
            j["absent"] = s.absent;
            j["mult"] = s.mult;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "object: " << weary::to_text(p) << "\n"
                      << "records: {" << join_ints(s.rec_set, ",") << "}\n"
                      << "len: " << s.len << "\nlucky: " << s.lucky << "\ndis: " << s.dis
                      << "\nprobes: " << s.probes << "\nones: " << s.ones
                      << "\nabsent: " << s.absent << "\nmult: (" << join_longs(s.mult, ",")
                      << ")\n";
        }
        return exit_ok;
    }
    throw weary::bad_domain("side must be 'tree' or 'pf'");
}

int cmd_dist(int n, const std::string& side, const std::string& family,
             const std::string& format, int max_n) {
    if (n > max_n)
        throw weary::bad_domain("n exceeds the ceiling; raise --max-n to confirm");
    std::map<weary::stat_hexad, long long> hist;
    long long total = 0;
    if (side == "tree") {
        std::optional<weary::family_spec> spec;
        if (!family.empty())
            spec = weary::parse_family(weary::family_side::tree, family);
        weary::for_each_tree(n, {}, [&](const weary::cayley_tree& t) {
            if (spec && !weary::family_contains(*spec, t))
                return;
            ++hist[weary::hexad_tree(t)];
            ++total;
        });
    } else if (side == "pf") {
        std::optional<weary::family_spec> spec;
        if (!family.empty())
            spec = weary::parse_family(weary::family_side::parking, family);
        weary::for_each_parking_function(n, {}, [&](const weary::parking_function& p) {
            if (spec && !weary::family_contains(*spec, p))
                return;
            ++hist[weary::hexad_pf(p)];
            ++total;
        });
    } else {
        throw weary::bad_domain("side must be 'tree' or 'pf'");
    }

    const bool tree_side = side == "tree";
    const char* col2 = tree_side ? "wait" : "probes";
    const char* col3 = tree_side ? "psa" : "lucky";
    const char* col4 = tree_side ? "deg_root" : "ones";
    const char* col5 = tree_side ? "chseq" : "mult";
    const char* col6 = tree_side ? "ord" : "len";

    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& [h, count] : hist)
            rows.push_back({{"hexad", hexad_json(h)}, {"count", count}});
        ordered_json j;
        j["n"] = n;
        j["side"] = side;
        j["family"] = family.empty() ? ordered_json(nullptr) : ordered_json(family);
        j["rows"] = std::move(rows);
        j["total"] = total;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "records," << col2 << ',' << col3 << ',' << col4 << ',' << col5 << ','
                  << col6 << ",count\n";
        for (const auto& [h, count] : hist)
            std::cout << '{' << join_ints(h.records) << "}," << h.probes << ',' << h.lucky
                      << ',' << h.ones << ",(" << join_longs(h.mult) << ")," << h.len << ','
                      << count << "\n";
    } else {
        for (const auto& [h, count] : hist)
            std::cout << count << "\trecords={" << join_ints(h.records, ",") << "} " << col2
                      << '=' << h.probes << ' ' << col3 << '=' << h.lucky << ' ' << col4
                      << '=' << h.ones << ' ' << col5 << "=(" << join_longs(h.mult, ",")
                      << ") " << col6 << '=' << h.len << "\n";
        std::cout << "total\t" << total << "\n";
    }
    return exit_ok;
}

int cmd_count(int n, const std::string& side, const std::string& family,
              const std::string& format, int max_n) {
    if (n > max_n)
        throw weary::bad_domain("n exceeds the ceiling; raise --max-n to confirm");
    const weary::family_side fs =
        side == "tree" ? weary::family_side::tree : weary::family_side::parking;
    if (side != "tree" && side != "pf")
        throw weary::bad_domain("side must be 'tree' or 'pf'");
    const weary::family_spec spec =
        weary::parse_family(fs, family.empty() ? "all" : family);

    long long count = 0;
    if (fs == weary::family_side::tree)
        weary::for_each_tree(n, {}, [&](const weary::cayley_tree& t) {
            if (weary::family_contains(spec, t))
                ++count;
        });
    else
        weary::for_each_parking_function(n, {}, [&](const weary::parking_function& p) {
            if (weary::family_contains(spec, p))
                ++count;
        });

    long long formula = -1;
    switch (spec.kind) {
    case weary::family_kind::all:
        formula = weary::trees_of_order(n);
        break;
    case weary::family_kind::increasing:
    case weary::family_kind::subexceedant:
    case weary::family_kind::path:
    case weary::family_kind::permutation:
        formula = weary::factorial(n);
        break;
    case weary::family_kind::first_records:
        formula = n >= 1 ? weary::first_record_count_formula(n, spec.k) : -1;
        break;
    case weary::family_kind::stirling:
        formula = n % 2 == 0 ? weary::double_factorial_odd(n / 2) : 0;
        break;
    default:
        break;   // no closed form
    }

    ordered_json j;
    j["n"] = n;
    if (spec.k > 0)
        j["k"] = spec.k;
    j["family"] = family.empty() ? "all" : family;
    j["side"] = side;
    j["count"] = count;
    j["formula_value"] = formula >= 0 ? ordered_json(formula) : ordered_json(nullptr);
    j["match"] = formula >= 0 ? ordered_json(formula == count) : ordered_json(nullptr);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << n << " side=" << side << " family="
                  << (family.empty() ? "all" : family) << " count=" << count;
        if (formula >= 0)
            std::cout << " formula=" << formula << " match="
                      << (formula == count ? "true" : "false");
        std::cout << "\n";
    }
    if (formula >= 0 && formula != count)
        return exit_verification_failure;
    return exit_ok;
}

int cmd_codes(int n, const std::string& format, int max_n) {
    if (n > max_n)
        throw weary::bad_domain("n exceeds the ceiling; raise --max-n to confirm");
    if (n < 1)
        throw weary::bad_domain("code tables start at order 1");
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        weary::for_each_code(n, {}, [&](const weary::record_code& c) {
            const weary::cayley_tree t = weary::decode(c);
            rows.push_back({{"code", weary::to_text(c)},
                            {"tree", weary::to_text(t)},
                            {"records", weary::records(t)}});
        });
        ordered_json j;
        j["n"] = n;
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "code,tree,records\n";
        weary::for_each_code(n, {}, [&](const weary::record_code& c) {
            const weary::cayley_tree t = weary::decode(c);
            std::cout << weary::to_text(c) << ',' << weary::to_text(t) << ",{"
                      << join_ints(weary::records(t)) << "}\n";
        });
    } else {
        weary::for_each_code(n, {}, [&](const weary::record_code& c) {
            std::cout << weary::to_text(c) << "\t" << weary::to_text(weary::decode(c)) << "\n";
        });
    }
    return exit_ok;
}

int cmd_verify(int n, const std::string& shard_text, int threads, const std::string& format,
               int max_n) {
    if (n > max_n)
        throw weary::bad_domain("n exceeds the ceiling of " + std::to_string(max_n) +
                                "; raise --max-n to confirm");
    weary::shard_spec shard;
    if (!shard_text.empty())
        shard = parse_shard(shard_text);
    const weary::verify_report report = weary::run_verify(n, shard, threads);
    if (format == "json")
        std::cout << weary::report_to_json(report);
    else
        std::cout << weary::report_to_text(report);
    if (report.complete())
        return report.passed() ? exit_ok : exit_verification_failure;
    for (const weary::check_row& c : report.checks)
        if (c.violations != 0)
            return exit_verification_failure;
    return exit_ok;
}

int cmd_merge(const std::vector<std::string>& files, const std::string& format) {
    std::vector<weary::verify_report> parts;
    for (const std::string& path : files) {
        std::ifstream in(path);
        if (!in)
            throw weary::parse_error("cannot open report '" + path + "'", 0);
        std::stringstream buffer;
        buffer << in.rdbuf();
        parts.push_back(weary::report_from_json(buffer.str()));
    }
    const weary::verify_report merged = weary::merge_reports(std::move(parts));
    if (format == "json")
        std::cout << weary::report_to_json(merged);
    else
        std::cout << weary::report_to_text(merged);
    return merged.passed() ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Record codes of Cayley trees, weary parking, and the statistics "
                 "they transport"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    int max_n = 6;
    app.add_option("--max-n", max_n, "Ceiling for enumeration sizes")->capture_default_str();

    std::vector<std::string> encode_args;
    CLI::App* encode = app.add_subcommand("encode", "Tree -> record code");
    encode->add_option("tokens", encode_args, "Tree as 'n p_1 .. p_n' or a file")->required();

    std::vector<std::string> decode_args;
    CLI::App* decode = app.add_subcommand("decode", "Record code -> tree");
    decode->add_option("tokens", decode_args, "Code as 'n c_1 .. c_{n-1}' or a file")
        ->required();

    std::vector<std::string> park_args;
    bool park_trace = false;
    CLI::App* park = app.add_subcommand("park", "Classical parking simulation");
    park->add_option("tokens", park_args, "Preferences as 'n a_1 .. a_n' or a file")
        ->required();
    park->add_flag("--trace", park_trace, "Print the probe sequence of every car");

    std::vector<std::string> weary_args;
    bool weary_trace = false;
    CLI::App* weary_cmd = app.add_subcommand("weary", "Priority-first parking order");
    weary_cmd->add_option("tokens", weary_args, "Tree as 'n p_1 .. p_n' or a file")
        ->required();
    weary_cmd->add_flag("--trace", weary_trace, "Print the visit steps");

    std::string stats_side;
    std::vector<std::string> stats_args;
    CLI::App* stats = app.add_subcommand("stats", "Full statistics of one object");
    stats->add_option("side", stats_side, "'tree' or 'pf'")->required();
    stats->add_option("tokens", stats_args, "Object in canonical text form or a file")
        ->required();

    int dist_n = 0;
    std::string dist_side = "tree";
    std::string dist_family;
    CLI::App* dist = app.add_subcommand("dist", "Joint distribution of the six statistics");
    dist->add_option("n", dist_n, "Object size")->required()->check(CLI::NonNegativeNumber);
    dist->add_option("--side", dist_side, "'tree' or 'pf'")
        ->check(CLI::IsMember({"tree", "pf"}))
        ->capture_default_str();
    dist->add_option("--family", dist_family, "Restrict to a family, e.g. kary:2");

    int count_n = 0;
    std::string count_side = "tree";
    std::string count_family;
    CLI::App* count = app.add_subcommand("count", "Count a family and compare to its formula");
    count->add_option("n", count_n, "Object size")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--side", count_side, "'tree' or 'pf'")
        ->check(CLI::IsMember({"tree", "pf"}))
        ->capture_default_str();
    count->add_option("--family", count_family, "Family name, e.g. first_records:2");

    int codes_n = 0;
    CLI::App* codes = app.add_subcommand("codes", "Table of every code of order n");
    codes->add_option("n", codes_n, "Code order")->required()->check(CLI::PositiveNumber);

    int verify_n = 0;
    std::string verify_shard;
    int verify_threads = 1;
    CLI::App* verify = app.add_subcommand("verify", "Run every check up to n");
    verify->add_option("n", verify_n, "Largest object size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--shard", verify_shard, "Process slice i/t of every stream");
    verify->add_option("--threads", verify_threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<std::string> merge_files;
    CLI::App* merge = app.add_subcommand("merge", "Merge shard reports into one");
    merge->add_option("reports", merge_files, "JSON report files")->required();

    for (CLI::App* sub :
         {encode, decode, park, weary_cmd, stats, dist, count, codes, verify, merge})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        if (*encode)
            return cmd_encode(encode_args);
        if (*decode)
            return cmd_decode(decode_args);
        if (*park)
            return cmd_park(park_args, park_trace, format);
        if (*weary_cmd)
            return cmd_weary(weary_args, weary_trace, format);
        if (*stats)
            return cmd_stats(stats_side, stats_args, format);
        if (*dist)
            return cmd_dist(dist_n, dist_side, dist_family, format, max_n);
        if (*count)
            return cmd_count(count_n, count_side, count_family, format, max_n);
        if (*codes)
            return cmd_codes(codes_n, format, max_n);
        if (*verify)
            return cmd_verify(verify_n, verify_shard, verify_threads, format, max_n);
        if (*merge)
            return cmd_merge(merge_files, format);
    } catch (const weary::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
