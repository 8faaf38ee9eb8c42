#pragma once

// Canonical text forms.  A tree is "n p_1 .. p_n", a record code is
// "n c_1 .. c_{n-1}", a parking function is "n a_1 .. a_n"; permutations are
// printed as bare words.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "codec.hpp"
#include "parking.hpp"
#include "tree.hpp"

namespace weary {

struct parse_error : error {
    std::size_t position;   // byte offset into the input
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

inline std::vector<int> parse_integers(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        bool negative = false;
        if (text[i] == '-') {
            negative = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected an integer, got '" + std::string(1, text[start]) + "'",
                              start);
        long long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000)
                throw parse_error("integer too large", start);
            ++i;
        }
        out.push_back(static_cast<int>(negative ? -value : value));
    }
    return out;
}

namespace detail {

inline std::string join(const std::vector<int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            os << ' ';
        os << values[i];
    }
    return os.str();
}

// first token is the object size, followed by exactly `count(n)` entries
template <typename Count>
std::pair<int, std::vector<int>> split_sized(const std::vector<int>& tokens, Count&& count,
                                             const char* what) {
    if (tokens.empty())
        throw parse_error(std::string("missing order for ") + what, 0);
    const int n = tokens[0];
    if (n < 0)
        throw parse_error(std::string("negative order for ") + what, 0);
    const long long want = count(n);
    if (static_cast<long long>(tokens.size()) - 1 != want)
        throw parse_error(std::string(what) + " of order " + std::to_string(n) + " needs " +
                              std::to_string(want) + " entries, got " +
                              std::to_string(tokens.size() - 1),
                          0);
    return {n, std::vector<int>(tokens.begin() + 1, tokens.end())};
}

} // namespace detail

inline std::string to_text(const cayley_tree& t) {
    std::string out = std::to_string(t.order());
    const std::string rest = detail::join(t.parents());
    if (!rest.empty())
        out += ' ' + rest;
    return out;
}

inline cayley_tree tree_from_tokens(const std::vector<int>& tokens) {
    auto [n, entries] = detail::split_sized(tokens, [](int n) { return n; }, "tree");
    (void)n;
    return cayley_tree(std::move(entries));
}

inline cayley_tree tree_from_text(const std::string& text) {
    return tree_from_tokens(parse_integers(text));
}

inline std::string to_text(const record_code& c) {
    std::string out = std::to_string(c.order());
    const std::string rest = detail::join(c.entries());
    if (!rest.empty())
        out += ' ' + rest;
    return out;
}

inline record_code code_from_tokens(const std::vector<int>& tokens) {
    if (!tokens.empty() && tokens[0] < 1)
        throw parse_error("record code order must be at least 1", 0);
    auto [n, entries] = detail::split_sized(tokens, [](int n) { return n - 1; }, "record code");
    return record_code(n, std::move(entries));
}

inline record_code code_from_text(const std::string& text) {
    return code_from_tokens(parse_integers(text));
}

inline std::string to_text(const parking_function& p) {
    std::string out = std::to_string(p.length());
    const std::string rest = detail::join(p.prefs());
    if (!rest.empty())
        out += ' ' + rest;
    return out;
}

inline parking_function pf_from_tokens(const std::vector<int>& tokens) {
    auto [n, entries] = detail::split_sized(tokens, [](int n) { return n; }, "parking function");
    (void)n;
    return parking_function(std::move(entries));
}

inline parking_function pf_from_text(const std::string& text) {
    return pf_from_tokens(parse_integers(text));
}

inline std::string to_text(const permutation& w) { return detail::join(w.word()); }

} // namespace weary
