#include "cicl/text.hpp"

#include <cctype>

namespace cicl {

namespace {

bool is_hspace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (is_hspace(s[b]) || s[b] == '\n')) ++b;
    while (e > b && (is_hspace(s[e - 1]) || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t line_start = out.size();
    bool pending_space = false;
    for (char c : text) {
        if (c == '\n') {
            while (out.size() > line_start && is_hspace(out.back())) out.pop_back();
            out.push_back('\n');
            line_start = out.size();
            pending_space = false;
        } else if (is_hspace(c)) {
            pending_space = true;
        } else {
            if (pending_space && out.size() > line_start) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    while (out.size() > line_start && is_hspace(out.back())) out.pop_back();
    return trim(out);
}

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) break;
        std::string_view chunk = text.substr(i, j - i);
        std::size_t b = 0;
        std::size_t e = chunk.size();
        while (b < e && is_punct(chunk[b])) tokens.emplace_back(1, chunk[b++]);
        std::vector<std::string> trailing;
        while (e > b && is_punct(chunk[e - 1])) trailing.emplace_back(1, chunk[--e]);
        if (e > b) tokens.emplace_back(chunk.substr(b, e - b));
        for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
            tokens.push_back(std::move(*it));
        i = j;
    }
    return tokens;
}

std::vector<std::string> alpha_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_alpha(c)) {
            current.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> eligible_constraint_words(std::string_view text) {
    std::vector<std::string> words;
    for (auto& tok : alpha_tokens(text)) {
        if (tok.size() < 2) continue;
        bool seen = false;
        for (const auto& w : words) {
            if (w == tok) {
                seen = true;
                break;
            }
        }
        if (!seen) words.push_back(tok);
    }
    return words;
}

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace cicl
