#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cicl {

// Collapse runs of spaces/tabs/CRs into one space per line, trim line ends,
// preserve internal newlines, trim the whole string. No case folding.
std::string normalize_whitespace(std::string_view text);

// Default word tokenizer used for prompt token counting and token-level
// metrics: split on whitespace, then peel leading and trailing ASCII
// punctuation characters off each chunk as individual tokens. Internal
// punctuation stays put ("top-rated" is one token).
std::vector<std::string> word_tokens(std::string_view text);

// Maximal runs of ASCII alphabetic characters, lowercased. The tokenization
// rule behind constraint words and constraint checking.
std::vector<std::string> alpha_tokens(std::string_view text);

// Distinct lowercased alphabetic runs of length >= 2, in order of first
// appearance. The pool make_constraint_task samples from.
std::vector<std::string> eligible_constraint_words(std::string_view text);

std::string to_lower_ascii(std::string_view text);

}  // namespace cicl
