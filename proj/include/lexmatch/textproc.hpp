#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexmatch/porter.hpp"

namespace lexmatch::textproc {

// A token is a lowercased maximal run of word characters; a term is its
// Porter stem. Both are plain strings by convention.
using Token = std::string;
using Term = std::string;

// Lowercase + split on any non-alphanumeric character. Stopwords are kept.
// Non-ASCII codepoints count as word characters unless they fall in common
// punctuation blocks; Latin-1 uppercase letters are lowercased, everything
// else passes through byte-identically.
std::vector<Token> tokenize(std::string_view text);

// Porter stem of a single token.
inline Term stem(const Token& token) { return porter_stem(token); }

// tokenize + stem, order and duplicates preserved.
std::vector<Term> analyze(std::string_view text);

// Distinct terms of analyze(text), sorted. This is the per-query term set
// used for weighting.
std::vector<Term> unique_terms(std::string_view text);

// Stopword list: one word per line, UTF-8; each line is analyzed so lookups
// operate on stems. Blank lines and lines starting with '#' are ignored.
std::unordered_set<std::string> load_stopword_stems(const std::string& path);

}  // namespace lexmatch::textproc
