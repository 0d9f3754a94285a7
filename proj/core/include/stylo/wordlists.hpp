#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace stylo {

// Bundled closed-class lexicons and helper lists. The lists ship as text
// files under core/data/ (one token per line, '#' comments) and are embedded
// into the library at build time. content_hash fingerprints the raw bytes;
// model artifacts record it and scoring refuses to run under list drift.
struct WordLists {
    std::unordered_set<std::string> function_words;
    std::unordered_set<std::string> pronouns;
    std::unordered_set<std::string> determiners;
    std::unordered_set<std::string> prepositions;
    std::unordered_set<std::string> conjunctions;
    std::unordered_set<std::string> auxiliaries;
    std::unordered_set<std::string> numerals;
    std::unordered_set<std::string> verbs;
    std::unordered_set<std::string> dale_chall_easy;
    std::vector<std::string> abbreviations;  // sorted longest-first
    std::string content_hash;

    static const WordLists& bundled();
};

// Parses the one-token-per-line format ('#' starts a comment, blank lines
// ignored, entries lowercased).
std::unordered_set<std::string> parse_word_list(std::string_view raw);

}  // namespace stylo
