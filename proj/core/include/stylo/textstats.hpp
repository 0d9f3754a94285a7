#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stylo {

enum class PosTag { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, CONJ, NUM, PUNCT, OTHER };

const char* to_string(PosTag tag);

struct Token {
    std::string text;  // surface form, case preserved
    bool is_punct = false;
};

// Token stream plus sentence segmentation. Sentence ranges are [begin, end)
// indices into tokens; they are ordered, non-overlapping and jointly cover
// every token.
struct TokenizedText {
    std::string text;  // the cleaned input the stream was built from
    std::vector<Token> tokens;
    std::vector<std::pair<std::size_t, std::size_t>> sentences;
    std::size_t char_count = 0;    // Unicode scalars in text
    std::size_t letter_count = 0;  // letter scalars in text
    std::size_t upper_count = 0;   // uppercase letter scalars

    std::size_t word_count() const;
    std::size_t punct_count() const;
    // Word tokens inside one sentence range.
    std::size_t sentence_word_count(std::size_t sentence_idx) const;
};

// Word tokens are maximal runs of letters/digits/apostrophes (a run of
// apostrophes alone counts as punctuation); every other non-space character
// becomes its own punctuation token. Sentences end at '.', '!' or '?'
// followed by an uppercase-initial word or end of text; bundled
// abbreviations ("Dr.", "e.g.", ...) are absorbed into single word tokens
// and never end a sentence. Text with no terminator is one sentence.
// Throws std::invalid_argument on empty input.
TokenizedText tokenize(const std::string& cleaned_text);

// Heuristic: maximal aeiouy groups of the lowercased word, minus one for a
// terminal silent 'e' (kept when a consonant+"le" ending), floor 1.
// Throws std::invalid_argument if the word has no ASCII letter.
int count_syllables(const std::string& word);

// Two-stage rule tagger: bundled closed-class lexicons first, then suffix
// rules (-ly ADV; -ing/-ed/-s via verb-stem table; -ous/-ful/-ive/-able
// ADJ), defaulting to NOUN. One tag per token; PUNCT iff punctuation token.
std::vector<PosTag> pos_tag(const TokenizedText& tt);

inline bool is_content_tag(PosTag t) {
    return t == PosTag::NOUN || t == PosTag::VERB || t == PosTag::ADJ || t == PosTag::ADV;
}

}  // namespace stylo
