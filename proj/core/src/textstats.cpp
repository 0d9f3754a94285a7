#include "stylo/textstats.hpp"

#include <stdexcept>

#include "stylo/utf8.hpp"
#include "stylo/wordlists.hpp"

namespace stylo {

namespace {

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_ascii_alpha(char32_t cp) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

// Latin letters incl. the common diacritic ranges; enough for the bundled
// English-plus-borrowings scope.
bool is_letter_cp(char32_t cp) {
    if (is_ascii_alpha(cp)) return true;
    if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
    return cp >= 0x100 && cp <= 0x24F;
}

bool is_upper_cp(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return true;
    return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool is_word_cp(char32_t cp) {
    return is_letter_cp(cp) || is_ascii_digit(cp) || is_apostrophe(cp);
}

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\r': case 0x0B: case 0x0C:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = ascii_lower(c);
    return out;
}

// Case-insensitive ASCII match of `abbr` at position i of s; the match must
// start a token (caller guarantees) and is rejected if it would split a
// longer word-character run.
bool match_abbreviation(std::string_view s, std::size_t i, const std::string& abbr) {
    if (i + abbr.size() > s.size()) return false;
    for (std::size_t k = 0; k < abbr.size(); ++k) {
        if (ascii_lower(s[i + k]) != abbr[k]) return false;
    }
    std::size_t after = i + abbr.size();
    if (after < s.size()) {
        std::size_t j = after;
        char32_t next = utf8::decode(s, j);
        if (is_word_cp(next)) return false;
    }
    return true;
}

bool starts_with_uppercase(const std::string& token) {
    std::size_t i = 0;
    char32_t cp = utf8::decode(token, i);
    return is_upper_cp(cp);
}

bool is_terminator(const Token& t) {
    return t.is_punct && (t.text == "." || t.text == "!" || t.text == "?");
}

}  // namespace

const char* to_string(PosTag tag) {
    switch (tag) {
        case PosTag::NOUN: return "NOUN";
        case PosTag::VERB: return "VERB";
        case PosTag::ADJ: return "ADJ";
        case PosTag::ADV: return "ADV";
        case PosTag::PRON: return "PRON";
        case PosTag::DET: return "DET";
        case PosTag::ADP: return "ADP";
        case PosTag::CONJ: return "CONJ";
        case PosTag::NUM: return "NUM";
        case PosTag::PUNCT: return "PUNCT";
        case PosTag::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::size_t TokenizedText::word_count() const {
    std::size_t n = 0;
    for (const Token& t : tokens)
        if (!t.is_punct) ++n;
    return n;
}

std::size_t TokenizedText::punct_count() const { return tokens.size() - word_count(); }

std::size_t TokenizedText::sentence_word_count(std::size_t sentence_idx) const {
    auto [b, e] = sentences[sentence_idx];
    std::size_t n = 0;
    for (std::size_t i = b; i < e; ++i)
        if (!tokens[i].is_punct) ++n;
    return n;
}

TokenizedText tokenize(const std::string& cleaned_text) {
    if (cleaned_text.empty()) {
        throw std::invalid_argument("tokenize: empty text");
    }
    const WordLists& wl = WordLists::bundled();
    TokenizedText tt;
    tt.text = cleaned_text;
    const std::string& s = tt.text;

    for (std::size_t i = 0; i < s.size();) {
        char32_t cp = utf8::decode(s, i);
        tt.char_count++;
        if (is_letter_cp(cp)) {
            tt.letter_count++;
            if (is_upper_cp(cp)) tt.upper_count++;
        }
    }

    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t at = i;
        char32_t cp = utf8::decode(s, i);
        if (is_space_cp(cp)) continue;

        if (is_ascii_alpha(cp)) {
            bool matched = false;
            for (const std::string& abbr : wl.abbreviations) {
                if (match_abbreviation(s, at, abbr)) {
                    tt.tokens.push_back({s.substr(at, abbr.size()), false});
                    i = at + abbr.size();
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
        }

        if (is_word_cp(cp)) {
            std::size_t run_end = i;
            bool has_alnum = is_letter_cp(cp) || is_ascii_digit(cp);
            while (run_end < s.size()) {
                std::size_t j = run_end;
                char32_t c2 = utf8::decode(s, j);
                if (!is_word_cp(c2)) break;
                has_alnum = has_alnum || is_letter_cp(c2) || is_ascii_digit(c2);
                run_end = j;
            }
            if (has_alnum) {
                tt.tokens.push_back({s.substr(at, run_end - at), false});
            } else {
                // Bare apostrophe run: punctuation, one token per character.
                std::size_t j = at;
                while (j < run_end) {
                    std::size_t start = j;
                    utf8::decode(s, j);
                    tt.tokens.push_back({s.substr(start, j - start), true});
                }
            }
            i = run_end;
            continue;
        }

        tt.tokens.push_back({s.substr(at, i - at), true});
    }

    if (tt.tokens.empty()) {
        throw std::invalid_argument("tokenize: no tokens in text");
    }

    // Sentence boundaries: terminator punct confirmed by an uppercase-initial
    // next word (or end of text); trailing punctuation is absorbed into the
    // ending sentence.
    std::size_t start = 0;
    std::size_t idx = 0;
    const std::size_t n = tt.tokens.size();
    while (idx < n) {
        if (is_terminator(tt.tokens[idx])) {
            std::size_t next_word = idx + 1;
            while (next_word < n && tt.tokens[next_word].is_punct) ++next_word;
            bool boundary =
                next_word == n || starts_with_uppercase(tt.tokens[next_word].text);
            if (boundary) {
                std::size_t end = idx + 1;
                while (end < n && tt.tokens[end].is_punct) ++end;
                tt.sentences.emplace_back(start, end);
                start = end;
                idx = end;
                continue;
            }
        }
        ++idx;
    }
    if (start < n) {
        tt.sentences.emplace_back(start, n);
    }
    return tt;
}

int count_syllables(const std::string& word) {
    std::string w = lower_ascii(word);
    bool has_letter = false;
    for (char c : w) {
        if (c >= 'a' && c <= 'z') {
            has_letter = true;
            break;
        }
    }
    if (!has_letter) {
        throw std::invalid_argument("count_syllables: token has no letter: " + word);
    }
    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : w) {
        bool v = is_vowel(c);
        if (v && !in_group) ++groups;
        in_group = v;
    }
    if (w.size() >= 2 && w.back() == 'e') {
        bool consonant_le = w.size() >= 3 && w[w.size() - 2] == 'l' &&
                            w[w.size() - 3] >= 'a' && w[w.size() - 3] <= 'z' &&
                            !is_vowel(w[w.size() - 3]);
        if (!consonant_le) --groups;
    }
    return groups >= 1 ? groups : 1;
}

std::vector<PosTag> pos_tag(const TokenizedText& tt) {
    const WordLists& wl = WordLists::bundled();
    std::vector<PosTag> tags;
    tags.reserve(tt.tokens.size());

    auto strip_apostrophes = [](const std::string& s) {
        std::size_t b = 0, e = s.size();
        while (b < e && (s[b] == '\'' || static_cast<unsigned char>(s[b]) > 0x7F)) {
            // Only strip ASCII apostrophes; multibyte U+2019 is three bytes.
            if (s[b] == '\'') { ++b; continue; }
            if (e - b >= 3 && static_cast<unsigned char>(s[b]) == 0xE2 &&
                static_cast<unsigned char>(s[b + 1]) == 0x80 &&
                static_cast<unsigned char>(s[b + 2]) == 0x99) { b += 3; continue; }
            break;
        }
        while (e > b) {
            if (s[e - 1] == '\'') { --e; continue; }
            if (e - b >= 3 && static_cast<unsigned char>(s[e - 3]) == 0xE2 &&
                static_cast<unsigned char>(s[e - 2]) == 0x80 &&
                static_cast<unsigned char>(s[e - 1]) == 0x99) { e -= 3; continue; }
            break;
        }
        return s.substr(b, e - b);
    };

    auto in_verbs = [&wl](const std::string& stem) {
        return wl.verbs.count(stem) > 0;
    };

    for (const Token& tok : tt.tokens) {
        if (tok.is_punct) {
            tags.push_back(PosTag::PUNCT);
            continue;
        }
        std::string w = lower_ascii(strip_apostrophes(tok.text));
        if (w.empty()) {
            tags.push_back(PosTag::OTHER);
            continue;
        }
        bool all_digits = true;
        for (char c : w) {
            if (c < '0' || c > '9') {
                all_digits = false;
                break;
            }
        }
        if (all_digits) {
            tags.push_back(PosTag::NUM);
            continue;
        }
        if (wl.pronouns.count(w)) { tags.push_back(PosTag::PRON); continue; }
        if (wl.determiners.count(w)) { tags.push_back(PosTag::DET); continue; }
        if (wl.prepositions.count(w)) { tags.push_back(PosTag::ADP); continue; }
        if (wl.conjunctions.count(w)) { tags.push_back(PosTag::CONJ); continue; }
        if (wl.auxiliaries.count(w)) { tags.push_back(PosTag::VERB); continue; }
        if (wl.numerals.count(w)) { tags.push_back(PosTag::NUM); continue; }
        if (in_verbs(w)) { tags.push_back(PosTag::VERB); continue; }

        const std::size_t len = w.size();
        auto ends_with = [&w](std::string_view suf) {
            return w.size() >= suf.size() &&
                   w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
        };
        if (len > 3 && ends_with("ly")) { tags.push_back(PosTag::ADV); continue; }
        if (len > 4 && ends_with("ing")) { tags.push_back(PosTag::VERB); continue; }
        if (len > 3 && ends_with("ed")) { tags.push_back(PosTag::VERB); continue; }
        if ((len > 4 && (ends_with("ous") || ends_with("ful") || ends_with("ive"))) ||
            (len > 5 && ends_with("able"))) {
            tags.push_back(PosTag::ADJ);
            continue;
        }
        if (len > 3 && ends_with("s") && !ends_with("ss")) {
            std::string stem = w.substr(0, len - 1);
            std::string stem_es = len > 4 && ends_with("es") ? w.substr(0, len - 2) : "";
            std::string stem_e = stem + "e";
            if (in_verbs(stem) || (!stem_es.empty() && in_verbs(stem_es)) || in_verbs(stem_e)) {
                tags.push_back(PosTag::VERB);
                continue;
            }
            tags.push_back(PosTag::NOUN);
            continue;
        }
        tags.push_back(PosTag::NOUN);
    }
    return tags;
}

}  // namespace stylo
