#include "stylo/wordlists.hpp"

#include <algorithm>

#include "stylo/hash.hpp"

namespace stylo::detail {
extern const std::string_view kFunctionWordsData;
extern const std::string_view kPronounsData;
extern const std::string_view kDeterminersData;
extern const std::string_view kPrepositionsData;
extern const std::string_view kConjunctionsData;
extern const std::string_view kAuxiliariesData;
extern const std::string_view kNumeralsData;
extern const std::string_view kVerbsData;
extern const std::string_view kDaleChallData;
extern const std::string_view kAbbreviationsData;
}  // namespace stylo::detail

namespace stylo {

namespace {

std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::vector<std::string> parse_lines(std::string_view raw) {
    std::vector<std::string> entries;
    std::size_t pos = 0;
    while (pos <= raw.size()) {
        std::size_t nl = raw.find('\n', pos);
        std::string_view line = raw.substr(pos, nl == std::string_view::npos ? raw.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? raw.size() + 1 : nl + 1;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        entries.push_back(lowercase_ascii(line.substr(b, e - b + 1)));
    }
    return entries;
}

}  // namespace

std::unordered_set<std::string> parse_word_list(std::string_view raw) {
    std::unordered_set<std::string> set;
    for (auto& e : parse_lines(raw)) set.insert(std::move(e));
    return set;
}

const WordLists& WordLists::bundled() {
    static const WordLists lists = [] {
        WordLists wl;
        wl.function_words = parse_word_list(detail::kFunctionWordsData);
        wl.pronouns = parse_word_list(detail::kPronounsData);
        wl.determiners = parse_word_list(detail::kDeterminersData);
        wl.prepositions = parse_word_list(detail::kPrepositionsData);
        wl.conjunctions = parse_word_list(detail::kConjunctionsData);
        wl.auxiliaries = parse_word_list(detail::kAuxiliariesData);
        wl.numerals = parse_word_list(detail::kNumeralsData);
        wl.verbs = parse_word_list(detail::kVerbsData);
        wl.dale_chall_easy = parse_word_list(detail::kDaleChallData);
        wl.abbreviations = parse_lines(detail::kAbbreviationsData);
        // Longest-first so the tokenizer greedily matches "ph.d." before "p.".
        std::sort(wl.abbreviations.begin(), wl.abbreviations.end(),
                  [](const std::string& a, const std::string& b) {
                      return a.size() != b.size() ? a.size() > b.size() : a < b;
                  });
        std::uint64_t h = fnv1a64(detail::kFunctionWordsData);
        h = fnv1a64(detail::kPronounsData, h);
        h = fnv1a64(detail::kDeterminersData, h);
        h = fnv1a64(detail::kPrepositionsData, h);
        h = fnv1a64(detail::kConjunctionsData, h);
        h = fnv1a64(detail::kAuxiliariesData, h);
        h = fnv1a64(detail::kNumeralsData, h);
        h = fnv1a64(detail::kVerbsData, h);
        h = fnv1a64(detail::kDaleChallData, h);
        h = fnv1a64(detail::kAbbreviationsData, h);
        wl.content_hash = hex64(h);
        return wl;
    }();
    return lists;
}

}  // namespace stylo
