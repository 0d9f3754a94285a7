#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stylo {

// One labeled text sample. label: 0 = Human, 1 = AI.
struct Document {
    std::string id;
    std::string text;
    int label = 0;
    std::optional<std::string> domain;
    std::optional<std::string> generator;  // convention: "Human" for label 0
    std::optional<std::vector<double>> embedding;
};

struct DatasetSplit {
    std::string name;
    std::vector<Document> documents;
};

// Reads one JSON object per line. Required fields: "text" (string),
// "label" (0|1). Optional: "id", "domain", "generator", "embedding".
// Unknown fields are ignored. Throws SchemaError with the offending line
// number on malformed input, labels outside {0,1}, non-finite embedding
// entries, or mixed embedding presence across the file.
DatasetSplit load_jsonl(const std::filesystem::path& path);

// Writes the recognized fields back out, one object per line, in a fixed
// key order so that load + save round-trips bit-exactly.
void save_jsonl(const DatasetSplit& split, const std::filesystem::path& path);

// Unicode NFC, HTML tag removal (pattern <[a-zA-Z/][^>]*>), whitespace
// runs collapsed to single spaces, ends trimmed. Case and punctuation are
// preserved. Total and idempotent.
std::string clean_text(std::string_view raw, bool strip_html = true);

// Keeps documents with >= 50 characters (Unicode scalars) and >= 10
// whitespace-delimited words, counted on the cleaned text. Order preserved.
std::pair<std::vector<Document>, std::size_t> filter_short(std::vector<Document> docs);

inline constexpr std::size_t kMinChars = 50;
inline constexpr std::size_t kMinWords = 10;

}  // namespace stylo
