#include "stylo/corpus.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "json.hpp"

#include "stylo/errors.hpp"
#include "stylo/utf8.hpp"

namespace stylo {

namespace {

const icu::Normalizer2& nfc() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || norm == nullptr) {
        throw std::runtime_error("ICU NFC normalizer unavailable");
    }
    return *norm;
}

std::string nfc_normalize(std::string_view s) {
    icu::UnicodeString u = icu::UnicodeString::fromUTF8(
        icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString composed = nfc().normalize(u, status);
    if (U_FAILURE(status)) {
        throw std::runtime_error("NFC normalization failed");
    }
    std::string out;
    composed.toUTF8String(out);
    return out;
}

std::string strip_html_tags(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '<' && i + 1 < s.size()) {
            char n = s[i + 1];
            bool tag_start = (n >= 'a' && n <= 'z') || (n >= 'A' && n <= 'Z') || n == '/';
            if (tag_start) {
                std::size_t close = s.find('>', i + 1);
                if (close != std::string_view::npos) {
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(c);
        ++i;
    }
    return out;
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

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start = i;
        char32_t cp = utf8::decode(s, i);
        if (is_space_cp(cp)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.append(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

std::string clean_text(std::string_view raw, bool strip_html) {
    std::string s = strip_html ? strip_html_tags(raw) : std::string(raw);
    s = nfc_normalize(s);
    return collapse_whitespace(s);
}

DatasetSplit load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path.string());
    }
    DatasetSplit split;
    split.name = path.stem().string();

    std::string line;
    std::size_t line_no = 0;
    int embedding_state = -1;  // -1 unknown, 0 absent, 1 present
    std::size_t embedding_dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(path.string() + ": line " + std::to_string(line_no) +
                              ": malformed JSON: " + e.what());
        }
        if (!obj.is_object()) {
            throw SchemaError(path.string() + ": line " + std::to_string(line_no) +
                              ": expected a JSON object");
        }
        auto fail = [&](const std::string& msg) -> SchemaError {
            return SchemaError(path.string() + ": line " + std::to_string(line_no) + ": " + msg);
        };
        if (!obj.contains("text") || !obj["text"].is_string()) {
            throw fail("missing or non-string \"text\"");
        }
        if (!obj.contains("label") || !obj["label"].is_number_integer()) {
            throw fail("missing or non-integer \"label\"");
        }
        long label = obj["label"].get<long>();
        if (label != 0 && label != 1) {
            throw fail("label " + std::to_string(label) + " outside {0,1}");
        }
        Document doc;
        doc.text = obj["text"].get<std::string>();
        doc.label = static_cast<int>(label);
        if (obj.contains("id")) {
            if (!obj["id"].is_string()) throw fail("non-string \"id\"");
            doc.id = obj["id"].get<std::string>();
        }
        if (obj.contains("domain")) {
            if (!obj["domain"].is_string()) throw fail("non-string \"domain\"");
            doc.domain = obj["domain"].get<std::string>();
        }
        if (obj.contains("generator")) {
            if (!obj["generator"].is_string()) throw fail("non-string \"generator\"");
            doc.generator = obj["generator"].get<std::string>();
        }
        if (obj.contains("embedding")) {
            if (!obj["embedding"].is_array()) throw fail("non-array \"embedding\"");
            std::vector<double> emb;
            emb.reserve(obj["embedding"].size());
            for (const auto& v : obj["embedding"]) {
                if (!v.is_number()) throw fail("non-numeric embedding entry");
                double x = v.get<double>();
                if (!std::isfinite(x)) throw fail("non-finite embedding entry");
                emb.push_back(x);
            }
            if (embedding_state == 0) {
                throw fail("embedding present here but absent on earlier lines");
            }
            if (embedding_state == 1 && emb.size() != embedding_dim) {
                throw fail("embedding length " + std::to_string(emb.size()) +
                           " differs from earlier length " + std::to_string(embedding_dim));
            }
            embedding_state = 1;
            embedding_dim = emb.size();
            doc.embedding = std::move(emb);
        } else {
            if (embedding_state == 1) {
                throw fail("embedding absent here but present on earlier lines");
            }
            embedding_state = 0;
        }
        split.documents.push_back(std::move(doc));
    }
    return split;
}

void save_jsonl(const DatasetSplit& split, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write dataset file: " + path.string());
    }
    for (const Document& doc : split.documents) {
        nlohmann::ordered_json obj;
        if (!doc.id.empty()) obj["id"] = doc.id;
        obj["text"] = doc.text;
        obj["label"] = doc.label;
        if (doc.domain) obj["domain"] = *doc.domain;
        if (doc.generator) obj["generator"] = *doc.generator;
        if (doc.embedding) obj["embedding"] = *doc.embedding;
        out << obj.dump() << '\n';
    }
}

std::pair<std::vector<Document>, std::size_t> filter_short(std::vector<Document> docs) {
    std::vector<Document> kept;
    kept.reserve(docs.size());
    std::size_t dropped = 0;
    for (auto& doc : docs) {
        std::size_t chars = utf8::length(doc.text);
        std::size_t words = 0;
        {
            std::istringstream ss(doc.text);
            std::string w;
            while (ss >> w) ++words;
        }
        if (chars >= kMinChars && words >= kMinWords) {
            kept.push_back(std::move(doc));
        } else {
            ++dropped;
        }
    }
    return {std::move(kept), dropped};
}

}  // namespace stylo
