#include "dqg/wordnet.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dqg::wn {
namespace {

constexpr size_t slot(Pos pos) { return pos == Pos::Verb ? 1 : 0; }

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ') ++i;
        if (i > start) toks.push_back(line.substr(start, i - start));
    }
    return toks;
}

class Cursor {
public:
    Cursor(const std::vector<std::string_view>& toks, const std::string& file, size_t line)
        : toks_(toks), file_(file), line_(line) {}

    std::string_view next(const char* what) {
        if (pos_ >= toks_.size()) fail(std::string("missing field: ") + what);
        return toks_[pos_++];
    }
    uint64_t next_u64(const char* what, int base = 10) {
        std::string_view t = next(what);
        uint64_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v, base);
        if (ec != std::errc() || p != t.data() + t.size())
            fail(std::string("bad numeric field '") + std::string(t) + "' for " + what);
        return v;
    }
    bool exhausted() const { return pos_ >= toks_.size(); }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(file_ + ":" + std::to_string(line_) + ": " + msg);
    }

private:
    const std::vector<std::string_view>& toks_;
    std::string file_;
    size_t line_;
    size_t pos_ = 0;
};

Pos pos_of_tag(std::string_view tag, const Cursor& cur) {
    if (tag.size() == 1) {
        if (auto p = pos_from_tag(tag[0])) return *p;
    }
    cur.fail("unknown part-of-speech tag '" + std::string(tag) + "'");
}

void parse_data_file(const std::string& path, Pos pos, std::unordered_map<uint64_t, Synset>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open WordNet data file: " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == ' ') continue;  // license header
        std::string gloss;
        std::string_view body = line;
        if (size_t bar = line.find(" | "); bar != std::string::npos) {
            gloss = line.substr(bar + 3);
            while (!gloss.empty() && (gloss.back() == ' ' || gloss.back() == '\r')) gloss.pop_back();
            body = std::string_view(line).substr(0, bar);
        }
        std::vector<std::string_view> toks = tokenize(body);
        Cursor cur(toks, path, line_no);

        Synset syn;
        syn.offset = cur.next_u64("synset_offset");
        cur.next("lex_filenum");
        std::string_view ss_type = cur.next("ss_type");
        if (ss_type == "s") ss_type = "a";  // adjective satellite
        syn.pos = pos_of_tag(ss_type, cur);
        uint64_t w_cnt = cur.next_u64("w_cnt", 16);
        if (w_cnt == 0) cur.fail("synset with zero words");
        for (uint64_t i = 0; i < w_cnt; ++i) {
            syn.lemmas.push_back(lower_ascii(cur.next("word")));
            cur.next("lex_id");
        }
        uint64_t p_cnt = cur.next_u64("p_cnt");
        for (uint64_t i = 0; i < p_cnt; ++i) {
            Pointer ptr;
            ptr.symbol = std::string(cur.next("pointer_symbol"));
            ptr.target_offset = cur.next_u64("pointer_offset");
            ptr.target_pos = pos_of_tag(cur.next("pointer_pos"), cur);
            cur.next("source/target");
            syn.pointers.push_back(std::move(ptr));
        }
        // Verb lines carry a frame section (f_cnt, then "+ f_num w_num" groups).
        if (!cur.exhausted()) {
            uint64_t f_cnt = cur.next_u64("f_cnt");
            for (uint64_t i = 0; i < f_cnt; ++i) {
                if (cur.next("frame marker") != "+") cur.fail("expected '+' in frame list");
                cur.next("f_num");
                cur.next("w_num");
            }
        }
        if (!cur.exhausted()) cur.fail("trailing fields after synset record");
        if (syn.pos != pos) cur.fail("synset part-of-speech does not match file");
        syn.gloss = std::move(gloss);
        uint64_t offset = syn.offset;
        out.emplace(offset, std::move(syn));
    }
}

void parse_index_file(const std::string& path, Pos pos,
                      std::unordered_map<std::string, std::vector<uint64_t>>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open WordNet index file: " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == ' ') continue;
        std::vector<std::string_view> toks = tokenize(line);
        Cursor cur(toks, path, line_no);

        std::string lemma = lower_ascii(cur.next("lemma"));
        Pos entry_pos = pos_of_tag(cur.next("pos"), cur);
        if (entry_pos != pos) cur.fail("index entry part-of-speech does not match file");
        uint64_t synset_cnt = cur.next_u64("synset_cnt");
        uint64_t p_cnt = cur.next_u64("p_cnt");
        for (uint64_t i = 0; i < p_cnt; ++i) cur.next("ptr_symbol");
        cur.next_u64("sense_cnt");
        cur.next_u64("tagsense_cnt");
        std::vector<uint64_t> offsets;
        offsets.reserve(synset_cnt);
        for (uint64_t i = 0; i < synset_cnt; ++i) offsets.push_back(cur.next_u64("synset_offset"));
        if (!cur.exhausted()) cur.fail("trailing fields after index record");
        out.emplace(std::move(lemma), std::move(offsets));
    }
}

}  // namespace

char pos_tag(Pos pos) {
    switch (pos) {
        case Pos::Noun: return 'n';
        case Pos::Verb: return 'v';
        case Pos::Adjective: return 'a';
        case Pos::Adverb: return 'r';
    }
    return 'n';
}

std::optional<Pos> pos_from_tag(char tag) {
    switch (tag) {
        case 'n': return Pos::Noun;
        case 'v': return Pos::Verb;
        case 'a': return Pos::Adjective;
        case 'r': return Pos::Adverb;
        default: return std::nullopt;
    }
}

std::string normalize_phrase(std::string_view phrase) {
    std::string out = lower_ascii(phrase);
    for (char& c : out)
        if (c == ' ') c = '_';
    return out;
}

LexiconStore LexiconStore::load_wordnet(const std::string& directory) {
    LexiconStore store;
    parse_index_file(directory + "/index.noun", Pos::Noun, store.index_[slot(Pos::Noun)]);
    parse_data_file(directory + "/data.noun", Pos::Noun, store.synsets_[slot(Pos::Noun)]);
    parse_index_file(directory + "/index.verb", Pos::Verb, store.index_[slot(Pos::Verb)]);
    parse_data_file(directory + "/data.verb", Pos::Verb, store.synsets_[slot(Pos::Verb)]);
    for (Pos pos : {Pos::Noun, Pos::Verb}) {
        for (const auto& [lemma, offsets] : store.index_[slot(pos)]) {
            for (uint64_t off : offsets) {
                if (!store.synsets_[slot(pos)].contains(off))
                    throw ParseError(directory + ": index entry '" + lemma + "' references missing synset " +
                                     std::to_string(off));
            }
        }
    }
    return store;
}

const std::vector<uint64_t>& LexiconStore::senses(std::string_view lemma, Pos pos) const {
    static const std::vector<uint64_t> empty;
    if (pos == Pos::Adjective || pos == Pos::Adverb) return empty;
    auto it = index_[slot(pos)].find(std::string(lemma));
    return it == index_[slot(pos)].end() ? empty : it->second;
}

const Synset* LexiconStore::find_synset(Pos pos, uint64_t offset) const {
    if (pos == Pos::Adjective || pos == Pos::Adverb) return nullptr;
    auto it = synsets_[slot(pos)].find(offset);
    return it == synsets_[slot(pos)].end() ? nullptr : &it->second;
}

std::set<std::string> LexiconStore::verb_synonyms(std::string_view lemma) const {
    std::set<std::string> out;
    std::string key(lemma);
    for (uint64_t off : senses(key, Pos::Verb)) {
        const Synset* syn = find_synset(Pos::Verb, off);
        if (!syn) continue;
        for (const std::string& l : syn->lemmas)
            if (l != key) out.insert(l);
    }
    return out;
}

std::optional<std::string> LexiconStore::direct_hypernym(std::string_view phrase) const {
    const std::vector<uint64_t>& offsets = senses(normalize_phrase(phrase), Pos::Noun);
    if (offsets.empty()) return std::nullopt;
    const Synset* first = find_synset(Pos::Noun, offsets.front());
    if (!first) return std::nullopt;
    for (const Pointer& ptr : first->pointers) {
        if (ptr.symbol != "@" && ptr.symbol != "@i") continue;
        const Synset* target = find_synset(ptr.target_pos, ptr.target_offset);
        if (target && !target->lemmas.empty()) return target->lemmas.front();
        return std::nullopt;
    }
    return std::nullopt;
}

size_t LexiconStore::synset_count(Pos pos) const {
    if (pos == Pos::Adjective || pos == Pos::Adverb) return 0;
    return synsets_[slot(pos)].size();
}

size_t LexiconStore::index_size(Pos pos) const {
    if (pos == Pos::Adjective || pos == Pos::Adverb) return 0;
    return index_[slot(pos)].size();
}

}  // namespace dqg::wn
