#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dqg/errors.hpp"

namespace dqg::wn {

enum class Pos { Noun, Verb, Adjective, Adverb };

char pos_tag(Pos pos);
std::optional<Pos> pos_from_tag(char tag);

struct Pointer {
    std::string symbol;       // "@", "@i", "~", ...
    uint64_t target_offset = 0;
    Pos target_pos = Pos::Noun;

    bool operator==(const Pointer&) const = default;
};

struct Synset {
    uint64_t offset = 0;
    Pos pos = Pos::Noun;
    std::vector<std::string> lemmas;  // lowercase, underscores for spaces
    std::vector<Pointer> pointers;
    std::string gloss;

    bool operator==(const Synset&) const = default;
};

/// In-memory WordNet 3.1 noun + verb databases. Immutable after load.
class LexiconStore {
public:
    /// Reads index.noun, data.noun, index.verb, data.verb from `directory`.
    static LexiconStore load_wordnet(const std::string& directory);

    /// Synset offsets for (lemma, pos) in database sense order (frequency
    /// order). Empty when the lemma is unknown for that part of speech.
    const std::vector<uint64_t>& senses(std::string_view lemma, Pos pos) const;

    const Synset* find_synset(Pos pos, uint64_t offset) const;

    /// Union of lemmas over every verb synset containing `lemma`, minus the
    /// lemma itself. Empty set for unknown lemmas.
    std::set<std::string> verb_synonyms(std::string_view lemma) const;

    /// First lemma of the first hypernym (@ or @i) of the first noun sense of
    /// `phrase`. The phrase is case-folded and space-joined with underscores
    /// before lookup.
    std::optional<std::string> direct_hypernym(std::string_view phrase) const;

    size_t synset_count(Pos pos) const;
    size_t index_size(Pos pos) const;

    bool operator==(const LexiconStore&) const = default;

private:
    // Noun at [0], verb at [1]; adjectives and adverbs are never loaded.
    std::unordered_map<std::string, std::vector<uint64_t>> index_[2];
    std::unordered_map<uint64_t, Synset> synsets_[2];
};

/// Lowercases and replaces spaces with underscores (WordNet's convention).
std::string normalize_phrase(std::string_view phrase);

}  // namespace dqg::wn
