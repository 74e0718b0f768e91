#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dqg/errors.hpp"

namespace dqg {

/// Named-entity label carried in the MISC column as NER=<label>.
enum class NeLabel { Person, Location, Organization, Date, Time, Ordinal, Misc, Number, O };

NeLabel ne_label_from(std::string_view text);
std::string_view to_string(NeLabel label);

struct Token {
    int index = 0;       // 1-based position within the sentence
    std::string surface;
    std::string lemma;   // lowercased
    std::string xpos;    // Penn Treebank tag
    int head = 0;        // index of governor, 0 = root
    std::string deprel;
    NeLabel ne = NeLabel::O;

    bool operator==(const Token&) const = default;
};

struct AnnotatedSentence {
    std::string id;
    std::string text;  // raw string when a "# text" comment was present
    std::vector<Token> tokens;

    const Token& at(int index) const { return tokens[static_cast<size_t>(index - 1)]; }
    Token& at(int index) { return tokens[static_cast<size_t>(index - 1)]; }
    int root_index() const;

    /// children[i] lists (ascending) the indices of tokens whose head is i;
    /// children[0] holds the root.
    std::vector<std::vector<int>> children() const;
};

std::vector<AnnotatedSentence> parse_conllu(std::istream& in);
std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path);

/// Writes the 10-column form this reader consumes; parse(to_conllu(s)) gives
/// back an identical token list.
std::string to_conllu(const AnnotatedSentence& sentence);

/// Vocabulary key: lemma plus a coarse POS suffix for the four open classes
/// (run_vb, virus_nn), bare lemma otherwise. Always lowercase.
std::string lemma_pos_key(const Token& token);
std::string lemma_pos_key(std::string_view lemma, std::string_view xpos);

/// Indices of the subtree rooted at `index` (inclusive), ascending.
std::vector<int> subtree(const AnnotatedSentence& sentence, int index);

bool is_contiguous(const std::vector<int>& indices);

/// Joins surfaces with spaces, suppressing space before closing punctuation.
std::string detokenize(const AnnotatedSentence& sentence);
std::string detokenize(const AnnotatedSentence& sentence, const std::vector<int>& indices);

}  // namespace dqg
