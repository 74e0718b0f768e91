#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "dqg/conllu.hpp"

namespace dqg::morph {

enum class Tense { Past, Present };
enum class Number { Singular, Plural, NA };

struct VerbFeatures {
    Tense tense = Tense::Present;
    Number number = Number::NA;
    bool progressive = false;
    bool passive = false;
    std::string target_xpos;  // tag of the token being replaced

    bool operator==(const VerbFeatures&) const = default;
};

/// Bundled lemma/past/past-participle table; loadable from a three-column TSV.
class IrregularTable {
public:
    struct Forms {
        std::string past;
        std::string past_participle;
    };

    static IrregularTable load(std::istream& in, const std::string& name = "<stream>");
    static IrregularTable load_file(const std::string& path);
    static const IrregularTable& builtin();

    const Forms* find(std::string_view lemma) const;
    size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, Forms> entries_;
};

bool is_verb_tag(std::string_view xpos);

/// Grammatical features of the verb token at `verb_index`, read from its tag
/// and its auxiliary children. Throws std::invalid_argument on non-verbs.
VerbFeatures analyze(const AnnotatedSentence& sentence, int verb_index);

/// Inflects `lemma` to the surface form carrying `target_xpos`.
std::string realize(std::string_view lemma, std::string_view target_xpos,
                    const IrregularTable& table = IrregularTable::builtin());

struct BaseForm {
    std::string lemma;
    Tense tense = Tense::Present;
    Number number = Number::NA;
};

/// Lemma plus the tense/number a supporting "do" must carry when the finite
/// verb at `verb_index` is fronted. Throws on a non-finite verb.
BaseForm base_form_and_tense(const AnnotatedSentence& sentence, int verb_index);

/// Surface of inflected "do" for the given do-support features.
std::string do_form(Tense tense, Number number);

}  // namespace dqg::morph
