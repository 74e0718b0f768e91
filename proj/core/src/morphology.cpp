#include "dqg/morphology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dqg/irregular_verbs_data.hpp"

namespace dqg::morph {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// y counts as a vowel except word-initially ("try" has one group, "yield" one).
int vowel_groups(std::string_view w) {
    int groups = 0;
    bool in_group = false;
    for (size_t i = 0; i < w.size(); ++i) {
        bool v = is_vowel(w[i]) || (w[i] == 'y' && i > 0);
        if (v && !in_group) ++groups;
        in_group = v;
    }
    return groups;
}

// Final-consonant doubling: single-syllable pattern, ...consonant-vowel-consonant,
// final consonant not w/x/y ("stop" -> "stopped"; "travel", "rain", "play" untouched).
bool doubles_final(std::string_view w) {
    if (w.size() < 3) return false;
    char c2 = w[w.size() - 1], c1 = w[w.size() - 2], c0 = w[w.size() - 3];
    if (is_vowel(c2) || c2 == 'w' || c2 == 'x' || c2 == 'y') return false;
    if (!is_vowel(c1)) return false;
    if (is_vowel(c0)) return false;
    return vowel_groups(w) == 1;
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool ends_consonant_plus(std::string_view w, char last) {
    return w.size() >= 2 && w.back() == last && !is_vowel(w[w.size() - 2]) && w[w.size() - 2] != 'y';
}

std::string regular_past(const std::string& w) {
    if (w.back() == 'e') return w + "d";
    if (ends_consonant_plus(w, 'y')) return w.substr(0, w.size() - 1) + "ied";
    if (doubles_final(w)) return w + w.back() + "ed";
    return w + "ed";
}

std::string third_singular(const std::string& w) {
    if (w == "have") return "has";
    if (ends_with(w, "ch") || ends_with(w, "sh") || w.back() == 's' || w.back() == 'x' || w.back() == 'z')
        return w + "es";
    if (ends_consonant_plus(w, 'y')) return w.substr(0, w.size() - 1) + "ies";
    if (ends_consonant_plus(w, 'o')) return w + "es";
    return w + "s";
}

std::string gerund(const std::string& w) {
    if (ends_with(w, "ie")) return w.substr(0, w.size() - 2) + "ying";
    if (w.back() == 'e' && !ends_with(w, "ee") && !ends_with(w, "oe") && !ends_with(w, "ye"))
        return w.substr(0, w.size() - 1) + "ing";
    if (doubles_final(w)) return w + w.back() + "ing";
    return w + "ing";
}

bool is_finite_tag(std::string_view xpos) {
    return xpos == "VBD" || xpos == "VBZ" || xpos == "VBP" || xpos == "MD";
}

bool is_aux_rel(std::string_view deprel) {
    std::string d = lower_ascii(deprel);
    return d.rfind("aux", 0) == 0;  // aux, aux:pass, auxpass
}

std::vector<const Token*> aux_children(const AnnotatedSentence& s, int verb_index) {
    std::vector<const Token*> out;
    for (const Token& t : s.tokens)
        if (t.head == verb_index && is_aux_rel(t.deprel)) out.push_back(&t);
    return out;  // tokens are in index order already
}

}  // namespace

IrregularTable IrregularTable::load(std::istream& in, const std::string& name) {
    IrregularTable table;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            throw ParseError(name + ":" + std::to_string(line_no) + ": expected 3 tab-separated columns");
        std::string lemma = lower_ascii(line.substr(0, t1));
        Forms forms{lower_ascii(line.substr(t1 + 1, t2 - t1 - 1)), lower_ascii(line.substr(t2 + 1))};
        if (lemma.empty() || forms.past.empty() || forms.past_participle.empty())
            throw ParseError(name + ":" + std::to_string(line_no) + ": empty column");
        table.entries_[std::move(lemma)] = std::move(forms);
    }
    return table;
}

IrregularTable IrregularTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open irregular-verb table: " + path);
    return load(in, path);
}

const IrregularTable& IrregularTable::builtin() {
    static const IrregularTable table = [] {
        std::istringstream in(detail::kIrregularVerbsTsv);
        return load(in, "<builtin irregular verbs>");
    }();
    return table;
}

const IrregularTable::Forms* IrregularTable::find(std::string_view lemma) const {
    auto it = entries_.find(std::string(lemma));
    return it == entries_.end() ? nullptr : &it->second;
}

bool is_verb_tag(std::string_view xpos) {
    return xpos == "VB" || xpos == "VBD" || xpos == "VBG" || xpos == "VBN" || xpos == "VBP" || xpos == "VBZ";
}

VerbFeatures analyze(const AnnotatedSentence& s, int verb_index) {
    const Token& verb = s.at(verb_index);
    if (!is_verb_tag(verb.xpos))
        throw std::invalid_argument("analyze: token " + std::to_string(verb_index) + " ('" + verb.surface +
                                    "') is not a verb");
    std::vector<const Token*> auxes = aux_children(s, verb_index);
    const Token* finite_aux = nullptr;
    for (const Token* a : auxes)
        if (is_finite_tag(a->xpos)) {
            finite_aux = a;
            break;
        }

    VerbFeatures f;
    f.target_xpos = verb.xpos;

    auto number_of = [](const Token& t) {
        if (t.xpos == "VBZ") return Number::Singular;
        if (t.xpos == "VBP") return lower_ascii(t.surface) == "am" ? Number::Singular : Number::Plural;
        if (t.xpos == "VBD") {
            std::string w = lower_ascii(t.surface);
            if (w == "was") return Number::Singular;
            if (w == "were") return Number::Plural;
        }
        return Number::NA;
    };

    if (verb.xpos == "VBD") {
        f.tense = Tense::Past;
        f.number = number_of(verb);
    } else if (verb.xpos == "VBZ" || verb.xpos == "VBP") {
        f.tense = Tense::Present;
        f.number = number_of(verb);
    } else if (finite_aux) {
        f.tense = finite_aux->xpos == "VBD" ? Tense::Past : Tense::Present;
        f.number = number_of(*finite_aux);
    }

    if (verb.xpos == "VBG") {
        for (const Token* a : auxes)
            if (a->lemma == "be") f.progressive = true;
    }
    if (verb.xpos == "VBN") {
        for (const Token* a : auxes)
            if (lower_ascii(a->deprel).find("pass") != std::string::npos) f.passive = true;
        if (!f.passive && !auxes.empty() && auxes.back()->lemma == "be") f.passive = true;
    }
    return f;
}

std::string realize(std::string_view lemma_in, std::string_view target_xpos, const IrregularTable& table) {
    if (lemma_in.empty()) throw std::invalid_argument("realize: empty lemma");
    std::string lemma = lower_ascii(lemma_in);
    if (target_xpos == "VB" || target_xpos == "VBP") return lemma;
    if (target_xpos == "VBZ") return third_singular(lemma);
    if (target_xpos == "VBG") return gerund(lemma);
    if (target_xpos == "VBD") {
        if (const IrregularTable::Forms* f = table.find(lemma)) return f->past;
        return regular_past(lemma);
    }
    if (target_xpos == "VBN") {
        if (const IrregularTable::Forms* f = table.find(lemma)) return f->past_participle;
        return regular_past(lemma);
    }
    throw std::invalid_argument("realize: not a verb tag: " + std::string(target_xpos));
}

BaseForm base_form_and_tense(const AnnotatedSentence& s, int verb_index) {
    const Token& verb = s.at(verb_index);
    if (!is_verb_tag(verb.xpos))
        throw std::invalid_argument("base_form_and_tense: token " + std::to_string(verb_index) + " is not a verb");
    if (verb.xpos == "VBD") return {verb.lemma, Tense::Past, Number::NA};
    if (verb.xpos == "VBZ") return {verb.lemma, Tense::Present, Number::Singular};
    if (verb.xpos == "VBP")
        return {verb.lemma, Tense::Present,
                lower_ascii(verb.surface) == "am" ? Number::Singular : Number::Plural};
    if (verb.xpos == "VB") return {verb.lemma, Tense::Present, Number::NA};
    throw std::runtime_error("base_form_and_tense: non-finite verb '" + verb.surface + "' without auxiliary");
}

std::string do_form(Tense tense, Number number) {
    if (tense == Tense::Past) return "did";
    return number == Number::Singular ? "does" : "do";
}

}  // namespace dqg::morph
