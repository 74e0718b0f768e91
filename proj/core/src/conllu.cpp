#include "dqg/conllu.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace dqg {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// "3-5" multiword ranges and "2.1" empty nodes carry no tree structure.
bool is_skippable_id(std::string_view id) {
    return id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos;
}

NeLabel ne_from_misc(const std::string& misc) {
    if (misc.empty() || misc == "_") return NeLabel::O;
    for (const std::string& part : split(misc, '|')) {
        if (part.rfind("NER=", 0) == 0) return ne_label_from(std::string_view(part).substr(4));
    }
    return NeLabel::O;
}

void validate_tree(const AnnotatedSentence& s) {
    const int n = static_cast<int>(s.tokens.size());
    int roots = 0;
    for (int i = 0; i < n; ++i) {
        const Token& t = s.tokens[static_cast<size_t>(i)];
        if (t.index != i + 1)
            throw ParseError("sentence " + s.id + ": token indices not contiguous from 1");
        if (t.head < 0 || t.head > n)
            throw ParseError("sentence " + s.id + ": head " + std::to_string(t.head) + " out of range");
        if (t.head == 0) ++roots;
    }
    if (roots != 1)
        throw ParseError("sentence " + s.id + ": expected exactly one root, found " + std::to_string(roots));
    // Reachability from the root covers both cycles and disconnected parts.
    std::vector<std::vector<int>> kids = s.children();
    std::vector<bool> seen(static_cast<size_t>(n + 1), false);
    std::vector<int> stack = kids[0];
    int visited = 0;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        if (seen[static_cast<size_t>(i)]) continue;
        seen[static_cast<size_t>(i)] = true;
        ++visited;
        for (int c : kids[static_cast<size_t>(i)]) stack.push_back(c);
    }
    if (visited != n)
        throw ParseError("sentence " + s.id + ": head links contain a cycle or unreachable tokens");
}

}  // namespace

NeLabel ne_label_from(std::string_view text) {
    if (text == "PERSON") return NeLabel::Person;
    if (text == "LOCATION") return NeLabel::Location;
    if (text == "ORGANIZATION") return NeLabel::Organization;
    if (text == "DATE") return NeLabel::Date;
    if (text == "TIME") return NeLabel::Time;
    if (text == "ORDINAL") return NeLabel::Ordinal;
    if (text == "NUMBER") return NeLabel::Number;
    if (text == "O" || text.empty()) return NeLabel::O;
    return NeLabel::Misc;
}

std::string_view to_string(NeLabel label) {
    switch (label) {
        case NeLabel::Person: return "PERSON";
        case NeLabel::Location: return "LOCATION";
        case NeLabel::Organization: return "ORGANIZATION";
        case NeLabel::Date: return "DATE";
        case NeLabel::Time: return "TIME";
        case NeLabel::Ordinal: return "ORDINAL";
        case NeLabel::Misc: return "MISC";
        case NeLabel::Number: return "NUMBER";
        case NeLabel::O: return "O";
    }
    return "O";
}

int AnnotatedSentence::root_index() const {
    for (const Token& t : tokens)
        if (t.head == 0) return t.index;
    return 0;
}

std::vector<std::vector<int>> AnnotatedSentence::children() const {
    std::vector<std::vector<int>> kids(tokens.size() + 1);
    for (const Token& t : tokens) kids[static_cast<size_t>(t.head)].push_back(t.index);
    return kids;
}

std::vector<AnnotatedSentence> parse_conllu(std::istream& in) {
    std::vector<AnnotatedSentence> sentences;
    AnnotatedSentence current;
    bool has_tokens_or_comments = false;
    size_t line_no = 0;

    auto flush = [&]() {
        if (!current.tokens.empty()) {
            if (current.id.empty()) current.id = "s" + std::to_string(sentences.size() + 1);
            validate_tree(current);
            sentences.push_back(std::move(current));
        }
        current = AnnotatedSentence{};
        has_tokens_or_comments = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            has_tokens_or_comments = true;
            std::string_view body = std::string_view(line).substr(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            if (body.rfind("sent_id", 0) == 0) {
                size_t eq = body.find('=');
                if (eq != std::string_view::npos) {
                    std::string_view v = body.substr(eq + 1);
                    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
                    current.id = std::string(v);
                }
            } else if (body.rfind("text", 0) == 0 && (body.size() == 4 || body[4] == ' ' || body[4] == '=')) {
                size_t eq = body.find('=');
                if (eq != std::string_view::npos) {
                    std::string_view v = body.substr(eq + 1);
                    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
                    current.text = std::string(v);
                }
            }
            continue;
        }

        std::vector<std::string> f = split(line, '\t');
        if (f.size() != 10)
            throw ParseError("line " + std::to_string(line_no) + ": expected 10 tab-separated columns, got " +
                             std::to_string(f.size()));
        if (is_skippable_id(f[0])) continue;
        if (!all_digits(f[0]))
            throw ParseError("line " + std::to_string(line_no) + ": bad token id '" + f[0] + "'");
        if (!all_digits(f[6]))
            throw ParseError("line " + std::to_string(line_no) + ": non-numeric head '" + f[6] + "'");

        Token t;
        t.index = std::stoi(f[0]);
        t.surface = f[1];
        t.lemma = lower_ascii(f[2]);
        t.xpos = f[4];
        t.head = std::stoi(f[6]);
        t.deprel = f[7];
        t.ne = ne_from_misc(f[9]);
        current.tokens.push_back(std::move(t));
        has_tokens_or_comments = true;
    }
    flush();
    (void)has_tokens_or_comments;
    return sentences;
}

std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open CoNLL-U file: " + path);
    try {
        return parse_conllu(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string to_conllu(const AnnotatedSentence& s) {
    std::ostringstream out;
    if (!s.id.empty()) out << "# sent_id = " << s.id << "\n";
    if (!s.text.empty()) out << "# text = " << s.text << "\n";
    for (const Token& t : s.tokens) {
        out << t.index << '\t' << t.surface << '\t' << t.lemma << "\t_\t" << t.xpos << "\t_\t" << t.head << '\t'
            << t.deprel << "\t_\t";
        if (t.ne == NeLabel::O)
            out << "_";
        else
            out << "NER=" << to_string(t.ne);
        out << '\n';
    }
    out << '\n';
    return out.str();
}

std::string lemma_pos_key(std::string_view lemma, std::string_view xpos) {
    std::string key = lower_ascii(lemma);
    for (char& c : key)
        if (std::isspace(static_cast<unsigned char>(c))) c = '_';
    if (xpos == "NN" || xpos == "NNS" || xpos == "NNP" || xpos == "NNPS") return key + "_nn";
    if (xpos == "VB" || xpos == "VBD" || xpos == "VBG" || xpos == "VBN" || xpos == "VBP" || xpos == "VBZ")
        return key + "_vb";
    if (xpos == "JJ" || xpos == "JJR" || xpos == "JJS") return key + "_jj";
    if (xpos == "RB" || xpos == "RBR" || xpos == "RBS") return key + "_rb";
    return key;
}

std::string lemma_pos_key(const Token& token) { return lemma_pos_key(token.lemma, token.xpos); }

std::vector<int> subtree(const AnnotatedSentence& s, int index) {
    std::vector<std::vector<int>> kids = s.children();
    std::vector<int> out;
    std::vector<int> stack{index};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        out.push_back(i);
        for (int c : kids[static_cast<size_t>(i)]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_contiguous(const std::vector<int>& indices) {
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] != indices[i - 1] + 1) return false;
    return !indices.empty();
}

namespace {
bool no_space_before(const std::string& tok) {
    static const char* closers[] = {",", ".", "?", "!", ";", ":", ")", "]", "%", "'s", "n't", "''"};
    for (const char* c : closers)
        if (tok == c) return true;
    return false;
}
bool no_space_after(const std::string& tok) { return tok == "(" || tok == "[" || tok == "``"; }
}  // namespace

std::string detokenize(const AnnotatedSentence& s, const std::vector<int>& indices) {
    std::string out;
    bool suppress = false;
    for (int i : indices) {
        const std::string& tok = s.at(i).surface;
        if (!out.empty() && !suppress && !no_space_before(tok)) out += ' ';
        out += tok;
        suppress = no_space_after(tok);
    }
    return out;
}

std::string detokenize(const AnnotatedSentence& s) {
    std::vector<int> all(s.tokens.size());
    for (size_t i = 0; i < s.tokens.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return detokenize(s, all);
}

}  // namespace dqg
