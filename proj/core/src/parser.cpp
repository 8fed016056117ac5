#include "crossres/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "crossres/crossed.hpp"

namespace crossres {

namespace {

struct Token {
    enum class Kind { Name, Number, LParen, RParen, Gt, Caret, Colon, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& text, int line, int start_col) {
    std::vector<Token> out;
    std::size_t p = 0;
    int col = start_col;
    auto push = [&](Token::Kind k, std::string t, int c) {
        out.push_back(Token{k, std::move(t), line, c});
    };
    while (p < text.size()) {
        char ch = text[p];
        if (ch == ' ' || ch == '\t') {
            ++p;
            ++col;
            continue;
        }
        int c0 = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t q = p;
            while (q < text.size() && (std::isalnum(static_cast<unsigned char>(text[q])) ||
                                       text[q] == '_'))
                ++q;
            push(Token::Kind::Name, text.substr(p, q - p), c0);
            col += static_cast<int>(q - p);
            p = q;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                   (ch == '-' && p + 1 < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[p + 1])))) {
            std::size_t q = p + 1;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
            push(Token::Kind::Number, text.substr(p, q - p), c0);
            col += static_cast<int>(q - p);
            p = q;
        } else {
            switch (ch) {
                case '(': push(Token::Kind::LParen, "(", c0); break;
                case ')': push(Token::Kind::RParen, ")", c0); break;
                case '>': push(Token::Kind::Gt, ">", c0); break;
                case '^': push(Token::Kind::Caret, "^", c0); break;
                case ':': push(Token::Kind::Colon, ":", c0); break;
                default:
                    throw ParseError(line, c0,
                                     std::string("unexpected character '") + ch + "'");
            }
            ++p;
            ++col;
        }
    }
    push(Token::Kind::End, "", col);
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& take() {
        const Token& t = tokens_[std::min(pos_, tokens_.size() - 1)];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    const Token& expect(Token::Kind kind, const char* what) {
        const Token& t = peek();
        if (t.kind != kind) throw ParseError(t.line, t.col, std::string("expected ") + what);
        return take();
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int parse_exponent(TokenStream& ts) {
    if (ts.peek().kind != Token::Kind::Caret) return 1;
    ts.take();
    const Token& t = ts.expect(Token::Kind::Number, "integer exponent after '^'");
    long v = 0;
    try {
        v = std::stol(t.text);
    } catch (const std::exception&) {
        throw ParseError(t.line, t.col, "malformed exponent '" + t.text + "'");
    }
    if (v == 0) throw ParseError(t.line, t.col, "zero exponent");
    if (v > 10000 || v < -10000) throw ParseError(t.line, t.col, "exponent out of range");
    return static_cast<int>(v);
}

GeneratorSymbol gen_symbol(const std::string& name, int level) {
    MonotoneSurjection t;
    t.values.assign(static_cast<std::size_t>(level) + 1, 0);
    return GeneratorSymbol{name, 0, std::move(t)};
}

// Word over generator letters only; `stop_at_gt` ends the word at '>' inside
// a conjugated term.
Word parse_gen_word(TokenStream& ts, const std::set<std::string>& gens, int level,
                    bool stop_at_gt) {
    Word out = Word::identity(level);
    bool any = false;
    if (ts.peek().kind == Token::Kind::Number && ts.peek().text == "1") {
        ts.take();
        any = true;
    } else {
        while (ts.peek().kind == Token::Kind::Name) {
            const Token& t = ts.take();
            if (!gens.count(t.text))
                throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
            int e = parse_exponent(ts);
            out = multiply(out, power(Word{level, {Letter{gen_symbol(t.text, level), 1}}}, e));
            any = true;
        }
    }
    const Token& next = ts.peek();
    if (!any) throw ParseError(next.line, next.col, "expected a word");
    bool ok = stop_at_gt ? next.kind == Token::Kind::Gt : next.kind == Token::Kind::End;
    if (!ok) throw ParseError(next.line, next.col, "unexpected token '" + next.text + "'");
    return out;
}

Word parse_identity_word(TokenStream& ts, const std::set<std::string>& gens,
                         const std::set<std::string>& relators) {
    Word out = Word::identity(1);
    if (ts.peek().kind == Token::Kind::Number && ts.peek().text == "1") {
        ts.take();
        if (!ts.at_end()) {
            const Token& t = ts.peek();
            throw ParseError(t.line, t.col, "'1' must stand alone");
        }
        return out;
    }
    while (!ts.at_end()) {
        const Token& t = ts.peek();
        if (t.kind == Token::Kind::Name) {
            ts.take();
            if (!relators.count(t.text)) {
                if (gens.count(t.text))
                    throw ParseError(t.line, t.col,
                                     "identity words are products of conjugated relators; '" +
                                         t.text + "' is a generator");
                throw ParseError(t.line, t.col, "unknown relator '" + t.text + "'");
            }
            int e = parse_exponent(ts);
            Word y{1, {Letter{GeneratorSymbol{t.text, 1, MonotoneSurjection::identity(1)}, 1}}};
            out = multiply(out, power(y, e));
        } else if (t.kind == Token::Kind::LParen) {
            ts.take();
            Word conj0 = parse_gen_word(ts, gens, 0, /*stop_at_gt=*/true);
            ts.expect(Token::Kind::Gt, "'>'");
            const Token& rel = ts.expect(Token::Kind::Name, "relator name");
            if (!relators.count(rel.text))
                throw ParseError(rel.line, rel.col, "unknown relator '" + rel.text + "'");
            ts.expect(Token::Kind::RParen, "')'");
            int e = parse_exponent(ts);
            Word y{1,
                   {Letter{GeneratorSymbol{rel.text, 1, MonotoneSurjection::identity(1)}, 1}}};
            Word s0conj = Word::identity(1);
            for (const Letter& l : conj0.letters)
                s0conj = multiply(
                    s0conj, Word{1, {Letter{gen_symbol(l.symbol.basis_id, 1), l.exponent}}});
            out = multiply(out, conjugate(s0conj, power(y, e)));
        } else {
            throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
        }
    }
    return out;
}

struct SectionLines {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    bool present = false;
};

}  // namespace

ConstructionData InputDocument::to_construction_data() const {
    return ConstructionData{Presentation{generators, relators}, identities};
}

InputDocument InputDocument::from_construction_data(const ConstructionData& data) {
    return InputDocument{data.presentation.generators, data.presentation.relators,
                         data.identities};
}

InputDocument parse_document(const std::string& text) {
    SectionLines gens_sec, rel_sec, id_sec;
    SectionLines* current = nullptr;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos
                                                                    : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
        if (trimmed.empty()) continue;
        if (trimmed.front() == '[') {
            SectionLines* next = nullptr;
            if (trimmed == "[generators]")
                next = &gens_sec;
            else if (trimmed == "[relators]")
                next = &rel_sec;
            else if (trimmed == "[identities]")
                next = &id_sec;
            else
                throw ParseError(line_no, 1, "unknown section '" + trimmed + "'");
            if (next->present) throw ParseError(line_no, 1, "duplicate section " + trimmed);
            next->present = true;
            current = next;
            continue;
        }
        if (!current) throw ParseError(line_no, 1, "content before any section header");
        current->lines.emplace_back(line_no, line);
    }

    if (!gens_sec.present) throw ParseError(line_no, 1, "missing [generators] section");
    if (gens_sec.lines.empty())
        throw ParseError(line_no, 1, "[generators] section is empty");
    if (gens_sec.lines.size() > 1)
        throw ParseError(gens_sec.lines[1].first, 1,
                         "[generators] takes a single line of names");

    InputDocument doc;
    std::set<std::string> gen_names;
    {
        auto [ln, content] = gens_sec.lines.front();
        TokenStream ts(lex(content, ln, 1));
        while (!ts.at_end()) {
            const Token& t = ts.expect(Token::Kind::Name, "generator name");
            if (!gen_names.insert(t.text).second)
                throw ParseError(t.line, t.col, "duplicate generator '" + t.text + "'");
            doc.generators.push_back(t.text);
        }
    }

    std::set<std::string> relator_names;
    for (const auto& [ln, content] : rel_sec.lines) {
        TokenStream ts(lex(content, ln, 1));
        const Token& name = ts.expect(Token::Kind::Name, "relator name");
        ts.expect(Token::Kind::Colon, "':'");
        if (!relator_names.insert(name.text).second)
            throw ParseError(name.line, name.col, "duplicate relator '" + name.text + "'");
        Word w = parse_gen_word(ts, gen_names, 0, /*stop_at_gt=*/false);
        doc.relators.emplace_back(name.text, std::move(w));
    }

    std::set<std::string> identity_names;
    for (const auto& [ln, content] : id_sec.lines) {
        TokenStream ts(lex(content, ln, 1));
        const Token& name = ts.expect(Token::Kind::Name, "identity name");
        ts.expect(Token::Kind::Colon, "':'");
        if (!identity_names.insert(name.text).second)
            throw ParseError(name.line, name.col, "duplicate identity '" + name.text + "'");
        Word w = parse_identity_word(ts, gen_names, relator_names);
        doc.identities.emplace_back(name.text, std::move(w));
    }
    return doc;
}

std::string render_document(const InputDocument& doc) {
    std::string out = "[generators]\n";
    for (std::size_t i = 0; i < doc.generators.size(); ++i) {
        if (i) out += ' ';
        out += doc.generators[i];
    }
    out += "\n[relators]\n";
    for (const auto& [name, word] : doc.relators) out += name + ": " + render_word(word) + "\n";
    if (!doc.identities.empty()) {
        out += "[identities]\n";
        for (const auto& [name, word] : doc.identities)
            out += name + ": " + render_conjugate_form(word) + "\n";
    }
    return out;
}

namespace {

bool is_degeneracy_name(const std::string& name, int* index) {
    if (name.size() < 2 || name[0] != 's') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    *index = std::stoi(name.substr(1));
    return true;
}

// Letterwise history composition with alpha_i; no skeleton needed here.
Word raw_degeneracy(int i, const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters)
        out.push_back(Letter{GeneratorSymbol{l.symbol.basis_id, l.symbol.birth_level,
                                             compose_alpha(l.symbol.history, i)},
                             l.exponent});
    return reduce(w.level + 1, std::move(out));
}

Word parse_word_at(TokenStream& ts, int level, const std::set<std::string>& gens,
                   const std::set<std::string>& relators,
                   const std::set<std::string>& identities);

Word parse_atom_at(TokenStream& ts, int level, const std::set<std::string>& gens,
                   const std::set<std::string>& relators,
                   const std::set<std::string>& identities) {
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Name) {
        int deg_index = 0;
        if (ts.peek(1).kind == Token::Kind::LParen && is_degeneracy_name(t.text, &deg_index)) {
            ts.take();
            ts.take();  // '('
            if (level < 1)
                throw ParseError(t.line, t.col, "degeneracy application at level 0");
            Word inner = parse_word_at(ts, level - 1, gens, relators, identities);
            ts.expect(Token::Kind::RParen, "')'");
            if (deg_index > level - 1)
                throw ParseError(t.line, t.col,
                                 "degeneracy index " + std::to_string(deg_index) +
                                     " too large at level " + std::to_string(level - 1));
            return raw_degeneracy(deg_index, inner);
        }
        ts.take();
        if (level == 2 && identities.count(t.text))
            return Word{2,
                        {Letter{GeneratorSymbol{t.text, 2, MonotoneSurjection::identity(2)}, 1}}};
        if (level == 1 && relators.count(t.text))
            return Word{1,
                        {Letter{GeneratorSymbol{t.text, 1, MonotoneSurjection::identity(1)}, 1}}};
        if (gens.count(t.text))
            return Word{level, {Letter{gen_symbol(t.text, level), 1}}};
        if (relators.count(t.text) || identities.count(t.text))
            throw ParseError(t.line, t.col,
                             "'" + t.text + "' does not live at level " + std::to_string(level) +
                                 "; wrap it in degeneracy operators");
        throw ParseError(t.line, t.col, "unknown name '" + t.text + "'");
    }
    if (t.kind == Token::Kind::LParen) {
        if (level != 1)
            throw ParseError(t.line, t.col, "conjugated-relator terms live at level 1");
        ts.take();
        Word conj0 = parse_gen_word(ts, gens, 0, /*stop_at_gt=*/true);
        ts.expect(Token::Kind::Gt, "'>'");
        const Token& rel = ts.expect(Token::Kind::Name, "relator name");
        if (!relators.count(rel.text))
            throw ParseError(rel.line, rel.col, "unknown relator '" + rel.text + "'");
        ts.expect(Token::Kind::RParen, "')'");
        Word y{1, {Letter{GeneratorSymbol{rel.text, 1, MonotoneSurjection::identity(1)}, 1}}};
        return conjugate(raw_degeneracy(0, conj0), y);
    }
    throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
}

Word parse_word_at(TokenStream& ts, int level, const std::set<std::string>& gens,
                   const std::set<std::string>& relators,
                   const std::set<std::string>& identities) {
    if (ts.peek().kind == Token::Kind::Number && ts.peek().text == "1") {
        ts.take();
        return Word::identity(level);
    }
    Word out = Word::identity(level);
    bool any = false;
    while (ts.peek().kind == Token::Kind::Name || ts.peek().kind == Token::Kind::LParen) {
        Word atom = parse_atom_at(ts, level, gens, relators, identities);
        out = multiply(out, power(atom, parse_exponent(ts)));
        any = true;
    }
    if (!any) {
        const Token& t = ts.peek();
        throw ParseError(t.line, t.col, "expected a word");
    }
    return out;
}

}  // namespace

Word parse_word(const std::string& text, int level, const ConstructionData& data) {
    if (level < 0) throw StructuralError("parse_word: negative level");
    std::set<std::string> gens(data.presentation.generators.begin(),
                               data.presentation.generators.end());
    std::set<std::string> relators, identities;
    for (const auto& [name, w] : data.presentation.relators) relators.insert(name);
    for (const auto& [name, w] : data.identities) identities.insert(name);
    TokenStream ts(lex(text, 1, 1));
    Word out = parse_word_at(ts, level, gens, relators, identities);
    if (!ts.at_end()) {
        const Token& t = ts.peek();
        throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
    }
    return out;
}

}  // namespace crossres
