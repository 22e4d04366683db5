#include "ocs/parse.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace ocs {

namespace {

// ── UTF-8 walking ───────────────────────────────────────────────────────────
// Columns count code points so diagnostics line up with what an editor shows.
// Invalid sequences decode as one replacement character per byte; the lexer
// rejects them as unexpected characters anyway.

char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i++]);
    if (b0 < 0x80) return b0;
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) { extra = 1; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { extra = 2; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { extra = 3; cp = b0 & 0x07; }
    else return 0xFFFD;
    for (int k = 0; k < extra; ++k) {
        if (i >= s.size() || (static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) return 0xFFFD;
        cp = (cp << 6) | (static_cast<unsigned char>(s[i++]) & 0x3F);
    }
    return cp;
}

constexpr char32_t kNotSign = 0x00AC;   // ¬
constexpr char32_t kSqcap = 0x2293;     // ⊓
constexpr char32_t kSqcup = 0x2294;     // ⊔
constexpr char32_t kExistsSym = 0x2203; // ∃
constexpr char32_t kForallSym = 0x2200; // ∀
constexpr char32_t kTopSym = 0x22A4;    // ⊤
constexpr char32_t kBottomSym = 0x22A5; // ⊥

const char* keyword_for_symbol(char32_t cp) {
    switch (cp) {
        case kNotSign: return "not";
        case kSqcap: return "and";
        case kSqcup: return "or";
        case kExistsSym: return "some";
        case kForallSym: return "only";
        case kTopSym: return "top";
        case kBottomSym: return "bottom";
        default: return nullptr;
    }
}

// Internal unwind carrying the diagnostic for the offending line.
struct ParseAbort {
    ParseDiagnostic diag;
};

[[noreturn]] void abort_parse(int line, int column, std::string code, std::string message) {
    throw ParseAbort{ParseDiagnostic{line, column, Severity::Error, std::move(code),
                                     std::move(message)}};
}

// ── Field splitting ─────────────────────────────────────────────────────────
// Splits a raw line on top-level pipes, honouring quoted strings (a pipe or
// '#' inside a string is literal text).  A '#' outside a string ends the
// logical line.

struct FieldSlice {
    std::size_t begin = 0; // byte offsets into the line
    std::size_t end = 0;
    int column = 1; // code-point column of `begin`
};

std::vector<FieldSlice> split_fields(std::string_view line, int line_no) {
    std::vector<FieldSlice> fields;
    FieldSlice current{0, 0, 1};
    std::size_t i = 0;
    int column = 1;
    bool any_content = false;
    while (i < line.size()) {
        const std::size_t start = i;
        const int start_column = column;
        const char32_t cp = decode_utf8(line, i);
        ++column;
        if (cp == '#') break;
        if (cp == '|') {
            current.end = start;
            fields.push_back(current);
            current = FieldSlice{i, i, column};
            any_content = true;
            continue;
        }
        if (cp == '"') {
            // Consume the whole string so embedded '|' and '#' stay literal.
            while (true) {
                if (i >= line.size())
                    abort_parse(line_no, start_column, "lex-string", "unterminated string");
                const char32_t c = decode_utf8(line, i);
                ++column;
                if (c == '"') break;
                if (c == '\\') {
                    if (i >= line.size())
                        abort_parse(line_no, start_column, "lex-string", "unterminated string");
                    decode_utf8(line, i);
                    ++column;
                }
            }
        }
        any_content = any_content || (cp != ' ' && cp != '\t');
        current.end = i;
    }
    current.end = std::min(current.end, line.size());
    if (!fields.empty() || any_content) fields.push_back(current);
    return fields;
}

// ── Tokens ──────────────────────────────────────────────────────────────────

enum class Tok : std::uint8_t { Word, OidTok, Str, LParen, RParen, Dot, End };

struct Token {
    Tok type = Tok::End;
    std::string word; // canonical keyword or bareword
    Oid oid;
    std::string str_text;
    std::string str_lang;
    int column = 1;
};

bool is_ascii_alpha(char32_t c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool is_ascii_alnum(char32_t c) { return is_ascii_alpha(c) || (c >= '0' && c <= '9'); }

// [A-Za-z]+("-"[A-Za-z0-9]+)*
bool valid_langtag(const std::string& lang) {
    if (lang.empty()) return false;
    bool first_segment = true;
    std::size_t segment_len = 0;
    for (char c : lang) {
        if (c == '-') {
            if (segment_len == 0) return false;
            first_segment = false;
            segment_len = 0;
            continue;
        }
        if (first_segment ? !is_ascii_alpha(static_cast<unsigned char>(c))
                          : !is_ascii_alnum(static_cast<unsigned char>(c)))
            return false;
        ++segment_len;
    }
    return segment_len > 0;
}

std::vector<Token> lex(std::string_view line, const FieldSlice& field, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = field.begin;
    int column = field.column;
    const std::size_t end = field.end;
    while (i < end) {
        const int start_column = column;
        const char32_t cp = decode_utf8(line, i);
        ++column;
        if (cp == ' ' || cp == '\t') continue;
        if (cp == '(') { tokens.push_back({Tok::LParen, "", {}, "", "", start_column}); continue; }
        if (cp == ')') { tokens.push_back({Tok::RParen, "", {}, "", "", start_column}); continue; }
        if (cp == '.') { tokens.push_back({Tok::Dot, "", {}, "", "", start_column}); continue; }
        if (const char* kw = keyword_for_symbol(cp)) {
            tokens.push_back({Tok::Word, kw, {}, "", "", start_column});
            continue;
        }
        if (cp == '"') {
            std::string text;
            while (true) {
                if (i >= end)
                    abort_parse(line_no, start_column, "lex-string", "unterminated string");
                const std::size_t esc_at = i;
                const int esc_column = column;
                char32_t c = decode_utf8(line, i);
                ++column;
                if (c == '"') break;
                if (c == '\\') {
                    if (i >= end)
                        abort_parse(line_no, start_column, "lex-string", "unterminated string");
                    const char32_t e = decode_utf8(line, i);
                    ++column;
                    if (e != '"' && e != '\\')
                        abort_parse(line_no, esc_column, "lex-string",
                                    "unknown escape sequence in string");
                    text.push_back(static_cast<char>(e));
                    continue;
                }
                text.append(line.substr(esc_at, i - esc_at));
            }
            if (i >= end || line[i] != '@')
                abort_parse(line_no, column, "lex-langtag",
                            "expected '@' language tag after string");
            ++i;
            ++column;
            const int lang_column = column;
            std::string lang;
            while (i < end && (is_ascii_alnum(static_cast<unsigned char>(line[i])) ||
                               line[i] == '-')) {
                lang.push_back(line[i]);
                ++i;
                ++column;
            }
            if (!valid_langtag(lang))
                abort_parse(line_no, lang_column, "lex-langtag", "malformed language tag");
            if (text.empty())
                abort_parse(line_no, start_column, "lex-string",
                            "lexical unit text must be non-empty");
            tokens.push_back({Tok::Str, "", {}, std::move(text), std::move(lang), start_column});
            continue;
        }
        if (is_ascii_alpha(cp)) {
            std::string word;
            word.push_back(static_cast<char>(cp));
            while (i < end) {
                const char c = line[i];
                if (!is_ascii_alnum(static_cast<unsigned char>(c)) && c != '_') break;
                word.push_back(c);
                ++i;
                ++column;
            }
            if (auto oid = Oid::parse(word)) {
                tokens.push_back({Tok::OidTok, "", std::move(*oid), "", "", start_column});
            } else {
                tokens.push_back({Tok::Word, std::move(word), {}, "", "", start_column});
            }
            continue;
        }
        abort_parse(line_no, start_column, "lex-char",
                    "unexpected character at column " + std::to_string(start_column));
    }
    return tokens;
}

// ── Concept parser ──────────────────────────────────────────────────────────

class ConceptParser {
public:
    ConceptParser(std::vector<Token> tokens, int line_no, int end_column,
                  const ParseOptions& options)
        : tokens_(std::move(tokens)), line_(line_no), end_column_(end_column), options_(options) {}

    ConceptExpr parse_all() {
        ConceptExpr e = parse_expr();
        if (pos_ < tokens_.size())
            abort_parse(line_, peek().column, "syntax", "unexpected token after expression");
        return normalize(e);
    }

private:
    const Token& peek() const {
        static const Token end_token{};
        return pos_ < tokens_.size() ? tokens_[pos_] : end_token;
    }
    bool at_end() const { return pos_ >= tokens_.size(); }
    bool peek_word(const char* w) const {
        return !at_end() && peek().type == Tok::Word && peek().word == w;
    }
    int here() const { return at_end() ? end_column_ : peek().column; }

    ConceptExpr parse_expr() { return parse_or(); }

    ConceptExpr parse_or() {
        std::vector<ConceptExpr> operands{parse_and()};
        while (peek_word("or")) {
            ++pos_;
            operands.push_back(parse_and());
        }
        return operands.size() == 1 ? operands.front()
                                    : ConceptExpr::disjunction(std::move(operands));
    }

    ConceptExpr parse_and() {
        std::vector<ConceptExpr> operands{parse_unary()};
        while (peek_word("and")) {
            ++pos_;
            operands.push_back(parse_unary());
        }
        return operands.size() == 1 ? operands.front()
                                    : ConceptExpr::conjunction(std::move(operands));
    }

    ConceptExpr parse_unary() {
        if (at_end()) abort_parse(line_, here(), "syntax", "expected concept expression");
        const Token& t = peek();
        if (t.type == Tok::Word) {
            if (t.word == "not") {
                ++pos_;
                return ConceptExpr::negation(parse_unary());
            }
            if (t.word == "some" || t.word == "only") {
                const bool universal = t.word == "only";
                if (universal && options_.strict_profile)
                    abort_parse(line_, t.column, "strict-profile",
                                "universal quantification is not allowed in strict profile");
                ++pos_;
                if (at_end() || peek().type != Tok::OidTok)
                    abort_parse(line_, here(), "syntax", "expected role OID after quantifier");
                Oid role = peek().oid;
                ++pos_;
                if (at_end() || peek().type != Tok::Dot)
                    abort_parse(line_, here(), "syntax", "expected '.' after role OID");
                ++pos_;
                ConceptExpr filler = parse_unary();
                return universal ? ConceptExpr::forall(std::move(role), std::move(filler))
                                 : ConceptExpr::exists(std::move(role), std::move(filler));
            }
            if (t.word == "top") {
                ++pos_;
                return ConceptExpr::top();
            }
            if (t.word == "bottom") {
                if (options_.strict_profile)
                    abort_parse(line_, t.column, "strict-profile",
                                "bottom is not allowed in strict profile");
                ++pos_;
                return ConceptExpr::bottom();
            }
            abort_parse(line_, t.column, "syntax", "unknown name '" + t.word + "' in expression");
        }
        if (t.type == Tok::OidTok) {
            ++pos_;
            return ConceptExpr::atom(t.oid);
        }
        if (t.type == Tok::Str) {
            ++pos_;
            return ConceptExpr::nl_atom(LexicalUnit{t.str_text, t.str_lang});
        }
        if (t.type == Tok::LParen) {
            ++pos_;
            ConceptExpr e = parse_expr();
            if (at_end() || peek().type != Tok::RParen)
                abort_parse(line_, here(), "syntax", "expected ')'");
            ++pos_;
            return e;
        }
        abort_parse(line_, t.column, "syntax", "expected concept expression");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
    int end_column_;
    const ParseOptions& options_;
};

int column_past(std::string_view line, const FieldSlice& field) {
    int column = field.column;
    std::size_t i = field.begin;
    while (i < field.end) {
        decode_utf8(line, i);
        ++column;
    }
    return column;
}

std::string_view trimmed_view(std::string_view line, const FieldSlice& field) {
    std::size_t b = field.begin;
    std::size_t e = field.end;
    while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
    while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t')) --e;
    return line.substr(b, e - b);
}

ConceptExpr parse_concept_field(std::string_view line, const FieldSlice& field, int line_no,
                                const ParseOptions& options) {
    auto tokens = lex(line, field, line_no);
    if (tokens.empty())
        abort_parse(line_no, field.column, "syntax", "expected concept expression");
    return ConceptParser(std::move(tokens), line_no, column_past(line, field), options)
        .parse_all();
}

StatementResult parse_statement_impl(std::string_view line, int line_no,
                                     const ParseOptions& options) {
    const auto fields = split_fields(line, line_no);
    if (fields.empty())
        abort_parse(line_no, 1, "empty", "empty statement line");

    // Field 1: the subject, which must be a bare OID.
    const auto subject_tokens = lex(line, fields[0], line_no);
    if (subject_tokens.size() != 1 || subject_tokens[0].type != Tok::OidTok) {
        const int col = subject_tokens.empty() ? fields[0].column : subject_tokens[0].column;
        abort_parse(line_no, col, "bad-subject", "subject must be an OID");
    }
    const Oid subject = subject_tokens[0].oid;

    if (fields.size() < 2)
        abort_parse(line_no, column_past(line, fields[0]), "field-count",
                    "expected '|' and an indicator after the subject");
    const auto indicator_tokens = lex(line, fields[1], line_no);
    if (indicator_tokens.size() != 1 || indicator_tokens[0].type != Tok::Word)
        abort_parse(line_no, fields[1].column, "unknown-indicator",
                    "expected Analytic, Synthetic, HRI, or Meta");
    const std::string& tag = indicator_tokens[0].word;
    const int tag_column = indicator_tokens[0].column;

    if (tag == "HRI") {
        if (fields.size() != 3)
            abort_parse(line_no, tag_column, "field-count", "HRI statement takes 3 fields");
        const auto value_tokens = lex(line, fields[2], line_no);
        if (value_tokens.size() != 1 || value_tokens[0].type != Tok::Str)
            abort_parse(line_no, fields[2].column, "bad-hri",
                        "HRI value must be a quoted string with a language tag");
        return OcStatement::hri(subject, value_tokens[0].str_text, value_tokens[0].str_lang);
    }

    if (tag == "Meta") {
        if (fields.size() != 4)
            abort_parse(line_no, tag_column, "field-count", "Meta statement takes 4 fields");
        const auto key_tokens = lex(line, fields[2], line_no);
        if (key_tokens.size() != 1 || key_tokens[0].type != Tok::Word)
            abort_parse(line_no, fields[2].column, "bad-meta", "metadata key must be a bare word");
        const auto value = trimmed_view(line, fields[3]);
        if (value.empty())
            abort_parse(line_no, fields[3].column, "bad-meta", "metadata value must be non-empty");
        try {
            return OcStatement::meta(subject, key_tokens[0].word, std::string(value));
        } catch (const std::invalid_argument& e) {
            abort_parse(line_no, fields[3].column, "bad-meta", e.what());
        }
    }

    Indicator indicator;
    if (tag == "Analytic" || tag == "Analytical" || tag == "A") {
        indicator = Indicator::Analytic;
    } else if (tag == "Synthetic" || tag == "S") {
        indicator = Indicator::Synthetic;
    } else {
        abort_parse(line_no, tag_column, "unknown-indicator", "unknown indicator '" + tag + "'");
    }

    if (fields.size() != 4)
        abort_parse(line_no, tag_column, "field-count", "OID statement takes 4 fields");
    const auto condition_tokens = lex(line, fields[2], line_no);
    if (condition_tokens.size() != 1 || condition_tokens[0].type != Tok::Word)
        abort_parse(line_no, fields[2].column, "unknown-condition",
                    "expected has_NC, has_SC, or has_NSC");
    const std::string& cond_word = condition_tokens[0].word;
    Condition condition;
    if (cond_word == "has_NC") condition = Condition::NC;
    else if (cond_word == "has_SC") condition = Condition::SC;
    else if (cond_word == "has_NSC") condition = Condition::NSC;
    else
        abort_parse(line_no, condition_tokens[0].column, "unknown-condition",
                    "unknown condition '" + cond_word + "'");

    ConceptExpr characterization = parse_concept_field(line, fields[3], line_no, options);
    return OidStatement(subject, indicator, condition, characterization);
}

} // namespace

StatementResult parse_statement(std::string_view line, int line_no, const ParseOptions& options) {
    try {
        return parse_statement_impl(line, line_no, options);
    } catch (const ParseAbort& abort) {
        return abort.diag;
    }
}

ConceptResult parse_concept(std::string_view text, int line_no, const ParseOptions& options) {
    try {
        FieldSlice whole{0, text.size(), 1};
        return parse_concept_field(text, whole, line_no, options);
    } catch (const ParseAbort& abort) {
        return abort.diag;
    }
}

// ── Collection files ────────────────────────────────────────────────────────

namespace {

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

CollectionParse parse_collection(std::string_view text, const ParseOptions& options) {
    CollectionParse out;
    std::map<std::pair<std::string, std::string>, Oid> hri_owners;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = strip_cr(
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body.front() == '@') {
            if (body.rfind("@version", 0) == 0 &&
                (body.size() == 8 || body[8] == ' ' || body[8] == '\t')) {
                const auto label = trim(body.substr(8));
                if (label.empty())
                    out.diagnostics.push_back({line_no, 1, Severity::Error, "bad-pragma",
                                               "@version requires a label"});
                else
                    out.collection.set_version_label(std::string(label));
            } else {
                out.diagnostics.push_back(
                    {line_no, 1, Severity::Error, "unknown-pragma", "unknown pragma"});
            }
            continue;
        }

        StatementResult res = parse_statement(line, line_no, options);
        if (auto* diag = std::get_if<ParseDiagnostic>(&res)) {
            out.diagnostics.push_back(*diag);
            continue;
        }
        if (auto* s = std::get_if<OidStatement>(&res)) {
            if (!out.collection.add(*s, line_no))
                out.diagnostics.push_back({line_no, 1, Severity::Warning, "duplicate-statement",
                                           "duplicate statement ignored"});
            continue;
        }
        const auto& oc = std::get<OcStatement>(res);
        if (!out.collection.add(oc, line_no)) {
            out.diagnostics.push_back({line_no, 1, Severity::Warning, "duplicate-statement",
                                       "duplicate statement ignored"});
            continue;
        }
        if (oc.kind() == OcStatement::Kind::Hri) {
            const auto key = std::make_pair(oc.label(), oc.lang());
            auto [it, inserted] = hri_owners.emplace(key, oc.subject());
            if (!inserted && !(it->second == oc.subject()))
                out.diagnostics.push_back(
                    {line_no, 1, Severity::Warning, "hri-collision",
                     "HRI \"" + oc.label() + "\"@" + oc.lang() + " already names " +
                         it->second.render()});
        }
    }
    return out;
}

// ── Serialization ───────────────────────────────────────────────────────────

namespace {

std::string quoted(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// Precedence tiers used for minimal parenthesisation: or < and < unary.
int tier(const ConceptExpr& e) {
    switch (e.kind()) {
        case ConceptExpr::Kind::Or: return 0;
        case ConceptExpr::Kind::And: return 1;
        default: return 2;
    }
}

void write_concept(std::string& out, const ConceptExpr& e, int min_tier) {
    const bool parens = tier(e) < min_tier;
    if (parens) out.push_back('(');
    switch (e.kind()) {
        case ConceptExpr::Kind::Top:
            out += "top";
            break;
        case ConceptExpr::Kind::Bottom:
            out += "bottom";
            break;
        case ConceptExpr::Kind::Atom:
            out += e.atom_oid().render();
            break;
        case ConceptExpr::Kind::NlAtom:
            out += quoted(e.lexical_unit().text);
            out.push_back('@');
            out += e.lexical_unit().lang;
            break;
        case ConceptExpr::Kind::Not:
            out += "not ";
            write_concept(out, e.child(), 2);
            break;
        case ConceptExpr::Kind::Exists:
        case ConceptExpr::Kind::Forall:
            out += e.kind() == ConceptExpr::Kind::Exists ? "some " : "only ";
            out += e.role().render();
            out += " . ";
            write_concept(out, e.filler(), 2);
            break;
        case ConceptExpr::Kind::And: {
            bool first = true;
            for (const auto& op : e.operands()) {
                if (!std::exchange(first, false)) out += " and ";
                write_concept(out, op, 2);
            }
            break;
        }
        case ConceptExpr::Kind::Or: {
            bool first = true;
            for (const auto& op : e.operands()) {
                if (!std::exchange(first, false)) out += " or ";
                write_concept(out, op, 1);
            }
            break;
        }
    }
    if (parens) out.push_back(')');
}

} // namespace

std::string serialize_concept(const ConceptExpr& e) {
    std::string out;
    write_concept(out, e, 0);
    return out;
}

std::string serialize_statement(const OidStatement& s) {
    std::string out = s.subject().render();
    out += " | ";
    out += to_string(s.indicator());
    out += " | ";
    out += to_string(s.condition());
    out += " | ";
    write_concept(out, s.characterization(), 0);
    return out;
}

std::string serialize_statement(const OcStatement& s) {
    std::string out = s.subject().render();
    if (s.kind() == OcStatement::Kind::Hri) {
        out += " | HRI | ";
        out += quoted(s.label());
        out.push_back('@');
        out += s.lang();
    } else {
        out += " | Meta | ";
        out += s.key();
        out += " | ";
        out += s.value();
    }
    return out;
}

std::string serialize_axiom(const DlAxiom& a) {
    std::string out = serialize_concept(a.lhs());
    out += a.kind() == DlAxiom::Kind::Sub ? " sub " : " equiv ";
    out += serialize_concept(a.rhs());
    return out;
}

std::string serialize_collection(const Collection& c) {
    std::string out;
    if (!c.version_label().empty()) {
        out += "@version ";
        out += c.version_label();
        out.push_back('\n');
    }
    for (const auto& [oid, component] : c.components()) {
        for (const auto& s : component.oid_statements) {
            out += serialize_statement(s);
            out.push_back('\n');
        }
        for (const auto& s : component.oc_statements) {
            out += serialize_statement(s);
            out.push_back('\n');
        }
    }
    return out;
}

} // namespace ocs
