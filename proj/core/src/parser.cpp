// Copyright 2026 The icsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "icsq/parser.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

namespace icsq::lang {

namespace {

enum class Tok {
    ident,
    number,
    lbrace,
    rbrace,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    equals,
    dot,
    arrow,
    plus,
    minus,
    end,
    invalid,
};

struct Token {
    Tok kind;
    std::string_view text;
    Span span;
    bool imaginary = false;
};

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::string_view describe(Tok t) {
    switch (t) {
        case Tok::ident:
            return "identifier";
        case Tok::number:
            return "number";
        case Tok::lbrace:
            return "'{'";
        case Tok::rbrace:
            return "'}'";
        case Tok::lparen:
            return "'('";
        case Tok::rparen:
            return "')'";
        case Tok::lbracket:
            return "'['";
        case Tok::rbracket:
            return "']'";
        case Tok::comma:
            return "','";
        case Tok::equals:
            return "'='";
        case Tok::dot:
            return "'.'";
        case Tok::arrow:
            return "'->'";
        case Tok::plus:
            return "'+'";
        case Tok::minus:
            return "'-'";
        case Tok::end:
            return "end of input";
        case Tok::invalid:
            return "invalid character";
    }
    return "token";
}

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, {}, here(0)});
                return out;
            }
            out.push_back(next());
        }
    }

   private:
    Span here(std::size_t len) const {
        return Span{pos_, line_, col_, len};
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    bump();
                }
            } else {
                return;
            }
        }
    }

    Token single(Tok kind, std::size_t len) {
        Token t{kind, src_.substr(pos_, len), here(len)};
        for (std::size_t i = 0; i < len; ++i) {
            bump();
        }
        return t;
    }

    Token next() {
        const char c = src_[pos_];
        if (is_ident_start(c)) {
            std::size_t end = pos_;
            while (end < src_.size() && is_ident_char(src_[end])) {
                ++end;
            }
            return single(Tok::ident, end - pos_);
        }
        if (is_digit(c)) {
            return number();
        }
        switch (c) {
            case '{':
                return single(Tok::lbrace, 1);
            case '}':
                return single(Tok::rbrace, 1);
            case '(':
                return single(Tok::lparen, 1);
            case ')':
                return single(Tok::rparen, 1);
            case '[':
                return single(Tok::lbracket, 1);
            case ']':
                return single(Tok::rbracket, 1);
            case ',':
                return single(Tok::comma, 1);
            case '=':
                return single(Tok::equals, 1);
            case '.':
                return single(Tok::dot, 1);
            case '+':
                return single(Tok::plus, 1);
            case '-':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    return single(Tok::arrow, 2);
                }
                return single(Tok::minus, 1);
            default:
                return single(Tok::invalid, 1);
        }
    }

    Token number() {
        std::size_t end = pos_;
        while (end < src_.size() && is_digit(src_[end])) {
            ++end;
        }
        if (end + 1 < src_.size() && src_[end] == '.' && is_digit(src_[end + 1])) {
            ++end;
            while (end < src_.size() && is_digit(src_[end])) {
                ++end;
            }
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t k = end + 1;
            if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) {
                ++k;
            }
            if (k < src_.size() && is_digit(src_[k])) {
                while (k < src_.size() && is_digit(src_[k])) {
                    ++k;
                }
                end = k;
            }
        }
        bool imaginary = false;
        std::size_t len = end - pos_;
        if (end < src_.size() && src_[end] == 'i' && (end + 1 >= src_.size() || !is_ident_char(src_[end + 1]))) {
            imaginary = true;
        }
        Token t = single(Tok::number, len);
        if (imaginary) {
            bump();
            t.span.len += 1;
            t.imaginary = true;
        }
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

constexpr std::size_t kMaxErrors = 64;

bool is_decl_keyword(std::string_view s) {
    return s == "system" || s == "structure" || s == "config" || s == "bridge" || s == "statement";
}

struct SyntaxError {};

Span cover(const Span &first, const Span &last) {
    Span s = first;
    const std::size_t end = last.offset + last.len;
    s.len = end > first.offset ? end - first.offset : first.len;
    return s;
}

class Parser {
   public:
    Parser(std::string_view src, std::vector<Token> toks) : src_(src), toks_(std::move(toks)) {
    }

    ParseResult run() {
        Scenario scenario;
        while (peek().kind != Tok::end && errors_.size() < kMaxErrors) {
            try {
                declaration(scenario);
            } catch (const SyntaxError &) {
                recover();
            }
        }
        check_duplicates(scenario);
        ParseResult result;
        std::stable_sort(errors_.begin(), errors_.end(),
                         [](const Diagnostic &a, const Diagnostic &b) { return a.span.offset < b.span.offset; });
        result.errors = std::move(errors_);
        if (result.errors.empty()) {
            result.scenario = std::move(scenario);
        }
        return result;
    }

   private:
    const Token &peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }

    const Token &advance() {
        const Token &t = toks_[pos_];
        if (t.kind == Tok::lbrace) {
            ++depth_;
        } else if (t.kind == Tok::rbrace && depth_ > 0) {
            --depth_;
        }
        if (pos_ + 1 < toks_.size()) {
            ++pos_;
        }
        return t;
    }

    const Token &previous() const {
        return toks_[pos_ == 0 ? 0 : pos_ - 1];
    }

    [[noreturn]] void fail(const Token &at, std::string message) {
        errors_.push_back(Diagnostic::make(DiagCode::P001, std::move(message), at.span, current_decl_));
        throw SyntaxError{};
    }

    [[noreturn]] void expected(std::string_view what) {
        const Token &t = peek();
        std::string found(describe(t.kind));
        if (t.kind == Tok::ident || t.kind == Tok::number) {
            found += " '" + std::string(t.text) + "'";
        }
        fail(t, "expected " + std::string(what) + ", found " + found);
    }

    const Token &expect(Tok kind) {
        if (peek().kind != kind) {
            expected(describe(kind));
        }
        return advance();
    }

    bool at_keyword(std::string_view kw) const {
        return peek().kind == Tok::ident && peek().text == kw;
    }

    const Token &expect_keyword(std::string_view kw) {
        if (!at_keyword(kw)) {
            expected("'" + std::string(kw) + "'");
        }
        return advance();
    }

    Ident ident(std::string_view what = "identifier") {
        if (peek().kind != Tok::ident) {
            expected(what);
        }
        const Token &t = advance();
        return Ident{std::string(t.text), t.span};
    }

    void recover() {
        // Skip to the next declaration keyword at brace depth 0, or at the
        // start of a line.
        while (peek().kind != Tok::end) {
            const Token &t = peek();
            if (t.kind == Tok::ident && is_decl_keyword(t.text) && (depth_ == 0 || t.span.col == 1)) {
                depth_ = 0;
                return;
            }
            advance();
        }
    }

    void declaration(Scenario &s) {
        depth_ = 0;
        const Token &t = peek();
        if (t.kind != Tok::ident || !is_decl_keyword(t.text)) {
            current_decl_.clear();
            expected("declaration ('system', 'structure', 'config', 'bridge' or 'statement')");
        }
        current_decl_ = peek(1).kind == Tok::ident ? std::string(peek(1).text) : std::string();
        if (t.text == "system") {
            s.systems.push_back(system_decl());
        } else if (t.text == "structure") {
            s.structures.push_back(structure_decl());
        } else if (t.text == "config") {
            s.configurations.push_back(config_decl());
        } else if (t.text == "bridge") {
            s.bridges.push_back(bridge_decl());
        } else {
            s.statements.push_back(statement_decl());
        }
    }

    std::uint64_t integer(std::string_view what) {
        if (peek().kind != Tok::number) {
            expected(what);
        }
        const Token &t = peek();
        std::uint64_t value = 0;
        const auto *first = t.text.data();
        const auto *last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (t.imaginary || ec != std::errc() || ptr != last) {
            fail(t, "expected a non-negative integer for " + std::string(what));
        }
        advance();
        return value;
    }

    double real_literal() {
        const Token &t = peek();
        if (t.kind != Tok::number) {
            expected("number");
        }
        double value = 0.0;
        const auto *first = t.text.data();
        const auto *last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            fail(t, "number '" + std::string(t.text) + "' is out of range");
        }
        advance();
        return value;
    }

    // [+-] NUMBER, not imaginary.
    double signed_real() {
        bool negative = false;
        if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
            negative = advance().kind == Tok::minus;
        }
        if (peek().kind == Tok::number && peek().imaginary) {
            expected("real number");
        }
        const double v = real_literal();
        return negative ? -v : v;
    }

    // re | re (+|-) im i | im i
    Complex complex_literal() {
        bool negative = false;
        if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
            negative = advance().kind == Tok::minus;
        }
        const bool first_imag = peek().kind == Tok::number && peek().imaginary;
        double first = real_literal();
        if (negative) {
            first = -first;
        }
        if (first_imag) {
            return {0.0, first};
        }
        if ((peek().kind == Tok::plus || peek().kind == Tok::minus) && peek(1).kind == Tok::number &&
            peek(1).imaginary) {
            const bool minus = advance().kind == Tok::minus;
            const double im = real_literal();
            return {first, minus ? -im : im};
        }
        return {first, 0.0};
    }

    std::vector<Complex> complex_row() {
        expect(Tok::lbracket);
        std::vector<Complex> row;
        row.push_back(complex_literal());
        while (peek().kind == Tok::comma) {
            advance();
            row.push_back(complex_literal());
        }
        expect(Tok::rbracket);
        return row;
    }

    ComplexTable complex_matrix() {
        expect(Tok::lbracket);
        ComplexTable rows;
        rows.push_back(complex_row());
        while (peek().kind == Tok::comma) {
            advance();
            rows.push_back(complex_row());
        }
        expect(Tok::rbracket);
        return rows;
    }

    SystemRef system_ref() {
        SystemRef ref;
        ref.path.push_back(ident("system name"));
        while (peek().kind == Tok::dot) {
            advance();
            ref.path.push_back(ident("factor name after '.'"));
        }
        return ref;
    }

    Outcome outcome(std::size_t nesting = 0) {
        if (nesting > kMaxNesting) {
            fail(peek(), "outcome tuple nested too deeply");
        }
        if (peek().kind == Tok::ident) {
            const Token &t = advance();
            return Outcome{std::string(t.text), {}, false, t.span};
        }
        if (peek().kind != Tok::lparen) {
            expected("outcome label or tuple");
        }
        const Span open = advance().span;
        Outcome o;
        o.tuple = true;
        o.parts.push_back(outcome(nesting + 1));
        while (peek().kind == Tok::comma) {
            advance();
            o.parts.push_back(outcome(nesting + 1));
        }
        expect(Tok::rparen);
        o.span = cover(open, previous().span);
        return o;
    }

    BuiltinCall builtin_call(bool parens_required) {
        BuiltinCall call;
        call.name = ident("builtin name");
        if (peek().kind == Tok::lparen) {
            advance();
            if (peek().kind != Tok::rparen) {
                call.args.push_back(signed_real());
                while (peek().kind == Tok::comma) {
                    advance();
                    call.args.push_back(signed_real());
                }
            }
            expect(Tok::rparen);
        } else if (parens_required) {
            expected("'(' after builtin configuration name");
        }
        return call;
    }

    SystemDecl system_decl() {
        const Span start = advance().span;
        SystemDecl d;
        d.id = ident("system name");
        expect_keyword("dim");
        const Token &dim_tok = peek();
        d.dim = integer("system dimension");
        if (d.dim == 0) {
            fail(dim_tok, "system dimension must be positive");
        }
        if (peek().kind == Tok::equals) {
            advance();
            d.factors.push_back(ident("factor system name"));
            expect_keyword("x");
            d.factors.push_back(ident("factor system name"));
            while (at_keyword("x")) {
                advance();
                d.factors.push_back(ident("factor system name"));
            }
            std::set<std::string> seen;
            for (const auto &f : d.factors) {
                if (!seen.insert(f.name).second) {
                    errors_.push_back(Diagnostic::make(DiagCode::P002,
                                                       "factor '" + f.name + "' appears twice in '" + d.id.name + "'",
                                                       f.span, d.id.name));
                }
            }
        }
        d.span = cover(start, previous().span);
        return d;
    }

    StructureDecl structure_decl() {
        const Span start = advance().span;
        StructureDecl d;
        d.id = ident("structure name");
        expect_keyword("over");
        d.over = system_ref();
        if (at_keyword("builtin")) {
            advance();
            d.body = builtin_call(false);
        } else if (at_keyword("density")) {
            advance();
            d.body = DensityTable{complex_matrix()};
        } else if (peek().kind == Tok::lbracket) {
            d.body = AmplitudeTable{complex_row()};
        } else {
            expected("'builtin', 'density' or an amplitude list '['");
        }
        d.span = cover(start, previous().span);
        return d;
    }

    ConfigDecl config_decl() {
        const Span start = advance().span;
        ConfigDecl d;
        d.id = ident("configuration name");
        expect_keyword("over");
        d.over = system_ref();
        if (at_keyword("builtin")) {
            advance();
            d.body = builtin_call(true);
        } else {
            EffectTable table;
            if (at_keyword("projective")) {
                advance();
            } else if (at_keyword("povm")) {
                advance();
                table.kind = ConfigKind::povm;
            }
            if (peek().kind != Tok::lbrace) {
                expected("'builtin' or an effect table '{'");
            }
            advance();
            while (peek().kind != Tok::rbrace) {
                EffectEntry e;
                e.label = outcome();
                expect(Tok::equals);
                e.matrix = complex_matrix();
                e.span = cover(e.label.span, previous().span);
                table.effects.push_back(std::move(e));
            }
            expect(Tok::rbrace);
            if (table.effects.empty()) {
                fail(previous(), "effect table of '" + d.id.name + "' is empty");
            }
            d.body = std::move(table);
        }
        d.span = cover(start, previous().span);
        return d;
    }

    BridgeDecl bridge_decl() {
        const Span start = advance().span;
        BridgeDecl d;
        d.id = ident("bridge name");
        if (at_keyword("physical")) {
            d.kind = BridgeKind::physical;
        } else if (at_keyword("epistemic")) {
            d.kind = BridgeKind::epistemic;
        } else {
            expected("'physical' or 'epistemic'");
        }
        advance();
        expect_keyword("via");
        d.config = ident("configuration name");
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            BridgeMapping m;
            m.from = outcome();
            expect(Tok::arrow);
            m.to = outcome();
            m.span = cover(m.from.span, m.to.span);
            d.maps.push_back(std::move(m));
            if (peek().kind == Tok::comma) {
                advance();
            }
        }
        expect(Tok::rbrace);
        d.span = cover(start, previous().span);
        return d;
    }

    StatementNode claim(std::size_t nesting) {
        if (nesting > kMaxNesting) {
            fail(peek(), "compose nested too deeply");
        }
        StatementNode node;
        const Span start = peek().span;
        if (at_keyword("yields")) {
            advance();
            expect(Tok::lparen);
            node.subject = system_ref();
            if (peek().kind == Tok::comma) {
                advance();
                node.config = ident("configuration name");
                node.kind = NodeKind::yields;
            } else {
                node.kind = NodeKind::intrinsic_yields;
            }
            expect(Tok::rparen);
            expect(Tok::equals);
            node.outcome = outcome();
        } else if (at_keyword("compose")) {
            advance();
            node.kind = NodeKind::composite;
            expect(Tok::lbrace);
            while (peek().kind != Tok::rbrace) {
                if (at_keyword("joint")) {
                    fail(peek(), "a joint request cannot be part of a composite claim");
                }
                if (peek().kind == Tok::end) {
                    expected("'}'");
                }
                node.children.push_back(claim(nesting + 1));
            }
            const Token &close = expect(Tok::rbrace);
            if (node.children.size() < 2) {
                fail(close, "a composite claim needs at least two claims");
            }
            if (at_keyword("using")) {
                advance();
                node.bridge = ident("bridge name");
            }
        } else if (at_keyword("joint")) {
            advance();
            node.kind = NodeKind::joint_request;
            expect(Tok::lparen);
            node.subject = system_ref();
            expect(Tok::comma);
            node.config = ident("configuration name");
            expect(Tok::comma);
            node.config2 = ident("configuration name");
            expect(Tok::rparen);
        } else {
            expected("'yields', 'compose' or 'joint'");
        }
        node.span = cover(start, previous().span);
        return node;
    }

    Statement statement_decl() {
        const Span start = advance().span;
        Statement st;
        st.id = ident("statement name");
        expect(Tok::lbrace);
        st.node = claim(0);
        expect(Tok::rbrace);
        st.span = cover(start, previous().span);
        return st;
    }

    template <typename Decl, typename Get>
    void duplicates(const std::vector<Decl> &decls, std::string_view kind, Get get) {
        std::unordered_set<std::string> seen;
        for (const auto &d : decls) {
            const Ident &id = get(d);
            if (!seen.insert(id.name).second) {
                errors_.push_back(Diagnostic::make(
                    DiagCode::P002, std::string(kind) + " '" + id.name + "' is declared more than once", id.span,
                    id.name));
            }
        }
    }

    void check_duplicates(const Scenario &s) {
        duplicates(s.systems, "system", [](const SystemDecl &d) -> const Ident & { return d.id; });
        duplicates(s.structures, "structure", [](const StructureDecl &d) -> const Ident & { return d.id; });
        duplicates(s.configurations, "configuration", [](const ConfigDecl &d) -> const Ident & { return d.id; });
        duplicates(s.bridges, "bridge", [](const BridgeDecl &d) -> const Ident & { return d.id; });
        duplicates(s.statements, "statement", [](const Statement &d) -> const Ident & { return d.id; });
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    std::string current_decl_;
    std::vector<Diagnostic> errors_;
};

// Serialization ----------------------------------------------------------

std::string complex_text(Complex z) {
    if (z.imag() == 0.0) {
        return format_number(z.real());
    }
    if (z.real() == 0.0 && !std::signbit(z.real())) {
        return format_number(z.imag()) + "i";
    }
    std::string out = format_number(z.real());
    if (std::signbit(z.imag())) {
        out += " - " + format_number(-z.imag()) + "i";
    } else {
        out += " + " + format_number(z.imag()) + "i";
    }
    return out;
}

std::string row_text(const std::vector<Complex> &row) {
    std::string out = "[";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += complex_text(row[i]);
    }
    return out + "]";
}

std::string matrix_text(const ComplexTable &rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += row_text(rows[i]);
    }
    return out + "]";
}

std::string outcome_text(const Outcome &o) {
    if (!o.tuple) {
        return o.name;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < o.parts.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += outcome_text(o.parts[i]);
    }
    return out + ")";
}

std::string call_text(const BuiltinCall &call, bool always_parens) {
    std::string out = call.name.name;
    if (call.args.empty() && !always_parens) {
        return out;
    }
    out += "(";
    for (std::size_t i = 0; i < call.args.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_number(call.args[i]);
    }
    return out + ")";
}

void node_text(const StatementNode &n, std::string &out, std::size_t indent) {
    const std::string pad(indent, ' ');
    switch (n.kind) {
        case NodeKind::yields:
            out += "yields(" + n.subject.str() + ", " + (n.config ? n.config->name : std::string()) +
                   ") = " + (n.outcome ? outcome_text(*n.outcome) : std::string());
            break;
        case NodeKind::intrinsic_yields:
            out += "yields(" + n.subject.str() + ") = " + (n.outcome ? outcome_text(*n.outcome) : std::string());
            break;
        case NodeKind::joint_request:
            out += "joint(" + n.subject.str() + ", " + (n.config ? n.config->name : std::string()) + ", " +
                   (n.config2 ? n.config2->name : std::string()) + ")";
            break;
        case NodeKind::composite:
            out += "compose {\n";
            for (const auto &c : n.children) {
                out += pad + "  ";
                node_text(c, out, indent + 2);
                out += "\n";
            }
            out += pad + "}";
            if (n.bridge) {
                out += " using " + n.bridge->name;
            }
            break;
    }
}

void reset(Span &s) {
    s = Span{};
}

void reset(Ident &id) {
    reset(id.span);
}

void reset(SystemRef &r) {
    for (auto &p : r.path) {
        reset(p);
    }
}

void reset(Outcome &o) {
    reset(o.span);
    for (auto &p : o.parts) {
        reset(p);
    }
}

void reset(StatementNode &n) {
    reset(n.span);
    reset(n.subject);
    if (n.config) {
        reset(*n.config);
    }
    if (n.config2) {
        reset(*n.config2);
    }
    if (n.outcome) {
        reset(*n.outcome);
    }
    if (n.bridge) {
        reset(*n.bridge);
    }
    for (auto &c : n.children) {
        reset(c);
    }
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        return "0";
    }
    return std::string(buf, ptr);
}

std::string SystemRef::str() const {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) {
            out += '.';
        }
        out += path[i].name;
    }
    return out;
}

std::string Outcome::label() const {
    if (!tuple) {
        return name;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += parts[i].label();
    }
    return out + ")";
}

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::yields:
            return "yields";
        case NodeKind::intrinsic_yields:
            return "intrinsic-yields";
        case NodeKind::composite:
            return "composite";
        case NodeKind::joint_request:
            return "joint-request";
    }
    return "node";
}

ParseResult parse(std::string_view text) {
    if (text.size() > kMaxInputBytes) {
        ParseResult r;
        r.errors.push_back(Diagnostic::make(DiagCode::P001, "input exceeds the 1 MiB limit", Span{0, 1, 1, 0}));
        return r;
    }
    Parser parser(text, Lexer(text).run());
    return parser.run();
}

std::string serialize(const Scenario &s) {
    std::string out;
    for (const auto &d : s.systems) {
        out += "system " + d.id.name + " dim " + std::to_string(d.dim);
        if (!d.factors.empty()) {
            out += " =";
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                out += (i ? " x " : " ") + d.factors[i].name;
            }
        }
        out += "\n";
    }
    for (const auto &d : s.structures) {
        out += "structure " + d.id.name + " over " + d.over.str() + " ";
        if (const auto *call = std::get_if<BuiltinCall>(&d.body)) {
            out += "builtin " + call_text(*call, false);
        } else if (const auto *amp = std::get_if<AmplitudeTable>(&d.body)) {
            out += row_text(amp->amplitudes);
        } else {
            out += "density " + matrix_text(std::get<DensityTable>(d.body).rows);
        }
        out += "\n";
    }
    for (const auto &d : s.configurations) {
        out += "config " + d.id.name + " over " + d.over.str() + " ";
        if (const auto *call = std::get_if<BuiltinCall>(&d.body)) {
            out += "builtin " + call_text(*call, true) + "\n";
        } else {
            const auto &table = std::get<EffectTable>(d.body);
            out += table.kind == ConfigKind::povm ? "povm {\n" : "projective {\n";
            for (const auto &e : table.effects) {
                out += "  " + outcome_text(e.label) + " = " + matrix_text(e.matrix) + "\n";
            }
            out += "}\n";
        }
    }
    for (const auto &d : s.bridges) {
        out += "bridge " + d.id.name + (d.kind == BridgeKind::physical ? " physical" : " epistemic") + " via " +
               d.config.name + " {\n";
        for (const auto &m : d.maps) {
            out += "  " + outcome_text(m.from) + " -> " + outcome_text(m.to) + "\n";
        }
        out += "}\n";
    }
    for (const auto &st : s.statements) {
        out += "statement " + st.id.name + " {\n  ";
        node_text(st.node, out, 2);
        out += "\n}\n";
    }
    return out;
}

Scenario strip_spans(Scenario s) {
    for (auto &d : s.systems) {
        reset(d.span);
        reset(d.id);
        for (auto &f : d.factors) {
            reset(f);
        }
    }
    for (auto &d : s.structures) {
        reset(d.span);
        reset(d.id);
        reset(d.over);
        if (auto *call = std::get_if<BuiltinCall>(&d.body)) {
            reset(call->name);
        }
    }
    for (auto &d : s.configurations) {
        reset(d.span);
        reset(d.id);
        reset(d.over);
        if (auto *call = std::get_if<BuiltinCall>(&d.body)) {
            reset(call->name);
        } else {
            for (auto &e : std::get<EffectTable>(d.body).effects) {
                reset(e.span);
                reset(e.label);
            }
        }
    }
    for (auto &d : s.bridges) {
        reset(d.span);
        reset(d.id);
        reset(d.config);
        for (auto &m : d.maps) {
            reset(m.span);
            reset(m.from);
            reset(m.to);
        }
    }
    for (auto &st : s.statements) {
        reset(st.span);
        reset(st.id);
        reset(st.node);
    }
    return s;
}

bool structurally_equal(const Scenario &a, const Scenario &b) {
    return strip_spans(a) == strip_spans(b);
}

}  // namespace icsq::lang
