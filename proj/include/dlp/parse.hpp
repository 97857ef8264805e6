// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT
//
// Parser for the textual program format.
//
// Grammar (surface syntax):
//   rule    := head (":-" body)? "."
//   head    := literal
//   body    := literal ("," literal)*
//   literal := ("not" WS)? ("-")? atom
//   atom    := [a-z][A-Za-z0-9_]*
// Comments run from '%' to end of line.  A line whose trimmed content is
// exactly "#update." separates the components of an update sequence; '#'
// anywhere else is an error.  "not not" and "--" are rejected rather than
// silently absorbed, keeping source files canonical.

#ifndef DLP_PARSE_HPP
#define DLP_PARSE_HPP

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlp/syntax.hpp"

namespace dlp {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(format(line, col, message)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

  private:
    static std::string format(int line, int col, const std::string& message) {
        std::ostringstream os;
        os << "parse error at line " << line << ", column " << col << ": " << message;
        return os.str();
    }

    int line_;
    int col_;
};

namespace detail {

struct PosChar {
    char c;
    int line;
    int col;
};

using Segment = std::vector<PosChar>;

inline bool is_atom_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_atom_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}
inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Splits raw text into component segments.  Comments are stripped first;
// then lines reading exactly "#update." (after trimming) act as separators.
inline std::vector<Segment> split_components(const std::string& text) {
    std::vector<Segment> segments(1);
    int line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = (eol == std::string::npos) ? text.substr(pos)
                                                      : text.substr(pos, eol - pos);
        std::size_t comment = line.find('%');
        if (comment != std::string::npos) line = line.substr(0, comment);

        std::size_t first = line.find_first_not_of(" \t\r");
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string trimmed =
            (first == std::string::npos) ? "" : line.substr(first, last - first + 1);

        if (trimmed == "#update.") {
            segments.emplace_back();
        } else {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) {
                throw ParseError(line_no, static_cast<int>(hash) + 1,
                                 "'#' is only allowed in a '#update.' separator line");
            }
            Segment& seg = segments.back();
            for (std::size_t i = 0; i < line.size(); ++i) {
                seg.push_back(PosChar{line[i], line_no, static_cast<int>(i) + 1});
            }
            seg.push_back(PosChar{'\n', line_no, static_cast<int>(line.size()) + 1});
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
        ++line_no;
    }
    return segments;
}

class RuleParser {
  public:
    explicit RuleParser(const Segment& seg) : seg_(seg) {}

    Program parse_rules() {
        Program out;
        skip_space();
        while (!at_end()) {
            out.push_back(parse_rule());
            skip_space();
        }
        return out;
    }

  private:
    bool at_end() const { return pos_ >= seg_.size(); }

    char peek() const { return seg_[pos_].c; }

    void advance() { ++pos_; }

    int cur_line() const {
        if (at_end()) return seg_.empty() ? 1 : seg_.back().line;
        return seg_[pos_].line;
    }

    int cur_col() const {
        if (at_end()) return seg_.empty() ? 1 : seg_.back().col + 1;
        return seg_[pos_].col;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(cur_line(), cur_col(), message);
    }

    void skip_space() {
        while (!at_end() && is_space(peek())) advance();
    }

    std::string parse_atom_token() {
        if (at_end() || !is_atom_start(peek())) {
            fail("expected an atom (lowercase identifier)");
        }
        std::string name;
        while (!at_end() && is_atom_char(peek())) {
            name += peek();
            advance();
        }
        return name;
    }

    Literal parse_literal() {
        bool naf = false;
        bool strong = false;
        if (!at_end() && is_atom_start(peek())) {
            std::size_t save = pos_;
            std::string word = parse_atom_token();
            if (word == "not") {
                if (at_end() || !is_space(peek())) {
                    fail("'not' must be followed by whitespace");
                }
                naf = true;
                skip_space();
            } else {
                // A plain atom literal; rewind is unnecessary, finish here.
                return Literal{word, false, false};
            }
            (void)save;
        }
        if (!at_end() && peek() == '-') {
            advance();
            strong = true;
            if (!at_end() && peek() == '-') {
                fail("'--' is not allowed (strong negation is involutive; write the atom)");
            }
        }
        if (!at_end() && is_atom_start(peek())) {
            std::size_t save = pos_;
            int line = cur_line();
            int col = cur_col();
            std::string word = parse_atom_token();
            if (word == "not") {
                if (naf) {
                    throw ParseError(line, col,
                                     "'not not' is not allowed (default negation is "
                                     "involutive; write the literal)");
                }
                throw ParseError(line, col, "'not' is a reserved keyword, not an atom");
            }
            (void)save;
            return Literal{word, strong, naf};
        }
        fail("expected an atom (lowercase identifier)");
    }

    Rule parse_rule() {
        if (peek() == ':') {
            fail("a rule requires a head (empty heads are not supported)");
        }
        Literal head = parse_literal();
        skip_space();
        std::vector<Literal> body;
        if (!at_end() && peek() == ':') {
            advance();
            if (at_end() || peek() != '-') {
                fail("expected ':-'");
            }
            advance();
            skip_space();
            body.push_back(parse_literal());
            skip_space();
            while (!at_end() && peek() == ',') {
                advance();
                skip_space();
                body.push_back(parse_literal());
                skip_space();
            }
        }
        if (at_end() || peek() != '.') {
            fail("expected '.' at end of rule");
        }
        advance();
        return Rule{head, std::move(body)};
    }

    const Segment& seg_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses a single program.  A '#update.' separator is rejected here: use
// parse_dlp for sequences.
inline Program parse_program(const std::string& text) {
    auto segments = detail::split_components(text);
    if (segments.size() != 1) {
        throw ParseError(1, 1,
                         "unexpected '#update.' separator in single-program input");
    }
    return detail::RuleParser(segments[0]).parse_rules();
}

// Parses an update sequence: n separator lines yield n+1 components.
inline Dlp parse_dlp(const std::string& text) {
    auto segments = detail::split_components(text);
    Dlp out;
    out.reserve(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        try {
            out.push_back(detail::RuleParser(segments[i]).parse_rules());
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.col(),
                             "in component " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

// Parses an interpretation literal list: "{}", "{p, -q}".  Accepts only
// objective literals.
inline std::set<Literal> parse_interpretation(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&]() {
        while (pos < text.size() && detail::is_space(text[pos])) ++pos;
    };
    auto fail = [&](const std::string& message) -> void {
        throw ParseError(1, static_cast<int>(pos) + 1, message);
    };
    skip();
    if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
    ++pos;
    std::set<Literal> out;
    skip();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip();
            bool strong = false;
            if (pos < text.size() && text[pos] == '-') {
                strong = true;
                ++pos;
            }
            if (pos >= text.size() || !detail::is_atom_start(text[pos])) {
                fail("expected an atom (lowercase identifier)");
            }
            std::string name;
            while (pos < text.size() && detail::is_atom_char(text[pos])) {
                name += text[pos];
                ++pos;
            }
            if (name == "not") fail("interpretations contain objective literals only");
            out.insert(Literal{name, strong, false});
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            fail("expected ',' or '}'");
        }
    }
    skip();
    if (pos != text.size()) fail("unexpected trailing characters");
    for (const auto& l : out) {
        if (out.count(strong_complement(l))) {
            throw ParseError(1, 1,
                             "inconsistent interpretation: contains both " + l.atom +
                                 " and -" + l.atom);
        }
    }
    return out;
}

}  // namespace dlp

#endif  // DLP_PARSE_HPP
