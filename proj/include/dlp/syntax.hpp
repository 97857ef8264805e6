// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT
//
// Core syntax: atoms, literals, rules, programs, and update sequences,
// together with the complement/conflict operations and canonical rendering.

#ifndef DLP_SYNTAX_HPP
#define DLP_SYNTAX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dlp {

// A propositional literal.  `strong` marks strong negation (-p), `naf`
// marks default negation (not l).  Both flags together represent "not -p".
// Structural ordering (atom, strong, naf) makes literals usable as set keys;
// canonical *display* ordering is a separate concern (see render()).
struct Literal {
    std::string atom;
    bool strong = false;
    bool naf = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal make_atom(std::string name) { return Literal{std::move(name), false, false}; }

inline Literal make_literal(std::string name, bool strong_negated, bool default_negated) {
    return Literal{std::move(name), strong_negated, default_negated};
}

inline bool is_objective(const Literal& l) { return !l.naf; }

// Strips default negation, keeping the underlying objective literal.
inline Literal objective_of(const Literal& l) { return Literal{l.atom, l.strong, false}; }

// not l <-> l.  Default negation is involutive.
inline Literal default_complement(const Literal& l) {
    return Literal{l.atom, l.strong, !l.naf};
}

// -l <-> l on the objective part.  Strong negation is involutive.
inline Literal strong_complement(const Literal& l) {
    return Literal{l.atom, !l.strong, l.naf};
}

// Literals in direct conflict with L:
//   con(l)     = {not l, -l}   for objective l
//   con(not l) = {l}
inline std::set<Literal> con(const Literal& l) {
    if (l.naf) {
        return {objective_of(l)};
    }
    return {default_complement(l), strong_complement(l)};
}

// A rule: head <- body.  The body is kept sorted and deduplicated so rules
// compare as (head, body-set) pairs, the identity the semantics use.
struct Rule {
    Literal head;
    std::vector<Literal> body;

    Rule() = default;
    Rule(Literal h, std::vector<Literal> b) : head(std::move(h)), body(std::move(b)) {
        normalize();
    }

    void normalize() {
        std::sort(body.begin(), body.end());
        body.erase(std::unique(body.begin(), body.end()), body.end());
    }

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

inline Rule make_fact(Literal head) { return Rule{std::move(head), {}}; }

inline bool is_fact(const Rule& r) { return r.body.empty(); }

// A tautology derives nothing new: its head already appears in its body.
inline bool is_tautology(const Rule& r) {
    return std::find(r.body.begin(), r.body.end(), r.head) != r.body.end();
}

// A program is an ordered list of rules (duplicates preserved: the update
// semantics treat rule occurrences, not rule values).
using Program = std::vector<Rule>;

// An update sequence: the initial program followed by successive updates.
using Dlp = std::vector<Program>;

inline Dlp singleton_dlp(Program p) { return Dlp{std::move(p)}; }

// One rule occurrence inside an update sequence, tagged by position.
struct Occurrence {
    int component = 0;
    int index = 0;
    Rule rule;

    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// The multiset of all rule occurrences, in (component, index) order.
inline std::vector<Occurrence> all_occurrences(const Dlp& dlp) {
    std::vector<Occurrence> out;
    for (std::size_t i = 0; i < dlp.size(); ++i) {
        for (std::size_t k = 0; k < dlp[i].size(); ++k) {
            out.push_back(Occurrence{static_cast<int>(i), static_cast<int>(k), dlp[i][k]});
        }
    }
    return out;
}

// Rejection sets reference occurrences by position.
using OccurrenceRef = std::pair<int, int>;
using RejectionSet = std::set<OccurrenceRef>;

// Keeps every occurrence not listed in `rejected`, in sequence order.
inline std::vector<Rule> surviving_rules(const Dlp& dlp, const RejectionSet& rejected) {
    std::vector<Rule> out;
    for (const auto& occ : all_occurrences(dlp)) {
        if (!rejected.count({occ.component, occ.index})) {
            out.push_back(occ.rule);
        }
    }
    return out;
}

using Alphabet = std::set<std::string>;

inline void collect_atoms(const Rule& r, Alphabet& out) {
    out.insert(r.head.atom);
    for (const auto& b : r.body) out.insert(b.atom);
}

inline Alphabet alphabet_of(const Program& p) {
    Alphabet out;
    for (const auto& r : p) collect_atoms(r, out);
    return out;
}

inline Alphabet alphabet_of(const Dlp& dlp) {
    Alphabet out;
    for (const auto& p : dlp) {
        for (const auto& r : p) collect_atoms(r, out);
    }
    return out;
}

// Classification: no strong negation anywhere.
inline bool is_generalised(const Program& p) {
    for (const auto& r : p) {
        if (r.head.strong) return false;
        for (const auto& b : r.body) {
            if (b.strong) return false;
        }
    }
    return true;
}

inline bool is_generalised(const Dlp& dlp) {
    return std::all_of(dlp.begin(), dlp.end(),
                       [](const Program& p) { return is_generalised(p); });
}

// Classification: generalised with plain-atom heads.
inline bool is_normal(const Program& p) {
    if (!is_generalised(p)) return false;
    return std::all_of(p.begin(), p.end(), [](const Rule& r) { return !r.head.naf; });
}

// ---------------------------------------------------------------------------
// Rendering.  The canonical surface syntax round-trips through the parser.

inline std::string render(const Literal& l) {
    std::string out;
    if (l.naf) out += "not ";
    if (l.strong) out += "-";
    out += l.atom;
    return out;
}

inline std::string render(const Rule& r) {
    std::string out = render(r.head);
    if (!r.body.empty()) {
        out += " :- ";
        // Body literals print in display order (sorted by rendered text) so
        // output is deterministic regardless of source order.
        std::vector<std::string> parts;
        parts.reserve(r.body.size());
        for (const auto& b : r.body) parts.push_back(render(b));
        std::sort(parts.begin(), parts.end());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ", ";
            out += parts[i];
        }
    }
    out += ".";
    return out;
}

inline std::string render(const Program& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += "\n";
        out += render(p[i]);
    }
    return out;
}

inline std::string render(const Dlp& dlp) {
    std::string out;
    for (std::size_t i = 0; i < dlp.size(); ++i) {
        if (i) out += "\n#update.\n";
        out += render(dlp[i]);
    }
    return out;
}

}  // namespace dlp

#endif  // DLP_SYNTAX_HPP
