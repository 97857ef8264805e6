// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT
//
// Interpretations, satisfaction, the total completion J', the immediate
// consequence operator, least models, and candidate-model enumeration.

#ifndef DLP_INTERP_HPP
#define DLP_INTERP_HPP

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlp/syntax.hpp"

namespace dlp {

// A consistent set of objective literals.
using Interpretation = std::set<Literal>;

// A raw set of literals (objective and default-negated), e.g. J' or an
// operator iterate.
using LitSet = std::set<Literal>;

// Deterministic collection of models; set-of-sets equality is the contract.
using ModelSet = std::set<Interpretation>;

class LimitError : public std::runtime_error {
  public:
    LimitError(std::size_t atoms, std::size_t limit)
        : std::runtime_error(format(atoms, limit)) {}

  private:
    static std::string format(std::size_t atoms, std::size_t limit) {
        std::ostringstream os;
        os << "alphabet has " << atoms << " atoms, exceeding the enumeration limit of "
           << limit << " (raise --limit or DLP_ENGINE_LIMIT)";
        return os.str();
    }
};

// All objective literals over the alphabet: p and -p for every atom.
inline std::vector<Literal> objective_universe(const Alphabet& alphabet) {
    std::vector<Literal> out;
    out.reserve(alphabet.size() * 2);
    for (const auto& name : alphabet) {
        out.push_back(Literal{name, false, false});
        out.push_back(Literal{name, true, false});
    }
    return out;
}

// J' = J + {not l : objective l over the alphabet, l not in J}.  Exactly one
// of l / not l holds for every objective literal.
inline LitSet twiall(const Interpretation& j, const Alphabet& alphabet) {
    LitSet out(j.begin(), j.end());
    for (const auto& l : objective_universe(alphabet)) {
        if (!j.count(l)) out.insert(default_complement(l));
    }
    return out;
}

inline bool satisfies(const Interpretation& j, const Literal& l) {
    if (l.naf) return !j.count(objective_of(l));
    return j.count(l) != 0;
}

inline bool satisfies_body(const Interpretation& j, const std::vector<Literal>& body) {
    for (const auto& b : body) {
        if (!satisfies(j, b)) return false;
    }
    return true;
}

inline bool satisfies(const Interpretation& j, const Rule& r) {
    return !satisfies_body(j, r.body) || satisfies(j, r.head);
}

inline bool satisfies(const Interpretation& j, const Program& p) {
    for (const auto& r : p) {
        if (!satisfies(j, r)) return false;
    }
    return true;
}

// One step of the immediate consequence operator, reading rules as definite
// clauses over literals-as-symbols: {H(pi) | B(pi) a subset of s}.
inline LitSet tp_step(const Program& p, const LitSet& s) {
    LitSet out;
    for (const auto& r : p) {
        bool applicable = true;
        for (const auto& b : r.body) {
            if (!s.count(b)) {
                applicable = false;
                break;
            }
        }
        if (applicable) out.insert(r.head);
    }
    return out;
}

// Least fixpoint of tp_step from the empty set.  The operator is monotone on
// a finite universe, so plain iteration converges.
inline LitSet least_model(const Program& p) {
    LitSet cur;
    while (true) {
        LitSet next = tp_step(p, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

// Visits all 3^|alphabet| consistent interpretations in lexicographic order
// (per sorted atom: absent < positive < strongly negated).  Throws
// LimitError when the alphabet exceeds `limit`.
inline void for_each_interpretation(const Alphabet& alphabet, std::size_t limit,
                                    const std::function<void(const Interpretation&)>& fn) {
    if (alphabet.size() > limit) throw LimitError(alphabet.size(), limit);
    std::vector<std::string> atoms(alphabet.begin(), alphabet.end());
    std::vector<int> digits(atoms.size(), 0);  // 0 absent, 1 positive, 2 negated
    while (true) {
        Interpretation j;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (digits[i] == 1) j.insert(Literal{atoms[i], false, false});
            if (digits[i] == 2) j.insert(Literal{atoms[i], true, false});
        }
        fn(j);
        // Increment the base-3 counter; the last atom varies fastest.
        std::size_t i = atoms.size();
        while (i > 0) {
            --i;
            if (++digits[i] < 3) break;
            digits[i] = 0;
            if (i == 0) return;
        }
        if (atoms.empty()) return;
    }
}

inline std::vector<Interpretation> enumerate_interpretations(const Alphabet& alphabet,
                                                             std::size_t limit) {
    std::vector<Interpretation> out;
    for_each_interpretation(alphabet, limit,
                            [&](const Interpretation& j) { out.push_back(j); });
    return out;
}

// ---------------------------------------------------------------------------
// Canonical rendering of interpretations and model sets.

// Literals sorted by their rendered text, e.g. {-p, -r, q, s}.
inline std::string render(const Interpretation& j) {
    std::vector<std::string> parts;
    parts.reserve(j.size());
    for (const auto& l : j) parts.push_back(render(l));
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    out += "}";
    return out;
}

// One model per line, sorted lexicographically by rendered form.
inline std::vector<std::string> render_models(const ModelSet& models) {
    std::vector<std::string> lines;
    lines.reserve(models.size());
    for (const auto& m : models) lines.push_back(render(m));
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace dlp

#endif  // DLP_INTERP_HPP
