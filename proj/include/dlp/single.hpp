// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT
//
// Semantics of a single program: stable models via the fixpoint equation,
// and well-supported models via level mappings (with a constructive witness
// built from fixpoint iteration indices).

#ifndef DLP_SINGLE_HPP
#define DLP_SINGLE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "dlp/interp.hpp"
#include "dlp/syntax.hpp"

namespace dlp {

// Total map from objective literals to natural numbers.  Levels of default
// literals are derived: level(not l) = level(l).
using LevelMapping = std::map<Literal, int>;

// Level of a literal; default negation is transparent.  Literals without an
// explicit entry sit at level 0.
inline int level(const LevelMapping& lm, const Literal& l) {
    auto it = lm.find(objective_of(l));
    return it == lm.end() ? 0 : it->second;
}

// Max level over a literal set; 0 for the empty set (so facts are
// supportable at any head level >= 1).
inline int level_up(const LevelMapping& lm, const std::vector<Literal>& lits) {
    int out = 0;
    for (const auto& l : lits) out = std::max(out, level(lm, l));
    return out;
}

// Min level over a nonempty literal set.
inline int level_down(const LevelMapping& lm, const std::set<Literal>& lits) {
    if (lits.empty()) {
        throw std::logic_error("level_down requires a nonempty literal set");
    }
    int out = level(lm, *lits.begin());
    for (const auto& l : lits) out = std::min(out, level(lm, l));
    return out;
}

// def(J): one default fact `not l.` per objective literal over the alphabet
// that is absent from J.
inline Program def_assumptions(const Interpretation& j, const Alphabet& alphabet) {
    Program out;
    for (const auto& l : objective_universe(alphabet)) {
        if (!j.count(l)) out.push_back(make_fact(default_complement(l)));
    }
    return out;
}

// J is stable iff J' equals the least model of P + def(J), with literals
// read as propositional symbols.
inline bool is_stable_model(const Program& p, const Interpretation& j,
                            const Alphabet& alphabet) {
    Program q = p;
    Program defs = def_assumptions(j, alphabet);
    q.insert(q.end(), defs.begin(), defs.end());
    return least_model(q) == twiall(j, alphabet);
}

inline ModelSet stable_models(const Program& p, const Alphabet& alphabet,
                              std::size_t limit) {
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        if (is_stable_model(p, j, alphabet)) out.insert(j);
    });
    return out;
}

// True iff (1) J satisfies P and (2) every l in J has a rule with head l,
// satisfied body, and head level strictly above the body's max level.
inline bool verify_well_supported(const Program& p, const Interpretation& j,
                                  const LevelMapping& lm) {
    if (!satisfies(j, p)) return false;
    for (const auto& l : j) {
        bool supported = false;
        for (const auto& r : p) {
            if (r.head == l && satisfies_body(j, r.body) &&
                level(lm, r.head) > level_up(lm, r.body)) {
                supported = true;
                break;
            }
        }
        if (!supported) return false;
    }
    return true;
}

// Constructive witness: level(l) = first iterate of the consequence operator
// of P + def(J) containing l, for l in J; every other literal sits at 0.
// Returns the mapping iff it verifies, so a present result is always a
// genuine witness.
inline std::optional<LevelMapping> find_level_mapping(const Program& p,
                                                      const Interpretation& j,
                                                      const Alphabet& alphabet) {
    Program q = p;
    Program defs = def_assumptions(j, alphabet);
    q.insert(q.end(), defs.begin(), defs.end());

    LevelMapping lm;
    for (const auto& l : objective_universe(alphabet)) lm[l] = 0;

    LitSet cur;
    int step = 0;
    while (true) {
        LitSet next = tp_step(q, cur);
        ++step;
        bool changed = false;
        for (const auto& l : next) {
            if (!cur.count(l)) changed = true;
            if (!l.naf && j.count(l) && lm[l] == 0) lm[l] = step;
        }
        if (!changed && next == cur) break;
        cur = std::move(next);
    }

    if (verify_well_supported(p, j, lm)) return lm;
    return std::nullopt;
}

inline ModelSet well_supported_models(const Program& p, const Alphabet& alphabet,
                                      std::size_t limit) {
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        if (find_level_mapping(p, j, alphabet).has_value()) out.insert(j);
    });
    return out;
}

}  // namespace dlp

#endif  // DLP_SINGLE_HPP
