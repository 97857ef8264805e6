// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT
//
// Update-sequence semantics.  Four evaluators over dynamic programs:
//
//   rd  - causal rejection via the fixpoint equation (no strong negation;
//         same-component rejection allowed)
//   ws  - causal rejection via level mappings (no strong negation;
//         strictly-later rejection only)
//   erd - strong-negation-aware rejection with a guarded consequence
//         operator (conflict sets, strictly-later rejection)
//   ews - strong-negation-aware rejection via level mappings, support drawn
//         from the remainder
//
// plus the two coherence transformations that encode strong negation away,
// and the composed legacy pipelines (rd/ws after a transformation).

#ifndef DLP_UPDATES_HPP
#define DLP_UPDATES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlp/interp.hpp"
#include "dlp/single.hpp"
#include "dlp/syntax.hpp"

namespace dlp {

class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& message)
        : std::runtime_error(message) {}
};

enum class Semantics {
    Sm,        // stable models (single program)
    WsSingle,  // well-supported models (single program)
    Rd,        // update sequence, fixpoint form (no strong negation)
    WsDlp,     // update sequence, level-mapping form (no strong negation)
    Erd,       // extended fixpoint form (strong negation native)
    Ews,       // extended level-mapping form (strong negation native)
    RdExpone,
    RdExptwo,
    WsExpone,
    WsExptwo,
};

inline std::string semantics_name(Semantics s) {
    switch (s) {
        case Semantics::Sm: return "sm";
        case Semantics::WsSingle: return "ws";
        case Semantics::Rd: return "rd";
        case Semantics::WsDlp: return "ws-dlp";
        case Semantics::Erd: return "erd";
        case Semantics::Ews: return "ews";
        case Semantics::RdExpone: return "rd+expone";
        case Semantics::RdExptwo: return "rd+exptwo";
        case Semantics::WsExpone: return "ws+expone";
        case Semantics::WsExptwo: return "ws+exptwo";
    }
    return "?";
}

inline std::optional<Semantics> parse_semantics(const std::string& name) {
    static const std::map<std::string, Semantics> table = {
        {"sm", Semantics::Sm},           {"ws", Semantics::WsSingle},
        {"rd", Semantics::Rd},           {"ws-dlp", Semantics::WsDlp},
        {"erd", Semantics::Erd},         {"ews", Semantics::Ews},
        {"rd+expone", Semantics::RdExpone}, {"rd+exptwo", Semantics::RdExptwo},
        {"ws+expone", Semantics::WsExpone}, {"ws+exptwo", Semantics::WsExptwo},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace detail {

inline void require_generalised(const Dlp& dlp, const std::string& sem) {
    if (!is_generalised(dlp)) {
        throw PreconditionError("semantics '" + sem +
                                "' requires a program without strong negation");
    }
}

// Atom-level completion used by the strong-negation-free evaluators:
// J + {not p : atom p over the alphabet, p not in J}.
inline LitSet atom_completion(const Interpretation& j, const Alphabet& alphabet) {
    LitSet out(j.begin(), j.end());
    for (const auto& name : alphabet) {
        Literal atom{name, false, false};
        if (!j.count(atom)) out.insert(default_complement(atom));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fixpoint-form rejection (no strong negation).

// Occurrences with a rejecting rule in the same or a later component whose
// head is the default complement of theirs and whose body J satisfies.
inline RejectionSet rej_rd(const Dlp& dlp, const Interpretation& j) {
    detail::require_generalised(dlp, "rd");
    RejectionSet out;
    auto occ = all_occurrences(dlp);
    for (const auto& pi : occ) {
        for (const auto& sigma : occ) {
            if (sigma.component >= pi.component &&
                sigma.rule.head == default_complement(pi.rule.head) &&
                satisfies_body(j, sigma.rule.body)) {
                out.insert({pi.component, pi.index});
                break;
            }
        }
    }
    return out;
}

// Constrained defaults: `not p.` for every atom p with no rule occurrence
// whose head is p and whose body J satisfies.
inline Program def_constrained(const Dlp& dlp, const Interpretation& j,
                               const Alphabet& alphabet) {
    detail::require_generalised(dlp, "rd");
    Program out;
    for (const auto& name : alphabet) {
        Literal atom{name, false, false};
        bool blocked = false;
        for (const auto& occ : all_occurrences(dlp)) {
            if (occ.rule.head == atom && satisfies_body(j, occ.rule.body)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.push_back(make_fact(default_complement(atom)));
    }
    return out;
}

inline bool rd_member(const Dlp& dlp, const Interpretation& j, const Alphabet& alphabet) {
    Program q = surviving_rules(dlp, rej_rd(dlp, j));
    Program defs = def_constrained(dlp, j, alphabet);
    q.insert(q.end(), defs.begin(), defs.end());
    return least_model(q) == detail::atom_completion(j, alphabet);
}

inline ModelSet rd_models(const Dlp& dlp, const Alphabet& alphabet, std::size_t limit) {
    detail::require_generalised(dlp, "rd");
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        // Restrict candidates to atom-only interpretations: the evaluator
        // works over the atom universe.
        for (const auto& l : j) {
            if (l.strong) return;
        }
        if (rd_member(dlp, j, alphabet)) out.insert(j);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Level-mapping-form rejection (no strong negation).

// Occurrences with a strictly later rejecting rule whose head is the default
// complement of theirs, whose body J satisfies, and whose head level sits
// strictly above its body's max level.
inline RejectionSet rej_ws(const Dlp& dlp, const Interpretation& j,
                           const LevelMapping& lm) {
    detail::require_generalised(dlp, "ws-dlp");
    RejectionSet out;
    auto occ = all_occurrences(dlp);
    for (const auto& pi : occ) {
        for (const auto& sigma : occ) {
            if (sigma.component > pi.component &&
                sigma.rule.head == default_complement(pi.rule.head) &&
                satisfies_body(j, sigma.rule.body) &&
                level(lm, sigma.rule.head) > level_up(lm, sigma.rule.body)) {
                out.insert({pi.component, pi.index});
                break;
            }
        }
    }
    return out;
}

// Both well-supported conditions under a given mapping: J models the
// surviving rules, and every true atom has an unrejected supporting rule
// with head level strictly above its body.
inline bool ws_verify(const Dlp& dlp, const Interpretation& j, const LevelMapping& lm) {
    RejectionSet rejected = rej_ws(dlp, j, lm);
    Program kept = surviving_rules(dlp, rejected);
    if (!satisfies(j, kept)) return false;
    for (const auto& l : j) {
        bool supported = false;
        for (const auto& r : kept) {
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

// Decision procedure: build the candidate mapping from the fixpoint-form
// iteration indices (first step at which p or not p appears), then verify
// both conditions literally.
inline LevelMapping ws_candidate_mapping(const Dlp& dlp, const Interpretation& j,
                                         const Alphabet& alphabet) {
    Program q = surviving_rules(dlp, rej_rd(dlp, j));
    Program defs = def_constrained(dlp, j, alphabet);
    q.insert(q.end(), defs.begin(), defs.end());

    LevelMapping lm;
    for (const auto& name : alphabet) lm[Literal{name, false, false}] = 0;

    LitSet cur;
    int step = 0;
    while (true) {
        LitSet next = tp_step(q, cur);
        ++step;
        for (const auto& l : next) {
            Literal key = objective_of(l);
            if (lm.count(key) && lm[key] == 0 && !cur.count(l)) lm[key] = step;
        }
        if (next == cur) break;
        cur = std::move(next);
    }
    return lm;
}

inline bool ws_dlp_member(const Dlp& dlp, const Interpretation& j,
                          const Alphabet& alphabet) {
    return ws_verify(dlp, j, ws_candidate_mapping(dlp, j, alphabet));
}

inline ModelSet ws_dlp_models(const Dlp& dlp, const Alphabet& alphabet,
                              std::size_t limit) {
    detail::require_generalised(dlp, "ws-dlp");
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        for (const auto& l : j) {
            if (l.strong) return;
        }
        if (ws_dlp_member(dlp, j, alphabet)) out.insert(j);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Extended fixpoint form (strong negation native).

// Occurrences with a strictly later rule whose head conflicts with theirs
// and whose body is contained in the literal set S.
inline RejectionSet rej_rds(const Dlp& dlp, const LitSet& s) {
    RejectionSet out;
    auto occ = all_occurrences(dlp);
    for (const auto& pi : occ) {
        auto conflicts = con(pi.rule.head);
        for (const auto& sigma : occ) {
            if (sigma.component > pi.component && conflicts.count(sigma.rule.head)) {
                bool body_in_s = true;
                for (const auto& b : sigma.rule.body) {
                    if (!s.count(b)) {
                        body_in_s = false;
                        break;
                    }
                }
                if (body_in_s) {
                    out.insert({pi.component, pi.index});
                    break;
                }
            }
        }
    }
    return out;
}

// The remainder: every occurrence not rejected under S.
inline std::vector<Occurrence> rem(const Dlp& dlp, const LitSet& s) {
    RejectionSet rejected = rej_rds(dlp, s);
    std::vector<Occurrence> out;
    for (const auto& occ : all_occurrences(dlp)) {
        if (!rejected.count({occ.component, occ.index})) out.push_back(occ);
    }
    return out;
}

// One step of the guarded consequence operator: heads of rules from
// rem(P, J') + def(J) whose body is within S, unless some rule surviving
// under S itself has a conflicting head and a body within J'.
inline LitSet t_rds(const Dlp& dlp, const Interpretation& j, const Alphabet& alphabet,
                    const LitSet& s) {
    LitSet jprime = twiall(j, alphabet);
    auto guard_pool = rem(dlp, s);

    std::vector<Rule> pool;
    for (const auto& occ : rem(dlp, jprime)) pool.push_back(occ.rule);
    for (const auto& fact : def_assumptions(j, alphabet)) pool.push_back(fact);

    LitSet out;
    for (const auto& r : pool) {
        bool body_in_s = true;
        for (const auto& b : r.body) {
            if (!s.count(b)) {
                body_in_s = false;
                break;
            }
        }
        if (!body_in_s) continue;
        auto conflicts = con(r.head);
        bool blocked = false;
        for (const auto& occ : guard_pool) {
            if (!conflicts.count(occ.rule.head)) continue;
            bool body_in_jprime = true;
            for (const auto& b : occ.rule.body) {
                if (!jprime.count(b)) {
                    body_in_jprime = false;
                    break;
                }
            }
            if (body_in_jprime) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.insert(r.head);
    }
    return out;
}

struct ErdClosure {
    LitSet accumulated;          // union of all iterates
    LitSet jprime;               // the target completion
    std::vector<LitSet> iterates;  // S_1, S_2, ... (S_0 = {} omitted)
};

// Iterates the guarded operator from the empty set, accumulating the union.
// The universe is finite, so iteration either reaches a fixpoint or revisits
// an earlier set; both terminate the loop.
inline ErdClosure erd_closure(const Dlp& dlp, const Interpretation& j,
                              const Alphabet& alphabet) {
    ErdClosure out;
    out.jprime = twiall(j, alphabet);
    std::vector<LitSet> seen;
    LitSet cur;
    while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
        seen.push_back(cur);
        cur = t_rds(dlp, j, alphabet, cur);
        out.iterates.push_back(cur);
        for (const auto& l : cur) out.accumulated.insert(l);
    }
    return out;
}

inline bool extended_rd_member(const Dlp& dlp, const Interpretation& j,
                               const Alphabet& alphabet) {
    ErdClosure c = erd_closure(dlp, j, alphabet);
    return c.accumulated == c.jprime;
}

inline ModelSet extended_rd_models(const Dlp& dlp, const Alphabet& alphabet,
                                   std::size_t limit) {
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        if (extended_rd_member(dlp, j, alphabet)) out.insert(j);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Extended level-mapping form (strong negation native).

// The level threshold guarding rejection of a rule: the least level among
// the head's *true* conflicting literals, together with the head's default
// complement.  Rejection may not rest on a conflicting literal being true at
// or below the level where the rejecting body is established.
inline std::set<Literal> rejection_threshold(const Literal& head, const LitSet& jprime) {
    std::set<Literal> out{default_complement(head)};
    for (const auto& c : con(head)) {
        if (jprime.count(c)) out.insert(c);
    }
    return out;
}

// Occurrences with a strictly later rule whose head conflicts with theirs,
// whose body J satisfies, and whose body levels all sit strictly below the
// victim's rejection threshold.
inline RejectionSet rej_wss(const Dlp& dlp, const Interpretation& j,
                            const Alphabet& alphabet, const LevelMapping& lm) {
    LitSet jprime = twiall(j, alphabet);
    RejectionSet out;
    auto occ = all_occurrences(dlp);
    for (const auto& pi : occ) {
        auto conflicts = con(pi.rule.head);
        int threshold = level_down(lm, rejection_threshold(pi.rule.head, jprime));
        for (const auto& sigma : occ) {
            if (sigma.component > pi.component && conflicts.count(sigma.rule.head) &&
                satisfies_body(j, sigma.rule.body) &&
                threshold > level_up(lm, sigma.rule.body)) {
                out.insert({pi.component, pi.index});
                break;
            }
        }
    }
    return out;
}

// Both extended well-supported conditions under a given mapping: J models
// what survives rejection, and every true literal is supported by a rule
// from the remainder under J' with head level strictly above its body.
inline bool ews_verify(const Dlp& dlp, const Interpretation& j, const Alphabet& alphabet,
                       const LevelMapping& lm) {
    Program kept = surviving_rules(dlp, rej_wss(dlp, j, alphabet, lm));
    if (!satisfies(j, kept)) return false;
    LitSet jprime = twiall(j, alphabet);
    auto support_pool = rem(dlp, jprime);
    for (const auto& l : j) {
        bool supported = false;
        for (const auto& occ : support_pool) {
            if (occ.rule.head == l && satisfies_body(j, occ.rule.body) &&
                level(lm, occ.rule.head) > level_up(lm, occ.rule.body)) {
                supported = true;
                break;
            }
        }
        if (!supported) return false;
    }
    return true;
}

// Decision procedure: build the candidate mapping from the extended
// fixpoint-form iterates (first step at which l or not l appears), then
// verify both conditions literally.
inline LevelMapping ews_candidate_mapping(const Dlp& dlp, const Interpretation& j,
                                          const Alphabet& alphabet) {
    ErdClosure c = erd_closure(dlp, j, alphabet);
    LevelMapping lm;
    for (const auto& l : objective_universe(alphabet)) {
        int lvl = 0;
        for (std::size_t k = 0; k < c.iterates.size(); ++k) {
            if (c.iterates[k].count(l) || c.iterates[k].count(default_complement(l))) {
                lvl = static_cast<int>(k) + 1;
                break;
            }
        }
        lm[l] = lvl;
    }
    return lm;
}

inline bool extended_ws_member(const Dlp& dlp, const Interpretation& j,
                               const Alphabet& alphabet) {
    return ews_verify(dlp, j, alphabet, ews_candidate_mapping(dlp, j, alphabet));
}

inline ModelSet extended_ws_models(const Dlp& dlp, const Alphabet& alphabet,
                                   std::size_t limit) {
    ModelSet out;
    for_each_interpretation(alphabet, limit, [&](const Interpretation& j) {
        if (extended_ws_member(dlp, j, alphabet)) out.insert(j);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Coherence transformations.

// Adds `not -l :- l.` for every objective literal l over the alphabet (two
// rules per atom) to every component, including empty ones.
inline Dlp expone(const Dlp& dlp, const Alphabet& alphabet) {
    Dlp out = dlp;
    for (auto& component : out) {
        for (const auto& name : alphabet) {
            Literal pos{name, false, false};
            Literal neg{name, true, false};
            component.push_back(Rule{default_complement(neg), {pos}});
            component.push_back(Rule{default_complement(pos), {neg}});
        }
    }
    return out;
}

// Adds `not -H(pi) :- B(pi).` alongside every objective-headed rule, in
// place; components without rules stay empty.
inline Dlp exptwo(const Dlp& dlp) {
    Dlp out;
    out.reserve(dlp.size());
    for (const auto& component : dlp) {
        Program transformed = component;
        for (const auto& r : component) {
            if (!r.head.naf) {
                transformed.push_back(
                    Rule{default_complement(strong_complement(r.head)), r.body});
            }
        }
        out.push_back(std::move(transformed));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Opaque-token encoding for the composed legacy pipelines: strong literals
// become fresh plain atoms so the strong-negation-free evaluators apply.

struct StrongEncoding {
    std::map<std::string, std::string> atom_to_token;  // p -> token for -p
    std::map<std::string, std::string> token_to_atom;
};

inline StrongEncoding make_strong_encoding(const Alphabet& alphabet) {
    StrongEncoding enc;
    for (const auto& name : alphabet) {
        std::string token = name + "__n";
        while (alphabet.count(token) || enc.token_to_atom.count(token)) token += "_";
        enc.atom_to_token[name] = token;
        enc.token_to_atom[token] = name;
    }
    return enc;
}

inline Literal encode_literal(const Literal& l, const StrongEncoding& enc) {
    if (!l.strong) return l;
    return Literal{enc.atom_to_token.at(l.atom), false, l.naf};
}

inline Dlp encode_strong(const Dlp& dlp, const StrongEncoding& enc) {
    Dlp out;
    out.reserve(dlp.size());
    for (const auto& component : dlp) {
        Program encoded;
        encoded.reserve(component.size());
        for (const auto& r : component) {
            std::vector<Literal> body;
            body.reserve(r.body.size());
            for (const auto& b : r.body) body.push_back(encode_literal(b, enc));
            encoded.push_back(Rule{encode_literal(r.head, enc), std::move(body)});
        }
        out.push_back(std::move(encoded));
    }
    return out;
}

inline ModelSet decode_models(const ModelSet& models, const StrongEncoding& enc) {
    ModelSet out;
    for (const auto& m : models) {
        Interpretation decoded;
        for (const auto& l : m) {
            auto it = enc.token_to_atom.find(l.atom);
            if (it != enc.token_to_atom.end()) {
                decoded.insert(Literal{it->second, true, false});
            } else {
                decoded.insert(l);
            }
        }
        out.insert(decoded);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch.

inline ModelSet models(const Dlp& dlp, Semantics sem, const Alphabet& alphabet,
                       std::size_t limit) {
    switch (sem) {
        case Semantics::Sm:
        case Semantics::WsSingle: {
            if (dlp.size() != 1) {
                throw PreconditionError("semantics '" + semantics_name(sem) +
                                        "' applies to a single program, got " +
                                        std::to_string(dlp.size()) + " components");
            }
            return sem == Semantics::Sm
                       ? stable_models(dlp[0], alphabet, limit)
                       : well_supported_models(dlp[0], alphabet, limit);
        }
        case Semantics::Rd:
            return rd_models(dlp, alphabet, limit);
        case Semantics::WsDlp:
            return ws_dlp_models(dlp, alphabet, limit);
        case Semantics::Erd:
            return extended_rd_models(dlp, alphabet, limit);
        case Semantics::Ews:
            return extended_ws_models(dlp, alphabet, limit);
        case Semantics::RdExpone:
        case Semantics::RdExptwo:
        case Semantics::WsExpone:
        case Semantics::WsExptwo: {
            bool one = sem == Semantics::RdExpone || sem == Semantics::WsExpone;
            Dlp transformed = one ? expone(dlp, alphabet) : exptwo(dlp);
            StrongEncoding enc = make_strong_encoding(alphabet);
            Dlp encoded = encode_strong(transformed, enc);
            Alphabet encoded_alphabet = alphabet_of(encoded);
            // Keep declared-but-unused atoms in play after encoding.
            for (const auto& name : alphabet) encoded_alphabet.insert(name);
            bool use_rd = sem == Semantics::RdExpone || sem == Semantics::RdExptwo;
            ModelSet raw = use_rd ? rd_models(encoded, encoded_alphabet, limit)
                                  : ws_dlp_models(encoded, encoded_alphabet, limit);
            return decode_models(raw, enc);
        }
    }
    throw std::logic_error("unreachable semantics dispatch");
}

// Membership check for a single candidate under any semantics.
inline bool is_model(const Dlp& dlp, Semantics sem, const Interpretation& j,
                     const Alphabet& alphabet, std::size_t limit) {
    switch (sem) {
        case Semantics::Sm:
        case Semantics::WsSingle: {
            if (dlp.size() != 1) {
                throw PreconditionError("semantics '" + semantics_name(sem) +
                                        "' applies to a single program, got " +
                                        std::to_string(dlp.size()) + " components");
            }
            return sem == Semantics::Sm
                       ? is_stable_model(dlp[0], j, alphabet)
                       : find_level_mapping(dlp[0], j, alphabet).has_value();
        }
        case Semantics::Rd:
            return rd_member(dlp, j, alphabet);
        case Semantics::WsDlp:
            return ws_dlp_member(dlp, j, alphabet);
        case Semantics::Erd:
            return extended_rd_member(dlp, j, alphabet);
        case Semantics::Ews:
            return extended_ws_member(dlp, j, alphabet);
        default:
            // Composed pipelines: membership via the full (decoded) model set.
            return models(dlp, sem, alphabet, limit).count(j) != 0;
    }
}

}  // namespace dlp

#endif  // DLP_UPDATES_HPP
