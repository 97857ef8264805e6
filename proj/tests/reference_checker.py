#!/usr/bin/env python3
# Copyright (c) 2026 dlpengine contributors
# SPDX-License-Identifier: MIT
"""Slow, definition-direct reference checker for rule-update semantics.

This script re-implements the semantics of the dlpengine library in the most
naive way possible (brute force over interpretations, exhaustive search over
level mappings where feasible) so that the fast C++ engine can be checked
against an independent implementation.  It shares no code, no parser and no
algorithmic shortcuts with the library.

Usage:
  reference_checker.py --self-check          # worked examples + tiny sweep
  reference_checker.py --sweep N [--seed K]  # random agreement sweep
  reference_checker.py --freeze              # print expected values for tests

Literals are triples (atom, strong, neg):
  ("p", False, False) is p, ("p", True, False) is -p (strong negation),
  ("p", False, True) is "not p", ("p", True, True) is "not -p".
Interpretations are frozensets of objective pairs (atom, strong).
A rule is (head, frozenset(body)); a program is a tuple of rules; a
dynamic program is a tuple of programs.
"""

import argparse
import itertools
import random
import sys

# ---------------------------------------------------------------------------
# literals


def lit(atom, strong=False, neg=False):
    return (atom, strong, neg)


def obj(l):
    return (l[0], l[1])


def is_neg(l):
    return l[2]


def default_complement(l):
    return (l[0], l[1], not l[2])


def strong_complement(l):
    return (l[0], not l[1], l[2])


def con(l):
    """Conflicting literals: con(l) = {not l, -l}; con(not l) = {l}."""
    if l[2]:
        return frozenset([(l[0], l[1], False)])
    return frozenset([(l[0], l[1], True), (l[0], not l[1], False)])


def rule(head, *body):
    return (head, frozenset(body))


def atoms_of_dlp(dlp):
    out = set()
    for prog in dlp:
        for h, body in prog:
            out.add(h[0])
            for b in body:
                out.add(b[0])
    return out


def all_occurrences(dlp):
    """Multiset of rules tagged with (component, index)."""
    out = []
    for i, prog in enumerate(dlp):
        for k, r in enumerate(prog):
            out.append((i, k, r))
    return out


# ---------------------------------------------------------------------------
# interpretations and valuations


def interpretations(atoms, allow_strong=True):
    """All consistent objective-literal sets over the given atoms."""
    atoms = sorted(atoms)
    states = (0, 1, 2) if allow_strong else (0, 1)
    for assign in itertools.product(states, repeat=len(atoms)):
        J = set()
        for a, s in zip(atoms, assign):
            if s == 1:
                J.add((a, False))
            elif s == 2:
                J.add((a, True))
        yield frozenset(J)


def objective_universe(atoms, with_strong):
    out = set()
    for a in atoms:
        out.add((a, False))
        if with_strong:
            out.add((a, True))
    return out


def satisfies_lit(J, l):
    if l[2]:
        return obj(l) not in J
    return obj(l) in J


def satisfies_body(J, body):
    return all(satisfies_lit(J, b) for b in body)


def satisfies_rule(J, r):
    return satisfies_lit(J, r[0]) or not satisfies_body(J, r[1])


def twiall(J, universe):
    """J plus 'not l' for every objective l in the universe outside J."""
    out = {(a, s, False) for (a, s) in J}
    out |= {(a, s, True) for (a, s) in universe if (a, s) not in J}
    return frozenset(out)


def default_facts(J, universe):
    return tuple(rule((a, s, True)) for (a, s) in sorted(universe) if (a, s) not in J)


def least(rules):
    """Least set closed under the rules, literals read as plain symbols."""
    S = set()
    changed = True
    while changed:
        changed = False
        for h, body in rules:
            if h not in S and body <= S:
                S.add(h)
                changed = True
    return frozenset(S)


def least_steps(rules):
    """Iteration stages of the one-step consequence operator from {}."""
    stages = [frozenset()]
    while True:
        cur = stages[-1]
        nxt = frozenset(h for h, body in rules if body <= cur)
        if nxt == cur:
            return stages
        stages.append(nxt)


# ---------------------------------------------------------------------------
# stable and well-supported models of a single program


def sm_member(prog, J, atoms):
    universe = objective_universe(atoms, True)
    q = tuple(prog) + default_facts(J, universe)
    return least(q) == twiall(J, universe)


def sm_models(prog, atoms):
    return {J for J in interpretations(atoms) if sm_member(prog, J, atoms)}


def level_up(levels, body):
    return max((levels[obj(b)] for b in body), default=0)


def ws_single_member_exhaustive(prog, J, atoms, max_level=None):
    """Well-supported check by exhaustive search over level mappings."""
    if not all(satisfies_rule(J, r) for r in prog):
        return False
    universe = sorted(objective_universe(atoms, True))
    bound = (len(universe) if max_level is None else max_level) + 1
    for values in itertools.product(range(bound), repeat=len(universe)):
        levels = dict(zip(universe, values))
        ok = True
        for l in J:
            if not any(
                obj(h) == l and not is_neg(h)
                and satisfies_body(J, body)
                and levels[l] > level_up(levels, body)
                for h, body in prog
            ):
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# causal-rejection semantics of dynamic programs (no strong negation)


def rej_base(dlp, J):
    """Rejected occurrences: a later-or-same-component rule with the
    default-complementary head and a body satisfied by J."""
    out = set()
    occ = all_occurrences(dlp)
    for (i, k, (h, body)) in occ:
        for (j, k2, (h2, body2)) in occ:
            if j >= i and h2 == default_complement(h) and satisfies_body(J, body2):
                out.add((i, k))
                break
    return out


def constrained_defaults(dlp, J, atoms):
    out = []
    for a in sorted(atoms):
        if not any(
            h == (a, False, False) and satisfies_body(J, body)
            for (_, _, (h, body)) in all_occurrences(dlp)
        ):
            out.append(rule((a, False, True)))
    return tuple(out)


def rd_member(dlp, J, atoms):
    if any(s for (_, s) in J):
        return False
    universe = objective_universe(atoms, False)
    rej = rej_base(dlp, J)
    kept = tuple(r for (i, k, r) in all_occurrences(dlp) if (i, k) not in rej)
    q = kept + constrained_defaults(dlp, J, atoms)
    return least(q) == twiall(J, universe)


def rd_models(dlp, atoms):
    return {J for J in interpretations(atoms, False) if rd_member(dlp, J, atoms)}


def ws_member_exhaustive(dlp, J, atoms):
    """Dynamic well-supported check, exhaustive over atom level mappings."""
    if any(s for (_, s) in J):
        return False
    occ = all_occurrences(dlp)
    names = sorted(atoms)
    for values in itertools.product(range(len(names) + 1), repeat=len(names)):
        levels = {(a, False): v for a, v in zip(names, values)}
        rej = set()
        for (i, k, (h, body)) in occ:
            for (j, k2, (h2, body2)) in occ:
                if (
                    j > i
                    and h2 == default_complement(h)
                    and satisfies_body(J, body2)
                    and levels[obj(h2)] > level_up(levels, body2)
                ):
                    rej.add((i, k))
                    break
        kept = [(h, body) for (i, k, (h, body)) in occ if (i, k) not in rej]
        if not all(satisfies_rule(J, r) for r in kept):
            continue
        if all(
            any(
                h == (l[0], l[1], False)
                and satisfies_body(J, body)
                and levels[l] > level_up(levels, body)
                for h, body in kept
            )
            for l in J
        ):
            return True
    return False


def ws_models_exhaustive(dlp, atoms):
    return {J for J in interpretations(atoms, False) if ws_member_exhaustive(dlp, J, atoms)}


# ---------------------------------------------------------------------------
# extended causal-rejection semantics (strong negation aware)


def rej_conflict(dlp, S):
    """Occurrences with a strictly later rule whose head conflicts with
    theirs and whose body is contained in the literal set S."""
    out = set()
    occ = all_occurrences(dlp)
    for (i, k, (h, body)) in occ:
        for (j, k2, (h2, body2)) in occ:
            if j > i and h2 in con(h) and body2 <= S:
                out.add((i, k))
                break
    return out


def remaining(dlp, S):
    rej = rej_conflict(dlp, S)
    return tuple(r for (i, k, r) in all_occurrences(dlp) if (i, k) not in rej)


def erd_step(dlp, J, jprime, S):
    pool = remaining(dlp, jprime) + default_facts(J, {obj(l) for l in jprime})
    guardpool = remaining(dlp, S)
    out = set()
    for h, body in pool:
        if body <= S and not any(
            h2 in con(h) and body2 <= jprime for (h2, body2) in guardpool
        ):
            out.add(h)
    return frozenset(out)


def erd_closure(dlp, J, atoms):
    """Union of all iterates of the guarded step operator from {}."""
    universe = objective_universe(atoms, True)
    jprime = twiall(J, universe)
    seen = []
    cur = frozenset()
    acc = set()
    while cur not in seen:
        seen.append(cur)
        cur = erd_step(dlp, J, jprime, cur)
        acc |= cur
    return frozenset(acc), jprime


def erd_member(dlp, J, atoms):
    acc, jprime = erd_closure(dlp, J, atoms)
    return acc == jprime


def erd_models(dlp, atoms):
    return {J for J in interpretations(atoms) if erd_member(dlp, J, atoms)}


def level_down(levels, lits):
    return min(levels[obj(l)] for l in lits)


def ews_member_exhaustive(dlp, J, atoms):
    """Extended well-supported check, exhaustive over level mappings.

    Only usable for very small alphabets; the digraph variant below is the
    workhorse and is validated against this one.
    """
    universe_pairs = sorted(objective_universe(atoms, True))
    occ = all_occurrences(dlp)
    jprime = twiall(J, objective_universe(atoms, True))
    support_pool = remaining(dlp, jprime)
    bound = len(universe_pairs) + 1
    for values in itertools.product(range(bound), repeat=len(universe_pairs)):
        levels = dict(zip(universe_pairs, values))
        rej = set()
        for (i, k, (h, body)) in occ:
            for (j, k2, (h2, body2)) in occ:
                threshold = {default_complement(h)} | {
                    c for c in con(h) if c in jprime
                }
                if (
                    j > i
                    and h2 in con(h)
                    and satisfies_body(J, body2)
                    and level_down(levels, threshold) > level_up(levels, body2)
                ):
                    rej.add((i, k))
                    break
        kept = [(h, body) for (i, k, (h, body)) in occ if (i, k) not in rej]
        if not all(satisfies_rule(J, r) for r in kept):
            continue
        if all(
            any(
                h == (l[0], l[1], False)
                and satisfies_body(J, body)
                and levels[l] > level_up(levels, body)
                for h, body in support_pool
            )
            for l in J
        ):
            return True
    return False


def _acyclic(edges):
    graph = {}
    for a, b in edges:
        graph.setdefault(a, set()).add(b)
    WHITE, GREY, BLACK = 0, 1, 2
    color = {}

    def visit(n):
        color[n] = GREY
        for m in graph.get(n, ()):
            c = color.get(m, WHITE)
            if c == GREY:
                return False
            if c == WHITE and not visit(m):
                return False
        color[n] = BLACK
        return True

    return all(visit(n) for n in list(graph) if color.get(n, WHITE) == WHITE)


def ews_member_digraph(dlp, J, atoms):
    """Extended well-supported check via strict-inequality constraint graphs.

    Every unsatisfied rule needs a later rejecting rule with satisfied body
    sitting strictly below all true literals that conflict with the victim's
    head (and below its default complement); every true literal needs a
    supporting rule from the surviving pool.  Each choice contributes strict
    edges "level(a) > level(b)"; the check succeeds iff some combination of
    choices yields an acyclic constraint graph.
    """
    universe = objective_universe(atoms, True)
    jprime = twiall(J, universe)
    occ = all_occurrences(dlp)
    support_pool = remaining(dlp, jprime)

    obligations = []
    for (i, k, (h, body)) in occ:
        if satisfies_rule(J, (h, body)):
            continue
        options = []
        for (j, k2, (h2, body2)) in occ:
            if j > i and h2 in con(h) and satisfies_body(J, body2):
                threshold = {default_complement(h)} | {
                    c for c in con(h) if c in jprime
                }
                edges = frozenset(
                    (obj(c), obj(b)) for c in threshold for b in body2
                )
                options.append(edges)
        if not options:
            return False
        obligations.append(options)
    for l in J:
        options = []
        for h, body in support_pool:
            if h == (l[0], l[1], False) and satisfies_body(J, body):
                options.append(frozenset((l, obj(b)) for b in body))
        if not options:
            return False
        obligations.append(options)

    def search(idx, edges):
        if idx == len(obligations):
            return True
        for opt in obligations[idx]:
            cand = edges | opt
            if _acyclic(cand) and search(idx + 1, cand):
                return True
        return False

    return search(0, frozenset())


def ews_models(dlp, atoms):
    return {J for J in interpretations(atoms) if ews_member_digraph(dlp, J, atoms)}


# ---------------------------------------------------------------------------
# worked examples (the programs used throughout the test suite)

DAY = lit("day")
NIGHT = lit("night")
STARS = lit("stars")
CLOUDY = lit("cloudy")
VENUS = lit("venus")

SKY_P = (
    rule(DAY, lit("night", neg=True)),
    rule(NIGHT, lit("day", neg=True)),
    rule(STARS, NIGHT, lit("cloudy", neg=True)),
    rule(lit("stars", neg=True)),
)
SKY_U = (rule(STARS, STARS),)
SKY_U2 = (rule(STARS, VENUS), rule(VENUS, STARS))

SENSOR = ((rule(lit("p")), rule(lit("p", strong=True))), (rule(lit("p", neg=True)),))

RAIL = (
    rule(lit("cross"), lit("train", strong=True)),
    rule(lit("wait"), lit("train")),
    rule(lit("listen"), lit("train", neg=True), lit("train", strong=True, neg=True)),
)

STRAT = (
    (
        rule(lit("p"), lit("q"), lit("r", neg=True)),
        rule(lit("p", neg=True), lit("s")),
        rule(lit("q")),
        rule(lit("s"), lit("q")),
    ),
    (
        rule(lit("p", strong=True)),
        rule(lit("r"), lit("q")),
        rule(lit("r", strong=True), lit("q"), lit("s")),
    ),
    (rule(lit("r", neg=True)),),
)


def show_interp(J):
    names = sorted(("-" if s else "") + a for (a, s) in J)
    return "{" + ", ".join(names) + "}"


def show_models(models):
    return sorted(show_interp(J) for J in models)


def show_rule(r):
    def show_lit(l):
        return ("not " if l[2] else "") + ("-" if l[1] else "") + l[0]

    h, body = r
    if not body:
        return show_lit(h) + "."
    return show_lit(h) + " :- " + ", ".join(sorted(show_lit(b) for b in body)) + "."


# ---------------------------------------------------------------------------
# transformations, fact-update closed form


def coherence_everywhere(dlp, atoms):
    extra = []
    for a in sorted(atoms):
        extra.append(rule(lit(a, strong=True, neg=True), lit(a)))
        extra.append(rule(lit(a, neg=True), lit(a, strong=True)))
    return tuple(tuple(p) + tuple(extra) for p in dlp)


def coherence_per_rule(dlp):
    out = []
    for p in dlp:
        extra = []
        for h, body in p:
            if not h[2]:
                extra.append((strong_complement(default_complement(h)), body))
        out.append(tuple(p) + tuple(extra))
    return tuple(out)


def encode_strong(dlp, atoms):
    """Replace -a by a fresh token atom so the base semantics apply."""
    mapping = {}
    for a in sorted(atoms):
        token = a + "__n"
        while token in atoms:
            token += "_"
        mapping[a] = token

    def enc(l):
        return (mapping[l[0]], False, l[2]) if l[1] else l

    encoded = tuple(
        tuple((enc(h), frozenset(enc(b) for b in body)) for h, body in p) for p in dlp
    )
    return encoded, mapping


def decode_models(models, mapping):
    rev = {tok: a for a, tok in mapping.items()}
    out = set()
    for J in models:
        out.add(frozenset((rev[a], True) if a in rev else (a, False) for (a, s) in J))
    return out


def composed_models(dlp, atoms, transform, base):
    t = coherence_everywhere(dlp, atoms) if transform == "expone" else coherence_per_rule(dlp)
    encoded, mapping = encode_strong(t, atoms)
    enc_atoms = atoms_of_dlp(encoded) | {mapping[a] for a in atoms} | set(atoms)
    if base == "rd":
        models = rd_models(encoded, enc_atoms)
    else:
        models = ws_models_exhaustive(encoded, enc_atoms)
    return decode_models(models, mapping)


def fact_update_model(dlp):
    """Closed form for updates made of consistent fact sets."""
    J = set()
    for i, p in enumerate(dlp):
        for h, body in p:
            if body or h[2]:
                continue
            blocked = any(
                (h2, b2) in ((default_complement(h), frozenset()), (strong_complement(h), frozenset()))
                for later in dlp[i + 1:]
                for (h2, b2) in later
            )
            if not blocked:
                J.add(obj(h))
    return frozenset(J)


# ---------------------------------------------------------------------------
# worked-example checks


def check(name, actual, expected):
    ok = actual == expected
    print(("PASS" if ok else "FAIL"), name, "->", actual if not ok else "")
    if not ok:
        print("  expected:", expected)
    return ok


def run_examples():
    ok = True
    sky_atoms = {"day", "night", "stars", "cloudy"}
    J1 = frozenset({("day", False)})
    J2 = frozenset({("night", False), ("stars", False)})

    ok &= check("sm(sky)", show_models(sm_models(SKY_P, sky_atoms)), ["{day}"])
    ok &= check(
        "sm({p :- not q})",
        show_models(sm_models((rule(lit("p"), lit("q", neg=True)),), {"p", "q"})),
        ["{p}"],
    )

    # base rejection sets on the sky programs
    dlp = (SKY_P, SKY_U)
    rej2 = {show_rule(SKY_P[k]) for (i, k) in rej_base(dlp, J2) if i == 0}
    ok &= check(
        "rej_base(sky, J2)", sorted(rej2), ["not stars.", "stars :- night, not cloudy."]
    )
    ok &= check(
        "rej_base(sky, J1)",
        sorted(show_rule(SKY_P[k]) for (i, k) in rej_base(dlp, J1)),
        ["stars :- night, not cloudy."],
    )
    ok &= check(
        "defaults(sky, J2)",
        [show_rule(r) for r in constrained_defaults(dlp, J2, sky_atoms)],
        ["not cloudy.", "not day."],
    )
    q = SKY_P + default_facts(J1, objective_universe(sky_atoms, True))
    ok &= check(
        "least(sky + defaults(J1))",
        least(q) == twiall(J1, objective_universe(sky_atoms, True)),
        True,
    )

    for tag, fn in (
        ("rd", rd_models),
        ("ws", ws_models_exhaustive),
        ("erd", erd_models),
        ("ews", ews_models),
    ):
        ok &= check(f"{tag}(sky+U)", show_models(fn((SKY_P, SKY_U), sky_atoms)), ["{day}"])
        ok &= check(
            f"{tag}(sky+U2)",
            show_models(fn((SKY_P, SKY_U2), sky_atoms | {"venus"})),
            ["{day}"],
        )

    # sensor: the strong/default conflict example
    ok &= check("erd(sensor)", show_models(erd_models(SENSOR, {"p"})), ["{-p}"])
    ok &= check("ews(sensor)", show_models(ews_models(SENSOR, {"p"})), ["{-p}"])
    ok &= check(
        "erd(p,-p|empty)",
        show_models(erd_models(((SENSOR[0][0], SENSOR[0][1]), ()), {"p"})),
        [],
    )
    ok &= check(
        "ews(p,-p|empty)",
        show_models(ews_models(((SENSOR[0][0], SENSOR[0][1]), ()), {"p"})),
        [],
    )
    ok &= check(
        "rd+expone(p,-p|empty)",
        show_models(composed_models(((SENSOR[0][0], SENSOR[0][1]), ()), {"p"}, "expone", "rd")),
        ["{-p}", "{p}"],
    )
    ok &= check(
        "ws+expone(p,-p|empty)",
        show_models(composed_models(((SENSOR[0][0], SENSOR[0][1]), ()), {"p"}, "expone", "ws")),
        ["{-p}", "{p}"],
    )
    ok &= check(
        "rd+exptwo(sensor)", show_models(composed_models(SENSOR, {"p"}, "exptwo", "rd")), []
    )
    ok &= check(
        "ws+exptwo(sensor)", show_models(composed_models(SENSOR, {"p"}, "exptwo", "ws")), []
    )

    # guarded step operator values on the sensor programs
    uni = objective_universe({"p"}, True)
    jp = twiall(frozenset({("p", True)}), uni)
    ok &= check(
        "remaining(sensor, {})",
        sorted(show_rule(r) for r in remaining(SENSOR, frozenset())),
        ["-p.", "not p."],
    )
    s1 = erd_step(SENSOR, frozenset({("p", True)}), jp, frozenset())
    ok &= check("step(sensor, -p, {})", s1 == jp, True)

    # railway crossing
    ok &= check(
        "erd(rail+train)",
        show_models(erd_models((RAIL, (rule(lit("train")),)), {"cross", "wait", "listen", "train"})),
        ["{train, wait}"],
    )
    ok &= check(
        "ews(rail+train)",
        show_models(ews_models((RAIL, (rule(lit("train")),)), {"cross", "wait", "listen", "train"})),
        ["{train, wait}"],
    )
    rail3 = (RAIL, (rule(lit("train")),), (rule(lit("train", neg=True)),))
    ok &= check(
        "erd(rail+train+not)",
        show_models(erd_models(rail3, {"cross", "wait", "listen", "train"})),
        ["{listen}"],
    )
    ok &= check(
        "ews(rail+train+not)",
        show_models(ews_models(rail3, {"cross", "wait", "listen", "train"})),
        ["{listen}"],
    )
    ok &= check(
        "remaining(rail3, {})",
        len(remaining(rail3, frozenset())),
        4,
    )

    # stratified example
    strat_atoms = {"p", "q", "r", "s"}
    ok &= check("erd(strat)", show_models(erd_models(STRAT, strat_atoms)), ["{-p, -r, q, s}"])
    ok &= check("ews(strat)", show_models(ews_models(STRAT, strat_atoms)), ["{-p, -r, q, s}"])

    # dynamic ws on two-step programs
    ok &= check(
        "ws(p|not p)",
        show_models(ws_models_exhaustive(((rule(lit("p")),), (rule(lit("p", neg=True)),)), {"p"})),
        ["{}"],
    )

    # fact update closed form
    fu = ((rule(lit("p")),), (rule(lit("p", strong=True)),))
    ok &= check("factupd(p|-p)", show_interp(fact_update_model(fu)), "{-p}")
    ok &= check("erd(p|-p)", show_models(erd_models(fu, {"p"})), ["{-p}"])

    return ok


# ---------------------------------------------------------------------------
# random sweep


def random_dlp(rng, max_comps=3, max_atoms=3, max_rules=6, allow_strong=True):
    names = ["a", "b", "c", "d"][: rng.randint(1, max_atoms)]
    n_comps = rng.randint(1, max_comps)
    total = rng.randint(1, max_rules)
    progs = [[] for _ in range(n_comps)]
    for _ in range(total):
        strong = allow_strong and rng.random() < 0.4
        head = lit(rng.choice(names), strong=strong, neg=rng.random() < 0.35)
        body = set()
        for _ in range(rng.randint(0, 2)):
            body.add(
                lit(
                    rng.choice(names),
                    strong=allow_strong and rng.random() < 0.3,
                    neg=rng.random() < 0.5,
                )
            )
        progs[rng.randrange(n_comps)].append((head, frozenset(body)))
    return tuple(tuple(p) for p in progs), set(names)


def sweep(n, seed):
    rng = random.Random(seed)
    bad = 0
    for t in range(n):
        dlp, atoms = random_dlp(rng, allow_strong=False)
        a = rd_models(dlp, atoms)
        b = ws_models_exhaustive(dlp, atoms)
        c = erd_models(dlp, atoms)
        d = ews_models(dlp, atoms)
        if not (a == b == c == d):
            bad += 1
            print("MISMATCH (no strong) seed-case", t)
            for p in dlp:
                print("   ", [show_rule(r) for r in p])
            print("    rd:", show_models(a), "ws:", show_models(b))
            print("    erd:", show_models(c), "ews:", show_models(d))
        dlp, atoms = random_dlp(rng, allow_strong=True)
        c = erd_models(dlp, atoms)
        d = ews_models(dlp, atoms)
        if c != d:
            bad += 1
            print("MISMATCH (erd vs ews) seed-case", t)
            for p in dlp:
                print("   ", [show_rule(r) for r in p])
            print("    erd:", show_models(c), "ews:", show_models(d))
        if len(dlp) == 1:
            s = sm_models(dlp[0], atoms)
            if s != c:
                bad += 1
                print("MISMATCH (single vs sm) seed-case", t)
        dlp, atoms = random_dlp(rng, max_atoms=2, max_rules=4, allow_strong=True)
        for J in interpretations(atoms):
            x = ews_member_exhaustive(dlp, J, atoms)
            y = ews_member_digraph(dlp, J, atoms)
            if x != y:
                bad += 1
                print("MISMATCH (ews digraph vs exhaustive) seed-case", t, show_interp(J))
                for p in dlp:
                    print("   ", [show_rule(r) for r in p])
        dlp, atoms = random_dlp(rng, max_comps=1, max_atoms=3, max_rules=4, allow_strong=True)
        s = sm_models(dlp[0], atoms)
        w = {J for J in interpretations(atoms) if ws_single_member_exhaustive(dlp[0], J, atoms, 4)}
        if s != w:
            bad += 1
            print("MISMATCH (sm vs well-supported) seed-case", t)
            for p in dlp:
                print("   ", [show_rule(r) for r in p])
            print("    sm:", show_models(s), "ws:", show_models(w))
    print("sweep done:", n, "cases,", bad, "mismatches")
    return bad == 0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--self-check", action="store_true")
    ap.add_argument("--sweep", type=int, default=0)
    ap.add_argument("--seed", type=int, default=20260819)
    args = ap.parse_args()
    ok = True
    if args.self_check or not args.sweep:
        ok &= run_examples()
    if args.sweep:
        ok &= sweep(args.sweep, args.seed)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
