#!/usr/bin/env python3
"""Builds the bundled example braces from generator-level data and freezes
expected values into fixtures/manifest.json.

Each fixture is given by: the cyclic factor orders of the additive group, an
automorphism and a cocycle value for each generator of the acting group, and
a list of words enumerating the acting group.  The full cocycle table is
derived through d(uv) = d(u) + l_u(d(v)) and cross-checked against the
hand-transcribed tables below; the few rows where the transcription is known
to be internally inconsistent are listed in KNOWN_BAD_ROWS and the derived
value wins (derived values are forced by the cocycle identity, which is then
re-verified exhaustively)."""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import oracle
from oracle import Brace

# ---------------------------------------------------------------------------
# element helpers: elements of the additive group are tuples, indexed in
# mixed radix with the last factor fastest.


def idx_of(orders, t):
    v = 0
    for o, c in zip(orders, t):
        v = v * o + (c % o)
    return v


def tup_of(orders, v):
    out = []
    for o in reversed(orders):
        out.append(v % o)
        v //= o
    return tuple(reversed(out))


def add_t(orders, s, t):
    return tuple((a + b) % o for a, b, o in zip(s, t, orders))


def apply_auto(orders, images, t):
    acc = tuple(0 for _ in orders)
    for c, img in zip(t, images):
        for _ in range(c):
            acc = add_t(orders, acc, img)
    return acc


def auto_to_perm(orders, images):
    n = 1
    for o in orders:
        n *= o
    return [idx_of(orders, apply_auto(orders, images, tup_of(orders, v)))
            for v in range(n)]


def perm_inverse(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return q


def compose(p, q):  # (p o q)(x) = p[q[x]]
    return [p[x] for x in q]


# ---------------------------------------------------------------------------
# fixture data.  Words are space-free strings of generator letters, a
# trailing apostrophe marks an inverse letter.

FIXTURES = {}

FIXTURES["b16"] = dict(
    orders=[4, 4],
    addgens="xy",
    gens=dict(
        a=dict(auto=[(1, 2), (0, 3)], delta=(1, 0)),
        b=dict(auto=[(1, 2), (2, 1)], delta=(0, 1)),
        c=dict(auto=[(3, 2), (2, 3)], delta=(1, 1)),
    ),
    words=["", "a", "aa", "aaa", "b", "bbb", "ab", "ab'", "c", "ccc",
           "ac", "ac'", "bc", "bc'", "abc", "abc'"],
    table={
        "": (0, 0), "a": (1, 0), "aa": (2, 2), "aaa": (3, 2),
        "b": (0, 1), "bbb": (2, 3), "ab": (1, 3), "ab'": (3, 1),
        "c": (1, 1), "ccc": (3, 3), "ac": (2, 1), "ac'": (0, 3),
        "bc": (3, 0), "bc'": (1, 2), "abc": (0, 2), "abc'": (2, 0),
    },
)

FIXTURES["b32a"] = dict(
    orders=[4, 4, 2],
    addgens=["a1", "a2", "a3"],
    gens=dict(
        # the generator's image of the second factor is a1+a2; the printed
        # source carries a stray +a3 there, which contradicts its own
        # cocycle table on every word involving the fourth generator
        m=dict(auto=[(3, 0, 1), (1, 1, 0), (0, 0, 1)], delta=(1, 3, 0)),
        n=dict(auto=[(3, 0, 0), (1, 1, 1), (0, 0, 1)], delta=(1, 0, 0)),
        p=dict(auto=[(1, 0, 0), (0, 1, 1), (0, 0, 1)], delta=(3, 0, 1)),
        q=dict(auto=[(1, 0, 0), (0, 1, 1), (0, 0, 1)], delta=(3, 2, 1)),
        r=dict(auto=[(1, 0, 0), (0, 1, 0), (0, 0, 1)], delta=(2, 0, 0)),
    ),
    # m..r stand for m1..m5
    words=["", "r", "q", "qr", "p", "pr", "pq", "pqr",
           "n", "nr", "nq", "nqr", "np", "npr", "npq", "npqr",
           "m", "mr", "mq", "mqr", "mp", "mpr", "mpq", "mpqr",
           "mn", "mnr", "mnq", "mnqr", "mnp", "mnpr", "mnpq", "mnpqr"],
    table={
        "": (0, 0, 0), "r": (2, 0, 0), "q": (3, 2, 1), "qr": (1, 2, 1),
        "p": (3, 0, 1), "pr": (1, 0, 1), "pq": (2, 2, 0), "pqr": (0, 2, 0),
        "n": (1, 0, 0), "nr": (3, 0, 0), "nq": (0, 2, 1), "nqr": (2, 2, 1),
        "np": (2, 0, 1), "npr": (0, 0, 1), "npq": (1, 2, 0), "npqr": (3, 2, 0),
        "m": (1, 3, 0), "mr": (3, 3, 0), "mq": (0, 1, 0), "mqr": (2, 1, 0),
        "mp": (2, 3, 0), "mpr": (0, 3, 0), "mpq": (1, 1, 0), "mpqr": (3, 1, 0),
        "mn": (0, 3, 1), "mnr": (2, 3, 1), "mnq": (3, 1, 1), "mnqr": (1, 1, 1),
        "mnp": (3, 3, 1), "mnpr": (1, 3, 1), "mnpq": (2, 1, 1), "mnpqr": (0, 1, 1),
    },
)

FIXTURES["b32b"] = dict(
    orders=[4, 2, 2, 2],
    addgens=["a", "c", "d", "e"],
    gens={
        "1": dict(auto=[(3, 0, 1, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 0, 1)],
                  delta=(2, 1, 0, 0)),
        "2": dict(auto=[(1, 0, 0, 0), (0, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1)],
                  delta=(0, 1, 1, 1)),
        "3": dict(auto=[(1, 0, 0, 0), (2, 1, 0, 0), (0, 0, 1, 0), (2, 0, 0, 1)],
                  delta=(3, 1, 0, 0)),
        "4": dict(auto=[(3, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
                  delta=(0, 1, 0, 0)),
        "5": dict(auto=[(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (2, 0, 0, 1)],
                  delta=(0, 0, 1, 0)),
    },
    # digits k stand for g_k; the source's product labels compose in the
    # opposite order, so the words below are reversed relative to them
    words=["", "1", "2", "3", "4", "5",
           "12", "13", "14", "15", "23", "24", "25", "34", "35", "45",
           "123", "124", "125", "134", "135", "145", "234", "245", "345", "235",
           "1234", "1235", "1245", "1345", "2345", "12345"],
    table={
        "": (0, 0, 0, 0), "1": (2, 1, 0, 0), "2": (0, 1, 1, 1),
        "3": (3, 1, 0, 0), "4": (0, 1, 0, 0), "5": (0, 0, 1, 0),
        "12": (2, 1, 1, 1), "13": (3, 0, 1, 0), "14": (2, 0, 0, 0),
        "15": (2, 1, 1, 0), "23": (3, 0, 1, 1), "24": (0, 0, 1, 1),
        "25": (2, 1, 1, 0), "34": (1, 0, 0, 0), "35": (3, 1, 1, 0),
        "45": (0, 1, 1, 0), "235": (1, 0, 0, 1), "123": (3, 0, 0, 1),
        "124": (2, 0, 1, 1), "125": (0, 1, 0, 1), "134": (1, 1, 1, 0),
        "135": (3, 0, 0, 0), "145": (2, 0, 1, 0), "234": (1, 1, 1, 1),
        "245": (2, 0, 0, 1), "345": (1, 0, 1, 0), "1234": (1, 1, 0, 1),
        "1235": (1, 0, 1, 1), "1245": (0, 0, 0, 1), "1345": (1, 1, 0, 0),
        "2345": (3, 1, 0, 1), "12345": (3, 1, 1, 1),
    },
)

FIXTURES["b24"] = dict(
    orders=[2, 12],
    addgens="ab",
    gens=dict(
        s=dict(auto=[(1, 6), (1, 1)], delta=(1, 7)),
        t=dict(auto=[(1, 0), (1, 11)], delta=(0, 6)),
    ),
    words=["", "s", "ss", "sss", "ssss", "sssss", "ssssss", "sssssss",
           "ssssssss", "sssssssss", "ssssssssss", "sssssssssss",
           "t", "st", "sst", "ssst", "sssst", "ssssst", "sssssst",
           "ssssssst", "sssssssst", "ssssssssst", "sssssssssst",
           "ssssssssssst"],
    table={
        "": (0, 0), "s": (1, 7), "ss": (1, 8), "sss": (0, 9),
        "ssss": (0, 4), "sssss": (0, 11), "ssssss": (1, 0), "sssssss": (0, 1),
        "ssssssss": (0, 8), "sssssssss": (1, 3), "ssssssssss": (1, 4),
        "sssssssssss": (0, 5),
        "t": (0, 6), "st": (1, 1), "sst": (1, 2), "ssst": (0, 3),
        "sssst": (0, 10), "ssssst": (1, 5), "sssssst": (1, 6),
        "ssssssst": (0, 7), "sssssssst": (0, 2), "ssssssssst": (1, 9),
        "sssssssssst": (1, 10), "s" * 11 + "t": (0, 11),
    },
)

FIXTURES["b32c"] = dict(
    orders=[4, 2, 2, 2],
    addgens="abcd",
    gens=dict(
        e=dict(auto=[(1, 0, 1, 1), (2, 0, 1, 0), (0, 1, 0, 0), (2, 0, 1, 1)],
               delta=(3, 1, 0, 0)),
        f=dict(auto=[(1, 1, 1, 0), (2, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1)],
               delta=(1, 0, 0, 0)),
        h=dict(auto=[(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (2, 0, 0, 1)],
               delta=(0, 0, 1, 0)),
    ),
    words=[pre + suf for pre in ["", "e", "ee", "eee", "eeee", "eeeee",
                                 "eeeeee", "eeeeeee"]
           for suf in ["", "h", "f", "fh"]],
    table={
        "": (0, 0, 0, 0), "h": (0, 0, 1, 0), "f": (1, 0, 0, 0),
        "fh": (1, 0, 1, 0),
        "e": (3, 1, 0, 0), "eh": (3, 0, 0, 0), "ef": (0, 1, 1, 1),
        "efh": (0, 0, 1, 1),
        "ee": (0, 1, 1, 0), "eeh": (2, 1, 1, 1), "eef": (3, 0, 0, 1),
        "eefh": (1, 0, 1, 1),
        "eee": (3, 1, 0, 1), "eeeh": (1, 0, 0, 1), "eeef": (0, 1, 0, 0),
        "eeefh": (2, 0, 0, 0),
        "eeee": (2, 1, 1, 0), "eeeeh": (2, 1, 0, 0), "eeeef": (1, 1, 1, 0),
        "eeeefh": (1, 1, 0, 0),
        "eeeee": (3, 0, 1, 0), "eeeeeh": (3, 1, 1, 0), "eeeeef": (2, 0, 0, 1),
        "eeeeefh": (2, 1, 0, 1),
        "eeeeee": (2, 0, 1, 1), "eeeeeeh": (0, 0, 0, 1), "eeeeeef": (3, 1, 1, 1),
        "eeeeeefh": (1, 1, 0, 1),
        "eeeeeee": (3, 0, 1, 1), "eeeeeeeh": (1, 1, 1, 1), "eeeeeeef": (2, 0, 1, 0),
        "eeeeeeefh": (0, 1, 0, 1),
    },
)

# rows whose transcribed value is inconsistent with the cocycle identity;
# the derived value is used instead.
KNOWN_BAD_ROWS = {
    "b32b": {"25"},
    "b24": {"sssss"},
    "b32c": {"ee", "eeeeeeefh"},  # these two printed values are swapped
}


def parse_word(w):
    toks = []
    i = 0
    while i < len(w):
        g = w[i]
        i += 1
        if i < len(w) and w[i] == "'":
            toks.append((g, -1))
            i += 1
        else:
            toks.append((g, 1))
    return toks


def build_fixture(name, fx):
    orders = fx["orders"]
    n = 1
    for o in orders:
        n *= o
    zero = tuple(0 for _ in orders)
    neg = {v: idx_of(orders, tuple((-c) % o for c, o in zip(tup_of(orders, v), orders)))
           for v in range(n)}

    gen_perm = {g: auto_to_perm(orders, d["auto"]) for g, d in fx["gens"].items()}
    gen_delta = {g: idx_of(orders, d["delta"]) for g, d in fx["gens"].items()}

    def lam_of(toks):
        p = list(range(n))
        for g, e in toks:
            q = gen_perm[g] if e == 1 else perm_inverse(gen_perm[g])
            p = compose(p, q)
        return p

    def delta_of(toks):
        if not toks:
            return 0
        g, e = toks[0]
        if e == 1:
            dg, lg = gen_delta[g], gen_perm[g]
        else:
            inv = perm_inverse(gen_perm[g])
            dg, lg = inv[neg[gen_delta[g]]], inv
        rest = delta_of(toks[1:])
        t = add_t(orders, tup_of(orders, dg), tup_of(orders, lg[rest]))
        return idx_of(orders, t)

    words = fx["words"]
    assert len(words) == n and words[0] == ""
    rows = [parse_word(w) for w in words]
    deltas = [delta_of(r) for r in rows]
    lams = [lam_of(r) for r in rows]
    assert sorted(deltas) == list(range(n)), f"{name}: cocycle not bijective"

    # cross-check against the transcribed table
    bad = set()
    for w, d in zip(words, deltas):
        want = idx_of(orders, fx["table"][w])
        if want != d:
            bad.add(w)
    assert bad == KNOWN_BAD_ROWS.get(name, set()), \
        f"{name}: unexpected table mismatches {sorted(bad)}"

    # acting-group Cayley table, with the action re-verified on each product
    pos = {d: i for i, d in enumerate(deltas)}
    actor = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            t = add_t(orders, tup_of(orders, deltas[i]),
                      tup_of(orders, lams[i][deltas[j]]))
            k = pos[idx_of(orders, t)]
            assert lams[k] == compose(lams[i], lams[j]), \
                f"{name}: action not compatible at rows {i},{j}"
            actor[i][j] = k
    oracle.check_group(n, actor, f"{name} actor")

    add = [[idx_of(orders, add_t(orders, tup_of(orders, x), tup_of(orders, y)))
            for y in range(n)] for x in range(n)]
    mul = [[None] * n for _ in range(n)]
    for i in range(n):
        a = deltas[i]
        for b in range(n):
            mul[a][b] = add[a][lams[i][b]]
    B = Brace(n, add, mul, name)
    oracle.validate(B)
    oracle.identity_audit(B)
    for i in range(n):
        assert B.lam[deltas[i]] == lams[i]

    spec = dict(name=name, order=n, additive=add, actor=actor,
                action=[list(l) for l in lams], delta=deltas)
    return B, spec


# ---------------------------------------------------------------------------
# claims


def S(s):
    return sorted(s)


def span_claims(name, B, fx):
    orders = fx["orders"]

    def E(*tups):
        return oracle.span_of(B, {idx_of(orders, t) for t in tups})

    claims = [
        dict(id=f"{name}.valid", op="validate"),
        dict(id=f"{name}.identities", op="identity_audit"),
        dict(id=f"{name}.commutator_pairs", op="commutator_theorem_pairs"),
        dict(id=f"{name}.series_laws", op="series_laws"),
        dict(id=f"{name}.fitting_suite", op="fitting_suite"),
        dict(id=f"{name}.ybe", op="ybe"),
    ]

    full = frozenset(range(B.n))
    ideals = oracle.all_ideals(B)
    claims.append(dict(id=f"{name}.ideal_lattice", op="ideal_lattice_eq",
                       expect=[S(i) for i in ideals]))
    claims.append(dict(id=f"{name}.centre", op="distinguished_eq",
                       which="centre", expect=S(oracle.centre(B))))
    claims.append(dict(id=f"{name}.socle", op="distinguished_eq",
                       which="socle", expect=S(oracle.socle(B))))
    claims.append(dict(id=f"{name}.fix", op="distinguished_eq",
                       which="fix", expect=S(oracle.fix(B))))
    claims.append(dict(id=f"{name}.kernel", op="distinguished_eq",
                       which="kernel", expect=S(oracle.kernel_lambda(B))))
    nc = oracle.nilpotency_class(B)
    claims.append(dict(id=f"{name}.class", op="nilpotency_class", expect=nc))
    claims.append(dict(id=f"{name}.fit", op="fit_eq", expect=S(oracle.fitting(B))))
    claims.append(dict(id=f"{name}.frat", op="frat_eq", expect=S(oracle.frattini(B))))
    claims.append(dict(id=f"{name}.zeta_radical", op="zeta_b_radical_eq",
                       expect=S(oracle.zeta_b_radical(B))))
    claims.append(dict(id=f"{name}.sylow", op="sylow",
                       expect=oracle.sylow_conditions(B)))
    claims.append(dict(id=f"{name}.absorbing", op="absorbing_sample"))

    if name == "b16":
        I = E((2, 0), (0, 1))
        assert oracle.classify(B, I)["ideal"]
        ss = oracle.star_span(B, I, I)
        assert ss == E((2, 0)), S(ss)
        com = oracle.commutator_ideal(B, I, I)
        # strictly between I*I and I; the source text's claim that the
        # closure is all of I does not hold for the table it prints
        assert ss < com < I and com == E((2, 0), (0, 2))
        claims += [
            dict(id="b16.I_ideal", op="classify_eq", set=S(I), subbrace=True,
                 left_ideal=True, strong_left_ideal=True, ideal=True),
            dict(id="b16.star_span", op="star_span_eq", x=S(I), y=S(I),
                 expect=S(ss)),
            dict(id="b16.star_sum_not_ideal", op="star_sum_is_ideal",
                 i=S(I), j=S(I), expect=False),
            dict(id="b16.commutator_II", op="commutator_eq", i=S(I), j=S(I),
                 expect=S(com)),
            dict(id="b16.absorbing_closure", op="absorbing_closure_eq",
                 i=S(I), j=S(I), expect=S(com)),
            dict(id="b16.all_subideal", op="all_subbraces_subideal", expect=True),
        ]

    if name == "b32a":
        Sset = E((2, 2, 0))
        T = E((2, 0, 0), (0, 2, 0), (1, 1, 1))
        U = E((2, 0, 0), (0, 2, 0), (1, 0, 1))
        assert len(Sset) == 2 and len(T) == 8 and len(U) == 8
        fl = oracle.classify(B, Sset)
        assert fl["subbrace"] and not fl["left_ideal"]
        for V in (T, U):
            R, el = oracle.restrict(B, V)
            idx = {e: i for i, e in enumerate(el)}
            assert oracle.classify(R, {idx[x] for x in Sset})["ideal"]
        assert oracle.sub_closure(B, T | U) == full
        assert not oracle.classify(B, Sset)["ideal"]
        claims += [
            dict(id="b32a.S_flags", op="classify_eq", set=S(Sset), subbrace=True,
                 left_ideal=False, strong_left_ideal=False, ideal=False),
            dict(id="b32a.S_ideal_in_T", op="ideal_of_restriction",
                 outer=S(T), inner=S(Sset), expect=True),
            dict(id="b32a.S_ideal_in_U", op="ideal_of_restriction",
                 outer=S(U), inner=S(Sset), expect=True),
            dict(id="b32a.TU_generate", op="subbrace_closure_eq",
                 e=S(T | U), expect=S(full)),
            dict(id="b32a.no_idealiser", op="idealiser_no_max",
                 set=S(Sset), w1=S(T), w2=S(U)),
        ]

    if name == "b32b":
        assert oracle.centre(B) == frozenset({0})
        assert oracle.kernel_lambda(B) == frozenset({0})
        J = E((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        I1 = E((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        I2 = E((1, 0, 0, 1), (2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        I3 = E((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        want = sorted([frozenset({0}), J, I1, I2, I3, full],
                      key=lambda s: (len(s), sorted(s)))
        assert ideals == want, ("b32b ideal lattice", [S(i) for i in ideals])
        for I in (I1, I2, I3):
            R, _ = oracle.restrict(B, I)
            c = oracle.nilpotency_class(R)
            assert c is not None and c <= 3, c
            claims.append(dict(id=f"b32b.standalone_class_{len(claims)}",
                               op="standalone_class_le", set=S(I), bound=3))
        for A, Bi, tag in ((I1, I2, "12"), (I1, I3, "13"), (I2, I3, "23")):
            assert frozenset(B.add[x][y] for x in A for y in Bi) == full
            claims.append(dict(id=f"b32b.sum_{tag}", op="sum_eq",
                               i=S(A), j=S(Bi), expect=S(full)))
        assert oracle.nilpotency_class(B) is None
        claims.append(dict(id="b32b.J_quotient_abelian", op="quotient_trivial",
                           by=S(J), expect=True))

    if name == "b24":
        I = E((1, 0), (0, 2))
        assert [S(i) for i in ideals if len(i) == 12] == [S(I)]
        R, el = oracle.restrict(B, I)
        soc = frozenset(el[i] for i in oracle.socle(R))
        assert soc == E((1, 4)), S(soc)
        assert len(soc) == 6
        assert oracle.nilpotency_class(R) is None
        covers = [K for K in ideals if soc <= K]
        for K in covers:
            RK, _ = oracle.restrict(B, K)
            assert oracle.nilpotency_class(RK) is None
        d = oracle.subideal_defect(B, soc)
        assert d is not None
        claims += [
            dict(id="b24.unique_order12", op="ideals_of_order_eq", order=12,
                 expect=[S(I)]),
            dict(id="b24.I_socle", op="standalone_socle_eq", set=S(I),
                 expect=S(soc)),
            dict(id="b24.I_not_nilpotent", op="standalone_class_le", set=S(I),
                 bound=None),
            dict(id="b24.socle_defect", op="subideal_defect", set=S(soc),
                 expect=d),
            dict(id="b24.socle_no_nilpotent_cover",
                 op="no_nilpotent_ideal_contains", set=S(soc), expect=True),
        ]

    if name == "b32c":
        subs = oracle.all_subbraces(B)
        named = [E(), E((2, 1, 0, 1)), E((0, 0, 1, 0)), E((0, 1, 1, 0)),
                 E((0, 0, 1, 1)), E((2, 0, 0, 0)), E((2, 1, 0, 0)),
                 E((2, 1, 1, 0)),
                 E((2, 0, 0, 0), (0, 1, 1, 0)), E((2, 1, 0, 0), (0, 0, 1, 0)),
                 E((0, 1, 0, 0), (2, 0, 1, 0)), E((0, 0, 1, 1), (2, 1, 0, 1)),
                 E((2, 0, 0, 1), (0, 1, 1, 1)), E((0, 0, 0, 1), (2, 1, 1, 0)),
                 E((2, 1, 1, 0), (0, 1, 0, 1)),
                 E((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)),
                 E((2, 0, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1)),
                 E((2, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)),
                 E((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
                 full]
        want = sorted(named, key=lambda s: (len(s), sorted(s)))
        assert subs == want, ("b32c subbrace lattice", [S(x) for x in subs])
        s18 = named[18]
        li = [s for s in subs if 1 < len(s) < 32 and
              oracle.classify(B, s)["left_ideal"]]
        expect_li = sorted([named[5], named[8], named[15], s18],
                           key=lambda s: (len(s), sorted(s)))
        assert li == expect_li
        assert [S(i) for i in ideals] == [S(named[0]), S(s18), S(full)]
        maxsubs = [s for s in subs if len(s) < 32 and
                   not any(s < t and len(t) < 32 for t in subs)]
        assert maxsubs == [s18]
        der = oracle.derived_series(B)
        assert der[-1] == s18
        defects = {}
        for s in subs:
            d = oracle.subideal_defect(B, s)
            assert d is not None, S(s)
            defects[min(s.difference({0}), default=0)] = d
        claims += [
            dict(id="b32c.subbrace_lattice", op="subbrace_lattice_eq",
                 expect=[S(x) for x in want]),
            dict(id="b32c.left_ideals", op="left_ideal_flags_eq",
                 expect=[S(x) for x in expect_li]),
            dict(id="b32c.maximal_subbraces", op="maximal_subbraces_eq",
                 expect=[S(s18)]),
            dict(id="b32c.derived_terminal", op="derived_terminal_eq",
                 expect=S(s18)),
            dict(id="b32c.all_subideal", op="all_subbraces_subideal",
                 expect=True),
            dict(id="b32c.S7_defect", op="subideal_defect",
                 set=S(named[7]), expect=oracle.subideal_defect(B, named[7])),
        ]
    return claims


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    outdir = os.path.join(root, "fixtures")
    os.makedirs(outdir, exist_ok=True)
    manifest = dict(seed=9001, samples=10000, fixtures=[])
    for name in ["b16", "b24", "b32a", "b32b", "b32c"]:
        fx = FIXTURES[name]
        B, spec = build_fixture(name, fx)
        with open(os.path.join(outdir, f"{name}.cocycle.json"), "w") as f:
            json.dump(spec, f)
        with open(os.path.join(outdir, f"{name}.brace.json"), "w") as f:
            json.dump(dict(name=name, order=B.n, add=B.add, mul=B.mul), f)
        claims = span_claims(name, B, fx)
        manifest["fixtures"].append(dict(
            id=name, file=f"{name}.cocycle.json", order=B.n, claims=claims))
        first, second = oracle.ybe_solution(B)
        assert oracle.braid_holds(first, second), name
        print(f"{name}: order {B.n}, {len(claims)} claims, "
              f"class {oracle.nilpotency_class(B)}")
    manifest["global_claims"] = [
        dict(id="enum.order6_fit_frat", op="enum_order6_fit_frat"),
        dict(id="enum.gaschutz", op="gaschutz_enum", max_order=12),
        dict(id="enum.ybe", op="ybe_enum", max_order=12),
    ]
    with open(os.path.join(outdir, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=1)
    print("manifest written")


if __name__ == "__main__":
    main()
