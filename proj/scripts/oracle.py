"""Reference implementations of the skew-brace operations, used only to
cross-check fixture transcriptions and to freeze expected values into the
claims manifest.  Deliberately independent of the C++ code paths: everything
here is plain exhaustive set arithmetic on Cayley tables."""

from itertools import product


class Brace:
    def __init__(self, n, add, mul, name=""):
        self.n = n
        self.add = add
        self.mul = mul
        self.name = name
        self.neg = [None] * n
        self.inv = [None] * n
        for i in range(n):
            for j in range(n):
                if add[i][j] == 0:
                    self.neg[i] = j
                if mul[i][j] == 0:
                    self.inv[i] = j
        self.lam = [[add[self.neg[a]][mul[a][b]] for b in range(n)]
                    for a in range(n)]

    def star(self, a, b):
        return self.add[self.lam[a][b]][self.neg[b]]

    def sub(self, a, b):
        return self.add[a][self.neg[b]]


def check_group(n, t, what):
    assert all(t[0][j] == j and t[j][0] == j for j in range(n)), f"{what}: 0 not identity"
    for i in range(n):
        assert sorted(t[i]) == list(range(n)), f"{what}: row {i} not a permutation"
        assert sorted(t[j][i] for j in range(n)) == list(range(n)), f"{what}: col {i}"
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert t[t[a][b]][c] == t[a][t[b][c]], f"{what}: not associative"


def validate(B):
    n, add, mul = B.n, B.add, B.mul
    check_group(n, add, "add")
    check_group(n, mul, "mul")
    for a in range(n):
        assert B.lam[a][0] == 0
        assert sorted(B.lam[a]) == list(range(n))
        for b in range(n):
            for c in range(n):
                # a(b+c) = ab - a + ac
                lhs = mul[a][add[b][c]]
                rhs = add[add[mul[a][b]][B.neg[a]]][mul[a][c]]
                assert lhs == rhs, f"distributivity fails at {a},{b},{c}"
            # lambda_a automorphism of (B,+)
            for c in range(n):
                assert B.lam[a][add[b][c]] == add[B.lam[a][b]][B.lam[a][c]]
    for a in range(n):
        for b in range(n):
            la, lb = B.lam[a], B.lam[b]
            lab = B.lam[mul[a][b]]
            assert all(lab[x] == la[lb[x]] for x in range(n)), "lambda not a homomorphism"
            # eq (2): ab = a + a*b + b
            assert mul[a][b] == add[add[a][B.star(a, b)]][b]


def identity_audit(B):
    n = B.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                s = B.star
                lhs1 = s(B.mul[a][b], c)
                rhs1 = B.add[B.add[s(a, s(b, c))][s(b, c)]][s(a, c)]
                assert lhs1 == rhs1
                lhs3 = s(a, B.add[b][c])
                rhs3 = B.add[B.add[B.add[s(a, b)][b]][s(a, c)]][B.neg[b]]
                assert lhs3 == rhs3


# ---- closure operators -------------------------------------------------

def add_closure(B, seed):
    s = set(seed) | {0}
    frontier = True
    while frontier:
        frontier = False
        for a in list(s):
            for b in list(s):
                x = B.add[a][b]
                if x not in s:
                    s.add(x)
                    frontier = True
            if B.neg[a] not in s:
                s.add(B.neg[a])
                frontier = True
    return frozenset(s)


def sub_closure(B, seed):
    s = set(seed) | {0}
    changed = True
    while changed:
        changed = False
        for a in list(s):
            for x in (B.neg[a], B.inv[a]):
                if x not in s:
                    s.add(x)
                    changed = True
            for b in list(s):
                for x in (B.add[a][b], B.mul[a][b]):
                    if x not in s:
                        s.add(x)
                        changed = True
    return frozenset(s)


def ideal_closure(B, seed):
    s = set(seed) | {0}
    changed = True
    while changed:
        changed = False
        new = set()
        for a in s:
            new.add(B.neg[a])
            new.add(B.inv[a])
            for b in s:
                new.add(B.add[a][b])
                new.add(B.mul[a][b])
            for b in range(B.n):
                new.add(B.lam[b][a])                        # lambda images
                new.add(B.add[B.add[b][a]][B.neg[b]])        # additive conjugate
                new.add(B.mul[B.mul[b][a]][B.inv[b]])        # multiplicative conjugate
        if not new <= s:
            s |= new
            changed = True
    return frozenset(s)


def classify(B, s):
    s = frozenset(s)
    if 0 not in s:
        return dict(subbrace=False, left_ideal=False, strong_left_ideal=False, ideal=False)
    sub = all(B.add[a][b] in s and B.mul[a][b] in s for a in s for b in s) and \
        all(B.neg[a] in s and B.inv[a] in s for a in s)
    left = sub and all(B.lam[b][a] in s for b in range(B.n) for a in s)
    strong = left and all(B.add[B.add[b][a]][B.neg[b]] in s for b in range(B.n) for a in s)
    ideal = strong and all(B.mul[B.mul[b][a]][B.inv[b]] in s for b in range(B.n) for a in s)
    return dict(subbrace=sub, left_ideal=left, strong_left_ideal=strong, ideal=ideal)


def all_add_subgroups(B):
    if hasattr(B, "_add_subgroups"):
        return B._add_subgroups
    seen = {frozenset({0})}
    queue = [frozenset({0})]
    while queue:
        s = queue.pop()
        for x in range(B.n):
            if x not in s:
                t = add_closure(B, s | {x})
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    B._add_subgroups = seen
    return seen


def all_subbraces(B):
    if hasattr(B, "_subbraces"):
        return B._subbraces
    out = []
    for s in all_add_subgroups(B):
        if all(B.mul[a][b] in s for a in s for b in s):
            out.append(s)
    out = sorted(out, key=lambda s: (len(s), sorted(s)))
    B._subbraces = out
    return out


def all_of_kind(B, kind):
    res = []
    for s in all_subbraces(B):
        f = classify(B, s)
        if f[kind]:
            res.append(s)
    return res


# ---- commutator --------------------------------------------------------

def span_of(B, elems):
    return add_closure(B, elems)


def star_span(B, X, Y):
    return span_of(B, {B.star(x, y) for x in X for y in Y})


def add_comm_set(B, X, Y):
    return {B.add[B.add[B.add[B.neg[x]][B.neg[y]]][x]][y] for x in X for y in Y}


def mul_comm_set(B, X, Y):
    return {B.mul[B.mul[B.mul[B.inv[x]][B.inv[y]]][x]][y] for x in X for y in Y}


def commutator_ideal(B, I, J):
    x_ij = add_comm_set(B, I, J) | mul_comm_set(B, I, J) | \
        {B.sub(B.mul[i][j], B.add[i][j]) for i in I for j in J}
    r1 = ideal_closure(B, x_ij)
    gen = set(star_span(B, I, J)) | set(star_span(B, J, I)) | add_comm_set(B, I, J)
    r2 = ideal_closure(B, span_of(B, gen))
    assert r1 == r2, "commutator routes disagree"
    return r1


# ---- series ------------------------------------------------------------

def centre(B):
    return frozenset(a for a in range(B.n)
                     if all(B.add[a][b] == B.add[b][a] == B.mul[a][b] == B.mul[b][a]
                            for b in range(B.n)))


def socle(B):
    return frozenset(a for a in range(B.n)
                     if all(B.mul[a][b] == B.add[a][b] == B.add[b][a] for b in range(B.n)))


def fix(B):
    return frozenset(a for a in range(B.n) if all(B.lam[b][a] == a for b in range(B.n)))


def kernel_lambda(B):
    return frozenset(a for a in range(B.n) if all(B.lam[a][b] == b for b in range(B.n)))


def quotient(B, I):
    assert classify(B, I)["ideal"]
    rep = {}
    cosets = []
    for a in range(B.n):
        cs = frozenset(B.add[a][i] for i in I)
        if cs not in rep:
            rep[cs] = len(cosets)
            cosets.append(min(cs))
    proj = [None] * B.n
    for a in range(B.n):
        cs = frozenset(B.add[a][i] for i in I)
        proj[a] = rep[cs]
    m = len(cosets)
    qadd = [[proj[B.add[cosets[i]][cosets[j]]] for j in range(m)] for i in range(m)]
    qmul = [[proj[B.mul[cosets[i]][cosets[j]]] for j in range(m)] for i in range(m)]
    Q = Brace(m, qadd, qmul)
    return Q, proj, cosets


def restrict(B, S):
    el = sorted(S)
    idx = {e: i for i, e in enumerate(el)}
    m = len(el)
    radd = [[idx[B.add[a][b]] for b in el] for a in el]
    rmul = [[idx[B.mul[a][b]] for b in el] for a in el]
    return Brace(m, radd, rmul), el


def upper_central_series(B):
    chain = [frozenset({0})]
    while True:
        Q, proj, _ = quotient(B, chain[-1])
        z = centre(Q)
        nxt = frozenset(a for a in range(B.n) if proj[a] in z)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def lower_central_series(B):
    full = frozenset(range(B.n))
    chain = [full]
    while True:
        nxt = commutator_ideal(B, chain[-1], full)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def derived_series(B, I=None):
    if I is None:
        I = frozenset(range(B.n))
    chain = [I]
    while True:
        nxt = commutator_ideal(B, chain[-1], chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def nilpotency_class(B):
    up = upper_central_series(B)
    if len(up[-1]) != B.n:
        return None
    lo = lower_central_series(B)
    assert lo[-1] == frozenset({0})
    assert len(up) == len(lo)
    return len(up) - 1


def all_ideals(B):
    return all_of_kind(B, "ideal")


def chief_series(B, reverse=False):
    ideals = all_ideals(B)
    chain = [frozenset({0})]
    full = frozenset(range(B.n))
    while chain[-1] != full:
        above = [i for i in ideals if chain[-1] < i]
        minimal = [i for i in above if not any(j < i for j in above)]
        minimal.sort(key=lambda s: (len(s), sorted(s)))
        chain.append(minimal[-1 if reverse else 0])
    return chain


def b_central_class(B, I):
    """Class of I as a B-centrally nilpotent ideal, or None."""
    chain = [frozenset(I)]
    while True:
        nxt = commutator_ideal(B, chain[-1], I)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    if chain[-1] == frozenset({0}):
        return len(chain) - 1
    return None


def fitting(B):
    tot = frozenset({0})
    for I in all_ideals(B):
        if b_central_class(B, I) is not None:
            tot = span_of(B, tot | I)
    assert b_central_class(B, tot) is not None
    return tot


def maximal_left_ideals(B):
    li = all_of_kind(B, "left_ideal")
    proper = [s for s in li if len(s) < B.n]
    return [s for s in proper if not any(s < t for t in proper)]


def frattini(B):
    inter = frozenset(range(B.n))
    for L in maximal_left_ideals(B):
        inter &= L
    return inter & fitting(B)


def centraliser(B, I, J=frozenset({0})):
    best = frozenset({0})
    for K in all_ideals(B):
        if commutator_ideal(B, K, I) <= J:
            best = span_of(B, best | K)
    assert commutator_ideal(B, best, I) <= J
    return best


def zeta_b_radical(B):
    out = []
    for rev in (False, True):
        ch = chief_series(B, rev)
        inter = frozenset(range(B.n))
        for lo, hi in zip(ch, ch[1:]):
            inter &= centraliser(B, hi, lo)
        out.append(inter)
    assert out[0] == out[1]
    return out[0]


def subideal_defect(B, C):
    """Ideal closure series C^{B,0}=B, C^{B,k+1} = closure of C inside C^{B,k}."""
    C = frozenset(C)
    cur = frozenset(range(B.n))
    k = 0
    while True:
        R, el = restrict(B, cur)
        idx = {e: i for i, e in enumerate(el)}
        nxt = frozenset(el[i] for i in ideal_closure(R, {idx[c] for c in C}))
        k += 1
        if nxt == cur:
            return k - 1 if cur == C else None
        if nxt == C:
            return k
        cur = nxt


def ybe_solution(B):
    first = [[B.lam[a][b] for b in range(B.n)] for a in range(B.n)]
    second = [[B.mul[B.inv[B.lam[a][b]]][B.mul[a][b]] for b in range(B.n)]
              for a in range(B.n)]
    return first, second


def braid_holds(first, second):
    n = len(first)

    def r12(t):
        x, y, z = t
        return (first[x][y], second[x][y], z)

    def r23(t):
        x, y, z = t
        return (x, first[y][z], second[y][z])

    for t in product(range(n), repeat=3):
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return False
    return True


def table_order(t, x):
    k, y = 1, x
    while y != 0:
        y = t[y][x]
        k += 1
    return k


def sylow_conditions(B):
    """Unique Sylow p-subgroups in both groups, equal and an ideal, per prime."""
    n = B.n
    m, primes = n, []
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    for p in primes:
        part = 1
        m = n
        while m % p == 0:
            m //= p
            part *= p

        def ppart(t):
            s = set()
            for a in range(n):
                o = table_order(t, a)
                while o % p == 0:
                    o //= p
                if o == 1:
                    s.add(a)
            return frozenset(s)

        sa, sm = ppart(B.add), ppart(B.mul)
        if sa != sm or len(sa) != part:
            return False
        if any(B.add[x][y] not in sa or B.mul[x][y] not in sa
               for x in sa for y in sa):
            return False
        if not classify(B, sa)["ideal"]:
            return False
    return True
