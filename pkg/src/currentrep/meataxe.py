"""MeatAxe-style decomposition engine for exact module arithmetic.

Submodules are subspaces spanned by echelonised row bases; spinning closes a
seed set under the generator actions in batched BLAS steps.  Irreducibility
uses random algebra words: a word of nullity one whose kernel vector spins to
everything, and whose transpose kernel vector spins to everything under the
transposed actions, certifies irreducibility; a proper spin on either side
yields an invariant subspace.  Isomorphism testing is the standard-basis
method driven by a shared nullity-one word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import get_context
from .errors import Inconclusive, NotGraded, NotWeightModule, TooLarge
from .modrep import ModuleRep

DEFAULT_WORD_BUDGET = 64


# ---------------------------------------------------------------------------
# subspace machinery


def spin(actions, seeds, p: int) -> linalg.Echelon:
    """Smallest action-invariant subspace containing the seed row vectors."""
    d = actions[0].shape[0] if actions else np.asarray(seeds).shape[-1]
    ech = linalg.Echelon(d, p)
    seeds = np.asarray(seeds, dtype=np.int64).reshape(-1, d)
    frontier = ech.add_rows(seeds)
    while frontier.shape[0] and ech.dim < d:
        batches = [linalg.matmul(frontier, A.T, p) for A in actions]
        frontier = ech.add_rows(np.vstack(batches)) if batches else np.zeros((0, d), dtype=np.int64)
    return ech


def restrict_actions(actions, ech: linalg.Echelon, p: int):
    """Action matrices on a spanned invariant subspace, in its row basis."""
    B = ech.rows
    out = []
    for A in actions:
        img = linalg.matmul(B, A.T, p)
        coords = ech.coords(img)
        out.append(coords.T.copy())
    return out

def quotient_actions(actions, ech: linalg.Echelon, p: int):
    """Action matrices on the quotient by a spanned invariant subspace."""
    d = actions[0].shape[0]
    piv = ech.pivots
    npiv = [c for c in range(d) if c not in set(piv)]
    B = ech.rows
    out = []
    for A in actions:
        W = A[:, npiv].T % p          # images of representative vectors, as rows
        if len(piv):
            W = (W - linalg.matmul(W[:, piv], B, p)) % p
        out.append(W[:, npiv].T.copy())
    return out, npiv


def submodule_rep(M: ModuleRep, ech: linalg.Echelon) -> ModuleRep:
    acts = restrict_actions([M.action(i) for i in range(len(M.gens))], ech, M.alg.p)
    return ModuleRep(M.alg, M.chi, M.gens, acts)


def quotient_rep(M: ModuleRep, ech: linalg.Echelon) -> ModuleRep:
    acts, _ = quotient_actions([M.action(i) for i in range(len(M.gens))], ech, M.alg.p)
    return ModuleRep(M.alg, M.chi, M.gens, acts)


def invariant_subspace(M: ModuleRep, subalgebra_indices) -> np.ndarray:
    """Joint kernel of the actions of the given global basis elements."""
    slots = {g: i for i, g in enumerate(M.gens)}
    mats = [M.action(slots[g]) for g in subalgebra_indices]
    if not mats:
        return np.eye(M.dim, dtype=np.int64)
    return linalg.kernel(np.vstack(mats), M.alg.p)


# ---------------------------------------------------------------------------
# random words and the Norton test


class _WordSampler:
    def __init__(self, actions, p, rng):
        self.actions = actions
        self.p = p
        self.rng = rng
        self.d = actions[0].shape[0]

    def combo(self):
        c = self.rng.integers(0, self.p, size=len(self.actions) + 1)
        out = int(c[-1]) * np.eye(self.d, dtype=np.int64) % self.p
        for coeff, A in zip(c, self.actions):
            if coeff:
                out = (out + int(coeff) * A) % self.p
        return out

    def word(self):
        nfac = int(self.rng.integers(1, 4))
        w = self.combo()
        for _ in range(nfac - 1):
            w = linalg.matmul(w, self.combo(), self.p)
        return w


def _shift_kernels(w: np.ndarray, p: int):
    """Kernels of the eigenvalue shifts w - cI with nonzero nullity, smallest
    nullity first.  Shifting enormously raises the supply of nullity-one
    algebra elements compared to raw random words."""
    d = w.shape[0]
    eye = np.eye(d, dtype=np.int64)
    out = []
    for c in range(p):
        ker = linalg.kernel((w - c * eye) % p, p)
        if 0 < ker.shape[0]:
            out.append((ker.shape[0], c, ker))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def _irreducible_quadratics(p: int):
    """Monic irreducible quadratics x^2 + a x + b over F_p."""
    out = []
    for a in range(p):
        for b in range(p):
            if all((c * c + a * c + b) % p for c in range(p)):
                out.append((a, b))
    return out


def _quadratic_kernels(w: np.ndarray, p: int):
    """Kernels of q(w) for irreducible quadratics q with nullity exactly 2.

    Such a kernel is an irreducible module for the subalgebra generated by w,
    which re-enables the Norton certificate when the endomorphism field of
    the module is a quadratic extension (no nullity-one elements exist)."""
    d = w.shape[0]
    eye = np.eye(d, dtype=np.int64)
    w2 = linalg.matmul(w, w, p)
    out = []
    for a, b in _irreducible_quadratics(p):
        ker = linalg.kernel((w2 + a * w + b * eye) % p, p)
        if ker.shape[0] == 2:
            out.append((a, b, ker))
    return out


def find_invariant_subspace(actions, p: int, rng, word_budget=16,
                            spin_tries=3):
    """A proper invariant subspace (echelon) or None when certified irreducible."""
    d = actions[0].shape[0]
    if d <= 1:
        return None
    sampler = _WordSampler(actions, p, rng)
    transposed = None
    best = None
    for _ in range(word_budget):
        w = sampler.word()
        for k, c, ker in _shift_kernels(w, p):
            all_full = True
            for v in ker[:spin_tries]:
                sub = spin(actions, v, p)
                if sub.dim < d:
                    all_full = False
                    if d // 4 <= sub.dim <= 3 * d // 4:
                        return sub
                    if best is None or abs(sub.dim - d / 2) < abs(best.dim - d / 2):
                        best = sub
            if k == 1 and all_full and best is None:
                # Norton certificate: check the transpose side
                if transposed is None:
                    transposed = [A.T.copy() for A in actions]
                wc = (w - c * np.eye(d, dtype=np.int64)) % p
                kerT = linalg.kernel(wc.T, p)
                subT = spin(transposed, kerT[0], p)
                if subT.dim == d:
                    return None  # irreducible, certified
                # orthogonal complement of a proper transpose-invariant subspace
                comp = linalg.kernel(subT.rows, p)
                ech = linalg.Echelon(d, p)
                ech.add_rows(comp)
                if 0 < ech.dim < d:
                    return ech
        if best is None:
            # quadratic-extension certificate: kernels of irreducible
            # quadratics with nullity two are w-irreducible, so the Norton
            # argument applies verbatim
            for a, b, ker in _quadratic_kernels(w, p):
                sub = spin(actions, ker[0], p)
                if 0 < sub.dim < d:
                    if best is None or abs(sub.dim - d / 2) < abs(best.dim - d / 2):
                        best = sub
                    continue
                if transposed is None:
                    transposed = [A.T.copy() for A in actions]
                w2 = linalg.matmul(w, w, p)
                qT = (w2 + a * w + b * np.eye(d, dtype=np.int64)).T % p
                kerT = linalg.kernel(qT, p)
                if kerT.shape[0] != 2:
                    continue
                subT = spin(transposed, kerT[0], p)
                if subT.dim == d:
                    return None  # irreducible, certified
                comp = linalg.kernel(subT.rows, p)
                ech = linalg.Echelon(d, p)
                ech.add_rows(comp)
                if 0 < ech.dim < d:
                    return ech
        if best is not None:
            return best
    if best is not None:
        return best
    # last resort: direct spins of random vectors (catches scalar-acting algebras)
    for _ in range(8):
        v = rng.integers(0, p, size=d)
        if not np.any(v):
            continue
        sub = spin(actions, v, p)
        if 0 < sub.dim < d:
            return sub
    raise Inconclusive("no certificate or splitting found within the word budget")


def is_irreducible(M: ModuleRep, seed: int = 0, word_budget=DEFAULT_WORD_BUDGET) -> bool:
    acts = [M.action(i) for i in range(len(M.gens))]
    rng = np.random.default_rng((seed, 0xA11))
    return find_invariant_subspace(acts, M.alg.p, rng, word_budget) is None


# ---------------------------------------------------------------------------
# characters


@dataclass
class CharacterTable:
    """Multiplicity function on weights (h*-tuples or lattice tuples)."""

    table: dict
    kind: str  # 'weight' or 'graded'

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def to_json_dict(self):
        return {"kind": self.kind,
                "entries": [[list(k), v] for k, v in sorted(self.table.items())]}

    def __eq__(self, other):
        return isinstance(other, CharacterTable) and self.table == other.table


def weight_character(M: ModuleRep) -> CharacterTable:
    """Dimensions of the simultaneous eigenspaces of the degree-0 torus."""
    ctx = get_context(M.alg)
    p = M.alg.p
    slots = {g: i for i, g in enumerate(M.gens)}
    toral = [g for g in ctx.torus_indices if ctx.meta[g].degree == 0]
    for g in toral:
        A = M.action(slots[g])
        if not np.array_equal(linalg.matpow(A, p, p), A):
            raise NotWeightModule("toral action is not semisimple over F_p")
    spaces = [((), np.eye(M.dim, dtype=np.int64))]
    for g in toral:
        A = M.action(slots[g])
        new = []
        for tag, rows in spaces:
            sub = linalg.Echelon(M.dim, p)
            sub.add_rows(rows)
            restr = restrict_actions([A], sub, p)[0]
            found = 0
            for c in range(p):
                K = linalg.kernel((restr - c * np.eye(sub.dim, dtype=np.int64)) % p, p)
                if K.shape[0]:
                    found += K.shape[0]
                    new.append((tag + (c,), linalg.matmul(K, sub.rows, p)))
            if found != sub.dim:
                raise NotWeightModule("toral action failed to split over F_p")
        spaces = new
    table = Counter()
    for tag, rows in spaces:
        table[tag] += rows.shape[0]
    return CharacterTable(dict(table), "weight")


def graded_character(M: ModuleRep) -> CharacterTable:
    if M.grading_tags is None:
        raise NotGraded("module carries no grading tags")
    return CharacterTable(dict(Counter(M.grading_tags)), "graded")


def weight_tags_character(M: ModuleRep) -> CharacterTable:
    if M.weight_tags is None:
        raise NotWeightModule("module carries no weight tags")
    return CharacterTable(dict(Counter(M.weight_tags)), "weight")


# ---------------------------------------------------------------------------
# isomorphism testing (standard basis method)


def _central_scalars(M: ModuleRep):
    """Scalars of the central basis elements, None entries when non-scalar."""
    ctx = get_context(M.alg)
    p = M.alg.p
    slots = {g: i for i, g in enumerate(M.gens)}
    out = []
    for g in M.gens:
        if np.any(ctx.bracket_coords[g]):
            continue
        A = M.action(slots[g])
        c = int(A[0, 0])
        out.append((g, c if np.array_equal(A, c * np.eye(M.dim, dtype=np.int64) % p) else None))
    return tuple(out)


def _standard_basis(actions, v, p):
    """Spin one vector in deterministic order, recording the schedule."""
    d = actions[0].shape[0]
    ech = linalg.Echelon(d, p)
    basis = [np.asarray(v, dtype=np.int64) % p]
    ech.add_rows(basis[0])
    schedule = []
    i = 0
    while i < len(basis):
        for gslot, A in enumerate(actions):
            w = linalg.matvec(A, basis[i], p)
            if not ech.contains(w):
                basis.append(w)
                ech.add_rows(w)
                schedule.append((i, gslot))
        i += 1
    return np.stack(basis), schedule


def _replay_basis(actions, v, schedule, p, dim_expected):
    """Re-run a recorded schedule; None if the independence pattern differs."""
    d = actions[0].shape[0]
    ech = linalg.Echelon(d, p)
    basis = [np.asarray(v, dtype=np.int64) % p]
    ech.add_rows(basis[0])
    want = {(i, g) for i, g in schedule}
    i = 0
    # replay in the same deterministic sweep as _standard_basis
    while i < len(basis):
        for gslot, A in enumerate(actions):
            w = linalg.matvec(A, basis[i], p)
            new = not ech.contains(w)
            should = (i, gslot) in want
            if new != should:
                return None
            if new:
                basis.append(w)
                ech.add_rows(w)
        i += 1
    if len(basis) != dim_expected:
        return None
    return np.stack(basis)


def are_isomorphic(M: ModuleRep, N: ModuleRep, seed: int = 0,
                   word_budget=DEFAULT_WORD_BUDGET):
    """(flag, witness): witness is an invertible intertwiner when flag is True.

    Conclusive for modules generated by a nullity-one kernel vector (all
    simples, baby Vermas and their duals); raises Inconclusive if no usable
    word is found within the budget.
    """
    if M.alg != N.alg:
        from .errors import AlgebraMismatch
        raise AlgebraMismatch("modules live over different algebras")
    if M.chi != N.chi:
        from .errors import BadCharacter
        raise BadCharacter("isomorphism testing requires equal characters")
    if M.dim != N.dim:
        return False, None
    if M.dim == 0:
        return True, np.zeros((0, 0), dtype=np.int64)
    if _central_scalars(M) != _central_scalars(N):
        return False, None
    p = M.alg.p
    actsM = [M.action(i) for i in range(len(M.gens))]
    actsN = [N.action(i) for i in range(len(N.gens))]
    if all(np.array_equal(a, b) for a, b in zip(actsM, actsN)):
        return True, np.eye(M.dim, dtype=np.int64)
    rng = np.random.default_rng((seed, 0x150))
    d = M.dim
    eye = np.eye(d, dtype=np.int64)
    for _ in range(word_budget):
        nfac = int(rng.integers(1, 4))
        combos = [rng.integers(0, p, size=len(actsM) + 1) for _ in range(nfac)]

        def build(acts):
            w = None
            for c in combos:
                f = int(c[-1]) * eye % p
                for coeff, A in zip(c, acts):
                    if coeff:
                        f = (f + int(coeff) * A) % p
                w = f if w is None else linalg.matmul(w, f, p)
            return w

        wM = build(actsM)
        wN = None
        for k, c, kerM in _shift_kernels(wM, p):
            if k != 1:
                break  # sorted ascending: no nullity-one shift for this word
            sbM, schedule = _standard_basis(actsM, kerM[0], p)
            if sbM.shape[0] != d:
                continue  # kernel vector does not generate; try another shift
            if wN is None:
                wN = build(actsN)
            kerN = linalg.kernel((wN - c * eye) % p, p)
            if kerN.shape[0] != 1:
                return False, None
            sbN = _replay_basis(actsN, kerN[0], schedule, p, d)
            if sbN is None:
                return False, None
            theta = linalg.matmul(sbN.T, linalg.inv(sbM.T, p), p)
            ok = all(np.array_equal(linalg.matmul(theta, a, p), linalg.matmul(b, theta, p))
                     for a, b in zip(actsM, actsN))
            return (True, theta) if ok else (False, None)
        # quadratic-extension fallback: a two-dimensional irreducible kernel;
        # an isomorphism must map it to its counterpart, so trying every line
        # of the target kernel is conclusive when the seed generates
        for a, b, kerM in _quadratic_kernels(wM, p):
            sbM, schedule = _standard_basis(actsM, kerM[0], p)
            if sbM.shape[0] != d:
                continue
            if wN is None:
                wN = build(actsN)
            wN2 = linalg.matmul(wN, wN, p)
            kerN = linalg.kernel((wN2 + a * wN + b * eye) % p, p)
            if kerN.shape[0] != 2:
                return False, None
            lines = [kerN[0]] + [(kerN[1] + cc * kerN[0]) % p for cc in range(p)]
            for u in lines:
                sbN = _replay_basis(actsN, u, schedule, p, d)
                if sbN is None:
                    continue
                theta = linalg.matmul(sbN.T, linalg.inv(sbM.T, p), p)
                if all(np.array_equal(linalg.matmul(theta, x, p), linalg.matmul(y, theta, p))
                       for x, y in zip(actsM, actsN)):
                    return True, theta
            return False, None
    raise Inconclusive("no nullity-one generating word found")


# ---------------------------------------------------------------------------
# composition series


@dataclass
class SimpleCatalog:
    """Append-only catalog of pairwise non-isomorphic simple modules."""

    entries: list = field(default_factory=list)  # (id, rep, label, invariants)
    seed: int = 0

    def _invariants(self, rep: ModuleRep):
        try:
            wc = tuple(sorted(weight_character(rep).table.items()))
        except NotWeightModule:
            wc = None
        return (rep.dim, wc, _central_scalars(rep))

    def match(self, rep: ModuleRep, label: str | None = None) -> str:
        inv = self._invariants(rep)
        for sid, existing, _lbl, existing_inv in self.entries:
            if existing_inv != inv or existing.chi != rep.chi:
                continue
            flag, _ = are_isomorphic(existing, rep, seed=self.seed)
            if flag:
                return sid
        sid = label or f"S{len(self.entries)}(dim {rep.dim})"
        self.entries.append((sid, rep, sid, inv))
        return sid

    def get(self, sid: str) -> ModuleRep:
        for s, rep, _l, _i in self.entries:
            if s == sid:
                return rep
        raise KeyError(sid)

    def register(self, rep: ModuleRep, label: str) -> str:
        return self.match(rep, label=label)


@dataclass
class CompositionSeries:
    factors: list              # (simpleId, multiplicity), sorted by id
    dims: dict                 # simpleId -> dimension
    total_dim: int
    seed: int
    retries: int

    def multiplicity(self, sid: str) -> int:
        for s, m in self.factors:
            if s == sid:
                return m
        return 0

    def as_multiset(self):
        return Counter(dict(self.factors))

    def to_json_dict(self):
        return {"factors": [{"label": s, "dim": self.dims[s], "mult": m}
                            for s, m in self.factors],
                "seed": self.seed, "retries": self.retries}


def chop(M: ModuleRep, seed: int = 0, limit: int = 10 ** 6,
         catalog: SimpleCatalog | None = None, word_budget=DEFAULT_WORD_BUDGET,
         max_retries: int = 4) -> CompositionSeries:
    """Full composition series by recursive splitting.

    Deterministic given the seed; factors are matched into the catalog (a
    fresh one if none is supplied).  Σ mult · dim always equals dim M.
    """
    if M.dim > limit:
        raise TooLarge(f"chop limit {limit} exceeded by dim {M.dim}")
    catalog = catalog if catalog is not None else SimpleCatalog(seed=seed)
    p = M.alg.p
    leaves = []
    retries = 0
    stack = [[M.action(i) for i in range(len(M.gens))]]
    node = 0
    while stack:
        acts = stack.pop()
        node += 1
        d = acts[0].shape[0]
        if d == 0:
            continue
        sub = None
        for attempt in range(max_retries):
            rng = np.random.default_rng((seed, node, attempt))
            try:
                sub = find_invariant_subspace(acts, p, rng, word_budget)
                break
            except Inconclusive:
                retries += 1
        else:
            raise Inconclusive(f"node of dim {d} resisted {max_retries} retries")
        if sub is None:
            leaves.append(acts)
        else:
            stack.append(restrict_actions(acts, sub, p))
            qacts, _ = quotient_actions(acts, sub, p)
            stack.append(qacts)
    counts = Counter()
    for acts in leaves:
        rep = ModuleRep(M.alg, M.chi, M.gens, acts)
        counts[catalog.match(rep)] += 1
    dims = {sid: catalog.get(sid).dim for sid in counts}
    total = sum(dims[s] * m for s, m in counts.items())
    assert total == M.dim, f"composition series dimension mismatch: {total} != {M.dim}"
    return CompositionSeries(sorted(counts.items()), dims, M.dim, seed, retries)


# ---------------------------------------------------------------------------
# socles and heads


def find_simple_submodule(M: ModuleRep, seed: int = 0,
                          word_budget=DEFAULT_WORD_BUDGET) -> linalg.Echelon:
    """Descend through proper submodules until an irreducible one remains."""
    p = M.alg.p
    acts = [M.action(i) for i in range(len(M.gens))]
    d = M.dim
    basis = linalg.Echelon(d, p)
    basis.add_rows(np.eye(d, dtype=np.int64))
    level = 0
    while True:
        sub = None
        for attempt in range(4):
            rng = np.random.default_rng((seed, 0x50C, level, attempt))
            try:
                sub = find_invariant_subspace(acts, p, rng, word_budget)
                break
            except Inconclusive:
                continue
        else:
            raise Inconclusive("socle descent stalled")
        if sub is None:
            return basis
        acts = restrict_actions(acts, sub, p)
        basis_rows = linalg.matmul(sub.rows, basis.rows, p)
        basis = linalg.Echelon(d, p)
        basis.add_rows(basis_rows)
        level += 1


def head(M: ModuleRep, seed: int = 0) -> ModuleRep:
    """Unique simple quotient of a module with simple head.

    Computed as M / S^⊥ where S is the (unique) simple submodule of the
    dual; exact quotient construction, no homomorphism solving.
    """
    Md = M.dual()
    S = find_simple_submodule(Md, seed=seed)
    if S.dim == M.dim:
        return M
    perp = linalg.kernel(S.rows, M.alg.p)
    ech = linalg.Echelon(M.dim, M.alg.p)
    ech.add_rows(perp)
    return quotient_rep(M, ech)


def hom_space(S: ModuleRep, M: ModuleRep, hom_guard: int = 2500):
    """Basis of Hom(S, M) as matrices theta with theta ρ_S(g) = ρ_M(g) theta."""
    if S.dim * M.dim > hom_guard:
        raise TooLarge("hom-space solve exceeds the configured guard")
    p = M.alg.p
    n_unknowns = S.dim * M.dim
    # iterate kernel intersection one generator at a time to bound memory
    sol = np.eye(n_unknowns, dtype=np.int64)
    for slot in range(len(M.gens)):
        a = S.action(slot)
        b = M.action(slot)
        block = (np.kron(a.T, np.eye(M.dim, dtype=np.int64))
                 - np.kron(np.eye(S.dim, dtype=np.int64), b)) % p
        constrained = linalg.matmul(block, sol.T, p)
        coeff_kernel = linalg.kernel(constrained, p)
        sol = linalg.matmul(coeff_kernel, sol, p)
        if sol.shape[0] == 0:
            return []
    out = []
    for vec in sol:
        theta = vec.reshape(S.dim, M.dim).T % p
        out.append(theta)
    return out


def socle_rows(M: ModuleRep, seed: int = 0, hom_guard: int = 2500) -> np.ndarray:
    """Row basis of the socle: sum of images of all maps from the simples."""
    cat = SimpleCatalog(seed=seed)
    series = chop(M, seed=seed, catalog=cat)
    rows = []
    p = M.alg.p
    for sid, _m in series.factors:
        S = cat.get(sid)
        for theta in hom_space(S, M, hom_guard):
            for col in theta.T:
                if np.any(col):
                    rows.append(col)
    ech = linalg.Echelon(M.dim, p)
    if rows:
        ech.add_rows(np.stack(rows))
    return ech.rows


def head_general(M: ModuleRep, seed: int = 0, hom_guard: int = 2500) -> ModuleRep:
    """M / rad(M) via the socle of the dual; guarded to moderate dimensions."""
    rows = socle_rows(M.dual(), seed=seed, hom_guard=hom_guard)
    perp = linalg.kernel(rows, M.alg.p) if rows.shape[0] else np.zeros((0, M.dim), dtype=np.int64)
    ech = linalg.Echelon(M.dim, M.alg.p)
    if rows.shape[0] < M.dim:
        ech.add_rows(perp)
    return quotient_rep(M, ech)


# ---------------------------------------------------------------------------
# explicit intertwiners out of baby Vermas


def highest_weight_vectors(N: ModuleRep, lam) -> np.ndarray:
    """Joint kernel rows: vectors killed by the positive part on which every
    toral basis element acts by the given weight (all t-degrees)."""
    ctx = get_context(N.alg)
    p = N.alg.p
    slots = {g: i for i, g in enumerate(N.gens)}
    eye = np.eye(N.dim, dtype=np.int64)
    mats = [N.action(slots[g]) for g in ctx.nplus_indices]
    for idx in ctx.torus_indices:
        meta = ctx.meta[idx]
        val = lam.value(meta.degree, meta.pos[0])
        mats.append((N.action(slots[idx]) - val * eye) % p)
    return linalg.kernel(np.vstack(mats), p)


def _line_representatives(rows: np.ndarray, p: int, cap: int = 1000):
    """One representative per line of the row span (small spaces only)."""
    k = rows.shape[0]
    total = (p ** k - 1) // (p - 1)
    if total > cap:
        total = cap
    seen = set()
    reps = []
    count = 0
    for t in range(1, p ** k):
        digits = []
        tt = t
        for _ in range(k):
            digits.append(tt % p)
            tt //= p
        # normalise: first nonzero digit = 1 picks one representative per line
        lead = next(d for d in digits if d)
        if lead != 1:
            continue
        v = np.zeros(rows.shape[1], dtype=np.int64)
        for c, row in zip(digits, rows):
            if c:
                v = (v + c * row) % p
        reps.append(v)
        count += 1
        if count >= total:
            break
    return reps


def verma_intertwiner(Z: ModuleRep, N: ModuleRep, lam):
    """Invertible intertwiner Z_χ(λ) → N built from a highest vector of N.

    A map out of the induced module is freely determined by the image w of
    its highest vector; the columns are ρ_N(monomial)·w computed along the
    monomial recursion.  Every line of the highest-vector space of N is
    tried, so a None return certifies that no isomorphism exists whenever
    that space is within the enumeration cap.
    """
    from .modrep import exps_of_rank
    if Z.dim != N.dim or Z.alg != N.alg or Z.chi != N.chi:
        return None
    ctx = get_context(Z.alg)
    p = Z.alg.p
    comp = ctx.nminus_indices
    k = len(comp)
    if p ** k != Z.dim:
        return None  # not a plain Borel-induced basis
    slots = {g: i for i, g in enumerate(N.gens)}
    comp_actions = [N.action(slots[g]) for g in comp]
    actsZ = [Z.action(i) for i in range(len(Z.gens))]
    actsN = [N.action(i) for i in range(len(N.gens))]
    hw = highest_weight_vectors(N, lam)
    if hw.shape[0] == 0:
        return None
    for w in _line_representatives(hw, p):
        cols = np.zeros((N.dim, Z.dim), dtype=np.int64)
        cols[:, 0] = w
        for rank_idx in range(1, Z.dim):
            a = exps_of_rank(rank_idx, k, p)
            i = next(t for t, v in enumerate(a) if v)
            prev = rank_idx - p ** (k - 1 - i)
            cols[:, rank_idx] = linalg.matvec(comp_actions[i], cols[:, prev], p)
        try:
            linalg.inv(cols, p)
        except Exception:
            continue
        if all(np.array_equal(linalg.matmul(cols, a, p), linalg.matmul(b, cols, p))
               for a, b in zip(actsZ, actsN)):
            return cols
    return None
