"""Stratifying systems: axioms, completeness, ordering, filtrations, extension.

A stratifying system is an ordered list (X_1, ..., X_t) of indecomposable
modules with Hom(X_j, X_i) = 0 for j > i and Ext^1(X_j, X_i) = 0 for j >= i;
it is complete when t equals the number of vertices.  Lists are ingested
left-to-right in that indexing.  Indecomposability is certified through
exceptionality (End of dimension 1 with no self-extensions), which every
member of a stratifying system over a hereditary algebra must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import RationalMatrix, rank as matrix_rank
from .modules import (ModuleRef, PLAIN, PREINJ, PREPROJ, TUBE, TooLargeError,
                      materialize, pair_ext, pair_hom, ref_dims,
                      ref_is_exceptional, ref_plain, ref_preinj, ref_preproj,
                      ref_total_dim, ref_tube, same_module)
from .apq import TUBE_INFTY, TUBE_ZERO, recognize_apq
from .quiver import Quiver, classify_type
from .report import CheckReport
from .reps import Representation, hom_space, kernel_representation


@dataclass(frozen=True)
class StratSystem:
    """Ordered candidate system over a fixed quiver."""

    quiver: Quiver
    modules: tuple[ModuleRef, ...]

    @property
    def size(self) -> int:
        return len(self.modules)

    def describe(self) -> str:
        return "(" + ", ".join(m.describe() for m in self.modules) + ")"

    def inserted(self, position: int, ref: ModuleRef) -> "StratSystem":
        mods = list(self.modules)
        mods.insert(position, ref)
        return StratSystem(self.quiver, tuple(mods))


def system_from(quiver: Quiver, modules: Sequence) -> StratSystem:
    refs = []
    for m in modules:
        if isinstance(m, ModuleRef):
            refs.append(m)
        elif isinstance(m, Representation):
            refs.append(ref_plain(m))
        else:
            raise TypeError(f"cannot interpret {type(m).__name__} as a module")
    return StratSystem(quiver, tuple(refs))


# ---------------------------------------------------------------------------
# the axioms
# ---------------------------------------------------------------------------

def check_ss(s: StratSystem) -> CheckReport:
    """Verify the stratifying-system axioms; all failures become violations."""
    report = CheckReport("stratifying-system")
    mods = s.modules
    t = len(mods)
    for i, m in enumerate(mods, start=1):
        report.checked += 1
        if not any(ref_dims(m)):
            report.add("nonzero", subject=(i,), value=0)
    for i, m in enumerate(mods, start=1):
        report.checked += 1
        if not ref_is_exceptional(m):
            report.add("indecomposable-exceptional", subject=(i,),
                       value=(pair_hom(m, m), pair_ext(m, m)),
                       note=m.describe())
    for j in range(1, t + 1):
        for i in range(1, t + 1):
            if j > i:
                report.checked += 1
                h = pair_hom(mods[j - 1], mods[i - 1])
                if h:
                    report.add("hom-vanishing Hom(X_j,X_i)", subject=(j, i), value=h)
            if j >= i:
                report.checked += 1
                e = pair_ext(mods[j - 1], mods[i - 1])
                if e:
                    report.add("ext-vanishing Ext1(X_j,X_i)", subject=(j, i), value=e)
    return report


def check_css(s: StratSystem) -> CheckReport:
    """check_ss plus completeness: the size must equal the vertex count."""
    report = check_ss(s)
    report.name = "complete-stratifying-system"
    report.checked += 1
    n = s.quiver.n
    if s.size != n:
        report.add("complete (t = n)", value=(s.size, n), note="incomplete")
    return report


# ---------------------------------------------------------------------------
# tilting summands into stratifying order
# ---------------------------------------------------------------------------

def is_basic_tilting(summands: Sequence[ModuleRef]) -> CheckReport:
    """Pairwise non-isomorphic, Ext-orthogonal, n exceptional summands;
    over a hereditary algebra this certifies a basic tilting module."""
    report = CheckReport("basic-tilting")
    if not summands:
        report.add("nonempty")
        return report
    q = summands[0].quiver
    report.checked += 1
    if len(summands) != q.n:
        report.add("summand-count", value=(len(summands), q.n))
    for i, m in enumerate(summands, start=1):
        report.checked += 1
        if not ref_is_exceptional(m):
            report.add("exceptional", subject=(i,))
    for i in range(len(summands)):
        for j in range(len(summands)):
            if i < j and same_module(summands[i], summands[j]):
                report.add("pairwise-nonisomorphic", subject=(i + 1, j + 1))
            report.checked += 1
            e = pair_ext(summands[i], summands[j])
            if e:
                report.add("ext-orthogonal", subject=(i + 1, j + 1), value=e)
    return report


class NotOrderableError(ValueError):
    """The Hom relation on the summands contains a cycle."""


def tilting_order(summands: Sequence) -> StratSystem:
    """Order basic-tilting summands so that all nonzero Homs point forward.

    Kahn's algorithm on the Hom digraph (edge a -> b iff Hom(T_a, T_b) != 0),
    taking the smallest input index among available sources.  A cycle means
    the input was not a basic tilting module.
    """
    if not summands:
        raise ValueError("no summands given")
    refs = [m if isinstance(m, ModuleRef) else ref_plain(m) for m in summands]
    q = refs[0].quiver
    n = len(refs)
    edges = {(a, b) for a in range(n) for b in range(n)
             if a != b and pair_hom(refs[a], refs[b]) != 0}
    indeg = [0] * n
    for _, b in edges:
        indeg[b] += 1
    order: list[int] = []
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    while ready:
        a = ready.pop(0)
        order.append(a)
        for b in range(n):
            if (a, b) in edges:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        ready.sort()
    if len(order) != n:
        raise NotOrderableError("Hom relation has a cycle; not a basic tilting module")
    system = StratSystem(q, tuple(refs[i] for i in order))
    verdict = check_css(system)
    if not verdict.passed:
        raise NotOrderableError("ordered summands fail the axioms; "
                                "input was not a basic tilting module")
    return system


# ---------------------------------------------------------------------------
# filtration multiplicities
# ---------------------------------------------------------------------------

FILTRATION_DIM_CAP = 12


def _nonneg_solutions(targets: Sequence[int], columns: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All c >= 0 with sum c_k columns[k] = targets (bounded enumeration)."""
    sols: list[tuple[int, ...]] = []
    t = len(columns)

    def rec(k: int, remaining: list[int], chosen: list[int]):
        if k == t:
            if all(x == 0 for x in remaining):
                sols.append(tuple(chosen))
            return
        col = columns[k]
        bound = min((rem // c for rem, c in zip(remaining, col) if c), default=sum(remaining))
        for c in range(bound + 1):
            rest = [rem - c * x for rem, x in zip(remaining, col)]
            if all(r >= 0 for r in rest):
                rec(k + 1, rest, chosen + [c])

    rec(0, list(targets), [])
    return sols


def filtration_multiplicity(m: Representation, s: StratSystem,
                            dim_cap: int = FILTRATION_DIM_CAP) -> Optional[tuple[int, ...]]:
    """Multiplicities [M : X_i] of a filtration with quotients in the system,
    or None when no filtration is found.

    Search: a numeric certificate first (the dimension vector must be a
    nonnegative combination of the members'), then the fast path when all
    members are simple, then a recursive search over surjections onto the
    members with kernels recursing.  Exhausting the search yields None.
    """
    if m.total_dim > dim_cap:
        raise TooLargeError(f"module dimension {m.total_dim} exceeds the cap {dim_cap}")
    member_dims = [ref_dims(x) for x in s.modules]
    sols = _nonneg_solutions(m.dims, member_dims)
    if not sols:
        return None
    if all(sum(d) == 1 for d in member_dims):
        # all members simple: multiplicities are composition multiplicities
        if len(sols) != 1:
            return None
        return sols[0]
    members = [materialize(x) for x in s.modules]
    result = _filter_search(m, members, 0)
    return result


def _filter_search(m: Representation, members: list[Representation], depth: int) -> Optional[tuple[int, ...]]:
    if m.is_zero():
        return tuple(0 for _ in members)
    if depth > m.total_dim + 16:
        return None
    for idx, x in enumerate(members):
        if x.total_dim > m.total_dim:
            continue
        space = hom_space(m, x)
        if space.dim == 0:
            continue
        for mats in _surjection_candidates(m, x, space):
            kernel, _ = kernel_representation(m, x, mats)
            sub = _filter_search(kernel, members, depth + 1)
            if sub is not None:
                out = list(sub)
                out[idx] += 1
                return tuple(out)
    return None


def _surjection_candidates(m: Representation, x: Representation, space) -> Iterable:
    """Deterministic sample of surjections M -> X: basis elements first, then
    small signed combinations."""
    combos: list[tuple[int, ...]] = []
    h = space.dim
    singles = [tuple(1 if k == i else 0 for k in range(h)) for i in range(h)]
    combos.extend(singles)
    if h >= 2:
        grid: list[tuple[int, ...]] = [()]
        for _ in range(h):
            grid = [c + (s,) for c in grid for s in (1, -1, 0)]
        combos.extend(c for c in grid if sum(abs(v) for v in c) >= 2)
    seen = set()
    for combo in combos:
        if combo in seen:
            continue
        seen.add(combo)
        mats = []
        ok = True
        for k in range(len(m.dims)):
            rows_n, cols_n = x.dims[k], m.dims[k]
            acc = [[Fraction(0)] * cols_n for _ in range(rows_n)]
            for c, basis_elt in zip(combo, space.basis):
                if c == 0:
                    continue
                mat = basis_elt[k]
                for r in range(rows_n):
                    for cc in range(cols_n):
                        acc[r][cc] += c * mat.entries[r][cc]
            mat = RationalMatrix(rows_n, cols_n, tuple(tuple(row) for row in acc))
            if matrix_rank(mat) != rows_n:
                ok = False
                break
            mats.append(mat)
        if ok:
            yield mats


# ---------------------------------------------------------------------------
# filtration-category finiteness
# ---------------------------------------------------------------------------

def is_filtration_finite(s: StratSystem) -> bool:
    """The filtration category reduces to add of the members exactly when all
    pairwise first extensions vanish (then nothing can be glued)."""
    for a in s.modules:
        for b in s.modules:
            if pair_ext(a, b):
                return False
    return True


# ---------------------------------------------------------------------------
# extension to a complete system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CandidatePool:
    """Search space for completions: tau-orbit modules of projectives and
    injectives up to the exponent bound, plus the simple-regular catalogue
    when the quiver is a canonical Euclidean cycle."""

    exponent_bound: int = 8
    include_regulars: bool = True
    lambda_sample: tuple = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1))


def build_candidates(quiver: Quiver, pool: CandidatePool) -> list[ModuleRef]:
    refs: list[ModuleRef] = []
    for v in quiver.vertices:
        for k in range(pool.exponent_bound + 1):
            refs.append(ref_preproj(quiver, v, k))
            refs.append(ref_preinj(quiver, v, k))
    if pool.include_regulars and classify_type(quiver).tag == "Euclidean":
        pq = recognize_apq(quiver)
        if pq is not None:
            p, q = pq
            for label, rank in ((TUBE_INFTY, p), (TUBE_ZERO, q)):
                for i in range(1, rank + 1):
                    refs.append(ref_tube(p, q, label, i))
            # rank-1 tubes hold no exceptional modules; nothing to add
    refs = [r for r in refs if ref_is_exceptional(r)]
    seen: set[tuple] = set()
    unique: list[ModuleRef] = []
    kind_rank = {PREPROJ: 0, PREINJ: 1, TUBE: 2, PLAIN: 3}
    for r in sorted(refs, key=lambda r: (ref_total_dim(r), r.power, kind_rank[r.kind],
                                         r.vertex if r.vertex is not None else -1)):
        dims = ref_dims(r)
        if dims in seen:
            continue
        seen.add(dims)
        unique.append(r)
    return unique


def _compatible_insertion(s: StratSystem, position: int, cand: ModuleRef) -> bool:
    """Check only the new pairs created by inserting cand at the position."""
    if pair_ext(cand, cand):
        return False
    if pair_hom(cand, cand) != 1:
        return False
    for i, other in enumerate(s.modules):
        if i < position:
            # other sits before cand: cand plays the later role
            if pair_hom(cand, other) or pair_ext(cand, other):
                return False
        else:
            if pair_hom(other, cand) or pair_ext(other, cand):
                return False
    return True


def extend_to_complete(s: StratSystem,
                       pool: Optional[CandidatePool] = None,
                       candidates: Optional[Sequence[ModuleRef]] = None,
                       positions=None
                       ) -> tuple[Optional[StratSystem], CheckReport]:
    """Insert exceptional modules until the system is complete.

    ``positions`` restricts insertion slots: a list of indices (single-slot
    searches), the string "outer" (prepend or append only), or None for
    anywhere.  Returns the first completion in deterministic candidate order
    (or None) plus a report.  With exactly one slot open, every viable
    candidate is collected: two non-isomorphic ones get flagged as an
    inconsistency (one-slot completions are unique for hereditary algebras).
    """
    report = CheckReport("extend-to-complete")
    base = check_ss(s)
    if not base.passed:
        report.merge(base)
        report.add("input-system", note="input fails the stratifying axioms")
        return None, report
    n = s.quiver.n
    if s.size > n:
        report.add("size", value=(s.size, n))
        return None, report
    if s.size == n:
        report.checked += 1
        return s, report
    cands = list(candidates) if candidates is not None else build_candidates(
        s.quiver, pool or CandidatePool())
    slots = n - s.size

    def slot_list(current_size: int, min_pos: int) -> list[int]:
        if positions == "outer":
            return sorted({0, current_size})
        if positions is not None:
            return [p for p in positions if 0 <= p <= current_size]
        return list(range(min_pos, current_size + 1))

    if slots == 1:
        winners: list[tuple[int, ModuleRef]] = []
        for pos in slot_list(s.size, 0):
            for cand in cands:
                report.checked += 1
                if _compatible_insertion(s, pos, cand):
                    if not any(same_module(cand, w[1]) and pos == w[0] for w in winners):
                        winners.append((pos, cand))
        if not winners:
            report.add("no-completion", note="none found within bounds")
            return None, report
        distinct = []
        for pos, cand in winners:
            if not any(same_module(cand, c) for _, c in distinct):
                distinct.append((pos, cand))
        if len(distinct) > 1:
            report.flag("uniqueness violated: multiple one-slot completions "
                        + ", ".join(c.describe() for _, c in distinct))
        pos, cand = winners[0]
        result = s.inserted(pos, cand)
        final = check_css(result)
        report.merge(final)
        return (result if final.passed else None), report

    def search(current: StratSystem, remaining: int, min_pos: int) -> Optional[StratSystem]:
        if remaining == 0:
            return current
        for pos in slot_list(current.size, min_pos):
            for cand in cands:
                report.checked += 1
                if _compatible_insertion(current, pos, cand):
                    found = search(current.inserted(pos, cand), remaining - 1, pos)
                    if found is not None:
                        return found
        return None

    result = search(s, slots, 0)
    if result is None:
        report.add("no-completion", note="none found within bounds")
        return None, report
    final = check_css(result)
    report.merge(final)
    return (result if final.passed else None), report
