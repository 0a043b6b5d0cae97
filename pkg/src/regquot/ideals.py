"""Regular sequences, Koszul complexes and ideal decompositions.

All computations are degreewise and windowed.  Graded pieces of quotient
modules are presented as integer (or p-local) lattices: a slice is a span
``Z`` of coefficient rows together with a relation span ``B``, and homology
or quotient invariants come from Smith normal form of ``B`` written in a
basis of ``Z``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import (
    ConditionIIFails,
    EmptySequence,
    MixedRings,
    NonHomogeneous,
    NotVerifiedRegular,
    SemanticError,
    WindowOverflow,
)
from .linalg import (
    IntLattice,
    LocalLattice,
    cleared_matrix,
    cleared_rows,
    kernel_basis,
    lattice_intersection_rows,
    p_part,
    snf_invariants,
)
from .ring import GradedRing, QuotientRing, RingElement, ideal_context
from .scalars import INTEGERS_LOCALIZED, PRIME_FIELD


# -- sequence and ideal validation ------------------------------------


def checked_sequence(ring: GradedRing, elements, allow_empty=False):
    elems = tuple(elements)
    if not elems and not allow_empty:
        raise EmptySequence("a non-empty sequence of elements is required")
    for e in elems:
        if not isinstance(e, RingElement):
            raise SemanticError("sequence entries must be ring elements")
        if e.ring != ring:
            raise MixedRings("sequence entry from a different ring")
        if not e.is_homogeneous():
            raise NonHomogeneous("sequence entries must be homogeneous")
        d = e.degree()
        if d is not None and d % 2 != 0:
            raise SemanticError("sequence entries must have even degree")
    return elems


@dataclass(frozen=True)
class HomogeneousIdeal:
    """Finitely generated ideal with homogeneous even-degree generators."""

    ring: GradedRing
    generators: tuple

    def __init__(self, ring, generators):
        gens = checked_sequence(ring, generators)
        for g in gens:
            if g.is_zero():
                raise SemanticError("ideal generators must be nonzero")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", gens)


def _gens(ring, ideal):
    if isinstance(ideal, HomogeneousIdeal):
        if ideal.ring != ring:
            raise MixedRings("ideal belongs to a different ring")
        return ideal.generators
    return checked_sequence(ring, ideal, allow_empty=True)


# -- module entries ---------------------------------------------------


@dataclass(frozen=True)
class ModuleEntry:
    """One graded piece: free rank plus nontrivial invariant factors."""

    free_rank: int = 0
    factors: tuple = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.factors

    def dimension_over(self, p: int):
        """F_p dimension when the piece is an F_p vector space, else None."""
        if self.free_rank != 0 or any(f != p for f in self.factors):
            return None
        return len(self.factors)

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("free rank %d" % self.free_rank)
        parts.extend("Z/%d" % f for f in self.factors)
        return " + ".join(parts) if parts else "0"


@dataclass
class GradedModuleReport:
    """Degreewise table of module invariants within a scan range."""

    scanned: tuple
    entries: dict = field(default_factory=dict)

    def entry(self, d: int) -> ModuleEntry:
        return self.entries.get(d, ModuleEntry())

    def nonzero_degrees(self):
        return sorted(d for d, e in self.entries.items() if not e.is_zero())

    def as_dict(self):
        return {
            d: {"free_rank": e.free_rank, "factors": list(e.factors)}
            for d, e in sorted(self.entries.items())
            if not e.is_zero()
        }


def _solver_for(base, rows, width):
    """Lattice wrapper suited to the base ring, for membership and solving."""
    if base.kind == INTEGERS_LOCALIZED:
        return LocalLattice(rows, width, base.p)
    return IntLattice([[int(x) for x in r] for r in rows], width)


def quotient_invariants(z_rows, b_rows, width, base) -> ModuleEntry:
    """Invariants of Z/B for lattices B <= Z inside a rank-``width`` slice."""
    if width == 0 or not z_rows:
        return ModuleEntry()
    if base.kind == INTEGERS_LOCALIZED:
        zlat = LocalLattice(z_rows, width, base.p)
        zbasis = [zlat.E[r] for r, _, _ in zlat.pivots]
        if not zbasis:
            return ModuleEntry()
        solver = LocalLattice(zbasis, width, base.p)
        coords = []
        for b in b_rows:
            x = solver.solve(b)
            if x is None:
                raise SemanticError("relation span escapes the cycle span")
            coords.append(x)
        cleared, _ = cleared_matrix(coords) if coords else ([], 1)
        invs = snf_invariants(cleared)
        factors = tuple(sorted(f for f in (p_part(v, base.p) for v in invs) if f > 1))
        return ModuleEntry(len(zbasis) - len(invs), factors)
    zlat = IntLattice([[int(x) for x in r] for r in z_rows], width)
    zbasis = zlat.basis()
    if not zbasis:
        return ModuleEntry()
    solver = IntLattice(zbasis, width)
    coords = []
    for b in b_rows:
        x = solver.solve([int(v) for v in b])
        if x is None:
            raise SemanticError("relation span escapes the cycle span")
        coords.append(x)
    invs = snf_invariants(coords)
    factors = tuple(sorted(v for v in invs if v > 1))
    return ModuleEntry(len(zbasis) - len(invs), factors)


# -- regular sequences ------------------------------------------------


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    first_failure: int | None
    failure_degree: int | None
    checked_up_to: int
    reason: str = ""


def _cycle_rows(map_rows, target_rel_rows, source_width, target_width, base):
    """Generators of {x : x * M in span(target relations)}."""
    if target_width == 0 or not map_rows:
        rows = [[1 if i == j else 0 for j in range(source_width)] for i in range(source_width)]
        return rows
    if base.kind == INTEGERS_LOCALIZED:
        mat, _ = cleared_matrix(map_rows)
        rel = cleared_rows(target_rel_rows)
    else:
        mat = [[int(x) for x in r] for r in map_rows]
        rel = [[int(x) for x in r] for r in target_rel_rows]
    stacked = mat + rel
    out = []
    for k in kernel_basis(stacked, target_width):
        x = k[: len(map_rows)]
        if any(x):
            out.append(list(x))
    return out


@lru_cache(maxsize=None)
def _regularity(ring: GradedRing, elems: tuple, window: int) -> RegularityReport:
    base = ring.base
    for k, x in enumerate(elems, start=1):
        prev = elems[: k - 1]
        if x.is_zero():
            return RegularityReport(False, k, None, window, "zero entry")
        dx = x.degree()
        for d in ring.even_degrees(window - dx):
            src = ideal_context(ring, prev, d)
            tgt = ideal_context(ring, prev, d + dx)
            tgt_index = {e: j for j, e in enumerate(tgt.exps)}
            rows = []
            used = []
            for m in src.exps:
                row = [base.zero()] * len(tgt.exps)
                fits = True
                for exps, c in x.terms.items():
                    prod = tuple(a + b for a, b in zip(m, exps))
                    if prod not in tgt_index:
                        fits = False
                        break
                    row[tgt_index[prod]] = base.add(row[tgt_index[prod]], c)
                if fits:
                    rows.append(row)
                    used.append(m)
            if not rows:
                continue
            kernel = _cycle_rows(rows, tgt.rows, len(used), len(tgt.exps), base)
            for vec in kernel:
                full = [0] * len(src.exps)
                for val, m in zip(vec, used):
                    full[src.exps.index(m)] = val
                if not src.contains_vector(full):
                    return RegularityReport(
                        False,
                        k,
                        d,
                        window,
                        "multiplication by entry %d has kernel in degree %d" % (k, d),
                    )
        if QuotientRing(ring, elems[:k]).is_trivial():
            return RegularityReport(
                False, k, None, window, "quotient vanishes after entry %d" % k
            )
    return RegularityReport(True, None, None, window, "")


def check_regular_sequence(ring: GradedRing, elements, window: int | None = None):
    """Degreewise verification that the sequence is regular inside the window."""
    elems = checked_sequence(ring, elements)
    top = ring.degree_window if window is None else min(window, ring.degree_window)
    return _regularity(ring, elems, top)


# -- Koszul complexes -------------------------------------------------


class KoszulComplex:
    """Exterior-basis Koszul complex of a sequence, tensored with R/K."""

    def __init__(self, ring: GradedRing, j_gens, k_gens=(), window: int | None = None):
        self.ring = ring
        self.j_gens = checked_sequence(ring, j_gens)
        self.k_gens = _gens(ring, k_gens)
        for g in self.j_gens:
            if g.is_zero():
                raise SemanticError("Koszul sequence entries must be nonzero")
        self.window = ring.degree_window if window is None else min(window, ring.degree_window)
        self.length = len(self.j_gens)
        self._degs = [g.degree() for g in self.j_gens]

    def subsets(self, i: int):
        return list(combinations(range(self.length), i))

    def shift(self, subset) -> int:
        return sum(self._degs[j] for j in subset)

    def chain_slice(self, i: int, q: int):
        """Basis of the internal degree-q slice of the i-th chain module."""
        if i < 0 or i > self.length:
            return []
        out = []
        for S in self.subsets(i):
            d = q - self.shift(S)
            if d > self.ring.degree_window:
                continue
            for m in self.ring.degree_exps(d):
                out.append((S, m))
        return out

    def relation_rows(self, i: int, q: int, slice_basis=None):
        """Coefficient-quotient relation rows for the (i, q) slice."""
        basis = self.chain_slice(i, q) if slice_basis is None else slice_basis
        index = {sm: j for j, sm in enumerate(basis)}
        rows = []
        by_subset: dict = {}
        for S, m in basis:
            by_subset.setdefault(S, []).append(m)
        for S in by_subset:
            d = q - self.shift(S)
            ctx = ideal_context(self.ring, self.k_gens, d)
            for row in ctx.rows:
                out = [self.ring.base.zero()] * len(basis)
                for val, m in zip(row, ctx.exps):
                    if val:
                        out[index[(S, m)]] = val
                rows.append(out)
        return rows

    def differential_rows(self, i: int, q: int, src_basis=None, tgt_basis=None):
        """Matrix rows of d_i on the degree-q slice, with truncation flag."""
        src = self.chain_slice(i, q) if src_basis is None else src_basis
        tgt = self.chain_slice(i - 1, q) if tgt_basis is None else tgt_basis
        index = {sm: j for j, sm in enumerate(tgt)}
        base = self.ring.base
        rows = []
        truncated = False
        for S, m in src:
            row = [base.zero()] * len(tgt)
            for t, j in enumerate(S):
                rest = tuple(x for x in S if x != j)
                sign = -1 if t % 2 else 1
                for exps, c in self.j_gens[j].terms.items():
                    prod = tuple(a + b for a, b in zip(m, exps))
                    key = (rest, prod)
                    if key not in index:
                        truncated = True
                        continue
                    val = base.mul(c, sign)
                    row[index[key]] = base.add(row[index[key]], val)
            rows.append(row)
        return rows, truncated

    def validate_squares(self, q: int) -> None:
        """d∘d lands in the relation span of the target slice."""
        base = self.ring.base
        for i in range(2, self.length + 1):
            mid = self.chain_slice(i - 1, q)
            tgt = self.chain_slice(i - 2, q)
            if not mid or not tgt:
                continue
            d_i, t1 = self.differential_rows(i, q, tgt_basis=mid)
            d_im1, t2 = self.differential_rows(i - 1, q, src_basis=mid, tgt_basis=tgt)
            rel = self.relation_rows(i - 2, q, slice_basis=tgt)
            lat = _solver_for(base, rel, len(tgt))
            for row in d_i:
                comp = [base.zero()] * len(tgt)
                for val, drow in zip(row, d_im1):
                    if not val:
                        continue
                    for j, v in enumerate(drow):
                        if v:
                            comp[j] = base.add(comp[j], base.mul(val, v))
                if any(comp) and not lat.contains(comp):
                    if t1 or t2:
                        raise WindowOverflow(
                            "Koszul differentials truncated; enlarge the window"
                        )
                    raise SemanticError("Koszul differential does not square to zero")

    def homology_entry(self, i: int, q: int) -> ModuleEntry:
        basis_i = self.chain_slice(i, q)
        if not basis_i:
            return ModuleEntry()
        basis_down = self.chain_slice(i - 1, q)
        basis_up = self.chain_slice(i + 1, q)
        base = self.ring.base
        d_i, truncated = self.differential_rows(
            i, q, src_basis=basis_i, tgt_basis=basis_down
        )
        rel_down = self.relation_rows(i - 1, q, slice_basis=basis_down)
        z_rows = _cycle_rows(d_i, rel_down, len(basis_i), len(basis_down), base)
        b_rows = []
        if basis_up:
            d_up, trunc_up = self.differential_rows(
                i + 1, q, src_basis=basis_up, tgt_basis=basis_i
            )
            truncated = truncated or trunc_up
            b_rows.extend(d_up)
        if truncated:
            raise WindowOverflow(
                "Koszul differential truncated at the window boundary"
            )
        b_rows.extend(self.relation_rows(i, q, slice_basis=basis_i))
        if base.kind == INTEGERS_LOCALIZED:
            b_rows = cleared_rows(b_rows)
        return quotient_invariants(z_rows, b_rows, len(basis_i), base)


def tor(ring: GradedRing, j_gens, k_gens, i: int, window: int | None = None):
    """Degreewise Tor_i(R/J, R/K) through the Koszul resolution of R/J."""
    if i < 0:
        raise SemanticError("homological degree must be >= 0")
    jseq = checked_sequence(ring, _gens(ring, j_gens))
    top = ring.degree_window if window is None else min(window, ring.degree_window)
    reg = check_regular_sequence(ring, jseq, top)
    if not reg.regular:
        raise NotVerifiedRegular(
            "sequence not verified regular (fails at entry %s)" % (reg.first_failure,)
        )
    cx = KoszulComplex(ring, jseq, _gens(ring, k_gens), top)
    degrees = list(ring.even_degrees(top))
    report = GradedModuleReport((degrees[0] if degrees else 0, top))
    if i > cx.length:
        return report
    for q in degrees:
        cx.validate_squares(q)
        entry = cx.homology_entry(i, q)
        if not entry.is_zero():
            report.entries[q] = entry
    return report


def _ideal_rows(ring, gens, q):
    return ideal_context(ring, gens, q).rows


def _product_gens(ring, a_gens, b_gens):
    out = []
    for g in a_gens:
        for h in b_gens:
            if g.degree() + h.degree() <= ring.degree_window:
                out.append(g * h)
    return tuple(out)


def _int_rows_for(base, rows):
    if base.kind == INTEGERS_LOCALIZED:
        return cleared_rows(rows)
    return [[int(x) for x in r] for r in rows]


def tor1_equals_intersection_over_product(
    ring: GradedRing, j_gens, k_gens, window: int | None = None
) -> bool:
    """Whether Tor_1 agrees degreewise with (J∩K)/(J·K) inside the window."""
    jseq = _gens(ring, j_gens)
    kseq = _gens(ring, k_gens)
    top = ring.degree_window if window is None else min(window, ring.degree_window)
    t1 = tor(ring, jseq, kseq, 1, top)
    prod = _product_gens(ring, jseq, kseq)
    base = ring.base
    for q in ring.even_degrees(top):
        rows_j = _int_rows_for(base, _ideal_rows(ring, jseq, q))
        rows_k = _int_rows_for(base, _ideal_rows(ring, kseq, q))
        width = len(ring.degree_exps(q))
        inter = lattice_intersection_rows(rows_j, rows_k, width)
        rows_p = _int_rows_for(base, _ideal_rows(ring, prod, q))
        entry = quotient_invariants(inter, rows_p, width, base)
        if entry != t1.entry(q):
            return False
    return True


def check_condition_ii(ring: GradedRing, ideals, window: int | None = None):
    """Product equals intersection for each ideal against its predecessors.

    Returns one boolean per index k = 2..n.
    """
    fams = [_gens(ring, i) for i in ideals]
    if not fams:
        raise EmptySequence("at least one ideal is required")
    for fam in fams:
        if not fam:
            raise EmptySequence("ideals must have at least one generator")
    top = ring.degree_window if window is None else min(window, ring.degree_window)
    base = ring.base
    results = []
    for k in range(2, len(fams) + 1):
        prev: tuple = ()
        for fam in fams[: k - 1]:
            prev = prev + fam
        tail = fams[k - 1]
        prod = _product_gens(ring, prev, tail)
        holds = True
        for q in ring.even_degrees(top):
            width = len(ring.degree_exps(q))
            rows_p = _int_rows_for(base, _ideal_rows(ring, prev, q))
            rows_t = _int_rows_for(base, _ideal_rows(ring, tail, q))
            inter = lattice_intersection_rows(rows_p, rows_t, width)
            if not inter:
                continue
            prod_rows = _ideal_rows(ring, prod, q)
            if base.kind == INTEGERS_LOCALIZED:
                lat = LocalLattice(prod_rows, width, base.p)
            else:
                lat = IntLattice([[int(x) for x in r] for r in prod_rows], width)
            for g in inter:
                if not lat.contains(g):
                    holds = False
                    break
            if not holds:
                break
        results.append(holds)
    return results


# -- conormal decomposition -------------------------------------------


@dataclass
class DecompositionDegree:
    degree: int
    module: ModuleEntry
    summands: list
    verified: bool


@dataclass
class ConormalDecomposition:
    """I/I² split into per-ideal summands, verified degreewise."""

    degrees: dict
    verified: bool

    def summand_entries(self, index: int):
        return {
            d: rec.summands[index] for d, rec in sorted(self.degrees.items())
        }


def decompose_conormal(ring: GradedRing, ideals, window: int | None = None):
    """Split I/I² into one summand per ideal, with verified inverse maps."""
    fams = [_gens(ring, i) for i in ideals]
    for fam in fams:
        if not fam:
            raise EmptySequence("ideals must have at least one generator")
    cond = check_condition_ii(ring, ideals, window)
    if not all(cond):
        bad = 2 + cond.index(False)
        raise ConditionIIFails(
            "product-intersection condition fails at ideal %d" % bad
        )
    top = ring.degree_window if window is None else min(window, ring.degree_window)
    base = ring.base
    allgens: tuple = ()
    owner = []
    for idx, fam in enumerate(fams):
        allgens = allgens + fam
        owner.extend([idx] * len(fam))
    prod_all = _product_gens(ring, allgens, allgens)
    degrees = {}
    all_ok = True
    for q in ring.even_degrees(top):
        width = len(ring.degree_exps(q))
        if width == 0:
            continue
        ctx_all = ideal_context(ring, allgens, q)
        z_all = _int_rows_for(base, ctx_all.rows)
        rel_all = _int_rows_for(base, _ideal_rows(ring, prod_all, q))
        a_entry = quotient_invariants(z_all, rel_all, width, base)
        lat_all = _solver_for(base, ctx_all.rows, width)
        if base.kind == INTEGERS_LOCALIZED:
            a_basis = [lat_all.E[r] for r, _, _ in lat_all.pivots]
        else:
            a_basis = IntLattice(z_all, width).basis()
        if not a_basis:
            if not a_entry.is_zero():
                all_ok = False
            continue
        summand_data = []
        for idx, fam in enumerate(fams):
            ctx_i = ideal_context(ring, fam, q)
            z_i = _int_rows_for(base, ctx_i.rows)
            reli_gens = _product_gens(ring, allgens, fam)
            rel_i = ideal_context(ring, reli_gens, q).rows
            entry = quotient_invariants(z_i, _int_rows_for(base, rel_i), width, base)
            if base.kind == INTEGERS_LOCALIZED:
                li = LocalLattice(ctx_i.rows, width, base.p)
                bi_basis = [li.E[r] for r, _, _ in li.pivots]
            else:
                bi_basis = IntLattice(z_i, width).basis()
            summand_data.append(
                {
                    "entry": entry,
                    "basis": bi_basis,
                    "solver": _solver_for(base, list(bi_basis) + list(rel_i), width),
                    "rel_lat": _solver_for(base, rel_i, width),
                }
            )
        # forward: split each A-basis vector into per-ideal parts
        ngens = len(allgens)
        forward = []
        ok = True
        for a in a_basis:
            tagged = ctx_all.solve_vector(a)
            if tagged is None:
                ok = False
                break
            parts = [[base.zero()] * width for _ in fams]
            for (kind, gi, m), c in tagged:
                if kind != "gen" or gi >= ngens:
                    continue
                g = allgens[gi]
                tgt = parts[owner[gi]]
                for exps, gc in g.terms.items():
                    prod = tuple(x + y for x, y in zip(m, exps))
                    j = ctx_all.exps.index(prod)
                    tgt[j] = base.add(tgt[j], base.mul(c, gc))
            coords = []
            for data, part in zip(summand_data, parts):
                sol = data["solver"].solve(part)
                if sol is None:
                    ok = False
                    break
                coords.append(list(sol[: len(data["basis"])]))
            if not ok:
                break
            forward.append(coords)
        if not ok:
            all_ok = False
            continue
        # backward: each summand basis vector is an element of I
        a_solver = _solver_for(base, list(a_basis), width)
        backward = []
        for data in summand_data:
            rows = []
            for b in data["basis"]:
                sol = a_solver.solve(b)
                if sol is None:
                    ok = False
                    break
                rows.append(list(sol))
            backward.append(rows)
            if not ok:
                break
        if not ok:
            all_ok = False
            continue
        rel_lat_all = _solver_for(base, rel_all, width)
        # backward ∘ forward = identity on A modulo I² relations
        for r, coords in enumerate(forward):
            a_coords = [base.zero()] * len(a_basis)
            for data, cvec, brows in zip(summand_data, coords, backward):
                for c, brow in zip(cvec, brows):
                    if not c:
                        continue
                    for jj, bc in enumerate(brow):
                        if bc:
                            a_coords[jj] = base.add(a_coords[jj], base.mul(c, bc))
            diff = [base.zero()] * width
            for jj, ac in enumerate(a_coords):
                delta = base.sub(ac, base.one()) if jj == r else ac
                if delta:
                    for col in range(width):
                        diff[col] = base.add(
                            diff[col], base.mul(delta, a_basis[jj][col])
                        )
            if any(x != 0 for x in diff) and not rel_lat_all.contains(diff):
                ok = False
                break
        if ok:
            # forward ∘ backward = identity on each summand modulo its relations
            for idx, (data, brows) in enumerate(zip(summand_data, backward)):
                for r, brow in enumerate(brows):
                    comp = [base.zero()] * len(data["basis"])
                    other_bad = [
                        [base.zero()] * len(sd["basis"]) for sd in summand_data
                    ]
                    for jj, bc in enumerate(brow):
                        if not bc:
                            continue
                        for sidx, cvec in enumerate(forward[jj]):
                            tgtv = comp if sidx == idx else other_bad[sidx]
                            for kk, c in enumerate(cvec):
                                if c:
                                    tgtv[kk] = base.add(tgtv[kk], base.mul(bc, c))
                    diff = [base.zero()] * width
                    for kk, c in enumerate(comp):
                        delta = base.sub(c, base.one()) if kk == r else c
                        if delta:
                            for col in range(width):
                                diff[col] = base.add(
                                    diff[col], base.mul(delta, data["basis"][kk][col])
                                )
                    if any(x != 0 for x in diff) and not data["rel_lat"].contains(diff):
                        ok = False
                        break
                    for sidx, vec in enumerate(other_bad):
                        if sidx == idx or not any(vec):
                            continue
                        off = [base.zero()] * width
                        for kk, c in enumerate(vec):
                            if c:
                                for col in range(width):
                                    off[col] = base.add(
                                        off[col],
                                        base.mul(c, summand_data[sidx]["basis"][kk][col]),
                                    )
                        if any(x != 0 for x in off) and not summand_data[sidx][
                            "rel_lat"
                        ].contains(off):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if not ok:
            all_ok = False
        degrees[q] = DecompositionDegree(
            q, a_entry, [d["entry"] for d in summand_data], ok
        )
    return ConormalDecomposition(degrees, all_ok)
