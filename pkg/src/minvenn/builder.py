"""Concentric assembly of near-minimum Venn diagram duals for n = 2^k.

The 2^d translates of the isometric 2n-cycle are nested concentrically in
the order given by a Hamiltonian path over the basis coefficients.  Between
consecutive rings, three or four cross edges are inserted depending on
whether the coefficient flipped at that step lies in a rho-run; inside each
run, one ring edge per consecutive pair is removed, merging short faces.
The resulting rotation system has exactly

    2 * 2^n / n - nu - 2 * lam - 2

faces, where nu and lam are the run count and total run length of the
driving path at rho = n/2 - 1.  Every traced face is checked against a
closed catalog of flip-sequence templates; a mismatch aborts the build.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bases import DEFAULT_CAP, basis_C, cross_edges_bits, ring_prefixes
from .hypercube import mask_of, span_bits
from .plane_graph import Face, PlaneDualGraph, crossing_count, trace_faces
from .runs import INCREASING, longrun_path, product_path, run_partition


class BuildError(ValueError):
    """The requested build is invalid or failed its internal checks."""


class FaceCatalogMismatch(BuildError):
    """A traced face does not match any expected flip-sequence template."""


@dataclass(frozen=True)
class BuildStep:
    """Action taken between rings gap+1 and gap+2 (gap is 0-based)."""

    gap: int
    s: int
    kind: str
    added: tuple[tuple[int, int], ...]
    removed: tuple[int, int] | None


@dataclass(frozen=True)
class BuildTrace:
    """Everything needed to replay a build: coefficient order, ring order, steps."""

    k: int
    n: int
    d: int
    rho: int
    tie_break: str
    coefficients: tuple[tuple[int, int], ...]
    sigma: tuple[int, ...]
    ring_bases: tuple[int, ...]
    steps: tuple[BuildStep, ...]


def coefficient_order(k: int) -> tuple[tuple[int, int], ...]:
    """Build order of the basis: odd chain {2i-1, 2i+1} first, doubled part after."""
    return tuple(e.elements() for e in basis_C(k).elements)


def driving_path(k: int):
    """Hamiltonian path over the 2^d coefficient tuples, rich in long runs."""
    if k == 3:
        return longrun_path(2)
    return product_path(k - 1, (1 << (k - 1)) - k - 1)


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def build_venn_dual(
    k: int,
    *,
    tie_break: str = "earlier",
    cap: int = DEFAULT_CAP,
    apply_removals: bool = True,
    validate: bool = True,
) -> tuple[PlaneDualGraph, BuildTrace]:
    """Build the dual graph of an n-Venn diagram for n = 2^k, k >= 3.

    apply_removals=False stops after the cross edge insertion, yielding the
    intermediate graph with nu + lam more faces.
    """
    if k < 3:
        raise BuildError(f"need k >= 3, got {k}")
    n = 1 << k
    if n > cap:
        raise BuildError(f"n={n} exceeds the materialization cap {cap}")
    d = n - k - 1
    rho = n // 2 - 1

    path = driving_path(k)
    if path.flips.n != d:
        raise BuildError(f"driving path lives in Q_{path.flips.n}, expected Q_{d}")
    sigma = path.flips.entries
    parts = run_partition(path.flips, rho, tie_break=tie_break)

    coeffs = coefficient_order(k)
    cmasks = [mask_of(p) for p in coeffs]
    xs = [0]
    for s in sigma:
        xs.append(xs[-1] ^ cmasks[s - 1])
    nrings = 1 << d
    if len(xs) != nrings or len(set(xs)) != nrings:
        raise BuildError("coefficient path does not enumerate every ring once")

    cross_in: dict[int, int] = {}
    cross_out: dict[int, int] = {}
    removed: set[tuple[int, int]] = set()
    steps: list[BuildStep] = []
    for t, s in enumerate(sigma):
        x = xs[t]
        if s <= rho:
            a = 2 * s - 1
            orient = parts.runs[parts.run_index[t]].orientation
            kind = "E_down" if orient == INCREASING else "E_up"
            edges = cross_edges_bits(x, a, a + 2, kind, n)
        else:
            a, b = coeffs[s - 1]
            kind = "E"
            edges = cross_edges_bits(x, a, b, kind, n)
        for u, v in edges:
            if u in cross_in or v in cross_out:
                raise BuildError(f"cross edge endpoint collision at gap {t}")
            cross_in[u] = v
            cross_out[v] = u

        removal = None
        if apply_removals and t >= 1:
            r_prev, r_cur = parts.run_index[t - 1], parts.run_index[t]
            if r_prev is not None and r_prev == r_cur:
                if parts.runs[r_cur].orientation == INCREASING:
                    a_rm = 2 * s - 1
                else:
                    a_rm = 2 * s + 1
                removal = _edge_key(x ^ ((1 << (a_rm - 1)) - 1), x ^ ((1 << a_rm) - 1))
                removed.add(removal)
        steps.append(BuildStep(gap=t, s=s, kind=kind, added=edges, removed=removal))

    prefixes = ring_prefixes(n)
    two_n = 2 * n
    rotation: dict[int, list[int]] = {}
    layout: dict[int, tuple[int, int]] = {}
    for ri in range(nrings):
        ring = [xs[ri] ^ m for m in prefixes]
        for p, v in enumerate(ring):
            layout[v] = (ri + 1, p)
            # Cyclic order: successor on the ring, inward cross edge,
            # predecessor on the ring, outward cross edge.
            order = []
            nxt = ring[(p + 1) % two_n]
            prv = ring[(p - 1) % two_n]
            if _edge_key(v, nxt) not in removed:
                order.append(nxt)
            if v in cross_in:
                order.append(cross_in[v])
            if _edge_key(v, prv) not in removed:
                order.append(prv)
            if v in cross_out:
                order.append(cross_out[v])
            rotation[v] = order

    g = PlaneDualGraph(
        n=n,
        rotation=rotation,
        outer_edge=(xs[0], xs[0] ^ 1),
        construction=(k, 0),
        layout=layout,
    )
    trace = BuildTrace(
        k=k,
        n=n,
        d=d,
        rho=rho,
        tie_break=tie_break,
        coefficients=coeffs,
        sigma=sigma,
        ring_bases=tuple(xs),
        steps=tuple(steps),
    )
    if validate:
        check_face_catalog(g)
        expected = 2 + 4 * (nrings - 1) - parts.covered
        if apply_removals:
            expected -= parts.lam
        got = crossing_count(g)
        if got != expected:
            raise BuildError(f"traced {got} faces, run statistics demand {expected}")
    return g, trace


def partition_preview_graph(k: int, cap: int = DEFAULT_CAP) -> PlaneDualGraph:
    """Bare concentric cycle partition (no cross edges), for drawing only.

    The result is disconnected for k >= 2, so it is not a Venn diagram dual;
    it exists to preview the ring layout.
    """
    if k < 1:
        raise BuildError(f"need k >= 1, got {k}")
    n = 1 << k
    if n > cap:
        raise BuildError(f"n={n} exceeds the materialization cap {cap}")
    bases = span_bits([e.bits for e in basis_C(k).elements])
    prefixes = ring_prefixes(n)
    two_n = 2 * n
    rotation: dict[int, list[int]] = {}
    layout: dict[int, tuple[int, int]] = {}
    for ri, base in enumerate(bases):
        ring = [base ^ m for m in prefixes]
        for p, v in enumerate(ring):
            layout[v] = (ri + 1, p)
            rotation[v] = [ring[(p + 1) % two_n], ring[(p - 1) % two_n]]
    return PlaneDualGraph(
        n=n,
        rotation=rotation,
        outer_edge=(bases[0], bases[0] ^ 1),
        construction=None,
        layout=layout,
    )


# ---------------------------------------------------------------------------
# Face catalog
# ---------------------------------------------------------------------------
#
# Every face a build can produce has one of a handful of flip-sequence
# shapes, compared as cyclic words up to rotation and reflection:
#
#   ring        (1, ..., n, 1, ..., n), the outermost and innermost faces
#   merged-run  chains of short faces glued along a run; one short face is
#               (a, a+1, a, a+2, a+1, a+2), a chain of b of them has length 4b+2
#   pair-short  (a, ..., b-1, a, b, b-1, ..., a+1, b) between rings differing
#               in a generic pair {a, b}
#   pair-long   (b, ..., n, 1, ..., a-1, b, a, a-1, ..., 1, n, ..., b+1, a)
#   run-long    the two 2n-faces flanking a short face
#   doubled     (permutation of [N-1], N, permutation of [N-1], N) created
#               when a doubling step introduces direction N


def canonical_cycle(word) -> tuple[int, ...]:
    """Smallest rotation of the word or its reversal, as a tuple."""
    w = tuple(word)
    length = len(w)
    best = None
    for cand_base in (w, w[::-1]):
        doubled = cand_base + cand_base
        for i in range(length):
            cand = doubled[i : i + length]
            if best is None or cand < best:
                best = cand
    return best


def _ring_template(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1)) * 2


def _merged_template(a: int, blocks: int) -> tuple[int, ...]:
    word = [a, a + 1, a]
    for t in range(1, blocks):
        word += [a + 2 * t + 1, a + 2 * t]
    word += [a + 2 * blocks, a + 2 * blocks - 1, a + 2 * blocks]
    for t in range(blocks - 2, -1, -1):
        word += [a + 2 * t + 1, a + 2 * t + 2]
    return tuple(word)


def _pair_short_template(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b)) + (a, b) + tuple(range(b - 1, a, -1)) + (b,)


def _pair_long_template(a: int, b: int, n: int) -> tuple[int, ...]:
    return (
        tuple(range(b, n + 1))
        + tuple(range(1, a))
        + (b, a)
        + tuple(range(a - 1, 0, -1))
        + tuple(range(n, b, -1))
        + (a,)
    )


def _run_long_templates(a: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    t1 = (
        tuple(range(a + 2, n + 1))
        + tuple(range(1, a))
        + (a + 1, a + 2)
        + tuple(range(a + 1, 0, -1))
        + tuple(range(n, a + 2, -1))
        + (a,)
    )
    t2 = (
        tuple(range(a, n + 1))
        + tuple(range(1, a))
        + (a + 2,)
        + tuple(range(a, 0, -1))
        + tuple(range(n, a + 2, -1))
        + (a + 1,)
    )
    return t1, t2


@lru_cache(maxsize=None)
def face_catalog(n: int) -> dict[tuple[int, ...], str]:
    """Canonical words of every face shape a power-of-two build can produce."""
    catalog: dict[tuple[int, ...], str] = {}
    for a in range(1, n - 1):
        t1, t2 = _run_long_templates(a, n)
        catalog[canonical_cycle(t1)] = "run-long"
        catalog[canonical_cycle(t2)] = "run-long"
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            catalog[canonical_cycle(_pair_short_template(a, b))] = "pair-short"
            catalog[canonical_cycle(_pair_long_template(a, b, n))] = "pair-long"
    for blocks in range(1, (n - 1) // 2 + 1):
        for a in range(1, n - 2 * blocks + 1):
            catalog[canonical_cycle(_merged_template(a, blocks))] = "merged-run"
    catalog[canonical_cycle(_ring_template(n))] = "ring"
    return catalog


def classify_face(face: Face, base_n: int) -> str | None:
    """Template name of a face, or None if it matches nothing.

    Faces whose largest direction exceeds base_n must come from a doubling
    step; their shape is checked structurally instead of via the catalog.
    """
    word = face.flips
    top = max(word)
    if top > base_n:
        if len(word) != 2 * top or word.count(top) != 2:
            return None
        i = word.index(top)
        j = word.index(top, i + 1)
        half1 = word[i + 1 : j]
        half2 = word[j + 1 :] + word[:i]
        want = frozenset(range(1, top))
        if (
            len(half1) == top - 1
            and len(half2) == top - 1
            and set(half1) == want
            and set(half2) == want
        ):
            return "doubled"
        return None
    return face_catalog(base_n).get(canonical_cycle(word))


def check_face_catalog(g: PlaneDualGraph) -> dict[str, int]:
    """Classify every traced face; raise if any face matches no template."""
    base_n = (1 << g.construction[0]) if g.construction else g.n
    counts: dict[str, int] = {}
    for idx, f in enumerate(trace_faces(g)):
        name = classify_face(f, base_n)
        if name is None:
            raise FaceCatalogMismatch(
                f"face {idx} (length {len(f)}) with flips {f.flips} matches no template"
            )
        counts[name] = counts.get(name, 0) + 1
    return counts
