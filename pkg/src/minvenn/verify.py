"""Independent validation of dual graphs.

A valid dual graph of an n-Venn diagram must (1) span all 2^n hypercube
vertices, (2) be a plane graph in which every face of length 2L carries
exactly two edges of L distinct directions, and (3) induce connected
subgraphs on the inside and outside of every curve.  Planarity of the
explicit rotation system is certified by Euler's formula on a connected
graph; no general planarity test is involved.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .plane_graph import PlaneDualGraph, rotation_problems, trace_faces


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class VerificationReport:
    n: int
    crossings: int
    lower_bound: int
    monotone_reference: int
    expected_crossings: int | None
    face_histogram: dict[int, int]
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "crossings": self.crossings,
            "lower_bound": self.lower_bound,
            "monotone_reference": self.monotone_reference,
            "expected_crossings": self.expected_crossings,
            "face_histogram": {str(k): v for k, v in sorted(self.face_histogram.items())},
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "passed": self.passed,
        }

    def format_text(self) -> str:
        lines = [f"dual graph over Q_{self.n}: {self.crossings} crossings"]
        lines.append(
            f"  lower bound {self.lower_bound}, monotone reference {self.monotone_reference}"
            + (
                f", construction formula {self.expected_crossings}"
                if self.expected_crossings is not None
                else ""
            )
        )
        hist = " ".join(f"{length}:{cnt}" for length, cnt in sorted(self.face_histogram.items()))
        lines.append(f"  face lengths {hist}")
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f" [{c.witness}]" if c.witness else ""
            lines.append(f"  {status}  {c.name}{suffix}")
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


class UnionFind:
    def __init__(self, items) -> None:
        self.parent = {x: x for x in items}
        self.count = len(self.parent)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx
            self.count -= 1


def lower_bound(n: int) -> int:
    """Minimum crossing count of any n-Venn diagram: ceil((2^n - 2) / (n - 1))."""
    if n < 2:
        raise ValueError(f"lower bound needs n >= 2, got {n}")
    return -((2 - (1 << n)) // (n - 1))


def monotone_reference(n: int) -> int:
    """Minimum crossings among monotone diagrams, reported for comparison only.

    The n = 1 row is 0 by table convention, not comb(1, 0) = 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return 0
    return comb(n, n // 2)


def expected_crossings(k: int, m: int) -> int:
    """Exact crossing count of the (k, m) construction, from the closed form.

    Integer arithmetic throughout; the k >= 4 expression combines the run
    statistics of the driving path scaled from dimension 2^(k-1).
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    n = 1 << k
    if not 0 <= m < n:
        raise ValueError(f"need 0 <= m < 2^k, got m={m}")
    if k == 3:
        base = 2 * ((1 << 8) // 8) - 6 - 2 * 8 - 2  # nu=6, lam=8 from the Q_4 path
    else:
        nhat = n // 2
        mhat = nhat - k - 1
        q, r = divmod(1 << nhat, nhat)
        assert r == 0
        nu = (17 * q // 8 - 4) << mhat
        lam = ((1 << nhat) - 25 * q // 8 + 4) << mhat
        assert 17 * q % 8 == 0 and 25 * q % 8 == 0
        base = 2 * ((1 << n) // n) - nu - 2 * lam - 2
    return base << m


def face_condition_ok(flips, n: int) -> bool:
    """Whether a face walk has length 2L, 2 <= L <= n, with L directions twice each."""
    length = len(flips)
    if length == 0 or length % 2:
        return False
    ell = length // 2
    if not 2 <= ell <= n:
        return False
    counts = Counter(flips)
    return len(counts) == ell and all(c == 2 for c in counts.values())


def check_spanning(g: PlaneDualGraph) -> CheckResult:
    """All 2^n subsets present as vertices."""
    have = set(g.rotation)
    full = 1 << g.n
    if len(have) == full and all(0 <= v < full for v in have):
        return CheckResult("spanning", True)
    missing = next((v for v in range(full) if v not in have), None)
    if missing is not None:
        return CheckResult("spanning", False, f"vertex {missing:#x} missing")
    stray = next(v for v in sorted(have) if not 0 <= v < full)
    return CheckResult("spanning", False, f"vertex {stray:#x} outside Q_{g.n}")


def check_connected(g: PlaneDualGraph) -> CheckResult:
    uf = UnionFind(g.rotation)
    for u, nbrs in g.rotation.items():
        for v in nbrs:
            uf.union(u, v)
    if uf.count == 1:
        return CheckResult("connected", True)
    return CheckResult("connected", False, f"{uf.count} components")


def check_euler(g: PlaneDualGraph) -> CheckResult:
    v = g.vertex_count
    e = g.edge_count
    f = len(trace_faces(g))
    if v - e + f == 2:
        return CheckResult("euler", True)
    return CheckResult("euler", False, f"V-E+F = {v}-{e}+{f} = {v - e + f}")


def check_edge_conservation(g: PlaneDualGraph) -> CheckResult:
    """Face tracing must consume each directed edge exactly once."""
    directed = 2 * g.edge_count
    traced = sum(len(f) for f in trace_faces(g))
    distinct = len(g.edge_face_map())
    if traced == directed and distinct == directed:
        return CheckResult("edge-conservation", True)
    return CheckResult(
        "edge-conservation",
        False,
        f"{traced} face steps over {distinct} directed edges, expected {directed}",
    )


def check_faces(g: PlaneDualGraph) -> CheckResult:
    """Every face has even length 2L with exactly two edges of L directions."""
    for idx, f in enumerate(trace_faces(g)):
        if not face_condition_ok(f.flips, g.n):
            return CheckResult(
                "faces-direction-pairs", False, f"face {idx} with flips {f.flips}"
            )
    return CheckResult("faces-direction-pairs", True)


def face_cycle(g: PlaneDualGraph, j: int):
    """Cyclic order of faces along curve j, or (None, problem).

    Returns (cycle, None) where cycle is a list of (face_index, edge) pairs;
    crossing `edge` leads from that face to the next one in the list.
    """
    faces = trace_faces(g)
    edge_key = lambda u, v: (u, v) if u < v else (v, u)
    incident: dict[int, list[tuple[int, int]]] = {}
    by_edge: dict[tuple[int, int], list[int]] = {}
    for idx, f in enumerate(faces):
        for t, d in enumerate(f.flips):
            if d != j:
                continue
            e = edge_key(f.vertices[t], f.vertices[(t + 1) % len(f)])
            incident.setdefault(idx, []).append(e)
            by_edge.setdefault(e, []).append(idx)
    if not incident:
        return None, f"direction {j} appears on no face"
    for idx, es in incident.items():
        if len(es) != 2 or es[0] == es[1]:
            return None, f"face {idx} carries {len(es)} edges of direction {j}"
    for e, fs in by_edge.items():
        if len(fs) != 2 or fs[0] == fs[1]:
            return None, f"edge {e} of direction {j} borders faces {fs}"

    start = min(incident)
    cycle = []
    cur_face = start
    cur_edge = min(incident[start])
    while True:
        cycle.append((cur_face, cur_edge))
        nxt_face = next(fi for fi in by_edge[cur_edge] if fi != cur_face)
        nxt_edge = next(e for e in incident[nxt_face] if e != cur_edge)
        cur_face, cur_edge = nxt_face, nxt_edge
        if (cur_face, cur_edge) == (start, min(incident[start])):
            break
        if len(cycle) > len(incident):
            return None, f"direction {j} face walk does not close"
    if len(cycle) != len(incident):
        return None, (
            f"direction {j} splits into several closed curves "
            f"({len(cycle)} of {len(incident)} faces reached)"
        )
    return cycle, None


def check_curves(g: PlaneDualGraph) -> CheckResult:
    """Inside and outside of every curve connected; each curve one closed cycle."""
    n = g.n
    for j in range(1, n + 1):
        jbit = 1 << (j - 1)
        for side_name, keep in (("inside", True), ("outside", False)):
            side = [v for v in g.rotation if bool(v & jbit) == keep]
            uf = UnionFind(side)
            member = set(side)
            for u in side:
                for v in g.rotation[u]:
                    if v in member:
                        uf.union(u, v)
            if uf.count != 1:
                return CheckResult(
                    "curves-simple",
                    False,
                    f"direction {j}: {side_name} splits into {uf.count} components",
                )
        _cycle, problem = face_cycle(g, j)
        if problem:
            return CheckResult("curves-simple", False, problem)
    return CheckResult("curves-simple", True)


def verify_graph(g: PlaneDualGraph) -> VerificationReport:
    """Run the full battery of structural checks and collect a report."""
    n = g.n
    bound = lower_bound(n) if n >= 2 else 0
    monotone = monotone_reference(n)
    expected = None
    if g.construction is not None:
        expected = expected_crossings(*g.construction)

    problems = rotation_problems(g.rotation, n)
    if problems:
        return VerificationReport(
            n=n,
            crossings=0,
            lower_bound=bound,
            monotone_reference=monotone,
            expected_crossings=expected,
            face_histogram={},
            checks=[CheckResult("rotation-consistent", False, problems[0])],
        )

    faces = trace_faces(g)
    histogram = dict(Counter(len(f) for f in faces))
    checks = [
        CheckResult("rotation-consistent", True),
        check_spanning(g),
        check_connected(g),
        check_euler(g),
        check_edge_conservation(g),
        check_faces(g),
        check_curves(g),
    ]
    crossings = len(faces)
    checks.append(
        CheckResult(
            "crossings-at-least-lower-bound",
            crossings >= bound,
            None if crossings >= bound else f"{crossings} < {bound}",
        )
    )
    if expected is not None:
        checks.append(
            CheckResult(
                "crossings-match-formula",
                crossings == expected,
                None if crossings == expected else f"{crossings} != {expected}",
            )
        )
    return VerificationReport(
        n=n,
        crossings=crossings,
        lower_bound=bound,
        monotone_reference=monotone,
        expected_crossings=expected,
        face_histogram=histogram,
        checks=checks,
    )
