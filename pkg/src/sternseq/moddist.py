"""Distribution of consecutive Stern pairs modulo d.

The pair S_d(n) = (s(n) mod d, s(n+1) mod d) always satisfies
gcd(i, j, d) = 1, and moves by one of two affine steps when n doubles:

    L(i, j) = (i, i + j)     since S_d(2n)   = L(S_d(n)),
    R(i, j) = (i + j, j)     since S_d(2n+1) = R(S_d(n)).

Walks of length r in the resulting 2-out digraph count exactly how
often each pair occurs in the block [2^r m, 2^r (m+1)), which makes
occurrence counts over any interval computable from O(log N) matrix
rows.  The adjacency matrix's minimal polynomial (found by exact
elimination) controls the convergence rate toward the limiting
densities.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp
from mpmath.libmp import NoConvergence

from .core import ResourceLimitError, block_decompose, stern_table
from .exactalg import (identity, mat_mul, mat_pow, poly_divmod, poly_eval,
                       squarefree_factors)

DEFAULT_MATRIX_CAP = 4096
DEFAULT_SCAN_CAP = 1 << 22

ResiduePair = tuple[int, int]
IntMatrix = list[list[int]]
IntPolynomial = list[int]


class NonConvergenceError(Exception):
    """Numeric root refinement failed to reach the requested accuracy."""


def _check_modulus(d: int):
    if d < 2:
        raise ValueError("modulus must be at least 2")


@lru_cache(maxsize=None)
def _prime_factors(d: int) -> tuple[int, ...]:
    out = []
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def left_step(pair: ResiduePair, d: int) -> ResiduePair:
    """Pair step under n -> 2n."""
    i, j = pair
    return (i, (i + j) % d)


def right_step(pair: ResiduePair, d: int) -> ResiduePair:
    """Pair step under n -> 2n+1."""
    i, j = pair
    return ((i + j) % d, j)


def feasible_pairs(d: int) -> list[ResiduePair]:
    """All (i, j) with 0 <= i, j < d and gcd(i, j, d) = 1, in lex order."""
    _check_modulus(d)
    return [(i, j) for i in range(d) for j in range(d)
            if math.gcd(i, j, d) == 1]


def pair_counts(d: int) -> tuple[int, list[int]]:
    """(N_d, per-first-coordinate counts) from the product formulas.

    N_d = d^2 * prod (p^2 - 1)/p^2 over primes p | d, and row i has
    d * prod_{p | gcd(i, d)} (p - 1)/p feasible partners.
    """
    _check_modulus(d)
    total = d * d
    for p in _prime_factors(d):
        total = total * (p * p - 1) // (p * p)
    rows = []
    for i in range(d):
        c = d
        for p in _prime_factors(d):
            if i % p == 0:
                c = c * (p - 1) // p
        rows.append(c)
    return total, rows


def s_mod_pair(n: int, d: int) -> ResiduePair:
    """(s(n) mod d, s(n+1) mod d) by the pair scan, reduced each step."""
    _check_modulus(d)
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return (0, 1 % d)
    a = b = 1 % d
    for bit in bin(n)[3:]:
        if bit == "0":
            b = (a + b) % d
        else:
            a = (a + b) % d
    return (a, b)


@dataclass(frozen=True)
class PairGraph:
    """The feasible-pair digraph with its L and R edge maps.

    vertices are in lexicographic order; left/right give successor
    vertex indices; by_first groups vertex indices by first coordinate.
    """

    d: int
    vertices: tuple[tuple[int, int], ...]
    index: dict
    left: tuple[int, ...]
    right: tuple[int, ...]
    by_first: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def graph(d: int) -> PairGraph:
    verts = tuple(feasible_pairs(d))
    index = {v: i for i, v in enumerate(verts)}
    left = tuple(index[left_step(v, d)] for v in verts)
    right = tuple(index[right_step(v, d)] for v in verts)
    groups = [[] for _ in range(d)]
    for pos, (i, _) in enumerate(verts):
        groups[i].append(pos)
    return PairGraph(d, verts, index, left, right,
                     tuple(tuple(g) for g in groups))


def adjacency(d: int, max_order: int = DEFAULT_MATRIX_CAP) -> IntMatrix:
    """0-1 adjacency matrix of the pair digraph, vertices in lex order.

    Row alpha has ones at columns L(alpha) and R(alpha); these never
    coincide, so every row sums to 2 (and so does every column).
    """
    total, _ = pair_counts(d)
    if total > max_order:
        raise ResourceLimitError(
            f"pair graph mod {d} has {total} vertices, cap is {max_order}")
    g = graph(d)
    n = len(g.vertices)
    M = [[0] * n for _ in range(n)]
    for v in range(n):
        M[v][g.left[v]] = 1
        M[v][g.right[v]] = 1
    return M


def walk_counts(d: int, r: int,
                max_order: int = DEFAULT_MATRIX_CAP) -> IntMatrix:
    """Number of length-r walks between every vertex pair: the r-th
    power of the adjacency matrix, computed exactly."""
    if r < 0:
        raise ValueError("walk length must be nonnegative")
    return mat_pow(adjacency(d, max_order=max_order), r)


def _walk_row(d: int, alpha: ResiduePair, r: int) -> list[int]:
    # row of the r-th matrix power indexed by alpha, by propagating a
    # unit row vector through the graph (O(r * N_d), no matrix product)
    g = graph(d)
    vec = [0] * len(g.vertices)
    vec[g.index[alpha]] = 1
    for _ in range(r):
        nxt = [0] * len(vec)
        for pos, c in enumerate(vec):
            if c:
                nxt[g.left[pos]] += c
                nxt[g.right[pos]] += c
        vec = nxt
    return vec


def count_block(d: int, gamma: ResiduePair, U1: int, U2: int,
                threads: int = 1) -> int:
    """Occurrences of the pair gamma among S_d(n), U1 <= n < U2.

    Oracle-grade direct scan; each index is evaluated independently by
    the bit scan, so the cost is O((U2 - U1) log U2).
    """
    _check_modulus(d)
    if U1 < 0 or U1 >= U2:
        raise ValueError("need 0 <= U1 < U2")
    chunks = _ranges(U1, U2, threads)

    def one(bounds):
        lo, hi = bounds
        return sum(1 for m in range(lo, hi) if s_mod_pair(m, d) == gamma)

    return sum(_map_chunks(one, chunks, threads))


def _ranges(lo, hi, threads, chunk=1 << 16):
    if threads <= 1:
        return [(lo, hi)]
    return [(a, min(a + chunk, hi)) for a in range(lo, hi, chunk)]


def _map_chunks(fn, chunks, threads):
    if threads <= 1 or len(chunks) == 1:
        return [fn(c) for c in chunks]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, chunks))


def count_T(N: int, d: int, i: int, method: str = "auto",
            scan_cap: int = DEFAULT_SCAN_CAP, threads: int = 1) -> int:
    """T(N; d, i) = #{ n < N : s(n) == i (mod d) }.

    method "scan" builds the table of s mod d directly (O(N)); method
    "blocks" decomposes [0, N) into dyadic blocks and sums walk-count
    rows (O(log^2 N) vector steps).  The two must agree bit for bit.
    """
    _check_modulus(d)
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N == 0:
        return 0
    i %= d
    if method == "auto":
        method = "scan" if N <= (1 << 16) else "blocks"
    if method == "scan":
        if N > scan_cap:
            raise ResourceLimitError(
                f"direct scan of {N} values exceeds cap {scan_cap}")
        table = stern_table(N - 1, mod=d)
        if threads > 1:
            chunks = _ranges(0, N, threads)
            return sum(_map_chunks(
                lambda b: table[b[0]:b[1]].count(i), chunks, threads))
        return table.count(i)
    if method != "blocks":
        raise ValueError(f"unknown method {method!r}")
    g = graph(d)
    total = 0
    for r, m in block_decompose(N):
        row = _walk_row(d, s_mod_pair(m, d), r)
        total += sum(row[pos] for pos in g.by_first[i])
    return total


def density(d: int, i: int) -> Fraction:
    """Limiting density of indices with s(n) == i (mod d).

    (1/d) * prod over p | d of: p/(p+1) if p | i, else p^2/(p^2-1).
    """
    _check_modulus(d)
    i %= d
    out = Fraction(1, d)
    for p in _prime_factors(d):
        if i % p == 0:
            out *= Fraction(p, p + 1)
        else:
            out *= Fraction(p * p, p * p - 1)
    return out


def index_I(d: int) -> int:
    """1 / density(d, 0) = d * prod (p+1)/p; always an integer."""
    _check_modulus(d)
    out = d
    for p in _prime_factors(d):
        out = out * (p + 1) // p
    return out


@dataclass(frozen=True)
class DistTable:
    """Counts T(N; d, i) for all residues, with exact densities.

    pair_counts, when present, holds occurrence counts of each feasible
    pair over [0, N).
    """

    d: int
    N: int
    counts: tuple[int, ...]
    densities: tuple[Fraction, ...]
    pair_counts: dict | None = None

    def deviations(self) -> list[float]:
        return [abs(c / self.N - float(den))
                for c, den in zip(self.counts, self.densities)]


def dist_table(N: int, d: int, method: str = "auto",
               include_pairs: bool = False,
               scan_cap: int = DEFAULT_SCAN_CAP) -> DistTable:
    """Residue distribution of s(n) mod d over n < N, one pass."""
    _check_modulus(d)
    if N < 1:
        raise ValueError("N must be positive")
    if method == "auto":
        method = "scan" if N <= (1 << 16) else "blocks"
    g = graph(d)
    if method == "scan":
        if N > scan_cap:
            raise ResourceLimitError(
                f"direct scan of {N} values exceeds cap {scan_cap}")
        table = stern_table(N, mod=d)
        counts = tuple(table[:N].count(i) for i in range(d))
        pairs = None
        if include_pairs:
            pairs = {v: 0 for v in g.vertices}
            for n in range(N):
                pairs[(table[n], table[n + 1])] += 1
    elif method == "blocks":
        per_vertex = [0] * len(g.vertices)
        for r, m in block_decompose(N):
            row = _walk_row(d, s_mod_pair(m, d), r)
            for pos, c in enumerate(row):
                per_vertex[pos] += c
        counts = tuple(sum(per_vertex[pos] for pos in g.by_first[i])
                       for i in range(d))
        pairs = None
        if include_pairs:
            pairs = {v: per_vertex[pos] for pos, v in enumerate(g.vertices)}
    else:
        raise ValueError(f"unknown method {method!r}")
    dens = tuple(density(d, i) for i in range(d))
    return DistTable(d, N, counts, dens, pairs)


def minimal_polynomial(d: int,
                       max_order: int = DEFAULT_MATRIX_CAP) -> IntPolynomial:
    """Monic minimal polynomial of the adjacency matrix, ascending.

    Vectorises I, M, M^2, ... and reduces each new power against an
    echelon basis by exact rational elimination; the first dependency
    is the minimal polynomial, monic with integer coefficients.
    """
    M = adjacency(d, max_order=max_order)
    n = len(M)
    echelon = []  # (pivot position, reduced vector, combination)
    power = identity(n)
    k = 0
    while True:
        vec = [Fraction(e) for row in power for e in row]
        combo = [Fraction(0)] * k + [Fraction(1)]
        for pivot, evec, ecombo in echelon:
            c = vec[pivot]
            if c:
                f = c / evec[pivot]
                for pos, ev in enumerate(evec):
                    if ev:
                        vec[pos] -= f * ev
                for pos, ec in enumerate(ecombo):
                    if ec:
                        combo[pos] -= f * ec
        pivot = next((pos for pos, v in enumerate(vec) if v), None)
        if pivot is None:
            assert all(c.denominator == 1 for c in combo)
            return [int(c) for c in combo]
        echelon.append((pivot, vec, combo))
        power = mat_mul(power, M)
        k += 1


@dataclass(frozen=True)
class RootValue:
    """One root of the minimal polynomial.

    exact roots (0 and 2) are split off by exact division and carry a
    zero residual; numeric roots report |f(z)| at the refined value.
    """

    value: complex
    multiplicity: int
    residual: float
    exact: bool


@dataclass(frozen=True)
class SpectralReport:
    d: int
    minimal_poly: tuple[int, ...]
    rho: float
    sigma: int
    multiplicity: int
    tau: float
    roots: tuple[RootValue, ...]


def _refined_roots(int_coeffs_asc, digits, max_steps):
    desc = list(reversed(int_coeffs_asc))
    last_err = None
    for dps, steps in ((digits, max_steps), (2 * digits + 20, 4 * max_steps)):
        with mp.workdps(dps):
            try:
                roots, err = mp.polyroots(desc, maxsteps=steps, error=True)
            except NoConvergence:
                continue
            last_err = err
            if err < mp.mpf(10) ** (-digits // 2):
                return roots
    raise NonConvergenceError(
        f"root refinement stalled (last error bound {last_err})")


def spectral(d: int, max_order: int = DEFAULT_MATRIX_CAP,
             digits: int = 40, max_steps: int = 120) -> SpectralReport:
    """Roots of the minimal polynomial with the derived decay data.

    The root 2 is removed by exact division (and must be simple), as
    are roots at 0; remaining roots come from the squarefree factors,
    refined to at least `digits`/2 correct digits.  rho is the largest
    modulus among non-2 roots, sigma + 1 the largest multiplicity at
    that modulus, and tau = max(0, log2 rho) the decay exponent.
    """
    f = minimal_polynomial(d, max_order=max_order)
    rest = [Fraction(c) for c in f]
    two_mult = 0
    while True:
        q, r = poly_divmod(rest, [-2, 1])
        if r:
            break
        rest = q
        two_mult += 1
    if two_mult != 1:
        raise NonConvergenceError(
            f"expected 2 to be a simple root, found multiplicity {two_mult}")
    zero_mult = 0
    while rest and rest[0] == 0:
        rest = rest[1:]
        zero_mult += 1
    roots = [RootValue(complex(2, 0), 1, 0.0, True)]
    if zero_mult:
        roots.append(RootValue(complex(0, 0), zero_mult, 0.0, True))
    desc_f = list(reversed(f))
    for factor, mult in squarefree_factors(rest):
        ints = [int(c) for c in poly_clear(factor)]
        for z in _refined_roots(ints, digits, max_steps):
            with mp.workdps(2 * digits):
                res = abs(mp.polyval(desc_f, z))
            roots.append(RootValue(complex(float(z.real), float(z.imag)),
                                   mult, float(res), False))
    roots.sort(key=lambda rv: (rv.value.real, rv.value.imag))
    non_two = [rv for rv in roots if not (rv.exact and rv.value == 2)]
    rho = max((abs(rv.value) for rv in non_two), default=0.0)
    at_rho = [rv for rv in non_two if abs(rv.value) > rho - 1e-9]
    mult = max((rv.multiplicity for rv in at_rho), default=1)
    tau = max(0.0, math.log2(rho)) if rho > 0 else 0.0
    return SpectralReport(d, tuple(f), rho, mult - 1, mult, tau, tuple(roots))


def poly_clear(f):
    """Scale a rational polynomial to integer coefficients (primitive
    up to the common denominator)."""
    denoms = [Fraction(c).denominator for c in f]
    lcm = 1
    for q in denoms:
        lcm = lcm * q // math.gcd(lcm, q)
    return [int(Fraction(c) * lcm) for c in f]


def graph_export(d: int, max_order: int = DEFAULT_MATRIX_CAP) -> str:
    """The pair digraph in DOT form, deterministic lex emission order."""
    total, _ = pair_counts(d)
    if total > max_order:
        raise ResourceLimitError(
            f"pair graph mod {d} has {total} vertices, cap is {max_order}")
    g = graph(d)
    lines = [f"digraph stern_pairs_mod_{d} {{"]
    for i, j in g.vertices:
        lines.append(f'  "({i},{j})";')
    for pos, (i, j) in enumerate(g.vertices):
        li, lj = g.vertices[g.left[pos]]
        ri, rj = g.vertices[g.right[pos]]
        lines.append(f'  "({i},{j})" -> "({li},{lj})" [label="L"];')
        lines.append(f'  "({i},{j})" -> "({ri},{rj})" [label="R"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
