"""Digit automata for constant term sequences mod p.

For a nonzero Laurent polynomial P and weight Q over F_p, the sequence
n -> ct(P**n * Q) mod p is computed by a complete Moore machine over the
digit alphabet [0, p): states are Laurent polynomials confined to a fixed
exponent window, the digit-r transition is A -> cartier_0(P**r * A), and a
state outputs its constant term. Feeding the base-p digits of n least
significant first ends in a state whose output is ct(P**n * Q).

This module builds that machine, minimizes Moore machines by partition
refinement, evaluates sequences either through the machine or through the
equivalent digit-matrix linear representation, and locates the first index
whose output is zero, exactly or by bounded enumeration.

The digit transition acts linearly on window coefficient vectors, so the
closure, reachability, refinement and zero-search loops all run on numpy
arrays; reachable sets routinely hit tens of thousands of states and a
per-state Python loop would dominate every caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly


class StateExplosionError(RuntimeError):
    """State closure exceeded its cap; indicates a bug, not a user error."""


@dataclass(frozen=True)
class Found:
    n0: int


@dataclass(frozen=True)
class NoneExists:
    pass


@dataclass(frozen=True)
class CapExceeded:
    cap: int


ShortestZeroOutcome = Found | NoneExists | CapExceeded


@dataclass(frozen=True)
class MooreMachine:
    """Complete deterministic automaton with one output in [0, p) per state."""

    p: int
    initial: int
    outputs: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.outputs)
        if len(self.transitions) != n:
            raise ValueError("transition table and output vector disagree on size")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        table = np.asarray(self.transitions, dtype=np.int64)
        if table.shape != (n, self.p):
            raise ValueError("transition table is not total")
        if table.size and (table.min() < 0 or table.max() >= n):
            raise ValueError("transition target out of range")
        out = np.asarray(self.outputs, dtype=np.int64)
        if out.size and (out.min() < 0 or out.max() >= self.p):
            raise ValueError(f"output not reduced mod {self.p}")

    @property
    def num_states(self) -> int:
        return len(self.outputs)

    def eval(self, n: int) -> int:
        """Output after feeding the base-p digits of n, least significant first.

        n = 0 has the empty digit string: the initial state's output.
        """
        if n < 0:
            raise ValueError("sequence index must be >= 0")
        p = self.p
        s = self.initial
        t = self.transitions
        while n:
            s = t[s][n % p]
            n //= p
        return self.outputs[s]

    def sequence(self, N: int) -> list[int]:
        return [self.eval(n) for n in range(N)]


@dataclass(frozen=True)
class RZAutomaton:
    """The machine together with the polynomial labelling of its states."""

    machine: MooreMachine
    state_polys: tuple[LaurentPoly, ...]
    P: LaurentPoly
    Q: LaurentPoly
    window: int

    def to_json_dict(self) -> dict:
        return machine_to_json_dict(self.machine, state_polys=self.state_polys)


def _window(P: LaurentPoly, Q: LaurentPoly) -> int:
    # Window must cover both supports so the closure stays inside it; at
    # least 1 so constants still give a genuine (3-dim) window.
    return max(1, abs(P.lo), abs(P.hi), abs(Q.lo), abs(Q.hi))


def _digit_matrices(P: LaurentPoly, D: int) -> np.ndarray:
    """matrices[r][i, j] = coeff of t**(i-D) in cartier_0(P**r * t**(j-D))."""
    p = P.p
    dim = 2 * D + 1
    mats = np.zeros((p, dim, dim), dtype=np.int64)
    Pr = LaurentPoly.one(p)
    for r in range(p):
        for j in range(dim):
            img = Pr.shift(j - D).cartier(0)
            for k, c in enumerate(img.coeffs):
                mats[r, img.lo + k + D, j] = c
        if r + 1 < p:
            Pr = Pr * P
    return mats


def _window_vector(A: LaurentPoly, D: int) -> np.ndarray:
    v = np.zeros(2 * D + 1, dtype=np.int64)
    for k, c in enumerate(A.coeffs):
        v[A.lo + k + D] = c
    return v


def build_rz(
    P: LaurentPoly, Q: LaurentPoly | None = None, state_cap: int | None = None
) -> RZAutomaton:
    """Breadth-first closure of {Q} under A -> cartier_0(P**r * A), r in [0, p).

    States are deduplicated by their canonical polynomial (the zero
    polynomial is a legal state) and numbered in discovery order, scanning
    each state's digits in increasing order. The closure never exceeds
    p**(2D+1) states where D is the exponent window, so hitting `state_cap`
    above that is an internal error.
    """
    p = P.p
    if Q is None:
        Q = LaurentPoly.one(p)
    P._check_modulus(Q)
    if P.is_zero:
        raise ValueError("base polynomial must be nonzero")
    D = _window(P, Q)
    dim = 2 * D + 1
    cap = p**dim
    if state_cap is not None:
        if state_cap < 1:
            raise ValueError("state_cap must be >= 1")
        cap = min(cap, state_cap)

    mats = _digit_matrices(P, D)
    start = _window_vector(Q, D)

    index: dict[bytes, int] = {start.tobytes(): 0}
    vec_rows: list[np.ndarray] = [start[None, :]]
    table_rows: list[np.ndarray] = []
    frontier = start[:, None]  # dim x F
    while frontier.shape[1]:
        F = frontier.shape[1]
        # images in (state, digit) order, matching a FIFO per-state scan
        imgs = np.stack([(mats[r] @ frontier) % p for r in range(p)], axis=0)
        flat = np.ascontiguousarray(imgs.transpose(2, 0, 1).reshape(F * p, dim))
        uniq, first_pos, inverse = np.unique(
            flat, axis=0, return_index=True, return_inverse=True
        )
        # resolve each distinct image once; fresh ones get ids in the order
        # they first appear in the (state, digit) scan
        glob = np.empty(len(uniq), dtype=np.int64)
        fresh: list[int] = []
        for u in np.argsort(first_pos, kind="stable"):
            key = uniq[u].tobytes()
            idx = index.get(key)
            if idx is None:
                idx = len(index)
                index[key] = idx
                fresh.append(u)
            glob[u] = idx
        if len(index) > cap:
            raise StateExplosionError(
                f"more than {cap} states while closing {P} with weight {Q}"
            )
        table_rows.append(glob[inverse.ravel()].reshape(F, p))
        new_vecs = uniq[fresh]
        vec_rows.append(new_vecs)
        frontier = new_vecs.T

    vecs = np.vstack(vec_rows)
    table = np.vstack(table_rows)
    outputs = tuple(int(x) for x in vecs[:, D])
    machine = MooreMachine(
        p=p,
        initial=0,
        outputs=outputs,
        transitions=tuple(tuple(row) for row in table.tolist()),
    )
    state_polys = tuple(LaurentPoly._make(p, -D, row) for row in vecs.tolist())
    return RZAutomaton(
        machine=machine, state_polys=state_polys, P=P, Q=Q, window=D
    )


def _table(M: MooreMachine) -> np.ndarray:
    return np.asarray(M.transitions, dtype=np.int64).reshape(M.num_states, M.p)


def _reachable_order(M: MooreMachine, table: np.ndarray) -> np.ndarray:
    """Reachable states in discovery order (FIFO, digits scanned ascending)."""
    seen = np.zeros(M.num_states, dtype=bool)
    seen[M.initial] = True
    order = [np.array([M.initial], dtype=np.int64)]
    frontier = order[0]
    while frontier.size:
        cand = table[frontier].ravel()
        uniq, first_pos = np.unique(cand, return_index=True)
        new_sel = ~seen[uniq]
        fresh = uniq[new_sel][np.argsort(first_pos[new_sel], kind="stable")]
        seen[fresh] = True
        if fresh.size:
            order.append(fresh)
        frontier = fresh
    return np.concatenate(order)


def minimize(M: MooreMachine) -> MooreMachine:
    """Smallest Moore machine computing the same digit-string function.

    Restricts to the states reachable from the initial state, then refines
    the partition-by-output-value by transition targets until stable. Block
    numbering follows first occurrence in BFS state order, so the result is
    deterministic.
    """
    full_table = _table(M)
    order = _reachable_order(M, full_table)
    renum = np.full(M.num_states, -1, dtype=np.int64)
    renum[order] = np.arange(len(order))
    table = renum[full_table[order]]
    outputs = np.asarray(M.outputs, dtype=np.int64)[order]
    n, p = len(order), M.p

    def first_occurrence_ids(labels: np.ndarray) -> tuple[np.ndarray, int]:
        _, first_pos, inverse = np.unique(
            labels, axis=0, return_index=True, return_inverse=True
        )
        rank = np.empty(len(first_pos), dtype=np.int64)
        rank[np.argsort(first_pos, kind="stable")] = np.arange(len(first_pos))
        return rank[inverse.ravel()], len(first_pos)

    block, nblocks = first_occurrence_ids(outputs)
    while True:
        sig = np.column_stack([block] + [block[table[:, r]] for r in range(p)])
        new_block, new_count = first_occurrence_ids(sig)
        if new_count == nblocks:
            break
        block, nblocks = new_block, new_count

    reps = np.zeros(nblocks, dtype=np.int64)
    seen = np.zeros(nblocks, dtype=bool)
    for s in range(n):
        b = block[s]
        if not seen[b]:
            seen[b] = True
            reps[b] = s
    new_outputs = tuple(int(x) for x in outputs[reps])
    new_trans = tuple(
        tuple(int(x) for x in block[table[rep]]) for rep in reps
    )
    return MooreMachine(
        p=p, initial=int(block[0]), outputs=new_outputs, transitions=new_trans
    )


def kappa(P: LaurentPoly, Q: LaurentPoly | None = None) -> int:
    """Automaticity: states in the minimal machine for n -> ct(P**n * Q)."""
    return minimize(build_rz(P, Q).machine).num_states


def zero_state_reachable(M: MooreMachine) -> bool:
    table = _table(M)
    reach = _reachable_order(M, table)
    return bool((np.asarray(M.outputs, dtype=np.int64)[reach] == 0).any())


def shortest_zero_exact(M: MooreMachine) -> Found | NoneExists:
    """Least n with eval(M, n) = 0, or NoneExists; exact and cap-free.

    Works on canonical digit strings: the empty string is n = 0 and every
    n >= 1 ends (most significant digit) with a nonzero digit. The minimal
    digit count k is found by iterating backward feasibility sets; the
    minimal value among k-digit witnesses is then assembled by choosing
    digits greedily from the most significant position down.
    """
    if M.outputs[M.initial] == 0:
        return Found(0)
    p = M.p
    table = _table(M)
    reach_mask = np.zeros(M.num_states, dtype=bool)
    reach_mask[_reachable_order(M, table)] = True
    zero_mask = (np.asarray(M.outputs, dtype=np.int64) == 0) & reach_mask
    if not zero_mask.any():
        return NoneExists()

    # b after j iterations holds the states from which some digit string of
    # length j, ending in a nonzero digit, reaches a zero output; the first
    # j with initial in b is the digit count of the answer. Cycle cutting
    # bounds that count by the number of states.
    b = np.zeros(M.num_states, dtype=bool)
    for r in range(1, p):
        b |= zero_mask[table[:, r]]
    b &= reach_mask
    k = None
    for j in range(1, M.num_states + 1):
        if b[M.initial]:
            k = j
            break
        nxt = np.zeros(M.num_states, dtype=bool)
        for r in range(p):
            nxt |= b[table[:, r]]
        b = nxt & reach_mask
    if k is None:
        # A zero-output state is reachable, but only along strings that end
        # in 0-digits; no canonical index evaluates to zero. Cannot happen
        # for machines whose outputs are stable under the 0 digit.
        return NoneExists()

    forward = [np.zeros(M.num_states, dtype=bool)]
    forward[0][M.initial] = True
    for _ in range(k - 1):
        nxt = np.zeros(M.num_states, dtype=bool)
        nxt[table[forward[-1]].ravel()] = True
        forward.append(nxt)

    digits = [0] * k
    targets = zero_mask
    for j in range(k - 1, -1, -1):
        for r in range(1 if j == k - 1 else 0, p):
            pre = targets[table[:, r]] & reach_mask
            if (pre & forward[j]).any():
                digits[j] = r
                targets = pre
                break
        else:
            raise AssertionError("digit selection lost feasibility")
    n0 = 0
    for d in reversed(digits):
        n0 = n0 * p + d
    return Found(n0)


def shortest_zero_enum(M: MooreMachine, cap: int) -> ShortestZeroOutcome:
    """Scan n = 0, 1, ... below cap for the first zero output.

    Returns NoneExists when no zero-output state is reachable at all, and
    CapExceeded when one is reachable but no index below cap attains it.
    The two must not be conflated: CapExceeded says nothing about existence.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if not zero_state_reachable(M):
        return NoneExists()
    for n in range(cap):
        if M.eval(n) == 0:
            return Found(n)
    return CapExceeded(cap)


@dataclass
class LinearRepresentation:
    """Digit matrices M_0..M_{p-1} acting on window coefficient vectors.

    matrices[r] is the matrix of A -> cartier_0(P**r * A) on the window
    basis t**-D .. t**D; evaluation multiplies them along the base-p digits
    of n (least significant first) into the weight vector and reads the
    coordinate of exponent 0.
    """

    p: int
    dim: int
    matrices: np.ndarray
    initial_vector: np.ndarray
    output_index: int

    def eval(self, n: int) -> int:
        if n < 0:
            raise ValueError("sequence index must be >= 0")
        p = self.p
        v = self.initial_vector
        while n:
            v = self.matrices[n % p] @ v % p
            n //= p
        return int(v[self.output_index])

    def sequence(self, N: int) -> list[int]:
        return [self.eval(n) for n in range(N)]


def to_linrep(P: LaurentPoly, Q: LaurentPoly | None = None) -> LinearRepresentation:
    """Matrix form of the same transition rule, on the full window basis."""
    p = P.p
    if Q is None:
        Q = LaurentPoly.one(p)
    P._check_modulus(Q)
    if P.is_zero:
        raise ValueError("base polynomial must be nonzero")
    D = _window(P, Q)
    return LinearRepresentation(
        p=p,
        dim=2 * D + 1,
        matrices=_digit_matrices(P, D),
        initial_vector=_window_vector(Q, D),
        output_index=D,
    )


def to_dot(M: MooreMachine, labels: Sequence[str] | None = None) -> str:
    """DOT digraph; parallel edges are merged into one comma-labelled edge."""
    if labels is not None and len(labels) != M.num_states:
        raise ValueError("one label per state required")

    def esc(text: str) -> str:
        return text.replace("\\", "\\\\").replace('"', '\\"')

    lines = [
        "digraph moore {",
        "  rankdir=LR;",
        "  __start [shape=point];",
        f"  __start -> s{M.initial};",
    ]
    for s in range(M.num_states):
        name = labels[s] if labels is not None else f"s{s}"
        lines.append(f'  s{s} [label="{esc(name)} / {M.outputs[s]}"];')
    for s in range(M.num_states):
        by_dst: dict[int, list[int]] = {}
        for r in range(M.p):
            by_dst.setdefault(M.transitions[s][r], []).append(r)
        for dst in sorted(by_dst):
            digits = ",".join(str(r) for r in by_dst[dst])
            lines.append(f'  s{s} -> s{dst} [label="{digits}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def machine_to_json_dict(
    M: MooreMachine, state_polys: Sequence[LaurentPoly] | None = None
) -> dict:
    data = {
        "p": M.p,
        "initial": M.initial,
        "outputs": list(M.outputs),
        "transitions": [list(row) for row in M.transitions],
    }
    if state_polys is not None:
        data["state_polys"] = [str(A) for A in state_polys]
    return data


def machine_from_json_dict(data: dict) -> MooreMachine:
    return MooreMachine(
        p=int(data["p"]),
        initial=int(data["initial"]),
        outputs=tuple(int(x) for x in data["outputs"]),
        transitions=tuple(tuple(int(x) for x in row) for row in data["transitions"]),
    )
