"""Closed-tape-language non-halt certificates via pushdown reachability.

A machine configuration is split at the head: the left half-tape is folded
through a small DFA (scanned from the far left, with the all-zero prefix
fixed to the start state), and the right half-tape, head cell first, is
kept as the stack of a pushdown system whose control states pair the DFA
state with the machine state.  Saturating a finite automaton with the
pushdown's pre*("bad configuration") set, where bad means reading an
undefined entry or one that targets halt, decides whether the blank-tape
start can ever reach a bad read modulo the DFA quotient.  If it cannot,
the machine provably runs forever; the quotient only over-approximates
reachability, so the certificate is sound for any DFA choice.

The construction follows the classic reachability analysis of pushdown
systems (Bouajjani, Esparza and Maler, 1997).
"""

from __future__ import annotations

from translens.turing import HALT, LEFT, Transition


def _binary_dfas(size: int):
    """Yield canonical transition tables over {0,1} with exactly ``size`` states.

    A table T maps state q on bit b to T[2*q+b].  T[0] = 0 keeps the
    all-zero left tape in the start state, and states are numbered in
    first-use order so each machine shape is produced once.
    """

    table = [0] * (2 * size)

    def fill(slot: int, used: int):
        if slot == 2 * size:
            if used == size:
                yield list(table)
            return
        limit = min(used + 1, size)
        for target in range(limit):
            table[slot] = target
            yield from fill(slot + 1, max(used, target + 1))

    # Slot 0 is fixed to 0; enumerate the rest.
    yield from fill(1, 1)


def _saturate(
    table: dict[tuple[int, int], Transition],
    states: int,
    dfa: list[int],
) -> list[int]:
    """NFA over right half-tapes accepting pre*(bad reads), as bitmask rows.

    Control states are 1 + dfa_state * states + machine_state, control 0 is
    the bad sink, which accepts any stack suffix.  Row 2*c+b holds the
    bitmask of successor controls on bit b.
    """
    dfa_states = len(dfa) // 2
    controls = 1 + dfa_states * states
    ctrl = lambda q, s: 1 + q * states + s

    rules: list[tuple[int, int, int, tuple[int, ...]]] = []
    for s in range(states):
        for b in (0, 1):
            trans = table.get((s, b))
            if trans is None or trans[2] == HALT:
                for q in range(dfa_states):
                    rules.append((ctrl(q, s), b, 0, ()))
                continue
            write, move, goto = trans
            if move == LEFT:
                for q1 in range(dfa_states):
                    for b1 in (0, 1):
                        q2 = dfa[2 * q1 + b1]
                        rules.append((ctrl(q2, s), b, ctrl(q1, goto), (b1, write)))
            else:
                for q1 in range(dfa_states):
                    q2 = dfa[2 * q1 + write]
                    rules.append((ctrl(q1, s), b, ctrl(q2, goto), ()))

    nfa = [0] * (2 * controls)
    nfa[0] = nfa[1] = 1  # the bad sink absorbs any suffix
    grew = True
    while grew:
        grew = False
        for source, bit, target, word in rules:
            mask = 1 << target
            for w in word:
                stepped = 0
                probe = mask
                state = 0
                while probe:
                    if probe & 1:
                        stepped |= nfa[2 * state + w]
                    probe >>= 1
                    state += 1
                mask = stepped
            merged = nfa[2 * source + bit] | mask
            if merged != nfa[2 * source + bit]:
                nfa[2 * source + bit] = merged
                grew = True
    return nfa


def _accepts_blank_start(nfa: list[int]) -> bool:
    """Can the start control reach the bad sink over some all-zero stack?"""
    mask = 1 << 1  # control of (dfa start, machine state A)
    seen = 0
    while mask != seen:
        seen = mask
        stepped = 0
        probe = mask
        state = 0
        while probe:
            if probe & 1:
                stepped |= nfa[2 * state]
            probe >>= 1
            state += 1
        mask |= stepped
    return bool(mask & 1)


def ctl_certifies_nonhalt(
    table: dict[tuple[int, int], Transition],
    states: int,
    max_dfa_states: int = 4,
) -> bool:
    """True if some small left-tape DFA proves bad reads unreachable."""
    for size in range(1, max_dfa_states + 1):
        for dfa in _binary_dfas(size):
            if not _accepts_blank_start(_saturate(table, states, dfa)):
                return True
    return False
