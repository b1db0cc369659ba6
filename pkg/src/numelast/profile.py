"""Exact decomposition of an elasticity set into a finite part plus tails.

Past the window base B0 = g_{k-1} g_k, the value of every element n is
determined by its residue class modulo the period g_1 g_k: the class
through window element n0 carries the monotone sequence
(M0 + t g_k) / (m0 + t g_1), t = 0, 1, 2, ..., increasing toward g_k/g_1.
The finite part records every value attained below B0 + period, so the
pair (finite part, sequences) describes the whole value set exactly and
membership of any rational is decidable by solving each sequence for t.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IndexOutOfRange, SingleGenerator
from .factorizations import _is_member, _max_from, _min_from, _tables, length_stats_range
from .monoid import NumericalMonoid, frobenius


@dataclass(frozen=True)
class TailSequence:
    """One residue class: starting element n0, M(n0), m(n0)."""

    n0: int
    max0: int
    min0: int
    constant: bool  # value already equals g_k/g_1, so the whole tail is flat


@dataclass
class ElasticityProfile:
    monoid: NumericalMonoid
    base: int
    period: int
    finite_part: tuple[tuple[Fraction, int], ...]  # (value, smallest witness >= 1)
    sequences: tuple[TailSequence, ...]
    _finite_lookup: dict = field(init=False, repr=False)

    def __post_init__(self):
        self._finite_lookup = {value: witness for value, witness in self.finite_part}

    @property
    def limit(self) -> Fraction:
        return Fraction(self.monoid.gk, self.monoid.g1)


@dataclass(frozen=True)
class SequenceAlignment:
    """Affine match: source values v(t) equal target values at alpha*t + beta.

    Valid for t >= t0; earlier source values are checked individually.
    Constant sequences are matched to a constant target with alpha=1, beta=0.
    """

    source: int
    target: int
    alpha: int
    beta: int
    t0: int


@dataclass(frozen=True)
class ComparisonVerdict:
    """Result of comparing two elasticity sets.

    ``outcome`` is "equal", "not_equal" or "unknown".  A not_equal verdict
    carries a witness value lying in exactly one of the two sets.  An equal
    verdict carries the two-directional alignment certificate.
    """

    outcome: str
    witness: Fraction | None
    checked_bound: int
    certificate: tuple[tuple[SequenceAlignment, ...], tuple[SequenceAlignment, ...]] | None


def build_profile(S: NumericalMonoid) -> ElasticityProfile:
    """Finite part and tail sequences of the monoid's elasticity set."""
    gens = S.generators
    if len(gens) == 1:
        raise SingleGenerator("the value set of <1> is just {1}")
    g1, gk, gk1 = gens[0], gens[-1], gens[-2]
    base = gk1 * gk
    period = g1 * gk
    assert frobenius(S) < base, "window must lie above the Frobenius number"
    finite: dict[Fraction, int] = {}
    for st in length_stats_range(S, 1, base + period - 1):
        finite.setdefault(st.elasticity, st.n)
    limit = Fraction(gk, g1)
    t = _tables(S)
    seqs = []
    for n0 in range(base, base + period):
        assert _is_member(t, n0)
        big = _max_from(t, n0)
        small = _min_from(t, n0)
        seqs.append(TailSequence(n0, big, small, Fraction(big, small) == limit))
    return ElasticityProfile(S, base, period, tuple(sorted(finite.items())), tuple(seqs))


def sequence_value(profile: ElasticityProfile, index: int, t: int) -> Fraction:
    """Value of the ``index``-th tail sequence after ``t`` periods."""
    if not 0 <= index < len(profile.sequences):
        raise IndexOutOfRange(f"no sequence {index}")
    if t < 0:
        raise IndexOutOfRange(f"step must be nonnegative, got {t}")
    seq = profile.sequences[index]
    gens = profile.monoid.generators
    return Fraction(seq.max0 + t * gens[-1], seq.min0 + t * gens[0])


def contains_elasticity(profile: ElasticityProfile, q) -> tuple[bool, int | None]:
    """Exact membership of ``q`` in the elasticity set, with a witness element.

    Checks the finite part, then solves q = (M0 + t g_k)/(m0 + t g_1) for an
    integer t >= 0 in each sequence.
    """
    q = Fraction(q)
    if q < 1 or q > profile.limit:
        return False, None
    witness = profile._finite_lookup.get(q)
    if witness is not None:
        return True, witness
    gens = profile.monoid.generators
    g1, gk = gens[0], gens[-1]
    num, den = q.numerator, q.denominator
    slope = num * g1 - den * gk  # negative for q below the limit
    if slope == 0:
        # q equals the limit, which is always attained (normally the finite
        # part already answered with a smaller witness)
        return True, g1 * gk
    for seq in profile.sequences:
        tn = den * seq.max0 - num * seq.min0
        if tn % slope:
            continue
        t = tn // slope
        if t >= 0:
            return True, seq.n0 + t * profile.period
    return False, None


def _candidate_values(profile: ElasticityProfile, t_max: int) -> list[Fraction]:
    values = {value for value, _ in profile.finite_part}
    gens = profile.monoid.generators
    g1, gk = gens[0], gens[-1]
    for seq in profile.sequences:
        if seq.constant:
            values.add(profile.limit)
            continue
        for t in range(t_max + 1):
            values.add(Fraction(seq.max0 + t * gk, seq.min0 + t * g1))
    return sorted(values)


def _identity_holds(
    src: TailSequence, dst: TailSequence, alpha: int, beta: int,
    G: int, g: int, Gp: int, gp: int,
) -> bool:
    # (M0 + tG)(m0' + (alpha t + beta) g') == (M0' + (alpha t + beta) G')(m0 + t g)
    # compared coefficient by coefficient as polynomials in t
    if G * gp != Gp * g:
        return False
    lin_l = src.max0 * gp * alpha + G * dst.min0 + G * gp * beta
    lin_r = dst.max0 * g + alpha * Gp * src.min0 + beta * Gp * g
    if lin_l != lin_r:
        return False
    const_l = src.max0 * dst.min0 + src.max0 * gp * beta
    const_r = dst.max0 * src.min0 + beta * Gp * src.min0
    return const_l == const_r


def _align_sequences(
    src: ElasticityProfile, dst: ElasticityProfile, t_max: int
) -> list[SequenceAlignment] | None:
    """Affine alignment of every source sequence into some target sequence."""
    G, g = src.monoid.gk, src.monoid.g1
    Gp, gp = dst.monoid.gk, dst.monoid.g1
    constant_targets = [j for j, seq in enumerate(dst.sequences) if seq.constant]
    out: list[SequenceAlignment] = []
    for i, seq in enumerate(src.sequences):
        if seq.constant:
            if not constant_targets:
                return None
            out.append(SequenceAlignment(i, constant_targets[0], 1, 0, 0))
            continue
        D = seq.max0 * gp - Gp * seq.min0
        found = None
        for j, dseq in enumerate(dst.sequences):
            if dseq.constant:
                continue
            a_num = dseq.max0 * g - G * dseq.min0
            if a_num % D:
                continue
            alpha = a_num // D
            if alpha < 1:
                continue
            b_num = dseq.max0 * seq.min0 - seq.max0 * dseq.min0
            if b_num % D:
                continue
            beta = b_num // D
            t0 = 0 if beta >= 0 else (-beta + alpha - 1) // alpha
            if t0 > t_max:
                continue  # head values would not have been cross-checked
            if _identity_holds(seq, dseq, alpha, beta, G, g, Gp, gp):
                found = SequenceAlignment(i, j, alpha, beta, t0)
                break
        if found is None:
            return None
        out.append(found)
    return out


def compare_profiles(
    S1: NumericalMonoid, S2: NumericalMonoid, t_max: int = 50
) -> ComparisonVerdict:
    """Compare the elasticity sets of two monoids.

    Reports not_equal with the smallest witness found when the limits differ
    or a bounded cross-check finds a value on exactly one side; reports equal
    only when every tail sequence of each side is affinely aligned into the
    other (a complete proof); otherwise unknown at the checked bound.
    """
    p1 = build_profile(S1)
    p2 = build_profile(S2)
    if p1.limit != p2.limit:
        return ComparisonVerdict("not_equal", max(p1.limit, p2.limit), t_max, None)
    for v in _candidate_values(p1, t_max):
        if not contains_elasticity(p2, v)[0]:
            return ComparisonVerdict("not_equal", v, t_max, None)
    for v in _candidate_values(p2, t_max):
        if not contains_elasticity(p1, v)[0]:
            return ComparisonVerdict("not_equal", v, t_max, None)
    forward = _align_sequences(p1, p2, t_max)
    backward = _align_sequences(p2, p1, t_max)
    if forward is not None and backward is not None:
        return ComparisonVerdict("equal", None, t_max, (tuple(forward), tuple(backward)))
    return ComparisonVerdict("unknown", None, t_max, None)


def profile_to_dict(profile: ElasticityProfile) -> dict:
    """JSON-ready form: generators, base, period, finite part, sequences."""
    return {
        "generators": list(profile.monoid.generators),
        "base": profile.base,
        "period": profile.period,
        "finite_part": [
            [value.numerator, value.denominator, witness]
            for value, witness in profile.finite_part
        ],
        "sequences": [[s.n0, s.max0, s.min0] for s in profile.sequences],
    }


def profile_to_json(profile: ElasticityProfile) -> str:
    return json.dumps(profile_to_dict(profile), separators=(",", ":"))
