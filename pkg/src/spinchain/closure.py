"""Dynamical Lie-algebra closures and dimension-based classification.

Two closure engines share one report type:

- closure_strings works on phase-free Pauli words.  The real span of
  {i*w : w in a word set} is closed under commutation iff the set is
  closed under products of anticommuting pairs, and such products never
  land on the identity word, so the fixpoint set is itself a basis.
- closure_general works on Hermitian PauliSums via rank-tracked
  Gram-Schmidt over the word-coefficient space, for generator sets that
  are not single words (e.g. the hopping/pairing bilinears).

Classification is by dimension only: the labels name the algebra whose
dimension formula matches, and are not a proof of isomorphism type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .operators import PauliSum
from .pauli import bits_to_word, validate_words, word_to_bits


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of a closure run.

    basis is the sorted word list in string mode and None in general
    (rank-tracked) mode, where only the dimension is meaningful.
    rounds counts work-queue sweeps; pairs_processed counts examined
    candidate pairs, both fully determined by the input set.
    """

    n: int
    dimension: int
    label: str
    rounds: int
    pairs_processed: int
    basis: Optional[tuple[str, ...]] = None

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "dimension": self.dimension,
            "label": self.label,
            "rounds": self.rounds,
            "pairs_processed": self.pairs_processed,
        }
        if self.basis is not None:
            out["basis"] = list(self.basis)
        return out


class UniversalityResult(NamedTuple):
    universal: bool
    report: ClosureReport


def classify_dimension(n: int, dim: int) -> str:
    """Label a closure dimension against the three reference formulas.

    2n^2-n -> "so(2n)", 2n^2+n -> "so(2n+1)", 4^n-1 -> "su(2^n)",
    anything else -> "other".  At n=1 the last two formulas tie at 3;
    "su(2^n)" wins there (the algebras coincide).
    """
    if dim < 0:
        raise ValueError("dimension must be nonnegative")
    if dim == 4**n - 1:
        return "su(2^n)"
    if dim == 2 * n * n + n:
        return "so(2n+1)"
    if dim == 2 * n * n - n:
        return "so(2n)"
    return "other"


def closure_strings(n: int, generators: Iterable[str]) -> ClosureReport:
    """Close a set of Pauli words under products of anticommuting pairs.

    Sweeps a lexicographically ordered work queue: each round pairs
    every frontier word against every current member, inserting the
    product word for each anticommuting pair.  The identity word is
    rejected as input (it cannot arise from commutators and would break
    the dimension count).  Output basis is sorted and independent of
    generator order.
    """
    words = sorted(set(validate_words(n, generators)))
    if not words:
        raise ValueError("generator set must be nonempty")
    identity = "I" * n
    if identity in words:
        raise ValueError("the identity word is not a valid closure generator")

    known: dict[tuple[int, int], str] = {word_to_bits(w): w for w in words}
    frontier = words
    rounds = 0
    pairs = 0
    while frontier:
        rounds += 1
        members = sorted(known.values())
        member_bits = [word_to_bits(w) for w in members]
        new: dict[tuple[int, int], str] = {}
        for w in frontier:
            x1, z1 = word_to_bits(w)
            for (x2, z2), w2 in zip(member_bits, members):
                if w2 == w:
                    continue
                pairs += 1
                if (((x1 & z2) ^ (z1 & x2)).bit_count()) & 1:
                    key = (x1 ^ x2, z1 ^ z2)
                    if key not in known and key not in new:
                        new[key] = bits_to_word(*key, n)
        known.update(new)
        frontier = sorted(new.values())

    basis = tuple(sorted(known.values()))
    return ClosureReport(
        n=n,
        dimension=len(basis),
        label=classify_dimension(n, len(basis)),
        rounds=rounds,
        pairs_processed=pairs,
        basis=basis,
    )


def _inner(a: PauliSum, b: PauliSum) -> float:
    # Real coefficients throughout (Hermitian inputs, i*[A,B] brackets).
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return sum(c.real * big.coeff(w).real for w, c in small.items())


def closure_general(
    n: int, generators: Sequence[PauliSum], tol: float = 1e-9
) -> ClosureReport:
    """Rank-tracked closure of Hermitian PauliSums under C = i*[A, B].

    Maintains an orthonormal real basis of the span in the word
    coefficient space, projecting each candidate against the basis
    (re-orthogonalized once) and keeping residuals with norm above tol.
    The identity component of every element is projected out first: the
    bracket never produces it and keeping it would count the global
    phase direction as a dimension.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not generators:
        raise ValueError("generator set must be nonempty")
    for g in generators:
        if g.n != n:
            raise ValueError(f"generator acts on {g.n} qubits, expected {n}")
        if not g:
            raise ValueError("generators must be nonzero")
        if not g.is_hermitian:
            raise ValueError("closure generators must be Hermitian (real coefficients)")

    basis: list[PauliSum] = []

    def try_add(candidate: PauliSum) -> bool:
        v = candidate.traceless()
        for _ in range(2):
            for b in basis:
                v = v - _inner(v, b) * b
        nrm = v.norm()
        if nrm > tol:
            basis.append((1.0 / nrm) * v)
            return True
        return False

    for g in generators:
        try_add(g)

    rounds = 0
    pairs = 0
    processed = 0
    while processed < len(basis):
        rounds += 1
        end = len(basis)
        for i in range(end):
            for j in range(max(i + 1, processed), end):
                pairs += 1
                try_add(1j * basis[i].commutator(basis[j]))
        processed = end

    return ClosureReport(
        n=n,
        dimension=len(basis),
        label=classify_dimension(n, len(basis)),
        rounds=rounds,
        pairs_processed=pairs,
        basis=None,
    )


def check_universality(n: int, generators: Iterable[str]) -> UniversalityResult:
    """String closure plus the universality verdict: dimension == 4^n - 1."""
    report = closure_strings(n, generators)
    return UniversalityResult(universal=report.dimension == 4**n - 1, report=report)
