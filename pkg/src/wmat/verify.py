"""Exhaustive and seeded-random checks of the Hopf algebra laws.

Each law is checked exhaustively on all small inputs and then on random
inputs.  Every random trial draws from its own generator seeded by
``(seed, law, trial index)``, so results do not depend on how trials are
distributed over worker processes.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import (
    ONE,
    Element,
    Tensor,
    antipode_word,
    coproduct_left,
    coproduct_right,
    coproduct_word,
    counit_left,
    counit_right,
    tensor_mul,
)
from .enumeration import generate_packed, generate_packed_upto
from .words import (
    Word,
    admissible_cuts,
    format_word,
    is_irreducible,
    factor_irreducible,
    pack,
    star,
    star_all,
    subword,
)

SCHEMA_VERSION = 1
EXHAUSTIVE_LEN = 4
ANTIPODE_MAX_LEN = 6

Delta = Callable[[Word], Tensor]


@dataclass
class Counterexample:
    inputs: list[str]
    lhs: str
    rhs: str


@dataclass
class LawReport:
    law: str
    tests: int = 0
    exhaustive: int = 0
    random: int = 0
    failures: int = 0
    counterexample: Counterexample | None = None
    elapsed: float = 0.0


@dataclass
class VerifyReport:
    seed: int
    max_len: int
    trials: int
    laws: list[LawReport] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.laws)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self, timing: bool = False) -> str:
        laws = []
        for r in self.laws:
            d = asdict(r)
            if not timing:
                del d["elapsed"]
            laws.append(d)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "max_len": self.max_len,
            "trials": self.trials,
            "failures": self.failures,
            "laws": laws,
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self, timing: bool = True) -> str:
        lines = [f"seed={self.seed} max_len={self.max_len} trials={self.trials}"]
        for r in self.laws:
            status = "ok" if r.failures == 0 else "FAIL"
            line = (
                f"{r.law:<14} {status:<4} tests={r.tests} exhaustive={r.exhaustive} "
                f"random={r.random} failures={r.failures}"
            )
            if timing:
                line += f" elapsed={r.elapsed:.2f}s"
            lines.append(line)
            if r.counterexample is not None:
                ce = r.counterexample
                lines.append(f"  counterexample: {' '.join(ce.inputs)}")
                lines.append(f"    lhs: {ce.lhs}")
                lines.append(f"    rhs: {ce.rhs}")
        lines.append(f"total failures={self.failures}")
        return "\n".join(lines)


# ------------------------------------------------------------------ samplers


def random_packed_word(rng: random.Random, n: int) -> Word:
    """Growth scan (each letter 0, a used value, or the next new value), then a
    random relabelling of the nonzero values.  Not uniform, but every packed
    word of length n has positive probability."""
    letters = []
    top = 0
    for _ in range(n):
        x = rng.randint(0, top + 1)
        letters.append(x)
        top = max(top, x)
    perm = list(range(1, top + 1))
    rng.shuffle(perm)
    relabel = {0: 0, **{i + 1: p for i, p in enumerate(perm)}}
    return tuple(relabel[x] for x in letters)


def random_word(rng: random.Random, n: int, alphabet: int) -> Word:
    return tuple(rng.randint(0, alphabet) for _ in range(n))


# ---------------------------------------------------------------------- laws
# Each check returns None on success or a Counterexample.


def check_coassociativity(w: Word, delta: Delta = coproduct_word) -> Counterexample | None:
    d = delta(w)
    lhs = coproduct_left(d, delta)
    rhs = coproduct_right(d, delta)
    if lhs == rhs:
        return None
    return Counterexample([format_word(w)], str(lhs), str(rhs))


def check_counit(w: Word, delta: Delta = coproduct_word) -> Counterexample | None:
    d = delta(w)
    expected = Element.basis(w)
    left, right = counit_left(d), counit_right(d)
    if left == expected and right == expected:
        return None
    bad = left if left != expected else right
    return Counterexample([format_word(w)], str(bad), str(expected))


def check_bialgebra(u: Word, v: Word, delta: Delta = coproduct_word) -> Counterexample | None:
    lhs = delta(star(u, v))
    rhs = tensor_mul(delta(u), delta(v))
    if lhs == rhs:
        return None
    return Counterexample([format_word(u), format_word(v)], str(lhs), str(rhs))


def check_antipode(w: Word, delta: Delta = coproduct_word) -> Counterexample | None:
    expected = ONE if not w else Element()
    d = delta(w)
    left: dict = {}
    right: dict = {}
    for (a, b), m in d.items():
        for s, c in antipode_word(a).items():
            key = star(s, b)
            left[key] = left.get(key, 0) + m * c
        for s, c in antipode_word(b).items():
            key = star(a, s)
            right[key] = right.get(key, 0) + m * c
    left_e, right_e = Element(left), Element(right)
    if left_e == expected and right_e == expected:
        return None
    bad = left_e if left_e != expected else right_e
    return Counterexample([format_word(w)], str(bad), str(expected))


def check_pack_morphism(u: Word, v: Word) -> Counterexample | None:
    """pack(u * v) = pack(u) * pack(v), and the same for every selection of positions."""
    uv = star(u, v)
    n, m = len(u), len(v)
    lhs, rhs = pack(uv), star(pack(u), pack(v))
    if lhs != rhs:
        return Counterexample([format_word(u), format_word(v)], format_word(lhs), format_word(rhs))
    for mask in range(1 << (n + m)):
        sel = [i + 1 for i in range(n + m) if mask >> i & 1]
        left = [i for i in sel if i <= n]
        right = [i - n for i in sel if i > n]
        lhs = pack(subword(uv, sel))
        rhs = star(pack(subword(u, left)), pack(subword(v, right)))
        if lhs != rhs:
            return Counterexample(
                [format_word(u), format_word(v), "I+J=" + format_word(sel)],
                format_word(lhs),
                format_word(rhs),
            )
    return None


def check_factorization(w: Word) -> Counterexample | None:
    factors = factor_irreducible(w)
    rebuilt = star_all(factors)
    rendered = " * ".join(format_word(f) for f in factors)
    if rebuilt != w:
        return Counterexample([format_word(w)], rendered, format_word(w))
    if not all(is_irreducible(f) for f in factors):
        return Counterexample([format_word(w)], rendered, "all factors irreducible")
    if w and len(factors) != len(admissible_cuts(w)) + 1:
        return Counterexample([format_word(w)], rendered, "one factor per admissible cut + 1")
    return None


# ------------------------------------------------------------- law catalogue


@dataclass(frozen=True)
class Law:
    name: str
    arity: int  # number of word arguments
    check: Callable
    uses_delta: bool = True
    raw: bool = False  # arguments are arbitrary words, not packed ones
    random_max_len: int | None = None


LAWS: dict[str, Law] = {
    law.name: law
    for law in [
        Law("coassoc", 1, check_coassociativity),
        Law("counit", 1, check_counit),
        Law("bialgebra", 2, check_bialgebra),
        Law("antipode", 1, check_antipode, random_max_len=ANTIPODE_MAX_LEN),
        Law("pack-morphism", 2, check_pack_morphism, uses_delta=False, raw=True),
        Law("factorization", 1, check_factorization, uses_delta=False),
    ]
}


def resolve_laws(names: Iterable[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        for part in name.split(","):
            part = part.strip()
            if not part:
                continue
            if part == "all":
                chosen = list(LAWS)
            elif part in LAWS:
                chosen = [part]
            else:
                raise KeyError(f"unknown law {part!r}; choose from {', '.join(LAWS)} or all")
            out.extend(c for c in chosen if c not in out)
    return out


def _exhaustive_inputs(law: Law, max_len: int) -> Iterable[tuple]:
    cap = min(max_len, EXHAUSTIVE_LEN)
    if law.arity == 1:
        return ((w,) for w in generate_packed_upto(cap))
    if law.raw:
        # raw words over letters 0..3 with total length <= cap
        def raw_pairs():
            for total in range(cap + 1):
                for a in range(total + 1):
                    for u in itertools.product(range(4), repeat=a):
                        for v in itertools.product(range(4), repeat=total - a):
                            yield (u, v)

        return raw_pairs()
    return (
        (u, v)
        for total in range(cap + 1)
        for a in range(total + 1)
        for u in generate_packed(a)
        for v in generate_packed(total - a)
    )


def _random_input(law: Law, seed: int, index: int, max_len: int) -> tuple | None:
    hi = max_len if law.random_max_len is None else min(max_len, law.random_max_len)
    lo = EXHAUSTIVE_LEN + 1
    if hi < lo:
        return None
    rng = random.Random(f"{seed}:{law.name}:{index}")
    n = rng.randint(lo, hi)
    if law.arity == 1:
        return (random_packed_word(rng, n),)
    a = rng.randint(0, n)
    if law.raw:
        return (random_word(rng, a, n), random_word(rng, n - a, n))
    return (random_packed_word(rng, a), random_packed_word(rng, n - a))


def _run_check(law: Law, args: tuple, delta: Delta | None) -> Counterexample | None:
    if law.uses_delta and delta is not None:
        return law.check(*args, delta=delta)
    return law.check(*args)


def _random_chunk(name: str, seed: int, max_len: int, indices: Sequence[int], delta: Delta | None):
    law = LAWS[name]
    results = []
    for i in indices:
        args = _random_input(law, seed, i, max_len)
        if args is None:
            continue
        results.append((i, _run_check(law, args, delta)))
    return results


def run_law(
    name: str,
    max_len: int,
    trials: int,
    seed: int,
    delta: Delta | None = None,
    pool: ProcessPoolExecutor | None = None,
    jobs: int = 1,
) -> LawReport:
    law = LAWS[name]
    report = LawReport(name)
    t0 = time.perf_counter()

    for args in _exhaustive_inputs(law, max_len):
        report.exhaustive += 1
        ce = _run_check(law, args, delta)
        if ce is not None:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = ce

    indices = list(range(trials))
    if pool is not None and jobs > 1:
        chunks = [indices[k::jobs] for k in range(jobs)]
        futures = [pool.submit(_random_chunk, name, seed, max_len, c, delta) for c in chunks]
        results = [r for f in futures for r in f.result()]
    else:
        results = _random_chunk(name, seed, max_len, indices, delta)
    results.sort(key=lambda r: r[0])
    for _, ce in results:
        report.random += 1
        if ce is not None:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = ce

    report.tests = report.exhaustive + report.random
    report.elapsed = time.perf_counter() - t0
    return report


def run_verify(
    max_len: int = 7,
    trials: int = 500,
    seed: int = 0,
    laws: Iterable[str] = ("all",),
    jobs: int = 1,
    delta: Delta | None = None,
) -> VerifyReport:
    """Run the selected laws.  ``delta`` replaces the coproduct (used to check
    that a corrupted coproduct is caught); it must be picklable when jobs > 1."""
    if max_len < 1 or trials < 1:
        raise ValueError("max_len and trials must be >= 1")
    names = resolve_laws(laws)
    report = VerifyReport(seed, max_len, trials)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for name in names:
                report.laws.append(run_law(name, max_len, trials, seed, delta, pool, jobs))
    else:
        for name in names:
            report.laws.append(run_law(name, max_len, trials, seed, delta))
    return report


def corrupted_coproduct(w: Word) -> Tensor:
    """Test hook: the true coproduct with one term dropped on words of length >= 3."""
    d = coproduct_word(w)
    if len(w) < 3:
        return d
    terms = d.terms()
    victim = next(k for k in d if k[0] and k[1])
    del terms[victim]
    return Tensor(terms)


__all__ = [
    "LAWS",
    "VerifyReport",
    "LawReport",
    "Counterexample",
    "run_verify",
    "run_law",
    "random_packed_word",
    "corrupted_coproduct",
]
