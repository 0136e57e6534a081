"""
The identity suite: every explicit identity and hypothesis check, run over a
range of strand counts and recorded in a deterministic report.

Each check instance is a ``(check id, params)`` pair whose params fully
describe the inputs (sampled words are stored as text), so instances can run
in any order or in worker processes and the sorted report is unchanged.

Identity catalog
----------------
C01-artin-relations      alpha respects the braid relations; alpha(s_i) o alpha(s_i^-1) = id
C02-shift-conjugation    (s_i s_{i+1} s_{i+2}) (s_i s_{i+1}^-1) (...)^-1 = s_{i+1} s_{i+2}^-1
C03-normality            s_j (s_i s_{i+1}^-1) s_j^-1 equals the same conjugation by s_j s_{i+3}^-1
C04-perfect-commutator   s_i s_{i+1}^-1 = [s_{i+1} s_i s_j^-2, s_{i+1} s_j^-1], smallest j
C05-zero-exponent-chain  s_i s_{i+1} s_{i+2} s_{i+3}^-3 has exponent sum 0 and conjugates s_i to s_{i+1}
C06-full-twist-inner     alpha(full twist) = conjugation by the boundary word
C07-artin-conditions     alpha(b) carries a certificate for the image criterion, with tau = mu(b)
C08-cross-oracle         Garside equality agrees with Artin-image equality
C09-b4-to-b3             sigma_1, sigma_3 -> sigma_1, sigma_2 -> sigma_2 respects all B_4 relations
C10-b3-sl2z              the integer B_3 matrices satisfy the braid relation and do not commute
C11-hypotheses           conjugacy + far-commutation hypotheses (k=2 cyclic sigmas, k=3 cyclic S)
C12-stabilizer           the permutation image of B_{n-1} in B_n fixes the point n
C13-rewrite-roundtrip    S-rewrites and commutator expressions evaluate back to their input
C14-faithfulness         braids with nontrivial normal form have nontrivial Artin image

(Here s_i abbreviates sigma_i with cyclic subscripts.)
"""
from __future__ import annotations

import concurrent.futures
import dataclasses
import json
import random
import time
from typing import Callable

from .braid_core import (
    BraidWord,
    commutator,
    concat,
    cyclic_generator,
    exponent_sum,
    full_twist,
    generator,
    invert,
    parse_braid,
)
from .commutator import (
    commutator_expression,
    commutator_product,
    evaluate,
    conjugacy_chain_witness,
    normality_conjugator,
    perfectness_witness,
    rewrite_in_S,
    s_letter,
    shift_conjugator,
)
from .errors import DomainError
from .free_group import artin_conditions, boundary_word, check_certificate, compose, conjugation
from .garside import normal_form, verify_conjugation, words_equal
from .matrix_rep import (
    B3_SL2Z,
    DEFAULT_TOL,
    Matrix2,
    braid_relation_residual,
    check_homomorphism_b4_b3,
    commutator_residual,
    cyclic_s_family,
    cyclic_sigma_family,
    lemma_general_hypotheses,
)
from .representations import artin, artin_images, center_power_detect, mu, stabilizer_check

SUITE_VERSION = "braidcheck-suite/1"
# Samples come from random.Random (Mersenne Twister) seeded with the string
# "<seed>:<check id>:<n>", which Python hashes with SHA-512: stable across runs and platforms.
RNG_NAME = "mt19937-sha512-v1"

N_MIN, N_MAX = 2, 12
MAX_PAIR_LENGTH = 24
MAX_SAMPLE_LENGTH = 20
MAX_REWRITE_LENGTH = 16

STATUSES = ("pass", "fail", "error", "skip")


@dataclasses.dataclass(frozen=True)
class CheckResult:
    id: str
    params: dict
    status: str
    witness: str = ""
    ms: int = 0

    def to_json(self) -> dict:
        return {"id": self.id, "params": self.params, "status": self.status, "witness": self.witness, "ms": self.ms}


@dataclasses.dataclass(frozen=True)
class Report:
    version: str
    seed: int
    results: tuple[CheckResult, ...]

    @property
    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0

    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return 1
        if s["error"]:
            return 2
        return 0


def _sort_key(result: CheckResult):
    # params in generation order (n first); ints compare numerically
    return result.id, tuple(
        (k, (0, v, "") if isinstance(v, int) else (1, 0, str(v))) for k, v in result.params.items()
    )


def _rng(seed: int, check_id: str, n: int) -> random.Random:
    return random.Random(f"{seed}:{check_id}:{n}")


def random_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    length = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_zero_exponent_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    half = rng.randint(0, max_len // 2)
    letters = [rng.randint(1, n - 1) for _ in range(half)] + [-rng.randint(1, n - 1) for _ in range(half)]
    rng.shuffle(letters)
    return BraidWord(n, tuple(letters))


def relation_moves(rng: random.Random, w: BraidWord, moves: int, max_len: int) -> BraidWord:
    """Apply random defining-relation rewrites and free insertions, keeping length <= max_len."""
    n = w.n
    letters = list(w.letters)
    for _ in range(moves):
        kind = rng.randrange(3)
        if kind == 0 and len(letters) >= 3:
            k = rng.randrange(len(letters) - 2)
            a, b, c = letters[k : k + 3]
            if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
                letters[k : k + 3] = [b, a, b]
                continue
        if kind == 1 and len(letters) >= 2:
            k = rng.randrange(len(letters) - 1)
            a, b = letters[k : k + 2]
            if abs(abs(a) - abs(b)) >= 2:
                letters[k : k + 2] = [b, a]
                continue
        if len(letters) + 2 <= max_len:
            g = rng.choice((1, -1)) * rng.randint(1, n - 1)
            k = rng.randint(0, len(letters))
            letters[k:k] = [g, -g]
    return BraidWord(n, tuple(letters))


def random_pair(rng: random.Random, n: int, max_len: int = MAX_PAIR_LENGTH) -> tuple[BraidWord, BraidWord]:
    """Half the pairs are equal by construction (relation moves), half are independent."""
    u = random_word(rng, n, max_len)
    if rng.random() < 0.5:
        return u, relation_moves(rng, u, rng.randint(1, 12), max_len)
    return u, random_word(rng, n, max_len)


# ---------------------------------------------------------------- check bodies
# Each body takes the params dict and returns (ok, witness text).


def _c01(p):
    n = p["n"]
    rel = p["relation"]
    if rel == "braid":
        i = p["i"]
        a, b = generator(i, n), generator(i + 1, n)
        ok = artin(concat(a, b, a)) == artin(concat(b, a, b))
        return ok, f"alpha({i} {i + 1} {i}) = alpha({i + 1} {i} {i + 1})"
    if rel == "commute":
        i, j = p["i"], p["j"]
        ok = artin(concat(generator(i, n), generator(j, n))) == artin(concat(generator(j, n), generator(i, n)))
        return ok, f"alpha({i} {j}) = alpha({j} {i})"
    i = p["i"]
    ok = compose(artin(generator(i, n)), artin(generator(-i, n))).is_identity()
    return ok, f"alpha({i}) o alpha({-i}) = id"


def _c02(p):
    n, i = p["n"], p["i"]
    g = shift_conjugator(i, n)
    ok = verify_conjugation(g, s_letter(i, n), s_letter(i % n + 1, n))
    return ok, str(g)


def _c03(p):
    n, i, j = p["n"], p["i"], p["j"]
    gj = cyclic_generator(j, n)
    lhs = concat(gj, s_letter(i, n), invert(gj))
    h = normality_conjugator(i, j, n)
    rhs = concat(h, s_letter(i, n), invert(h))
    return words_equal(lhs, rhs), str(h)


def _c04(p):
    n, i = p["n"], p["i"]
    a, b = perfectness_witness(i, n)
    ok = exponent_sum(a) == 0 == exponent_sum(b) and words_equal(commutator(a, b), s_letter(i, n))
    return ok, f"a={a}; b={b}"


def _c05(p):
    n, i = p["n"], p["i"]
    g = conjugacy_chain_witness(i, n)
    ok = exponent_sum(g) == 0 and verify_conjugation(g, s_letter(i, n), s_letter(i % n + 1, n))
    return ok, str(g)


def _c06(p):
    n = p["n"]
    phi = artin(full_twist(n))
    ok = phi == conjugation(boundary_word(n)) and center_power_detect(phi) == 1
    return ok, f"conj({boundary_word(n)})"


def _c07(p):
    n = p["n"]
    b = parse_braid(p["braid"], n)
    phi = artin(b)
    cert = artin_conditions(phi)
    if cert is None:
        return False, "no certificate"
    ok = check_certificate(phi, cert) and cert.tau == mu(b)
    return ok, f"tau={cert.tau}"


def _c08(p):
    n = p["n"]
    u, v = parse_braid(p["u"], n), parse_braid(p["v"], n)
    garside = words_equal(u, v)
    artin_eq = artin_images(n, u.letters) == artin_images(n, v.letters)
    return garside == artin_eq, "equal" if garside else "distinct"


def _c09(p):
    return check_homomorphism_b4_b3(), "1 2 1 -> B_3"


def _c10(p):
    tol = p.get("tol", DEFAULT_TOL)
    exact = braid_relation_residual(B3_SL2Z)
    floats = [Matrix2(*(float(x) for x in (m.a, m.b, m.c, m.d))) for m in B3_SL2Z]
    float_res = braid_relation_residual(floats)
    comm = commutator_residual(B3_SL2Z)
    ok = exact == 0 and float_res < tol and comm >= 1
    return ok, f"residual={exact}; commutator={comm}"


def _c11(p):
    n, k = p["n"], p["k"]
    taus, wits = cyclic_sigma_family(n) if p["family"] == "sigma" else cyclic_s_family(n)
    report = lemma_general_hypotheses(taus, k, wits)
    wit_zero = p["family"] == "sigma" or all(exponent_sum(g) == 0 for g in wits)
    return report.passes and wit_zero, "; ".join(report.failures()) or f"{len(report.commutation)} commuting pairs"


def _c12(p):
    n = p["n"]
    if p["variant"] == "control":
        return not stabilizer_check([generator(n - 1, n)], n), f"mu(sigma_{n - 1}) moves {n}"
    gens = [generator(i, n) for i in range(1, n - 1)]
    if p["variant"] == "hyperelliptic":
        # the B_{2g+1} spanned by sigma_1..sigma_{2g} inside B_{2g+2}
        gens = [generator(i, n) for i in range(1, 2 * p["g"] + 1)]
    return stabilizer_check(gens, p["point"]), f"{len(gens)} generators fix {p['point']}"


def _c13(p):
    n = p["n"]
    w = parse_braid(p["word"], n)
    sw = rewrite_in_S(w, verify=False)
    pairs = commutator_expression(w)
    ok = words_equal(evaluate(sw), w) and words_equal(commutator_product(pairs, n), w)
    ok = ok and all(exponent_sum(a) == 0 == exponent_sum(b) for a, b in pairs)
    return ok, f"S-length={len(sw)}; pairs={len(pairs)}"


def _c14(p):
    n = p["n"]
    b = parse_braid(p["braid"], n)
    if normal_form(b).is_identity():
        return False, "sample has trivial normal form"
    return not artin(b).is_identity(), str(normal_form(b))


BODIES: dict[str, Callable] = {
    "C01-artin-relations": _c01,
    "C02-shift-conjugation": _c02,
    "C03-normality": _c03,
    "C04-perfect-commutator": _c04,
    "C05-zero-exponent-chain": _c05,
    "C06-full-twist-inner": _c06,
    "C07-artin-conditions": _c07,
    "C08-cross-oracle": _c08,
    "C09-b4-to-b3": _c09,
    "C10-b3-sl2z": _c10,
    "C11-hypotheses": _c11,
    "C12-stabilizer": _c12,
    "C13-rewrite-roundtrip": _c13,
    "C14-faithfulness": _c14,
}

# Smallest strand count each n-dependent check applies to.
MIN_N = {
    "C01-artin-relations": 2,
    "C02-shift-conjugation": 5,
    "C03-normality": 5,
    "C04-perfect-commutator": 5,
    "C05-zero-exponent-chain": 5,
    "C06-full-twist-inner": 2,
    "C07-artin-conditions": 2,
    "C08-cross-oracle": 2,
    "C11-hypotheses": 5,
    "C12-stabilizer": 2,
    "C13-rewrite-roundtrip": 5,
    "C14-faithfulness": 2,
}


def _instances_for(check_id: str, n: int, seed: int, samples: int) -> list[dict]:
    if check_id == "C01-artin-relations":
        out = [{"n": n, "relation": "braid", "i": i} for i in range(1, n - 1)]
        out += [{"n": n, "relation": "commute", "i": i, "j": j} for i in range(1, n) for j in range(i + 2, n)]
        out += [{"n": n, "relation": "inverse", "i": i} for i in range(1, n)]
        return out
    if check_id in ("C02-shift-conjugation", "C04-perfect-commutator", "C05-zero-exponent-chain"):
        return [{"n": n, "i": i} for i in range(1, n + 1)]
    if check_id == "C03-normality":
        return [{"n": n, "i": i, "j": j} for i in range(1, n + 1) for j in range(1, n + 1)]
    if check_id == "C06-full-twist-inner":
        return [{"n": n}]
    if check_id == "C11-hypotheses":
        out = [{"n": n, "k": 2, "family": "sigma"}]
        if n >= 7:
            out.append({"n": n, "k": 3, "family": "s"})
        return out
    if check_id == "C12-stabilizer":
        out = [{"n": n, "variant": "subgroup", "point": n}]
        if n % 2 == 0 and n >= 6:
            out.append({"n": n, "variant": "hyperelliptic", "g": (n - 2) // 2, "point": n})
        out.append({"n": n, "variant": "control", "point": n})
        return out
    rng = _rng(seed, check_id, n)
    out = []
    for idx in range(samples):
        if check_id == "C07-artin-conditions":
            out.append({"n": n, "sample": idx, "braid": str(random_word(rng, n, MAX_SAMPLE_LENGTH))})
        elif check_id == "C08-cross-oracle":
            u, v = random_pair(rng, n)
            out.append({"n": n, "sample": idx, "u": str(u), "v": str(v)})
        elif check_id == "C13-rewrite-roundtrip":
            w = random_zero_exponent_word(rng, n, MAX_REWRITE_LENGTH)
            out.append({"n": n, "sample": idx, "word": str(w)})
        elif check_id == "C14-faithfulness":
            b = random_word(rng, n, MAX_SAMPLE_LENGTH)
            while normal_form(b).is_identity():
                b = random_word(rng, n, MAX_SAMPLE_LENGTH)
            out.append({"n": n, "sample": idx, "braid": str(b)})
    return out


def plan_suite(n_range: tuple[int, int], seed: int, sample_count: int, tol: float = DEFAULT_TOL):
    """All (check id, params) instances plus the skip records, in generation order."""
    lo, hi = n_range
    if not (N_MIN <= lo <= hi <= N_MAX):
        raise DomainError(f"n range must lie within [{N_MIN}, {N_MAX}], got {lo}:{hi}")
    if sample_count < 1:
        raise DomainError("sample count must be >= 1")
    tasks = [("C09-b4-to-b3", {}), ("C10-b3-sl2z", {"tol": tol})]
    skips = []
    for check_id, min_n in MIN_N.items():
        for n in range(lo, hi + 1):
            if n < min_n:
                skips.append(CheckResult(check_id, {"n": n}, "skip", f"needs n >= {min_n}"))
                continue
            tasks.extend((check_id, params) for params in _instances_for(check_id, n, seed, sample_count))
    return tasks, skips


def run_instance(check_id: str, params: dict, timings: bool = False) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, witness = BODIES[check_id](params)
        status = "pass" if ok else "fail"
    except Exception as exc:  # a broken check is recorded, never fatal
        status, witness = "error", f"{type(exc).__name__}: {exc}"
    ms = int(round((time.perf_counter() - start) * 1000)) if timings else 0
    return CheckResult(check_id, params, status, witness, ms)


def _run_star(args):
    return run_instance(*args)


def run_suite(
    n_range: tuple[int, int],
    seed: int = 0,
    sample_count: int = 100,
    workers: int = 1,
    timings: bool = False,
    tol: float = DEFAULT_TOL,
) -> Report:
    """
    Run every check for each n in the inclusive range.  Elapsed times are only
    recorded with ``timings=True``; otherwise ``ms`` is 0 so that reports are
    byte-identical across runs.
    """
    tasks, skips = plan_suite(n_range, seed, sample_count, tol)
    args = [(cid, params, timings) for cid, params in tasks]
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_star, args, chunksize=16))
    else:
        results = [run_instance(*a) for a in args]
    ordered = sorted(results + skips, key=_sort_key)
    return Report(SUITE_VERSION, seed, tuple(ordered))


def emit_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        doc = {
            "version": report.version,
            "seed": report.seed,
            "results": [r.to_json() for r in report.results],
            "summary": report.summary,
        }
        return json.dumps(doc, separators=(",", ":"))
    if fmt == "text":
        lines = []
        for r in report.results:
            params = ",".join(f"{k}={v}" for k, v in r.params.items())
            lines.append("\t".join((r.id, params, r.status, r.witness, str(r.ms))))
        s = report.summary
        lines.append("# summary\t" + " ".join(f"{k}={s[k]}" for k in STATUSES))
        return "\n".join(lines)
    raise DomainError(f"unknown report format {fmt!r}; expected json or text")
