"""
Acceptance criteria, one test each.  Each criterion returns (ok, detail)
and the test writes one ``ACCEPTANCE <k> PASS|FAIL`` line to the terminal
(visible without -s).  Running this file with python prints the same lines.
"""
from __future__ import annotations

import random
import subprocess
import sys
import time

import pytest

from braidcheck.braid_core import (
    BraidWord,
    commutator,
    concat,
    cyclic_generator,
    exponent_sum,
    full_twist,
    generator,
    invert,
    max_word_length,
)
from braidcheck.cli import main
from braidcheck.commutator import (
    commutator_expression,
    commutator_product,
    conjugacy_chain_witness,
    evaluate,
    perfectness_witness,
    rewrite_in_S,
    s_letter,
)
from braidcheck.free_group import boundary_word, conjugation, parse_free
from braidcheck.garside import verify_conjugation, words_equal
from braidcheck.harness import random_pair, random_zero_exponent_word
from braidcheck.matrix_rep import (
    B3_SL2Z,
    Matrix2,
    braid_relation_residual,
    check_homomorphism_b4_b3,
    commutator_residual,
    cyclic_s_family,
    cyclic_sigma_family,
    lemma_general_hypotheses,
)
from braidcheck.representations import artin, artin_images, stabilizer_check


def _line(k, ok, detail):
    return f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'}: {detail}"


def _cli(*argv):
    import io

    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, environ={})
    return code, out.getvalue(), err.getvalue()


def criterion_1_identity_suite():
    import json

    start = time.perf_counter()
    code, out, _ = _cli("verify", "--n-range", "5:10", "--seed", "0")
    elapsed = time.perf_counter() - start
    summary = json.loads(out)["summary"]
    ok = code == 0 and summary["fail"] == 0 and summary["error"] == 0 and summary["pass"] >= 1000 and elapsed < 300
    return (ok, f"verify 5:10 seed 0 -> {summary}, {elapsed:.1f}s (limit 300s)")


def _smallest_commuting_index(i, n):
    # smallest j whose (cyclic) generator commutes with sigma_i and sigma_{i+1}
    def dist(a, b):
        d = (a - b) % n
        return min(d, n - d)

    return next(j for j in range(1, n + 1) if dist(j, i) >= 2 and dist(j, i + 1) >= 2)


def criterion_2_pinned_identities():
    failures = []
    count = 0
    for n in range(5, 11):
        for i in range(1, n - 2):
            # (sigma_i sigma_{i+1} sigma_{i+2}) s_i (...)^-1 = s_{i+1}
            g = BraidWord(n, (i, i + 1, i + 2))
            count += 1
            if not verify_conjugation(g, BraidWord(n, (i, -(i + 1))), BraidWord(n, (i + 1, -(i + 2)))):
                failures.append(f"shift n={n} i={i}")
        for i in range(1, n + 1):
            j = _smallest_commuting_index(i, n)
            gi, gi1, gj = cyclic_generator(i, n), cyclic_generator(i + 1, n), cyclic_generator(j, n)
            a = concat(gi1, gi, invert(gj), invert(gj))
            b = concat(gi1, invert(gj))
            count += 1
            if not words_equal(commutator(a, b), concat(gi, invert(gi1))):
                failures.append(f"commutator n={n} i={i} j={j}")
            if (a, b) != perfectness_witness(i, n):
                failures.append(f"witness n={n} i={i}")
        for i in range(1, n + 1):
            g = conjugacy_chain_witness(i, n)
            count += 1
            if exponent_sum(g) != 0 or not verify_conjugation(g, s_letter(i, n), s_letter(i % n + 1, n)):
                failures.append(f"chain n={n} i={i}")
    for n in range(2, 11):
        count += 1
        # the fixed boundary product, written left to right, is eta_n ... eta_1
        if artin(full_twist(n)) != conjugation(boundary_word(n)):
            failures.append(f"twist n={n}")
    # the same statement for the left-to-right product eta_1 ... eta_n does not hold
    literal = artin(full_twist(3)) == conjugation(parse_free("1 2 3", 3))
    ok = not failures and not literal
    return (ok, f"{count} pinned identities exact, failures={failures[:5]}; "
                            f"twist = conj(eta_n..eta_1), literal eta_1..eta_n product differs")


def criterion_3_cross_oracle():
    agree = total = equal = 0
    for n in range(3, 8):
        rng = random.Random(f"acceptance-3:{n}")
        for _ in range(10_000):
            u, v = random_pair(rng, n, 24)
            g = words_equal(u, v)
            a = artin_images(n, u.letters) == artin_images(n, v.letters)
            total += 1
            agree += g == a
            equal += g
    return (agree == total, f"Garside vs Artin agree on {agree}/{total} pairs ({equal} equal)")


def criterion_4_rewriting():
    bad = []
    longest = 0
    total = 0
    for n in range(5, 9):
        rng = random.Random(f"acceptance-4:{n}")
        for _ in range(1000):
            w = random_zero_exponent_word(rng, n, 16)
            sw = rewrite_in_S(w)
            pairs = commutator_expression(w)
            total += 1
            longest = max(longest, len(sw), len(commutator_product(pairs, n)))
            if not words_equal(evaluate(sw), w) or not words_equal(commutator_product(pairs, n), w):
                bad.append(str(w))
    ok = not bad and longest <= max_word_length()
    return (ok, f"{total - len(bad)}/{total} round trips exact, longest output {longest} "
                            f"(guard {max_word_length()})")


def criterion_5_sharpness():
    exact = braid_relation_residual(B3_SL2Z)
    comm = commutator_residual(B3_SL2Z)
    b4 = check_homomorphism_b4_b3()
    pinned = B3_SL2Z == (Matrix2(1, 1, 0, 1), Matrix2(1, 0, -1, 1))
    ok = pinned and exact == 0 and isinstance(exact, int) and comm >= 1 and b4
    return (ok, f"B3->SL2Z residual {exact}, commutator norm {comm}; B4->B3 relations hold: {b4}")


def criterion_6_hypotheses():
    k2 = {n: lemma_general_hypotheses(*_with_k(cyclic_sigma_family(n), 2)).passes for n in range(5, 9)}
    k3 = {n: lemma_general_hypotheses(*_with_k(cyclic_s_family(n), 3)).passes for n in range(7, 10)}
    threshold = lemma_general_hypotheses(*_with_k(cyclic_sigma_family(4), 2))
    ok = all(k2.values()) and all(k3.values()) and not threshold.passes and not threshold.threshold
    return (ok, f"k=2 sigmas {k2}, k=3 S-letters {k3}, n=4 k=2 fails threshold: {not threshold.threshold}")


def _with_k(family, k):
    taus, wits = family
    return taus, k, wits


def criterion_7_stabilizer():
    results = {}
    for g in (2, 3, 4):
        n = 2 * g + 2
        odd = [generator(i, n) for i in range(1, 2 * g + 1)]
        control = [generator(n - 1, n)]
        results[g] = stabilizer_check(odd, n) and not stabilizer_check(control, n)
    subgroup_ok = all(stabilizer_check([generator(i, n) for i in range(1, n - 1)], n) for n in range(3, 11))
    ok = all(results.values()) and subgroup_ok
    return (ok, f"B_(2g+1) image fixes 2g+2: {results}; B_(n-1) fixes n for n=3..10: {subgroup_ok}")


DETERMINISM_COMMANDS = [
    ["nf", "--n", "4", "1 -2 3 -1 2"],
    ["eq", "--n", "3", "1 2 1", "2 1 2"],
    ["artin", "--n", "3", "--braid", "1", "--word", "2"],
    ["mu", "--n", "5", "1 2 3 4"],
    ["expsum", "--n", "4", "1 -2 3"],
    ["rewrite", "--n", "6", "1 2 -3 -5"],
    ["commutators", "--n", "5", "1 -2 3 -4"],
    ["inner", "--n", "4", "1 2 3 1 2 3 1 2 3 1 2 3"],
    ["matrix", "1,1,0,1", "1,0,-1,1"],
    ["hypotheses", "--n", "7", "--k", "3", "--family", "s"],
    ["verify", "--n-range", "5:6", "--seed", "3", "--samples", "20", "--format", "json"],
    ["verify", "--n-range", "5:6", "--seed", "3", "--samples", "20", "--format", "text", "--workers", "2"],
]


def criterion_8_determinism():
    differing = []
    for argv in DETERMINISM_COMMANDS:
        runs = [
            subprocess.run([sys.executable, "-m", "braidcheck", *argv], capture_output=True)
            for _ in range(2)
        ]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode or not runs[0].stdout:
            differing.append(argv[0])
    return (not differing, f"{len(DETERMINISM_COMMANDS)} commands run twice, differing: {differing}")


CRITERIA = sorted((k, v) for k, v in globals().items() if k.startswith("criterion_"))


@pytest.mark.parametrize("name", [k for k, _ in CRITERIA])
def test_acceptance(name, request):
    ok, detail = dict(CRITERIA)[name]()
    line = _line(name.split("_")[1], ok, detail)
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for name, fn in CRITERIA:
        ok, detail = fn()
        print(_line(name.split("_")[1], ok, detail))
        failed += not ok
    sys.exit(1 if failed else 0)
