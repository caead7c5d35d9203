"""Acceptance suite: one test per criterion, exact tolerances, one
printed PASS/FAIL line each.

The per-complex battery over the standard corpus (cycles C^3..C^8,
simplexes and skeleta on <= 6 vertices, 200 seeded random complexes
with m <= 8, every isomorphism class on <= 4 vertices) is computed once
per session and shared by the criterion tests.  Arithmetic is exact;
every comparison below is equality, the only tolerances are the stated
wall-clock budgets.
"""

import json
import random
import time

import pytest

from posethom.cli import main as cli_main
from posethom.cochain import assemble
from posethom.corpus import standard_corpus
from posethom.functors import (
    constant_functor, functor_A, functor_face, functor_H,
)
from posethom.homology import HomologyEngine
from posethom.linalg import AbelianGroup
from posethom.simplicial import cycle, random_complex
from posethom.theories import (
    check_cone_property, check_constant_acyclic, check_face_functor,
    poincare_series, ses_exactness_check, theorem_A_check, theorem_B_check,
)

FUNCTORIALITY_TRIPLES = 1000


def _analyze(name, K):
    """Everything the criteria need for one corpus complex."""
    out = {"name": name, "m": K.m, "neighbourly": K.is_neighbourly()}
    eng = HomologyEngine(K)

    t0 = time.perf_counter()
    library = [constant_functor(K.m), functor_A(K.m), functor_face(K),
               functor_H(K, -1, True, "Z", engine=eng),
               functor_H(K, 0, True, "Z", engine=eng),
               functor_H(K, 0, False, "Z", engine=eng)]
    dd_ok = True
    for F in library:
        C = assemble(F, check=False)
        if C.dd_offender() is not None:
            dd_ok = False
    out["dd_ok"] = dd_ok
    out["dd_seconds"] = time.perf_counter() - t0

    out["face_oracle_ok"] = check_face_functor(K).passed
    out["cone_ok"] = check_cone_property(K).passed

    rep = theorem_A_check(K)
    out["A"] = rep
    out["B_Q"] = theorem_B_check(K, "Q")
    out["B_F2"] = theorem_B_check(K, "Fp:2")

    ses = ses_exactness_check(K)
    out["ses_pointwise"] = ses.pointwise_ok
    out["ses_degreewise"] = ses.degreewise_ok

    import zlib
    rng = random.Random(0xC0FFEE ^ zlib.crc32(name.encode()))
    full = (1 << K.m) - 1
    functorial_ok = True
    n_general = 16 if K.m <= 6 else 0
    for i in range(FUNCTORIALITY_TRIPLES):
        N = rng.randrange(full + 1)
        L = rng.randrange(full + 1) & N
        J = rng.randrange(full + 1) & L
        if i < n_general:
            q, reduced = 1, bool(i & 1)
        else:
            q, reduced = 0, bool(i & 1)
        f = eng.induced(J, L, q, reduced)
        g = eng.induced(L, N, q, reduced)
        if f.then(g) != eng.induced(J, N, q, reduced):
            functorial_ok = False
            break
    out["functorial_ok"] = functorial_ok
    out["functorial_triples"] = FUNCTORIALITY_TRIPLES
    return out


@pytest.fixture(scope="session")
def battery():
    return [_analyze(name, K) for name, K in standard_corpus()]


def _report(num, ok, text):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {text}")
    return ok


def test_criterion_1_construction_soundness(battery):
    bad = [r["name"] for r in battery if not r["dd_ok"]]
    total = sum(r["dd_seconds"] for r in battery)
    ok = not bad and total < 60.0
    assert _report(1, ok,
                   f"d∘d = 0 for every library functor on {len(battery)} "
                   f"corpus complexes in {total:.1f}s (< 60s)"), bad
    assert total < 60.0


def test_criterion_2_face_functor_oracle(battery):
    bad = [r["name"] for r in battery if not r["face_oracle_ok"]]
    ok = not bad
    assert _report(2, ok,
                   "face-functor cohomology equals shifted reduced "
                   f"simplicial cohomology on {len(battery)} complexes"), bad


def test_criterion_3_constant_acyclic_and_cone(battery):
    const_ok = all(check_constant_acyclic(m).passed for m in range(1, 9))
    cone_bad = [r["name"] for r in battery if not r["cone_ok"]]
    ok = const_ok and not cone_bad
    assert _report(3, ok,
                   "constant functor acyclic for m = 1..8; every fired "
                   "cone certificate implies vanishing cohomology"), cone_bad


def test_criterion_4_vanishing_biconditionals(battery):
    bad = []
    for r in battery:
        rep = r["A"]
        if (rep.h2_ht0.is_zero()) != r["neighbourly"]:
            bad.append((r["name"], "H2-reduced"))
        if (rep.h1_h0.is_zero()) != (not r["neighbourly"]):
            bad.append((r["name"], "H1-unreduced"))
        if r["neighbourly"] and rep.h1_h0 != AbelianGroup(1):
            bad.append((r["name"], "H1-not-Z"))
    exhaustive = [r for r in battery if r["m"] <= 4]
    ok = not bad and len(exhaustive) >= 28
    assert _report(4, ok,
                   "H^2(reduced) = 0 iff neighbourly and H^1(unreduced) = 0 "
                   f"iff non-neighbourly, with H^1 = Z when neighbourly, on "
                   f"{len(battery)} complexes (all classes on <= 4 vertices "
                   "included)"), bad


def test_criterion_5_comparison_theorem(battery):
    bad = [r["name"] for r in battery if not r["A"].passed]
    ok = not bad
    assert _report(5, ok,
                   "invariant-factor isomorphism for l > 2, branch "
                   "consequences, and rational isomorphisms of the explicit "
                   f"cochain map verified on {len(battery)} complexes"), bad


def test_criterion_6_series_difference(battery):
    bad = [r["name"] for r in battery
           if not (r["B_Q"].passed and r["B_F2"].passed)]
    c3 = next(r for r in battery if r["name"] == "cycle:3")
    assert str(c3["B_Q"].difference) == "x^-1 - y"
    for m in range(4, 9):
        rm = next(r for r in battery if r["name"] == f"cycle:{m}")
        assert str(rm["B_Q"].difference) == "x^-1 + y^2"
    ok = not bad
    assert _report(6, ok,
                   "series difference equals x^-1 - y (neighbourly) or "
                   f"x^-1 + y^2 (otherwise) over Q and F_2 on {len(battery)} "
                   "complexes"), bad


def test_criterion_7_ses_exactness(battery):
    bad = [r["name"] for r in battery
           if not (r["ses_pointwise"] and r["ses_degreewise"])]
    ok = not bad
    assert _report(7, ok,
                   "pointwise rank identity and degreewise exactness of "
                   "0 -> reduced -> unreduced -> A -> 0 on "
                   f"{len(battery)} complexes"), bad


def test_criterion_8_functoriality(battery):
    bad = [r["name"] for r in battery if not r["functorial_ok"]]
    n = battery[0]["functorial_triples"]
    ok = not bad and n == 1000
    assert _report(8, ok,
                   f"induced-map composition law on {n} sampled triples "
                   f"J ⊆ L ⊆ N per complex, {len(battery)} complexes"), bad


def test_criterion_9_performance():
    from posethom.theories import double_homology, uber_B
    K10, _ = random_complex(10, 2, 0.4, seed=2026)
    t0 = time.perf_counter()
    double_homology(K10, "Z")
    uber_B(K10, "Z")
    z_elapsed = time.perf_counter() - t0

    K12, _ = random_complex(12, 2, 0.3, seed=2026)
    t0 = time.perf_counter()
    for reduced in (True, False):
        poincare_series(K12, reduced, "Q")
    q_elapsed = time.perf_counter() - t0
    t0 = time.perf_counter()
    for reduced in (True, False):
        poincare_series(K12, reduced, "Fp:2")
    f2_elapsed = time.perf_counter() - t0

    ok = z_elapsed < 300.0 and q_elapsed < 900.0 and f2_elapsed < 900.0
    assert _report(9, ok,
                   f"m=10 integer bigraded tables in {z_elapsed:.1f}s "
                   f"(< 300s); m=12 Betti tables in {q_elapsed:.1f}s over Q "
                   f"and {f2_elapsed:.1f}s over F_2 (< 900s)")


def _run_cli(capsys, *argv):
    code = cli_main(list(argv))
    return code, capsys.readouterr().out


def test_criterion_10_determinism(capsys, monkeypatch):
    outputs = set()
    for jobs in ("1", "2"):
        monkeypatch.setenv("POSET_HOM_THREADS", jobs)
        code, out = _run_cli(capsys, "verify", "lemma-2.13",
                             "--corpus", "all-complexes:4",
                             "--format", "json")
        assert code == 0
        outputs.add(out)
    for jobs in (1, 2):
        code, out = _run_cli(capsys, "verify", "lemma-2.13",
                             "--corpus", "all-complexes:4",
                             "--jobs", str(jobs), "--format", "json")
        assert code == 0
        outputs.add(out)
    gen_outs = set()
    for _ in range(2):
        code, out = _run_cli(capsys, "gen", "random:6,2,0.5,seed=1")
        gen_outs.add(out)
    tables = set()
    for _ in range(2):
        code, out = _run_cli(capsys, "compute", "--gen", "cycle:5",
                             "--theory", "dh", "--coeffs", "Q",
                             "--format", "json")
        tables.add(out)
    ok = len(outputs) == 1 and len(gen_outs) == 1 and len(tables) == 1
    assert _report(10, ok,
                   "byte-identical JSON reports across repeated runs, "
                   "thread counts, and worker settings")
    json.loads(next(iter(outputs)))
