"""Acceptance gate: the twelve pinned criteria, one printed verdict line each.

Every criterion runs at its stated tolerance and prints a single
`criterion NN <label>: PASS|FAIL` line before asserting.
"""

import random
import time

from plectic import plectic_ops as po
from plectic.errors import InconsistentSigns, NotProportional
from plectic.grpalg import (
    GroupAlgebraElem,
    GroupShape,
    check_lemma_free_graded_injectivity,
)
from plectic.padic import INF, PadicScalar, QuadExtScalar, smallest_nonsquare
from plectic.runner import run
from plectic.scenario import load_scenario, parse_scenario
from plectic.symalg import FreeModule, SymTensor, collapse, sqrt_ratio
from plectic.tate import TateCurve

from pathlib import Path

P = 5
N = 40
C = smallest_nonsquare(P)
GOLDEN = Path(__file__).resolve().parent.parent / "scenarios"


def _verdict(num, label, ok):
    print("criterion %02d %s: %s" % (num, label, "PASS" if ok else "FAIL"))
    assert ok, "criterion %02d (%s) failed" % (num, label)


def mk(n, prec=N):
    return PadicScalar.from_int(n, P, prec)


def _random_unit(rng):
    one = QuadExtScalar.from_parts(1, 0, P, N, C)
    while True:
        u = QuadExtScalar.from_parts(rng.randrange(P ** N),
                                     rng.randrange(P ** N), P, N, C)
        if u.valuation == 0 and (u - one).valuation <= 2:
            return u


def test_criterion_01_character_table_determinant():
    start = time.monotonic()
    ok = all(abs(po.char_table_det(t)) == (2 ** t) ** (2 ** t // 2)
             for t in (1, 2, 3))
    ok = ok and [abs(po.char_table_det(t)) for t in (1, 2, 3)] == [2, 16, 4096]
    elapsed = time.monotonic() - start
    _verdict(1, "character table determinant (< 1 s)", ok and elapsed < 1.0)


def test_criterion_02_tate_homomorphism():
    start = time.monotonic()
    rng = random.Random(20240)
    q = PadicScalar(P, 1, 1, N)
    curve = TateCurve(q)
    margin = INF
    for _ in range(100):
        u, v = _random_unit(rng), _random_unit(rng)
        lhs = curve.phi(u * v)
        rhs = curve.add(curve.phi(u), curve.phi(v))
        margin = min(margin, lhs.agreement(rhs))
    elapsed = time.monotonic() - start
    _verdict(2, "Tate homomorphism on 100 pairs (margin >= 30, < 30 s)",
             margin >= 30 and elapsed < 30.0)


def test_criterion_03_kernel_property():
    q = PadicScalar(P, 1, 1, N)
    curve = TateCurve(q)
    q_ext = QuadExtScalar.from_base(q, C)
    one = QuadExtScalar.from_parts(1, 0, P, N, C)
    ok = all(curve.phi(q_ext ** k if k else one).is_infinity()
             for k in range(-2, 3))
    _verdict(3, "period powers die in the parametrization", ok)


def test_criterion_04_projector_algebra():
    rng = random.Random(4)
    ok = True
    for r in (2, 4):
        for _ in range(50):
            a = rng.choice((1, -1))
            sigma = po.make_sigma_point(a)
            terms = [(mk(rng.randrange(1, P ** 4)),
                      tuple(tuple(mk(rng.randrange(P ** 6)) for _ in range(2))
                            for _ in range(r)))
                     for _ in range(2)]
            x = po.PlecticTensor(r, 2, terms)
            plus = po.projector(x, "+", a, sigma)
            minus = po.projector(x, "-", a, sigma)
            ok = ok and po.projector(plus, "-", a, sigma).is_zero()
            ok = ok and po.projector(minus, "+", a, sigma).is_zero()
            for sign, once in (("+", plus), ("-", minus)):
                twice = po.projector(once, sign, a, sigma)
                ok = ok and twice.agreement(once.scale(mk(2 ** r))) >= N
    _verdict(4, "projector algebra on 100 random tensors", ok)


def test_criterion_05_graded_involution_diagram():
    rng = random.Random(5)
    shape = GroupShape((2, 2), 4, 6, P, 30)
    ok = True
    for n in range(1, 5):
        for _ in range(25):
            elem = GroupAlgebraElem.zero(shape)
            for _ in range(3):
                while True:
                    e = tuple(rng.randrange(3) for _ in range(shape.s))
                    if n <= sum(e) <= shape.degree:
                        break
                q = tuple(rng.randrange(2) for _ in range(2))
                elem = elem + GroupAlgebraElem.monomial(
                    shape, q, e, rng.randrange(1, P ** 6))
            lhs = elem.involution().leading_term(n)
            rhs = elem.leading_term(n).dual()
            ok = ok and lhs.agreement(rhs) >= 30
    _verdict(5, "graded involution diagram on 100 elements (mod p^30)", ok)


def test_criterion_06_injectivity_certificates():
    cases = [((2,), 2, 2), ((2, 2), 2, 3), ((2, 2), 4, 4)]
    ok = True
    for divisors, s, n in cases:
        shape = GroupShape(divisors, s, n + 2, P, N)
        want = len(shape.monomials(n)) * len(shape.q_elements())
        ok = ok and check_lemma_free_graded_injectivity(shape, n) == want
    _verdict(6, "graded injectivity rank certificates", ok)


def test_criterion_07_square_root_lemma():
    rng = random.Random(7)
    module = FreeModule(["e1", "e2"])

    def rand_vec():
        return [mk(rng.randrange(P ** 6)), mk(rng.randrange(1, P ** 6))]

    ok = True
    rejected = 0
    for _ in range(200):
        y = collapse(module, [(mk(rng.randrange(1, P ** 4)),
                               [rand_vec(), rand_vec()])])
        a = mk(rng.randrange(1, P ** 8))
        got = sqrt_ratio(y.scale(a), y, 30)
        ok = ok and got.agreement(a) >= 30
        bad = y.scale(a) + SymTensor(module, 2,
                                     {(2, 0): mk(1 + rng.randrange(P - 1))})
        try:
            sqrt_ratio(bad, y, 30)
        except NotProportional:
            rejected += 1
    _verdict(7, "square-root lemma (200 exact + 200 perturbed)",
             ok and rejected == 200)


def _mutate_u_eta(text, key, pos):
    """Flip one digit of a committed unit literal in the scenario text."""
    out = []
    for line in text.splitlines():
        if line.split("=")[0].strip() == key:
            head, value = line.split("=", 1)
            digits = [ch for ch in value if ch.isdigit()]
            count = -1
            rebuilt = []
            for ch in value:
                if ch.isdigit():
                    count += 1
                    if count == pos % len(digits):
                        ch = str((int(ch) + 1) % P)
                rebuilt.append(ch)
            line = head + "=" + "".join(rebuilt)
        out.append(line)
    return "\n".join(out) + "\n"


def test_criterion_08_factorization_round_trip():
    ok = True
    for name in ("t1-split.kv", "t2-split.kv"):
        path = GOLDEN / name
        sc = load_scenario(path)
        report = run(sc, suites=("factorization",), floor=30)
        ok = ok and report.ok and all(c.margin >= 30 for c in report.checks)
        # single-digit mutations of every committed unit must fail
        text = path.read_text()
        for i in range(sc.r):
            mutated = _mutate_u_eta(text, "u_eta.%d" % (i + 1), 3)
            bad = parse_scenario(mutated)
            bad_report = run(bad, suites=("factorization",), floor=30)
            ok = ok and not bad_report.ok
    _verdict(8, "factorization round trip + mutation detection", ok)


def test_criterion_09_algebraicity_identity():
    ok = True
    for name, budget in (("t1-split.kv", 120.0), ("t2-split.kv", 120.0)):
        sc = load_scenario(GOLDEN / name)
        start = time.monotonic()
        report = run(sc, suites=("algebraicity",), floor=25)
        elapsed = time.monotonic() - start
        ok = (ok and report.ok and elapsed < budget
              and all(c.margin >= 25 for c in report.checks))
    _verdict(9, "algebraicity identity (margin >= 25, t=2 < 2 min)", ok)


def test_criterion_10_sign_consistency():
    q = PadicScalar(P, 1, 1, N)
    ok = True
    for t in (0, 1, 2):
        r = 2 ** t
        inv = po.PlecticInvariant.scalar(r, mk(3), (0,) * max(t, 1))
        for a in (1, -1):
            for eps in (1, -1):
                cfg = po.PlecticConfig(t, P, a, q, eps)
                expect = ((-1) ** r) == eps * cfg.eps_s
                try:
                    verdict = po.sign_check(cfg, inv)["verdict"]
                    ok = ok and expect and verdict == "consistent"
                except InconsistentSigns:
                    ok = ok and not expect
    _verdict(10, "sign consistency accepted iff (-1)^r = eps * eps_S", ok)


def test_criterion_11_gz_leading_term_contract():
    ok = True
    q = PadicScalar(P, 1, 1, N)
    for t in (1, 2):
        cfg = po.PlecticConfig(t, P, 1, q, 1)
        r = cfg.r
        inv = po.PlecticInvariant.scalar(r, mk(123457),
                                         cfg.shape.q_identity())
        ell = po.gz_leading_term(inv, cfg.shape).as_elem()
        lhs = ell.leading_term(r).scale(PadicScalar.from_int(2 ** r, P, INF))
        rhs = po.theta(inv, cfg.shape).involution().leading_term(r)
        ok = ok and lhs.agreement(rhs) >= N
    _verdict(11, "leading-term reconstruction contract (r = 2, 4)", ok)


def test_criterion_12_deterministic_reports():
    ok = True
    for name in ("t1-split.kv", "t2-split.kv"):
        sc = load_scenario(GOLDEN / name)
        # committed seed: identical bytes and a clean pass
        first = run(sc, floor=30).render_kv()
        second = run(sc, floor=30).render_kv()
        ok = ok and first == second and "summary=pass" in first
        # any other fixed seed: still identical bytes
        third = run(sc, floor=30, seed=11).render_kv()
        fourth = run(sc, floor=30, seed=11).render_kv()
        ok = ok and third == fourth
    _verdict(12, "byte-identical reports at a fixed seed", ok)
