"""Acceptance suite: one test per criterion, each printing a verdict line.

Every algebraic claim is checked in exact arithmetic (tolerance zero); the
geodesic comparison uses the stated float tolerances.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the per-criterion lines.
"""

import contextlib
import io
import random
import time
from fractions import Fraction
from math import comb

from symtrans import formats
from symtrans._kernels import int_det
from symtrans.affine import GroupChart
from symtrans.cli import main as cli_main
from symtrans.cubic import act, sample_nonisotropic, sample_regular
from symtrans.errors import InvalidDimension
from symtrans.hermitian import HermitianSpace, random_gl_complex
from symtrans.kahler import (
    SKStructure,
    anticommutation_solution_basis,
    complex_support_dim,
    realize_s,
    rigidity_solution_dim,
    sample_potential,
)
from symtrans.linalg import vec_add
from symtrans.sampling import random_vector
from symtrans.symplectic import SymplecticSpace

NS = (1, 2, 3, 4)
SAMPLES_PER_N = 500

_lagrangian_cache: dict = {}
_mixed_cache: dict = {}


def lagrangian_samples(n: int) -> list:
    if n not in _lagrangian_cache:
        sp = SymplecticSpace(n)
        rng = random.Random(1000 + n)
        _lagrangian_cache[n] = [
            sample_regular(sp, sp.random_lagrangian(rng), rng)
            for _ in range(SAMPLES_PER_N)
        ]
    return _lagrangian_cache[n]


def mixed_stratum_samples(n: int, count: int = 100) -> list:
    if n not in _mixed_cache:
        sp = SymplecticSpace(n)
        rng = random.Random(2000 + n)
        _mixed_cache[n] = [
            sample_regular(sp, sp.random_isotropic(rng.randint(0, n), rng), rng)
            for _ in range(count)
        ]
    return _mixed_cache[n]


def report(num: int, name: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {name}: PASS{suffix}")


def test_criterion_01_variety_equivalence():
    start = time.perf_counter()
    for n in NS:
        for s in lagrangian_samples(n):
            stratum = s.in_c_sp()
            assert stratum.in_variety, f"n={n}: commuting/traceless test failed"
            assert stratum.isotropic, f"n={n}: support not isotropic"
        sp = SymplecticSpace(n)
        rng = random.Random(3000 + n)
        for _ in range(SAMPLES_PER_N):
            s = sample_nonisotropic(sp, rng)
            assert s.commutator_witness() is not None, \
                f"n={n}: non-isotropic support without commutator witness"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"criterion 1 exceeded budget: {elapsed:.1f}s"
    report(1, "variety equivalence",
           f"{len(NS) * SAMPLES_PER_N} isotropic + {len(NS) * SAMPLES_PER_N} "
           f"non-isotropic samples in {elapsed:.1f}s")


def test_criterion_02_nilpotency_and_unipotence():
    checked = 0
    for n in NS:
        dim = 2 * n
        rng = random.Random(4000 + n)
        for s in lagrangian_samples(n):
            assert s.products_vanish(), "S_X S_Y != 0 on a variety member"
            chart = GroupChart(s)
            for _ in range(20):
                v = random_vector(rng, dim)
                entries, den = chart._differential_int(v)
                assert int_det(entries) == den ** dim, "differential not unipotent"
            checked += 1
    report(2, "nilpotency and unipotence", f"{checked} groups x 20 points")


def test_criterion_03_group_law_and_orbit_roundtrip():
    for n in NS:
        sp = SymplecticSpace(n)
        rng = random.Random(5000 + n)
        s = sample_regular(sp, sp.random_lagrangian(rng), rng)
        chart = GroupChart(s)
        for _ in range(500):
            x = random_vector(rng, sp.dim)
            y = random_vector(rng, sp.dim)
            ex, ey = chart.exp_element(x), chart.exp_element(y)
            exy = chart.exp_element(vec_add(x, y))
            assert ex.compose(ey) == exy, "exp is not a homomorphism"
            assert ey.compose(ex) == exy, "group is not Abelian"
        for _ in range(500):
            x = random_vector(rng, sp.dim)
            assert chart.orbit_map_inverse(chart.orbit_map(x)) == x
    report(3, "Abelian group law and orbit round trip",
           f"{len(NS)} groups x 500 pairs and 500 points")


def test_criterion_04_translation_dimension():
    checked = 0
    for n in NS:
        for s in lagrangian_samples(n) + mixed_stratum_samples(n):
            stratum = s.in_c_sp()
            k = stratum.k
            assert k <= n, "support dimension exceeds n"
            sub = GroupChart(s).translation_subgroup()
            assert sub.dim == 2 * n - k, "translation dimension mismatch"
            assert sub.dim >= n, "missing n-dimensional translation subgroup"
            checked += 1
    report(4, "translation dimension", f"{checked} samples, dim = 2n - k, k <= n")


def test_criterion_05_equivariance():
    pairs = 0
    for n in NS:
        sp = SymplecticSpace(n)
        rng = random.Random(6000 + n)
        for _ in range(25):
            s = sample_regular(sp, sp.random_isotropic(rng.randint(0, n), rng), rng)
            g = sp.random_symplectic(rng)
            moved = act(g, s)
            assert moved.support() == s.support().transform(g), "support not equivariant"
            chart = GroupChart(s)
            moved_chart = GroupChart(moved)
            for _ in range(3):
                x = random_vector(rng, sp.dim)
                assert moved_chart.exp_element(g.apply(x)) == \
                    chart.exp_element(x).conjugate_by(g), "exponentials not intertwined"
            pairs += 1
    report(5, "group-action equivariance", f"{pairs} (g, S) pairs")


def test_criterion_06_rigidity_definite():
    for p in (1, 2, 3):
        space = HermitianSpace(p, 0)
        assert rigidity_solution_dim(space) == 0, f"(p,q)=({p},0) admits a nonzero solution"
        basis = anticommutation_solution_basis(space)
        assert len(basis) == 2 * comb(p + 2, 3)
        for b in basis:
            assert b.commutator_witness() is not None, \
                "a nonzero pure-type cubic entered the cone on a definite space"
    report(6, "definite-signature rigidity", "signatures (1,0) (2,0) (3,0): only 0")


def test_criterion_07_flat_special_kahler_pipeline():
    for p, q in ((1, 1), (2, 2)):
        space = HermitianSpace(p, q)
        rng = random.Random(7000 + 10 * p + q)
        for index in range(50):
            k = rng.randint(1, space.max_isotropic_dim())
            w = space.random_isotropic_complex(k, rng)
            degree = 3 + (index % 2)
            structure = SKStructure(sample_potential(space, w, degree, rng))
            for _ in range(20):
                point = random_vector(rng, space.dim)
                verdicts = structure.check_flat_at(point)
                bad = [v.name for v in verdicts if not v.passed]
                assert not bad, f"({p},{q}) potential {index}: {bad}"
    report(7, "flat special Kahler pipeline",
           "signatures (1,1) and (2,2), 50 potentials x 20 points, "
           "conditions + curvature + Levi-Civita exact")


def test_criterion_08_stratification_bound():
    signatures = [(p, q) for p in range(5) for q in range(5) if 1 <= p + q <= 4]
    for p, q in signatures:
        space = HermitianSpace(p, q)
        bound = space.max_isotropic_dim()
        rng = random.Random(8000 + 10 * p + q)
        for k in range(bound + 1):
            w = space.random_isotropic_complex(k, rng)
            if k == 0:
                continue
            potential = sample_potential(space, w, 3, rng)
            point = random_vector(rng, space.dim)
            s = realize_s(potential, point)
            assert s.in_c_j(space.j_matrix)
            dim_c = complex_support_dim(potential, space.complexify(point))
            assert dim_c <= bound, f"({p},{q}): support dim {dim_c} > {bound}"
        try:
            space.random_isotropic_complex(bound + 1, rng)
            raise AssertionError("sampler accepted k above the bound")
        except InvalidDimension:
            pass
    report(8, "support stratification bound",
           f"{len(signatures)} signatures with p+q <= 4, dim <= min(p, q)")


def test_criterion_09_geodesics_and_completeness():
    start = time.perf_counter()
    worst = 0.0
    structures = []
    for p, q, seed in ((1, 1, 1), (1, 1, 2), (2, 2, 3)):
        space = HermitianSpace(p, q)
        rng = random.Random(9000 + seed)
        w = space.random_isotropic_complex(space.max_isotropic_dim(), rng)
        structures.append((space, SKStructure(sample_potential(space, w, 3, rng))))
    for space, structure in structures:
        rng = random.Random(9100)
        for _ in range(20):
            p0 = random_vector(rng, space.dim)
            v0 = random_vector(rng, space.dim)
            result = structure.geodesic("nabla", p0, v0, 1.0, 1e-3)
            assert result.sup_norm_diff < 1e-8, \
                f"closed form vs RK4 diverged: {result.sup_norm_diff}"
            worst = max(worst, result.sup_norm_diff)
        far = Fraction(10 ** 6)
        for t in (far, -far):
            point = structure.closed_form_point(p0, v0, t)
            assert len(point) == space.dim
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"criterion 9 exceeded budget: {elapsed:.1f}s"
    report(9, "geodesics and completeness",
           f"worst sup-norm {worst:.2e} < 1e-8, complete at |t| = 1e6, {elapsed:.1f}s")


def _run_cli_script(tmp_path) -> bytes:
    """A fixed CLI scenario; returns all structured output bytes."""
    cubic_path = str(tmp_path / "sample.cubic")
    chunks = []
    for argv in (
        ["sample", "--n", "3", "--k", "2", "--seed", "41",
         "--out", cubic_path, "--format", "structured"],
        ["check", cubic_path, "--format", "structured"],
        ["stratum", cubic_path, "--format", "structured"],
        ["group", cubic_path, "--seed", "42", "--trials", "50", "--format", "structured"],
        ["orbit", cubic_path, "--seed", "43", "--trials", "50", "--format", "structured"],
        ["transitivity", cubic_path, "--seed", "44", "--trials", "50",
         "--format", "structured"],
    ):
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(argv)
        assert code == 0, argv
        chunks.append(buffer.getvalue())
    with open(cubic_path, "rb") as fh:
        chunks.append(fh.read().decode("ascii"))
    return "".join(chunks).encode("ascii")


def test_criterion_10_determinism(tmp_path):
    first = _run_cli_script(tmp_path / "a")
    second = _run_cli_script(tmp_path / "b")
    (tmp_path / "a").mkdir(exist_ok=True)
    assert first == second, "structured reports differ between identical runs"
    report(10, "deterministic reports", f"{len(first)} bytes, byte-identical")


def _sk_cli_round(tmp_path) -> bytes:
    space = HermitianSpace(1, 1)
    rng = random.Random(77)
    potential = sample_potential(
        space, space.random_isotropic_complex(1, rng), 3, rng)
    pot_path = tmp_path / "f.potential"
    formats.write_potential(pot_path, potential)
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = cli_main(["sk-verify", str(pot_path), "--seed", "5", "--trials", "5",
                         "--format", "structured"])
    assert code == 0
    with contextlib.redirect_stdout(buffer):
        code = cli_main(["geodesic", str(pot_path), "--seed", "6", "--trials", "3",
                         "--format", "structured"])
    assert code == 0
    return buffer.getvalue().encode("ascii")


def test_criterion_10b_sk_cli_determinism(tmp_path):
    a = _sk_cli_round(tmp_path / "a")
    b = _sk_cli_round(tmp_path / "b")
    assert a == b
    report(10, "deterministic sk reports", "sk-verify + geodesic byte-identical")
