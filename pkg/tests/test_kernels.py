import random
from fractions import Fraction

import pytest

from bassinv import kernel
from bassinv.groebner import (MonomialOrder, buchberger, normal_form,
                              quotient_dimension, staircase)
from bassinv.polynomials import Polynomial

from conftest import VARS, poly, tjurina_generators, CORPUS_TEXTS

needs_compiled = pytest.mark.skipif(
    "cython" not in kernel.available_backends(),
    reason="compiled kernel not built")


def random_poly(rng, max_terms=6, max_exp=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(3))
        terms[e] = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
    return Polynomial(terms, VARS)


@needs_compiled
class TestBackendParity:
    @pytest.mark.parametrize("order", [MonomialOrder.grevlex(),
                                       MonomialOrder.lex(),
                                       MonomialOrder.weighted((3, 10, 15))])
    @pytest.mark.parametrize("text", CORPUS_TEXTS)
    def test_bases_identical(self, text, order):
        gens = tjurina_generators(poly(text))
        with kernel.use("py"):
            a = buchberger(gens, order)
            sa = staircase(a).monomials
        with kernel.use("cy"):
            b = buchberger(gens, order)
            sb = staircase(b).monomials
        assert a.generators == b.generators
        assert sa == sb

    def test_normal_forms_identical(self):
        rng = random.Random(42)
        gens = tjurina_generators(poly("z^2+y^3+x^10+x^7*y"))
        probes = [random_poly(rng) for _ in range(25)]
        with kernel.use("py"):
            basis_py = buchberger(gens)
            nf_py = [normal_form(p, basis_py) for p in probes]
        with kernel.use("cy"):
            basis_cy = buchberger(gens)
            nf_cy = [normal_form(p, basis_cy) for p in probes]
        assert nf_py == nf_cy

    def test_random_ideals_identical(self):
        rng = random.Random(7)
        for _ in range(10):
            gens = [random_poly(rng, max_terms=4, max_exp=4)
                    for _ in range(3)]
            with kernel.use("py"):
                a = buchberger(gens)
                da = quotient_dimension(a)
            with kernel.use("cy"):
                b = buchberger(gens)
                db = quotient_dimension(b)
            assert a.generators == b.generators
            assert da == db

    def test_kernel_primitives_agree(self):
        from bassinv import _core_py, _core_cy
        rng = random.Random(99)
        for kind, weights in ((0, ()), (1, ()), (2, (3, 10, 15)),
                              (3, (3, 10, 15))):
            for _ in range(50):
                e1 = tuple(rng.randint(0, 9) for _ in range(3))
                e2 = tuple(rng.randint(0, 9) for _ in range(3))
                assert (_core_py.order_key(e1, kind, weights)
                        == tuple(_core_cy.order_key(e1, kind, weights)))
                assert (_core_py.exp_divides(e1, e2)
                        == _core_cy.exp_divides(e1, e2))
                assert (_core_py.exp_lcm(e1, e2)
                        == tuple(_core_cy.exp_lcm(e1, e2)))

    def test_staircase_cap_matches(self, monkeypatch):
        from bassinv.errors import StaircaseLimitError
        monkeypatch.setenv("BASSINV_MAX_STAIRCASE", "4")
        gens = [poly("z"), poly("y^2"), poly("x^9")]
        for name in ("py", "cy"):
            with kernel.use(name):
                gb = buchberger(gens)
                with pytest.raises(StaircaseLimitError):
                    staircase(gb)


class TestSelection:
    def test_env_forcing(self, monkeypatch):
        monkeypatch.setenv("BASSINV_KERNEL", "nope")
        with pytest.raises(RuntimeError):
            kernel._initial()
        monkeypatch.setenv("BASSINV_KERNEL", "py")
        assert kernel._initial().BACKEND == "python"

    def test_use_restores(self):
        before = kernel.backend_name()
        with kernel.use("py"):
            assert kernel.backend_name() == "python"
        assert kernel.backend_name() == before

    def test_benchmark_smoke(self):
        import subprocess, sys
        from conftest import REPO
        proc = subprocess.run(
            [sys.executable, str(REPO / "benchmarks" / "bench_kernel.py"),
             "--quick"],
            capture_output=True, text=True, timeout=300)
        assert proc.returncode == 0, proc.stderr
        assert "identical=yes" in proc.stdout
