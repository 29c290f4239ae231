"""Acceptance suite: every criterion at its stated sample sizes.

One line is printed per criterion and genus (run pytest with -s to stream
them); the same checks back the `verify` subcommand of the command line.
"""

import pytest

from curvecones import acceptance as acc
from curvecones import canring, curve as cv

PRIME = 1000003
CFG = acc.SuiteConfig()


@pytest.fixture(scope="session")
def state4(ctx4):
    return acc._shared(ctx4, CFG)


@pytest.fixture(scope="session")
def state5(ctx5):
    return acc._shared(ctx5, CFG)


def _ctx(request, genus):
    return request.getfixturevalue("ctx4" if genus == 4 else "ctx5")


def _state(request, genus):
    return request.getfixturevalue("state4" if genus == 4 else "state5")


def _check(result, genus):
    print(f"g={genus} " + result.line())
    assert result.ok, result.line()


@pytest.mark.parametrize("genus", [4, 5])
class TestAcceptance:
    def test_criterion_01_ideal_dimensions(self, request, genus):
        _check(acc.criterion_ideal_dims(_ctx(request, genus)), genus)

    def test_criterion_02_petri_dichotomy(self, request, genus):
        _check(acc.criterion_petri(_ctx(request, genus)), genus)

    def test_criterion_03_plane_image_degree(self, request, genus):
        _check(acc.criterion_gamma(_ctx(request, genus),
                                   _state(request, genus)), genus)

    def test_criterion_04_corank_law(self, request, genus):
        _check(acc.criterion_corank_law(_ctx(request, genus), CFG), genus)

    def test_criterion_05_reconstruction_certificate(self, request, genus):
        _check(acc.criterion_reconstruction(_ctx(request, genus), CFG,
                                            _state(request, genus)), genus)

    def test_criterion_06_double_quadric_law(self, request, genus):
        _check(acc.criterion_double_quadric(_ctx(request, genus), CFG),
               genus)

    def test_criterion_07_polar_cubics(self, request, genus):
        _check(acc.criterion_polars(_ctx(request, genus), CFG,
                                    _state(request, genus)), genus)

    def test_criterion_08_hessian_steinerian(self, request, genus):
        _check(acc.criterion_hessian(_ctx(request, genus), CFG,
                                     _state(request, genus)), genus)

    def test_criterion_09_node_count(self, request, genus):
        _check(acc.criterion_node_count(_ctx(request, genus), CFG,
                                        _state(request, genus)), genus)

    def test_criterion_10_secant_criterion(self, request, genus):
        _check(acc.criterion_secant(_ctx(request, genus), CFG,
                                    _state(request, genus)), genus)

    def test_criterion_11_span_dimensions(self, request, genus):
        _check(acc.criterion_spans(_ctx(request, genus), CFG,
                                   _state(request, genus)), genus)

    def test_criterion_12_base_locus(self, request, genus):
        _check(acc.criterion_base_locus(_ctx(request, genus), CFG,
                                        _state(request, genus)), genus)


def test_criterion_13_determinism():
    def builder():
        return canring.build_context(cv.generate_curve(4, PRIME, 1))

    result = acc.criterion_determinism(builder, CFG)
    print("g=4 " + result.line())
    assert result.ok, result.line()
