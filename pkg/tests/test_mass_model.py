import csv
import io
import math
from fractions import Fraction

import pytest

from subspace_mass.errors import DomainError
from subspace_mass.mass_model import (
    ModelConfig,
    grassmann_dof,
    inferred_scale_report,
    problem2_table,
    ratio_electron,
    ratio_pion,
    ratio_proton,
    report_csv,
    report_json,
)
from subspace_mass.subspace_core import count_subspaces


def test_electron_ratio():
    r = ratio_electron()
    assert r.ratio_exact == Fraction(1, 1820)
    assert r.ratio_exact == Fraction(1, count_subspaces(16, 4))
    assert r.measured_ratio == 0.511 / 938
    assert r.inferred_M == pytest.approx(0.511 * 1820, rel=1e-15)
    assert round(r.inferred_M) == 930
    assert r.relative_deviation == pytest.approx(0.0086, abs=0.0002)
    assert r.relative_deviation < 0.02


def test_pion_ratio():
    r = ratio_pion()
    assert r.ratio_exact == Fraction(70, 495) == Fraction(14, 99)
    assert r.ratio_exact == Fraction(count_subspaces(8, 4), count_subspaces(12, 4))
    assert r.ratio_float == pytest.approx(0.141414, abs=1e-6)
    assert r.inferred_M == pytest.approx(135 * 99 / 14, rel=1e-15)
    assert round(r.inferred_M) == 955
    assert r.relative_deviation == pytest.approx(0.0177, abs=0.0002)
    assert r.relative_deviation < 0.03


def test_proton_ratio():
    r = ratio_proton()
    assert r.ratio_exact == 1
    assert r.inferred_M == 938.0
    assert r.relative_deviation == 0.0


def test_deviation_is_scale_offset_from_proton_mass():
    for r in (ratio_electron(), ratio_pion(), ratio_proton()):
        assert r.relative_deviation == pytest.approx(abs(r.inferred_M - 938.0) / 938.0, rel=1e-12, abs=1e-15)
        assert r.ratio_float == pytest.approx(r.ratio_exact.numerator / r.ratio_exact.denominator, rel=1e-15)


def test_pdg_masses_shift_third_decimal():
    paper, pdg = ratio_electron("paper"), ratio_electron("pdg")
    assert paper.ratio_exact == pdg.ratio_exact
    assert abs(paper.relative_deviation - pdg.relative_deviation) < 1e-3
    with pytest.raises(DomainError):
        ratio_electron("cgs")


def test_inferred_scale_report():
    values, mean = inferred_scale_report()
    assert values == pytest.approx((930.02, 954.642857142857, 938.0), rel=1e-12)
    assert mean == pytest.approx(940.8876, abs=1e-4)
    assert round(mean) == 941
    assert max(abs(v - mean) / mean for v in values) == pytest.approx(0.0146, abs=1e-4)
    assert (values[0] + values[1]) / 2 == pytest.approx(942.33, abs=0.01)


def test_problem2_table():
    table = problem2_table(4)
    assert table == [(1, 1), (2, 20), (3, 84), (4, 220)]
    for a, count in table:
        assert count == math.factorial(3 * a) // (6 * math.factorial(3 * a - 3))
    with pytest.raises(DomainError):
        problem2_table(0)


@pytest.mark.parametrize("n,N,expected", [
    (2, 3, (2, 2, True)),
    (2, 4, (4, 5, False)),
    (4, 16, (48, 1819, False)),
])
def test_grassmann_dof(n, N, expected):
    assert grassmann_dof(n, N) == expected


def test_grassmann_dof_domain():
    with pytest.raises(DomainError):
        grassmann_dof(5, 4)


def test_model_config_defaults():
    cfg = ModelConfig()
    assert not set(cfg.represented) & set(cfg.represented_tilde)
    assert set(cfg.represented_tilde) <= set(cfg.hadron_space)
    assert len(cfg.hadron_space) == 12


@pytest.mark.parametrize("kwargs", [
    {"represented_tilde": (4, 5, 6, 7)},
    {"hadron_dim": 11},
    {"pion_dim": 6},
    {"represented": (1, 2, 3)},
])
def test_model_config_rejects_inconsistent(kwargs):
    with pytest.raises(DomainError):
        ModelConfig(**kwargs)


def test_report_json_shape():
    data = report_json()
    assert [r["particle"] for r in data["results"]] == ["electron", "pion", "proton"]
    assert data["results"][1]["ratio"] == {"num": 14, "den": 99}
    assert round(data["mean_inferred_M_mev"]) == 941


def test_report_csv_rows():
    rows = list(csv.reader(io.StringIO(report_csv())))
    assert rows[0][0] == "particle"
    assert [r[0] for r in rows[1:]] == ["electron", "pion", "proton", "mean"]
    assert rows[1][1:3] == ["1", "1820"]
    assert rows[-1][-1] == "940.888"
