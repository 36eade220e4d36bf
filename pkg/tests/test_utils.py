"""Extension files, report writers, the grid runner and the residual oracles."""

import json
import math

import numpy as np
import pandas as pd
import pytest

from conftest import random_hermitian
from src.errors import ConfigError, NonHermitianError
from src.extensions import ExtensionParam
from src.resolvent import point_spectrum, zero_resonance
from src.utils import (
    complex_from_json,
    complex_to_json,
    create_final_output,
    load_extension,
    parallel_map,
    pauli_residual,
    radial_residual,
    read_spectrum_csv,
    save_extension,
    write_spectrum_report,
    write_table,
)


def test_complex_json():
    assert complex_from_json({"re": 1.5, "im": -2.0}) == 1.5 - 2j
    assert complex_from_json({"re": 3}) == 3
    assert complex_from_json([0.5, 0.25]) == 0.5 + 0.25j
    assert complex_from_json(2) == 2
    assert complex_to_json(1 - 1j) == {"re": 1.0, "im": -1.0}
    for bad in ({"im": 1.0}, "1+2j", True, [1, 2, 3]):
        with pytest.raises(ConfigError):
            complex_from_json(bad)


def test_extension_round_trip(tmp_path, rng):
    ext = ExtensionParam.from_theta(random_hermitian(rng, scale=math.pi))
    loaded = load_extension(save_extension(ext, tmp_path / "theta.json"))
    assert loaded.kind == "theta"
    np.testing.assert_array_equal(loaded.matrix, ext.matrix)
    beta = ExtensionParam.from_beta(random_hermitian(rng))
    again = load_extension(save_extension(beta, tmp_path / "beta.json"))
    assert again.kind == "beta"
    np.testing.assert_array_equal(again.matrix, beta.matrix)


def test_load_presets_and_inline():
    assert load_extension(None).is_friedrichs
    assert load_extension("friedrichs").is_friedrichs
    np.testing.assert_array_equal(load_extension("krein").theta_matrix(0.5), np.zeros((4, 4)))
    inline = json.dumps({"kind": "theta", "matrix": np.diag([1.0, 2.0, 3.0, 4.0]).tolist()})
    np.testing.assert_array_equal(np.diag(load_extension(inline).matrix), [1, 2, 3, 4])


def test_load_split_real_imaginary(tmp_path):
    theta = np.diag([1.0, 2.0, 3.0, 4.0]).astype(complex)
    theta[0, 1], theta[1, 0] = 0.5j, -0.5j
    document = {"kind": "theta", "re": theta.real.tolist(), "im": theta.imag.tolist()}
    np.testing.assert_array_equal(load_extension(json.dumps(document)).matrix, theta)
    saved = json.loads(save_extension(ExtensionParam.from_theta(theta), tmp_path / "t.json").read_text())
    assert saved["re"][0][0] == 1.0
    assert saved["im"][0][1] == 0.5
    real_only = {"kind": "beta", "re": np.eye(4).tolist()}
    np.testing.assert_array_equal(load_extension(json.dumps(real_only)).matrix, np.eye(4))


@pytest.mark.parametrize("source", [
    '{"kind": "theta", "re": [[1, 0], [0, 1]]}',
    '{"kind": "theta", "re": [["a", 0, 0, 0]]}',
    '{"kind": "sideways"}',
    '{"kind": "theta"}',
    '{"kind": "theta", "matrix": [[1, 0], [0, 1]]}',
    '{"matrix": []}',
    "not json at all",
])
def test_load_errors(source):
    with pytest.raises(ConfigError):
        load_extension(source)


def test_load_non_hermitian():
    matrix = np.zeros((4, 4))
    matrix[0, 1] = 1.0
    with pytest.raises(NonHermitianError):
        load_extension(json.dumps({"kind": "theta", "matrix": matrix.tolist()}))


def test_parallel_map_order():
    assert parallel_map(abs, [-3, 2, -1, 0, -7]) == [3, 2, 1, 0, 7]
    assert parallel_map(abs, [-3, 2, -1, 0, -7], workers=3) == [3, 2, 1, 0, 7]
    assert parallel_map(int, ["101", "11", "1"], base=2) == [5, 3, 1]
    assert parallel_map(abs, [], workers=4) == []


def test_create_final_output():
    output = create_final_output("spectrum", {"alpha": 0.5}, {"rows": []})
    assert output == {"command": "spectrum", "parameters": {"alpha": 0.5}, "results": {"rows": []}}


def test_write_table(tmp_path):
    df = pd.DataFrame({"r": [0.5, 1.0], "re_value": [0.1, 1.0 / 3.0]})
    csv_path = write_table(df, tmp_path / "t.csv", "csv")
    assert pd.read_csv(csv_path)["re_value"][1] == 1.0 / 3.0
    json_path = write_table(df, tmp_path / "t.json", "json", command="eigfun", parameters={"alpha": 0.3})
    document = json.loads(json_path.read_text())
    assert document["command"] == "eigfun"
    assert len(document["results"]["rows"]) == 2
    with pytest.raises(ConfigError):
        write_table(df, tmp_path / "t.xml", "xml")


def test_spectrum_report_csv(tmp_path, krein, half_pi_theta):
    records = point_spectrum(0.5, krein)
    path = write_spectrum_report(records, zero_resonance(0.5, krein), [], tmp_path / "krein.csv", "csv")
    parsed = read_spectrum_csv(path)
    assert parsed["marker"] == "# resonances: none"
    assert parsed["resonances"] is None
    assert parsed["spectrum"]["multiplicity"].tolist() == [4]
    assert parsed["spectrum"]["mu"][0] == records[0].mu

    resonance = zero_resonance(0.5, half_pi_theta)
    path = write_spectrum_report([], resonance, [], tmp_path / "resonant.csv", "csv")
    parsed = read_spectrum_csv(path)
    assert parsed["marker"] == "# resonances: dimension 4"
    assert len(parsed["spectrum"]) == 0
    assert len(parsed["resonances"]) == 4
    assert "re_q[up,0]" in parsed["resonances"].columns


def test_spectrum_report_json(tmp_path, krein):
    records = point_spectrum(0.5, krein)
    path = write_spectrum_report(records, None, [], tmp_path / "krein.json", "json", {"alpha": 0.5})
    document = json.loads(path.read_text())
    eigen = document["results"]["eigenvalues"]
    assert eigen[0]["multiplicity"] == 4
    assert len(eigen[0]["kernel_basis"]) == 4
    assert document["results"]["resonances"] is None
    assert document["results"]["exceptional_points"] == []


@pytest.mark.parametrize("mode", [0, -1])
def test_radial_residual_on_power(mode):
    # r^nu solves the zero-energy radial equation
    alpha = 0.3
    nu = abs(mode + alpha)
    for r in (0.5, 1.0, 2.5):
        assert abs(radial_residual(alpha, mode, lambda s: s ** nu, r, 0.0)) < 1e-5
        assert abs(radial_residual(alpha, mode, lambda s: s ** (nu + 1), r, 0.0)) > 0.1


def test_pauli_residual_on_power():
    alpha = 0.3

    def psi(r, theta):
        return np.array([r ** 0.7 * np.exp(-1j * theta), r ** 0.3])

    for r in (0.5, 1.5):
        assert np.max(np.abs(pauli_residual(alpha, psi, r, 0.8, 0.0))) < 1e-5
