"""Smoke tests for the python bindings: every major operation is callable
and agrees with a handful of frozen values from the C++ unit suite."""

import math

import pytest

import ajscc


def test_device_forward_and_inverse():
    p = ajscc.MosfetParams()
    assert p.kprime == pytest.approx(155e-6)
    assert p.vth == pytest.approx(0.74)
    assert p.lambda_ == pytest.approx(0.037)

    ids = ajscc.ids_forward(p, 2.0, 5.0)
    assert ids == pytest.approx(1.45801215e-4, rel=1e-12)
    assert ajscc.invert_vds(p, 2.0, ids) == pytest.approx(5.0, abs=1e-9)

    with pytest.raises(ValueError):
        ajscc.ids_forward(p, 0.5, 5.0)  # below threshold


def test_quantizer_staged_and_behavioral():
    cfg = ajscc.QuantizerConfig(phi=0.125)
    assert ajscc.quantize(1.1, cfg) == 1.125

    trace = ajscc.quantize_traced(1.1, cfg)
    assert trace.integer_part == 1.0
    assert len(trace.stages) == 4
    assert trace.vgs_mos == 1.125

    behavioral = ajscc.QuantizerConfig(phi=0.3)
    assert not ajscc.is_circuit_phi(0.3)
    assert ajscc.quantize(1.1, behavioral) == pytest.approx(1.0)

    with pytest.raises(ValueError):
        ajscc.quantize(0.2, cfg)  # outside [vgs_min, vgs_max]


def test_phi_codes():
    code = ajscc.encode_phi(0.25)
    assert code.is_one_hot()
    assert code.hot_index() == 2
    prime = ajscc.derive_phi_prime(code)
    assert prime.is_prefix()
    assert prime.active_stages() == 3


def test_power_estimate():
    cfg = ajscc.QuantizerConfig(phi=0.5)
    assert ajscc.power_estimate(cfg) == pytest.approx(24.0762, abs=1e-9)
    assert ajscc.power_estimate(cfg, shared_single_stage=True) == \
        pytest.approx(8.0635, abs=1e-9)
    with pytest.raises(ValueError):
        ajscc.power_estimate(ajscc.QuantizerConfig(phi=0.3))


def test_encode_decode_roundtrip():
    cfg = ajscc.QuantizerConfig(phi=0.5)
    dev = ajscc.MosfetParams()
    s1 = ajscc.encode(ajscc.SensorPair(2.1, 5.0), cfg, dev)
    s2 = ajscc.encode(ajscc.SensorPair(2.1, 5.1), cfg, dev)
    assert s1.truth.vgs_level == 2.0

    dcfg = ajscc.DecoderConfig(ajscc.level_grid(cfg), dev)
    decoded = ajscc.decode_pair(dcfg, s1.ids, s2.ids, True)
    assert decoded.vgs_hat == pytest.approx(2.0)
    assert decoded.vds_hat_1 == pytest.approx(5.0, abs=1e-9)
    assert decoded.vds_hat_2 == pytest.approx(5.1, abs=1e-9)


def test_decode_stream_on_grid():
    cfg = ajscc.QuantizerConfig(phi=0.5)
    dev = ajscc.MosfetParams()
    grid = ajscc.make_eval_grid(cfg, 4.5, 10.0, 0.1)
    samples = ajscc.encode_grid(grid, cfg, dev)
    assert len(samples) == 9 * 56

    run = ajscc.decode_stream(ajscc.DecoderConfig(ajscc.level_grid(cfg), dev),
                              samples)
    assert len(run.pairs) == 9 * 55
    assert ajscc.count_misdecodes(run.pairs) == 0
    scored = ajscc.rmse(run.pairs)
    assert scored.vgs == 0.0
    assert scored.vds < 1e-9


def test_sweep_and_csv():
    spec = ajscc.SweepSpec()
    spec.phi_values = [0.5, 1.0]
    result = ajscc.sweep_phi(spec)
    assert [c.phi for c in result.cells] == [0.5, 1.0]
    assert all(c.misdecodes_after == 0 for c in result.cells)

    text = ajscc.csv_string(result, ajscc.describe(spec))
    lines = text.splitlines()
    assert lines[0].startswith("# ")
    schema = next(l for l in lines if not l.startswith("#"))
    assert schema.split(",")[0] == "phi_V"
    assert len([l for l in lines if l and not l.startswith("#")]) == 3


def test_multimos_bank():
    levels = [1.0 + 0.2 * k for k in range(20)]
    bank = ajscc.assign_levels(levels, 4)
    assert ajscc.device_levels(bank, 0)[:2] == pytest.approx([1.0, 1.8])

    dev = ajscc.MosfetParams()
    samples = [
        ajscc.encode(ajscc.SensorPair(lv, vds),
                     ajscc.QuantizerConfig(phi=0.2), dev)
        for lv in (1.0, 1.2) for vds in (5.0, 5.1, 5.2)
    ]
    run = ajscc.decode_bank(bank, samples, ajscc.BankMode.GENIE, True)
    assert ajscc.count_misdecodes(run.pairs) == 0


def test_run_config_parse():
    cfg = ajscc.parse_run_config_text(
        "[quantizer]\nphi = 0.25\n[sweep]\nseed = 7\n")
    assert cfg.quantizer.phi == 0.25
    assert cfg.sweep.seed == 7
    assert math.isclose(cfg.device.kprime, 155e-6)

    with pytest.raises(ValueError):
        ajscc.parse_run_config_text("[sweep]\nbogus = 1\n")
