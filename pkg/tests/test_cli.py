"""Tests for the expression syntax, run configurations, the hv command and sweeps."""

import json

import pytest
import yaml
from pydantic import ValidationError

from twisted_hv.cli import (
    ConfigError,
    ExitStatus,
    ExpressionParseError,
    ResultStore,
    RunConfig,
    config_from_mapping,
    main,
    parse_lie_element,
    parse_vector,
    run,
    sweep,
    validate_config,
)
from twisted_hv.liealg import AlgebraId, I, L, LieElt, central
from twisted_hv.pbwmod import ModuleSpec, PBWVector
from twisted_hv.scalars import IMAG, ONE, scalar


def hv(capsys, *argv):
    """Run the command line; returns the exit status and the parsed stdout."""
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, json.loads(out)


@pytest.fixture
def vac():
    return ModuleSpec.build("VacuumHV1", l1="3/2", l2=2, l3=5)


@pytest.fixture
def grid_file(tmp_path):
    points = [{"l1": l1, "l3": l3} for l1 in ("1/2", "1", "2") for l3 in ("0", "1", "2")]
    path = tmp_path / "grid.yaml"
    path.write_text(
        yaml.safe_dump({"command": "positivity", "options": {"max_degree": 3, "l2": "0"}, "grid": points})
    )
    return path


class TestExpressions:
    """Lie element and PBW vector syntax."""

    def test_lie_element(self):
        x = parse_lie_element("2*L(0) + 1/2*C1 - i*I(-1)", "hv1")
        expected = LieElt(
            AlgebraId.HV1,
            {L(0): scalar(2), central(AlgebraId.HV1, "C1"): scalar("1/2"), I(-1): -IMAG},
        )
        assert x == expected

    def test_parenthesized_coefficient(self):
        x = parse_lie_element("(1 + i)*I(2)", "hv1")
        assert x == LieElt(AlgebraId.HV1, {I(2): scalar(1, 1)})

    def test_rank_two_symbols(self):
        x = parse_lie_element("T(1,-1) - E(0, 2)", "hv2")
        assert len(x) == 2

    def test_vector(self, vac):
        v = parse_vector("I(-1)*L(-2)*1 + 3*1", vac)
        assert v == PBWVector(vac, {(I(-1), L(-2)): ONE, (): scalar(3)})

    def test_vector_word_is_straightened(self, vac):
        v = parse_vector("L(2)*L(-2)*1", vac)
        assert v == PBWVector.vacuum(vac).scale(scalar("3/4"))

    def test_unknown_symbol_position(self):
        with pytest.raises(ExpressionParseError, match="unknown hv1 symbol 'Q'") as info:
            parse_lie_element("2*L(0) + Q(1)", "hv1")
        assert (info.value.line, info.value.column) == (1, 10)

    def test_position_on_second_line(self):
        with pytest.raises(ExpressionParseError, match="end of input") as info:
            parse_lie_element("L(1) +\n  L(2) *", "hv1")
        assert (info.value.line, info.value.column) == (2, 9)

    def test_wrong_arity(self):
        with pytest.raises(ExpressionParseError, match="takes 1 indices"):
            parse_lie_element("L(1,2)", "hv1")

    def test_one_symbol_per_lie_term(self):
        with pytest.raises(ExpressionParseError, match="one basis symbol"):
            parse_lie_element("L(0)*L(1)", "hv1")

    def test_vector_needs_generating_vector(self, vac):
        with pytest.raises(ExpressionParseError, match="generating vector 1"):
            parse_vector("I(-1)", vac)

    def test_zero_denominator(self):
        with pytest.raises(ExpressionParseError, match="zero denominator"):
            parse_lie_element("1/0*L(0)", "hv1")


class TestRunConfig:
    """Validation and hashing of run configurations."""

    def test_params_are_normalized(self):
        config = RunConfig(subcommand="unitary", params={"l1": "2/4", "l2": 0, "l3": "-0"})
        assert config.params == {"l1": "1/2", "l2": "0", "l3": "0"}

    def test_hash_ignores_spelling_and_output(self):
        a = RunConfig(subcommand="unitary", params={"l1": "2/4"})
        b = RunConfig(subcommand="unitary", params={"l1": "1/2"}, output="out.json")
        assert a.config_hash == b.config_hash

    def test_hash_depends_on_overrides(self):
        a = RunConfig(subcommand="positivity", overrides={"max_degree": 2})
        b = RunConfig(subcommand="positivity", overrides={"max_degree": 3})
        assert a.config_hash != b.config_hash

    def test_unknown_field_rejected(self):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="unitary", window=3)

    @pytest.mark.parametrize("params", [{"l5": "1"}, {"l1": 0.5}, {"l1": "1/0"}, {"h1": "x"}])
    def test_bad_params_rejected(self, params):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="unitary", params=params)

    def test_mapping_sorts_by_option_kind(self):
        config = config_from_mapping("singular", {"c": "0", "degree": 2, "embed": True, "l1": 1})
        assert config.params == {"c": "0", "l1": "1"}
        assert config.overrides == {"degree": 2}
        assert config.options == {"embed": True}

    def test_mapping_rejects_undeclared_option(self):
        with pytest.raises(ConfigError, match="unknown unitary option 'window'"):
            config_from_mapping("unitary", {"window": 3})

    def test_mapping_rejects_non_integer(self):
        with pytest.raises(ConfigError, match="must be an integer"):
            config_from_mapping("positivity", {"max-degree": "3"})

    def test_negative_window_rejected(self):
        config = config_from_mapping("verify", {"identity": "ii", "window": -1})
        with pytest.raises(ConfigError, match="--window must be >= 0, got -1"):
            validate_config(config)
        record = run(config)
        assert record.status is ExitStatus.INPUT_ERROR
        assert record.payload["type"] == "ConfigError"

    def test_signed_index_accepts_negatives(self):
        config = config_from_mapping("eproduct", {"pair": "Ihat,Ihat", "n": -1})
        assert validate_config(config).name == "eproduct"

    def test_missing_required(self):
        config = RunConfig(subcommand="unitary", params={"l1": "1", "l2": "0"})
        with pytest.raises(ConfigError, match="requires --l3"):
            validate_config(config)

    def test_unknown_subcommand(self):
        with pytest.raises(ConfigError, match="did you mean 'bracket'"):
            validate_config(RunConfig(subcommand="brackett"))

    def test_run_reports_errors_in_record(self):
        record = run(RunConfig(subcommand="positivity", params={"l2": "1"}, overrides={"max_degree": 1}))
        assert record.status is ExitStatus.INPUT_ERROR
        assert record.payload["type"] == "PreconditionError"

    def test_replay_is_identical(self):
        config = config_from_mapping("gram", {"degree": 2, "l1": "1/2", "l2": "0", "l3": "1"})
        assert run(config).payload == run(config).payload


class TestCommands:
    """One invocation per subcommand, checked against hand-computed values."""

    def test_unitary_discrete_series(self, capsys):
        status, out = hv(capsys, "unitary", "--l1", "1/2", "--l2", "0", "--l3", "0")
        assert status == 0
        assert {k: out[k] for k in ("unitary", "case", "m")} == {"unitary": True, "case": "c_m", "m": 3}

    def test_unitary_rejects_nonzero_l2(self, capsys):
        status, out = hv(capsys, "unitary", "--l1", "3", "--l2", "1", "--l3", "1")
        assert status == 0
        assert out["unitary"] is False

    def test_bracket(self, capsys):
        status, out = hv(capsys, "bracket", "--algebra", "hv1", "--a", "L(2)", "--b", "L(-2)")
        assert status == 0
        assert out["bracket"] == {
            "algebra": "hv1",
            "terms": [
                {"sym": "L", "idx": [0], "coef": {"re": "4", "im": "0"}},
                {"sym": "C1", "idx": [], "coef": {"re": "1/2", "im": "0"}},
            ],
        }
        assert out["text"] == "(4)*L(0) + (1/2)*C1"

    def test_jacobi_sweep(self, capsys):
        status, out = hv(capsys, "jacobi", "--algebra", "hv1", "--window", "2")
        assert status == 0
        assert out["checked"] == 220
        assert out["defects"] == []

    def test_jacobi_needs_all_elements(self, capsys):
        status, out = hv(capsys, "jacobi", "--algebra", "hv1", "--a", "L(1)")
        assert status == 4
        assert out["type"] == "ConfigError"

    def test_verify(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "ii", "--window", "6")
        assert status == 0
        assert out["defects"] == []

    def test_verify_rank_two_range(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "te-torus", "--window", "3")
        assert status == 0
        assert len(out["checked"]) == 49

    def test_verify_unknown_identity(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "lii")
        assert status == 4
        assert out["type"] == "UnknownIdentityError"

    def test_verify_catalogue_id(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "eq2.9", "--window", "6")
        assert status == 0
        assert out["identity"] == "ii"
        assert out["defects"] == []

    def test_verify_catalogue_id_with_outer(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "EQ4.2(1,-1)", "--window", "4")
        assert status == 0
        assert out["checked"] == ["te-torus(1,-1)"]
        assert out["defects"] == []

    def test_verify_catalogue_id_sweeps_outer(self, capsys):
        status, out = hv(capsys, "verify", "--identity", "eq4.3", "--window", "2")
        assert status == 0
        assert out["identity"] == "ee-torus"
        assert len(out["checked"]) == 49

    @pytest.mark.parametrize(
        "argv",
        [
            ("verify", "--identity", "ii", "--window", "-1"),
            ("jacobi", "--algebra", "hv1", "--window", "-2"),
            ("locality", "--pair", "ll", "--window", "-3"),
            ("jacobi", "--algebra", "frak2hat", "--samples", "0"),
            ("jacobi", "--algebra", "frak2hat", "--samples", "-1"),
        ],
    )
    def test_out_of_range_counts_are_input_errors(self, capsys, argv):
        status, out = hv(capsys, *argv)
        assert status == 4
        assert out["type"] == "ConfigError"
        assert ">=" in out["error"]

    def test_locality(self, capsys):
        status, out = hv(capsys, "locality", "--pair", "ll", "--window", "6")
        assert (status, out["order"]) == (0, 4)

    def test_locality_small_window_is_inconclusive(self, capsys):
        status, out = hv(capsys, "locality", "--pair", "ll", "--window", "2")
        assert status == 3
        assert out["type"] == "InconclusiveWindowError"

    def test_basis(self, capsys):
        status, out = hv(capsys, "basis", "--module", "VacuumHV1", "--degree", "2", "--l1", "1")
        assert status == 0
        assert out["dimension"] == 3
        assert [{"sym": "L", "idx": [-2]}] in out["basis"]

    def test_act(self, capsys):
        status, out = hv(
            capsys, "act", "--module", "VacuumHV1", "--sym", "L(2)", "--vector", "L(-2)*1", "--l1", "3/2"
        )
        assert status == 0
        assert out["output"] == [{"monomial": [], "coef": {"re": "3/4", "im": "0"}}]
        assert out["text"] == "(3/4)*1"

    def test_eproduct(self, capsys):
        status, out = hv(
            capsys, "eproduct", "--pair", "Ihat,Ihat", "--n", "1",
            "--l1", "1", "--l2", "0", "--l3", "5", "--h1", "0", "--h2", "0",
            "--degree", "0", "--modes", "0",
        )  # fmt: skip
        assert status == 0
        assert out["locality_order"] == 2
        assert out["table"] == [
            {
                "mode": 0,
                "input": [{"monomial": [], "coef": {"re": "1", "im": "0"}}],
                "output": [{"monomial": [], "coef": {"re": "5", "im": "0"}}],
            }
        ]

    def test_eproduct_rank_two_needs_outer(self, capsys):
        status, out = hv(capsys, "eproduct", "--pair", "T,E", "--n", "0")
        assert status == 4
        assert "--outer" in out["error"]

    def test_borcherds(self, capsys):
        status, out = hv(
            capsys, "borcherds", "--u", "I(-1)*1", "--v", "I(-1)*1",
            "--l1", "1", "--l2", "0", "--l3", "2", "--h1", "1", "--h2", "1",
            "--window", "1", "--degree", "1",
        )  # fmt: skip
        assert status == 0
        assert out["defects"] == []

    def test_gram(self, capsys):
        status, out = hv(
            capsys, "gram", "--degree", "1",
            "--l1", "3/2", "--l2", "0", "--l3", "5", "--h1", "1/2", "--h2", "3",
        )  # fmt: skip
        assert status == 0
        assert out["basis"] == ["I(-1)*1", "L(-1)*1"]
        entries = [[c["re"] for c in row] for row in out["entries"]]
        assert entries == [["5", "3"], ["3", "1"]]
        assert out["rank"] == 2
        assert out["determinant"] == {"re": "-4", "im": "0"}

    def test_positivity_precondition(self, capsys):
        status, out = hv(capsys, "positivity", "--max-degree", "2", "--l1", "1", "--l2", "1", "--l3", "1")
        assert status == 4
        assert out["type"] == "PreconditionError"

    def test_zhu(self, capsys):
        status, out = hv(
            capsys, "zhu", "--l1", "1", "--l2", "0", "--l3", "1",
            "--max-degree", "1", "--max-m", "1", "--vector", "I(-2)*1",
        )  # fmt: skip
        assert status == 0
        assert out["x"]["terms"] == [{"x": 1, "y": 0, "coef": {"re": "1", "im": "0"}}]
        assert out["y"]["terms"] == [{"x": 0, "y": 1, "coef": {"re": "1", "im": "0"}}]
        assert out["reduced"]["terms"] == [{"x": 0, "y": 1, "coef": {"re": "-1", "im": "0"}}]
        assert out["relation_defects"] == []

    def test_central_charge(self, capsys):
        status, out = hv(capsys, "central-charge", "--l1", "3/2", "--l2", "2", "--l3", "5")
        assert status == 0
        reports = out["conformal_vectors"]
        assert [r["name"] for r in reports] == ["omega", "omega_prime", "omega_H", "omega_tilde"]
        assert all(r["central_charge"] == r["closed_form"] for r in reports)
        assert reports[0]["central_charge"] == {"re": "3/2", "im": "0"}

    def test_central_charge_without_l3(self, capsys):
        status, out = hv(capsys, "central-charge", "--l1", "1")
        assert status == 0
        assert [r["name"] for r in out["conformal_vectors"]] == ["omega"]

    def test_singular_with_embedding(self, capsys):
        status, out = hv(
            capsys, "singular", "--c", "0", "--degree", "2", "--embed",
            "--l1", "1", "--l2", "0", "--l3", "1",
        )  # fmt: skip
        assert status == 0
        assert out["kernel_dimension"] == 1
        assert out["basis"] == ["L(-2)*1"]
        assert [e["annihilated"] for e in out["embedded"]] == [True]

    def test_tensor_check(self, capsys):
        status, out = hv(capsys, "tensor-check", "--l1", "3/2", "--l2", "2", "--l3", "5", "--max-degree", "6")
        assert (status, out["defects"]) == (0, [])

    def test_c2dim(self, capsys):
        status, out = hv(capsys, "c2dim", "--l1", "3/2", "--l2", "2", "--l3", "5", "--max-degree", "4")
        assert status == 0
        assert [d["dimension"] for d in out["dimensions"]] == [1, 1, 2, 2, 3]


class TestEntryPoint:
    """Global flags, output and error reporting."""

    def test_byte_identical_output(self, capsys):
        argv = ["gram", "--degree", "2", "--l1", "1/2", "--l2", "0", "--l3", "1"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_canonical_json(self, capsys):
        main(["locality", "--pair", "ii"])
        out = capsys.readouterr().out
        assert out == '{"order":2,"pair":"ii","window":6}\n'

    def test_record_flag(self, capsys):
        status, out = hv(capsys, "unitary", "--l1", "2", "--l2", "0", "--l3", "1", "--record")
        assert status == 0
        assert set(out) == {"config", "config_hash", "payload", "status", "timestamp", "version"}
        assert out["config"]["params"] == {"l1": "2", "l2": "0", "l3": "1"}
        assert out["payload"]["case"] == "continuum"

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "out.json"
        status = main(["unitary", "--l1", "1", "--l2", "0", "--l3", "0", "--output", str(target)])
        assert status == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["unitary"] is True

    def test_missing_required_flag(self, capsys):
        status, out = hv(capsys, "unitary", "--l1", "1/2")
        assert status == 4
        assert out["type"] == "ConfigError"

    def test_parse_error_reports_position(self, capsys):
        status, out = hv(capsys, "bracket", "--algebra", "hv1", "--a", "L(2", "--b", "L(0)")
        assert status == 4
        assert out["type"] == "ExpressionParseError"
        assert (out["line"], out["column"]) == (1, 4)

    def test_unknown_module_kind(self, capsys):
        status, out = hv(capsys, "basis", "--module", "VacuumHV3", "--degree", "1")
        assert status == 4
        assert out["type"] == "ConfigError"


class TestSweep:
    """Grid runs appended to a JSON-lines file."""

    def test_nine_points(self, grid_file, tmp_path):
        out = tmp_path / "results.jsonl"
        summary = sweep(grid_file, out, workers=3)
        assert (summary.total, summary.written, summary.skipped) == (9, 9, 0)
        lines = out.read_text().splitlines()
        assert len(lines) == 9
        records = [json.loads(line) for line in lines]
        assert len({r["config_hash"] for r in records}) == 9
        assert all(len(r["payload"]["degrees"]) == 4 for r in records)

    def test_rerun_writes_nothing(self, grid_file, tmp_path):
        out = tmp_path / "results.jsonl"
        sweep(grid_file, out)
        again = sweep(grid_file, out)
        assert (again.written, again.skipped) == (0, 9)
        assert len(out.read_text().splitlines()) == 9

    def test_empty_grid(self, tmp_path):
        grid = tmp_path / "empty.json"
        grid.write_text(json.dumps({"command": "positivity", "grid": []}))
        out = tmp_path / "results.jsonl"
        summary = sweep(grid, out)
        assert (summary.total, summary.written, summary.status) == (0, 0, ExitStatus.OK)
        assert not out.exists()

    def test_duplicate_points_run_once(self, tmp_path):
        grid = tmp_path / "dup.yaml"
        point = {"l1": "1", "l2": "0", "l3": "0"}
        grid.write_text(yaml.safe_dump({"command": "unitary", "grid": [point, {**point, "l1": "2/2"}]}))
        summary = sweep(grid, tmp_path / "r.jsonl")
        assert (summary.written, summary.skipped) == (1, 1)

    def test_through_command_line(self, grid_file, tmp_path, capsys):
        out = tmp_path / "results.jsonl"
        status, summary = hv(capsys, "sweep", "--grid", str(grid_file), "--out", str(out), "--workers", "2")
        assert status == 0
        assert summary["written"] == 9

    def test_missing_grid_file(self, tmp_path, capsys):
        status, out = hv(capsys, "sweep", "--grid", str(tmp_path / "nope.yaml"), "--out", str(tmp_path / "r"))
        assert status == 4
        assert "cannot read grid file" in out["error"]

    def test_grid_with_unknown_key(self, tmp_path):
        grid = tmp_path / "bad.yaml"
        grid.write_text(yaml.safe_dump({"command": "unitary", "grid": [], "extra": 1}))
        with pytest.raises(ConfigError, match="invalid grid file"):
            sweep(grid, tmp_path / "r.jsonl")

    def test_store_skips_unreadable_lines(self, tmp_path):
        path = tmp_path / "r.jsonl"
        path.write_text('not json\n{"config_hash": "abc"}\n')
        store = ResultStore(path)
        assert "abc" in store
        assert len(store) == 1
