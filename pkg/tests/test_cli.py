import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "genrep", *args],
        capture_output=True,
        text=True,
    )


def test_check_conforming_value():
    out = run_cli("check", "--universe", "regular", "--code", "NatC", "--value", "aNat")
    assert out.returncode == 0
    assert out.stdout == "conforms\n"
    assert out.stderr == ""


def test_check_wrong_index_fails():
    out = run_cli(
        "check",
        "--universe",
        "multirec",
        "--code",
        "ZigZagC",
        "--index",
        "R.⋆",
        "--value",
        "zigZagEnd",
    )
    assert out.returncode == 1
    assert out.stdout == "does not conform\n"


def test_check_defaults_to_the_first_index():
    out = run_cli(
        "check", "--universe", "multirec", "--code", "ZigZagC", "--value", "zigZagEnd"
    )
    assert out.returncode == 0


def test_size_counts_recursive_layers():
    out = run_cli("size", "--env", "List⊤", "--code", "List⊤", "--value", "aList")
    assert out.returncode == 0
    assert out.stdout == "2\n"


def test_roundtrip_reports_zero_failures():
    out = run_cli(
        "roundtrip", "--from", "regular", "--to", "polyp", "--code", "NatC",
        "--max-size", "12",
    )
    assert out.returncode == 0
    assert "0 failures" in out.stdout
    assert out.stdout.endswith("checked 10\n0 failures\n")


def test_enum_lists_values_in_order():
    out = run_cli("enum", "--universe", "regular", "--code", "NatC", "--max-size", "9")
    assert out.returncode == 0
    assert out.stdout == (
        "<in1 tt>\n"
        "<in2 <in1 tt>>\n"
        "<in2 <in2 <in1 tt>>>\n"
        "<in2 <in2 <in2 <in1 tt>>>>\n"
    )


def test_lift_prints_codes_and_environments():
    out = run_cli("lift", "--from", "regular", "--to", "multirec", "--code", "NatC")
    assert out.returncode == 0
    assert out.stdout == "indices: ⋆\nU + I@⋆\n"

    out = run_cli("lift", "--from", "indexed", "--to", "instant", "--code", "ListI")
    assert out.returncode == 0
    assert out.stdout == "out ⋆ = R ig0\nig0 = U + K ⊤ * R ig0\n"


def test_convert_is_inverted_by_the_other_direction():
    fwd = run_cli(
        "convert", "--from", "polyp", "--to", "indexed", "--code", "RoseC",
        "--value", "sRose", "--dir", "fwd",
    )
    assert fwd.returncode == 0
    back = run_cli(
        "convert", "--from", "polyp", "--to", "indexed", "--code", "RoseC",
        "--value", fwd.stdout.strip(), "--dir", "bwd",
    )
    assert back.stdout == "<(tt , <in1 tt>)>\n"


def test_laws_run_per_universe():
    out = run_cli("laws", "--universe", "regular", "--code", "NatC", "--max-size", "8")
    assert out.returncode == 0
    assert "0 failures" in out.stdout


def test_inline_code_and_value_text_are_accepted():
    out = run_cli(
        "check", "--universe", "regular", "--code", "U + I * I",
        "--value", "<in2 (<in1 tt> , <in1 tt>)>",
    )
    assert out.returncode == 0


def test_parse_errors_exit_two():
    out = run_cli("check", "--universe", "regular", "--code", "U +", "--value", "aNat")
    assert out.returncode == 2
    assert out.stdout == ""
    assert out.stderr.startswith("error: 1:4:")


def test_unknown_property_name_exits_two():
    out = run_cli("laws", "--universe", "instant", "--code", "List⊤", "--max-size", "6")
    assert out.returncode == 2
    assert out.stderr.startswith("error: ")


def test_fuel_exhaustion_exits_three():
    out = run_cli(
        "check", "--universe", "instant", "--code", "List⊤", "--env", "List⊤",
        "--value", "aList", "--fuel", "1",
    )
    assert out.returncode == 3
    assert out.stderr.startswith("error: ")


def test_usage_errors_exit_two():
    out = run_cli("nosuch")
    assert out.returncode == 2
    assert out.stdout == ""


@pytest.mark.parametrize(
    "args",
    [
        ("check", "--universe", "regular", "--code", "NatC", "--value", "aNat"),
        ("enum", "--universe", "polyp", "--code", "ListC", "--max-size", "12"),
        ("lift", "--from", "indexed", "--to", "instant", "--code", "RoseI"),
        ("roundtrip", "--from", "multirec", "--to", "indexed", "--code", "ZigZagC",
         "--max-size", "10"),
        ("laws", "--universe", "indexed", "--code", "NatI", "--max-size", "8"),
        ("size", "--env", "List⊤", "--code", "List⊤", "--value", "aList"),
    ],
)
def test_transcripts_are_byte_stable(args):
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode
    assert first.stdout == second.stdout
    assert first.stderr == second.stderr
