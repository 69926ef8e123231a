#!/usr/bin/env python3
"""
G2Cartan Setup Test Script

Checks the installation: interpreter, runtime dependencies, configuration
from the environment and the console entry point.
"""

import sys

from click.testing import CliRunner


def print_section(title):
    print(f"\n{'='*60}")
    print(f" {title}")
    print(f"{'='*60}")


def test_python_version():
    print_section("Python Environment Test")
    print(f"Python version: {sys.version}")
    assert sys.version_info >= (3, 8), "G2Cartan requires Python 3.8+"


def test_core_imports():
    print_section("Core Dependencies Test")
    core_deps = [
        ("click", "CLI framework"),
        ("dotenv", "Environment configuration"),
        ("pydantic", "Report and config models"),
        ("rich", "Console output"),
        ("sympy", "Exact domains and matrices"),
    ]
    missing = []
    for module, description in core_deps:
        try:
            __import__(module)
            print(f"✓ {module} - {description}")
        except ImportError:
            print(f"❌ {module} - {description} (MISSING)")
            missing.append(module)
    assert not missing, f"missing dependencies: {missing}"


def test_g2cartan_import():
    print_section("G2Cartan Package Test")
    import g2cartan
    from g2cartan.cli import main

    assert g2cartan.__version__ == "1.0.0"
    assert "verify-core" in main.commands
    print(f"✓ g2cartan {g2cartan.__version__} with commands: {', '.join(sorted(main.commands))}")


def test_environment_config(monkeypatch):
    print_section("Environment Configuration Test")
    from g2cartan.config import get_config

    monkeypatch.setenv("G2CARTAN_SEED", "7")
    monkeypatch.setenv("G2CARTAN_RANDOM_QUARTICS", "")
    config = get_config()
    assert config.seed == 7
    assert config.random_quartics == 50
    assert config.monotonicity_samples == 10
    print(f"✓ configuration: {config.model_dump()}")


def test_invalid_environment_config(monkeypatch):
    from g2cartan.config import get_config

    monkeypatch.setenv("G2CARTAN_MONOTONICITY_SAMPLES", "many")
    try:
        get_config()
    except ValueError as e:
        print(f"✓ rejected: {e}")
    else:
        raise AssertionError("non-integer sample count was accepted")

    monkeypatch.setenv("G2CARTAN_MONOTONICITY_SAMPLES", "-1")
    try:
        get_config()
    except ValueError:
        pass
    else:
        raise AssertionError("negative sample count was accepted")


def test_cli_help():
    print_section("Command Line Test")
    from g2cartan.cli import main

    result = CliRunner().invoke(main, ["--help"])
    assert result.exit_code == 0
    for command in ("verify-core", "curvature-module", "prolong", "model", "realform", "rolling", "covariants"):
        assert command in result.output, command
    print("✓ g2cartan --help lists every command")


def main():
    print("G2Cartan Setup Test")
    print("This script checks your G2Cartan installation")

    checks = [test_python_version, test_core_imports, test_g2cartan_import, test_cli_help]
    passed = 0
    for check in checks:
        try:
            check()
            passed += 1
        except (AssertionError, ImportError) as e:
            print(f"❌ {check.__name__}: {e}")

    print_section("FINAL RESULTS")
    if passed == len(checks):
        print("🎉 ALL CHECKS PASSED!")
        print("✅ Try: g2cartan verify-core")
    else:
        print(f"⚠️  {passed}/{len(checks)} checks passed")
        print("❌ Install with: pip install -e .[dev]")


if __name__ == "__main__":
    main()
