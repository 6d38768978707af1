"""Shared test helpers."""

import contextlib
import io

import pytest

from primering.cli import main


@pytest.fixture
def run_cli():
    """In-process CLI runner returning (exit code, stdout, stderr)."""

    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    return run
