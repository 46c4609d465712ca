"""Shared helpers: in-process CLI runner and CSV parsing."""

import contextlib
import csv
import io
import subprocess
import sys

import pytest

from framescope import cli


def run_cli(argv):
    """Run the CLI in-process, returning (exit_code, stdout_text)."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = cli.main(list(argv))
    return rc, buf.getvalue()


def run_cli_subprocess(argv):
    """Run the CLI as a fresh process, returning (exit_code, stdout_bytes)."""
    proc = subprocess.run([sys.executable, "-m", "framescope", *argv],
                          capture_output=True)
    return proc.returncode, proc.stdout


def parse_csv(text):
    """Parse CSV text into (header, rows) with rows as string lists."""
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


@pytest.fixture
def cli_runner():
    return run_cli
