"""
Command line and JSON reports
=============================

The same computations from the shell; reports are deterministic JSON.
"""

import subprocess
import sys


def limitram(*args):
    proc = subprocess.run([sys.executable, "-m", "limitram.cli", *args],
                          capture_output=True, text=True)
    print("$ limitram", " ".join(args), f"  (exit {proc.returncode})")
    print(proc.stdout)


limitram("validate", "conic")
limitram("limits", "case11")
limitram("ramification", "case11:1,2")
limitram("ramification", "conic", "--format", "json")
