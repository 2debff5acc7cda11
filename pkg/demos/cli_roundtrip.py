"""Drive the command line interface end to end on a saved group law.

Builds the law F = 2(t x t) + X + Y over Q[t] (deg t = 2), saves it as a
JSON document, then runs verify, log, cocycle extraction, cocycle
checking and the full roundtrip pipeline through the actual console
entry point. Every invocation is byte-deterministic.

Run:  python3 demos/cli_roundtrip.py
"""

import json
import os
import subprocess
import sys
import tempfile

from fglog import builtin_algebra, lemma_law
from fglog.exprparse import parse_tensor
from fglog.jsonio import dumps, group_to_json


def run(*args):
    cmd = [sys.executable, "-m", "fglog", *args]
    print(f"$ fglog {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(proc.stdout)
    if proc.stderr:
        sys.stdout.write(proc.stderr)
    print(f"(exit {proc.returncode})")
    print()
    return proc


alg = builtin_algebra("qt2")
F = lemma_law(alg, parse_tensor("t (x) t", alg, arity=2) * 2)

with tempfile.TemporaryDirectory() as box:
    path = os.path.join(box, "lemma_qt2.json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(group_to_json(F)))
    print(f"saved group law to {os.path.basename(path)}")
    print()

    run("verify", "--group", path, "--order", "6")
    run("log", "--group", path, "--order", "6", "--format", "pretty")
    run("cocycle", "--group", path, "--order", "6")
    run("check-cocycle", "--hopf", "qt2", "--cocycle", "t (x) t^2")
    proc = run("roundtrip", "--group", path, "--order", "6",
               "--format", "json")
    stages = json.loads(proc.stdout)["stages"]
    print("roundtrip stages:",
          ", ".join(f"{s['stage']}={'ok' if s['pass'] else 'FAIL'}"
                    for s in stages))
