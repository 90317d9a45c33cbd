"""
Driving the command-line interface
==================================

Every algorithm is also reachable as ``splitoff <command>`` (or
``python -m splitoff``). Results are JSON certificates with exact rational
strings, which ``splitoff verify`` re-checks against the input file.
"""

import json
import tempfile
from pathlib import Path

from splitoff.cli import main

tmp = Path(tempfile.mkdtemp())
graph = tmp / "c9.txt"
cert = tmp / "cert.json"
report = tmp / "report.json"

main(["generate", "circulant", "9", "1", "--costs", "random", "-o", str(graph)])
print(graph.read_text())

main(["two-thirds", str(graph), "--edge", "4", "-o", str(cert)])
doc = json.loads(cert.read_text())
print("cost", doc["cost"], "bound", doc["bound"], "trace length", doc["trace_length"])

status = main(["verify", str(cert), str(graph), "-o", str(report)])
print("verify exit status", status, json.loads(report.read_text())["valid"])

# Inputs that break a precondition exit with status 2 and say why.
bad = tmp / "bad.txt"
bad.write_text("multigraph 3 3\n0 1 1\n1 2 1\n0 2 1\n")
print("exit status", main(["two-thirds", str(bad)]))
