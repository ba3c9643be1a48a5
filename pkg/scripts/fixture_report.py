"""Print the reports for the two hand-built fixtures (16-vertex threshold graph, 6-vertex split graph)."""

import json

from idealconn.cli import build_report
from idealconn.generators import fig1_threshold16, fig4_split_counterexample

if __name__ == "__main__":
    for name, g in (("threshold16", fig1_threshold16()), ("split6", fig4_split_counterexample())):
        report = build_report(g, name, decomposition=True, cliquetree=True)
        report.pop("timing_ms")
        print(json.dumps(report, indent=2, sort_keys=True))
