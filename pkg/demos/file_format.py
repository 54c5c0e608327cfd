"""
Input and output files
======================

The input lists the object names, a ``//`` line, then the distance matrix
with ``;`` between fields. The result lists every object with its cluster.
The same round trip is available on the command line::

    relkmeans --clusters 2 --input cities.txt --output clusters.txt
"""

# %%
import tempfile
from pathlib import Path

from relkmeans import SearchParams, parse_input, run_search, square_distances, write_output
from relkmeans.cli import main

text = """Budapest
Vienna
Bratislava
Lisbon
Madrid
//
0;214;162;2484;1975
214;0;55;2300;1810
162;55;0;2340;1850
2484;2300;2340;0;503
1975;1810;1850;503;0
"""

dataset = parse_input(text)
print(dataset.names)
print(dataset.distances)

# %%
outcome = run_search(square_distances(dataset), SearchParams(n_clusters=2, threads=1))
print(write_output(dataset.names, outcome))

# %%
# Same thing through the command-line entry point.

with tempfile.TemporaryDirectory() as tmp:
    source = Path(tmp) / "cities.txt"
    source.write_text(text)
    target = Path(tmp) / "clusters.txt"
    status = main(["--clusters", "2", "--threads", "1", "--input", str(source), "--output", str(target)])
    print("exit status", status)
    print(target.read_text())
