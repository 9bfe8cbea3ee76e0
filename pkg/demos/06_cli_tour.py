"""A tour of the command line interface.

Every domain object serializes to a JSON document with exact rational
entries; the `lie2alg` commands check structures, skew-symmetrize, compute
the classification cohomology, produce skeletal models, and build symmetry
structures of Maurer-Cartan elements.  This script writes fixture documents
into a temporary directory and drives each subcommand in-process.
"""

import tempfile
from pathlib import Path

from lie2alg import catalog, cli, documents, el2, exactla as xla

print(__doc__)

tmp = Path(tempfile.mkdtemp(prefix="lie2alg-demo-"))
g = catalog.sl2()
k = catalog.killing_form(g)

quad_path = tmp / "sl2_quadratic.json"
quad_path.write_text(documents.serialize(
    el2.from_quadratic_lie(g, k), name="sl2 quadratic structure"))
sl2_path = tmp / "sl2.json"
sl2_path.write_text(documents.serialize(g, name="sl2"))
L, gamma = catalog.nilpotent_cdga_dgla()
mc_path = tmp / "mc_problem.json"
mc_path.write_text(documents.serialize(documents.MCProblem(L, gamma), name="nilpotent fixture"))

for argv in (
    ["check", str(quad_path)],
    ["ss", str(quad_path), "-o", str(tmp / "semistrict.json")],
    ["cohomology", str(sl2_path), "--ce"],
    ["classify", str(quad_path)],
    ["mc", str(mc_path), "--twist", "-o", str(tmp / "twisted.json")],
    ["inner-sym", str(mc_path), "--skew", "-o", str(tmp / "symmetries.json")],
):
    print(f"\n$ lie2alg {' '.join(argv)}")
    code = cli.main(argv)
    print(f"[exit code {code}]")

print(f"\ndocuments written under {tmp}")
