"""Write the structure bundles and oracle files used by the CLI examples.

    python demos/make_bundles.py            # writes demos/data/*.json
"""

import json
from pathlib import Path

from hsg import hyper
from hsg.grammar import Cfg
from hsg.oracle import FreeCommutativeOracle

out = Path(__file__).parent / "data"
out.mkdir(exist_ok=True)

hyper.save_structure(hyper.bicyclic_structure(), out / "bicyclic.json")
hyper.save_structure(hyper.free_structure("ab"), out / "free.json")
hyper.save_structure(hyper.subfree_structure(), out / "subfree.json")

# a broken table: drop one production from the bicyclic grammar
s = hyper.bicyclic_structure()
g = s.table.cfg
broken = Cfg(g.terminals, g.nonterminals, g.productions[:-3] + g.productions[-2:], g.start)
hyper.save_structure(hyper.HyperbolicStructure(s.combing, hyper.TableLanguage(broken, "corrupted")),
                     out / "bicyclic_corrupted.json")

(out / "freecomm.json").write_text(json.dumps(FreeCommutativeOracle().to_json()) + "\n")
(out / "bicyclic_r2.txt").write_text("b*a* + b*a*ab\n")
print("wrote", ", ".join(sorted(p.name for p in out.iterdir())))
