"""A tour of the ``tfa`` command line driver on generated instance files.

Writes instance files into a temporary directory and drives every command:
verify, cohomology, classify (with emitted algebra files), build/extract,
rescale, transform, and the pair coset test.
"""

import json
import tempfile
from pathlib import Path

from tfalgebra import PrimeField, build_simple, cyclic_group, cyclic_module
from tfalgebra.algebra import trivial_context
from tfalgebra.cli import main
from tfalgebra.cochains import Cochain
from tfalgebra.gmodule import trivial_module
from tfalgebra.pairs import trivial_pair
from tfalgebra.serialize import dump_json, emit_instance

F5 = PrimeField(5)
G = cyclic_group(2)


def run(*argv):
    print(f"$ tfa {' '.join(argv)}")
    code = main(list(argv))
    print(f"  -> exit {code}\n")
    return code


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    ctx = trivial_context(G, trivial_module(G), F5)
    V = build_simple(ctx, trivial_pair(ctx))
    algebra_file = tmp / "regular.json"
    algebra_file.write_text(dump_json(emit_instance(ctx, algebra=V)))

    run("verify", str(algebra_file))

    coh_ctx = trivial_context(G, cyclic_module(G, 2), F5)
    coh_file = tmp / "coefficients.json"
    coh_file.write_text(dump_json(emit_instance(coh_ctx)))
    run("cohomology", str(coh_file), "--degree", "3")

    run("check-cocycle", str(coh_file))

    classes_dir = tmp / "classes"
    run("classify", str(algebra_file), "--emit-algebras", str(classes_dir))
    for child in sorted(classes_dir.iterdir()):
        run("verify", str(child))

    rescaled = tmp / "rescaled.json"
    run("rescale", str(algebra_file), "--z", "2", "-o", str(rescaled))
    print("rescaled eta:", json.loads(rescaled.read_text())["algebra"]["eta"])
    print()

    # a twisted context with an omega section: transform and verify the output
    tw_ctx_doc = emit_instance(coh_ctx, algebra=build_simple(coh_ctx, trivial_pair(coh_ctx)))
    tw_ctx_doc["omega"] = {"1,1": [1]}
    transform_file = tmp / "to-transform.json"
    transform_file.write_text(dump_json(tw_ctx_doc))
    transformed = tmp / "transformed.json"
    run("transform", str(transform_file), "-o", str(transformed))
    run("verify", str(transformed))

    # pair files and the coset test
    base_pair = tmp / "pair-base.json"
    base_pair.write_text(dump_json({**emit_instance(ctx), "pair": {"g1": [[1, 1], [1, 1]], "g2": []}}))
    shifted_pair = tmp / "pair-shifted.json"
    shifted_pair.write_text(dump_json({**emit_instance(ctx), "pair": {"g1": [[1, 1], [1, 4]], "g2": []}}))
    other_class = tmp / "pair-other.json"
    other_class.write_text(dump_json({**emit_instance(ctx), "pair": {"g1": [[1, 1], [1, 2]], "g2": []}}))
    run("pairs-equal", str(base_pair), str(shifted_pair))
    run("pairs-equal", str(base_pair), str(other_class))
