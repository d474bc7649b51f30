"""Writes fixtures/*.json from the oracle's own tables and values.

    python3 tests/oracles/make_fixtures.py [name ...]
"""
import json
import os
import re
import sys
from fractions import Fraction

import leibniz_oracle as o

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..")

KEYS = {
    "leib": "leibniz_kernel_dim",
    "zl": "left_center_dim",
    "z": "center_dim",
    "der": "derivation_dim",
    "inner": "inner_derivation_dim",
    "left_bider": "left_biderivation_dim",
    "right_bider": "right_biderivation_dim",
    "bider": "biderivation_dim",
    "loday": "loday_biderivation_dim",
    "commuting": "commuting_dim",
    "skew_commuting": "skew_commuting_dim",
}

FACT = re.compile(r'\{\n\s+"value": ([^,\n]+),\n\s+"source": ("[a-z]+")\n\s+\}')


def default_labels(n):
    return ["e%d" % (i + 1) for i in range(n)]


# name -> (builder, n, algebra, labels, facts stated in the literature)
CASES = {
    "abelian0": ("abelian", 0, lambda: o.Alg(0, {}), default_labels(0), {}),
    "abelian1": ("abelian", 1, lambda: o.Alg(1, {}), default_labels(1), {}),
    "abelian3": ("abelian", 3, lambda: o.Alg(3, {}), default_labels(3), {}),
    "sl2": ("sl2", None, o.sl2, ["h", "e", "f"], {"complete_def1": True, "complete_def2": True}),
    "heisenberg": ("heisenberg", None, o.heisenberg, default_labels(3), {}),
    "nonabelian2": ("nonabelian2", None, o.nonabelian2, ["x", "y"], {}),
    "sec4_one": ("example_sec4_one", None, o.sec4_one, ["x", "y", "v"],
                 {"leibniz_kernel_dim": 1, "complete_def1": True}),
    "sec4_two": ("example_sec4_two", None, o.sec4_two, ["x", "y", "v", "w"],
                 {"leibniz_kernel_dim": 2, "complete_def1": True}),
    "solvable4": ("example_solvable", 4, lambda: o.solvable(4), default_labels(4) + ["x", "y"], {}),
    "solvable5": ("example_solvable", 5, lambda: o.solvable(5), default_labels(5) + ["x", "y"], {}),
}


def fraction_text(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def brackets(alg):
    out = []
    for (i, j) in sorted(alg.t):
        terms = [{"k": k + 1, "coeff": fraction_text(v)} for k, v in sorted(alg.t[(i, j)].items()) if v]
        if terms:
            out.append({"i": i + 1, "j": j + 1, "terms": terms})
    return out


def is_lie(alg):
    n = alg.n
    E = [o.unit(n, i) for i in range(n)]
    return all(alg.br(E[i], E[i]) == [0] * n and o.add(alg.br(E[i], E[j]), alg.br(E[j], E[i])) == [0] * n
               for i in range(n) for j in range(n))


def render(doc):
    lines = ["{"]
    items = list(doc.items())
    for idx, (key, value) in enumerate(items):
        tail = "," if idx + 1 < len(items) else ""
        if key == "brackets" and value:
            lines.append('  "brackets": [')
            for r, rec in enumerate(value):
                lines.append("    " + json.dumps(rec, separators=(",", ":")) + ("," if r + 1 < len(value) else ""))
            lines.append("  ]" + tail)
        elif isinstance(value, dict):
            nested = FACT.sub(r'{"value": \1, "source": \2}', json.dumps(value, indent=2)).replace("\n", "\n  ")
            lines.append('  "%s": %s%s' % (key, nested, tail))
        else:
            lines.append('  "%s": %s%s' % (key, json.dumps(value, separators=(",", ":")), tail))
    return "\n".join(lines + ["}"]) + "\n"


def build(name):
    builder, n, make, labels, literature = CASES[name]
    alg = make()
    f = o.facts(alg)
    c = o.completeness(alg)
    assert f["left_violations"] == 0, name
    expected = {"dim": {"value": alg.n, "source": "inspection"},
                "is_lie": {"value": is_lie(alg), "source": "inspection"}}
    for short, key in KEYS.items():
        expected[key] = {"value": f[short], "source": "oracle"}
    expected["complete_def1"] = {"value": c["def1"], "source": "oracle"}
    expected["complete_def2"] = {"value": c["def2"], "source": "oracle"}
    for key, value in literature.items():
        assert expected[key]["value"] == value, (name, key)
        expected[key]["source"] = "literature"
    fixture = {"name": name, "builder": builder}
    if n is not None:
        fixture["n"] = n
    fixture["expected"] = expected
    doc = {"dim": alg.n, "orientation": "left", "labels": labels, "brackets": brackets(alg), "fixture": fixture}
    path = os.path.join(ROOT, "fixtures", name + ".json")
    with open(path, "w") as fh:
        fh.write(render(doc))
    print("wrote", os.path.relpath(path, ROOT), flush=True)


if __name__ == "__main__":
    for name in sys.argv[1:] or CASES:
        build(name)
