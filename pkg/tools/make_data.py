"""Regenerate the JSON fixtures under src/homcat/data."""

import json
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "homcat" / "data"


def dump(name, obj):
    (DATA / name).write_text(json.dumps(obj, indent=1) + "\n")


def delta_complex(name, tris):
    """One vertex v, edges a b c, two triangles given by their (d0, d1, d2) edges."""
    edges = ["a", "b", "c"]
    faces = {f"(1,{i})": {e: "v" for e in edges} for i in range(2)}
    for i in range(3):
        faces[f"(2,{i})"] = {f"T{t + 1}": edges[tri[i]] for t, tri in enumerate(tris)}
    return {"name": name, "level": 2, "simplices": [["v"], edges, ["T1", "T2"]], "faces": faces}


def lattice():
    objs = ["bot", "a", "b", "top"]
    leq = {("bot", x) for x in objs} | {(x, x) for x in objs} | {(x, "top") for x in objs}
    mid = {p: p[0] if p[0] == p[1] else f"{p[0]}<{p[1]}" for p in leq}
    morphisms = [{"id": mid[p], "src": p[0], "dst": p[1]} for p in sorted(leq)]
    compose = [[mid[(y, z)], mid[(x, y)], mid[(x, z)]] for (x, y) in sorted(leq) for (y2, z) in sorted(leq) if y == y2]
    cat = {"objects": objs, "morphisms": morphisms, "compose": compose, "identities": {o: o for o in objs}}
    level = 3
    cos = {
        "name": "lattice-top",
        "level": level,
        "cells": ["top"] * (level + 1),
        "faces": {f"({n},{i})": "top" for n in range(1, level + 1) for i in range(n + 1)},
        "degeneracies": {f"({n},{i})": "top" for n in range(level) for i in range(n + 1)},
    }
    return cat, cos


def fold():
    cat = {
        "objects": ["P", "I"],
        "morphisms": [
            {"id": "idP", "src": "P", "dst": "P"},
            {"id": "idI", "src": "I", "dst": "I"},
            {"id": "a", "src": "P", "dst": "I"},
            {"id": "b", "src": "P", "dst": "I"},
            {"id": "t", "src": "I", "dst": "I"},
        ],
        "compose": [["t", "t", "t"], ["t", "a", "a"], ["t", "b", "a"]],
        "identities": {"P": "idP", "I": "idI"},
    }
    cos = {"name": "fold", "level": 1, "cells": ["P", "I"], "faces": {"(1,0)": "a", "(1,1)": "b"}}
    return cat, cos


def edge(tag):
    return {"k": 1, "tag": tag, "alpha": {"0": {"0": "0", "1": "0"}}}


def triangle(tag, d0, d1, d2, vertex="0"):
    return {"k": 2, "tag": tag, "alpha": {"0": {v: vertex for v in "012"}, "1": {"12": d0, "02": d1, "01": d2}}}


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    dump("torus.json", delta_complex("torus", [(0, 2, 1), (1, 2, 0)]))
    dump("klein.json", delta_complex("klein", [(0, 2, 1), (0, 1, 2)]))
    cat, cos = lattice()
    dump("lattice.json", cat)
    dump("lattice_cosimplicial.json", cos)
    cat, cos = fold()
    dump("fold.json", cat)
    dump("fold_cosimplicial.json", cos)
    dump("torus_cw.json", {"format": "homcat.cw/1", "cells": [
        edge("a"), edge("b"), edge("c"),
        triangle("T1", "a:01", "c:01", "b:01"), triangle("T2", "b:01", "c:01", "a:01")]})
    dump("klein_cw.json", {"format": "homcat.cw/1", "cells": [
        edge("a"), edge("b"), edge("c"),
        triangle("T1", "a:01", "c:01", "b:01"), triangle("T2", "a:01", "b:01", "c:01")]})
    dump("disk_cw.json", {"format": "homcat.cw/1", "cells": [edge("e"), triangle("D", "00", "e:01", "00")]})
