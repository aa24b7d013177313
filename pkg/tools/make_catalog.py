"""Regenerate the bundled group catalog under src/saxlgraph/catalog.

Everything here is deterministic (fixed seeds). Each subgroup is found by a
small random search for elements with a stated property and is then checked by
order and index before it is written. The loader re-checks both at load time,
so nothing written here is trusted blindly.

Sources of the generators:

* M11, M12, M23: the usual generators on 11, 12 and 23 points.
* J1: two 7x7 matrices over GF(11) (a permutation matrix of order 7 and a
  matrix of order 5); the group acts on a projective orbit of size 2926, and
  from there on the 1045 Sylow 2-subgroups, i.e. the cosets of 2^3:7:3.
* S7, A9, A10: standard generators; the subgroups are AGL1(7), ASL2(3) = 3^2:2A4
  acting on the 9 points of the affine plane, and M10 as a point stabiliser in M11.

Run with ``python3 tools/make_catalog.py``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

from saxlgraph.actions import coset_action
from saxlgraph.io import format_group_file
from saxlgraph.perm import Permutation, PermutationGroup, Subgroup, parse_permutation

OUT = Path(__file__).resolve().parents[1] / "src" / "saxlgraph" / "catalog"


def perm(text: str, degree: int) -> Permutation:
    return parse_permutation(text, degree)


def cycle(points) -> str:
    return "(" + ",".join(str(p) for p in points) + ")"


def search(group: PermutationGroup, keep, target: int, seed: int, tries: int = 2_000_000) -> list[Permutation]:
    """Random elements satisfying ``keep`` until they generate a group of order ``target``."""
    rng = np.random.default_rng(seed)
    found: list[Permutation] = []
    order = 1
    for _ in range(tries):
        g = group.random_element(rng)
        if g.is_identity() or not keep(g):
            continue
        trial = PermutationGroup(found + [g], group.degree)
        if trial.order > order:
            found.append(g)
            order = trial.order
            if order == target:
                return found
            if target % order:
                raise RuntimeError(f"search overshot: order {order} does not divide {target}")
    raise RuntimeError("search did not reach the target order")


def element_of_order(group: PermutationGroup, k: int, rng) -> Permutation:
    while True:
        g = group.random_element(rng)
        o = g.order()
        if o % k == 0:
            return g ** (o // k)


def write(name: str, gens, degree: int, headers: dict, comments=(), image=False) -> None:
    text = format_group_file(gens, degree, headers, comments, image_notation=image)
    (OUT / name).write_text(text, encoding="utf-8")
    print(f"wrote {name}", file=sys.stderr)


def centraliser_gens(group, x, target, seed):
    return search(group, lambda g: g * x == x * g, target, seed)


def normaliser_gens(group, sub_gens, target, seed):
    sub = PermutationGroup(sub_gens, group.degree)
    return search(group, lambda g: all(s.conjugate(g) in sub for s in sub_gens), target, seed)


def mathieu():
    m11_gens = [perm(cycle(range(1, 12)), 11), perm("(3,7,11,8)(4,10,5,6)", 11)]
    m11 = PermutationGroup(m11_gens)
    assert m11.order == 7920
    write("m11.grp", m11_gens, 11, {"name": "M11", "order": 7920})
    rng = np.random.default_rng(11)
    t = element_of_order(m11, 2, rng)
    h = centraliser_gens(m11, t, 48, seed=1)
    write("m11-2s4.sub", h, 11, {"name": "2.S4", "parent": "m11.grp", "order": 48, "index": 165},
          ["centraliser of an involution in M11"])

    m12_gens = [perm(cycle(range(1, 12)), 12), perm("(3,7,11,8)(4,10,5,6)", 12),
                perm("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)]
    m12 = PermutationGroup(m12_gens)
    assert m12.order == 95040
    write("m12.grp", m12_gens, 12, {"name": "M12", "order": 95040})
    rng = np.random.default_rng(12)
    # the fixed-point-free class of elements of order 3 has centraliser of order 36
    x = element_of_order(m12, 3, rng)
    while x.cycle_type() != (3, 3, 3, 3):
        x = element_of_order(m12, 3, rng)
    assert PermutationGroup(centraliser_gens(m12, x, 36, seed=2), 12).order == 36
    h = normaliser_gens(m12, [x], 72, seed=3)
    write("m12-a4xs3.sub", h, 12, {"name": "A4xS3", "parent": "m12.grp", "order": 72, "index": 1320},
          ["normaliser of a fixed-point-free subgroup of order 3"])

    m23_gens = [perm(cycle(range(1, 24)), 23),
                perm("(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)", 23)]
    m23 = PermutationGroup(m23_gens)
    assert m23.order == 10200960
    write("m23.grp", m23_gens, 23, {"name": "M23", "order": 10200960})
    c23 = m23_gens[0]
    h = normaliser_gens(m23, [c23], 253, seed=4)
    write("m23-23-11.sub", [c23] + h, 23, {"name": "23:11", "parent": "m23.grp", "order": 253, "index": 40320},
          ["normaliser of a Sylow 23-subgroup"])


def symmetric_alternating():
    s7_gens = [perm(cycle(range(1, 8)), 7), perm("(1,2)", 7)]
    write("s7.grp", s7_gens, 7, {"name": "S7", "order": 5040})
    agl = [perm(cycle(range(1, 8)), 7), perm("(2,4,3,7,5,6)", 7)]
    write("s7-agl1-7.sub", agl, 7, {"name": "AGL1(7)", "parent": "s7.grp", "order": 42, "index": 120},
          ["x -> x+1 and x -> 3x on the points 1..7 read as 0..6 mod 7"])

    a9_gens = [perm("(1,2,3)", 9), perm(cycle(range(1, 10)), 9)]
    write("a9.grp", a9_gens, 9, {"name": "A9", "order": 181440})
    # points 1..9 are the vectors (a, b) of F_3^2, point 1 + 3a + b
    def affine(mat, shift):
        img = []
        for a in range(3):
            for b in range(3):
                x = (mat[0][0] * a + mat[1][0] * b + shift[0]) % 3
                y = (mat[0][1] * a + mat[1][1] * b + shift[1]) % 3
                img.append(3 * x + y + 1)
        return perm("[" + ",".join(map(str, img)) + "]", 9)
    asl = [affine([[1, 0], [0, 1]], [1, 0]), affine([[1, 1], [0, 1]], [0, 0]), affine([[1, 0], [1, 1]], [0, 0])]
    write("a9-3e2-2a4.sub", asl, 9, {"name": "3^2:2A4", "parent": "a9.grp", "order": 216, "index": 840},
          ["ASL2(3): translations and the two transvections of F_3^2"])

    a10_gens = [perm("(1,2,3)", 10), perm(cycle(range(2, 11)), 10)]
    a10 = PermutationGroup(a10_gens)
    assert a10.order == 1814400
    write("a10.grp", a10_gens, 10, {"name": "A10", "order": 1814400})
    m11 = PermutationGroup([perm(cycle(range(1, 12)), 11), perm("(3,7,11,8)(4,10,5,6)", 11)])
    stab = m11.stabiliser(10)
    gens10 = [Permutation(g.images[:10], check=True) for g in stab.generators]
    m10 = Subgroup(a10, gens10)
    assert m10.order == 720 and m10.index == 2520
    write("a10-m10.sub", gens10, 10, {"name": "M10", "parent": "a10.grp", "order": 720, "index": 2520},
          ["stabiliser of the point 11 in M11, restricted to the other ten points"])


def _j1_projective_rep():
    p = 11
    y = np.roll(np.eye(7, dtype=np.int64), 1, axis=1)
    z = np.array([[-3, 2, -1, -1, -3, -1, -3], [-2, 1, 1, 3, 1, 3, 3], [-1, -1, -3, -1, -3, -3, 2],
                  [-1, -3, -1, -3, -3, 2, -1], [-3, -1, -3, -3, 2, -1, -1], [1, 3, 3, -2, 1, 1, 3],
                  [3, 3, -2, 1, 1, 3, 1]], dtype=np.int64) % p
    inv = [0] + [pow(i, -1, p) for i in range(1, p)]

    def norm(v):
        nz = int(np.flatnonzero(v)[0])
        return tuple(int(x) for x in (v * inv[int(v[nz])]) % p)

    rng = np.random.default_rng(1)
    while True:
        v = rng.integers(p, size=7)
        if not v.any():
            continue
        seen = {norm(v): 0}
        queue = [norm(v)]
        for w in queue:
            for m in (y, z):
                x = norm(np.array(w) @ m % p)
                if x not in seen:
                    seen[x] = len(queue)
                    queue.append(x)
            if len(queue) > 3000:
                break
        if len(queue) == 2926:
            break
    gens = [Permutation([seen[norm(np.array(w) @ m % p)] for w in queue]) for m in (y, z)]
    return gens


def j1():
    gens = _j1_projective_rep()
    big = PermutationGroup(gens, order=175560)
    rng = np.random.default_rng(7)
    t = element_of_order(big, 2, rng)
    invs = [t]
    while len(invs) < 3:
        u = t.conjugate(big.random_element(rng))
        if all(u * v == v * u for v in invs) and u not in PermutationGroup(invs, big.degree):
            invs.append(u)
    e = PermutationGroup(invs, big.degree)
    assert e.order == 8
    ngens = normaliser_gens(big, invs, 168, seed=5)
    sub = Subgroup(big, ngens)
    action = coset_action(big, sub)
    assert action.n == 1045
    g1045 = [Permutation(a) for a in action.gen_images]
    h1045 = [Permutation(a) for a in action.stab_images]
    group = PermutationGroup(g1045, order=175560)
    write("j1.grp", g1045, 1045, {"name": "J1", "order": 175560},
          ["action on the cosets of 2^3:7:3, derived from a 7-dimensional representation over GF(11)"],
          image=True)
    write("j1-2e3-7-3.sub", h1045, 1045, {"name": "2^3.7.3", "parent": "j1.grp", "order": 168, "index": 1045},
          ["normaliser of a Sylow 2-subgroup; stabiliser of the first point"], image=True)
    assert Subgroup(group, h1045).order == 168


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    mathieu()
    symmetric_alternating()
    j1()
    index = {
        "M11": {"group": "m11.grp", "subgroups": {"2.S4": "m11-2s4.sub"}},
        "M12": {"group": "m12.grp", "subgroups": {"A4xS3": "m12-a4xs3.sub"}},
        "J1": {"group": "j1.grp", "subgroups": {"2^3.7.3": "j1-2e3-7-3.sub"}},
        "M23": {"group": "m23.grp", "subgroups": {"23:11": "m23-23-11.sub"}},
        "S7": {"group": "s7.grp", "subgroups": {"AGL1(7)": "s7-agl1-7.sub"}},
        "A9": {"group": "a9.grp", "subgroups": {"3^2:2A4": "a9-3e2-2a4.sub"}},
        "A10": {"group": "a10.grp", "subgroups": {"M10": "a10-m10.sub"}},
    }
    (OUT / "index.json").write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
