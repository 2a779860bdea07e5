#!/usr/bin/env python3
"""Generate the bundled scene fixtures under tests/fixtures/.

Every viewpoint gets one landmark object per outgoing edge, placed a little
to the side of the edge and slightly below eye level. Landmark categories are
colored so that no two landmarks ever share a category inside any viewpoint's
observation radius, which keeps them unique for the saliency filter.

Output is a pure function of this file; rerun it after editing.
"""

import json
import math
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "fixtures"

EYE_HEIGHT = 1.5
OBSERVE_RADIUS = 3.6  # a little above the 3.5 m default

LANDMARKS = [
    "painting", "table", "sofa", "armchair", "bookshelf", "lamp", "plant",
    "mirror", "cabinet", "desk", "bench", "piano", "fireplace", "television",
    "dresser", "chest_of_drawers", "coffee_table", "potted_plant", "vase",
    "clock", "statue", "stool", "ottoman", "wardrobe", "sink", "bathtub",
    "toilet", "refrigerator", "oven", "stove", "microwave", "washing_machine",
    "shelf", "curtain", "radiator", "fan", "sculpture", "rug", "basket",
    "trash_can", "counter", "nightstand", "bed", "closet", "shower",
    "towel_rack", "printer", "speaker", "guitar", "globe", "aquarium",
    "bicycle", "easel", "candle_stand", "coat_rack", "umbrella_stand",
    "dining_table", "side_table", "pool_table", "wine_rack", "grandfather_clock",
    "treadmill", "heater", "bust", "suitcase", "hamper", "trunk", "pedestal",
    "cushion", "screen", "projector", "copier", "locker", "mailbox", "crib",
]
DECOR = ["floor", "ceiling", "wall", "chair"]

MPCAT = {"floor": (2, "floor"), "ceiling": (17, "ceiling"), "wall": (1, "wall"),
         "chair": (3, "chair")}


def fmt(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def heading(a, b):
    h = math.atan2(b[0] - a[0], b[1] - a[1])
    return h + 2 * math.pi if h < 0 else h


class Scene:
    def __init__(self, scan):
        self.scan = scan
        self.nodes = []  # (id, (x, y, z), region, included)
        self.edges = set()
        self.one_way = set()  # edges marked unobstructed in one direction only
        self.regions = []  # (level, label, lo, hi)
        self.levels = []  # (label, lo, hi)
        self.objects = []  # dicts

    def add_node(self, pos, region, included=True):
        vid = f"vp_{len(self.nodes):03d}"
        self.nodes.append((vid, pos, region, included))
        return len(self.nodes) - 1

    def connect(self, a, b):
        self.edges.add((min(a, b), max(a, b)))

    def neighbors(self, i):
        out = []
        for a, b in sorted(self.edges):
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return out

    def add_landmarks(self):
        for i, (_, pos, region, included) in enumerate(self.nodes):
            if not included:
                continue
            for j in self.neighbors(i):
                q = self.nodes[j][1]
                dx, dy = q[0] - pos[0], q[1] - pos[1]
                length = math.hypot(dx, dy)
                ux, uy = dx / length, dy / length
                # alternate sides so that relations cover left and right
                side = 1.0 if (i + j) % 2 == 0 else -1.0
                along, lateral = 0.9, 0.35 * side
                cx = pos[0] + ux * along + uy * lateral
                cy = pos[1] + uy * along - ux * lateral
                cz = pos[2] - 0.35
                self.objects.append({
                    "region": region, "category": None,
                    "center": (cx, cy, cz),
                    "axis0": (ux, uy, 0.0), "axis1": (-uy, ux, 0.0),
                    "radii": (0.4, 0.3, 0.1),
                })

    def add_decor(self, rng):
        for r, (level, _, lo, hi) in enumerate(self.regions):
            cx, cy = (lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2
            self.objects.append({
                "region": r, "category": "floor", "center": (cx, cy, lo[2]),
                "axis0": (1.0, 0.0, 0.0), "axis1": (0.0, 1.0, 0.0),
                "radii": ((hi[0] - lo[0]) / 2, (hi[1] - lo[1]) / 2, 0.0),
            })
        included = [n for n in self.nodes if n[3]]
        for k in range(0, len(included), 4):
            _, pos, region, _ = included[k]
            for off in (-0.3, 0.3):
                self.objects.append({
                    "region": region, "category": "chair",
                    "center": (pos[0] + off, pos[1] + 0.05 * rng.random(), pos[2] + 1.2),
                    "axis0": (1.0, 0.0, 0.0), "axis1": (0.0, 1.0, 0.0),
                    "radii": (0.3, 0.3, 0.45),
                })
        # an unassigned zero-thickness wall panel
        _, pos, _, _ = included[-1]
        self.objects.append({
            "region": -1, "category": "wall",
            "center": (pos[0], pos[1] + 0.1, pos[2] + 1.0),
            "axis0": (1.0, 0.0, 0.0), "axis1": (0.0, 0.0, 1.0),
            "radii": (1.0, 0.6, 0.0),
        })

    def color_landmarks(self):
        idx = [k for k, o in enumerate(self.objects) if o["category"] is None]
        centers = [p for _, p, _, inc in self.nodes if inc]
        seen_by = {}
        for k in idx:
            c = self.objects[k]["center"]
            seen_by[k] = {n for n, p in enumerate(centers) if math.dist(c, p) <= OBSERVE_RADIUS}
        colors = {}
        for k in idx:
            used = {colors[m] for m in colors if seen_by[m] & seen_by[k]}
            free = next(c for c in range(len(LANDMARKS)) if c not in used)
            colors[k] = free
            self.objects[k]["category"] = LANDMARKS[free]

    def write(self):
        cats = sorted({o["category"] for o in self.objects},
                      key=lambda c: (c not in LANDMARKS, LANDMARKS.index(c) if c in LANDMARKS else DECOR.index(c)))
        cat_index = {c: i for i, c in enumerate(cats)}
        lines = [" ".join(["H", self.scan, "house", "0", str(len(self.nodes)), "0", "0", "0",
                           str(len(self.objects)), str(len(cats)), str(len(self.regions)), "0",
                           str(len(self.levels)), "0", "0", "0", "0", "0"])]
        for li, (label, lo, hi) in enumerate(self.levels):
            nreg = sum(1 for r in self.regions if r[0] == li)
            mid = [(a + b) / 2 for a, b in zip(lo, hi)]
            lines.append(" ".join(["L", str(li), str(nreg), label] + [fmt(v) for v in (*mid, *lo, *hi)]
                                  + ["0"] * 5))
        for ri, (level, label, lo, hi) in enumerate(self.regions):
            mid = [(a + b) / 2 for a, b in zip(lo, hi)]
            lines.append(" ".join(["R", str(ri), str(level), "0", "0", label]
                                  + [fmt(v) for v in (*mid, *lo, *hi)] + ["0"] * 5))
        for ci, c in enumerate(cats):
            mp = MPCAT.get(c, (ci % 40 + 4, "objects"))
            lines.append(" ".join(["C", str(ci), str(100 + ci), c, str(mp[0]), mp[1]] + ["0"] * 5))
        for pi, (vid, pos, region, _) in enumerate(self.nodes):
            lines.append(" ".join(["P", vid, str(pi), str(region), "0"] + [fmt(v) for v in pos]
                                  + ["0"] * 5))
        for oi, o in enumerate(self.objects):
            vals = (*o["center"], *o["axis0"], *o["axis1"], *o["radii"])
            lines.append(" ".join(["O", str(oi), str(o["region"]), str(cat_index[o["category"]])]
                                  + [fmt(v) for v in vals] + ["0"] * 8))
        (OUT / f"{self.scan}.house").write_text("\n".join(lines) + "\n")

        records = []
        n = len(self.nodes)
        for i, (vid, pos, _, included) in enumerate(self.nodes):
            unob = [False] * n
            for a, b in self.edges:
                if (a, b) in self.one_way:
                    if a == i:
                        unob[b] = True
                    continue
                if a == i:
                    unob[b] = True
                elif b == i:
                    unob[a] = True
            pose = [1.0, 0.0, 0.0, round(pos[0], 6), 0.0, 1.0, 0.0, round(pos[1], 6),
                    0.0, 0.0, 1.0, round(pos[2], 6), 0.0, 0.0, 0.0, 1.0]
            records.append({"image_id": vid, "pose": pose, "included": included,
                            "unobstructed": unob, "height": EYE_HEIGHT})
        (OUT / f"{self.scan}_connectivity.json").write_text(json.dumps(records, indent=1) + "\n")


def grid_scene(scan, cols, rows, spacing, angle, jitter, drop, seed):
    rng = random.Random(seed)
    s = Scene(scan)
    ca, sa = math.cos(angle), math.sin(angle)
    half_x, half_y = cols * spacing / 2, rows * spacing / 2
    s.levels.append(("0", (-half_x - 3, -half_y - 3, 0.0), (half_x + 3, half_y + 3, 3.0)))
    s.regions.append((0, "l", (-half_x - 3, -half_y - 3, 0.0), (0.0, half_y + 3, 3.0)))
    s.regions.append((0, "k", (0.0, -half_y - 3, 0.0), (half_x + 3, half_y + 3, 3.0)))
    ids = {}
    for r in range(rows):
        for c in range(cols):
            x = (c - (cols - 1) / 2) * spacing + rng.uniform(-jitter, jitter)
            y = (r - (rows - 1) / 2) * spacing + rng.uniform(-jitter, jitter)
            px, py = ca * x + sa * y, -sa * x + ca * y
            ids[(r, c)] = s.add_node((px, py, EYE_HEIGHT), 0 if x < 0 else 1)
    for r in range(rows):
        for c in range(cols):
            for dr, dc in ((0, 1), (1, 0)):
                if (r + dr, c + dc) in ids:
                    s.connect(ids[(r, c)], ids[(r + dr, c + dc)])
    removable = sorted(s.edges)
    rng.shuffle(removable)
    removed = 0
    for e in removable:
        if removed == drop:
            break
        s.edges.discard(e)
        if connected(s):
            removed += 1
        else:
            s.edges.add(e)
    # some edges recorded from one side only
    for e in sorted(s.edges)[::7]:
        s.one_way.add(e)
    # an excluded viewpoint next to the first node, with edges that must be dropped
    first = s.nodes[0][1]
    ex = s.add_node((first[0] - 1.0, first[1] - 1.0, EYE_HEIGHT), 0, included=False)
    s.edges.add((0, ex))
    return s, rng


def connected(s):
    inc = [i for i, n in enumerate(s.nodes) if n[3]]
    seen, stack = {inc[0]}, [inc[0]]
    while stack:
        u = stack.pop()
        for v in s.neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen >= set(inc)


def finish(s, rng):
    real_edges = {e for e in s.edges if s.nodes[e[0]][3] and s.nodes[e[1]][3]}
    dropped = s.edges - real_edges
    s.edges = real_edges
    s.add_landmarks()
    s.color_landmarks()
    s.add_decor(rng)
    s.edges |= dropped
    s.write()


def house_scene():
    rng = random.Random(7)
    s = Scene("house02")
    s.levels.append(("0", (-6.0, -6.0, 0.0), (6.0, 6.0, 3.0)))
    s.levels.append(("1", (-6.0, -6.0, 3.0), (6.0, 6.0, 6.0)))
    s.regions.append((0, "l", (-6.0, -6.0, 0.0), (6.0, 6.0, 3.0)))
    s.regions.append((0, "s", (4.0, -6.0, 0.0), (8.0, 6.0, 4.5)))
    s.regions.append((1, "b", (-6.0, -6.0, 3.0), (6.0, 6.0, 6.0)))
    ids = {}
    for floor, z, region in ((0, 0.0, 0), (1, 3.0, 2)):
        for r in range(4):
            for c in range(4):
                x = -3.0 + 2.0 * c + rng.uniform(-0.15, 0.15)
                y = -3.0 + 2.0 * r + rng.uniform(-0.15, 0.15)
                ids[(floor, r, c)] = s.add_node((x, y, z + EYE_HEIGHT), region)
    for floor in (0, 1):
        for r in range(4):
            for c in range(4):
                for dr, dc in ((0, 1), (1, 0)):
                    k = (floor, r + dr, c + dc)
                    if k in ids:
                        s.connect(ids[(floor, r, c)], ids[k])
    # stair landing half way up, beside the east column
    landing = s.add_node((5.0, -1.0, 1.5 + EYE_HEIGHT), 1)
    s.connect(ids[(0, 0, 3)], landing)
    s.connect(landing, ids[(1, 2, 3)])
    for e in [(ids[(0, 0, 1)], ids[(0, 0, 2)]), (ids[(1, 2, 1)], ids[(1, 3, 1)])]:
        s.edges.discard((min(e), max(e)))
    for e in sorted(s.edges)[::9]:
        s.one_way.add(e)
    ex = s.add_node((-5.0, 5.0, EYE_HEIGHT), 0, included=False)
    s.edges.add((ids[(0, 3, 0)], ex))
    return s, rng


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    s, rng = grid_scene("grid01", cols=5, rows=6, spacing=2.0, angle=0.0, jitter=0.12,
                        drop=4, seed=11)
    finish(s, rng)
    s, rng = house_scene()
    finish(s, rng)
    s, rng = grid_scene("tilted03", cols=5, rows=5, spacing=2.2, angle=math.radians(30),
                        jitter=0.1, drop=3, seed=23)
    finish(s, rng)
    bedroom()
    small_and_malformed()


SMALL = [
    "H small house 0 4 0 0 0 3 2 2 0 1 0 0 0 0 0",
    "L 0 2 0 0.0 0.0 1.5 -3.0 -3.0 0.0 3.0 3.0 3.0 0 0 0 0 0",
    "R 0 0 0 0 l -1.5 0.0 1.5 -3.0 -3.0 0.0 0.0 3.0 3.0 0 0 0 0 0",
    "R 1 0 0 0 k 1.5 0.0 1.5 0.0 -3.0 0.0 3.0 3.0 3.0 0 0 0 0 0",
    "C 0 100 painting 4 picture 0 0 0 0 0",
    "C 1 101 chest_of_drawers 7 chest_of_drawers 0 0 0 0 0",
    "P vp_000 0 0 0 -2.0 0.0 1.5 0 0 0 0 0",
    "P vp_001 1 0 0 -1.0 1.0 1.5 0 0 0 0 0",
    "P vp_002 2 1 0 1.0 1.0 1.5 0 0 0 0 0",
    "P vp_003 3 1 0 2.0 0.0 1.5 0 0 0 0 0",
    "O 0 0 0 -2.5 1.0 1.8 1 0 0 0 0 1 1.0 0.6 0.0 0 0 0 0 0 0 0 0",
    "O 1 1 1 2.0 1.5 0.5 0 1 0 -1 0 0 0.5 0.3 0.5 0 0 0 0 0 0 0 0",
    "O 2 -1 0 0.0 -2.0 1.2 0.6 0.8 0 -0.8 0.6 0 0.4 0.4 0.1 0 0 0 0 0 0 0 0",
]


def small_and_malformed():
    """A 13-line scene and ten single-fault variants of it.

    manifest.tsv lists each variant with the line and record type the parser
    must report.
    """
    (OUT / "small.house").write_text("\n".join(SMALL) + "\n")
    bad = OUT / "malformed"
    bad.mkdir(exist_ok=True)

    def edit(line, fn):
        lines = list(SMALL)
        fn(lines, line - 1)
        return lines

    def replace_token(k, value):
        def fn(lines, i):
            toks = lines[i].split()
            toks[k] = value
            lines[i] = " ".join(toks)
        return fn

    cases = [
        ("short_object.house", 11, "O", edit(11, lambda l, i: l.__setitem__(i, l[i].rsplit(" ", 1)[0]))),
        ("bad_number.house", 3, "R", edit(3, replace_token(6, "1.2.3"))),
        ("unknown_record.house", 7, "X", edit(7, lambda l, i: l.insert(i, "X 0 0 0"))),
        ("axis_not_unit.house", 12, "O", edit(12, replace_token(7, "0.5"))),
        ("axes_not_orthogonal.house", 13, "O",
         edit(13, lambda l, i: l.__setitem__(i, l[i].replace("-0.8 0.6 0", "0.8 0.6 0")))),
        ("dangling_category.house", 12, "O", edit(12, replace_token(3, "5"))),
        ("duplicate_panorama.house", 9, "P", edit(9, replace_token(1, "vp_001"))),
        ("count_mismatch.house", 1, "H", edit(1, replace_token(8, "4"))),
        ("negative_radius.house", 11, "O", edit(11, replace_token(14, "-0.1"))),
        ("inverted_bbox.house", 4, "R", edit(4, replace_token(9, "5.0"))),
    ]
    manifest = []
    for name, line, record, lines in cases:
        (bad / name).write_text("\n".join(lines) + "\n")
        manifest.append(f"{name}\t{line}\t{record}")
    (bad / "manifest.tsv").write_text("\n".join(manifest) + "\n")


def bedroom():
    """Two viewpoints; the bed and closet are the largest usable objects."""
    s = Scene("bedroom")
    s.levels.append(("0", (-3.0, -3.0, 0.0), (3.0, 3.0, 3.0)))
    s.regions.append((0, "b", (-3.0, -3.0, 0.0), (3.0, 3.0, 3.0)))
    a = s.add_node((0.0, 0.0, EYE_HEIGHT), 0)
    b = s.add_node((0.0, 2.0, EYE_HEIGHT), 0)
    s.connect(a, b)
    box = lambda cat, c, r: {"region": 0, "category": cat, "center": c,
                             "axis0": (1.0, 0.0, 0.0), "axis1": (0.0, 1.0, 0.0), "radii": r}
    s.objects = [
        box("floor", (0.0, 0.0, 0.0), (3.0, 3.0, 0.0)),
        box("bed", (1.2, 0.5, 0.3), (1.0, 0.8, 0.3)),
        box("closet", (-1.5, 0.8, 1.0), (0.6, 0.3, 1.0)),
        box("lamp", (0.6, -0.8, 0.9), (0.15, 0.15, 0.3)),
        box("chair", (-0.8, -1.0, 0.5), (0.3, 0.3, 0.45)),
        box("chair", (-0.2, -1.2, 0.5), (0.3, 0.3, 0.45)),
    ]
    s.write()


if __name__ == "__main__":
    main()
