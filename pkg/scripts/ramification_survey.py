#!/usr/bin/env python3
"""Survey ramification statistics over seeded random rational covers.

Draws covers with bounded degree over a list of small fields, verifies the
structural identities on each report, and tallies how ramification is
distributed.  The draw is seeded, so a given configuration always surveys
the same covers.

    python3 scripts/ramification_survey.py
    python3 scripts/ramification_survey.py --count 500 --max-degree 6 --seed 7
"""

import argparse
import collections
import dataclasses
import random

from ramforge import GF, cover_create, ramification_report
from ramforge.errors import PreconditionError
from ramforge.polyring import Polynomial


@dataclasses.dataclass(frozen=True)
class SurveyConfig:
    count: int = 200
    max_degree: int = 8
    seed: int = 505
    orders: tuple = ((2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2))


def rand_poly(rng, field, deg):
    coeffs = [rng.randrange(field.q) for _ in range(deg)]
    return Polynomial(field, coeffs + [rng.randrange(1, field.q)])


def draw_cover(rng, field, max_degree):
    while True:
        nd = rng.randrange(1, max_degree + 1)
        dd = rng.randrange(0, nd + 1)
        try:
            c = cover_create(field, rand_poly(rng, field, nd), rand_poly(rng, field, dd))
        except PreconditionError:
            continue
        if c.degree >= 2:
            return c


def run(cfg):
    rng = random.Random(cfg.seed)
    fields = [GF(p, m) for p, m in cfg.orders]
    tally = collections.Counter()
    branch_sizes = collections.Counter()
    wild_points = 0
    points = 0
    for _ in range(cfg.count):
        field = fields[rng.randrange(len(fields))]
        c = draw_cover(rng, field, cfg.max_degree)
        r = ramification_report(c)
        n = c.degree
        assert r.different_divisor.degree() == 2 * n - 2
        for _, pts in r.fibers:
            assert sum(pt.e * pt.f for pt in pts) == n
            for pt in pts:
                points += 1
                if pt.wild:
                    wild_points += 1
        tally["tame" if r.tame else "wild"] += 1
        tally[f"q={field.q}"] += 1
        branch_sizes[len(r.branch_locus)] += 1
    print(f"surveyed {cfg.count} covers, max degree {cfg.max_degree}, "
          f"seed {cfg.seed}")
    print(f"  tame: {tally['tame']}   wild: {tally['wild']}")
    for q in sorted({f.q for f in fields}):
        print(f"  q={q}: {tally[f'q={q}']}")
    print("  branch locus sizes:",
          ", ".join(f"{k}:{v}" for k, v in sorted(branch_sizes.items())))
    print(f"  fiber points seen: {points} ({wild_points} wild)")
    print("  every cover passed the degree, fiber, and Hurwitz identities")


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--seed", type=int, default=505)
    a = ap.parse_args()
    return SurveyConfig(count=a.count, max_degree=a.max_degree, seed=a.seed)


if __name__ == "__main__":
    run(parse_args())
