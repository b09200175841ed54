"""Named instances and parameterized families with expected properties.

Every expectation recorded here is re-derived by the pipeline in the
acceptance suite; the catalog never short-circuits computation.  Expected
values are stored as plain typed fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cycles import CoxeterGraph
from .errors import PreconditionError
from .presentation import Presentation, make_presentation, rank3_presentation

INF = math.inf


@dataclass(frozen=True)
class Expectations:
    """What the acceptance pipeline should re-derive for an instance."""

    eis: bool | None = None
    two_recognizable: bool | None = None
    rank3: tuple | None = None  # (family, params)
    finite_order: int | None = None  # None: not known finite
    companion: CoxeterGraph | None = None
    coxeter_type: dict | None = None  # resolved entries {(i, j): order}
    is_coxeter: str | None = None  # "yes" | "no"
    quasi_coxeter: bool | None = None
    audit_level: int | None = None
    audit_ok: bool | None = None
    audit_witness: tuple | None = None  # pair of word strings
    cycle_half_lengths: tuple | None = None  # sorted, at the identity
    growth_matches_companion_to: int | None = None
    is_emis_instance: bool = False  # include in the EMIS-wide property sweeps
    radius: int = 4
    workspace: int | None = None
    max_cycle_len: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    presentation: Presentation
    note: str
    expect: Expectations = field(default_factory=Expectations)


def _triangle(labels):
    return CoxeterGraph.from_matrix(("a", "b", "c"), {(0, 1): labels[0], (1, 2): labels[1], (0, 2): labels[2]})


def _named_entries():
    entries = {}

    hc = make_presentation(["s1", "s2", "s3"], ["(s1 s2 s3)^2"])
    entries["honeycomb"] = CatalogEntry(
        "honeycomb",
        hc,
        "hexagonal-tiling system; quasi-Coxeter with triangle companion, not Coxeter",
        Expectations(
            eis=True,
            two_recognizable=True,
            rank3=("I", (1,)),
            companion=CoxeterGraph.from_matrix(
                ("s1", "s2", "s3"), {(0, 1): 3, (1, 2): 3, (0, 2): 3}
            ),
            is_coxeter="no",
            quasi_coxeter=True,
            audit_level=5,
            audit_ok=True,
            cycle_half_lengths=(3, 3, 3),
            growth_matches_companion_to=6,
            is_emis_instance=True,
            radius=6,
            workspace=13,
        ),
    )

    abc = make_presentation(["a", "b", "c"], ["abc"])
    entries["mis-not-emis-abc"] = CatalogEntry(
        "mis-not-emis-abc",
        abc,
        "order-4 system with odd relator: meet-semilattice without sign character",
        Expectations(
            eis=False,
            finite_order=4,
            audit_level=1,  # the whole group: every element has length <= 1
            audit_ok=True,
            radius=3,
        ),
    )

    a5 = make_presentation(
        ["a", "b", "c"],
        ["(ab)^5", "(bc)^3", "(ac)^2", "cbabc(ab)^2c(ab)^2a"],
    )
    entries["a5"] = CatalogEntry(
        "a5",
        a5,
        "alternating group of order 60 on three involutions; meet-semilattice, no sign character",
        Expectations(
            eis=False,
            finite_order=60,
            coxeter_type={(0, 1): 5, (1, 2): 3, (0, 2): 2},
            audit_level=7,
            audit_ok=True,
            radius=10,
        ),
    )

    rec = make_presentation(["a", "b", "c", "d"], ["abcdcb", "(ad)^2", "(ac)^2", "(bd)^2"])
    entries["rec-not-emis"] = CatalogEntry(
        "rec-not-emis",
        rec,
        "2-recognizable rank-4 system whose weak order is not a meet-semilattice",
        Expectations(
            eis=True,
            two_recognizable=True,
            audit_level=4,
            audit_ok=False,
            audit_witness=("abc", "abab"),
            cycle_half_lengths=(2, 2, 2, 3, 3, 3),
            radius=5,
            max_cycle_len=8,
        ),
    )

    bridge = make_presentation(["a", "b", "c", "d"], ["(abc)^2", "(ad)^2"])
    entries["rank4-bridge"] = CatalogEntry(
        "rank4-bridge",
        bridge,
        "rank-4 meet system with sign character that is not quasi-Coxeter; "
        "growth still matches its companion",
        Expectations(
            eis=True,
            two_recognizable=True,
            companion=CoxeterGraph.from_matrix(
                ("a", "b", "c", "d"),
                {(0, 1): 3, (1, 2): 3, (0, 2): 3, (0, 3): 2, (1, 3): INF, (2, 3): INF},
            ),
            is_coxeter="no",
            quasi_coxeter=False,
            audit_level=4,
            audit_ok=True,
            cycle_half_lengths=(2, 3, 3, 3),
            growth_matches_companion_to=6,
            is_emis_instance=True,
            radius=6,
            workspace=10,
            max_cycle_len=8,
        ),
    )
    return entries


_NAMED = None


def names():
    global _NAMED
    if _NAMED is None:
        _NAMED = _named_entries()
    return sorted(_NAMED) + ["universal(n)", "coxeter(m11,m12,...)", "rank3(family,params...)"]


def get(name: str, *params) -> CatalogEntry:
    """Fetch a named instance or instantiate a family.

    Families: universal(n) with n generators and no relators; rank3(family,
    m[, n[, l]]) for the four canonical rank-3 families; coxeter(labels...)
    for an explicit Coxeter matrix given as upper-triangle labels row by row
    (0 stands for infinity).
    """
    global _NAMED
    if _NAMED is None:
        _NAMED = _named_entries()
    if name in _NAMED:
        if params:
            raise PreconditionError(f"{name!r} takes no parameters")
        return _NAMED[name]

    if name == "universal":
        (n,) = params
        n = int(n)
        if n < 1:
            raise PreconditionError("universal(n) needs n >= 1")
        gens = [f"s{i+1}" for i in range(n)]
        p = make_presentation(gens, [])
        return CatalogEntry(
            f"universal({n})", p, "free product of order-2 groups",
            Expectations(eis=True, two_recognizable=True, audit_ok=True,
                         audit_level=3, is_emis_instance=(n <= 2), radius=4),
        )

    if name == "rank3":
        family, *rest = params
        p = rank3_presentation(str(family), *[_int_or_inf(x) for x in rest])
        return CatalogEntry(
            f"rank3({family},{','.join(map(str, rest))})",
            p,
            "canonical rank-3 family member",
            Expectations(eis=True, two_recognizable=True,
                         rank3=(str(family).upper(), tuple(_int_or_inf(x) for x in rest)),
                         is_emis_instance=True, radius=4),
        )

    if name == "coxeter":
        labels = [_int_or_inf(x) for x in params]
        n = _rank_from_triangle(len(labels))
        gens = [f"s{i+1}" for i in range(n)]
        entries = {}
        it = iter(labels)
        for i in range(n):
            for j in range(i + 1, n):
                entries[(i, j)] = next(it)
        g = CoxeterGraph.from_matrix(gens, entries)
        rels = [(i, j) * m for (i, j), m in entries.items() if m != INF]
        p = make_presentation(gens, rels)
        return CatalogEntry(
            f"coxeter({','.join(map(str, params))})", p, "Coxeter system from a label matrix",
            Expectations(eis=True, two_recognizable=all(m == INF or m >= 2 for m in labels),
                         companion=g, is_coxeter="yes", quasi_coxeter=True,
                         is_emis_instance=True, radius=4),
        )

    raise PreconditionError(f"unknown catalog name {name!r}")


def _int_or_inf(x):
    if x in (INF, "inf", "oo", 0, "0"):
        return INF
    return int(x)


def _rank_from_triangle(k):
    n = 1
    while n * (n - 1) // 2 < k:
        n += 1
    if n * (n - 1) // 2 != k:
        raise PreconditionError(f"{k} labels do not form an upper triangle")
    return n
