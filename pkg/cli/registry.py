"""
Name → builder registries behind the count, table, export and group commands.

Keys are the public names; iteration order is the order `--help` and the
error messages list them in.
"""

from typing import Callable, Dict, List

from configs.bitangents28 import (
    aronhold_orbit,
    bitangent_group,
    bitangents28,
    complex_triads,
    fano_heptads,
    steiner_complexes,
)
from configs.lines27 import (
    azygetic_triads,
    double_sixes,
    lines27,
    steiner_sets_27,
    steiner_triple_systems,
    syzygetic_tetrads_of_double_sixes,
    tritangent_planes_27,
)
from configs.tritangents120 import azygetic_triads_e8, syzygetic_tetrads_e8, tritangents120
from fano.cubes import harmonic_cubes, harmonic_faces, to_drawn_labels, triangle_pair_rows
from fano.orientations import coherent_orientations, orientation_orbits
from fano.plane import collineations, collineations_on_triangles, fano_lines, triangles
from fano.projective_line import format_points
from fano.reference_tables import QUADRUPLES_E8, T_SYSTEM_COLUMNS, drawn_points
from jobs.algebra_job import e7_model, e8_model, v56_module
from liealg.chevalley import chevalley_oracle
from liealg.doubled_fano import format_partition, partition_of, xor_array
from liealg.ograded import e7_factors, e8_factors
from liealg.tetrad_signs import tetrad_sign_tables
from models.models import SuiteContext
from octonion.algebra import sign_table
from permgrp.aronhold_systems import aronhold_triangle_systems, column_of
from permgrp.hesse import hesse_group
from permgrp.pascal import pascal_group
from permgrp.schreier_sims import PermutationGroup
from permgrp.triangle_sigma import triangle_sigma_group
from rootlat.presets import parent_system
from rootlat.root_system import reflection_permutations
from utils.formatting import Table


# ==============================================================
# COUNTS
# ==============================================================

COUNTS: Dict[str, Callable[[], int]] = {
    "lines": lambda: len(lines27()),
    "tritangent-planes": lambda: len(tritangent_planes_27()),
    "double-sixes": lambda: len(double_sixes()),
    "azygetic-triads-e6": lambda: len(azygetic_triads()),
    "syzygetic-tetrads-e6": lambda: len(syzygetic_tetrads_of_double_sixes()),
    "steiner-sets": lambda: len(steiner_sets_27()),
    "steiner-triple-systems": lambda: len(steiner_triple_systems()),
    "bitangents": lambda: len(bitangents28()),
    "steiner-complexes": lambda: len(steiner_complexes()),
    "syzygetic-triads-e7": lambda: complex_triads().syzygetic,
    "azygetic-triads-e7": lambda: complex_triads().azygetic,
    "fano-heptads": lambda: len(fano_heptads()),
    "aronhold-sets": lambda: len(aronhold_orbit()),
    "tritangent-planes-e8": lambda: len(tritangents120()),
    "azygetic-triads-e8": lambda: len(azygetic_triads_e8()),
    "syzygetic-tetrads-e8": lambda: len(syzygetic_tetrads_e8()),
    "fano-triangles": lambda: len(triangles()),
    "orientations": lambda: len(coherent_orientations()),
    "harmonic-cubes": lambda: len(harmonic_cubes()),
    "harmonic-faces": lambda: len(harmonic_faces()),
}


# ==============================================================
# TABLES
# ==============================================================

def triangle_pairs_table(theta: int = 0) -> Table:
    return Table("triangle-pairs", ("pair", "triangle"), tuple(triangle_pair_rows()), style="arrow")


def t_systems_table(theta: int = 0) -> Table:
    """One row per Aronhold system; the column line's triangle is the one avoiding it."""
    rows = []
    for system in aronhold_triangle_systems():
        cells = [to_drawn_labels(column_of(system, tuple(sorted(drawn_points(header)))).vertices)
                 for header in T_SYSTEM_COLUMNS]
        rows.append((system.name,) + tuple(cells))
    return Table("t-systems", ("",) + T_SYSTEM_COLUMNS, tuple(rows))


def quadruples_e7_table(theta: int = 0) -> Table:
    rows = tuple((f.name, str(f.grade)) for f in e7_factors())
    return Table("quadruples-e7", ("quadruple", "grade"), rows, style="words")


def quadruples_e8_table(theta: int = 0) -> Table:
    """Printed order, each quadruple next to its complement."""
    names = {f.name for f in e8_factors()}
    rows = []
    for q in QUADRUPLES_E8:
        if q not in names:
            raise RuntimeError(f"quadruple {q} is not a factor of the e8 model")
        rows.append((q, "".join(str(x) for x in range(1, 9) if str(x) not in q)))
    return Table("quadruples-e8", ("quadruple", "complement"), tuple(rows), style="words")


def xor_array_table(theta: int = 0) -> Table:
    rows = tuple(tuple(int(x) for x in row) for row in xor_array())
    return Table("xor-array", tuple(str(k) for k in range(1, 9)), rows,
                 note="cells are indexed from 0 in both directions")


def cubes_table(theta: int = 0) -> Table:
    rows = tuple(
        (c.family, c.name, format_points(c.labels[:4]), format_points(c.labels[4:]))
        for c in harmonic_cubes()
    )
    return Table("cubes", ("family", "name", "bottom", "top"), rows)


def theta_table(theta: int = 0) -> Table:
    table = sign_table(theta)
    symbols = {1: "+", -1: "-", 0: "0"}
    rows = tuple((str(a),) + tuple(symbols[s] for s in row) for a, row in zip(range(1, 8), table.rows()))
    return Table(f"theta-{theta}", ("θ",) + tuple(str(b) for b in range(1, 8)), rows,
                 note=f"orientation {table.orientation}")


def orientations_table(theta: int = 0) -> Table:
    orbit_of = {}
    for k, orbit in enumerate(orientation_orbits(coherent_orientations())):
        for o in orbit:
            orbit_of[o] = k
    rows = tuple((str(i), str(o), str(orbit_of[o])) for i, o in enumerate(coherent_orientations()))
    return Table("orientations", ("index", "cycles", "orbit"), rows)


def pair_partitions_table(theta: int = 0) -> Table:
    rows = tuple((str(j), format_partition(partition_of(j))) for j in range(1, 8))
    return Table("pair-partitions", ("j", "partition"), rows)


def tetrad_signs_table(theta: int = 0) -> Table:
    rows = []
    for k, splitting in enumerate(tetrad_sign_tables()):
        first, second = splitting.tables()
        rows.append((str(k), " ".join(first), " ".join(second)))
    return Table("tetrad-signs", ("splitting", "first", "second"), tuple(rows))


def fano_lines_table(theta: int = 0) -> Table:
    rows = tuple(tuple(str(p) for p in line) for line in fano_lines())
    return Table("fano-lines", ("a", "b", "c"), rows, style="words")


TABLES: Dict[str, Callable[[int], Table]] = {
    "triangle-pairs": triangle_pairs_table,
    "t-systems": t_systems_table,
    "quadruples-e7": quadruples_e7_table,
    "quadruples-e8": quadruples_e8_table,
    "xor-array": xor_array_table,
    "cubes": cubes_table,
    "theta": theta_table,
    "orientations": orientations_table,
    "pair-partitions": pair_partitions_table,
    "tetrad-signs": tetrad_signs_table,
    "fano-lines": fano_lines_table,
}


# ==============================================================
# GROUPS
# ==============================================================

def weyl_group_on_roots(type_label: str) -> PermutationGroup:
    rs = parent_system(type_label)
    return PermutationGroup(reflection_permutations(rs, rs.roots), degree=len(rs.roots))


GROUPS: Dict[str, Callable[[], PermutationGroup]] = {
    "weyl-E6": lambda: weyl_group_on_roots("E6"),
    "weyl-E7": lambda: weyl_group_on_roots("E7"),
    "weyl-E8": lambda: weyl_group_on_roots("E8"),
    "bitangents": bitangent_group,
    "hesse": hesse_group,
    "triangle-sigma": triangle_sigma_group,
    "pascal": pascal_group,
    "collineations": collineations,
    "collineations-on-triangles": collineations_on_triangles,
}


def group_document(name: str, group: PermutationGroup) -> dict:
    return {"schema": 1, "kind": "permutation_group", "name": name, **group.to_dict()}


# ==============================================================
# EXPORTS
# ==============================================================

def root_system_document(type_label: str) -> dict:
    return {"schema": 1, "kind": "root_system", **parent_system(type_label).to_dict()}


def octonion_document(context: SuiteContext) -> dict:
    table = sign_table(context.theta_index)
    return {
        "schema": 1,
        "kind": "octonion_table",
        "theta_index": context.theta_index,
        "orientation": str(table.orientation),
        "theta": table.rows(),
    }


Exporter = Callable[[SuiteContext], dict]

EXPORTS: Dict[str, Exporter] = {
    "structure-constants-e7": lambda ctx: e7_model(ctx).algebra.to_dict(),
    "structure-constants-e8": lambda ctx: e8_model(ctx).algebra.to_dict(),
    "module-v56": lambda ctx: v56_module(ctx).to_dict(),
    "root-system-E6": lambda ctx: root_system_document("E6"),
    "root-system-E7": lambda ctx: root_system_document("E7"),
    "root-system-E8": lambda ctx: root_system_document("E8"),
    "chevalley-E6": lambda ctx: chevalley_oracle(parent_system("E6")).to_dict(),
    "chevalley-E7": lambda ctx: chevalley_oracle(parent_system("E7")).to_dict(),
    "chevalley-E8": lambda ctx: chevalley_oracle(parent_system("E8")).to_dict(),
    "lines27": lambda ctx: lines27().to_dict(),
    "bitangents28": lambda ctx: bitangents28().to_dict(),
    "tritangents120": lambda ctx: tritangents120().to_dict(),
    "octonion-table": octonion_document,
}
for _name, _build in GROUPS.items():
    EXPORTS[f"group-{_name}"] = lambda ctx, name=_name, build=_build: group_document(name, build())


def names(registry: Dict) -> List[str]:
    return list(registry)
