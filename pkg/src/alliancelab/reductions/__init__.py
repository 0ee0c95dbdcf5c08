"""Executable gadget reductions with solution lifting and projection.

Each entry in REDUCTIONS names one construction:

===============  ==============================  =========================
name             source                          target
===============  ==============================  =========================
mrss-soafn       MRSS                            strong OA, forbidden+necessary
collapse         strong OA^FN                    same, one necessary vertex
soafn-oaf        strong OA^FN, one necessary     OA, forbidden only
oaf-oa           OA^F                            OA, unconstrained
mrss-oa          MRSS                            OA (composition of the above)
phs-oa           k x k permutation hitting set   OA, r = 5k
cs-oa            closest string                  OA, r = 4n+2d+1
vc-bipartite     vertex cover, max degree 3      OA on a bipartite graph
vc-split         vertex cover, max degree 3      OA on a split graph
pds-apex         planar dominating set           strong OA on an apex graph
ds-circle        dominating set on circle graph  OA on a circle graph
===============  ==============================  =========================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    ReductionCapacityError,
    ReductionInputError,
)
from alliancelab.reductions import apex, circle, hitting, strings, subsetsum, vertexcover


@dataclass(frozen=True)
class Reduction:
    """A registered construction: build the target, lift a source witness,
    and (where the construction admits one) project a target
    solution back."""

    name: str
    source_kind: str
    build: Callable[..., ReducedInstance]
    lift: Callable[..., LiftReport]
    project: Optional[Callable[..., object]] = None
    seedable: bool = False


REDUCTIONS: dict[str, Reduction] = {
    "mrss-soafn": Reduction(
        "mrss-soafn", "mrss",
        subsetsum.mrss_to_soafn, subsetsum.lift_mrss, subsetsum.project_mrss,
        seedable=True,
    ),
    "collapse": Reduction(
        "collapse", "reduced",
        subsetsum.collapse_necessary, subsetsum.lift_collapse, subsetsum.project_collapse,
    ),
    "soafn-oaf": Reduction(
        "soafn-oaf", "reduced",
        subsetsum.soafn_to_oaf, subsetsum.lift_soafn_oaf, subsetsum.project_soafn_oaf,
    ),
    "oaf-oa": Reduction(
        "oaf-oa", "reduced",
        subsetsum.oaf_to_oa, subsetsum.lift_oaf_oa, subsetsum.project_oaf_oa,
    ),
    "mrss-oa": Reduction(
        "mrss-oa", "mrss",
        subsetsum.mrss_to_oa_pipeline, subsetsum.lift_pipeline, subsetsum.project_pipeline,
        seedable=True,
    ),
    "phs-oa": Reduction(
        "phs-oa", "phs",
        hitting.phs_to_oa, hitting.lift_phs, hitting.project_phs,
        seedable=True,
    ),
    "cs-oa": Reduction(
        "cs-oa", "closest_string",
        strings.closest_string_to_oa, strings.lift_closest_string,
        strings.project_closest_string,
        seedable=True,
    ),
    "vc-bipartite": Reduction(
        "vc-bipartite", "vertex_cover",
        vertexcover.vc3_to_oa_bipartite, vertexcover.lift_vc_bipartite,
        vertexcover.project_vc_bipartite,
    ),
    "vc-split": Reduction(
        "vc-split", "vertex_cover",
        vertexcover.vc3_to_oa_split, vertexcover.lift_vc_split,
        vertexcover.project_vc_split,
    ),
    "pds-apex": Reduction(
        "pds-apex", "dominating_set",
        apex.pds_to_soa_apex, apex.lift_apex, apex.project_apex,
    ),
    "ds-circle": Reduction(
        "ds-circle", "circle_ds",
        circle.circle_ds_to_oa, circle.lift_circle, circle.project_circle,
    ),
}

__all__ = [
    "Reduction",
    "REDUCTIONS",
    "ReducedInstance",
    "LiftReport",
    "Provenance",
    "GadgetBuilder",
    "ReductionInputError",
    "ReductionCapacityError",
]
