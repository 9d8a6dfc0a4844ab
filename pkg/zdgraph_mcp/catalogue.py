"""The model catalogue walked by ``verify``"""

import logging
import random
import re
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Set, Tuple

from pydantic import BaseModel, Field

from .core.blowup import (
    CHECK_REFERENCES,
    CHECK_TAGS,
    BlowupSpec,
    Discrepancy,
    cross_check,
    generate,
)
from .core.isorecon import (
    AbstractGraph,
    AtomRegime,
    random_automorphism_psi,
    reconstruct,
    verify_ring_iso,
)
from .core.zdgraph import GraphFlavor
from .utils.errors import ConfigurationError, ReconstructionError
from .utils.parser import parse_alphabet, parse_model, parse_window

logger = logging.getLogger(__name__)

VERIFY_TAGS = CHECK_TAGS + ("reconstruction",)
VERIFY_REFERENCES: Dict[str, Tuple[str, ...]] = {**CHECK_REFERENCES, "reconstruction": ("Th 6.4",)}


def _normalize_reference(text: str) -> str:
    # "Th 2.7(3)", "th2.7" and "Th2.7" all name the same result
    return re.sub(r"\s+|\(.*\)$", "", text.strip().lower())


def resolve_only(only: str) -> Set[str]:
    """Check tags selected by a tag name or by the result tag they confirm"""
    if only in VERIFY_TAGS:
        return {only}
    wanted = _normalize_reference(only)
    tags = {
        tag
        for tag, references in VERIFY_REFERENCES.items()
        if wanted in (_normalize_reference(r) for r in references)
    }
    if not tags:
        known = sorted({r for references in VERIFY_REFERENCES.values() for r in references})
        raise ConfigurationError(
            f"Unknown check tag '{only}'. Known tags: {', '.join(VERIFY_TAGS)}; "
            f"or a result tag: {', '.join(known)}"
        )
    return tags


class CatalogueEntry(BaseModel):
    name: str
    ground: str
    ideal: str
    flavor: str = "cp"
    window: Optional[str] = None
    # "blowup" runs cross_check, "reconstruction" runs isomorphism round trips
    kind: str = "blowup"
    regime: str = "finite"
    partner: Optional[str] = None


CATALOGUE: List[CatalogueEntry] = [
    CatalogueEntry(name="powerset-2", ground="countable", ideal="powerset:{0,1}"),
    CatalogueEntry(name="powerset-3", ground="countable", ideal="powerset:{0,1,2}"),
    CatalogueEntry(name="powerset-4", ground="countable", ideal="powerset:{0,1,2,3}"),
    CatalogueEntry(name="finite-ground-2", ground="finite:2", ideal="all"),
    CatalogueEntry(name="finite-ground-3", ground="finite:3", ideal="all"),
    CatalogueEntry(name="naturals-finite", ground="countable", ideal="finite", window="[0..3]"),
    CatalogueEntry(
        name="naturals-finite-inf",
        ground="countable",
        ideal="finite",
        flavor="cpinf",
        window="[0..3]",
    ),
    CatalogueEntry(name="naturals-all", ground="countable", ideal="all", window="[0..3]"),
    CatalogueEntry(name="iso-2", ground="finite:2", ideal="finite", kind="reconstruction"),
    CatalogueEntry(name="iso-3", ground="finite:3", ideal="finite", kind="reconstruction"),
    CatalogueEntry(name="iso-4", ground="finite:4", ideal="finite", kind="reconstruction"),
    CatalogueEntry(
        name="iso-naturals",
        ground="countable",
        ideal="finite",
        window="[0..3]",
        kind="reconstruction",
        regime="infinite",
    ),
    CatalogueEntry(
        name="iso-cross-size",
        ground="finite:2",
        ideal="finite",
        kind="reconstruction",
        partner="finite:3",
    ),
]


class EntryResult(BaseModel):
    name: str
    model: str
    flavor: str
    checks: Dict[str, int] = Field(default_factory=dict)
    discrepancies: List[Discrepancy] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)
    partial: bool = False


class VerifyReport(BaseModel):
    seed: int
    mutate: bool
    only: Optional[str] = None
    entries: List[EntryResult] = Field(default_factory=list)

    @property
    def discrepancy_count(self) -> int:
        return sum(len(entry.discrepancies) for entry in self.entries)

    @property
    def check_count(self) -> int:
        return sum(sum(entry.checks.values()) for entry in self.entries)

    @property
    def passed(self) -> bool:
        return self.discrepancy_count == 0


class VerifyOptions(BaseModel):
    only: Optional[str] = None
    mutate: bool = False
    seed: int = 0
    alphabet: str = "1,2"
    cap: int = 200
    budget_seconds: float = 30.0
    hull_samples: int = 1000
    orthogonal_samples: int = 1000
    iso_rounds: int = 20
    iso_samples: int = 500
    workers: int = 1


def _run_blowup(entry: CatalogueEntry, options: VerifyOptions) -> EntryResult:
    model = parse_model(entry.ground, entry.ideal)
    spec = BlowupSpec.for_model(
        model,
        GraphFlavor(entry.flavor),
        window=parse_window(entry.window),
        alphabet=parse_alphabet(options.alphabet),
        cap=options.cap,
        mutate=options.mutate,
    )
    report = cross_check(
        spec,
        only=None if options.only is None else resolve_only(options.only),
        seed=options.seed,
        budget_seconds=options.budget_seconds,
        orthogonal_samples=options.orthogonal_samples,
        hull_samples=options.hull_samples,
    )
    return EntryResult(
        name=entry.name,
        model=report.model,
        flavor=report.flavor,
        checks=report.checks,
        discrepancies=report.discrepancies,
        skipped=report.skipped,
        partial=report.partial,
    )


def _run_reconstruction(entry: CatalogueEntry, options: VerifyOptions) -> EntryResult:
    model = parse_model(entry.ground, entry.ideal)
    alphabet = parse_alphabet(options.alphabet)
    spec = BlowupSpec.for_model(
        model, window=parse_window(entry.window), alphabet=alphabet, cap=options.cap
    )
    result = EntryResult(name=entry.name, model=model.to_text(), flavor="cp")

    def record(ok: bool, witness: str, expected: str, observed: str) -> None:
        result.checks["reconstruction"] = result.checks.get("reconstruction", 0) + 1
        if not ok:
            result.discrepancies.append(
                Discrepancy(
                    tag="reconstruction",
                    reference=VERIFY_REFERENCES["reconstruction"][0],
                    model=result.model,
                    flavor=result.flavor,
                    witness=witness,
                    expected=expected,
                    observed=observed,
                )
            )

    g = generate(spec)
    abstract = AbstractGraph.from_explicit(g)

    if entry.partner is not None:
        partner = parse_model(entry.partner, entry.ideal)
        other = AbstractGraph.from_explicit(
            generate(BlowupSpec.for_model(partner, alphabet=alphabet, cap=options.cap))
        )
        witness = f"{entry.ground} vs {entry.partner}"
        try:
            reconstruct(abstract, other, {})
            record(False, witness, "chromatic mismatch", "accepted")
        except ReconstructionError as e:
            record("chromatic mismatch" in str(e), witness, "chromatic mismatch", str(e))
        return result

    rng = random.Random(options.seed)
    for round_number in range(options.iso_rounds):
        psi, point_map = random_automorphism_psi(g, rng)
        witness = f"round {round_number} phi={point_map}"
        try:
            desc = reconstruct(abstract, abstract, psi, AtomRegime(entry.regime))
        except ReconstructionError as e:
            record(False, witness, "reconstructed", str(e))
            continue
        record(desc.point_map == point_map, witness, str(point_map), str(desc.point_map))
        verdict = verify_ring_iso(desc, options.iso_samples, seed=rng.randrange(2**31))
        record(verdict.verified, witness, "verified", verdict.counterexample or "verified")
    return result


def run_entry(entry: CatalogueEntry, options: VerifyOptions) -> EntryResult:
    logger.info(f"Verifying {entry.name}")
    if entry.kind == "reconstruction":
        return _run_reconstruction(entry, options)
    return _run_blowup(entry, options)


def selected_entries(options: VerifyOptions) -> List[CatalogueEntry]:
    if options.only is None:
        return list(CATALOGUE)
    tags = resolve_only(options.only)
    kinds = {"reconstruction" if tag == "reconstruction" else "blowup" for tag in tags}
    return [entry for entry in CATALOGUE if entry.kind in kinds]


def run_verify(options: VerifyOptions) -> VerifyReport:
    """Run the catalogue; results keep catalogue order whatever the worker count"""
    entries = selected_entries(options)
    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            results = list(pool.map(lambda entry: run_entry(entry, options), entries))
    else:
        results = [run_entry(entry, options) for entry in entries]
    report = VerifyReport(
        seed=options.seed, mutate=options.mutate, only=options.only, entries=results
    )
    logger.info(
        f"Verify finished: {report.check_count} checks, {report.discrepancy_count} discrepancies"
    )
    return report
