# src/harness/corpus.py
"""
Knot corpus ingestion.

CSV columns (JSON mirrors them as a list of objects, or {"records": [...]}):

    name, pd, braid, alternating, positive_diagram, homogeneous,
    chi, chi4, sigma, homfly_ref, split_components, source

Exactly one of `pd` / `braid` must be given. Blank cells mean "not recorded".
Declared flags are checked against the computed classification on load.
"""
import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from src.diagram import (
    LinkDiagram,
    is_alternating,
    is_positive_diagram,
    parse_braid,
    parse_pd,
)
from src.errors import CorpusInconsistency, HomflyBoundsError, SchemaError
from src.homfly import LaurentPoly2
from src.seifert import analyze, build_seifert_graph

logger = logging.getLogger("homfly_bounds.harness")

COLUMNS = (
    "name", "pd", "braid", "alternating", "positive_diagram", "homogeneous",
    "chi", "chi4", "sigma", "homfly_ref", "split_components", "source",
)

_TRUE = {"true", "yes", "1", "y", "t"}
_FALSE = {"false", "no", "0", "n", "f"}


@dataclass
class KnotRecord:
    name: str
    pd: Optional[str] = None
    braid: Optional[str] = None
    alternating: Optional[bool] = None
    positive_diagram: Optional[bool] = None
    homogeneous: Optional[bool] = None
    chi: Optional[int] = None
    chi4: Optional[int] = None
    sigma: Optional[int] = None
    homfly_ref: Optional[str] = None
    split_components: int = 1
    source: str = ""
    _diagram: Optional[LinkDiagram] = field(default=None, repr=False, compare=False)

    def diagram(self) -> LinkDiagram:
        if self._diagram is None:
            if self.pd:
                self._diagram = parse_pd(self.pd, name=self.name)
            else:
                self._diagram = parse_braid(self.braid, name=self.name)
        return self._diagram

    def reference_polynomial(self) -> Optional[LaurentPoly2]:
        return LaurentPoly2.from_text(self.homfly_ref) if self.homfly_ref else None

    def to_dict(self) -> dict:
        return {c: getattr(self, c) for c in COLUMNS}


def _blank(value: Any) -> bool:
    return value is None or (isinstance(value, str) and value.strip() == "")


def _as_bool(value: Any, column: str, name: str) -> Optional[bool]:
    if _blank(value):
        return None
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise SchemaError(f"record {name!r}: column {column!r} is not a boolean: {value!r}")


def _as_int(value: Any, column: str, name: str) -> Optional[int]:
    if _blank(value):
        return None
    try:
        return int(str(value).strip())
    except ValueError:
        raise SchemaError(f"record {name!r}: column {column!r} is not an integer: {value!r}") from None


def parse_record(row: dict) -> KnotRecord:
    """Build a record from one CSV/JSON row; checks the schema, not the mathematics."""
    name = str(row.get("name") or "").strip()
    if not name:
        raise SchemaError(f"record without a name: {row!r}")
    unknown = set(row) - set(COLUMNS)
    if unknown:
        raise SchemaError(f"record {name!r}: unknown columns {sorted(unknown)}")

    pd = None if _blank(row.get("pd")) else str(row["pd"]).strip()
    braid = None if _blank(row.get("braid")) else str(row["braid"]).strip()
    if bool(pd) == bool(braid):
        raise SchemaError(f"record {name!r}: give exactly one of 'pd' and 'braid'")

    split = _as_int(row.get("split_components"), "split_components", name)
    record = KnotRecord(
        name=name,
        pd=pd,
        braid=braid,
        alternating=_as_bool(row.get("alternating"), "alternating", name),
        positive_diagram=_as_bool(row.get("positive_diagram"), "positive_diagram", name),
        homogeneous=_as_bool(row.get("homogeneous"), "homogeneous", name),
        chi=_as_int(row.get("chi"), "chi", name),
        chi4=_as_int(row.get("chi4"), "chi4", name),
        sigma=_as_int(row.get("sigma"), "sigma", name),
        homfly_ref=None if _blank(row.get("homfly_ref")) else str(row["homfly_ref"]).strip(),
        split_components=split if split is not None else 1,
        source=str(row.get("source") or "").strip(),
    )
    if record.split_components < 1:
        raise SchemaError(f"record {name!r}: split_components must be >= 1")

    try:
        record.diagram()
        record.reference_polynomial()
    except HomflyBoundsError as e:
        raise SchemaError(f"record {name!r}: {e}") from None
    return record


def validate_record(record: KnotRecord) -> None:
    """Declared flags and data against the computed classification."""
    d = record.diagram()
    computed = {
        "alternating": is_alternating(d),
        "positive_diagram": is_positive_diagram(d),
        "homogeneous": analyze(build_seifert_graph(d)).is_homogeneous,
    }
    for flag, actual in computed.items():
        declared = getattr(record, flag)
        if declared is not None and declared != actual:
            raise CorpusInconsistency(
                f"record {record.name!r}: declared {flag}={declared} but the diagram gives {actual}"
            )
    if record.chi is not None and record.chi4 is not None and record.chi4 < record.chi:
        raise CorpusInconsistency(
            f"record {record.name!r}: chi4={record.chi4} is smaller than chi={record.chi}"
        )


def _read_rows(path: Path) -> list[dict]:
    suffix = path.suffix.lower()
    if suffix == ".csv":
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(
                (line for line in fh if line.strip() and not line.lstrip().startswith("#"))
            )
            if reader.fieldnames is None or "name" not in reader.fieldnames:
                raise SchemaError(f"{path}: CSV header must include 'name'")
            return [{k: v for k, v in row.items() if k is not None} for row in reader]
    if suffix == ".json":
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path}: invalid JSON: {e}") from None
        if isinstance(data, dict):
            data = data.get("records")
        if not isinstance(data, list) or not all(isinstance(r, dict) for r in data):
            raise SchemaError(f"{path}: JSON corpus must be a list of record objects")
        return data
    raise SchemaError(f"{path}: unsupported corpus format {suffix!r} (use .csv or .json)")


def load_corpus(path: str | Path, validate: bool = True) -> list[KnotRecord]:
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"corpus file {path} does not exist")
    records = [parse_record(row) for row in _read_rows(path)]

    seen: set[str] = set()
    for record in records:
        if record.name in seen:
            raise SchemaError(f"duplicate record name {record.name!r}")
        seen.add(record.name)
        if validate:
            validate_record(record)

    logger.info(f"Loaded {len(records)} corpus records from {path}")
    return records
