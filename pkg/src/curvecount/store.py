"""JSON-lines persistence for census records and ingested trace data."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

SCHEMA_VERSION = 1
KINDS = ("g1", "g2", "g2char2", "quartic")
_KEY_ORDER = ("schema", "kind", "field", "model", "counts", "weight", "invariants")


class SchemaError(ValueError):
    def __init__(self, found, expected=SCHEMA_VERSION):
        super().__init__(f"cache schema version {found!r}, expected {expected}")
        self.found = found
        self.expected = expected


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def str_to_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass(frozen=True)
class CensusCacheRecord:
    kind: str
    field: tuple[int, int, tuple[int, ...]]  # (p, m, defining polynomial)
    model: tuple
    counts: tuple[int, ...]
    weight: Fraction
    invariants: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    def sort_key(self):
        return (self.kind, self.field, self.model)

    def to_json(self) -> str:
        inv = {k: _encode(v) for k, v in sorted(self.invariants.items())}
        obj = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "field": [self.field[0], self.field[1], list(self.field[2])],
            "model": _listify(self.model),
            "counts": list(self.counts),
            "weight": frac_to_str(self.weight),
            "invariants": inv,
        }
        return json.dumps({k: obj[k] for k in _KEY_ORDER}, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "CensusCacheRecord":
        obj = json.loads(line)
        if obj.get("schema") != SCHEMA_VERSION:
            raise SchemaError(obj.get("schema"))
        p, m, poly = obj["field"]
        inv = {k: _decode(v) for k, v in obj["invariants"].items()}
        return cls(obj["kind"], (p, m, tuple(poly)), _tupleify(obj["model"]),
                   tuple(obj["counts"]), str_to_frac(obj["weight"]), inv)


def _encode(v):
    if isinstance(v, Fraction):
        return frac_to_str(v)
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return v


def _decode(v):
    if isinstance(v, str) and "/" in v:
        return str_to_frac(v)
    if isinstance(v, list):
        return tuple(_decode(x) for x in v)
    return v


def _listify(x):
    return [_listify(v) for v in x] if isinstance(x, (list, tuple)) else x


def _tupleify(x):
    return tuple(_tupleify(v) for v in x) if isinstance(x, list) else x


def dumps(records) -> str:
    lines = [r.to_json() for r in sorted(records, key=CensusCacheRecord.sort_key)]
    return "".join(line + "\n" for line in lines)


def loads(text: str) -> list[CensusCacheRecord]:
    return [CensusCacheRecord.from_json(line) for line in text.splitlines() if line.strip()]


def write_records(path, records) -> None:
    Path(path).write_text(dumps(records), encoding="utf-8")


def read_records(path) -> list[CensusCacheRecord]:
    return loads(Path(path).read_text(encoding="utf-8"))


def cache_dir() -> Path:
    root = os.environ.get("MODULI_CACHE_DIR")
    path = Path(root) if root else Path.home() / ".cache" / "curvecount"
    path.mkdir(parents=True, exist_ok=True)
    return path


# -- record builders -------------------------------------------------------------

def _field_tuple(q: int):
    from .fields import GF

    F = GF(q)
    return (F.p, F.m, tuple(F.modulus))


def elliptic_records(q: int) -> list[CensusCacheRecord]:
    from .census_g1 import enumerate_elliptic

    out = []
    for r in enumerate_elliptic(q):
        out.append(CensusCacheRecord("g1", _field_tuple(q), r.model, (r.n1,), r.mass,
                                     {"j": r.j_invariant, "aut": r.aut_order}))
    return out


def genus2_records(q: int) -> list[CensusCacheRecord]:
    """Weil-key masses for odd q; one record per (h, f) coset representative for even q."""
    from .census_g2 import enumerate_g2, enumerate_g2_char2, gl2_order
    from .fields import GF

    F = GF(q)
    if F.p == 2:
        census = enumerate_g2_char2(q)
        order = gl2_order(q) * q ** 4
        return [CensusCacheRecord("g2char2", _field_tuple(q), (h, f), (n1, n2), Fraction(w, order),
                                  {"h_roots": pat})
                for h, f, pat, w, n1, n2 in census.rows]
    table = enumerate_g2(q)
    out = []
    for (a1, a2), mass in table.masses:
        s2 = a1 * a1 - 2 * a2
        out.append(CensusCacheRecord("g2", _field_tuple(q), (a1, a2),
                                     (q + 1 - a1, q * q + 1 - s2), mass))
    return out


# -- sigma_{a,b,c} ingestion ---------------------------------------------------

def parse_sigma_abc(text: str) -> dict[tuple[int, int, int, int], int]:
    """Lines "p a b c value"; blank lines and lines starting with '#' are skipped."""
    out = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"line {n}: expected 'p a b c value', got {line!r}")
        p, a, b, c, v = (int(x) for x in parts)
        if not a >= b >= c >= 0:
            raise ValueError(f"line {n}: need a >= b >= c >= 0")
        key = (p, a, b, c)
        if key in out and out[key] != v:
            raise ValueError(f"line {n}: conflicting value for {key}")
        out[key] = v
    return out


def load_sigma_abc(path) -> dict[tuple[int, int, int, int], int]:
    return parse_sigma_abc(Path(path).read_text(encoding="utf-8"))


def bundled_sigma_abc() -> dict[tuple[int, int, int, int], int]:
    from importlib.resources import files

    return parse_sigma_abc(files("curvecount").joinpath("data/sigma_abc.txt").read_text())
