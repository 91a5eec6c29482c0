"""Run configuration: per-prime sweep profiles and key=value config files."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from pathlib import Path

from hopf_ainf.algebra.field import as_prime
from hopf_ainf.polytope.faces import MAX_N


@dataclass(frozen=True)
class SweepProfile:
    """Default sweep bound for one prime."""

    description: str
    max_j: int

    def to_dict(self) -> dict:
        return {"description": self.description, "max_j": self.max_j}


SWEEP_PROFILES: dict[int, SweepProfile] = {
    3: SweepProfile("p=3, carries past p² = 9", max_j=12),
    5: SweepProfile("p=5, one carry past p = 5", max_j=10),
    7: SweepProfile("p=7, one carry past p = 7", max_j=8),
}

FALLBACK_MAX_J = 8


def get_profile(p: int) -> SweepProfile:
    """Look up the sweep profile for a prime.

    Raises ValueError if there is no profile for p.
    """
    profile = SWEEP_PROFILES.get(p)
    if profile is None:
        available = ", ".join(str(k) for k in sorted(SWEEP_PROFILES))
        raise ValueError(f"No sweep profile for p={p}. Available: {available}")
    return profile


def default_max_j(p: int) -> int:
    try:
        return get_profile(p).max_j
    except ValueError:
        return FALLBACK_MAX_J


def list_profiles() -> dict[int, dict]:
    return {p: prof.to_dict() for p, prof in SWEEP_PROFILES.items()}


FORMATS = ("json", "text")
POLYTOPES = ("perm", "assoc")


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs; validated on construction."""

    command: str
    p: int = 3
    m: int = 1
    max_j: int | None = None
    n: int = 3
    polytope: str = "perm"
    fmt: str = "json"
    seed: int = 0
    workers: int | None = None
    trials: int = 1000
    count: int = 1
    certify: bool = False

    def __post_init__(self) -> None:
        as_prime(self.p)
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.max_j is not None and self.max_j < 1:
            raise ValueError(f"max-j must be >= 1, got {self.max_j}")
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {self.n}")
        if self.polytope not in POLYTOPES:
            raise ValueError(
                f"Unknown polytope '{self.polytope}'. Available: {', '.join(POLYTOPES)}"
            )
        if self.fmt not in FORMATS:
            raise ValueError(f"Unknown format '{self.fmt}'. Available: {', '.join(FORMATS)}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")

    @property
    def effective_max_j(self) -> int:
        return self.max_j if self.max_j is not None else default_max_j(self.p)

    def to_dict(self) -> dict:
        return asdict(self)


# config-file key -> RunConfig field
CONFIG_KEYS: dict[str, str] = {
    "p": "p",
    "m": "m",
    "max-j": "max_j",
    "n": "n",
    "format": "fmt",
    "seed": "seed",
    "workers": "workers",
    "trials": "trials",
    "count": "count",
}

_STRING_FIELDS = {"fmt"}


def parse_config_text(text: str, source: str = "<config>") -> dict[str, object]:
    """Parse key=value lines into RunConfig field values.

    Blank lines and ``#`` comments are skipped.
    """
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{source}:{lineno}: expected key=value, got '{line}'")
        key, value = (s.strip() for s in line.split("=", 1))
        field_name = CONFIG_KEYS.get(key)
        if field_name is None:
            raise ValueError(
                f"{source}:{lineno}: unknown key '{key}'. "
                f"Available: {', '.join(sorted(CONFIG_KEYS))}"
            )
        if field_name in _STRING_FIELDS:
            values[field_name] = value
        else:
            try:
                values[field_name] = int(value)
            except ValueError:
                raise ValueError(
                    f"{source}:{lineno}: '{key}' must be an integer, got '{value}'"
                ) from None
    return values


def load_config_file(path: str | Path) -> dict[str, object]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ValueError(f"cannot read config file {path}: {e.strerror}") from None
    return parse_config_text(text, str(path))
