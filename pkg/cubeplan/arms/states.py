"""
States of the robotic arms, written as the set of links pointing north.

Link i of an arm of length n points north exactly when slot i of the
equivalent particle board is occupied.
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, Tuple, Type, TypeVar

from ..config.constants import HORIZONTAL, VERTICAL
from ..core.exceptions import StateError
from ..reconfig import RState

S = TypeVar('S', bound='ArmState')


@dataclass(frozen=True)
class ArmState:
    """An arm position: length ``n`` and the sorted positions of its north links."""

    n: int
    verticals: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise StateError(f"arm length must be at least 1, got {self.n}")
        if list(self.verticals) != sorted(set(self.verticals)):
            raise StateError(f"verticals {list(self.verticals)} must be strictly increasing")
        if any(a < 1 or a > self.n for a in self.verticals):
            raise StateError(f"verticals {list(self.verticals)} must lie in 1..{self.n}")

    @classmethod
    def of(cls: Type[S], n: int, verticals: Iterable[int]) -> S:
        return cls(n, tuple(sorted(set(int(a) for a in verticals))))

    @classmethod
    def parse(cls: Type[S], text: str, n: int) -> S:
        """
        Parse the command-line form.

        Digit strings (``"3568"``) are used when n <= 9, comma-separated
        lists (``"3,5,10"``) otherwise; an empty string is the horizontal arm.
        """
        text = (text or "").strip()
        if not text:
            return cls.of(n, ())
        try:
            if "," in text or n > 9:
                values = [int(part) for part in text.split(",") if part.strip()]
            else:
                values = [int(ch) for ch in text]
        except ValueError:
            raise StateError(f"cannot parse state '{text}'") from None
        if len(values) != len(set(values)):
            raise StateError(f"state '{text}' repeats a link")
        return cls.of(n, values)

    def format(self) -> str:
        if self.n <= 9:
            return "".join(str(a) for a in self.verticals)
        return ",".join(str(a) for a in self.verticals)

    def word(self) -> Tuple[int, ...]:
        """Padded word (a_1, ..., a_k, n+1, ..., n+1) of length n."""
        return self.verticals + (self.n + 1,) * (self.n - len(self.verticals))

    def links(self) -> str:
        """Link directions from the base, e.g. ``ENNE``."""
        chosen = set(self.verticals)
        return "".join(VERTICAL if i in chosen else HORIZONTAL for i in range(1, self.n + 1))

    def to_rstate(self) -> RState:
        chosen = set(self.verticals)
        return RState.from_mapping({str(i): VERTICAL if i in chosen else HORIZONTAL
                                    for i in range(1, self.n + 1)})

    @classmethod
    def from_rstate(cls: Type[S], state: RState, n: int) -> S:
        labels = state.as_dict
        try:
            return cls.of(n, (i for i in range(1, n + 1) if labels[str(i)] == VERTICAL))
        except KeyError as e:
            raise StateError(f"state {state.encode()} has no label for link {e}") from None

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "verticals": list(self.verticals)}

    @classmethod
    def from_dict(cls: Type[S], data: Dict[str, Any]) -> S:
        try:
            return cls.of(int(data["n"]), data["verticals"])
        except (KeyError, TypeError, ValueError) as e:
            raise StateError(f"malformed state {data!r}: {e}") from None


class QuadrantState(ArmState):
    """A position of the arm in the positive quadrant: any subset of links."""

    @classmethod
    def all(cls, n: int) -> Iterator['QuadrantState']:
        for mask in range(1 << n):
            yield cls.of(n, (i + 1 for i in range(n) if mask >> i & 1))


class StripState(ArmState):
    """A position of the arm in a strip of width 1: no two consecutive north links."""

    def __post_init__(self):
        super().__post_init__()
        for a, b in zip(self.verticals, self.verticals[1:]):
            if b == a + 1:
                raise StateError(f"verticals {list(self.verticals)} are not spread out ({a}, {b})")

    @classmethod
    def all(cls, n: int) -> Iterator['StripState']:
        def _build(start: int, chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
            yield chosen
            for a in range(start, n + 1):
                yield from _build(a + 2, chosen + (a,))

        for chosen in _build(1, ()):
            yield cls(n, chosen)
