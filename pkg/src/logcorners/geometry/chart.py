"""Model charts R^m x [0,inf)^n x [0)^k x (S^1)^p."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ChartMismatch, InvalidFace, UnknownCoordinate

KINDS = ("free", "basic", "phantom", "angular")


@dataclass(frozen=True)
class Chart:
    """Coordinate names by kind, plus optional upper bounds on basic coordinates.

    ``bounds`` is a tuple of ``(basic name, MonoidElement constant)`` pairs;
    a bounded basic coordinate ranges over ``[0, bound]``.
    """

    free: tuple = ()
    basic: tuple = ()
    phantom: tuple = ()
    angular: tuple = ()
    bounds: tuple = field(default=(), compare=True)

    def __post_init__(self):
        for kind in KINDS:
            object.__setattr__(self, kind, tuple(getattr(self, kind)))
        names = self.coordinates()
        if len(set(names)) != len(names):
            raise ValueError(f"coordinate names must be distinct: {names}")
        for name in names:
            if name in ("i", "pi", "e") or not name.isidentifier():
                raise ValueError(f"invalid coordinate name {name!r}")
        bounds = self.bounds.items() if isinstance(self.bounds, dict) else self.bounds
        bounds = tuple(sorted(bounds))
        for name, _ in bounds:
            if name not in self.basic:
                raise UnknownCoordinate(f"bound given for non-basic coordinate {name!r}")
        object.__setattr__(self, "bounds", bounds)

    # --------------------------------------------------------------- queries
    def coordinates(self) -> tuple:
        return self.free + self.basic + self.phantom + self.angular

    @property
    def dimension(self) -> tuple:
        return (len(self.free), len(self.basic), len(self.phantom), len(self.angular))

    @property
    def real_dimension(self) -> int:
        """Dimension of the underlying manifold (phantoms do not count)."""
        return len(self.free) + len(self.basic) + len(self.angular)

    def kind(self, name: str) -> str:
        for kind in KINDS:
            if name in getattr(self, kind):
                return kind
        raise UnknownCoordinate(f"{name!r} is not a coordinate of {self}")

    def index(self, name: str) -> int:
        """Position in the canonical basis order (free, basic, phantom, angular)."""
        try:
            return self.coordinates().index(name)
        except ValueError:
            raise UnknownCoordinate(f"{name!r} is not a coordinate of {self}") from None

    def bound(self, name: str):
        return dict(self.bounds).get(name)

    def is_basic(self) -> bool:
        return not self.phantom

    def basic_part(self) -> "Chart":
        """The same chart with the phantom factor removed."""
        return Chart(self.free, self.basic, (), self.angular, self.bounds)

    def require_same(self, other: "Chart"):
        if self != other:
            raise ChartMismatch(f"{self} and {other} differ")

    def fresh_phantom_name(self, basic_name: str) -> str:
        if basic_name.startswith("r"):
            base = "t" + basic_name[1:]
        else:
            base = "t_" + basic_name
        name, n = base, 1
        taken = set(self.coordinates())
        while name in taken:
            n += 1
            name = f"{base}_{n}"
        return name

    def face_chart(self, selected) -> tuple["Chart", dict]:
        """Chart of the face where ``selected`` basic coordinates vanish.

        Returns the chart and the map ``basic name -> new phantom name``.
        """
        selected = tuple(selected)
        if not selected:
            raise InvalidFace("empty face selection")
        if len(set(selected)) != len(selected):
            raise InvalidFace(f"repeated coordinates in face selection {selected}")
        for name in selected:
            if name not in self.basic:
                raise InvalidFace(f"{name!r} is not a basic coordinate of {self}")
        renames = {}
        current = self
        for name in selected:
            new = current.fresh_phantom_name(name)
            renames[name] = new
            current = Chart(current.free, tuple(b for b in current.basic if b != name),
                            current.phantom + (new,), current.angular,
                            tuple((b, v) for b, v in current.bounds if b != name))
        return current, renames

    def __str__(self):
        parts = []
        for kind in KINDS:
            names = getattr(self, kind)
            if names:
                parts.append(f"{kind}={','.join(names)}")
        return "Chart(" + "; ".join(parts) + ")" if parts else "Chart(point)"


POINT = Chart()
