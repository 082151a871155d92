"""Pullback of log functions and forms along weak morphisms."""
from __future__ import annotations

from ..geometry.morphism import WeakMorphism
from ..symcore import Coefficient
from .logform import LogForm
from .logfunction import LogFunction, log_of


class _Puller:
    """Caches the images of coordinates, logs and basis forms for one morphism."""

    def __init__(self, phi: WeakMorphism):
        self.phi = phi
        self.src = phi.source
        self.mapping, self.angular = phi.underlying()
        self._logs: dict = {}
        self._log_pows: dict = {}
        self._basis: dict = {}

    def coefficient(self, c: Coefficient) -> Coefficient:
        return c.substitute(self.mapping, self.angular)

    def log(self, name: str) -> LogFunction:
        if name not in self._logs:
            self._logs[name] = log_of(self.phi.image(name), self.src)
        return self._logs[name]

    def log_power(self, key: tuple) -> LogFunction:
        if key not in self._log_pows:
            out = LogFunction.one(self.src)
            for name, e in key:
                out = out * self.log(name) ** e
            self._log_pows[key] = out
        return self._log_pows[key]

    def basis_one(self, name: str) -> LogForm:
        if name not in self._basis:
            tgt = self.phi.target
            kind = tgt.kind(name)
            if kind in ("basic", "phantom"):
                form = self.log(name).d()
            elif kind == "free":
                form = LogFunction.coefficient(self.src, self.phi.image(name)).d()
            else:
                a = self.phi.image(name)
                if a.source is None:
                    form = LogForm.zero(self.src)
                else:
                    form = LogForm.basis(self.src, a.source) * a.sign
            self._basis[name] = form
        return self._basis[name]

    def basis(self, basis: tuple) -> LogForm:
        if basis not in self._basis:
            out = LogForm.from_function(LogFunction.one(self.src))
            for name in basis:
                out = out.wedge(self.basis_one(name))
            self._basis[basis] = out
        return self._basis[basis]

    def function(self, f: LogFunction) -> LogFunction:
        out = LogFunction.zero(self.src)
        for key, c in f.terms.items():
            term = LogFunction.coefficient(self.src, self.coefficient(c))
            if key:
                term = term * self.log_power(key)
            out = out + term
        return out

    def form(self, w: LogForm) -> LogForm:
        groups: dict = {}
        for (basis, key), c in w.terms.items():
            groups.setdefault(basis, {})[key] = c
        out = LogForm.zero(self.src)
        for basis, terms in groups.items():
            f = self.function(LogFunction(self.phi.target, terms, _check=False))
            if f.is_zero():
                continue
            if basis:
                out = out + self.basis(basis) * f
            else:
                out = out + LogForm.from_function(f)
        return out


def pullback(phi: WeakMorphism, obj):
    """``phi^*`` of a :class:`LogFunction` or :class:`LogForm` on ``phi.target``."""
    phi.target.require_same(obj.chart)
    p = _Puller(phi)
    if isinstance(obj, LogFunction):
        return p.function(obj)
    return p.form(obj)
