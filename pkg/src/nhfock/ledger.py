"""A record of the q-power normalizing every "isomorphism up to shift" claim.

Each claim family maps parameter tuples to a measured shift exponent. The two
structural families are

* ``induce``: c(n, m) with gdim induce(L_n, L_m) = q^c gdim L_{n+m};
* ``pairing``: d_n with <[P_n], [L_n]> = q^{d_n}.

Every other family is expected to carry a single constant shift. ``problems``
lists every way the recorded data fails to fit together.

>>> led = ShiftLedger()
>>> led.record("induce", (1, 1), -2)
>>> led.get("induce", (1, 1))
-2
"""
from __future__ import annotations

import json
from typing import Hashable, Iterable

STRUCTURAL = ("induce", "pairing")


class ShiftLedger:
    def __init__(self):
        self._data: dict[str, dict[tuple, int | None]] = {}

    def record(self, family: str, params: Iterable[Hashable], shift: int | None) -> None:
        key = tuple(params)
        fam = self._data.setdefault(family, {})
        if key in fam and fam[key] != shift:
            raise ValueError(f"conflicting shifts for {family}{key}: {fam[key]} vs {shift}")
        fam[key] = shift

    def get(self, family: str, params: Iterable[Hashable]) -> int | None:
        return self._data.get(family, {}).get(tuple(params))

    def families(self) -> list[str]:
        return sorted(self._data)

    def entries(self, family: str) -> dict[tuple, int | None]:
        return dict(self._data.get(family, {}))

    def merge(self, other: ShiftLedger) -> None:
        for fam in other.families():
            for key, val in other.entries(fam).items():
                self.record(fam, key, val)

    # ------------------------------------------------------------------
    def problems(self) -> list[str]:
        out = []
        c = self._data.get("induce", {})
        d = self._data.get("pairing", {})
        for (n, m), val in c.items():
            if val is None:
                out.append(f"induce{(n, m)}: not a shift of L_{n + m}")
                continue
            if (m, n) in c and c[(m, n)] != val:
                out.append(f"induce: c{(n, m)}={val} but c{(m, n)}={c[(m, n)]}")
            for (a, l), val2 in c.items():
                if a != n + m or (m, l) not in c or (n, m + l) not in c:
                    continue
                if None in (val2, c[(m, l)], c[(n, m + l)]):
                    continue
                if val + val2 != c[(m, l)] + c[(n, m + l)]:
                    out.append(f"induce: cocycle fails at {(n, m, l)}")
            if (n,) in d and (m,) in d and (n + m,) in d:
                if None in (d[(n,)], d[(m,)], d[(n + m,)]):
                    continue
                if d[(n + m,)] - d[(n,)] - d[(m,)] != -val:
                    out.append(f"pairing/induce: d_{n + m} - d_{n} - d_{m} != -c{(n, m)}")
        for key, val in d.items():
            if val is None:
                out.append(f"pairing{key}: not a monomial")
        for fam, vals in self._data.items():
            if fam in STRUCTURAL:
                continue
            seen = {v for v in vals.values()}
            if None in seen:
                bad = sorted(k for k, v in vals.items() if v is None)
                out.append(f"{fam}: no shift reconciles {bad}")
            if len(seen - {None}) > 1:
                out.append(f"{fam}: shift is not constant ({sorted(seen - {None})})")
        return out

    def consistent(self) -> bool:
        return not self.problems()

    def constant(self, family: str) -> int | None:
        """The single shift of a constant family, or None if absent or inconsistent."""
        vals = set(self._data.get(family, {}).values())
        return vals.pop() if len(vals) == 1 else None

    def snapshot(self) -> dict:
        return {fam: {",".join(map(str, k)): v
                      for k, v in sorted(self._data[fam].items(), key=lambda kv: tuple(map(str, kv[0])))}
                for fam in sorted(self._data)}

    def to_json(self) -> str:
        return json.dumps(self.snapshot(), sort_keys=True, indent=2)
