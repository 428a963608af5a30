"""Human-readable rendering of manifold records."""

from __future__ import annotations

from typing import List

from ..errors import InconsistentManifoldError
from .invariants import b2_minus, b2_plus, c1_squared, quarter_characteristic
from .record import FourManifold
from .sw import render_sw


def render_text(m: FourManifold) -> str:
    try:
        chi = str(quarter_characteristic(m))
    except InconsistentManifoldError:
        chi = "non-integral"
    lines: List[str] = [
        f"manifold      {m.name}",
        f"e, sign       {m.e}, {m.sign}",
        f"chi, c1^2     {chi}, {c1_squared(m)}",
        f"b1, b2+, b2-  {m.b1}, {b2_plus(m)}, {b2_minus(m)}",
        f"pi_1 = 1      {m.simply_connected}",
        f"parity        {m.parity}",
        f"spin          {m.spin}",
        f"symplectic    {m.symplectic}",
        f"lattice       rank {m.tracked.rank}: {', '.join(m.tracked.basis_names)}",
        f"canonical     {m.tracked.describe(m.canonical) if m.canonical is not None else '-'}",
        f"SW            {render_sw(m.sw)}",
    ]
    if m.surfaces:
        lines.append("surfaces")
        for s in m.surfaces:
            flags = [
                name
                for name, on in (
                    ("essential", s.essential),
                    ("pi1(M-S)=1", s.complement_simply_connected),
                    ("normally generates", s.normally_generates),
                )
                if on
            ]
            extra = f"  [{', '.join(flags)}]" if flags else ""
            lines.append(
                f"  {s.label:<10} genus {s.genus:<3} square {s.self_int:<4} class {m.tracked.describe(s.cls)}{extra}"
            )
    p = m.provenance
    params = ", ".join(f"{k}={v}" for k, v in p.params.items())
    lines.append(f"provenance    {p.kind}({params})")
    for h in p.hypotheses:
        lines.append(f"  hypothesis  {h}")
    if p.surgeries:
        lines.append(f"  surgeries   {p.surgeries}")
    return "\n".join(lines)
