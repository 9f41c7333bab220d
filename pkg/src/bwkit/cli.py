"""Command-line front end: parse ideals or complexes from JSON, dispatch the
library computations, and emit deterministic JSON (default) or text.

Exit codes: 0 on success, 2 on input or domain errors, 3 on certification
failure of a generic initial ideal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .filtration import (
    NotSCM,
    bw_from_complex,
    bw_polynomial,
    local_cohomology_scm,
    scm_check,
)
from .groebner import NotCertified, gin
from .monomial import (
    MonomialIdeal,
    betti_eliahou_kervaire,
    dimension_filtration,
    hilbert_numerator,
    is_strongly_stable,
)
from .ring import Monomial, Polynomial, RingSpec, parse_polynomial
from .simplicial import (
    SimplicialComplex,
    alexander_dual,
    complex_of_ideal,
    graded_betti_hochster,
    h_triangle,
    local_cohomology_hochster,
    symmetric_shift,
)

_LAYER_NOTE = (
    "layer coefficients are computed from the dimension filtration and "
    "cross-validated against independent standard-monomial counts; where "
    "third-party printed tables disagree, these derived values are "
    "authoritative"
)

_INT_LIMIT = 1 << 53  # JSON consumers lose exactness past double precision


class InputError(ValueError):
    """Bad input file, flag combination, or out-of-domain request."""


def _json_safe(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _INT_LIMIT else obj
    if isinstance(obj, list):
        return [_json_safe(x) for x in obj]
    if isinstance(obj, tuple):
        return [_json_safe(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    return obj


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_input(path: str):
    """Returns ("ideal", MonomialIdeal), ("polys", ring, [Polynomial]), or
    ("complex", SimplicialComplex), keyed off the JSON shape."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    if "facets" in data:
        try:
            return ("complex", SimplicialComplex.from_json(data))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad complex: {exc}") from exc
    if "gens" in data:
        try:
            n = int(data["vars"])
            ring = RingSpec(n)
            monos: list[Monomial] = []
            polys: list[Polynomial] = []
            monomial_only = True
            for g in data["gens"]:
                if isinstance(g, str):
                    p = parse_polynomial(ring, g)
                    polys.append(p)
                    terms = p.terms()
                    if len(terms) != 1 or terms[0][1] != 1:
                        monomial_only = False
                    else:
                        monos.append(terms[0][0])
                else:
                    m = Monomial(tuple(int(e) for e in g))
                    if len(m.exponents) != n:
                        raise InputError(f"generator {g} has wrong length")
                    monos.append(m)
                    polys.append(Polynomial.from_monomial(ring, m))
            if monomial_only:
                return ("ideal", MonomialIdeal(ring, monos))
            return ("polys", ring, polys)
        except InputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad ideal: {exc}") from exc
    raise InputError('input needs either "facets" (complex) or "vars"/"gens" (ideal)')


def _require_monomial(loaded, verb: str) -> MonomialIdeal:
    if loaded[0] == "ideal":
        return loaded[1]
    if loaded[0] == "polys":
        raise InputError(f"{verb} wants a monomial ideal (or use `gin` first)")
    raise InputError(f"{verb} wants an ideal, got a complex")


def _parse_field(spec: str) -> int | None:
    if spec == "q":
        return None
    if spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError as exc:
            raise InputError(f"bad field {spec!r}") from exc
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise InputError(f"{p} is not prime")
        return p
    raise InputError(f'field must be "q" or "p:<prime>", got {spec!r}')


# -- verb handlers: each returns (json payload, text rendering) -----------------


def _cmd_bw(loaded, args):
    if loaded[0] == "complex":
        p = bw_from_complex(loaded[1])
        via = False
    elif args.via_gin:
        source = loaded[1] if loaded[0] == "ideal" else loaded[2]
        result = gin(source, seed=args.seed)
        p = bw_polynomial(result.ideal, route="borel" if not result.ideal.is_zero else "decomposition")
        via = True
    else:
        p = bw_polynomial(_require_monomial(loaded, "bw"))
        via = False
    payload = {"bw": p.to_json(), "via_gin": via, "erratum_note": _LAYER_NOTE}
    text = str(p) + ("    [via gin]" if via else "")
    return payload, text


def _cmd_hilbert(loaded, args):
    ideal = _require_monomial(loaded, "hilbert")
    hs = hilbert_numerator(ideal)
    can = hs.canonical()
    payload = {"raw": hs.to_json(), "canonical": can.to_json()}
    return payload, str(can)


def _cmd_h_triangle(loaded, args):
    if loaded[0] != "complex":
        raise InputError("h-triangle wants a complex")
    ht = h_triangle(loaded[1])
    return ht.to_json(), str(ht)


def _cmd_gin(loaded, args):
    source = loaded[1] if loaded[0] in ("ideal",) else None
    if loaded[0] == "polys":
        source = loaded[2]
    if source is None:
        raise InputError("gin wants an ideal")
    result = gin(source, seed=args.seed)
    text = f"{result.ideal}    seed={result.seed} trials={result.trials} certified={result.borel_certified}"
    return result.to_json(), text


def _cmd_filtration(loaded, args):
    ideal = _require_monomial(loaded, "filtration")
    if ideal.is_unit:
        raise InputError("filtration wants a proper ideal")
    chain = dimension_filtration(ideal)
    text = "\n".join(f"I<{i}> = {q}" for i, q in enumerate(chain.ideals))
    return chain.to_json(), text


def _cmd_scm(loaded, args):
    ideal = _require_monomial(loaded, "scm")
    if ideal.is_unit:
        raise InputError("scm wants a proper ideal")
    report = scm_check(ideal, seed=args.seed)
    lines = [f"scm: {str(report.scm).lower()}"]
    if report.witness is not None:
        i, a, b = report.witness
        lines.append(f"witness row {i}: {a} vs {b}")
    for c in report.criteria:
        state = "ok" if c.holds else f"fails at i={c.witness_index}: {c.detail}"
        lines.append(f"criterion {c.name}: {state}")
    return report.to_json(), "\n".join(lines)


def _cmd_local_cohomology(loaded, args):
    if loaded[0] == "complex":
        table = local_cohomology_hochster(loaded[1], _parse_field(args.field))
        route = "hochster"
    else:
        ideal = _require_monomial(loaded, "local-cohomology")
        if ideal.is_unit:
            raise InputError("local-cohomology wants a proper ideal")
        try:
            table = local_cohomology_scm(ideal, seed=args.seed)
        except NotSCM as exc:
            raise InputError(str(exc)) from exc
        route = "filtration"
    return {**table.to_json(), "route": route}, str(table)


def _cmd_alexander_dual(loaded, args):
    if loaded[0] != "complex":
        raise InputError("alexander-dual wants a complex")
    try:
        dual = alexander_dual(loaded[1])
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return dual.to_json(), str(dual)


def _cmd_shift(loaded, args):
    if loaded[0] != "complex":
        raise InputError("shift wants a complex")
    shifted = symmetric_shift(loaded[1], seed=args.seed)
    return shifted.to_json(), str(shifted)


def _cmd_betti(loaded, args):
    if loaded[0] == "complex":
        table = graded_betti_hochster(loaded[1], _parse_field(args.field))
        route = "hochster"
    else:
        ideal = _require_monomial(loaded, "betti")
        if is_strongly_stable(ideal):
            table = betti_eliahou_kervaire(ideal)
            route = "eliahou-kervaire"
        elif ideal.is_squarefree():
            table = graded_betti_hochster(complex_of_ideal(ideal), _parse_field(args.field))
            route = "hochster"
        else:
            raise InputError("betti wants a strongly stable ideal, a squarefree ideal, or a complex")
    return {**table.to_json(), "route": route}, str(table)


_HANDLERS = {
    "bw": _cmd_bw,
    "hilbert": _cmd_hilbert,
    "h-triangle": _cmd_h_triangle,
    "gin": _cmd_gin,
    "filtration": _cmd_filtration,
    "scm": _cmd_scm,
    "local-cohomology": _cmd_local_cohomology,
    "alexander-dual": _cmd_alexander_dual,
    "shift": _cmd_shift,
    "betti": _cmd_betti,
}

_HELP = {
    "bw": "layer polynomial of an ideal or complex (--via-gin for general ideals)",
    "hilbert": "Hilbert series of a monomial-ideal quotient",
    "h-triangle": "degree-refined h-numbers of a complex",
    "gin": "certified reverse-lexicographic generic initial ideal",
    "filtration": "dimension filtration chain of a monomial ideal",
    "scm": "sequential Cohen-Macaulayness report",
    "local-cohomology": "local cohomology Hilbert series (layer or face route)",
    "alexander-dual": "Alexander dual of a complex",
    "shift": "symmetric algebraic shift of a complex",
    "betti": "graded Betti table (stable ideal or complex)",
}


def _default_seed() -> int:
    try:
        return int(os.environ.get("BWKIT_SEED", "0"))
    except ValueError:
        return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwkit",
        description="Exact layer polynomials, gins, and Cohen-Macaulay certificates.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, handler in _HANDLERS.items():
        p = sub.add_parser(verb, help=_HELP[verb])
        p.add_argument("--input", required=True, help='JSON input path, or "-" for stdin')
        p.add_argument("--seed", type=int, default=_default_seed(), help="randomness seed (default: BWKIT_SEED or 0)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--field", default="q", help='homology coefficients: "q" or "p:<prime>"')
        if verb == "bw":
            p.add_argument("--via-gin", action="store_true", dest="via_gin",
                           help="report the layer polynomial of the generic initial ideal")
        p.set_defaults(handler=handler)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        loaded = _load_input(args.input)
        payload, text = args.handler(loaded, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotCertified as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(_json_safe(payload), indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
