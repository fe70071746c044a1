"""Command-line surface: enumerate, product-co, obstruction, promislow.

Exit codes: 0 success, 1 mathematical check failed, 2 invalid input,
3 resource bound exceeded.  All numeric output is exact.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import AxiomError, BoundExceeded, InvalidGroupError
from .groups import cyclic_group, direct_product, load_group
from .orders import (ENUMERATION_ORDER_LIMIT, arrangement_to_inhom,
                     enumerate_circular_orders)
from .cohomology import H2_ORDER_LIMIT, class_of, h2_structure, is_n_divisible
from .extensions import minimal_generator
from .obstruction import (VERDICT_ALL_MULTIPLES, exponent_facts,
                          spectrum_finite, spectrum_torsion_part)
from . import promislow as prom


class MathCheckFailed(Exception):
    """An internal cross-check disagreed; the computation is not trustworthy."""


def _spectrum_payload(spectrum, max_n: int) -> dict:
    return {
        "minimal_elements": list(spectrum.minimal),
        "is_all": spectrum.is_all,
        "is_empty": spectrum.is_empty,
        "description": spectrum.describe(),
        "membership": {str(n): spectrum.membership(n) for n in range(2, max_n + 1)},
    }


def cmd_enumerate(args) -> tuple[dict, str]:
    G = load_group(args.group)
    arrangements = enumerate_circular_orders(G, max_order=args.max_order)
    with_classes = G.order <= H2_ORDER_LIMIT
    orderings = []
    for arr in arrangements:
        f = arrangement_to_inhom(arr)
        entry = {"arrangement": list(arr.sequence)}
        if G.order > 1:
            entry["minimal_generator"] = minimal_generator(G, f)
        if with_classes:
            entry["class"] = list(class_of(G, f).coords)
        orderings.append(entry)
    payload = {"group": G.name, "order": G.order,
               "count": len(arrangements), "orderings": orderings}
    if with_classes:
        payload["h2_invariant_factors"] = list(h2_structure(G).invariant_factors)
    summary = f"{G.name}: {len(arrangements)} circular ordering(s)"
    return payload, summary


def cmd_product_co(args) -> tuple[dict, str]:
    G = load_group(args.group)
    n = args.n
    if n < 2:
        raise InvalidGroupError(f"--n must be >= 2, got {n}")
    arrangements = enumerate_circular_orders(G, max_order=args.max_order)
    witness = None
    for arr in arrangements:
        f = arrangement_to_inhom(arr)
        result = is_n_divisible(G, f, n)
        if result.divisible:
            witness = {"ordering": [list(r) for r in f.values], "mu": result.mu}
            break
    verdict = witness is not None
    cross = "skipped"
    if n * G.order <= ENUMERATION_ORDER_LIMIT:
        product = direct_product(G, cyclic_group(n)).group
        direct = bool(enumerate_circular_orders(product))
        if direct != verdict:
            raise MathCheckFailed(
                f"divisibility verdict {verdict} but direct search found "
                f"{'an ordering' if direct else 'none'} on the product")
        cross = "agrees"
    payload = {"group": G.name, "n": n, "circularly_orderable": verdict,
               "witness": witness, "cross_check": cross}
    summary = (f"{G.name} x Z/{n}: "
               f"{'circularly orderable' if verdict else 'NOT circularly orderable'}"
               f" (direct search {cross})")
    return payload, summary


def cmd_obstruction(args) -> tuple[dict, str]:
    max_n = args.max_n
    if args.group:
        G = load_group(args.group)
        spectrum = spectrum_finite(G)
        payload = {"mode": "group", "group": G.name,
                   **_spectrum_payload(spectrum, max_n)}
        return payload, f"Ob({G.name}) = {spectrum.describe()}"
    if args.torsion_orders:
        orders = [int(tok) for tok in args.torsion_orders.replace(",", " ").split()]
        spectrum = spectrum_torsion_part(orders)
        payload = {"mode": "torsion", "orders": orders,
                   **_spectrum_payload(spectrum, max_n)}
        return payload, f"Ob_T = {spectrum.describe()}"
    if args.exponent is not None:
        e = args.exponent
        lo = not args.not_lo
        verdicts = {str(n): exponent_facts(e, n, lo) for n in range(2, max_n + 1)}
        summary = (f"Ob = {e}N" if exponent_facts(e, e, lo) == VERDICT_ALL_MULTIPLES
                   else "verdicts per n (exponent facts only)")
        payload = {"mode": "exponent", "exponent": e, "left_orderable": lo,
                   "verdicts": verdicts, "summary": summary}
        return payload, summary
    raise InvalidGroupError("obstruction: need --group, --torsion-orders, or --exponent")


def cmd_promislow(args) -> tuple[dict, str]:
    report = prom.demo(seed=args.seed, radius=args.radius, samples=args.samples)
    if not report["ok"]:
        raise MathCheckFailed("promislow self-checks failed; see the JSON report")
    summary = (f"promislow: relators ok, cone ok, "
               f"{report['axioms_exhaustive_ball2']['checked']} exhaustive + "
               f"{report['axioms_sampled']['checked']} sampled axiom checks ok "
               f"(seed {report['seed']})")
    return report, summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circorder",
        description="circular orderings, central extensions, exact H^2, obstruction spectra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all circular orderings of a finite group")
    p.add_argument("--group", required=True, help="group JSON file")
    p.add_argument("--max-order", type=int, default=ENUMERATION_ORDER_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("product-co",
                       help="decide circular orderability of G x Z/n with witness")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-order", type=int, default=ENUMERATION_ORDER_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product_co)

    p = sub.add_parser("obstruction", help="obstruction spectrum report")
    p.add_argument("--group")
    p.add_argument("--torsion-orders", help="comma or space separated torsion orders")
    p.add_argument("--exponent", type=int, help="exponent of H^2(G;Z)")
    p.add_argument("--not-lo", action="store_true",
                   help="assert the group is not left-orderable")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("promislow", help="run the Promislow group self-check demo")
    p.add_argument("--seed", type=int, default=prom.DEFAULT_SEED)
    p.add_argument("--radius", type=int, default=5)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_promislow)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, summary = args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidGroupError, AxiomError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MathCheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(summary)
    return 0


if __name__ == "__main__":
    sys.exit(main())
