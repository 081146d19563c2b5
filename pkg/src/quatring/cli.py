"""Command line: ``quatring verify`` and ``quatring dump``.

Exit status: 0 when every report passes, 1 on a failed verification,
2 on a configuration error (bad parameters, unknown names, I/O).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from math import gcd

from . import complexes, ideals, quotients
from .groupring import GroupParams, ParameterError
from .report import ReportBuilder
from .zlattice import dump_matrix, load_matrix

SUITES = ("prop21", "prop22", "thm32", "thm33", "lemma42", "prop44", "thm45")
DUMP_NAMES = ("d1", "d2", "phi", "exotic-d2", "sigma", "p-basis")
HEADLINE = (7, -3, 4)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    n: int = 7
    a: int = -3
    b: int = 4
    suite: str = "all"
    output_path: str = None
    format: str = "text"

    def suites(self):
        return SUITES if self.suite == "all" else (self.suite,)


def _need_odd(cfg, name):
    if cfg.n % 2 == 0:
        raise ConfigError(f"suite {name} requires odd n (got n={cfg.n})")


def _need_coprime(cfg, name):
    _need_odd(cfg, name)
    if gcd(cfg.a ** 2 + cfg.b ** 2, 2 * cfg.n) != 1:
        raise ConfigError(f"suite {name} requires gcd(a^2+b^2, 2n) = 1 "
                          f"(got a={cfg.a}, b={cfg.b}, n={cfg.n})")


def _need_headline(cfg, name):
    if (cfg.n, cfg.a, cfg.b) != HEADLINE:
        raise ConfigError(f"suite {name} is specific to Q_28 and P = <-3+4y, x+1>: "
                          "requires n=7, a=-3, b=4")


def validate(cfg):
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from all, {', '.join(SUITES)}")
    if cfg.format not in ("text", "json"):
        raise ConfigError(f"unknown format {cfg.format!r}")
    if cfg.n < 2:
        raise ConfigError("n must be at least 2")
    for name in cfg.suites():
        if name in ("prop22", "prop44"):
            _need_coprime(cfg, name)
        elif name == "lemma42":
            _need_odd(cfg, name)
        elif name == "thm32":
            if cfg.n != 7:
                raise ConfigError("suite thm32 requires n=7")
            if gcd(cfg.a ** 2 + cfg.b ** 2, 7) != 1:
                raise ConfigError("suite thm32 requires a+by to be a unit mod 7")
        elif name in ("thm33", "thm45"):
            _need_headline(cfg, name)


def _prop21(cfg):
    params = GroupParams(cfg.n)
    rb = ReportBuilder("prop21-projectivity", "prop21: P = <a+by, x+1> and ZG/P")
    data = ideals.projectivity_criterion(params, cfg.a, cfg.b)
    rb.record("criterion", data)
    I = ideals.left_ideal_lattice(ideals.p_ideal(params, cfg.a, cfg.b))
    rb.require("P is two-sided", ideals.is_two_sided(I))
    if data["k"] != 0:
        rb.require("ZG/P = Z/t + Z/d", data["quotient"] == data["expected_quotient"],
                   quotient=data["quotient"], expected=data["expected_quotient"])
        rb.require("|ZG/P| = |k|", I.lattice.index() == abs(data["k"]),
                   index=I.lattice.index())
    if data["coprime"]:
        rb.require("exponent of ZG/P prime to 4n", data["exponent_coprime_to_4n"])
        rb.record("projective", "hypothesis gcd(k, 2n) = 1 holds; P is projective "
                  "by Swan's criterion (cited)")
    else:
        rb.record("projective", "hypothesis gcd(k, 2n) = 1 fails; projectivity not asserted")
    return [rb.finish()]


def _prop22(cfg):
    params = GroupParams(cfg.n)
    return [quotients.verify_milnor_squares(params),
            quotients.verify_prop22(params, cfg.a, cfg.b)]


def _thm32(cfg):
    params = GroupParams(cfg.n)
    rb = ReportBuilder("thm32-coset-class", "thm32: unit cosets of Z_7[y]/(y^2+1)")
    cert = quotients.nonfreeness_certificate(params, cfg.a, cfg.b)
    rb.record("certificate", cert.to_dict())
    rb.require("unit group has order 48", cert.unit_group_order == 48)
    rb.require("<3, y> has order 12", cert.subgroup_order == 12)
    rb.require("coset group cyclic of order 4 generated by [1+2y]",
               cert.coset_group_cyclic and cert.coset_group_order == 4
               and cert.generator_coset_order == 4)
    if (cfg.a, cfg.b) == (-3, 4):
        rb.require("[-3+4y] = [1+2y]^2, nontrivial", cert.class_of_target == 2)
    return [rb.finish()]


def _thm33(cfg):
    return [complexes.verify_phi_factorization(), complexes.verify_stably_free()]


def _lemma42(cfg):
    return [complexes.verify_sigma_generates(GroupParams(cfg.n))]


def _prop44(cfg):
    return [complexes.verify_prop44(GroupParams(cfg.n), cfg.a, cfg.b)]


def _thm45(cfg):
    rep, _ = complexes.verify_exotic_complex()
    return [rep]


RUNNERS = {"prop21": _prop21, "prop22": _prop22, "thm32": _thm32, "thm33": _thm33,
           "lemma42": _lemma42, "prop44": _prop44, "thm45": _thm45}


def run_suite(cfg):
    """Run the configured suites; returns ``(reports, exit_status)``."""
    validate(cfg)
    reports = []
    for name in cfg.suites():
        reports.extend(RUNNERS[name](cfg))
    status = 0 if all(r.passed for r in reports) else 1
    return reports, status


def render(cfg, reports, fmt):
    if fmt == "json":
        doc = {
            "config": {"n": cfg.n, "a": cfg.a, "b": cfg.b, "suite": cfg.suite},
            "all_passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = []
    for r in reports:
        lines.append(f"{r.summary()}  {r.wall_time_ms} ms")
        for f in r.details.get("failures", []):
            lines.append(f"    failed: {f['check']}")
    notes = []
    for r in reports:
        for key in ("nonfreeness", "certificate"):
            note = r.details.get(key, {}).get("conclusion")
            if note and note not in notes:
                notes.append(note)
    lines.extend("note: " + note for note in notes)
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} reports passed")
    return "\n".join(lines) + "\n"


# matrix dumps

def build_named(name, n=7, a=-3, b=4):
    """``(GRMatrix, integer matrix)`` for one of :data:`DUMP_NAMES`."""
    params = GroupParams(n)
    if name in ("phi", "exotic-d2") and n != 7:
        raise ConfigError(f"{name} exists only for n=7")
    if name == "d1":
        m = complexes.fox_boundaries(params)[1]
    elif name == "d2":
        m = complexes.fox_boundaries(params)[0]
    elif name == "phi":
        m = complexes.phi_matrix()
    elif name == "exotic-d2":
        m = complexes.exotic_boundary2()
    elif name == "sigma":
        m = complexes.sigma(params)
    elif name == "p-basis":
        I = ideals.left_ideal_lattice(ideals.p_ideal(params, a, b))
        m = complexes.GRMatrix([[e] for e in I.elements_basis()])
        return m, I.lattice.rows()
    else:
        raise ConfigError(f"unknown matrix {name!r}; choose from {', '.join(DUMP_NAMES)}")
    return m, complexes.to_integer_matrix(m)


def write_dump(name, path, n=7, a=-3, b=4):
    """Write the integer form to ``path`` and the group-ring form to ``path.json``."""
    m, ints = build_named(name, n, a, b)
    with open(path, "w") as fh:
        dump_matrix(ints, fh)
    with open(path + ".json", "w") as fh:
        json.dump({"name": name, "n": n, "rows": m.shape[0], "cols": m.shape[1],
                   "entries": m.triples()}, fh, indent=1)
        fh.write("\n")
    return m, ints


def read_dump(path):
    """Inverse of :func:`write_dump`: ``(GRMatrix, integer matrix)``."""
    with open(path) as fh:
        ints = load_matrix(fh)
    with open(path + ".json") as fh:
        doc = json.load(fh)
    m = complexes.GRMatrix.from_triples(GroupParams(doc["n"]), doc["entries"])
    return m, ints


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="quatring",
        description="Certify the stably free nonfree ideal over ZQ_28 and the exotic 2-complex.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run certificate suites")
    v.add_argument("--suite", default="all", help="all, " + ", ".join(SUITES))
    v.add_argument("--n", type=int, default=7)
    v.add_argument("--a", type=int, default=-3)
    v.add_argument("--b", type=int, default=4)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None, help="write output here instead of stdout")

    d = sub.add_parser("dump", help="write a matrix in integer and group-ring form")
    d.add_argument("--name", required=True, help=", ".join(DUMP_NAMES))
    d.add_argument("--out", required=True)
    d.add_argument("--n", type=int, default=7)
    d.add_argument("--a", type=int, default=-3)
    d.add_argument("--b", type=int, default=4)

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(args.n, args.a, args.b, args.suite, args.out, args.format)
            reports, status = run_suite(cfg)
            text = render(cfg, reports, cfg.format)
            if cfg.output_path:
                with open(cfg.output_path, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return status
        m, ints = write_dump(args.name, args.out, args.n, args.a, args.b)
        print(f"wrote {args.out} ({len(ints)}x{len(ints[0])}) and {args.out}.json "
              f"({m.shape[0]}x{m.shape[1]} over ZQ_{4 * args.n})")
        return 0
    except (ConfigError, ParameterError, quotients.NotAUnit) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
