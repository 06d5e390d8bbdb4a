"""Command-line front end: parameter sweeps and a species comparison report.

Sweep output is CSV or JSON-lines with a fixed float format (17 significant
digits, lowercase scientific), so identical configurations produce
byte-identical files.  Every grid point yields a record; points that fail
their preconditions become error rows with a reason field instead of being
dropped.  Exit codes: 0 clean, 1 usage error, 2 any computation error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import entanglement, rindler, wigner
from .fock import schmidt_coefficients
from .frame import SIGN_CONVENTION
from .rindler import UnruhParams

FLOAT_FORMAT = ".16e"
FORMATS = ("csv", "json-lines")

OCCUPATION_COLUMNS = ["omega", "occupation_closed", "occupation_matrix", "gap",
                      "phase_variant", "reason"]
OCCUPATION_TYPES = {"omega": float, "occupation_closed": float,
                    "occupation_matrix": float, "gap": float,
                    "phase_variant": str, "reason": str}

ENTANGLEMENT_COLUMNS = ["delta", "mass", "deta", "negativity_exact",
                        "negativity_closed", "negativity_gap",
                        "mutual_info_exact", "mutual_info_closed",
                        "mutual_info_gap", "entropy_alice", "entropy_rob",
                        "entropy_joint", "pre_map_norm", "unitarity_defect",
                        "closed_form_flags", "reason"]
ENTANGLEMENT_TYPES = {name: float for name in ENTANGLEMENT_COLUMNS}
ENTANGLEMENT_TYPES.update({"closed_form_flags": str, "reason": str})

WIGNER_COLUMNS = ["mass", "delta", "deta",
                  "d00", "d01", "d10", "d11", "d_defect",
                  "oracle00", "oracle01", "oracle10", "oracle11",
                  "oracle_defect", "gap_max", "steps",
                  "acc00", "acc01", "acc10", "acc11",
                  "conv_1_10", "conv_10_100", "frame_convention", "reason"]
WIGNER_TYPES = {name: float for name in WIGNER_COLUMNS}
WIGNER_TYPES.update({"steps": int, "frame_convention": str, "reason": str})

FRAME_CONVENTION_TAG = "delta_omega_01=+deta"


class UsageError(Exception):
    """Bad flags, bad grids, bad config: the caller's problem, exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- formatting

def format_float(value) -> str:
    return format(float(value), FLOAT_FORMAT)


def _csv_cell(value) -> str:
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    text = str(value)
    if "," in text or "\n" in text:
        raise ValueError(f"string field {text!r} would break the CSV contract")
    return text


def emit_csv(columns, records) -> str:
    lines = [",".join(columns)]
    for record in records:
        lines.append(",".join(_csv_cell(record[c]) for c in columns))
    return "\n".join(lines) + "\n"


def emit_json_lines(columns, records) -> str:
    lines = []
    for record in records:
        parts = []
        for c in columns:
            value = record[c]
            if isinstance(value, (float, np.floating)):
                cell = format_float(value) if math.isfinite(value) else "null"
            elif isinstance(value, (int, np.integer)):
                cell = str(int(value))
            else:
                cell = json.dumps(str(value))
            parts.append(f'"{c}": {cell}')
        lines.append("{" + ", ".join(parts) + "}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str, types) -> tuple[list[str], list[dict]]:
    """Inverse of emit_csv given the column-type map; exact for finite floats."""
    lines = [line for line in text.splitlines() if line]
    header = lines[0].split(",")
    records = []
    for line in lines[1:]:
        record = {}
        for name, cell in zip(header, line.split(",")):
            kind = types.get(name, str)
            record[name] = cell if kind is str else kind(cell)
        records.append(record)
    return header, records


def _reason(exc: Exception) -> str:
    return str(exc).replace(",", ";").replace("\n", " ")


# ------------------------------------------------------------------- parsing

def parse_grid(text) -> list[float]:
    """A bare number, or start:stop:step inclusive of both ends."""
    if isinstance(text, (int, float)):
        return [float(text)]
    text = str(text).strip()
    try:
        if ":" not in text:
            return [float(text)]
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("expected start:stop:step")
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None
    if step <= 0:
        raise UsageError(f"grid step must be > 0, got {step}")
    if start > stop:
        raise UsageError(f"grid start {start} exceeds stop {stop}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def load_config(path: str) -> dict[str, str]:
    """key = value lines; '#' starts a comment; keys match flag names."""
    out = {}
    try:
        with open(path) as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for raw in raw_lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {raw.strip()!r} is not 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _resolve(args, config: dict, name: str, default, convert):
    """Flag wins over config wins over default."""
    value = getattr(args, name, None)
    if value is None:
        value = config.get(name, default)
    try:
        return convert(value)
    except UsageError:
        raise
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid value for {name}: {value!r} ({exc})") from None


def _check_config_keys(config: dict, allowed) -> None:
    unknown = sorted(set(config) - set(allowed))
    if unknown:
        raise UsageError(f"unknown config keys {unknown}; allowed: {sorted(allowed)}")


# ------------------------------------------------------------------ runners

def run_occupation(omega_grid) -> tuple[list[dict], bool]:
    records, had_errors = [], False
    for omega in omega_grid:
        record = {"omega": float(omega), "occupation_closed": math.nan,
                  "occupation_matrix": math.nan, "gap": math.nan,
                  "phase_variant": "", "reason": ""}
        try:
            params = UnruhParams.from_omega(omega)
            occ = rindler.occupation_I(params)
            vac = rindler.fermion_unruh_vacuum(params)
            record.update(occupation_closed=occ.closed_form,
                          occupation_matrix=occ.matrix_expectation,
                          gap=occ.gap, phase_variant=vac.phase_variant)
        except Exception as exc:
            record["reason"] = _reason(exc)
            had_errors = True
        records.append(record)
    return records, had_errors


def run_entanglement(delta: float, mass: float, deta_grid) -> tuple[list[dict], bool]:
    if not delta > 0:
        raise UsageError(f"delta must be > 0 (spin map singular at rest), got {delta}")
    if not mass > 0:
        raise UsageError(f"mass must be > 0, got {mass}")
    p = wigner.kinematics(mass, delta)
    bell = entanglement.spin_bell_state()
    records, had_errors = [], False
    for deta in deta_grid:
        record = {"delta": delta, "mass": mass, "deta": float(deta),
                  "closed_form_flags": "", "reason": ""}
        for name in ENTANGLEMENT_COLUMNS:
            record.setdefault(name, math.nan)
        try:
            spin_map = wigner.wigner_matrix(p, deta)
            mapped = entanglement.apply_wigner_to_rob(bell, spin_map, renormalize=True)
            neg = entanglement.negativity(mapped, p=p, deta=deta)
            mutual = entanglement.mutual_information(mapped, p=p, deta=deta)
            record.update(
                negativity_exact=neg.exact, negativity_closed=neg.closed_form,
                negativity_gap=neg.abs_gap, mutual_info_exact=mutual.exact,
                mutual_info_closed=mutual.closed_form, mutual_info_gap=mutual.gap,
                entropy_alice=mutual.entropy_alice, entropy_rob=mutual.entropy_rob,
                entropy_joint=mutual.entropy_joint,
                pre_map_norm=mapped.pre_map_norm,
                unitarity_defect=spin_map.unitarity_defect,
                closed_form_flags=";".join(mutual.flags))
        except Exception as exc:
            record["reason"] = _reason(exc)
            had_errors = True
        records.append(record)
    return records, had_errors


def run_wigner(mass: float, delta: float, deta_grid, steps: int) -> tuple[list[dict], bool]:
    if not delta > 0:
        raise UsageError(
            f"delta must be > 0 for the closed-form spin map, got {delta}; "
            f"only the boost-composition oracle supports the rest frame")
    if not mass > 0:
        raise UsageError(f"mass must be > 0, got {mass}")
    if steps < 1:
        raise UsageError(f"steps must be >= 1, got {steps}")
    p = wigner.kinematics(mass, delta)
    records, had_errors = [], False
    for deta in deta_grid:
        record = {"mass": mass, "delta": delta, "deta": float(deta),
                  "steps": steps, "frame_convention": FRAME_CONVENTION_TAG,
                  "reason": ""}
        for name in WIGNER_COLUMNS:
            record.setdefault(name, math.nan)
        try:
            spin_map = wigner.wigner_matrix(p, deta)
            oracle = wigner.little_group_oracle(p, deta)
            acc = wigner.accumulate(p, deta, steps)
            refinements = [wigner.accumulate(p, deta, n).matrix for n in (1, 10, 100)]
            d = spin_map.matrix.real
            o = oracle.matrix.matrix.real
            a = acc.matrix.real
            record.update(
                d00=d[0, 0], d01=d[0, 1], d10=d[1, 0], d11=d[1, 1],
                d_defect=spin_map.unitarity_defect,
                oracle00=o[0, 0], oracle01=o[0, 1], oracle10=o[1, 0],
                oracle11=o[1, 1], oracle_defect=oracle.matrix.unitarity_defect,
                gap_max=float(np.max(np.abs(spin_map.matrix - oracle.matrix.matrix))),
                acc00=a[0, 0], acc01=a[0, 1], acc10=a[1, 0], acc11=a[1, 1],
                conv_1_10=float(np.max(np.abs(refinements[0] - refinements[1]))),
                conv_10_100=float(np.max(np.abs(refinements[1] - refinements[2]))))
        except Exception as exc:
            record["reason"] = _reason(exc)
            had_errors = True
        records.append(record)
    return records, had_errors


def run_compare(n_max: int, omega: float, r_grid, deta_grid) -> tuple[str, dict]:
    """Side-by-side scalar/fermion comparison: text table plus a JSON document."""
    params = UnruhParams.from_omega(omega)
    fermion_vacuum = rindler.fermion_unruh_vacuum(params)
    fermion_excited = rindler.fermion_excited(params)
    vac_coeffs = schmidt_coefficients(fermion_vacuum.state, [0])
    exc_coeffs = schmidt_coefficients(fermion_excited.state, [0])

    scalar_rows = []
    for r in r_grid:
        report = entanglement.scalar_entanglement_report(r, n_max)
        scalar_rows.append({
            "r": float(r),
            "mutual_info": report.mutual_info.exact,
            "negativity": report.negativity.exact,
            "vacuum_deficit": report.vacuum_deficit,
            "excited_deficit": report.excited_deficit,
            "value_residual": report.value_residual,
            "warnings": "; ".join(report.warnings),
        })

    p = wigner.kinematics(1.0, 1.0)
    fermion_rows = []
    for deta in deta_grid:
        closed = entanglement.closed_form_mutual_information(p, deta)
        fermion_rows.append({
            "deta": float(deta),
            "negativity_closed": entanglement.closed_form_negativity(p, deta),
            "mutual_info_closed": closed.value,
            "flags": ";".join(closed.flags),
        })

    bell_info = entanglement.mutual_information(entanglement.spin_bell_state())
    r_rep = min(r_grid, key=lambda r: abs(r - 1.0))
    rep_vac = rindler.scalar_unruh_vacuum(UnruhParams.from_squeezing(r_rep), n_max)
    rep_exc = rindler.scalar_excited(UnruhParams.from_squeezing(r_rep), n_max, 1)
    scalar_vac_rank = int(np.sum(schmidt_coefficients(rep_vac.state, [0]) > 1e-12))
    scalar_exc_rank = int(np.sum(schmidt_coefficients(rep_exc.state, [0]) > 1e-12))
    fermion_exc_rank = int(np.sum(exc_coeffs > 1e-12))

    doc = {
        "scalar": {
            "vacuum_schmidt_rank": scalar_vac_rank,
            "excited_schmidt_rank": scalar_exc_rank,
            "representative_r": float(r_rep),
            "sweep": scalar_rows,
            "mutual_info_zero_acceleration": scalar_rows[0]["mutual_info"] if scalar_rows else None,
            "mutual_info_trend_limit": 1.0,
            "loss_mechanism": "Hawking radiation (pair correlations with the hidden wedge)",
        },
        "fermion": {
            "omega": float(omega),
            "vacuum_schmidt_coefficients": [float(c) for c in vac_coeffs],
            "excited_schmidt_rank": fermion_exc_rank,
            "excited_largest_coefficient": float(exc_coeffs[0]),
            "mutual_info_zero_step": bell_info.exact,
            "closed_form_sweep": fermion_rows,
            "mutual_info_trend_limit": 0.0,
            "loss_mechanism": "Wigner rotation of the accelerated spin",
        },
        "provenance": {
            "n_max": int(n_max),
            "phase_variant": fermion_vacuum.phase_variant,
            "frame_convention": SIGN_CONVENTION,
            "squeezing_relation": "tanh(r) = exp(-2*pi*omega); fermion pair weight exp(-pi*omega)",
            "fermion_closed_form_delta": 1.0,
        },
    }

    lines = []
    lines.append("scalar vs fermion entanglement under uniform acceleration")
    lines.append("=" * 58)
    lines.append("")
    lines.append("vacuum structure")
    lines.append(f"  scalar  : Schmidt rank {scalar_vac_rank} at r = {r_rep:.3f} (entangled)")
    lines.append(f"  fermion : Schmidt coefficients "
                 f"({vac_coeffs[0]:.6f}, {vac_coeffs[1]:.6f}) at omega = {omega:.3f} "
                 f"(entangled)")
    lines.append("")
    lines.append("one-quantum excited state")
    lines.append(f"  scalar  : Schmidt rank {scalar_exc_rank} (still entangled)")
    lines.append(f"  fermion : Schmidt rank {fermion_exc_rank}, largest coefficient "
                 f"{exc_coeffs[0]:.12f} (product state)")
    lines.append("")
    lines.append("mutual information")
    if scalar_rows:
        first, last = scalar_rows[0], scalar_rows[-1]
        lines.append(f"  scalar  : {first['mutual_info']:.6f} at r = {first['r']:.3f}"
                     f"  ->  {last['mutual_info']:.6f} at r = {last['r']:.3f}"
                     f"  (limit 1; truncation deficit {last['excited_deficit']:.3e})")
    lines.append(f"  fermion : {bell_info.exact:.6f} at deta = 0"
                 f"  ->  {fermion_rows[-1]['mutual_info_closed']:.6f} at deta = "
                 f"{fermion_rows[-1]['deta']:.3f}  (limit 0; closed form at delta = 1)")
    lines.append("")
    lines.append("entanglement loss mechanism")
    lines.append(f"  scalar  : {doc['scalar']['loss_mechanism']}")
    lines.append(f"  fermion : {doc['fermion']['loss_mechanism']}")
    lines.append("")
    lines.append("scalar sweep (n_max = %d)" % n_max)
    lines.append("  %10s %14s %14s %14s %14s" % (
        "r", "mutual_info", "negativity", "vac_deficit", "residual"))
    for row in scalar_rows:
        lines.append("  %10.4f %14.9f %14.9f %14.3e %14.3e" % (
            row["r"], row["mutual_info"], row["negativity"],
            row["vacuum_deficit"], row["value_residual"]))
    lines.append("")
    lines.append("fermion closed-form sweep (delta = 1)")
    lines.append("  %10s %16s %16s  %s" % ("deta", "negativity", "mutual_info", "flags"))
    for row in fermion_rows:
        lines.append("  %10.4f %16.9e %16.9e  %s" % (
            row["deta"], row["negativity_closed"], row["mutual_info_closed"],
            row["flags"]))
    lines.append("")
    lines.append("conventions: " + doc["provenance"]["squeezing_relation"])
    lines.append("             " + SIGN_CONVENTION)
    lines.append(f"             fermion pair phase variant: {fermion_vacuum.phase_variant}")
    return "\n".join(lines) + "\n", doc


# --------------------------------------------------------------------- main

def build_parser() -> _Parser:
    parser = _Parser(prog="unruhspin",
                     description="acceleration-induced entanglement toolkit")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--format", choices=FORMATS, default=None,
                       help="output format (default csv)")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--config", default=None,
                       help="key = value file; explicit flags win")

    p_occ = sub.add_parser("occupation", help="thermal wedge-I occupation sweep")
    p_occ.add_argument("--omega", default=None, help="grid start:stop:step or value")
    common(p_occ)

    p_ent = sub.add_parser("entanglement",
                           help="spin-pair negativity and mutual information sweep")
    p_ent.add_argument("--delta", default=None, help="rapidity of Rob's trajectory")
    p_ent.add_argument("--mass", default=None, help="particle mass (default 1)")
    p_ent.add_argument("--deta", default=None, help="grid start:stop:step or value")
    common(p_ent)

    p_wig = sub.add_parser("wigner", help="spin-map vs boost-composition oracle sweep")
    p_wig.add_argument("--mass", default=None)
    p_wig.add_argument("--delta", default=None)
    p_wig.add_argument("--deta", default=None, help="grid start:stop:step or value")
    p_wig.add_argument("--steps", default=None, help="substeps for the accumulated map")
    common(p_wig)

    p_cmp = sub.add_parser("compare", help="scalar vs fermion comparison report")
    p_cmp.add_argument("--n-max", dest="n_max", default=None)
    p_cmp.add_argument("--omega", default=None, help="fermion mode energy for the state rows")
    p_cmp.add_argument("--r", default=None, help="scalar squeezing grid")
    p_cmp.add_argument("--deta", default=None, help="fermion closed-form grid")
    p_cmp.add_argument("--out", default=None, help="write the JSON document here")
    p_cmp.add_argument("--config", default=None)
    return parser


def _write(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_records(args, config, columns, records) -> None:
    fmt = _resolve(args, config, "format", "csv", str)
    if fmt not in FORMATS:
        raise UsageError(f"format must be one of {FORMATS}, got {fmt!r}")
    out = _resolve(args, config, "out", None, lambda v: v)
    text = emit_csv(columns, records) if fmt == "csv" else emit_json_lines(columns, records)
    _write(text, out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "command", None) is None:
            raise UsageError("a subcommand is required (occupation, entanglement, wigner, compare)")
        config = load_config(args.config) if args.config else {}

        if args.command == "occupation":
            _check_config_keys(config, {"omega", "format", "out"})
            grid = _resolve(args, config, "omega", "0:5:0.25", parse_grid)
            records, had_errors = run_occupation(grid)
            _emit_records(args, config, OCCUPATION_COLUMNS, records)
        elif args.command == "entanglement":
            _check_config_keys(config, {"delta", "mass", "deta", "format", "out"})
            delta = _resolve(args, config, "delta", 1.0, float)
            mass = _resolve(args, config, "mass", 1.0, float)
            grid = _resolve(args, config, "deta", "0:2:0.1", parse_grid)
            records, had_errors = run_entanglement(delta, mass, grid)
            _emit_records(args, config, ENTANGLEMENT_COLUMNS, records)
        elif args.command == "wigner":
            _check_config_keys(config, {"mass", "delta", "deta", "steps", "format", "out"})
            mass = _resolve(args, config, "mass", 1.0, float)
            delta = _resolve(args, config, "delta", 1.0, float)
            grid = _resolve(args, config, "deta", "0:0.01:0.001", parse_grid)
            steps = _resolve(args, config, "steps", 100, int)
            records, had_errors = run_wigner(mass, delta, grid, steps)
            _emit_records(args, config, WIGNER_COLUMNS, records)
        elif args.command == "compare":
            _check_config_keys(config, {"n_max", "omega", "r", "deta", "out"})
            n_max = _resolve(args, config, "n_max", 64, int)
            omega = _resolve(args, config, "omega", 1.0, float)
            r_grid = _resolve(args, config, "r", "0:2.5:0.25", parse_grid)
            deta_grid = _resolve(args, config, "deta", "0:20:2", parse_grid)
            text, doc = run_compare(n_max, omega, r_grid, deta_grid)
            sys.stdout.write(text)
            out = _resolve(args, config, "out", None, lambda v: v)
            if out:
                _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", out)
            had_errors = False
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2 if had_errors else 0


if __name__ == "__main__":
    sys.exit(main())
