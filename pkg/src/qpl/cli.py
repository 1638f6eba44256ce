"""Command-line experiments: `qpl <subcommand> [options]`.

Subcommands
    wigner               Wigner map of a selected state on Z_N
    gauss-trace          DFT traces against the odd-N closed form
    weak                 weak-measurement run from a key=value config file
    az                   modular lattice state on coprime Z_Na x Z_Nb
    nslit                periodic phase mask acting on the flat momentum state
    structure-constants  commutator expansion check for one label pair (odd N)
    coherent-gram        coherent-family overlaps against their closed form

Every command takes --format {json,csv}, --out FILE and --seed INT.  JSON
output is canonical (sorted keys, 12 significant digits, complex numbers
as {im, re} objects) so identical inputs produce byte-identical bytes;
CSV output is RFC 4180 with a header row.  The QPL_SEED environment
variable, when set, overrides both the --seed flag and any seed found in
a config file.

Exit codes: 0 success, 2 usage or validation error, 3 resource bound
violation, 4 domain degeneracy (e.g. orthogonal pre/post selections).
"""

from __future__ import annotations

import argparse
import os
import sys
from math import gcd
from pathlib import Path

import numpy as np

from .coherent import CoherentFamily, coherent_overlap_closed, coherent_state, overlap_magnitude
from .fock import FockSpace
from .linalg import basis_ket, random_density, random_ket
from .modular import az_state, momentum_amplitudes, nslit_evolve
from .schwinger import Kinematics, gauss_trace, gauss_trace_closed_form
from .serialize import canonical_json, csv_text
from .weak import (
    WeakConfig,
    annihilator_shift,
    annihilator_shift_prediction,
    measured_shift,
    predicted_shift,
    selection_probability,
    shift_residual,
    weak_value,
)
from .weylwigner import StructureConstants, WeylWignerBasis, wigner_map

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOUNDS = 3
EXIT_DEGENERATE = 4

MAX_REGISTER_DIM = 64  # single cyclic register (wigner, az, nslit, gauss-trace)
MAX_SYSTEM_DIM = 64
MAX_POINTER_DIM = 256
MAX_STRUCTURE_DIM = 15  # the phase-point array holds N⁴ entries; keep it modest
MAX_GRAM_DIM = 16

SUPPORT_TOL = 1e-12
MATCH_TOL = 1e-9


class UsageError(Exception):
    """Bad selector, malformed config, or invalid argument combination."""


class BoundsError(Exception):
    """Parameter outside the documented resource bounds."""


class DegeneracyError(Exception):
    """Mathematically degenerate configuration (zero overlap, zero probability)."""


# --------------------------------------------------------------------------
# shared parsing helpers


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"{what} must be an integer, got {text!r}") from exc


def _parse_float(text: str, what: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise UsageError(f"{what} must be a number, got {text!r}") from exc
    if not np.isfinite(value):
        raise UsageError(f"{what} must be finite, got {text!r}")
    return value


def _parse_complex(text: str, what: str) -> complex:
    try:
        value = complex(text.strip().replace(" ", ""))
    except ValueError as exc:
        raise UsageError(f"{what} must be a complex number like 0.5+0.5j, got {text!r}") from exc
    if not np.isfinite(value.real) or not np.isfinite(value.imag):
        raise UsageError(f"{what} must be finite, got {text!r}")
    return value


def _parse_bool(text: str, what: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise UsageError(f"{what} must be true or false, got {text!r}")


def resolve_seed(flag_seed, config_seed=None) -> int:
    """Seed precedence: QPL_SEED env var, then --seed, then config, then 0."""
    env = os.environ.get("QPL_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"QPL_SEED must be an integer, got {env!r}") from exc
    if flag_seed is not None:
        return int(flag_seed)
    if config_seed is not None:
        return int(config_seed)
    return 0


def parse_ket_selector(spec: str, dim: int, rng: np.random.Generator) -> np.ndarray:
    """u<k> | v<k> | coherent:m,n | amps:c0,c1,... | random"""
    if len(spec) >= 2 and spec[0] in "uv" and spec[1:].isdigit():
        k = int(spec[1:])
        if k >= dim:
            raise UsageError(f"selector {spec!r} is out of range for dimension {dim}")
        if spec[0] == "u":
            return basis_ket(dim, k)
        return Kinematics(dim).momentum_state(k)
    if spec.startswith("coherent:"):
        parts = spec[len("coherent:") :].split(",")
        if len(parts) != 2:
            raise UsageError(f"coherent selector needs two labels like coherent:1,2, got {spec!r}")
        m = _parse_int(parts[0], "coherent label m")
        nn = _parse_int(parts[1], "coherent label n")
        return coherent_state(dim, m, nn)
    if spec.startswith("amps:"):
        tokens = spec[len("amps:") :].split(",")
        if len(tokens) != dim:
            raise UsageError(f"amps selector needs {dim} entries, got {len(tokens)}")
        vec = np.array([_parse_complex(t, "amplitude") for t in tokens])
        norm = np.linalg.norm(vec)
        if norm <= 1e-12:
            raise UsageError("amps selector has zero norm")
        return vec / norm
    if spec == "random":
        return random_ket(dim, rng)
    raise UsageError(f"unknown state selector {spec!r}")


def parse_density_selector(spec: str, dim: int, rng: np.random.Generator) -> np.ndarray:
    if spec == "mixed":
        return np.eye(dim, dtype=complex) / dim
    if spec == "random":
        return random_density(dim, rng)
    ket = parse_ket_selector(spec, dim, rng)
    return np.outer(ket, ket.conj())


_PAULI = {
    "sx": np.array([[0, 1], [1, 0]], dtype=complex),
    "sy": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "sz": np.array([[1, 0], [0, -1]], dtype=complex),
}


def parse_obs_selector(spec: str, dim: int) -> np.ndarray:
    """diag:a,b,... | number | sx | sy | sz"""
    if spec.startswith("diag:"):
        tokens = spec[len("diag:") :].split(",")
        if len(tokens) != dim:
            raise UsageError(f"diag observable needs {dim} entries, got {len(tokens)}")
        return np.diag(np.array([_parse_float(t, "diagonal entry") for t in tokens], dtype=complex))
    if spec == "number":
        return np.diag(np.arange(dim).astype(complex))
    if spec in _PAULI:
        if dim != 2:
            raise UsageError(f"observable {spec!r} requires system_dim = 2, got {dim}")
        return _PAULI[spec].copy()
    raise UsageError(f"unknown observable selector {spec!r}")


def _parse_pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{what} must be two integers like 1,0, got {text!r}")
    return _parse_int(parts[0], what), _parse_int(parts[1], what)


# --------------------------------------------------------------------------
# command runners: each returns (json payload, csv header, csv rows)


def run_wigner(args):
    n = args.n
    if n < 1 or n > MAX_REGISTER_DIM:
        raise BoundsError(f"wigner dimension must lie in 1..{MAX_REGISTER_DIM}, got {n}")
    seed = resolve_seed(args.seed)
    rng = np.random.default_rng(seed)
    rho = parse_density_selector(args.state, n, rng)
    wm = wigner_map(rho)
    values = wm.values
    marg_momentum = values.sum(axis=1)
    marg_position = values.sum(axis=0)
    payload = {
        "dim": n,
        "marginal_momentum": marg_momentum,
        "marginal_position": marg_position,
        "min_value": wm.min_value,
        "negativity": wm.negativity,
        "seed": seed,
        "state": args.state,
        "total": wm.total,
        "values": values,
    }
    rows = [("value", m, nn, values[m, nn]) for m in range(n) for nn in range(n)]
    rows += [("marginal_momentum", m, "", marg_momentum[m]) for m in range(n)]
    rows += [("marginal_position", "", nn, marg_position[nn]) for nn in range(n)]
    rows += [
        ("total", "", "", wm.total),
        ("negativity", "", "", wm.negativity),
        ("min_value", "", "", wm.min_value),
    ]
    return payload, ["quantity", "m", "n", "value"], rows


def run_gauss_trace(args):
    nmin, nmax = args.nmin, args.nmax
    if nmin < 1 or nmin > nmax:
        raise UsageError(f"need 1 <= NMIN <= NMAX, got {nmin}..{nmax}")
    if nmax > MAX_REGISTER_DIM:
        raise BoundsError(f"NMAX must be <= {MAX_REGISTER_DIM}, got {nmax}")
    entries = []
    rows = []
    for n in range(nmin, nmax + 1):
        trace = gauss_trace(n)
        closed = gauss_trace_closed_form(n)
        match = bool(abs(trace - closed) <= MATCH_TOL)
        entries.append({"closed_form": closed, "match": match, "n": n, "trace": trace})
        rows.append((n, trace.real, trace.imag, closed.real, closed.imag, match))
    payload = {"entries": entries, "nmax": nmax, "nmin": nmin}
    return payload, ["n", "trace_re", "trace_im", "closed_re", "closed_im", "match"], rows


_WEAK_REQUIRED = ("system_dim", "pre", "post", "obs", "eps")
_WEAK_OPTIONAL = ("pointer", "pointer_dim", "pointer_gen", "halving", "seed")


def _read_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise UsageError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        if key in entries:
            raise UsageError(f"{path}:{lineno}: duplicate key {key!r}")
        if key not in _WEAK_REQUIRED and key not in _WEAK_OPTIONAL:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        entries[key] = value
    missing = [key for key in _WEAK_REQUIRED if key not in entries]
    if missing:
        raise UsageError(f"{path}: missing required keys: {', '.join(missing)}")
    return entries


def run_weak(args):
    conf = _read_config(args.config)
    system_dim = _parse_int(conf["system_dim"], "system_dim")
    if system_dim < 2 or system_dim > MAX_SYSTEM_DIM:
        raise BoundsError(f"system_dim must lie in 2..{MAX_SYSTEM_DIM}, got {system_dim}")
    pointer_dim = _parse_int(conf.get("pointer_dim", "64"), "pointer_dim")
    if pointer_dim < 2 or pointer_dim > MAX_POINTER_DIM:
        raise BoundsError(f"pointer_dim must lie in 2..{MAX_POINTER_DIM}, got {pointer_dim}")
    eps = _parse_float(conf["eps"], "eps")
    if eps < 0:
        raise UsageError(f"eps must be nonnegative, got {eps}")
    halving = _parse_bool(conf.get("halving", "true"), "halving")
    config_seed = _parse_int(conf["seed"], "seed") if "seed" in conf else None
    seed = resolve_seed(args.seed, config_seed)
    rng = np.random.default_rng(seed)

    space = FockSpace(pointer_dim)
    pointer_spec = conf.get("pointer", "vacuum")
    coherent_z = None
    if pointer_spec == "vacuum":
        pointer = space.vacuum()
    elif pointer_spec.startswith("coherent:"):
        coherent_z = _parse_complex(pointer_spec[len("coherent:") :], "pointer displacement")
        try:
            pointer = space.coherent(coherent_z)
        except ValueError as exc:
            raise BoundsError(str(exc)) from exc
    else:
        raise UsageError(f"unknown pointer selector {pointer_spec!r}")

    gen_key = conf.get("pointer_gen", "p")
    generators = {
        "q": space.q,
        "p": space.p,
        "n": space.num,
        "h0": space.h0,
        "g": space.g,
        "k": space.k,
    }
    if gen_key not in generators:
        raise UsageError(f"pointer_gen must be one of {sorted(generators)}, got {gen_key!r}")

    obs = parse_obs_selector(conf["obs"], system_dim)
    pre = parse_ket_selector(conf["pre"], system_dim, rng)
    post = parse_ket_selector(conf["post"], system_dim, rng)
    try:
        cfg = WeakConfig(
            pre=pre,
            post=post,
            obs=obs,
            pointer_gen=generators[gen_key],
            pointer=pointer,
            eps=eps,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    try:
        ow = weak_value(cfg)
        probability = selection_probability(cfg)
    except ValueError as exc:
        raise DegeneracyError(str(exc)) from exc

    spectral_radius = float(np.max(np.abs(np.linalg.eigvalsh(obs))))
    amplified = bool(abs(ow) > spectral_radius + 1e-12)

    shifts = {}
    for name, observable in (("q", space.q), ("p", space.p)):
        measured = measured_shift(cfg, observable)
        predicted = predicted_shift(cfg, observable)
        shifts[name] = {
            "measured": measured,
            "predicted": predicted,
            "residual": abs(measured - predicted),
        }

    halving_block = None
    if halving:
        half = cfg.with_eps(eps / 2)
        halving_block = {}
        for name, observable in (("q", space.q), ("p", space.p)):
            full_resid = shifts[name]["residual"]
            half_resid = shift_residual(half, observable)
            ratio = None if full_resid < 1e-14 else half_resid / full_resid
            halving_block[name] = {"half_residual": half_resid, "ratio": ratio}

    annihilator = None
    if coherent_z is not None and gen_key == "n":
        measured_a = annihilator_shift(cfg, space.a)
        predicted_a = annihilator_shift_prediction(cfg, coherent_z)
        annihilator = {
            "measured": measured_a,
            "predicted": predicted_a,
            "residual": abs(measured_a - predicted_a),
        }

    payload = {
        "amplified": amplified,
        "annihilator": annihilator,
        "eps": eps,
        "halving": halving_block,
        "obs": conf["obs"],
        "pointer": pointer_spec,
        "pointer_dim": pointer_dim,
        "pointer_gen": gen_key,
        "post": conf["post"],
        "pre": conf["pre"],
        "probability": probability,
        "seed": seed,
        "shifts": shifts,
        "spectral_radius": spectral_radius,
        "system_dim": system_dim,
        "weak_value": ow,
    }
    rows = [
        ("weak_value", ow.real, ow.imag),
        ("probability", probability, 0.0),
        ("spectral_radius", spectral_radius, 0.0),
        ("amplified", 1.0 if amplified else 0.0, 0.0),
        ("eps", eps, 0.0),
    ]
    for name in ("q", "p"):
        rows += [
            (f"{name}_measured", shifts[name]["measured"], 0.0),
            (f"{name}_predicted", shifts[name]["predicted"], 0.0),
            (f"{name}_residual", shifts[name]["residual"], 0.0),
        ]
        if halving_block is not None:
            ratio = halving_block[name]["ratio"]
            rows.append((f"{name}_half_residual", halving_block[name]["half_residual"], 0.0))
            rows.append((f"{name}_halving_ratio", "" if ratio is None else ratio, 0.0))
    if annihilator is not None:
        rows += [
            ("a_measured", annihilator["measured"].real, annihilator["measured"].imag),
            ("a_predicted", annihilator["predicted"].real, annihilator["predicted"].imag),
            ("a_residual", annihilator["residual"], 0.0),
        ]
    return payload, ["quantity", "re", "im"], rows


def run_az(args):
    na, nb, j, sigma = args.na, args.nb, args.j, args.sigma
    if na < 1 or nb < 1:
        raise UsageError(f"factor dimensions must be positive, got {na} x {nb}")
    if gcd(na, nb) != 1:
        raise UsageError(f"factor dimensions {na} and {nb} share a factor; they must be coprime")
    if na * nb > MAX_REGISTER_DIM:
        raise BoundsError(f"product dimension must be <= {MAX_REGISTER_DIM}, got {na * nb}")
    state = az_state(na, nb, j, sigma)
    cell_shift = [2 * np.pi * a / na for a in range(na)]
    cell_clock = [2 * np.pi * b / nb for b in range(nb)]
    payload = {
        "cell_grid": {
            "clock_phases": cell_clock,
            "selected": [state.j, state.sigma],
            "shift_phases": cell_shift,
        },
        "clock_phase": state.clock_phase,
        "j": state.j,
        "na": na,
        "nb": nb,
        "shift_phase": state.shift_phase,
        "sigma": state.sigma,
        "tensor": state.tensor,
        "vector": state.vector,
    }
    rows = [("amplitude", k, state.vector[k].real, state.vector[k].imag) for k in range(na * nb)]
    rows += [
        ("tensor_amplitude", k, state.tensor[k].real, state.tensor[k].imag)
        for k in range(na * nb)
    ]
    rows += [
        ("shift_phase", "", state.shift_phase, 0.0),
        ("clock_phase", "", state.clock_phase, 0.0),
    ]
    rows += [("cell_shift_phase", a, cell_shift[a], 0.0) for a in range(na)]
    rows += [("cell_clock_phase", b, cell_clock[b], 0.0) for b in range(nb)]
    return payload, ["quantity", "index", "re", "im"], rows


def run_nslit(args):
    n = args.n
    if n < 1 or n > MAX_REGISTER_DIM:
        raise BoundsError(f"register size must lie in 1..{MAX_REGISTER_DIM}, got {n}")
    seed = resolve_seed(args.seed)
    rng = np.random.default_rng(seed)
    if args.potential == "random":
        if args.period is None:
            raise UsageError("--potential random requires --period")
        if args.period < 1:
            raise UsageError(f"period must be positive, got {args.period}")
        samples = rng.uniform(0.0, 2 * np.pi, args.period)
    else:
        samples = np.array(
            [_parse_float(t, "potential sample") for t in args.potential.split(",")]
        )
        if args.period is not None and args.period != samples.size:
            raise UsageError(
                f"--period {args.period} disagrees with {samples.size} potential samples"
            )
    period = samples.size
    if n % period != 0:
        raise UsageError(f"period {period} does not divide register size {n}")
    psi = nslit_evolve(n, samples)
    momentum = momentum_amplitudes(psi)
    stride = n // period
    support = [k for k in range(n) if abs(momentum[k]) > SUPPORT_TOL]
    support_ok = all(k % stride == 0 for k in support)
    payload = {
        "momentum": momentum,
        "n": n,
        "period": period,
        "position": psi,
        "potential": samples,
        "seed": seed,
        "support": support,
        "support_ok": support_ok,
        "support_stride": stride,
    }
    rows = [("potential", k, samples[k], 0.0) for k in range(period)]
    rows += [("position", k, psi[k].real, psi[k].imag) for k in range(n)]
    rows += [("momentum", k, momentum[k].real, momentum[k].imag) for k in range(n)]
    rows += [("support", i, support[i], 0.0) for i in range(len(support))]
    rows += [
        ("support_stride", "", stride, 0.0),
        ("support_ok", "", 1.0 if support_ok else 0.0, 0.0),
    ]
    return payload, ["quantity", "index", "re", "im"], rows


def run_structure_constants(args):
    n = args.n
    if n % 2 == 0 or n < 3 or n > MAX_STRUCTURE_DIM:
        raise BoundsError(
            f"structure constants need an odd dimension in 3..{MAX_STRUCTURE_DIM}, got {n}"
        )
    a = _parse_pair(args.a, "label a")
    b = _parse_pair(args.b, "label b")
    sc = StructureConstants(n)
    basis = WeylWignerBasis(n)
    da = basis.delta(*a)
    db = basis.delta(*b)
    direct = da @ db - db @ da
    reconstructed = sc.commutator(a, b, basis)
    residual = float(np.max(np.abs(direct - reconstructed)))
    lam = np.array([[sc.value(a, b, (r, s)) for s in range(n)] for r in range(n)])
    payload = {
        "a": [a[0] % n, a[1] % n],
        "b": [b[0] % n, b[1] % n],
        "lambda": lam,
        "max_residual": residual,
        "n": n,
        "prefactor": complex(sc.prefactor),
    }
    rows = [("lambda", r, s, lam[r, s]) for r in range(n) for s in range(n)]
    rows += [
        ("a_m", "", "", a[0] % n),
        ("a_n", "", "", a[1] % n),
        ("b_m", "", "", b[0] % n),
        ("b_n", "", "", b[1] % n),
        ("prefactor_re", "", "", sc.prefactor.real),
        ("prefactor_im", "", "", sc.prefactor.imag),
        ("max_residual", "", "", residual),
    ]
    return payload, ["quantity", "cm", "cn", "value"], rows


def run_coherent_gram(args):
    n = args.n
    if n < 1 or n > MAX_GRAM_DIM:
        raise BoundsError(f"coherent-gram dimension must lie in 1..{MAX_GRAM_DIM}, got {n}")
    family = CoherentFamily(n)
    gram = family.gram()
    identity_residual = float(
        np.max(np.abs(family.identity_resolution() - n * np.eye(n)))
    )
    closed = np.empty((n * n, n * n), dtype=complex)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    closed[p * n + q, r * n + s] = coherent_overlap_closed(n, p, q, r, s)
    max_closed_residual = float(np.max(np.abs(gram - closed)))
    predicted_mag = np.array(
        [[overlap_magnitude(n, 0, 0, dp, dq) for dq in range(n)] for dp in range(n)]
    )
    direct_mag = np.abs(gram[0, :].reshape(n, n))
    rt = np.sqrt(n)
    payload = {
        "generic_scale": float(1 / (rt + 1)),
        "identity_residual": identity_residual,
        "magnitude_direct": direct_mag,
        "magnitude_predicted": predicted_mag,
        "max_closed_residual": max_closed_residual,
        "n": n,
        "one_shared_magnitude": float((n + 2 * rt) / (2 * (n + rt))),
    }
    rows = [
        ("predicted_magnitude", dp, dq, predicted_mag[dp, dq])
        for dp in range(n)
        for dq in range(n)
    ]
    rows += [
        ("direct_magnitude", dp, dq, direct_mag[dp, dq]) for dp in range(n) for dq in range(n)
    ]
    rows += [
        ("identity_residual", "", "", identity_residual),
        ("max_closed_residual", "", "", max_closed_residual),
        ("one_shared_magnitude", "", "", payload["one_shared_magnitude"]),
        ("generic_scale", "", "", payload["generic_scale"]),
    ]
    return payload, ["quantity", "dp", "dq", "value"], rows


_RUNNERS = {
    "wigner": run_wigner,
    "gauss-trace": run_gauss_trace,
    "weak": run_weak,
    "az": run_az,
    "nslit": run_nslit,
    "structure-constants": run_structure_constants,
    "coherent-gram": run_coherent_gram,
}


# --------------------------------------------------------------------------
# argument parsing and entry points


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpl",
        description="Finite-dimensional phase-space experiments.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized selectors (QPL_SEED env var takes precedence)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner", parents=[common], help="Wigner map of a selected state")
    p.add_argument("--n", type=int, required=True, help="register dimension N")
    p.add_argument(
        "--state",
        required=True,
        help="u<k> | v<k> | coherent:m,n | amps:c0,c1,... | mixed | random",
    )

    p = sub.add_parser("gauss-trace", parents=[common], help="DFT traces vs the closed form")
    p.add_argument("nmin", type=int)
    p.add_argument("nmax", type=int)

    p = sub.add_parser("weak", parents=[common], help="weak-measurement run from a config file")
    p.add_argument("--config", required=True, metavar="FILE", help="flat key = value config")

    p = sub.add_parser("az", parents=[common], help="modular lattice state on Z_Na x Z_Nb")
    p.add_argument("na", type=int)
    p.add_argument("nb", type=int)
    p.add_argument("j", type=int)
    p.add_argument("sigma", type=int)

    p = sub.add_parser("nslit", parents=[common], help="periodic phase mask on the flat state")
    p.add_argument("--n", type=int, required=True, help="register dimension N")
    p.add_argument("--period", type=int, default=None, help="potential period (divides N)")
    p.add_argument(
        "--potential",
        required=True,
        help="comma-separated real samples of one period, or 'random' (needs --period)",
    )

    p = sub.add_parser(
        "structure-constants", parents=[common], help="commutator expansion check (odd N)"
    )
    p.add_argument("--n", type=int, required=True, help="odd register dimension N")
    p.add_argument("--a", default="1,0", help="first phase-point label m,n")
    p.add_argument("--b", default="0,1", help="second phase-point label m,n")

    p = sub.add_parser(
        "coherent-gram", parents=[common], help="coherent overlaps vs their closed form"
    )
    p.add_argument("--n", type=int, required=True, help="register dimension N")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        payload, header, rows = _RUNNERS[args.command](args)
        text = canonical_json(payload) if args.format == "json" else csv_text(header, rows)
        if args.out:
            Path(args.out).write_text(text, newline="")
        else:
            sys.stdout.write(text)
    except UsageError as exc:
        print(f"qpl: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundsError as exc:
        print(f"qpl: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except DegeneracyError as exc:
        print(f"qpl: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"qpl: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
