"""Subcommand registry: declared options and the handler behind each subcommand."""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Callable, Mapping, NamedTuple

from ..config import settings
from ..errors import unknown_name_message
from ..formaldist import (
    RANK_TWO_FAMILIES,
    IdentityId,
    WindowBounds,
    canonical_family,
    locality_order,
    verify_identity,
)
from ..liealg import I, L, AlgebraId, BasisSym, bracket, generators, jacobi_defect
from ..pbwmod import (
    ModuleKind,
    ModuleSpec,
    PBWVector,
    act,
    act_element,
    enumerate_basis,
    monomial_to_text,
)
from ..scalars import scalar_to_json
from ..structure import (
    ConformalName,
    c2_quotient_dim,
    central_charge_report,
    conformal_vector,
    contravariance_defect,
    embed_via_omega_tilde,
    gram_matrix,
    is_positive,
    positivity_scan,
    singular_vector_search,
    tensor_dim_check,
    unitarity_classify,
    virasoro_defect,
    zhu_poly_to_json,
    zhu_reduce,
    zhu_relation_defect,
)
from ..vertexops import TruncatedModule, borcherds_defect, e_product, generator_field, vacuum_spec_for
from .errors import ConfigError
from .expressions import parse_lie_element, parse_vector
from .records import ExitStatus, RunConfig

logger = logging.getLogger(__name__)

OPTION_KINDS = ("param", "int", "text", "flag")


@dataclass(frozen=True)
class Option:
    name: str
    kind: str  # one of OPTION_KINDS
    help: str = ""
    required: bool = False
    choices: tuple[str, ...] | None = None
    minimum: int | None = 0  # lower bound of an int option; None for signed indices

    @property
    def flag_name(self) -> str:
        return "--" + self.name.replace("_", "-")


class Outcome(NamedTuple):
    payload: dict[str, Any]
    status: ExitStatus = ExitStatus.OK


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    options: tuple[Option, ...]
    handler: Callable[[RunConfig], Outcome]

    def option(self, name: str) -> Option:
        for opt in self.options:
            if opt.name == name:
                return opt
        known = [o.name for o in self.options]
        raise ConfigError(unknown_name_message(f"{self.name} option", name, known))


COMMANDS: dict[str, Command] = {}


def command(name: str, help: str, *options: Option):
    """Register the decorated handler under ``name``."""

    def register(handler: Callable[[RunConfig], Outcome]) -> Callable[[RunConfig], Outcome]:
        COMMANDS[name] = Command(name, help, options, handler)
        return handler

    return register


def get_command(name: str) -> Command:
    if name not in COMMANDS:
        raise ConfigError(unknown_name_message("subcommand", name, COMMANDS))
    return COMMANDS[name]


def validate_config(config: RunConfig) -> Command:
    """The command of ``config``, after checking every key against its declared options."""
    cmd = get_command(config.subcommand)
    sections = {"param": config.params, "int": config.overrides}
    for kind, values in sections.items():
        for name in values:
            if cmd.option(name).kind != kind:
                raise ConfigError(f"{config.subcommand}: {name} is not a {kind} option")
    for name, value in config.overrides.items():
        opt = cmd.option(name)
        if opt.minimum is not None and value < opt.minimum:
            raise ConfigError(f"{config.subcommand}: {opt.flag_name} must be >= {opt.minimum}, got {value}")
    for name, value in config.options.items():
        opt = cmd.option(name)
        if opt.kind not in ("text", "flag"):
            raise ConfigError(f"{config.subcommand}: {name} is not a text option")
        if opt.choices and value not in opt.choices:
            raise ConfigError(unknown_name_message(name, str(value), opt.choices))
    present = {*config.params, *config.overrides, *config.options}
    missing = [o.flag_name for o in cmd.options if o.required and o.name not in present]
    if missing:
        raise ConfigError(f"{config.subcommand} requires {', '.join(missing)}")
    return cmd


def config_from_mapping(
    subcommand: str, values: Mapping[str, Any], output: str | None = None
) -> RunConfig:
    """Sort loosely typed inputs into a RunConfig by the options the subcommand declares."""
    cmd = get_command(subcommand)
    params: dict[str, Any] = {}
    overrides: dict[str, int] = {}
    options: dict[str, str | bool] = {}
    for raw_name, value in values.items():
        name = raw_name.replace("-", "_")
        opt = cmd.option(name)
        if value is None:
            continue
        if opt.kind == "param":
            params[name] = value
        elif opt.kind == "int":
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{subcommand}: {name} must be an integer, got {value!r}")
            overrides[name] = value
        elif opt.kind == "flag":
            if value:
                options[name] = True
        else:
            options[name] = str(value)
    try:
        return RunConfig(
            subcommand=subcommand, params=params, overrides=overrides, options=options, output=output
        )
    except ValueError as e:
        raise ConfigError(f"{subcommand}: {e}") from e


# --- shared option groups and helpers ---

_VACUUM_PARAMS = tuple(Option(n, "param", f"{n} as p/q or a Gaussian rational") for n in ("l1", "l2", "l3"))
_WEIGHTS = tuple(Option(n, "param", f"highest weight {n}") for n in ("h1", "h2"))
_L4 = Option("l4", "param", "fourth central charge of the rank-two algebras")
_MODULE_PARAMS = (*_VACUUM_PARAMS, _L4, *_WEIGHTS)
_KINDS = tuple(k.value for k in ModuleKind)
_ALGEBRAS = tuple(a.value for a in AlgebraId)
_OUTER_RE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def _outer(config: RunConfig) -> tuple[int, int] | None:
    text = config.text_option("outer")
    if text is None:
        return None
    match = _OUTER_RE.match(text)
    if not match:
        raise ConfigError(f"--outer expects two integers 'm,r', got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _module_spec(config: RunConfig, kind: ModuleKind | str) -> ModuleSpec:
    kind = kind if isinstance(kind, ModuleKind) else ModuleKind.parse(kind)
    m_bound = config.overrides.get("m_bound")
    if m_bound is None and kind is ModuleKind.VACUUM_FRAK2HAT:
        m_bound = settings.M_BOUND
    params = {n: v for n, v in config.params.items() if n != "c"}
    return ModuleSpec.build(kind, m_bound=m_bound, **params)


def _form_spec(config: RunConfig) -> ModuleSpec:
    """VermaHV1 when a highest weight is given, VacuumHV1 otherwise."""
    verma = "h1" in config.params or "h2" in config.params
    return _module_spec(config, ModuleKind.VERMA_HV1 if verma else ModuleKind.VACUUM_HV1)


def _status(*defect_lists: list) -> ExitStatus:
    return ExitStatus.DEFECT if any(defect_lists) else ExitStatus.OK


# --- liealg ---


@command(
    "bracket",
    "Lie bracket of two elements",
    Option("algebra", "text", "hv1, frak1, hv2 or frak2hat", required=True, choices=_ALGEBRAS),
    Option("a", "text", "left element, e.g. 'L(2)'", required=True),
    Option("b", "text", "right element, e.g. '2*L(-2) - i*I(0)'", required=True),
)
def run_bracket(config: RunConfig) -> Outcome:
    algebra = AlgebraId(config.text_option("algebra"))
    a = parse_lie_element(config.text_option("a"), algebra)
    b = parse_lie_element(config.text_option("b"), algebra)
    value = bracket(a, b)
    return Outcome({"a": str(a), "b": str(b), "bracket": value.to_json(), "text": str(value)})


@command(
    "jacobi",
    "Jacobi identity for one triple or over all generators in a window",
    Option("algebra", "text", "algebra id", required=True, choices=_ALGEBRAS),
    Option("a", "text", "first element"),
    Option("b", "text", "second element"),
    Option("c", "text", "third element"),
    Option("window", "int", "index half-width of the generator sweep"),
    Option("samples", "int", "number of sampled triples for the rank-two algebras", minimum=1),
    Option("seed", "int", "seed for the rank-two sample", minimum=None),
)
def run_jacobi(config: RunConfig) -> Outcome:
    algebra = AlgebraId(config.text_option("algebra"))
    given = [config.text_option(n) for n in ("a", "b", "c")]
    if any(given):
        if not all(given):
            raise ConfigError("jacobi needs all of --a, --b, --c or none of them")
        a, b, c = (parse_lie_element(text, algebra) for text in given)
        value = jacobi_defect(a, b, c)
        defects = [{"a": str(a), "b": str(b), "c": str(c), "value": value.to_json()}] if value else []
        return Outcome({"algebra": algebra.value, "checked": 1, "defects": defects}, _status(defects))

    window = config.int_option("window", settings.DEFAULT_WINDOW)
    gens = generators(algebra, window)
    if algebra in (AlgebraId.HV1, AlgebraId.FRAK1):
        triples = list(combinations_with_replacement(gens, 3))
    else:
        rng = random.Random(config.int_option("seed", 0))
        triples = [tuple(rng.choice(gens) for _ in range(3)) for _ in range(config.int_option("samples", 10_000))]
    defects = []
    for a, b, c in triples:
        value = jacobi_defect(a, b, c)
        if value:
            defects.append({"a": str(a), "b": str(b), "c": str(c), "value": value.to_json()})
    logger.info(f"jacobi {algebra.value}: {len(triples)} triples, {len(defects)} defect(s)")
    payload = {"algebra": algebra.value, "window": window, "checked": len(triples), "defects": defects}
    return Outcome(payload, _status(defects))


# --- formaldist ---


@command(
    "verify",
    "Check a bracket identity between generating functions on a window",
    Option("identity", "text", "family such as 'li', 'te-torus(1,-1)' or 'eq2.8'", required=True),
    Option("outer", "text", "outer indices 'm,r' of a rank-two family"),
    Option("window", "int", "half-width of the [-W, W]^2 coefficient window"),
)
def run_verify(config: RunConfig) -> Outcome:
    name = config.text_option("identity")
    outer = _outer(config)
    window = config.int_option("window", settings.DEFAULT_WINDOW)
    bounds = WindowBounds.square(window)
    family = canonical_family(name)
    if family in RANK_TWO_FAMILIES and outer is None:
        span = range(-settings.RANK_TWO_RANGE, settings.RANK_TWO_RANGE + 1)
        identities = [IdentityId(family, (m, r)) for m in span for r in span]
    else:
        identities = [IdentityId.parse(name, outer)]
    defects = []
    for identity in identities:
        defects.extend({"identity": str(identity), **d.to_json()} for d in verify_identity(identity, bounds))
    payload = {
        "identity": identities[0].family,
        "window": window,
        "checked": [str(i) for i in identities],
        "defects": defects,
    }
    return Outcome(payload, _status(defects))


@command(
    "locality",
    "Order of locality of a pair of generating functions",
    Option("pair", "text", "pair such as 'll' or 'ee-torus(1,2)'", required=True),
    Option("outer", "text", "outer indices 'm,r' of a rank-two pair"),
    Option("window", "int", "half-width of the coefficient window"),
    Option("max_order", "int", "largest order tried"),
)
def run_locality(config: RunConfig) -> Outcome:
    pair = IdentityId.parse(config.text_option("pair"), _outer(config))
    window = config.int_option("window", settings.DEFAULT_WINDOW)
    max_order = config.int_option("max_order", settings.MAX_LOCALITY_ORDER)
    order = locality_order(pair, WindowBounds.square(window), max_order)
    return Outcome({"pair": str(pair), "window": window, "order": order})


# --- pbwmod ---


@command(
    "basis",
    "Canonical PBW basis of one degree",
    Option("module", "text", "module kind", required=True, choices=_KINDS),
    Option("degree", "int", "degree", required=True),
    Option("m_bound", "int", "|m| bound for rank-two modules"),
    *_MODULE_PARAMS,
)
def run_basis(config: RunConfig) -> Outcome:
    spec = _module_spec(config, config.text_option("module"))
    degree = config.int_option("degree", 0)
    basis = enumerate_basis(spec, degree)
    payload = {
        "module": spec.to_json(),
        "degree": degree,
        "dimension": len(basis),
        "basis": [[s.to_json() for s in mono] for mono in basis],
    }
    return Outcome(payload)


@command(
    "act",
    "Action of a Lie element on a module vector",
    Option("module", "text", "module kind", required=True, choices=_KINDS),
    Option("sym", "text", "Lie element, e.g. 'L(1)'", required=True),
    Option("vector", "text", "vector, e.g. 'I(-1)*L(-2)*1 + 3*1'", required=True),
    Option("m_bound", "int", "|m| bound for rank-two modules"),
    *_MODULE_PARAMS,
)
def run_act(config: RunConfig) -> Outcome:
    spec = _module_spec(config, config.text_option("module"))
    x = parse_lie_element(config.text_option("sym"), spec.algebra)
    v = parse_vector(config.text_option("vector"), spec)
    out = act_element(x, v)
    payload = {
        "module": spec.to_json(),
        "input": v.to_json()["terms"],
        "output": out.to_json()["terms"],
        "text": str(out),
    }
    return Outcome(payload)


# --- vertexops ---

# field pair -> (identity family, locality order certified by the locality subcommand)
_EPRODUCT_PAIRS = {
    "Lhat,Lhat": ("ll-hat", 4),
    "Lhat,Ihat": ("li-hat", 3),
    "Ihat,Ihat": ("ii-hat", 2),
    "T,E": ("te-torus", 2),
    "E,E": ("ee-torus", 2),
}


def _rank_two_test_vectors(spec: ModuleSpec, degree: int) -> list[PBWVector]:
    """The generating vector and its images under T(m,-n), E(m,-n) with |m| <= 1, n <= degree."""
    hw = PBWVector.vacuum(spec)
    vectors = [hw]
    for name in ("T", "E"):
        for depth in range(degree + 1):
            for m in (-1, 0, 1):
                if (m, depth) != (0, 0):
                    vectors.append(act(BasisSym(AlgebraId.HV2, name, (m, -depth)), hw))
    return vectors


@command(
    "eproduct",
    "Mode table of the e-product a(x)^e_n b(x)",
    Option("pair", "text", "field pair", required=True, choices=tuple(_EPRODUCT_PAIRS)),
    Option("n", "int", "product index", required=True, minimum=None),
    Option("outer", "text", "outer indices 'm,r' for T,E and E,E"),
    Option("degree", "int", "largest input degree in the table"),
    Option("modes", "int", "modes -M..M in the table"),
    *_MODULE_PARAMS,
)
def run_eproduct(config: RunConfig) -> Outcome:
    pair = config.text_option("pair")
    family, k = _EPRODUCT_PAIRS[pair]
    left, right = pair.split(",")
    n = config.int_option("n", 0)
    degree = config.int_option("degree", 1)
    outer = _outer(config)
    if family in RANK_TWO_FAMILIES:
        if outer is None:
            raise ConfigError(f"pair {pair} needs --outer m,r")
        spec = _module_spec(config, ModuleKind.INDUCED_HV2)
        module = TruncatedModule(spec)
        a = generator_field(f"{left}({outer[0]})", module)
        b = generator_field(f"{right}({outer[1]})", module)
        vectors = _rank_two_test_vectors(spec, degree)
    else:
        if outer is not None:
            raise ConfigError(f"pair {pair} takes no outer indices")
        spec = _module_spec(config, ModuleKind.VERMA_HV1)
        module = TruncatedModule(spec)
        a, b = generator_field(left, module), generator_field(right, module)
        vectors = list(module.vectors(degree))
    modes = config.int_option("modes", 2)
    table = e_product(a, b, n, k).mode_table(range(-modes, modes + 1), vectors)
    payload = {
        "pair": pair,
        "outer": list(outer) if outer else None,
        "n": n,
        "locality_order": k,
        "module": spec.to_json(),
        "table": table,
    }
    return Outcome(payload)


@command(
    "borcherds",
    "Defects of the Borcherds commutator formula for two states",
    Option("u", "text", "state, e.g. 'L(-2)*1'", required=True),
    Option("v", "text", "state, e.g. 'I(-1)*1'", required=True),
    Option("module", "text", "module the states act on", choices=_KINDS),
    Option("window", "int", "modes m, n in [-W, W]"),
    Option("degree", "int", "largest input degree"),
    *_VACUUM_PARAMS,
    *_WEIGHTS,
)
def run_borcherds(config: RunConfig) -> Outcome:
    spec = _module_spec(config, config.text_option("module", ModuleKind.VERMA_HV1.value))
    states = vacuum_spec_for(spec)
    u = parse_vector(config.text_option("u"), states)
    v = parse_vector(config.text_option("v"), states)
    window = config.int_option("window", 3)
    degree = config.int_option("degree", 2)
    defects = borcherds_defect(u, v, TruncatedModule(spec), window, degree)
    payload = {
        "u": str(u),
        "v": str(v),
        "module": spec.to_json(),
        "window": window,
        "degree": degree,
        "defects": defects,
    }
    return Outcome(payload, _status(defects))


# --- structure ---


@command(
    "gram",
    "Gram matrix of the contravariant form in one degree",
    Option("degree", "int", "degree", required=True),
    Option("contravariance", "flag", "also check (x u, v) = (u, sigma(x) v)"),
    *_VACUUM_PARAMS,
    *_WEIGHTS,
)
def run_gram(config: RunConfig) -> Outcome:
    spec = _form_spec(config)
    degree = config.int_option("degree", 0)
    gram = gram_matrix(spec, degree)
    payload = {
        **gram.to_json(),
        "rank": gram.rank(),
        "determinant": scalar_to_json(gram.determinant()),
        "hermitian": gram.is_hermitian(),
    }
    defects: list = []
    if config.flag("contravariance"):
        defects = contravariance_defect(spec, degree)
        payload["contravariance_defects"] = defects
    return Outcome(payload, _status(defects))


@command(
    "positivity",
    "Per-degree positivity of the contravariant form",
    Option("max_degree", "int", "last degree scanned", required=True),
    *_VACUUM_PARAMS,
    *_WEIGHTS,
)
def run_positivity(config: RunConfig) -> Outcome:
    spec = _form_spec(config)
    verdicts = positivity_scan(spec, config.int_option("max_degree", 0))
    payload = {
        "module": spec.to_json(),
        "degrees": [v.to_json() for v in verdicts],
        "positive": is_positive(verdicts),
    }
    return Outcome(payload)


@command(
    "unitary",
    "Unitarity of the vacuum or highest-weight module",
    Option("l1", "param", "l1", required=True),
    Option("l2", "param", "l2", required=True),
    Option("l3", "param", "l3", required=True),
    *_WEIGHTS,
)
def run_unitary(config: RunConfig) -> Outcome:
    verdict = unitarity_classify(
        config.param("l1"), config.param("l2"), config.param("l3"), config.param("h1"), config.param("h2")
    )
    return Outcome(verdict.to_json())


@command(
    "zhu",
    "Zhu algebra images of omega and I and the O(V) relation check",
    Option("vector", "text", "vacuum-module vector to reduce"),
    Option("max_degree", "int", "largest degree of b in the relation check"),
    Option("max_m", "int", "largest m in the relation check"),
    *_VACUUM_PARAMS,
)
def run_zhu(config: RunConfig) -> Outcome:
    spec = _module_spec(config, ModuleKind.VACUUM_HV1)
    omega = PBWVector.monomial(spec, [L(-2)])
    heis = PBWVector.monomial(spec, [I(-1)])
    defects = zhu_relation_defect(spec, config.int_option("max_degree", 2), config.int_option("max_m", 2))
    payload: dict[str, Any] = {
        "module": spec.to_json(),
        "x": zhu_poly_to_json(zhu_reduce(omega)),
        "y": zhu_poly_to_json(zhu_reduce(heis)),
        "relation_defects": defects,
    }
    text = config.text_option("vector")
    if text is not None:
        payload["reduced"] = zhu_poly_to_json(zhu_reduce(parse_vector(text, spec)))
    return Outcome(payload, _status(defects))


@command(
    "central-charge",
    "Mode-computed central charges of the conformal vectors",
    Option("name", "text", "one conformal vector", choices=tuple(n.value for n in ConformalName)),
    Option("relations", "flag", "also check the Virasoro relations of each vector"),
    *_VACUUM_PARAMS,
)
def run_central_charge(config: RunConfig) -> Outcome:
    spec = _module_spec(config, ModuleKind.VACUUM_HV1)
    name = config.text_option("name")
    if name is not None:
        names = [ConformalName.parse(name)]
    elif spec.l3:
        names = list(ConformalName)
    else:
        names = [ConformalName.OMEGA]
    reports = []
    mismatched = False
    for n in names:
        vector = conformal_vector(n, spec)
        report = central_charge_report(vector)
        mismatched = mismatched or report["central_charge"] != report["closed_form"]
        if config.flag("relations"):
            report["virasoro_defects"] = virasoro_defect(vector, window=2, max_degree=2)
            mismatched = mismatched or bool(report["virasoro_defects"])
        reports.append(report)
    payload = {"module": spec.to_json(), "conformal_vectors": reports}
    return Outcome(payload, ExitStatus.DEFECT if mismatched else ExitStatus.OK)


@command(
    "singular",
    "Virasoro singular vectors of one degree at central charge c",
    Option("c", "param", "central charge", required=True),
    Option("degree", "int", "degree", required=True),
    Option("embed", "flag", "embed through omega_tilde into VacuumHV1 built from l1, l2, l3"),
    *_VACUUM_PARAMS,
)
def run_singular(config: RunConfig) -> Outcome:
    degree = config.int_option("degree", 1)
    vectors = singular_vector_search(config.param("c"), degree)
    vir = ModuleSpec.build(ModuleKind.VACUUM_VIR, l1=config.param("c"))
    payload: dict[str, Any] = {
        "c": scalar_to_json(vir.l1),
        "degree": degree,
        "basis": [monomial_to_text(m) for m in enumerate_basis(vir, degree)],
        "kernel_dimension": len(vectors),
        "vectors": [v.to_json()["terms"] for v in vectors],
    }
    failed = []
    if config.flag("embed"):
        spec = _module_spec(config, ModuleKind.VACUUM_HV1)
        images = []
        for v in vectors:
            image, annihilated = embed_via_omega_tilde(v, spec)
            images.append({"image": image.to_json()["terms"], "annihilated": annihilated})
            if not annihilated:
                failed.append(image)
        payload["embedded"] = images
    return Outcome(payload, _status(failed))


@command(
    "tensor-check",
    "Graded dimensions against the Heisenberg times Virasoro decomposition",
    Option("max_degree", "int", "last degree compared"),
    *_VACUUM_PARAMS,
)
def run_tensor_check(config: RunConfig) -> Outcome:
    spec = _module_spec(config, ModuleKind.VACUUM_HV1)
    max_degree = config.int_option("max_degree", 6)
    defects = tensor_dim_check(spec, max_degree)
    payload = {"module": spec.to_json(), "max_degree": max_degree, "defects": defects}
    return Outcome(payload, _status(defects))


@command(
    "c2dim",
    "Graded dimensions of V / C_2(V)",
    Option("max_degree", "int", "last degree computed"),
    *_VACUUM_PARAMS,
)
def run_c2dim(config: RunConfig) -> Outcome:
    spec = _module_spec(config, ModuleKind.VACUUM_HV1)
    max_degree = config.int_option("max_degree", 4)
    dims = [{"degree": d, "dimension": c2_quotient_dim(spec, d)} for d in range(max_degree + 1)]
    return Outcome({"module": spec.to_json(), "dimensions": dims})

