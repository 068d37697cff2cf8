"""Command-line front end.

Every command builds a list of rows and hands it to one emitter (json, csv or
latex).  Laurent coefficients stay exact in every format; JSON stores them as
``{"laurent": [[u_exponent, numerator, denominator], ...]}`` where u = v^(1/2),
so ``load_json`` rebuilds identical objects.
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import click

from .scalars import ScalarHalf


# emitters ---------------------------------------------------------------------------------

def _encode(x):
    if isinstance(x, ScalarHalf):
        return {"laurent": x.to_triples()}
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    return x


def _decode_hook(obj):
    if set(obj) == {"laurent"}:
        return ScalarHalf.from_triples(obj["laurent"])
    return obj


def dumps_json(rows) -> str:
    body = ",\n".join(" " + json.dumps(r, sort_keys=True) for r in _encode(list(rows)))
    return "[\n" + body + "\n]\n" if body else "[]\n"


def load_json(text: str):
    return json.loads(text, object_hook=_decode_hook)


def _plain(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_plain(t) for t in x) + ")"
    if isinstance(x, dict):
        return ";".join(f"{_plain(k)}:{_plain(v)}" for k, v in x.items())
    return str(x)


def _columns(rows):
    cols: list = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def dumps_csv(rows) -> str:
    buf = io.StringIO()
    cols = _columns(rows)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_plain(r.get(c, "")) for c in cols])
    return buf.getvalue()


def latex_scalar(x: ScalarHalf) -> str:
    s = str(x)
    s = re.sub(r"v\^\(([^)]*)\)", r"v^{\1}", s)
    s = re.sub(r"v\^(-?\d+)", r"v^{\1}", s)
    return "$" + s.replace("*", "") + "$"


def _latex_cell(x) -> str:
    if isinstance(x, ScalarHalf):
        return latex_scalar(x)
    return _plain(x).replace("_", r"\_")


def dumps_latex(rows) -> str:
    cols = _columns(rows)
    lines = [r"\begin{tabular}{" + "l" * len(cols) + "}", " & ".join(c.replace("_", r"\_") for c in cols) + r" \\",
             r"\hline"]
    for r in rows:
        lines.append(" & ".join(_latex_cell(r.get(c, "")) for c in cols) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


EMITTERS = {"json": dumps_json, "csv": dumps_csv, "latex": dumps_latex}


@dataclass
class JobSpec:
    """Normalised description of one invocation, kept on the click context."""

    verb: str
    quiver: str = ""
    involution: str = "id"
    primes: tuple = ()
    caps: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)
    fmt: str = "json"

    def __post_init__(self):
        if self.fmt not in EMITTERS:
            raise ValueError(f"unknown output format {self.fmt!r}")
        for k, c in self.caps.items():
            if int(c) <= 0:
                raise ValueError(f"cap {k} must be positive")


def emit(ctx, rows):
    fmt = ctx.obj["fmt"]
    text = EMITTERS[fmt](rows)
    out = ctx.obj.get("out")
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# parsing helpers ----------------------------------------------------------------------------

def _ints(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got {text!r}")


def _shape(spec: str):
    from .cartan import ShapeError, parse_quiver_spec
    try:
        return parse_quiver_spec(spec)
    except (ShapeError, ValueError) as exc:
        raise click.BadParameter(f"quiver spec {spec!r}: {exc}")


def _rho(shape, text):
    from .cartan import ShapeError, parse_involution
    try:
        return parse_involution(shape, text)
    except (ShapeError, ValueError) as exc:
        raise click.BadParameter(f"involution {text!r}: {exc}")


def _class(datum, text):
    from .finrep import parse_ks
    try:
        return parse_ks(datum, text)
    except ValueError as exc:
        raise click.BadParameter(str(exc))


def _double_rows(x: dict):
    return [{"lambdaMinus": list(lm), "lambdaPlus": list(lp), "mu": list(mu), "nu": list(nu), "coeff": c}
            for (lm, lp, mu, nu), c in sorted(x.items())]


# the command tree ---------------------------------------------------------------------------

@click.group()
@click.option("--format", "fmt", type=click.Choice(sorted(EMITTERS)), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help="Census cache directory (overrides HALLCANON_CACHE).")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for independent jobs.")
@click.pass_context
def main(ctx, fmt, out, cache_dir, jobs):
    """Exact Hall, canonical and iquantum computations for Dynkin quivers."""
    if cache_dir:
        os.environ["HALLCANON_CACHE"] = cache_dir
    if jobs < 1:
        raise click.BadParameter("--jobs must be positive")
    ctx.ensure_object(dict)
    ctx.obj.update(fmt=fmt, out=out, jobs=jobs)
    sub = ctx.invoked_subcommand or ""
    ctx.obj["job"] = JobSpec(verb=sub, options=dict(jobs=jobs), fmt=fmt)


@main.command()
@click.argument("spec")
@click.pass_context
def roots(ctx, spec):
    """Positive roots, Cartan matrix and type of a quiver."""
    from .cartan import RootDatum, classify
    shape, _ = _shape(spec)
    datum = RootDatum(shape)
    rows = [{"index": k, "root": list(r)} for k, r in enumerate(datum.positive_roots)]
    rows.insert(0, {"type": classify(shape), "cartan": [list(r) for r in datum.cartan]})
    emit(ctx, rows)


# hall ---------------------------------------------------------------------------------------

@main.group()
def hall():
    """Generic Hall algebra of a Dynkin quiver."""


@hall.command("mult")
@click.argument("spec")
@click.option("--x", "xs", required=True, help='Class such as "a1", "[1,1]" or "2[1,0]+[0,1]".')
@click.option("--y", "ys", required=True)
@click.pass_context
def hall_mult(ctx, spec, xs, ys):
    """Product u_x * u_y in the u-basis."""
    from .hallgen import HallAlgebra
    shape, _ = _shape(spec)
    H = HallAlgebra(shape)
    x, y = _class(H.datum, xs), _class(H.datum, ys)
    prod = H.product(H.u(x), H.u(y))
    emit(ctx, [{"class": H.name(lam), "ks": list(lam), "coeff": prod[lam]} for lam in sorted(prod)])


@hall.command("table")
@click.argument("spec")
@click.option("--max-dim", type=int, default=2, show_default=True, help="Cap on the total dimension of each product.")
@click.pass_context
def hall_table(ctx, spec, max_dim):
    """Structure constants {mu, nu, lambda, coeffs} for all pairs within the cap."""
    from .hallgen import HallAlgebra
    from .double import _vecs_upto
    shape, _ = _shape(spec)
    H = HallAlgebra(shape)
    dims = [d for d in _vecs_upto((max_dim,) * H.n) if 0 < sum(d) < max_dim]
    pairs = []
    for d1 in dims:
        for d2 in dims:
            if sum(d1) + sum(d2) <= max_dim:
                pairs += [(m, n) for m in H.classes(d1) for n in H.classes(d2)]
    rows = H.table(sorted(pairs))
    for r in rows:
        r["coeffs"] = ScalarHalf.from_triples(r["coeffs"])
    emit(ctx, rows)


@hall.command("serre")
@click.argument("spec")
@click.pass_context
def hall_serre(ctx, spec):
    """Quantum Serre defects of the Hall images of the generators (all zero)."""
    from .hallgen import HallAlgebra
    from .canonbasis import serre_defects
    shape, _ = _shape(spec)
    H = HallAlgebra(shape)
    emit(ctx, [{"i": i + 1, "j": j + 1, "vanishes": not any(d.values())} for (i, j), d in sorted(serre_defects(H).items())])


# canonical bases ------------------------------------------------------------------------------

@main.group()
def canon():
    """Canonical and dual canonical bases."""


@canon.command("basis")
@click.argument("spec")
@click.option("--degree", required=True, help="Dimension vector, e.g. 1,1.")
@click.option("--dual", is_flag=True, help="Dual canonical basis against the u-basis.")
@click.pass_context
def canon_basis(ctx, spec, degree, dual):
    """Transition matrix of one degree, with a provenance column."""
    from .hallgen import HallAlgebra
    from .canonbasis import canonical_basis, dual_canonical_basis
    shape, _ = _shape(spec)
    H = HallAlgebra(shape)
    d = _ints(degree)
    if len(d) != H.n:
        raise click.BadParameter(f"degree needs {H.n} entries")
    fam = dual_canonical_basis(H, d) if dual else canonical_basis(H, d)
    source = ("bar-invariant, unitriangular in the rescaled u-basis" if dual
              else "psi-invariant, unitriangular in the rescaled monomial basis")
    rows = []
    for lam in fam.classes():
        for mu, c in sorted(fam.transition[lam].items()):
            rows.append({"basis": H.name(lam), "standard": H.name(mu), "coeff": c, "source": source})
    emit(ctx, rows)


@canon.command("duality")
@click.argument("spec")
@click.option("--degree", required=True)
@click.pass_context
def canon_duality(ctx, spec, degree):
    """Pairing of the canonical basis with the rescaled dual canonical basis."""
    from .hallgen import HallAlgebra
    from .canonbasis import pairing_duality_check
    shape, _ = _shape(spec)
    H = HallAlgebra(shape)
    res = pairing_duality_check(H, _ints(degree))
    emit(ctx, [{"canonical": H.name(a), "dual": H.name(b), "pairing": c} for (a, b), c in sorted(res.items())])


# the double -----------------------------------------------------------------------------------

@main.group()
def tu():
    """Reduced Drinfeld double of the Hall algebra."""


@tu.command("nf")
@click.argument("spec")
@click.argument("word", nargs=-1, required=True)
@click.pass_context
def tu_nf(ctx, spec, word):
    """Normal form of a word in E<i>, F<i>, K<i>, Kp<i> (with optional ^power)."""
    from .double import DrinfeldDouble
    D = DrinfeldDouble(_shape(spec)[0])
    try:
        x = D.normal_form(list(word))
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    emit(ctx, _double_rows(x))


@tu.command("mult")
@click.argument("spec")
@click.option("--x", "xw", required=True, help='Space separated word, e.g. "E1 F1".')
@click.option("--y", "yw", required=True)
@click.pass_context
def tu_mult(ctx, spec, xw, yw):
    """Product of two words."""
    from .double import DrinfeldDouble
    D = DrinfeldDouble(_shape(spec)[0])
    emit(ctx, _double_rows(D.multiply(D.normal_form(xw), D.normal_form(yw))))


@tu.command("braid")
@click.argument("spec")
@click.option("--i", "i", type=int, required=True, help="Vertex (1-based).")
@click.option("--x", "xw", required=True)
@click.option("--inverse", is_flag=True)
@click.pass_context
def tu_braid(ctx, spec, i, xw, inverse):
    """Symmetry operator at vertex i applied to a word."""
    from .double import DrinfeldDouble
    D = DrinfeldDouble(_shape(spec)[0])
    emit(ctx, _double_rows(D.braid_T(i - 1, D.normal_form(xw), inverse=inverse)))


@tu.command("double-basis")
@click.argument("spec")
@click.option("--window", type=int, default=2, show_default=True)
@click.pass_context
def tu_double_basis(ctx, spec, window):
    """Dual canonical basis of the double on a window of degrees."""
    from .double import DoubleBasis, DrinfeldDouble, sl2_family_index
    D = DrinfeldDouble(_shape(spec)[0])
    fam = DoubleBasis(D, window).family()
    rows = []
    for label in sorted(fam):
        x = fam[label]
        params = sl2_family_index(D, x) if D.n == 1 else None
        row = {"label": _plain(label), "terms": len(x)}
        if params is not None:
            row["family"] = _plain(params)
        row["element"] = _double_rows(x) if ctx.obj["fmt"] == "json" else len(x)
        rows.append(row)
    emit(ctx, rows)


# iquantum groups ------------------------------------------------------------------------------

@main.group()
def iqg():
    """Quasi-split iquantum groups inside the double."""


@iqg.command("verify")
@click.argument("spec")
@click.option("--rho", default=None, help="Involution such as (1 3); default from the quiver string or id.")
@click.pass_context
def iqg_verify(ctx, spec, rho):
    """Defining relations, braid relations and bar compatibility."""
    from .iquant import IQuantumGroup, RelationFailure
    shape, parsed = _shape(spec)
    G = IQuantumGroup(shape, _rho(shape, rho) if rho is not None else parsed)
    rows = []

    def record(check, fn):
        try:
            rows.append({"check": check, "ok": True, "detail": _plain(fn())})
        except RelationFailure as exc:
            rows.append({"check": check, "ok": False, "detail": str(exc)})

    record("defining relations vanish in the double", lambda: sorted(G.verify_presentation()))
    for i in G.braid_generators():
        record(f"symmetry {i + 1} preserves the relations", lambda i=i: sorted(G.check_relations_preserved(i)))
    record("braid relations (pair: order)", lambda: sorted(G.check_braid_relations().items()))
    emit(ctx, rows)
    if not all(r["ok"] for r in rows):
        ctx.exit(1)


@iqg.command("braid")
@click.argument("spec")
@click.option("--rho", default=None)
@click.option("--word", required=True, help="Braid word of vertices, rightmost acting first, e.g. 1,2.")
@click.option("--gen", "gen", required=True, help="B<j> or K<j> (1-based).")
@click.pass_context
def iqg_braid(ctx, spec, rho, word, gen):
    """Image of a generator under a word in the braid group symmetries."""
    from .iquant import IQuantumGroup
    shape, parsed = _shape(spec)
    G = IQuantumGroup(shape, _rho(shape, rho) if rho is not None else parsed)
    m = re.fullmatch(r"(B|K)(\d+)", gen.strip())
    if not m:
        raise click.BadParameter(f"bad generator {gen!r}")
    j = int(m.group(2)) - 1
    tok = ("B", j) if m.group(1) == "B" else ("K", j, 1)
    emit(ctx, _double_rows(G.braid_value(tuple(k - 1 for k in _ints(word)), tok)))


# iHall -------------------------------------------------------------------------------------------

@main.group()
def ihall():
    """iHall algebras of iquivers."""


@ihall.command("table")
@click.option("--shape", "spec", required=True)
@click.option("--rho", default="id", show_default=True)
@click.option("--qlist", default="2", show_default=True, help="Prime powers, e.g. 2,3.")
@click.option("--cap", type=int, default=2, show_default=True, help="Total dimension cap of products.")
@click.pass_context
def ihall_table(ctx, spec, rho, qlist, cap):
    """Products of module classes over F_q, twisted by the Euler form."""
    from .ihall import IHallAtQ, build_lambda
    shape, _ = _shape(spec)
    alg = build_lambda(shape, _rho(shape, rho))
    from .double import _vecs_upto
    rows = []
    for q in _ints(qlist):
        A = IHallAtQ(alg, q, cap=cap)
        keys = []
        for d in _vecs_upto((cap,) * alg.n):
            if 0 < sum(d) < cap:
                keys += [(d, k) for k in range(len(A.reps(d)))]
        for k1 in keys:
            for k2 in keys:
                if sum(k1[0]) + sum(k2[0]) > cap:
                    continue
                for k3, c in sorted(A.product_basis(k1, k2).items()):
                    rows.append({"q": q, "x": _plain(k1), "y": _plain(k2), "z": _plain(k3), "coeff": c})
    emit(ctx, rows)


@ihall.command("dual-basis")
@click.argument("spec", default="A1")
@click.option("--rho", default="id", show_default=True)
@click.option("--m", "m", type=int, default=4, show_default=True, help="Largest degree.")
@click.pass_context
def ihall_dual_basis(ctx, spec, rho, m):
    """Dual icanonical basis of split A1 with its closed form in B and the Cartan generator."""
    from .ihall import SplitRankOne
    from .nks import irank1_L
    shape, _ = _shape(spec)
    if shape.n != 1 or _rho(shape, rho) != (0,):
        raise click.UsageError("the dual icanonical table is available for split A1 only")
    S = SplitRankOne()
    rows = []
    for deg in range(m + 1):
        trans = S.dual_icanonical(deg)
        for (b, a) in sorted(trans):
            closed = irank1_L(b, deg)
            rows.append({"m": deg, "k": b, "expansion": {f"K^{bb} U_{aa}": c for (bb, aa), c in sorted(trans[(b, a)].items())},
                         "closed_form": {f"B^{j} K^{i}": c for (j, i), c in sorted(closed.items())},
                         "agrees": S.element_of(trans[(b, a)]) == S.from_iqg(closed)})
    emit(ctx, rows)


# nks ---------------------------------------------------------------------------------------------

def _frozen_weights(Q, text):
    w = {}
    for tok in filter(None, text.replace(" ", "").split(",")):
        m = re.fullmatch(r"(\d+)('?)(?:=(\d+))?", tok)
        if not m:
            raise click.BadParameter(f"bad framing token {tok!r}; use i, i' (shifted) or i=mult")
        i = int(m.group(1)) - 1
        if not 0 <= i < Q.shape.n:
            raise click.BadParameter(f"vertex {i + 1} out of range")
        key = ("frozen", Q.simple_label(i, 1 if m.group(2) else 0))
        w[key] = w.get(key, 0) + int(m.group(3) or 1)
    return w


def _kind_option(f):
    return click.option("--kind", type=click.Choice(["i", "double"]), default="i", show_default=True)(f)


@main.group()
def nks():
    """Regular NKS categories and their quantum Grothendieck rings."""


@nks.command("ldominant")
@click.argument("spec")
@click.option("--rho", default=None)
@_kind_option
@click.option("--w", "wtext", required=True, help="Framing: comma separated i, i' or i=mult.")
@click.option("--bound", type=int, default=None)
@click.pass_context
def nks_ldominant(ctx, spec, rho, kind, wtext, bound):
    """All l-dominant v for a framing w."""
    from .nks import NKSQuotient
    shape, parsed = _shape(spec)
    Q = NKSQuotient(shape, _rho(shape, rho) if rho is not None else parsed, kind=kind)
    w = _frozen_weights(Q, wtext)
    emit(ctx, [{"v": {_plain(x): a for x, a in sorted(v.items())}} for v in Q.enumerate_l_dominant(w, bound)])


@nks.command("dict")
@click.argument("spec")
@click.option("--rho", default=None)
@_kind_option
@click.option("--lambda", "lam", default=None, help="Weight on regular vertices: label=coef;... e.g. 1,0=1;0,1=-1")
@click.option("--generator", default=None, help="Cartan generator K<i> or Kp<i> (double only).")
@click.pass_context
def nks_dict(ctx, spec, rho, kind, lam, generator):
    """Index pair (v, w) of a weight or of a Cartan generator."""
    from .nks import NKSQuotient
    shape, parsed = _shape(spec)
    Q = NKSQuotient(shape, _rho(shape, rho) if rho is not None else parsed, kind=kind)
    if generator:
        m = re.fullmatch(r"(K|Kp)(\d+)", generator)
        if not m:
            raise click.BadParameter(f"bad generator {generator!r}")
        v, w = Q.cartan_dictionary(int(m.group(2)) - 1, prime=m.group(1) == "Kp")
    elif lam:
        weight = {}
        for part in filter(None, lam.split(";")):
            label, _, coef = part.partition("=")
            x = _ints(label)
            if x not in Q.vertices:
                raise click.BadParameter(f"{x} is not a vertex; vertices are {Q.vertices}")
            weight[x] = int(coef or 1)
        v, w = Q.index_pair(weight)
    else:
        raise click.UsageError("give --lambda or --generator")
    emit(ctx, [{"v": {_plain(x): a for x, a in sorted(v.items())},
                "w": {_plain(x[1]): a for x, a in sorted(w.items())}}])


@nks.command("dot")
@click.argument("spec")
@click.option("--rho", default=None)
@_kind_option
def nks_dot(spec, rho, kind):
    """Graphviz export of the framed quotient quiver."""
    from .nks import NKSQuotient
    shape, parsed = _shape(spec)
    click.echo(NKSQuotient(shape, _rho(shape, rho) if rho is not None else parsed, kind=kind).to_dot())


# rank one closed forms -------------------------------------------------------------------------------

@main.group()
def rank1():
    """Closed forms for rank one."""


@rank1.command("L")
@click.option("--v", "v", required=True, help="v1,v2")
@click.option("--w", "w", required=True, help="w1,w2")
@click.option("--variant", type=click.Choice(["stated", "balanced"]), default="stated", show_default=True)
@click.option("--check", is_flag=True, help="Also straighten the sum in the double and compare with the family.")
@click.pass_context
def rank1_L_cmd(ctx, v, w, variant, check):
    """Dual canonical element L(v, w) in the PBW basis E^e F^f K^k K'^k'."""
    from .nks import rank1_L
    try:
        poly = rank1_L(_ints(v), _ints(w), variant)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    rows = [{"E": e, "F": f, "K": k, "Kp": kp, "coeff": c} for (e, f, k, kp), c in sorted(poly.items())]
    if check:
        from .double import DrinfeldDouble, sl2_family_index
        from .nks import pbw_in_double
        D = DrinfeldDouble("A1")
        rows.append({"family_member": _plain(sl2_family_index(D, pbw_in_double(D, poly)))})
    emit(ctx, rows)


@rank1.command("EF")
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.pass_context
def rank1_EF(ctx, a, b):
    """E^a F^b expanded over the elements L(v, (a, b))."""
    from .nks import rank1_EaFb
    emit(ctx, [{"v": list(k), "coeff": c} for k, c in sorted(rank1_EaFb(a, b).items())])


@rank1.command("iL")
@click.option("--k", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.pass_context
def rank1_iL(ctx, k, m):
    """L(k, m) of split rank one as a polynomial in B and the Cartan generator."""
    from .nks import irank1_L
    try:
        poly = irank1_L(k, m)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    emit(ctx, [{"B": j, "K": i, "coeff": c} for (j, i), c in sorted(poly.items())])


@rank1.command("inverse")
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.pass_context
def rank1_inverse(ctx, a, b):
    """B^a K^b over the elements L(k, m)."""
    from .nks import irank1_inverse
    emit(ctx, [{"k": k, "m": m, "coeff": c} for (k, m), c in sorted(irank1_inverse(a, b).items())])


# acceptance ----------------------------------------------------------------------------------------

def _run_key(key):
    from .acceptance import get, run_target
    t = get(key)
    ok, detail, secs = run_target(t)
    return {"target": key, "title": t.title, "ok": ok, "detail": detail, "seconds": round(secs, 1)}


@main.command()
@click.argument("targets", nargs=-1)
@click.option("--timings/--no-timings", default=False, help="Include wall-clock seconds (not deterministic).")
@click.pass_context
def verify(ctx, targets, timings):
    """Run acceptance targets (``all`` or c1 ... c12); exit status 1 if any fails."""
    from .acceptance import TARGETS
    known = [t.key for t in TARGETS]
    keys = known if not targets or "all" in targets else list(targets)
    bad = [k for k in keys if k not in known]
    if bad:
        raise click.BadParameter(f"unknown targets {bad}; known: {known}")
    jobs = ctx.obj["jobs"]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_run_key, keys))
    else:
        rows = [_run_key(k) for k in keys]
    for r in rows:
        click.echo(f"{'PASS' if r['ok'] else 'FAIL'} {r['target']}: {r['title']}", err=True)
        if not timings:
            del r["seconds"]
    emit(ctx, rows)
    if not all(r["ok"] for r in rows):
        ctx.exit(1)


if __name__ == "__main__":
    main()
