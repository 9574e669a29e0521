"""Batch verification runner.

Executes named checks over a parameter grid and emits a report, either
as a text table or as a JSON document with one record per (check, cell).
Cells violating a check's preconditions (e.g. a+b > p) are reported as
skipped, not failed.  Exit status is nonzero iff any cell fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import cochains, fock, liealg, partitions, schrodinger
from .scalars import ONE, Scalar


# ---------------------------------------------------------------------------
# Individual checks.  Each returns (status, counterexample-or-None) where
# status is "pass", "fail" or "skipped".  Cell checks take (p, q, a, b);
# grid-level checks take (p, q) and run once per distinct (p, q).
# ---------------------------------------------------------------------------


def check_closedness(p, q, a, b):
    """The special cocycles are closed: d psi_{bq,aq} = 0."""
    if a + b > p:
        return "skipped", None
    d = cochains.differential(cochains.psi(b, a, p, q))
    if d.is_zero():
        return "pass", None
    return "fail", repr(d)


def check_vz_values(p, q, a, b):
    """psi_{bq,aq} evaluated on the distinguished wedge vector equals the
    product of determinant powers."""
    if a + b > p:
        return "skipped", None
    got = cochains.evaluate(cochains.psi(b, a, p, q), liealg.vz_vector(b, a, p, q))
    want = fock.FockPoly.constant(ONE)
    if a:
        want = want * fock.det_delta_tilde(a, p, a) ** q
    if b:
        want = want * fock.det_delta(b, p, b) ** q
    if got == want:
        return "pass", None
    return "fail", "got %r, want %r" % (got, want)


def check_equivariance(p, q, a, b):
    """Zero defect for all gl(p) and traceless gl(q) elements; diagonal
    gl(q) eigenvalue a-b; gl(a)/gl(b) diagonal eigenvalues on the
    distinguished value polynomial."""
    if a + b > p:
        return "skipped", None
    phi = cochains.psi(b, a, p, q)
    for r in range(1, p + 1):
        for s in range(1, p + 1):
            X = ("gl_p", r, s)
            d = cochains.equivariance_defect(phi, X)
            if not d.is_zero():
                return "fail", "gl_p E_%d,%d defect %r" % (r, s, d)
    for r in range(p + 1, p + q + 1):
        for s in range(p + 1, p + q + 1):
            if r == s:
                continue
            d = cochains.equivariance_defect(phi, ("gl_q", r, s))
            if not d.is_zero():
                return "fail", "gl_q E_%d,%d defect %r" % (r, s, d)
    if q >= 2:
        # traceless diagonal element E_11 - E_22
        d = cochains.equivariance_defect(phi, ("gl_q", p + 1, p + 1)) - \
            cochains.equivariance_defect(phi, ("gl_q", p + 2, p + 2))
        if not d.is_zero():
            return "fail", "gl_q E_11-E_22 defect %r" % (d,)
    # diagonal gl_q eigenvalue a-b on every value polynomial
    eig = Scalar.from_int(a - b)
    for key, f in phi.terms.items():
        acted = fock.k_side_action(("gl_q", p + 1, p + 1), f, phi.params)
        if acted != f.scale(eig):
            return "fail", "gl_q diagonal eigenvalue != %d on %r" % (a - b, key)
    # gl(a)/gl(b) diagonal eigenvalues on the distinguished value
    # polynomial: -q and +q before the twist, so 0 and q+p for the
    # twisted operators (shifts +q and +p).
    value = cochains.evaluate(phi, liealg.vz_vector(b, a, p, q))
    for r in range(1, a + 1):
        acted = fock.k_side_action(("gl_a", r, r), value, phi.params)
        if not acted.is_zero():
            return "fail", "gl_a E_%d,%d eigenvalue on value wrong" % (r, r)
    for r in range(1, b + 1):
        acted = fock.k_side_action(("gl_b", r, r), value, phi.params)
        if acted != value.scale(Scalar.from_int(q + p)):
            return "fail", "gl_b E_%d,%d eigenvalue on value wrong" % (r, r)
    return "pass", None


def check_vacuum_character(p, q, a, b):
    """Diagonal eigenvalues on the constant polynomial are
    (0, a-b, q, p) block-wise after the twist."""
    glp, glq, gla, glb = fock.vacuum_character(p, q, a, b)
    want = ([0] * p, [a - b] * q, [q] * a, [p] * b)
    if (glp, glq, gla, glb) == want:
        return "pass", None
    return "fail", "got %r, want %r" % ((glp, glq, gla, glb), want)


def check_harmonicity(p, q, a, b):
    """Determinant polynomials, their products, and the distinguished
    value polynomial are annihilated by all mixed Laplacians."""
    if a + b > p:
        return "skipped", None
    polys = []
    if b:
        polys.append(fock.det_delta(b, p, b))
    if a:
        polys.append(fock.det_delta_tilde(a, p, a))
    if a and b:
        polys.append(fock.det_delta(b, p, b) * fock.det_delta_tilde(a, p, a))
    value = cochains.evaluate(cochains.psi(b, a, p, q), liealg.vz_vector(b, a, p, q))
    polys.append(value)
    for f in polys:
        if not fock.is_harmonic(f, p, a, b):
            return "fail", "non-harmonic: %r" % (f,)
    return "pass", None


def check_multiplicity_one(p, q, a, b, max_degree=None):
    """The rectangle K-type occurs exactly once among harmonic highest
    weight vectors in the degree of the special cocycle's values."""
    if a + b > p or a + b == 0:
        return "skipped", None
    degree = (a + b) * q
    if max_degree is not None and degree > max_degree:
        return "skipped", None
    m = cochains.isotypic_multiplicity(p, q, a, b, degree)
    if m == 1:
        return "pass", None
    return "fail", "multiplicity %d != 1" % m


def check_product_formula(p, q):
    """Transfer of psi_{q,0} ^ psi_{0,q} to the split model equals
    2^q times the one-block Kudla-Millson form."""
    if schrodinger.product_formula_check(p, q):
        return "pass", None
    return "fail", "transfer mismatch at (p,q)=(%d,%d)" % (p, q)


def check_non_factorization(p, q):
    """The q=1 internal wedge of the transferred generators carries
    Gaussian weight 2 and differs from the weight-1 transferred cocycle."""
    if q != 1:
        return "skipped", None
    try:
        schrodinger.nonfactorization_demo(p)
    except AssertionError as e:
        return "fail", str(e)
    return "pass", None


def check_rectangle_multiplicity(p, q):
    """Hom-space dimensions for the rectangle K-types are 1 exactly when
    the exterior degree offset n-a-b is an admissible even number."""
    for a in range(p + 1):
        for b in range(p + 1 - a):
            for n in range(p + 1):
                got = partitions.special_hom_dimension(p, q, a, b, n)
                d = n - a - b
                want = 1 if (d >= 0 and d % 2 == 0 and d // 2 <= p - a - b) else 0
                if got != want:
                    return "fail", "dim(p=%d,q=%d,a=%d,b=%d,n=%d)=%d, want %d" % (
                        p, q, a, b, n, got, want)
    return "pass", None


def check_exterior_dimension(p, q):
    """Schur-pair dimensions in the p x q box sum to binomial(pq, R)."""
    if partitions.dimension_identity_holds(p, q):
        return "pass", None
    return "fail", "dimension identity fails at (p,q)=(%d,%d)" % (p, q)


def check_chern_invariance(p, q):
    """The degree-(q,q) curvature form is nonzero and killed by every
    basis element of k."""
    c = liealg.chern_element(p, q)
    if c.is_zero():
        if p >= q:
            return "fail", "curvature form vanishes"
        return "pass", None
    for X in liealg.k_basis(p, q):
        acted = liealg.k_action(X, c)
        if not acted.is_zero():
            return "fail", "not invariant under %r: %r" % (X, acted)
    return "pass", None


CELL_CHECKS = {
    "closedness": check_closedness,
    "vz-values": check_vz_values,
    "equivariance": check_equivariance,
    "vacuum-character": check_vacuum_character,
    "harmonicity": check_harmonicity,
    "multiplicity-one": check_multiplicity_one,
}

GRID_CHECKS = {
    "product-formula": check_product_formula,
    "non-factorization": check_non_factorization,
    "rectangle-multiplicity": check_rectangle_multiplicity,
    "exterior-dimension": check_exterior_dimension,
    "chern-invariance": check_chern_invariance,
}

ALL_CHECKS = sorted(CELL_CHECKS) + sorted(GRID_CHECKS)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def _parse_range(text, lo_ok=0):
    """'2' -> (2, 2); '1:4' -> (1, 4)."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi or lo < lo_ok:
        raise ValueError("bad range %r" % text)
    return lo, hi


def _run_one(task):
    name, params, max_degree = task
    start = time.monotonic()
    try:
        if name in CELL_CHECKS:
            if name == "multiplicity-one":
                status, ce = check_multiplicity_one(*params, max_degree=max_degree)
            else:
                status, ce = CELL_CHECKS[name](*params)
        else:
            status, ce = GRID_CHECKS[name](*params)
    except Exception as e:  # report, don't crash the whole run
        status, ce = "fail", "exception: %r" % (e,)
    millis = int((time.monotonic() - start) * 1000)
    return {
        "name": name,
        "params": list(params),
        "status": status,
        "millis": millis,
        "counterexample": ce,
    }


def build_tasks(p_range, q_range, a_range, b_range, checks, max_degree):
    cells = [
        (p, q, a, b)
        for p in range(p_range[0], p_range[1] + 1)
        for q in range(q_range[0], q_range[1] + 1)
        for a in range(a_range[0], a_range[1] + 1)
        for b in range(b_range[0], b_range[1] + 1)
    ]
    grid = sorted({(p, q) for p, q, _, _ in cells})
    tasks = []
    for name in checks:
        if name in CELL_CHECKS:
            for cell in cells:
                tasks.append((name, cell, max_degree))
        else:
            for pq in grid:
                tasks.append((name, pq, max_degree))
    return tasks


def run(tasks, jobs=1):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, tasks))
    else:
        records = [_run_one(t) for t in tasks]
    records.sort(key=lambda r: (r["name"], r["params"]))
    return records


def format_text(records):
    lines = []
    width = max([len(r["name"]) for r in records] + [5])
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        counts[r["status"]] += 1
        cell = ",".join(str(x) for x in r["params"])
        line = "%-*s  (%s)  %-7s  %5d ms" % (width, r["name"], cell, r["status"], r["millis"])
        if r["counterexample"]:
            line += "  " + r["counterexample"]
        lines.append(line)
    lines.append("")
    lines.append("%d passed, %d failed, %d skipped" % (
        counts["pass"], counts["fail"], counts["skipped"]))
    return "\n".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="fockverify",
        description="Verify the algebraic identities satisfied by the special "
                    "Fock-model cocycles over a parameter grid.")
    parser.add_argument("--p", default="1:3", help="value or lo:hi range (default 1:3)")
    parser.add_argument("--q", default="1:2", help="value or lo:hi range (default 1:2)")
    parser.add_argument("--a", default="0:2", help="value or lo:hi range (default 0:2)")
    parser.add_argument("--b", default="0:2", help="value or lo:hi range (default 0:2)")
    parser.add_argument("--checks", default="all",
                        help="comma-separated subset of: %s (default all)" % ", ".join(ALL_CHECKS))
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--jobs", type=int, default=1, help="parallel worker bound")
    parser.add_argument("--max-degree", type=int, default=6,
                        help="skip multiplicity linear algebra above this degree (default 6)")
    args = parser.parse_args(argv)

    try:
        p_range = _parse_range(args.p, lo_ok=1)
        q_range = _parse_range(args.q, lo_ok=1)
        a_range = _parse_range(args.a)
        b_range = _parse_range(args.b)
        if args.checks.strip() == "all":
            checks = ALL_CHECKS
        else:
            checks = [c.strip() for c in args.checks.split(",") if c.strip()]
            unknown = [c for c in checks if c not in CELL_CHECKS and c not in GRID_CHECKS]
            if unknown:
                raise ValueError("unknown checks: %s" % ", ".join(unknown))
        if args.jobs < 1:
            raise ValueError("--jobs must be >= 1")
    except ValueError as e:
        parser.error(str(e))

    tasks = build_tasks(p_range, q_range, a_range, b_range, checks, args.max_degree)
    records = run(tasks, jobs=args.jobs)

    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        if records:
            print(format_text(records))
        else:
            print("no checks selected")
    return 1 if any(r["status"] == "fail" for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
