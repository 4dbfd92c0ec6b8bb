"""The integral group ring, descent ring, affine descent module, and the
brute-force verification suites tying them to the face monoids.

The descent ring is spanned by x_J = sum of all w with descent set inside J
(J inside the finite simple system); the affine descent module is spanned by
the analogous affine sums x~_J for nonempty J inside the extended simple
system.  Both are handled through their class-indicator bases (y_J = sum
over the class with descent set exactly J), with boolean-lattice Moebius
inversion translating between the two.

Face sums enter through orbit sums sigma_J (all finite faces of color J)
and sigma~_J (all torus faces of color J).  The map psi sends a W-invariant
face sum to the group ring by replacing each face with its canonical group
element; on invariants it reverses products on the finite side and
intertwines the module structures.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from .errors import (
    FamilyMismatchError,
    NotInSpanError,
    ValidationError,
)
from .weyl import (
    ColorSet,
    Family,
    WeylElement,
    affine_descent_set,
    descent_set,
    enumerate_group,
    identity,
)
from . import coxfaces, torusfaces


# ---------------------------------------------------------------------------
# cached per-family group data


class _GroupData:
    def __init__(self, family: Family):
        self.family = family
        self.elements = list(enumerate_group(family))
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.descents = [frozenset(descent_set(w).indices) for w in self.elements]
        self.affine_descents = [
            frozenset(affine_descent_set(w).indices) for w in self.elements
        ]
        self._mult = None

    @property
    def mult(self):
        if self._mult is None:
            from .weyl import multiply as wmult

            idx = self.index
            self._mult = [
                [idx[wmult(u, v)] for v in self.elements] for u in self.elements
            ]
        return self._mult


_group_cache: Dict[Family, _GroupData] = {}


def _data(family: Family) -> _GroupData:
    if family not in _group_cache:
        _group_cache[family] = _GroupData(family)
    return _group_cache[family]


# ---------------------------------------------------------------------------
# group ring


@dataclass(frozen=True)
class GroupRingElement:
    family: Family
    coeffs: Tuple[Tuple[WeylElement, int], ...]

    @staticmethod
    def from_dict(family: Family, mapping) -> "GroupRingElement":
        items = tuple(
            sorted(((w, c) for w, c in mapping.items() if c != 0),
                   key=lambda wc: wc[0].values)
        )
        for w, _ in items:
            if w.family != family:
                raise FamilyMismatchError("coefficient key from the wrong group")
        return GroupRingElement(family, items)

    def as_dict(self):
        return dict(self.coeffs)

    def __add__(self, other):
        if self.family != other.family:
            raise FamilyMismatchError("family mismatch")
        out = self.as_dict()
        for w, c in other.coeffs:
            out[w] = out.get(w, 0) + c
        return GroupRingElement.from_dict(self.family, out)

    def __sub__(self, other):
        return self + GroupRingElement.from_dict(
            other.family, {w: -c for w, c in other.coeffs}
        )

    def is_zero(self):
        return not self.coeffs


def ring_identity(family: Family) -> GroupRingElement:
    return GroupRingElement.from_dict(family, {identity(family): 1})


def multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product in the group ring."""
    if a.family != b.family:
        raise FamilyMismatchError("family mismatch")
    data = _data(a.family)
    table = data.mult
    idx = data.index
    acc = {}
    for u, cu in a.coeffs:
        row = table[idx[u]]
        for v, cv in b.coeffs:
            k = row[idx[v]]
            acc[k] = acc.get(k, 0) + cu * cv
    return GroupRingElement.from_dict(
        a.family, {data.elements[k]: c for k, c in acc.items()}
    )


# ---------------------------------------------------------------------------
# descent bases


def _as_index_set(index) -> FrozenSet[int]:
    if isinstance(index, ColorSet):
        return frozenset(index.indices)
    return frozenset(index)


def _check_index(kind: str, J: FrozenSet[int], family: Family) -> None:
    finite = frozenset(family.finite_indices())
    affine = frozenset(family.affine_indices())
    if kind in ("x", "y"):
        if not J <= finite:
            raise ValidationError(
                f"{kind}-index {sorted(J)} must lie inside the finite range "
                f"{sorted(finite)}"
            )
    elif kind in ("xt", "yt"):
        if not J or not J <= affine:
            raise ValidationError(
                f"{kind}-index must be a nonempty subset of {sorted(affine)}"
            )
        if kind == "yt" and J == affine:
            raise ValidationError(
                "no element has every affine descent; this class sum is empty"
            )
    else:
        raise ValidationError(f"unknown basis kind {kind!r}")


def basis_element(kind: str, index, family: Family) -> GroupRingElement:
    """x_J, y_J, x~_J (kind 'xt') or y~_J (kind 'yt')."""
    J = _as_index_set(index)
    _check_index(kind, J, family)
    data = _data(family)
    sets = data.descents if kind in ("x", "y") else data.affine_descents
    if kind in ("x", "xt"):
        keep = [w for w, D in zip(data.elements, sets) if D <= J]
    else:
        keep = [w for w, D in zip(data.elements, sets) if D == J]
    return GroupRingElement.from_dict(family, {w: 1 for w in keep})


def express_in_basis(a: GroupRingElement, kind: str):
    """Expand in the x (kind 'x') or x~ (kind 'xt') basis.

    Succeeds iff the element is constant on (affine) descent classes;
    otherwise raises NotInSpanError with a witness pair of group elements.
    Returns a mapping frozenset -> nonzero integer coefficient.
    """
    if kind not in ("x", "xt"):
        raise ValidationError("expansions are over kind 'x' or 'xt'")
    family = a.family
    data = _data(family)
    sets = data.descents if kind == "x" else data.affine_descents
    coeffs = a.as_dict()
    class_value: Dict[FrozenSet[int], int] = {}
    class_rep: Dict[FrozenSet[int], WeylElement] = {}
    for w, D in zip(data.elements, sets):
        v = coeffs.get(w, 0)
        if D in class_value:
            if class_value[D] != v:
                raise NotInSpanError(
                    f"not constant on the descent class {sorted(D)}",
                    witness=(class_rep[D], w),
                )
        else:
            class_value[D] = v
            class_rep[D] = w
    universe = (
        frozenset(family.finite_indices())
        if kind == "x"
        else frozenset(family.affine_indices())
    )
    expansion = {}
    for r in range(len(universe) + 1):
        for I in itertools.combinations(sorted(universe), r):
            I = frozenset(I)
            if kind == "xt" and not I:
                continue  # x~ over the empty set is the empty sum
            e = 0
            rest = sorted(universe - I)
            for s in range(len(rest) + 1):
                for extra in itertools.combinations(rest, s):
                    J = I | frozenset(extra)
                    e += (-1) ** s * class_value.get(J, 0)
            if e:
                expansion[I] = e
    return expansion


def evaluate_expansion(expansion, kind: str, family: Family) -> GroupRingElement:
    total = GroupRingElement.from_dict(family, {})
    for I, c in expansion.items():
        term = basis_element(kind, I, family)
        total = total + GroupRingElement.from_dict(
            family, {w: c * k for w, k in term.coeffs}
        )
    return total


def y_from_x_conversion(family: Family):
    """Triangular transforms between the x- and y-type bases.

    Returns {'x_from_y': J -> [I, ...], 'y_from_x': J -> {I: sign}} over the
    finite index universe; the same shapes apply verbatim to the affine
    universe.  Also exposes the refinement relation linking the finite and
    affine class sums: y_J = y~_J + y~_{J + affine index}.
    """
    universe = sorted(family.finite_indices())
    x_from_y = {}
    y_from_x = {}
    for r in range(len(universe) + 1):
        for J in itertools.combinations(universe, r):
            Jset = frozenset(J)
            subs = [
                frozenset(c)
                for s in range(len(J) + 1)
                for c in itertools.combinations(J, s)
            ]
            x_from_y[Jset] = subs
            y_from_x[Jset] = {I: (-1) ** (len(Jset) - len(I)) for I in subs}
    return {
        "x_from_y": x_from_y,
        "y_from_x": y_from_x,
        "affine_refinement": lambda J: (
            frozenset(J),
            frozenset(J) | {family.affine_index},
        ),
    }


# ---------------------------------------------------------------------------
# formal face sums


@dataclass(frozen=True)
class FaceSum:
    """A finitely supported integer combination of faces (finite or torus)."""

    family: Family
    torus: bool
    coeffs: Tuple[Tuple[object, int], ...]

    @staticmethod
    def from_dict(family: Family, torus: bool, mapping) -> "FaceSum":
        items = tuple(
            sorted(
                ((f, c) for f, c in mapping.items() if c != 0),
                key=lambda fc: repr(fc[0]),
            )
        )
        return FaceSum(family, torus, items)

    def as_dict(self):
        return dict(self.coeffs)

    def __add__(self, other):
        if (self.family, self.torus) != (other.family, other.torus):
            raise FamilyMismatchError("incompatible face sums")
        out = self.as_dict()
        for f, c in other.coeffs:
            out[f] = out.get(f, 0) + c
        return FaceSum.from_dict(self.family, self.torus, out)


def orbit_sum(kind: str, index, family: Family) -> FaceSum:
    """sigma_J (kind 'sigma') or sigma~_J (kind 'sigmat')."""
    J = _as_index_set(index)
    color = ColorSet(family, J)
    if kind == "sigma":
        if family.affine_index in J:
            raise ValidationError("finite color sets exclude the affine index")
        faces = coxfaces.enumerate_faces(family, color)
        return FaceSum.from_dict(family, False, {F: 1 for F in faces})
    if kind == "sigmat":
        if not J:
            raise ValidationError("torus color sets are nonempty")
        faces = torusfaces.enumerate_torus_faces(family, color)
        return FaceSum.from_dict(family, True, {F: 1 for F in faces})
    raise ValidationError(f"unknown orbit sum kind {kind!r}")


def face_sum_product(s: FaceSum, t: FaceSum) -> FaceSum:
    """Bilinear extension of the Tits product / module action."""
    if t.torus:
        raise ValidationError("the right factor must be a finite face sum")
    if s.family != t.family:
        raise FamilyMismatchError("family mismatch")
    op = torusfaces.module_action if s.torus else coxfaces.tits_product
    acc = {}
    for F, cf in s.coeffs:
        for G, cg in t.coeffs:
            H = op(F, G)
            acc[H] = acc.get(H, 0) + cf * cg
    return FaceSum.from_dict(s.family, s.torus, acc)


def _generators(family: Family):
    n = family.rank
    gens = []
    if family.tag == "C":
        gens.append(WeylElement(family, (-1,) + tuple(range(2, n + 1))))
    for i in range(1, n):
        values = list(range(1, n + 1))
        values[i - 1], values[i] = values[i], values[i - 1]
        gens.append(WeylElement(family, tuple(values)))
    return gens


def is_invariant(s: FaceSum) -> bool:
    action = torusfaces.act if s.torus else coxfaces.act
    coeffs = s.as_dict()
    for g in _generators(s.family):
        for F, c in s.coeffs:
            if coeffs.get(action(g, F), 0) != c:
                return False
    return True


def _psi_unchecked(s: FaceSum) -> GroupRingElement:
    w_of = torusfaces.w_of_torus_face if s.torus else coxfaces.w_of_face
    acc = {}
    for F, c in s.coeffs:
        w = w_of(F)
        acc[w] = acc.get(w, 0) + c
    return GroupRingElement.from_dict(s.family, acc)


def psi(s: FaceSum) -> GroupRingElement:
    """Replace each face by its canonical group element (invariant sums only)."""
    if not is_invariant(s):
        raise ValidationError("psi is only defined on W-invariant face sums")
    return _psi_unchecked(s)


# ---------------------------------------------------------------------------
# structure tables


def _finite_color_subsets(family: Family):
    universe = sorted(family.finite_indices())
    for r in range(len(universe) + 1):
        for J in itertools.combinations(universe, r):
            yield frozenset(J)


def _torus_color_subsets(family: Family):
    universe = sorted(family.affine_indices())
    for r in range(1, len(universe) + 1):
        for J in itertools.combinations(universe, r):
            yield frozenset(J)


def _faces_by_color(family: Family):
    finite = {}
    for F in coxfaces.enumerate_faces(family):
        finite.setdefault(frozenset(coxfaces.color_set(F).indices), []).append(F)
    torus = {}
    for N in torusfaces.enumerate_torus_faces(family):
        torus.setdefault(frozenset(torusfaces.color_set(N).indices), []).append(N)
    return finite, torus


def _key(J) -> str:
    return json.dumps(sorted(J), separators=(",", ":"))


def solomon_table(family: Family) -> dict:
    """All x_I * x_J expanded back in the x basis."""
    entries = []
    for I in _finite_color_subsets(family):
        xI = basis_element("x", I, family)
        for J in _finite_color_subsets(family):
            product = multiply(xI, basis_element("x", J, family))
            expansion = express_in_basis(product, "x")
            entries.append(
                {
                    "I": sorted(I),
                    "J": sorted(J),
                    "coeffs": {_key(K): c for K, c in sorted(expansion.items(),
                                                            key=lambda kv: sorted(kv[0]))},
                }
            )
    return {"kind": "solomon", "family": family.tag, "rank": family.rank,
            "entries": entries}


def module_table(family: Family) -> dict:
    """The face-side structure table of the affine descent module.

    Entry (I, J) expands sigma~_J * sigma_I over the torus orbit sums; by the
    intertwining property the same coefficients expand x_I * x~_J over the
    x~ spanning set (including the full affine index set).
    """
    finite_orbits, torus_orbits = _faces_by_color(family)
    entries = []
    for I in _finite_color_subsets(family):
        GI = finite_orbits.get(I, [])
        for J in _torus_color_subsets(family):
            NJ = torus_orbits.get(J, [])
            counts = {}
            for N in NJ:
                for G in GI:
                    H = torusfaces.module_action(N, G)
                    counts[H] = counts.get(H, 0) + 1
            expansion = {}
            for K, orbit in torus_orbits.items():
                values = {counts.get(N, 0) for N in orbit}
                if len(values) != 1:
                    raise ValidationError(
                        f"orbit {sorted(K)} hit non-uniformly in entry "
                        f"({sorted(I)}, {sorted(J)})"
                    )
                (v,) = values
                if v:
                    expansion[K] = v
            entries.append(
                {
                    "I": sorted(I),
                    "J": sorted(J),
                    "coeffs": {_key(K): c for K, c in sorted(expansion.items(),
                                                            key=lambda kv: sorted(kv[0]))},
                }
            )
    return {"kind": "module", "family": family.tag, "rank": family.rank,
            "entries": entries}


# ---------------------------------------------------------------------------
# verification suites


def _report(suite, family, checks, failures):
    return {
        "suite": suite,
        "family": family.tag,
        "rank": family.rank,
        "checks": checks,
        "failures": failures,
        "pass": not failures,
    }


def _verify_solomon(family: Family, seed=0):
    checks, failures = 0, []
    for I in _finite_color_subsets(family):
        xI = basis_element("x", I, family)
        for J in _finite_color_subsets(family):
            checks += 1
            product = multiply(xI, basis_element("x", J, family))
            try:
                expansion = express_in_basis(product, "x")
            except NotInSpanError as exc:
                failures.append(
                    {"I": sorted(I), "J": sorted(J), "witness": str(exc.witness)}
                )
                continue
            if evaluate_expansion(expansion, "x", family) != product:
                failures.append({"I": sorted(I), "J": sorted(J),
                                 "witness": "expansion does not re-evaluate"})
    return _report("solomon", family, checks, failures)


def _verify_module(family: Family, seed=0):
    checks, failures = 0, []
    for I in _finite_color_subsets(family):
        xI = basis_element("x", I, family)
        for J in _torus_color_subsets(family):
            checks += 1
            product = multiply(xI, basis_element("xt", J, family))
            try:
                expansion = express_in_basis(product, "xt")
            except NotInSpanError as exc:
                failures.append(
                    {"I": sorted(I), "J": sorted(J), "witness": str(exc.witness)}
                )
                continue
            if evaluate_expansion(expansion, "xt", family) != product:
                failures.append({"I": sorted(I), "J": sorted(J),
                                 "witness": "expansion does not re-evaluate"})
    return _report("module", family, checks, failures)


def _verify_psi(family: Family, seed=0):
    checks, failures = 0, []
    finite_orbits, torus_orbits = _faces_by_color(family)

    def fail(tag, I, J):
        failures.append({"identity": tag, "I": sorted(I), "J": sorted(J)})

    sigma = {
        J: FaceSum.from_dict(family, False, {F: 1 for F in faces})
        for J, faces in finite_orbits.items()
    }
    sigmat = {
        J: FaceSum.from_dict(family, True, {F: 1 for F in faces})
        for J, faces in torus_orbits.items()
    }
    for J, s in sigma.items():
        checks += 1
        if psi(s) != basis_element("x", J, family):
            fail("psi(sigma_J) = x_J", J, J)
    for J, s in sigmat.items():
        checks += 1
        if psi(s) != basis_element("xt", J, family):
            fail("psi(sigma~_J) = x~_J", J, J)
    # For the product identities the invariance of the left side is implied
    # by the equality with the right side, so skip the per-sum check.
    for J, sJ in sigma.items():
        xJ = basis_element("x", J, family)
        for K, sK in sigma.items():
            checks += 1
            lhs = _psi_unchecked(face_sum_product(sJ, sK))
            rhs = multiply(basis_element("x", K, family), xJ)
            if lhs != rhs:
                fail("psi(sigma_J sigma_K) = x_K x_J", J, K)
    for K, sK in sigmat.items():
        xtK = basis_element("xt", K, family)
        for J, sJ in sigma.items():
            checks += 1
            lhs = _psi_unchecked(face_sum_product(sK, sJ))
            rhs = multiply(basis_element("x", J, family), xtK)
            if lhs != rhs:
                fail("psi(sigma~_K sigma_J) = x_J x~_K", J, K)
    return _report("psi", family, checks, failures)


def _verify_lrb(family: Family, seed=0):
    checks, failures = 0, []
    faces = list(coxfaces.enumerate_faces(family))
    unit = coxfaces.unit_face(family)
    chambers = [
        F for F in faces
        if frozenset(coxfaces.color_set(F).indices)
        == frozenset(family.finite_indices())
    ]
    for F in faces:
        checks += 1
        if coxfaces.tits_product(F, F) != F:
            failures.append({"law": "idempotent", "face": str(F)})
    for F in faces:
        for G in faces:
            checks += 1
            FG = coxfaces.tits_product(F, G)
            if coxfaces.tits_product(FG, F) != FG:
                failures.append({"law": "xyx=xy", "F": str(F), "G": str(G)})
    for C in chambers:
        for F in faces:
            checks += 1
            if coxfaces.tits_product(C, F) != C:
                failures.append({"law": "chamber absorption", "C": str(C)})
    for F in faces:
        checks += 1
        if coxfaces.tits_product(unit, F) != F or coxfaces.tits_product(F, unit) != F:
            failures.append({"law": "unit", "face": str(F)})
    # Associativity: exhaustive when tiny, seeded sample otherwise.
    if len(faces) <= 20:
        triples = itertools.product(faces, repeat=3)
    else:
        rng = random.Random(seed)
        triples = (
            (rng.choice(faces), rng.choice(faces), rng.choice(faces))
            for _ in range(2000)
        )
    for F, G, H in triples:
        checks += 1
        left = coxfaces.tits_product(coxfaces.tits_product(F, G), H)
        right = coxfaces.tits_product(F, coxfaces.tits_product(G, H))
        if left != right:
            failures.append({"law": "associativity", "F": str(F), "G": str(G),
                             "H": str(H)})
    # Sign-vector compatibility of the product.
    for F in faces:
        sF = coxfaces.sign_vector(F)
        for G in faces:
            checks += 1
            combined = coxfaces.compose_signs(sF, coxfaces.sign_vector(G))
            if coxfaces.sign_vector(coxfaces.tits_product(F, G)) != combined:
                failures.append({"law": "sign composition", "F": str(F),
                                 "G": str(G)})
    return _report("lrb", family, checks, failures)


def _verify_euler(family: Family, seed=0):
    total = 0
    count = 0
    for N in torusfaces.enumerate_torus_faces(family):
        total += (-1) ** (len(torusfaces.color_set(N)) - 1)
        count += 1
    failures = [] if total == 0 else [{"euler_sum": total}]
    return _report("euler", family, count, failures)


def _verify_counts(family: Family, seed=0):
    checks, failures = 0, []
    data = _data(family)
    order = family.group_order()
    chambers = list(
        coxfaces.enumerate_faces(
            family, ColorSet(family, frozenset(family.finite_indices()))
        )
    )
    checks += 1
    if len(chambers) != order:
        failures.append({"check": "chamber count", "got": len(chambers)})
    maximal = [
        N for N in torusfaces.enumerate_torus_faces(family)
        if torusfaces.is_maximal(N)
    ]
    checks += 1
    if len(maximal) != order:
        failures.append({"check": "maximal torus faces", "got": len(maximal)})
    finite_orbits, torus_orbits = _faces_by_color(family)
    for J in _finite_color_subsets(family):
        checks += 1
        images = [coxfaces.w_of_face(F) for F in finite_orbits.get(J, [])]
        target = {w for w, D in zip(data.elements, data.descents) if D <= J}
        if len(images) != len(set(images)) or set(images) != target:
            failures.append({"check": "finite descent bijection", "J": sorted(J)})
    for J in _torus_color_subsets(family):
        checks += 1
        images = [torusfaces.w_of_torus_face(N) for N in torus_orbits.get(J, [])]
        target = {
            w for w, D in zip(data.elements, data.affine_descents) if D <= J
        }
        if len(images) != len(set(images)) or set(images) != target:
            failures.append({"check": "affine descent bijection", "J": sorted(J)})
    if family.tag == "A":
        import math

        n = family.rank
        for J in _finite_color_subsets(family):
            checks += 1
            cuts = [0] + sorted(J) + [n]
            sizes = [b - a for a, b in zip(cuts, cuts[1:])]
            multinomial = math.factorial(n)
            for s in sizes:
                multinomial //= math.factorial(s)
            if len(finite_orbits.get(J, [])) != multinomial:
                failures.append({"check": "orbit size", "J": sorted(J)})
    return _report("counts", family, checks, failures)


def _verify_oracle(family: Family, seed=0):
    """Cross-check the necklace action against the affine sign-vector model."""
    if family.tag != "A":
        raise ValidationError("the affine sign-vector oracle covers type A only")
    from . import affine_oracle as oracle

    checks, failures = 0, []
    necklaces = list(torusfaces.enumerate_torus_faces(family))
    faces = list(coxfaces.enumerate_faces(family))
    lifts = {}
    for N in necklaces:
        V = oracle.lift(N)
        lifts[N] = V
        checks += 1
        if oracle.project(V) != N:
            failures.append({"check": "project(lift(N)) = N", "N": str(N)})
        mu, w = oracle.w_of_affine_face(V)
        checks += 1
        if any(mu.coords) or w != torusfaces.w_of_torus_face(N):
            failures.append({"check": "locate canonical lift", "N": str(N)})
    for N in necklaces:
        V = lifts[N]
        for G in faces:
            checks += 1
            direct = torusfaces.module_action(N, G)
            via_oracle = oracle.project(oracle.oracle_act(V, G))
            if direct != via_oracle:
                failures.append(
                    {"check": "action equivalence", "N": str(N), "G": str(G)}
                )
                if len(failures) > 5:
                    return _report("oracle", family, checks, failures)
    # Translation equivariance over small coroot vectors, sampled pairs.
    n = family.rank
    mus = [
        oracle.CorootVector(coords)
        for coords in itertools.product(range(-2, 3), repeat=n)
        if sum(coords) == 0
    ]
    rng = random.Random(seed)
    pairs = [(rng.choice(necklaces), rng.choice(faces)) for _ in range(40)]
    for mu in mus:
        for N, G in pairs:
            V = lifts[N]
            checks += 1
            lhs = oracle.oracle_act(oracle.translate(V, mu), G)
            rhs = oracle.translate(oracle.oracle_act(V, G), mu)
            if lhs != rhs:
                failures.append(
                    {"check": "translation equivariance", "mu": list(mu.coords)}
                )
        # The located translation part must follow the shift as well.
        N, G = pairs[0]
        checks += 1
        got_mu, got_w = oracle.w_of_affine_face(oracle.translate(lifts[N], mu))
        if got_mu != mu or got_w != torusfaces.w_of_torus_face(N):
            failures.append({"check": "locate translate", "mu": list(mu.coords)})
    return _report("oracle", family, checks, failures)


_SUITES = {
    "solomon": _verify_solomon,
    "module": _verify_module,
    "psi": _verify_psi,
    "oracle": _verify_oracle,
    "lrb": _verify_lrb,
    "euler": _verify_euler,
    "counts": _verify_counts,
}


def verify(suite: str, family: Family, seed: int = 0) -> dict:
    if suite == "all":
        reports = [
            fn(family, seed)
            for name, fn in _SUITES.items()
            if not (name == "oracle" and family.tag != "A")
        ]
        return {
            "suite": "all",
            "family": family.tag,
            "rank": family.rank,
            "reports": reports,
            "pass": all(r["pass"] for r in reports),
        }
    if suite not in _SUITES:
        raise ValidationError(f"unknown suite {suite!r}")
    return _SUITES[suite](family, seed)
