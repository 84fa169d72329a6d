"""Weight modules for classical and quantum sl(2).

Constructors for the finite-dimensional modules F_n (classical e/f/h and
quantum E/F/K actions), truncated Verma modules, and the Rasskazova
family V(beta, lambda, n), together with a machine check of the defining
algebra relations on every constructed module.

A module is a finite ordered basis with weight labels and sparse
generator matrices over an exact scalar ring: Fraction for classical
modules, LaurentPoly for quantum ones.  Modules are immutable after
construction and every operation here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qarith import LaurentPoly, q_int

CLASSICAL_GENERATORS = ("e", "f", "h")
QUANTUM_GENERATORS = ("E", "F", "K", "Kinv")

# weight shift of each generator: nonzero entries of its matrix connect
# basis vectors whose weights differ by exactly this amount
GENERATOR_SHIFT = {"e": 2, "E": 2, "f": -2, "F": -2, "h": 0, "K": 0, "Kinv": 0}


@dataclass(frozen=True)
class Label:
    """Basis label; ``kind`` is one of findim/verma/rasskazova/tensor.

    findim and verma labels carry a single index k (k = 0 is the highest
    weight vector); rasskazova labels carry (i, j); tensor labels carry
    the pair of constituent labels.
    """

    kind: str
    index: tuple

    @staticmethod
    def findim(k: int) -> "Label":
        return Label("findim", (k,))

    @staticmethod
    def verma(k: int) -> "Label":
        return Label("verma", (k,))

    @staticmethod
    def rasskazova(i: int, j: int) -> "Label":
        return Label("rasskazova", (i, j))

    @staticmethod
    def tensor(a: "Label", b: "Label") -> "Label":
        return Label("tensor", (a, b))

    def __str__(self):
        if self.kind in ("findim", "verma"):
            return f"w_{self.index[0]}"
        if self.kind == "rasskazova":
            i, j = self.index
            return f"w^{i}_{j}"
        a, b = self.index
        return f"{a}*{b}"


class WeightModule:
    """Graded basis with weight labels and sparse generator actions.

    ``action[g]`` maps a column label to the sparse column
    ``{row label: scalar}`` of the matrix of g.  ``boundary`` lists basis
    vectors whose image under some generator was clipped by truncating
    an infinite module; relation checks skip them.
    """

    __slots__ = ("flavor", "name", "basis", "weights", "action", "boundary", "_pos")

    def __init__(self, flavor, name, basis, weights, action, boundary=()):
        if flavor not in ("classical", "quantum"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.name = name
        self.basis = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis labels must be pairwise distinct")
        self.weights = dict(weights)
        self.action = {g: {c: dict(col) for c, col in mat.items()} for g, mat in action.items()}
        self.boundary = frozenset(boundary)
        self._pos = {lab: i for i, lab in enumerate(self.basis)}
        self._validate()

    @property
    def generators(self):
        return CLASSICAL_GENERATORS if self.flavor == "classical" else QUANTUM_GENERATORS

    @property
    def dim(self) -> int:
        return len(self.basis)

    def position(self, label: Label) -> int:
        return self._pos[label]

    def weight(self, label: Label):
        return self.weights[label]

    def zero_scalar(self):
        return Fraction(0) if self.flavor == "classical" else LaurentPoly()

    def one_scalar(self):
        return Fraction(1) if self.flavor == "classical" else LaurentPoly({0: 1})

    def column(self, gen: str, label: Label) -> dict:
        """Sparse image of a basis vector under a generator."""
        return self.action[gen].get(label, {})

    def _validate(self):
        expected = set(self.generators)
        if set(self.action) != expected:
            raise ValueError(f"{self.name}: generators {set(self.action)} != {expected}")
        for g, mat in self.action.items():
            shift = GENERATOR_SHIFT[g]
            for col, entries in mat.items():
                if col not in self._pos:
                    raise ValueError(f"{self.name}: unknown column label {col}")
                for row, c in entries.items():
                    if row not in self._pos:
                        raise ValueError(f"{self.name}: unknown row label {row}")
                    if not c:
                        raise ValueError(f"{self.name}: stored zero at ({row}, {col}) of {g}")
                    if self.weights[row] != self.weights[col] + shift:
                        raise ValueError(
                            f"{self.name}: {g} entry ({row}, {col}) breaks the "
                            f"weight grading"
                        )
        # the diagonal generator must act by the declared weights
        diag = "h" if self.flavor == "classical" else "K"
        for lab in self.basis:
            col = self.column(diag, lab)
            if self.flavor == "classical":
                want = {lab: self.weights[lab]} if self.weights[lab] else {}
            else:
                want = {lab: LaurentPoly({self.weights[lab]: 1})}
            if col != want:
                raise ValueError(f"{self.name}: {diag} is not diagonal with the declared weights at {lab}")

    def __repr__(self):
        return f"<WeightModule {self.name} dim={self.dim} {self.flavor}>"


class Vector:
    """Sparse linear combination of basis elements with exact entries."""

    __slots__ = ("module", "entries", "note")

    def __init__(self, module: WeightModule, entries: dict, note: str | None = None):
        self.module = module
        self.entries = {lab: c for lab, c in entries.items() if c}
        for lab in self.entries:
            if lab not in module._pos:
                raise ValueError(f"label {lab} does not belong to {module.name}")
        self.note = note

    @classmethod
    def zero(cls, module: WeightModule) -> "Vector":
        return cls(module, {})

    @classmethod
    def basis_vector(cls, module: WeightModule, label: Label) -> "Vector":
        return cls(module, {label: module.one_scalar()})

    def is_zero(self) -> bool:
        return not self.entries

    def items_in_order(self):
        """(label, scalar) pairs in ambient basis order."""
        return sorted(self.entries.items(), key=lambda kv: self.module.position(kv[0]))

    def scaled(self, c) -> "Vector":
        return Vector(self.module, {lab: x * c for lab, x in self.entries.items()})

    def __add__(self, other: "Vector") -> "Vector":
        out = dict(self.entries)
        for lab, c in other.entries.items():
            s = out.get(lab, self.module.zero_scalar()) + c
            if s:
                out[lab] = s
            else:
                out.pop(lab, None)
        return Vector(self.module, out)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + other.scaled(-self.module.one_scalar())

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for lab, c in self.items_in_order():
            cs = str(c)
            if " " in cs or "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{lab}" if cs != "1" else str(lab))
        return " + ".join(parts)

    def __repr__(self):
        return f"Vector({self})"


def apply(module: WeightModule, gen: str, x: Vector) -> Vector:
    """Exact sparse matrix-vector product g.x."""
    if gen not in module.action:
        raise ValueError(f"generator {gen!r} not defined on {module.flavor} module {module.name}")
    if x.module is not module:
        raise ValueError(f"vector lives in {x.module.name}, not {module.name}")
    out: dict = {}
    zero = module.zero_scalar()
    for lab, c in x.entries.items():
        for row, a in module.column(gen, lab).items():
            s = out.get(row, zero) + a * c
            if s:
                out[row] = s
            else:
                out.pop(row, None)
    return Vector(module, out)


# -- constructors ------------------------------------------------------------


def finite_dim_classical(n: int) -> WeightModule:
    """The (n+1)-dimensional simple module with basis w_0 .. w_n.

    h.w_k = (n-2k) w_k, e.w_k = (n-k+1) w_{k-1}, f.w_k = (k+1) w_{k+1}.
    """
    if n < 0:
        raise ValueError(f"finite-dimensional module needs n >= 0, got {n}")
    basis = [Label.findim(k) for k in range(n + 1)]
    weights = {lab: Fraction(n - 2 * k) for k, lab in enumerate(basis)}
    e = {basis[k]: {basis[k - 1]: Fraction(n - k + 1)} for k in range(1, n + 1)}
    f = {basis[k]: {basis[k + 1]: Fraction(k + 1)} for k in range(n)}
    h = {lab: {lab: w} for lab, w in weights.items() if w}
    return WeightModule("classical", f"F(n={n})", basis, weights, {"e": e, "f": f, "h": h})


def finite_dim_quantum(n: int) -> WeightModule:
    """Quantum analogue of finite_dim_classical.

    K.w_k = v^(n-2k) w_k, E.w_k = [n-k+1] w_{k-1}, F.w_k = [k+1] w_{k+1}.
    """
    if n < 0:
        raise ValueError(f"finite-dimensional module needs n >= 0, got {n}")
    basis = [Label.findim(k) for k in range(n + 1)]
    weights = {lab: n - 2 * k for k, lab in enumerate(basis)}
    E = {basis[k]: {basis[k - 1]: q_int(n - k + 1)} for k in range(1, n + 1)}
    F = {basis[k]: {basis[k + 1]: q_int(k + 1)} for k in range(n)}
    K = {lab: {lab: LaurentPoly({w: 1})} for lab, w in weights.items()}
    Kinv = {lab: {lab: LaurentPoly({-w: 1})} for lab, w in weights.items()}
    return WeightModule(
        "quantum", f"Fq(n={n})", basis, weights, {"E": E, "F": F, "K": K, "Kinv": Kinv}
    )


def verma_classical(hw, depth: int) -> WeightModule:
    """Verma module of highest weight hw, truncated below depth.

    f acts freely (f.w_k = w_{k+1}) with w_{depth+1} clipped, so w_depth
    is marked as the truncation boundary; e.w_k = k(hw-k+1) w_{k-1}.
    """
    if depth < 1:
        raise ValueError(f"Verma truncation depth must be >= 1, got {depth}")
    hw = Fraction(hw)
    basis = [Label.verma(k) for k in range(depth + 1)]
    weights = {lab: hw - 2 * k for k, lab in enumerate(basis)}
    e = {}
    for k in range(1, depth + 1):
        c = k * (hw - k + 1)
        if c:
            e[basis[k]] = {basis[k - 1]: c}
    f = {basis[k]: {basis[k + 1]: Fraction(1)} for k in range(depth)}
    h = {lab: {lab: w} for lab, w in weights.items() if w}
    name = f"M(hw={hw};depth={depth})"
    return WeightModule("classical", name, basis, weights, {"e": e, "f": f, "h": h}, boundary=[basis[depth]])


@dataclass(frozen=True)
class RasskazovaParams:
    """Parameters (beta, lambda, n) plus the retained window j in [-J, J]."""

    beta: Fraction
    lam: Fraction
    n: int
    window: int

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.n < 1:
            raise ValueError(f"Rasskazova family needs n >= 1, got {self.n}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")


def rasskazova(p: RasskazovaParams) -> WeightModule:
    """The module V(beta, lambda, n) on basis {w^i_j}, truncated to |j| <= J.

    h.w^i_j = (2j+beta) w^i_j
    e.w^i_j = w^i_{j+1}                                        for j >= 0
    e.w^i_j = (lam + j*beta + j(j+1)) w^i_{j+1} + w^{i-1}_{j+1}  for j < 0
    f.w^i_j = -(lam + (j-1)*beta + j(j-1)) w^i_{j-1} - w^{i-1}_{j-1}  for j > 0
    f.w^i_j = -w^i_{j-1}                                       for j <= 0
    with the convention w^0_j = 0.  Vectors with |j| = J sit on the
    truncation boundary.
    """
    beta, lam, n, J = p.beta, p.lam, p.n, p.window
    basis = [Label.rasskazova(i, j) for i in range(1, n + 1) for j in range(-J, J + 1)]
    weights = {lab: 2 * lab.index[1] + beta for lab in basis}
    one = Fraction(1)

    e: dict = {}
    f: dict = {}
    for lab in basis:
        i, j = lab.index
        if j + 1 <= J:
            col: dict = {}
            if j >= 0:
                col[Label.rasskazova(i, j + 1)] = one
            else:
                c = lam + j * beta + j * (j + 1)
                if c:
                    col[Label.rasskazova(i, j + 1)] = c
                if i > 1:
                    col[Label.rasskazova(i - 1, j + 1)] = one
            if col:
                e[lab] = col
        if j - 1 >= -J:
            col = {}
            if j > 0:
                c = -(lam + (j - 1) * beta + j * (j - 1))
                if c:
                    col[Label.rasskazova(i, j - 1)] = c
                if i > 1:
                    col[Label.rasskazova(i - 1, j - 1)] = -one
            else:
                col[Label.rasskazova(i, j - 1)] = -one
            if col:
                f[lab] = col
    h = {lab: {lab: w} for lab, w in weights.items() if w}
    boundary = [lab for lab in basis if abs(lab.index[1]) == J]
    name = f"V(beta={beta};lambda={lam};n={n};J={J})"
    return WeightModule("classical", name, basis, weights, {"e": e, "f": f, "h": h}, boundary=boundary)


# -- relation checking ----------------------------------------------------------


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    label: Label
    defect: tuple  # ((label, scalar), ...) in ambient order, never empty


@dataclass(frozen=True)
class RelationReport:
    """Exact pass/fail record of the defining relations on a module.

    Zero failures means every checked relation holds exactly on every
    non-boundary basis vector; ``excluded`` lists the truncation-boundary
    vectors that were skipped.
    """

    module: str
    flavor: str
    relations: tuple[str, ...]
    checked: tuple[Label, ...]
    failures: tuple[RelationFailure, ...]
    excluded: tuple[Label, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


CLASSICAL_RELATIONS = ("[h,e]=2e", "[h,f]=-2f", "[e,f]=h")
QUANTUM_RELATIONS = ("K Kinv=1", "K E Kinv=v^2 E", "K F Kinv=v^-2 F", "[E,F]=[h]_v")


def check_relations(m: WeightModule) -> RelationReport:
    """Verify the defining sl(2) (or U_v(sl2)) relations on every
    non-boundary basis vector with exact arithmetic.

    Failures are reported as data (relation name, basis vector, exact
    defect), never raised.
    """
    checked = []
    failures = []
    excluded = tuple(lab for lab in m.basis if lab in m.boundary)

    def ap(gen, x):
        return apply(m, gen, x)

    for lab in m.basis:
        if lab in m.boundary:
            continue
        checked.append(lab)
        x = Vector.basis_vector(m, lab)
        if m.flavor == "classical":
            ex, fx, hx = ap("e", x), ap("f", x), ap("h", x)
            defects = (
                ("[h,e]=2e", ap("h", ex) - ap("e", hx) - ex.scaled(Fraction(2))),
                ("[h,f]=-2f", ap("h", fx) - ap("f", hx) + fx.scaled(Fraction(2))),
                ("[e,f]=h", ap("e", fx) - ap("f", ex) - hx),
            )
        else:
            vv = LaurentPoly({2: 1})
            vvinv = LaurentPoly({-2: 1})
            Ex, Fx = ap("E", x), ap("F", x)
            kinv_x = ap("Kinv", x)
            qw = x.scaled(q_int(m.weight(lab)))
            defects = (
                ("K Kinv=1", ap("K", kinv_x) - x),
                ("K E Kinv=v^2 E", ap("K", ap("E", kinv_x)) - Ex.scaled(vv)),
                ("K F Kinv=v^-2 F", ap("K", ap("F", kinv_x)) - Fx.scaled(vvinv)),
                ("[E,F]=[h]_v", ap("E", Fx) - ap("F", Ex) - qw),
            )
        for relname, d in defects:
            if not d.is_zero():
                failures.append(RelationFailure(relname, lab, tuple(d.items_in_order())))

    relations = CLASSICAL_RELATIONS if m.flavor == "classical" else QUANTUM_RELATIONS
    return RelationReport(
        module=m.name,
        flavor=m.flavor,
        relations=relations,
        checked=tuple(checked),
        failures=tuple(failures),
        excluded=excluded,
    )


def corrupt_one_entry(m: WeightModule) -> WeightModule:
    """Copy of m with one raising-operator matrix entry perturbed by +1.

    Diagnostic helper: the perturbed module must fail check_relations,
    which exercises the defect reporting and the CLI exit-status path.
    """
    raising = "e" if m.flavor == "classical" else "E"
    mat = m.action[raising]
    for col in m.basis:
        if col in mat and mat[col]:
            row = min(mat[col], key=m.position)
            action = {g: {c: dict(entries) for c, entries in gmat.items()} for g, gmat in m.action.items()}
            action[raising][col][row] = action[raising][col][row] + m.one_scalar()
            return WeightModule(
                m.flavor, m.name + "+fault", m.basis, m.weights, action, boundary=m.boundary
            )
    raise ValueError(f"{m.name} has no raising entries to perturb")
