"""The wreath product of a cyclic group of order m with the symmetric group.

Elements are pseudo-permutation matrices: row i carries zeta^(weights[i])
in column tau[i] (1-indexed), where zeta is a primitive m-th root of unity.
The order of the group is m^n * n!.

Two actions on polynomials are provided.  The classical one substitutes
x_j <- zeta^(a_j) * x_tau(j).  The quasi-symmetrizing one moves a
monomial's support through tau, re-sorts it, re-attaches the exponent list
in variable order, and multiplies by the global weight zeta^(sum a_i)
unless every exponent is divisible by m.  ``group_mul`` composes elements
so that act(group_mul(g, h), p) == act(g, act(h, p)) for both actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .errors import ResourceLimitError
from .linalg import kernel_dimension
from .polynomials import Polynomial, exponent_vectors, promote_to_cyclotomic
from .scalars import Cyclotomic

DEFAULT_MAX_GROUP_ORDER = 10_000
DEFAULT_MAX_MATRIX_ENTRIES = 1_000_000


@dataclass(frozen=True)
class GroupElement:
    n: int
    m: int
    tau: tuple  # 1-indexed images: row i has its nonzero entry in column tau[i-1]
    weights: tuple  # exponents of zeta, one per row

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if sorted(self.tau) != list(range(1, self.n + 1)):
            raise ValueError(f"tau={self.tau} is not a permutation of 1..{self.n}")
        if len(self.weights) != self.n or any(
            not 0 <= a < self.m for a in self.weights
        ):
            raise ValueError(f"weights={self.weights} not residues mod {self.m}")

    def __str__(self):
        return render_group_element(self)


def identity(n: int, m: int) -> GroupElement:
    return GroupElement(n, m, tuple(range(1, n + 1)), (0,) * n)


def transposition(n: int, m: int, i: int) -> GroupElement:
    """The adjacent transposition swapping i and i+1, with zero weights."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range 1..{n - 1}")
    tau = list(range(1, n + 1))
    tau[i - 1], tau[i] = tau[i], tau[i - 1]
    return GroupElement(n, m, tuple(tau), (0,) * n)


def diagonal_generator(n: int, m: int, j: int = 1) -> GroupElement:
    """The diagonal element with zeta in place j and ones elsewhere."""
    if not 1 <= j <= n:
        raise ValueError(f"diagonal place {j} out of range 1..{n}")
    weights = [0] * n
    weights[j - 1] = 1 % m
    return GroupElement(n, m, tuple(range(1, n + 1)), tuple(weights))


def generators(n: int, m: int) -> list:
    """Adjacent transpositions plus (when m > 1) the first diagonal generator."""
    gens = [transposition(n, m, i) for i in range(1, n)]
    if m > 1:
        gens.append(diagonal_generator(n, m, 1))
    return gens


def group_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element acting as g after h (matrix product matrix(h)*matrix(g))."""
    if (g.n, g.m) != (h.n, h.m):
        raise ValueError("group parameter mismatch")
    tau = tuple(g.tau[h.tau[j] - 1] for j in range(g.n))
    weights = tuple((h.weights[j] + g.weights[h.tau[j] - 1]) % g.m for j in range(g.n))
    return GroupElement(g.n, g.m, tau, weights)


def inverse(g: GroupElement) -> GroupElement:
    tau_inv = [0] * g.n
    for i, image in enumerate(g.tau):
        tau_inv[image - 1] = i + 1
    weights = tuple((-g.weights[tau_inv[j] - 1]) % g.m for j in range(g.n))
    return GroupElement(g.n, g.m, tuple(tau_inv), weights)


def element_weight(g: GroupElement) -> Cyclotomic:
    """Product of the nonzero matrix entries: zeta^(sum of weights)."""
    return Cyclotomic.zeta(g.m, sum(g.weights))


def to_matrix(g: GroupElement) -> list:
    zero = Cyclotomic.zero(g.m)
    rows = [[zero] * g.n for _ in range(g.n)]
    for i in range(g.n):
        rows[i][g.tau[i] - 1] = Cyclotomic.zeta(g.m, g.weights[i])
    return rows


def enumerate_group(n: int, m: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> list:
    order = m**n * factorial(n)
    if order > max_order:
        raise ResourceLimitError(
            f"group order {order} exceeds enumeration cap {max_order}"
        )
    out = []
    for tau in permutations(range(1, n + 1)):
        for weights in product(range(m), repeat=n):
            out.append(GroupElement(n, m, tau, weights))
    return out


def render_group_element(g: GroupElement) -> str:
    tau = ",".join(str(t) for t in g.tau)
    weights = ",".join(str(a) for a in g.weights)
    return f"tau={tau};weights={weights}"


def parse_group_element(text: str, n: int, m: int) -> GroupElement:
    parts = dict()
    for field in text.strip().split(";"):
        if "=" not in field:
            raise ValueError(f"cannot parse group element {text!r}")
        key, _, value = field.partition("=")
        parts[key.strip()] = tuple(int(tok) for tok in value.split(","))
    if set(parts) != {"tau", "weights"}:
        raise ValueError(f"group element needs tau and weights: {text!r}")
    return GroupElement(n, m, parts["tau"], parts["weights"])


# ---- actions ------------------------------------------------------------

def _prepare(g: GroupElement, p: Polynomial) -> Polynomial:
    if p.nvars != g.n:
        raise ValueError(f"polynomial has {p.nvars} variables, element acts on {g.n}")
    return promote_to_cyclotomic(p, g.m)


def classical_act(g: GroupElement, p: Polynomial) -> Polynomial:
    """Substitute x_j <- zeta^(weights[j]) * x_tau(j) in p."""
    p = _prepare(g, p)
    acc: dict = {}
    for nu, coeff in p.terms.items():
        mu = [0] * g.n
        phase = 0
        for j in range(g.n):
            if nu[j]:
                mu[g.tau[j] - 1] = nu[j]
                phase += g.weights[j] * nu[j]
        factor = Cyclotomic.zeta(g.m, phase)
        key = tuple(mu)
        value = acc.get(key, 0) + coeff * factor
        if value:
            acc[key] = value
        elif key in acc:
            del acc[key]
    return Polynomial(g.n, acc)


def quasi_act(g: GroupElement, p: Polynomial) -> Polynomial:
    """The quasi-symmetrizing action, extended linearly over terms.

    For a monomial with support S and exponent list K (read along S in
    variable order): the image support is the sorted image of S under tau,
    K is re-attached to it in order, and the coefficient picks up the
    global weight zeta^(sum of all weights) unless every entry of K is
    divisible by m.
    """
    p = _prepare(g, p)
    w_exponent = sum(g.weights) % g.m
    acc: dict = {}
    for nu, coeff in p.terms.items():
        support = [j for j in range(g.n) if nu[j]]
        exponents = [nu[j] for j in support]
        image = sorted(g.tau[j] - 1 for j in support)
        mu = [0] * g.n
        for pos, e in zip(image, exponents):
            mu[pos] = e
        if any(e % g.m for e in exponents):
            factor = Cyclotomic.zeta(g.m, w_exponent)
        else:
            factor = Cyclotomic.one(g.m)
        key = tuple(mu)
        value = acc.get(key, 0) + coeff * factor
        if value:
            acc[key] = value
        elif key in acc:
            del acc[key]
    return Polynomial(g.n, acc)


def is_quasi_invariant(p: Polynomial, n: int, m: int) -> bool:
    """True iff every group generator fixes p under the quasi action."""
    if p.nvars != n:
        raise ValueError(f"polynomial has {p.nvars} variables, expected {n}")
    promoted = promote_to_cyclotomic(p, m)
    return all(quasi_act(g, promoted) == promoted for g in generators(n, m))


def fixed_space_dimension(
    n: int,
    m: int,
    degree: int,
    action: str = "quasi",
    max_entries: int = DEFAULT_MAX_MATRIX_ENTRIES,
) -> int:
    """Dimension of the invariant subspace of the degree-d component,
    computed as the kernel rank of (g - id) stacked over the generators."""
    if action not in ("quasi", "classical"):
        raise ValueError(f"unknown action {action!r}")
    act = quasi_act if action == "quasi" else classical_act
    monomials = exponent_vectors(n, degree)
    index = {nu: i for i, nu in enumerate(monomials)}
    gens = generators(n, m)
    if len(gens) * len(monomials) * len(monomials) > max_entries:
        raise ResourceLimitError(
            f"fixed-space system for n={n}, m={m}, degree={degree} exceeds cap"
        )
    one = Fraction(1)
    unit = Cyclotomic.one(m)
    rows = []
    for g in gens:
        for i, nu in enumerate(monomials):
            image = act(g, Polynomial.monomial(nu, one))
            row = [0] * len(monomials)
            for mu, coeff in image.terms.items():
                row[index[mu]] = coeff
            row[i] = row[i] - unit
            if any(row):
                rows.append(row)
    return kernel_dimension(rows, len(monomials))
