"""Finite unital rings as immutable Cayley tables.

A ring of order n is stored as two n-by-n lookup tables over element
indices 0..n-1, together with the indices of 0 and 1.  All constructors
return validated tables; ``validate_ring`` can also be pointed at a raw
table to locate the first broken axiom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

DEFAULT_ORDER_CAP = 256


class RingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRingError(RingError):
    """A table failed ring-axiom validation."""

    def __init__(self, violation: AxiomViolation):
        super().__init__(str(violation))
        self.violation = violation


class NotPrimeError(RingError):
    pass


class OrderCapExceededError(RingError):
    pass


class NotIdempotentError(RingError):
    pass


class NotCentralError(RingError):
    pass


class PreconditionFailedError(RingError):
    """An operation's stated precondition does not hold for the input."""


@dataclass(frozen=True)
class AxiomViolation:
    """First broken ring axiom, with the elements that witness the break."""

    axiom: str
    witnesses: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witnesses}"


class RingTable:
    """A finite unital ring given by addition/multiplication lookup tables.

    Instances are immutable after construction and safe to share; derived
    data (validity, characteristic, element classification) is cached on
    first use.  Constructing a RingTable performs only structural checks;
    use :func:`validate_ring` to test the ring axioms.
    """

    __slots__ = ("order", "add", "mul", "neg", "zero", "one", "label", "_cache")

    def __init__(self, order, add, mul, zero, one, label="", neg=None):
        if order < 1:
            raise ValueError("order must be >= 1")
        add = tuple(tuple(row) for row in add)
        mul = tuple(tuple(row) for row in mul)
        for name, table in (("add", add), ("mul", mul)):
            if len(table) != order or any(len(row) != order for row in table):
                raise ValueError(f"{name} table is not {order}x{order}")
            if any(not (0 <= x < order) for row in table for x in row):
                raise ValueError(f"{name} table has entries out of range")
        if not (0 <= zero < order and 0 <= one < order):
            raise ValueError("zero/one out of range")
        if neg is None:
            # first additive inverse per element; 0 placeholder if a row
            # has none (validation will then report the broken axiom)
            neg = tuple(
                next((b for b in range(order) if add[a][b] == zero), 0)
                for a in range(order)
            )
        else:
            neg = tuple(neg)
            if len(neg) != order or any(not (0 <= x < order) for x in neg):
                raise ValueError("neg table malformed")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("RingTable is immutable")

    def __repr__(self) -> str:
        return f"RingTable({self.label!r}, order={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def power(self, a: int, k: int) -> int:
        """a**k by repeated multiplication; k = 0 gives the identity."""
        if k < 0:
            raise ValueError("negative exponent")
        x = self.one
        for _ in range(k):
            x = self.mul[x][a]
        return x

    def sum_elements(self, parts) -> int:
        s = self.zero
        for p in parts:
            s = self.add[s][p]
        return s

    def is_commutative(self) -> bool:
        cached = self._cache.get("commutative")
        if cached is None:
            mul = self.mul
            cached = all(
                mul[a][b] == mul[b][a]
                for a in self.elements
                for b in range(a + 1, self.order)
            )
            self._cache["commutative"] = cached
        return cached


def validate_ring(ring: RingTable) -> AxiomViolation | None:
    """Scan a table for the ring axioms; return the first violation or None.

    Per-element checks (identities, additive inverses) run first, then
    commutativity of addition over pairs, then the associativity and
    distributivity laws over triples in lexicographic order.
    """
    cached = ring._cache.get("violation", _UNSET)
    if cached is not _UNSET:
        return cached
    violation = _scan_axioms(ring)
    ring._cache["violation"] = violation
    return violation


_UNSET = object()


def _scan_axioms(ring: RingTable) -> AxiomViolation | None:
    n, add, mul = ring.order, ring.add, ring.mul
    z, o = ring.zero, ring.one
    rng = range(n)
    for a in rng:
        if add[z][a] != a or add[a][z] != a:
            return AxiomViolation("additive-identity", (a,))
        if all(add[a][b] != z for b in rng):
            return AxiomViolation("additive-inverse", (a,))
        if mul[o][a] != a or mul[a][o] != a:
            return AxiomViolation("multiplicative-identity", (a,))
    for a in rng:
        row = add[a]
        for b in range(a + 1, n):
            if row[b] != add[b][a]:
                return AxiomViolation("additive-commutativity", (a, b))
    for a in rng:
        add_a, mul_a = add[a], mul[a]
        for b in rng:
            ab_sum, ab_prod = add_a[b], mul_a[b]
            add_b, mul_b = add[b], mul[b]
            row_sum, row_prod = add[ab_sum], mul[ab_prod]
            for c in rng:
                if row_sum[c] != add_a[add_b[c]]:
                    return AxiomViolation("additive-associativity", (a, b, c))
                if row_prod[c] != mul_a[mul_b[c]]:
                    return AxiomViolation("multiplicative-associativity", (a, b, c))
                if mul_a[add_b[c]] != add[ab_prod][mul_a[c]]:
                    return AxiomViolation("distributivity", (a, b, c))
                if mul[add_a[b]][c] != add[mul_a[c]][mul_b[c]]:
                    return AxiomViolation("distributivity", (a, b, c))
    return None


def _validated(ring: RingTable) -> RingTable:
    violation = validate_ring(ring)
    if violation is not None:
        raise InvalidRingError(violation)
    return ring


def make_zn(n: int, label: str | None = None) -> RingTable:
    """The ring of integers modulo n (n >= 1; n = 1 is the trivial ring)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = range(n)
    add = [[(a + b) % n for b in rng] for a in rng]
    mul = [[(a * b) % n for b in rng] for a in rng]
    neg = [(-a) % n for a in rng]
    return _validated(
        RingTable(n, add, mul, 0, 1 % n, label if label is not None else f"Z/{n}", neg)
    )


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mul_mod(a, b, modulus, p, k):
    # a, b: coefficient tuples of length k (low degree first);
    # modulus: monic of degree k given by its k low coefficients
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: x^k = -modulus_low
    for deg in range(2 * k - 2, k - 1, -1):
        coeff = prod[deg]
        if coeff:
            prod[deg] = 0
            for i, mi in enumerate(modulus):
                prod[deg - k + i] = (prod[deg - k + i] - coeff * mi) % p
    return tuple(prod[:k])


def _poly_is_irreducible(low_coeffs, p, k):
    # monic degree-k polynomial over Z/p; trial division by all monic
    # polynomials of degree 1..k//2
    poly = list(low_coeffs) + [1]
    for d in range(1, k // 2 + 1):
        for divisor_low in itertools.product(range(p), repeat=d):
            divisor = list(divisor_low) + [1]
            if _poly_divides(divisor, poly, p):
                return False
    return True


def _poly_divides(divisor, poly, p):
    rem = list(poly)
    d = len(divisor) - 1
    for deg in range(len(rem) - 1, d - 1, -1):
        coeff = rem[deg]
        if coeff:
            for i in range(d + 1):
                rem[deg - d + i] = (rem[deg - d + i] - coeff * divisor[i]) % p
    return all(c == 0 for c in rem)


def make_gf(p: int, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> RingTable:
    """The finite field of order p**k.

    Elements are polynomials of degree < k over Z/p, reduced modulo the
    lexicographically smallest monic irreducible polynomial of degree k
    (coefficients compared low degree first).  Element index is
    sum(c_i * p**i), so 0 and 1 land at indices 0 and 1.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    order = p**k
    if order > order_cap:
        raise OrderCapExceededError(f"order {order} exceeds cap {order_cap}")
    modulus = next(
        low
        for low in itertools.product(range(p), repeat=k)
        if _poly_is_irreducible(low, p, k)
    )
    def to_poly(i):
        return tuple((i // p**j) % p for j in range(k))
    def to_idx(poly):
        return sum((c % p) * p**j for j, c in enumerate(poly))
    rng = range(order)
    polys = [to_poly(i) for i in rng]
    add = [
        [to_idx(tuple(x + y for x, y in zip(polys[a], polys[b]))) for b in rng]
        for a in rng
    ]
    mul = [
        [to_idx(_poly_mul_mod(polys[a], polys[b], modulus, p, k)) for b in rng]
        for a in rng
    ]
    neg = [to_idx(tuple(-c for c in polys[a])) for a in rng]
    return _validated(RingTable(order, add, mul, 0, 1, f"GF({p}^{k})", neg))


def make_matrix_ring(
    base: RingTable, k: int, order_cap: int = DEFAULT_ORDER_CAP
) -> RingTable:
    """Full ring of k-by-k matrices over a validated base ring.

    A matrix is indexed by its row-major entry tuple read as a little-endian
    base-``base.order`` number (entry at row i, col j contributes
    entry * order**(i*k + j)).
    """
    _validated(base)
    if k < 1:
        raise ValueError("k must be >= 1")
    order = base.order ** (k * k)
    if order > order_cap:
        raise OrderCapExceededError(f"order {order} exceeds cap {order_cap}")
    b = base.order
    cells = k * k
    def to_mat(i):
        return [(i // b**pos) % b for pos in range(cells)]
    def to_idx(entries):
        return sum(e * b**pos for pos, e in enumerate(entries))
    rng = range(order)
    mats = [to_mat(i) for i in rng]
    badd, bmul = base.add, base.mul

    def mat_add(x, y):
        return to_idx([badd[e][f] for e, f in zip(mats[x], mats[y])])

    def mat_mul(x, y):
        mx, my = mats[x], mats[y]
        out = []
        for i in range(k):
            for j in range(k):
                acc = base.zero
                for t in range(k):
                    acc = badd[acc][bmul[mx[i * k + t]][my[t * k + j]]]
                out.append(acc)
        return to_idx(out)

    add = [[mat_add(x, y) for y in rng] for x in rng]
    mul = [[mat_mul(x, y) for y in rng] for x in rng]
    neg = [to_idx([base.neg[e] for e in mats[x]]) for x in rng]
    one = to_idx(
        [base.one if i == j else base.zero for i in range(k) for j in range(k)]
    )
    return _validated(
        RingTable(order, add, mul, 0, one, f"M{k}({base.label})", neg)
    )


def make_product(
    r1: RingTable, r2: RingTable, order_cap: int = DEFAULT_ORDER_CAP
) -> RingTable:
    """Direct product with componentwise operations; pair (i, j) has index
    i * r2.order + j."""
    _validated(r1)
    _validated(r2)
    order = r1.order * r2.order
    if order > order_cap:
        raise OrderCapExceededError(f"order {order} exceeds cap {order_cap}")
    n2 = r2.order
    def idx(i, j):
        return i * n2 + j
    rng1, rng2 = range(r1.order), range(n2)
    add = [
        [idx(r1.add[a1][b1], r2.add[a2][b2]) for b1 in rng1 for b2 in rng2]
        for a1 in rng1
        for a2 in rng2
    ]
    mul = [
        [idx(r1.mul[a1][b1], r2.mul[a2][b2]) for b1 in rng1 for b2 in rng2]
        for a1 in rng1
        for a2 in rng2
    ]
    neg = [idx(r1.neg[a1], r2.neg[a2]) for a1 in rng1 for a2 in rng2]
    return _validated(
        RingTable(
            order,
            add,
            mul,
            idx(r1.zero, r2.zero),
            idx(r1.one, r2.one),
            f"{r1.label} x {r2.label}",
            neg,
        )
    )


def characteristic(ring: RingTable) -> int:
    """Least m >= 1 with m * 1 = 0 (1 for the trivial ring)."""
    cached = ring._cache.get("characteristic")
    if cached is None:
        m, x = 1, ring.one
        while x != ring.zero:
            x = ring.add[x][ring.one]
            m += 1
        ring._cache["characteristic"] = cached = m
    return cached


def int_embed(ring: RingTable, m: int) -> int:
    """The element m * 1, i.e. the image of the integer m in the ring."""
    m %= characteristic(ring)
    acc = ring.zero
    for _ in range(m):
        acc = ring.add[acc][ring.one]
    return acc


@dataclass(frozen=True)
class Corner:
    """A corner ring e*R*e re-indexed as a standalone table.

    ``embed[i]`` is the parent element behind corner index i.
    """

    ring: RingTable
    embed: tuple[int, ...]


def corner_ring(ring: RingTable, e: int) -> Corner:
    """The subring eRe = {e*x : x in R} with identity e, for e a central
    idempotent.  Elements are re-indexed in increasing parent order."""
    _validated(ring)
    mul = ring.mul
    if mul[e][e] != e:
        raise NotIdempotentError(f"element {e} is not idempotent")
    bad = next((x for x in ring.elements if mul[e][x] != mul[x][e]), None)
    if bad is not None:
        raise NotCentralError(f"element {e} does not commute with {bad}")
    members = sorted({mul[e][x] for x in ring.elements})
    index_of = {parent: i for i, parent in enumerate(members)}
    add = [[index_of[ring.add[a][b]] for b in members] for a in members]
    cmul = [[index_of[mul[a][b]] for b in members] for a in members]
    neg = [index_of[mul[e][ring.neg[a]]] for a in members]
    corner = RingTable(
        len(members),
        add,
        cmul,
        index_of[ring.zero],
        index_of[e],
        f"corner({ring.label}, e={e})",
        neg,
    )
    return Corner(_validated(corner), tuple(members))


@dataclass(frozen=True)
class PrimaryFactor:
    central_idempotent: int
    corner: RingTable
    embed: tuple[int, ...]
    prime: int
    exponent: int


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Splitting of a ring along the prime-power factors of its characteristic.

    The central idempotents are pairwise orthogonal and sum to 1; the
    product of the corner orders equals the ring order.
    """

    ring: RingTable
    factors: tuple[PrimaryFactor, ...]


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def primary_decomposition(ring: RingTable) -> PrimaryDecomposition:
    """Split R along characteristic(R) = prod p_i**a_i via the central
    idempotents e_i = u_i * (char / p_i**a_i) * 1 with u_i the Bezout
    inverse of char/p_i**a_i modulo p_i**a_i.

    A prime-power (or trivial, reported as 1**1) characteristic yields the
    single factor R itself.
    """
    _validated(ring)
    char = characteristic(ring)
    parts = _factorize(char)
    if len(parts) <= 1:
        prime, exponent = parts[0] if parts else (1, 1)
        corner = corner_ring(ring, ring.one)
        factor = PrimaryFactor(ring.one, corner.ring, corner.embed, prime, exponent)
        return PrimaryDecomposition(ring, (factor,))
    factors = []
    for p, a in parts:
        q = p**a
        m = char // q
        u = pow(m, -1, q)
        e = int_embed(ring, u * m)
        corner = corner_ring(ring, e)
        factors.append(PrimaryFactor(e, corner.ring, corner.embed, p, a))
    return PrimaryDecomposition(ring, tuple(factors))


def ring_to_json(ring: RingTable) -> dict:
    """Serializable form of a ring; neg is derivable and omitted."""
    return {
        "order": ring.order,
        "zero": ring.zero,
        "one": ring.one,
        "add": [list(row) for row in ring.add],
        "mul": [list(row) for row in ring.mul],
        "label": ring.label,
    }


def ring_from_json(data: dict, validate: bool = True) -> RingTable:
    """Rebuild a ring from its serialized form, revalidating the axioms."""
    try:
        ring = RingTable(
            int(data["order"]),
            data["add"],
            data["mul"],
            int(data["zero"]),
            int(data["one"]),
            str(data.get("label", "")),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ring serialization: {exc}") from exc
    return _validated(ring) if validate else ring


def find_isomorphism(r1: RingTable, r2: RingTable) -> tuple[int, ...] | None:
    """Brute-force ring isomorphism search for tiny test fixtures.

    Returns a bijection (as a tuple mapping r1 indices to r2 indices) or
    None.  Restricted to order <= 8; anything larger is out of scope.
    """
    if max(r1.order, r2.order) > 8:
        raise ValueError("isomorphism search is limited to order <= 8")
    if r1.order != r2.order:
        return None
    n = r1.order
    others = [x for x in range(n) if x not in (r1.zero, r1.one)]
    targets = [x for x in range(n) if x not in (r2.zero, r2.one)]
    for images in itertools.permutations(targets):
        phi = [0] * n
        phi[r1.zero] = r2.zero
        phi[r1.one] = r2.one
        for src, dst in zip(others, images):
            phi[src] = dst
        if all(
            phi[r1.add[a][b]] == r2.add[phi[a]][phi[b]]
            and phi[r1.mul[a][b]] == r2.mul[phi[a]][phi[b]]
            for a in range(n)
            for b in range(n)
        ):
            return tuple(phi)
    return None
