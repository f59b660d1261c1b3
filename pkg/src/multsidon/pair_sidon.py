"""Maximum {a,b}-multiplicative sets.

For integers 1 <= a < b, a set S of positive integers is {a,b}-multiplicative
if ax != by for all x, y in S.  Writing g = gcd(a, b), the condition only
depends on the reduced coprime pair (a/g, b/g), and the even subpowers of b/g
(integers of the form (b/g)^i * y with i even and y not divisible by b/g)
form an {a,b}-multiplicative subset of [n] of maximum cardinality for every n.
The limiting density of that set is b/(b+g), which is the maximum possible.

Optimality comes from a graph model: put an edge x -> x*(b/g)/(a/g) whenever
the product is an integer at most n.  Every vertex has in- and out-degree at
most one, so [n] splits into disjoint directed paths, and a maximum
independent set takes the vertices at even distance from each path source.
Those vertices are exactly the even subpowers of b/g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class PairParams:
    """A validated pair 1 <= a < b together with its coprime reduction."""

    a: int
    b: int
    g: int
    a_red: int
    b_red: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got a={self.a}, b={self.b}")
        if self.g != gcd(self.a, self.b):
            raise ValueError("g must equal gcd(a, b)")
        if (self.a_red, self.b_red) != (self.a // self.g, self.b // self.g):
            raise ValueError("reduced pair must be (a/g, b/g)")


def reduce_pair(a: int, b: int) -> PairParams:
    """Validate 1 <= a < b and divide out the gcd."""
    if not isinstance(a, int) or not isinstance(b, int):
        raise TypeError("a and b must be integers")
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    g = gcd(a, b)
    return PairParams(a=a, b=b, g=g, a_red=a // g, b_red=b // g)


@dataclass(frozen=True)
class SubpowerDecomposition:
    """x = base**index * cofactor with cofactor not divisible by base."""

    base: int
    index: int
    cofactor: int

    def __post_init__(self) -> None:
        if self.base < 2 or self.index < 0 or self.cofactor < 1:
            raise ValueError("invalid subpower decomposition")
        if self.cofactor % self.base == 0:
            raise ValueError("cofactor must not be divisible by base")

    @property
    def value(self) -> int:
        return self.base**self.index * self.cofactor


def subpower_index(x: int, base: int) -> SubpowerDecomposition:
    """Split x >= 1 as base**i * y with base not dividing y."""
    if x < 1:
        raise ValueError(f"x must be positive, got {x}")
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    index = 0
    while x % base == 0:
        x //= base
        index += 1
    return SubpowerDecomposition(base=base, index=index, cofactor=x)


@dataclass(frozen=True)
class PathDecomposition:
    """Partition of [n] into the maximal chains x -> x*b_red/a_red."""

    n: int
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExtremalPairSet:
    """The even subpowers of b_red inside [n], sorted ascending."""

    n: int
    members: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.members)


def construct_extremal_set(params: PairParams, n: int) -> ExtremalPairSet:
    """Maximum-cardinality {a,b}-multiplicative subset of [n].

    Sieves cofactors level by level: for each even i the members with
    subpower index i are b_red**i * y for y <= n / b_red**i not divisible
    by b_red.  Total work is O(n).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    b = params.b_red
    members = []
    power = 1  # b**i for even i
    while power <= n:
        limit = n // power
        members.extend(power * y for y in range(1, limit + 1) if y % b)
        power *= b * b
    members.sort()
    return ExtremalPairSet(n=n, members=tuple(members))


def is_pair_multiplicative(members: Iterable[int], a: int, b: int) -> bool:
    """True iff no x, y in the set satisfy a*x == b*y."""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    values = set(members)
    if any(x < 1 for x in values):
        raise ValueError("set members must be positive")
    for x in values:
        if (a * x) % b == 0 and (a * x) // b in values:
            return False
    return True


def build_path_decomposition(params: PairParams, n: int) -> PathDecomposition:
    """Split [n] into maximal directed paths under x -> x*b_red/a_red.

    Sources are exactly the integers not divisible by b_red; the successor
    of x exists when a_red divides x and x*b_red/a_red <= n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a, b = params.a_red, params.b_red
    paths = []
    for source in range(1, n + 1):
        if source % b == 0:
            continue
        path = [source]
        v = source
        while v % a == 0 and v // a * b <= n:
            v = v // a * b
            path.append(v)
        paths.append(tuple(path))
    return PathDecomposition(n=n, paths=tuple(paths))


def path_alpha(decomposition: PathDecomposition) -> int:
    """Independence number of the path graph: sum of ceil(len/2) per path."""
    return sum((len(p) + 1) // 2 for p in decomposition.paths)


def pair_density(params: PairParams) -> Fraction:
    """Maximum density of an {a,b}-multiplicative set: b/(b+g)."""
    return Fraction(params.b, params.b + params.g)


def floor_log(base: int, n: int) -> int:
    """Largest k >= 0 with base**k <= n, by integer exponent search."""
    if base < 2 or n < 1:
        raise ValueError("need base >= 2 and n >= 1")
    k = 0
    power = base
    while power <= n:
        k += 1
        power *= base
    return k


def cardinality_bounds(params: PairParams, n: int) -> tuple[Fraction, Fraction]:
    """Exact rational bracket for the size of the extremal set in [n].

    With b = b_red and k the integer floor of log_b(n):
    b*n/(b+1) - (k+1)/2  <=  |T_n|  <=  1 + k/2 + b*n/(b+1).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    b = params.b_red
    k = floor_log(b, n)
    main = Fraction(b * n, b + 1)
    lower = main - Fraction(k + 1, 2)
    upper = 1 + Fraction(k, 2) + main
    return lower, upper


def coprime_singleton_density(a_set: Iterable[int], b: int) -> Fraction:
    """Maximum density of an {A,{b}}-multiplicative set, A coprime to b.

    Requires every element of A coprime to b and some element below b;
    the witness achieving b/(b+1) is the set of even subpowers of b.
    """
    elements = sorted(set(a_set))
    if not elements:
        raise ValueError("A must be nonempty")
    if b < 1 or any(x < 1 for x in elements):
        raise ValueError("all inputs must be positive")
    for x in elements:
        if gcd(x, b) != 1:
            raise ValueError(f"case not covered: gcd({x}, {b}) = {gcd(x, b)} != 1")
    if not any(x < b for x in elements):
        raise ValueError(f"case not covered: no element of A is below b={b}")
    return Fraction(b, b + 1)
