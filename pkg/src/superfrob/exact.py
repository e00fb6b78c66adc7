"""Exact arithmetic core: sparse Laurent polynomials, cyclotomic numbers, linear solving.

Every quantity in this package is exact.  Coefficients are big rationals
(``fractions.Fraction``) or elements of a cyclotomic field Q(zeta_m)
represented modulo the m-th cyclotomic polynomial.  Polynomials are sparse
maps from dense exponent vectors to coefficients; the exponent vector layout
is fixed by a :class:`VariableRegistry`.  Negative exponents are permitted
only at registry positions flagged invertible (in practice: the Hecke
parameter q).

All values are immutable after construction and all operations are pure
functions, so concurrent use needs no coordination.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class StructuralError(ValueError):
    """Mixed registries or malformed structural input."""


class DomainError(ArithmeticError):
    """Operation left the supported domain (zero into an invertible slot, inexact division)."""


class SingularMatrixError(ArithmeticError):
    """Coefficient matrix does not have full column rank."""


class InconsistentSystemError(ArithmeticError):
    """Overdetermined system has a held-out row with nonzero residual."""

    def __init__(self, row: int, message: str | None = None):
        self.row = row
        super().__init__(message or f"inconsistent system: residual in row {row}")


class Variable:
    """A registered indeterminate: name, optional color block, invertibility flag."""

    __slots__ = ("name", "color", "invertible")

    def __init__(self, name: str, color: int | None = None, invertible: bool = False):
        self.name = name
        self.color = color
        self.invertible = invertible

    def __repr__(self) -> str:
        return f"Variable({self.name!r}, color={self.color}, invertible={self.invertible})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Variable)
            and (self.name, self.color, self.invertible)
            == (other.name, other.color, other.invertible)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.color, self.invertible))


class VariableRegistry:
    """Ordered set of variables fixing the exponent-vector layout of polynomials."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Iterable[Variable]):
        self.variables = tuple(variables)
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in registry: {names}")
        self._index = {v.name: i for i, v in enumerate(self.variables)}

    def __len__(self) -> int:
        return len(self.variables)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"unknown variable {name!r}") from None

    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableRegistry) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"VariableRegistry({', '.join(self.names())})"


def _coerce_coeff(value):
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, CyclotomicNumber):
        return value
    raise StructuralError(f"unsupported coefficient {value!r}")


def _field_inverse(value):
    if isinstance(value, CyclotomicNumber):
        return value.inverse()
    return Fraction(1) / Fraction(value)


class Poly:
    """Sparse multivariate Laurent polynomial over exact coefficients.

    ``terms`` maps dense exponent tuples (one slot per registry variable) to
    nonzero coefficients.  Negative exponents are only allowed at invertible
    positions; this is enforced at the construction entry points, and no
    arithmetic operation can introduce a negative exponent elsewhere.
    """

    __slots__ = ("registry", "terms")

    def __init__(self, registry: VariableRegistry, terms: Mapping[tuple[int, ...], object]):
        self.registry = registry
        cleaned = {}
        width = len(registry)
        for exps, coeff in terms.items():
            coeff = _coerce_coeff(coeff)
            if not coeff:
                continue
            if len(exps) != width:
                raise StructuralError("exponent vector width does not match registry")
            for pos, e in enumerate(exps):
                if e < 0 and not registry.variables[pos].invertible:
                    raise DomainError(
                        f"negative exponent for non-invertible variable "
                        f"{registry.variables[pos].name!r}"
                    )
            cleaned[tuple(exps)] = coeff
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, registry: VariableRegistry, terms: dict) -> "Poly":
        # internal fast path: terms already cleaned (no zeros, valid exponents)
        p = object.__new__(cls)
        p.registry = registry
        p.terms = terms
        return p

    @classmethod
    def zero(cls, registry: VariableRegistry) -> "Poly":
        return cls._raw(registry, {})

    @classmethod
    def const(cls, registry: VariableRegistry, value) -> "Poly":
        value = _coerce_coeff(value)
        if not value:
            return cls.zero(registry)
        return cls._raw(registry, {(0,) * len(registry): value})

    @classmethod
    def one(cls, registry: VariableRegistry) -> "Poly":
        return cls.const(registry, 1)

    @classmethod
    def var(cls, registry: VariableRegistry, name: str, power: int = 1) -> "Poly":
        pos = registry.index(name)
        if power < 0 and not registry.variables[pos].invertible:
            raise DomainError(f"variable {name!r} is not invertible")
        exps = [0] * len(registry)
        exps[pos] = power
        return cls._raw(registry, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, registry: VariableRegistry, powers: Mapping[str, int], coeff=1) -> "Poly":
        exps = [0] * len(registry)
        for name, power in powers.items():
            exps[registry.index(name)] = power
        return cls(registry, {tuple(exps): coeff})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        """The coefficient of the empty monomial; error if any variable survives."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return next(iter(self.terms.values()))

    # -- ring operations ---------------------------------------------------

    def _check_registry(self, other: "Poly"):
        if self.registry != other.registry:
            raise StructuralError("polynomials live in different registries")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = Poly.const(self.registry, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_registry(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc:
                terms[exps] = acc
            elif exps in terms:
                del terms[exps]
        return Poly._raw(self.registry, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.registry, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = Poly.const(self.registry, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = _coerce_coeff(other)
            if not other:
                return Poly.zero(self.registry)
            return Poly._raw(self.registry, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_registry(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                prod = c1 * c2
                if not prod:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(key)
                acc = prod if acc is None else acc + prod
                if acc:
                    terms[key] = acc
                elif key in terms:
                    del terms[key]
        return Poly._raw(self.registry, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int):
            raise StructuralError("polynomial powers must be integers")
        if power < 0:
            return self._unit_inverse() ** (-power)
        result = Poly.one(self.registry)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def _unit_inverse(self) -> "Poly":
        # only monomials in invertible variables have polynomial inverses
        if len(self.terms) != 1:
            raise DomainError("only monomials in invertible variables are invertible")
        exps, coeff = next(iter(self.terms.items()))
        for pos, e in enumerate(exps):
            if e != 0 and not self.registry.variables[pos].invertible:
                raise DomainError("only monomials in invertible variables are invertible")
        return Poly._raw(self.registry, {tuple(-e for e in exps): _field_inverse(coeff)})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = Poly.const(self.registry, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def substitute(self, assignment: Mapping[str, object]) -> "Poly":
        """Apply the ring homomorphism sending each assigned variable to its target.

        Targets may be scalars (int, Fraction, CyclotomicNumber) or polynomials
        over the same registry.  Unassigned variables survive.  Assigning zero
        to an invertible variable is rejected.
        """
        if not assignment:
            return self
        positions: dict[int, Poly] = {}
        for name, value in assignment.items():
            pos = self.registry.index(name)
            if isinstance(value, Poly):
                self._check_registry(value)
                target = value
            else:
                target = Poly.const(self.registry, value)
            if self.registry.variables[pos].invertible and target.is_zero():
                raise DomainError(f"zero assigned to invertible variable {name!r}")
            positions[pos] = target
        result = Poly.zero(self.registry)
        for exps, coeff in self.terms.items():
            reduced = list(exps)
            factor = Poly.const(self.registry, coeff)
            for pos, target in positions.items():
                e = reduced[pos]
                if e == 0:
                    continue
                reduced[pos] = 0
                factor = factor * (target ** e)
                if factor.is_zero():
                    break
            if factor.is_zero():
                continue
            result = result + factor * Poly._raw(self.registry, {tuple(reduced): Fraction(1)})
        return result

    # -- structure helpers -------------------------------------------------

    def degree_in(self, name: str) -> int:
        pos = self.registry.index(name)
        if not self.terms:
            return 0
        return max(e[pos] for e in self.terms)

    def coefficients_by(self, names: Sequence[str]) -> dict[tuple[int, ...], "Poly"]:
        """Group terms by their exponents on ``names``; values keep the remaining variables."""
        positions = [self.registry.index(n) for n in names]
        out: dict[tuple[int, ...], dict] = {}
        for exps, coeff in self.terms.items():
            key = tuple(exps[p] for p in positions)
            rest = list(exps)
            for p in positions:
                rest[p] = 0
            out.setdefault(key, {})[tuple(rest)] = coeff
        return {k: Poly._raw(self.registry, v) for k, v in out.items()}

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact division by a polynomial involving at most one variable.

        The quotient may be Laurent when that variable is invertible.  A
        nonzero remainder is a hard error: in-scope quantities are Laurent in
        q and polynomial elsewhere, so inexact division signals a bug.
        """
        self._check_registry(divisor)
        if divisor.is_zero():
            raise DomainError("division by zero polynomial")
        support = {
            pos
            for exps in divisor.terms
            for pos, e in enumerate(exps)
            if e != 0
        }
        if not support:
            return self * _field_inverse(divisor.constant_value())
        if len(support) > 1:
            raise DomainError("divisor must involve a single variable")
        pos = support.pop()
        invertible = self.registry.variables[pos].invertible

        div_lo = min(e[pos] for e in divisor.terms)
        den = {e[pos] - div_lo: c for e, c in divisor.terms.items()}
        den_deg = max(den)
        den_lead_inv = _field_inverse(den[den_deg])

        groups: dict[tuple[int, ...], dict[int, object]] = {}
        for exps, coeff in self.terms.items():
            rest = list(exps)
            e = rest[pos]
            rest[pos] = 0
            groups.setdefault(tuple(rest), {})[e] = coeff

        result_terms: dict[tuple[int, ...], object] = {}
        for rest, num in groups.items():
            num_lo = min(num)
            work = {e - num_lo: c for e, c in num.items()}
            offset = num_lo - div_lo
            while work:
                deg = max(work)
                if deg < den_deg:
                    raise DomainError("inexact division: nonzero remainder")
                lead = work[deg] * den_lead_inv
                shift = deg - den_deg
                final = shift + offset
                if final < 0 and not invertible:
                    raise DomainError(
                        "inexact division: Laurent quotient in non-invertible variable"
                    )
                exps = list(rest)
                exps[pos] = final
                result_terms[tuple(exps)] = lead
                for d, c in den.items():
                    tgt = d + shift
                    acc = work.get(tgt, Fraction(0)) - lead * c
                    if acc:
                        work[tgt] = acc
                    elif tgt in work:
                        del work[tgt]
        return Poly._raw(self.registry, result_terms)

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order over the registry layout."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.registry.names()
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e != 0
            ]
            body = "*".join(factors)
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# -- dense univariate helpers (internal) ------------------------------------


def _dense_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _dense_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _dense_trim(out)


def _dense_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _dense_trim(out)


def _dense_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    num = list(num)
    den = _dense_trim(list(den))
    if not den:
        raise DomainError("dense division by zero")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / lead
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return _dense_trim(quot), _dense_trim(num)


@lru_cache(maxsize=None)
def _phi_dense(m: int) -> tuple[Fraction, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise DomainError("cyclotomic order must be positive")
    if m == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (m + 1)
    num[0], num[m] = Fraction(-1), Fraction(1)
    den = [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            den = _dense_mul(den, list(_phi_dense(d)))
    quot, rem = _dense_divmod(num, den)
    if rem:
        raise DomainError(f"cyclotomic recursion left a remainder at m={m}")
    return tuple(quot)


Z_REGISTRY = VariableRegistry([Variable("z")])


def cyclotomic_phi(m: int) -> Poly:
    """The m-th cyclotomic polynomial in z, by exact division of z^m - 1."""
    coeffs = _phi_dense(m)
    return Poly(Z_REGISTRY, {(i,): c for i, c in enumerate(coeffs)})


def euler_phi(m: int) -> int:
    return len(_phi_dense(m)) - 1


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """z^j reduced modulo Phi_m, as coefficient vectors, for 0 <= j <= 2*(deg-1)."""
    phi = _phi_dense(m)
    deg = len(phi) - 1
    rows: list[tuple[Fraction, ...]] = []
    current = [Fraction(0)] * deg
    current[0] = Fraction(1)
    rows.append(tuple(current))
    for _ in range(max(0, 2 * deg - 2)):
        shifted = [Fraction(0)] + current
        overflow = shifted.pop() if len(shifted) > deg else Fraction(0)
        if overflow:
            # Phi_m is monic, so z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1})
            for i in range(deg):
                shifted[i] -= overflow * phi[i]
        current = shifted
        rows.append(tuple(current))
    return tuple(rows)


class CyclotomicNumber:
    """Element of Q(zeta_m), stored as a residue modulo the m-th cyclotomic polynomial.

    Reduction modulo Phi_m (rather than z^m - 1) makes this a field, so
    equality tests are unambiguous and conjugation zeta -> zeta^(m-1) is a
    ring automorphism.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Fraction]):
        deg = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise StructuralError(
                f"cyclotomic coefficient vector must have length {deg} for order {order}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        coeffs = [Fraction(0)] * euler_phi(order)
        coeffs[0] = Fraction(value)
        return cls(order, coeffs)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        """zeta_m^power for the fixed primitive m-th root of unity zeta_m."""
        power %= order
        deg = euler_phi(order)
        if deg == 1:
            # Phi_m linear: zeta is the rational root (1 for m=1, -1 for m=2)
            root = -_phi_dense(order)[0]
            return cls(order, [root**power])
        if power < deg:
            coeffs = [Fraction(0)] * deg
            coeffs[power] = Fraction(1)
            return cls(order, coeffs)
        gen = [Fraction(0)] * deg
        gen[1] = Fraction(1)
        return cls(order, gen) ** power

    # -- helpers -----------------------------------------------------------

    def _align(self, other):
        """Coerce the pair to a common order; None when other is foreign."""
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.from_rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return None
        if other.order == self.order:
            return self, other
        if other.is_rational():
            return self, CyclotomicNumber.from_rational(self.order, other.rational_value())
        if self.is_rational():
            return CyclotomicNumber.from_rational(other.order, self.rational_value()), other
        raise StructuralError("cyclotomic orders differ")

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("cyclotomic number is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return CyclotomicNumber(x.order, [a + b for a, b in zip(x.coeffs, y.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        deg = len(x.coeffs)
        table = _reduction_table(x.order)
        out = [Fraction(0)] * deg
        for i, a in enumerate(x.coeffs):
            if not a:
                continue
            for j, b in enumerate(y.coeffs):
                if not b:
                    continue
                ab = a * b
                row = table[i + j]
                for pos in range(deg):
                    if row[pos]:
                        out[pos] += ab * row[pos]
        return CyclotomicNumber(x.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise DomainError("cyclotomic zero has no inverse")
        # extended Euclid in Q[z] against Phi_m; the invariant is r = s*a (mod Phi_m)
        phi = list(_phi_dense(self.order))
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = _dense_trim(list(self.coeffs)), [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _dense_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _dense_sub(s0, _dense_mul(quot, s1))
        if not r1:
            raise DomainError("cyclotomic number shares a factor with Phi_m")
        unit_inv = Fraction(1) / r1[0]
        reduced = _dense_divmod([c * unit_inv for c in s1], phi)[1]
        deg = len(self.coeffs)
        return CyclotomicNumber(self.order, list(reduced) + [Fraction(0)] * (deg - len(reduced)))

    def __truediv__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x * y.inverse()

    def __rtruediv__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y * x.inverse()

    def __pow__(self, power: int):
        if power < 0:
            return self.inverse() ** (-power)
        result = CyclotomicNumber.from_rational(self.order, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta -> zeta^(m-1)."""
        zbar = CyclotomicNumber.zeta(self.order, self.order - 1)
        acc = CyclotomicNumber.from_rational(self.order, 0)
        power = CyclotomicNumber.from_rational(self.order, 1)
        for c in self.coeffs:
            if c:
                acc = acc + c * power
            power = power * zbar
        return acc

    def __eq__(self, other) -> bool:
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x.coeffs == y.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append("zeta" if i == 1 else f"zeta^{i}")
            else:
                parts.append(f"{c}*zeta" if i == 1 else f"{c}*zeta^{i}")
        return " + ".join(parts) if parts else "0"


def transport(f: Poly, registry: VariableRegistry) -> Poly:
    """Rebuild f over another registry, matching variables by name."""
    if f.registry == registry:
        return f
    src_names = f.registry.names()
    terms: dict[tuple[int, ...], object] = {}
    width = len(registry)
    for exps, coeff in f.terms.items():
        out = [0] * width
        for name, e in zip(src_names, exps):
            if e:
                out[registry.index(name)] = e
        terms[tuple(out)] = coeff
    return Poly(registry, terms)


def solve_linear_exact(A: Sequence[Sequence[object]], b: Sequence[object]) -> list:
    """Solve A x = b exactly by Gauss-Jordan elimination with exact pivoting.

    ``A`` holds field scalars (Fraction or CyclotomicNumber); ``b`` entries may
    be scalars or polynomials.  For overdetermined systems the rows left
    without pivots form a residual-check set: each must reduce to 0 = 0, and a
    nonzero residual raises :class:`InconsistentSystemError` with the
    offending row index.
    """
    rows = len(A)
    if rows != len(b):
        raise StructuralError("matrix and right-hand side differ in length")
    cols = len(A[0]) if rows else 0
    mat = [list(row) for row in A]
    for row in mat:
        if len(row) != cols:
            raise StructuralError("ragged coefficient matrix")
    rhs = list(b)

    pivot_of_col: dict[int, int] = {}
    used: set[int] = set()
    for col in range(cols):
        pivot = next(
            (r for r in range(rows) if r not in used and mat[r][col]), None
        )
        if pivot is None:
            raise SingularMatrixError(f"no pivot available for column {col}")
        used.add(pivot)
        pivot_of_col[col] = pivot
        inv = _field_inverse(mat[pivot][col])
        mat[pivot] = [x * inv for x in mat[pivot]]
        rhs[pivot] = inv * rhs[pivot]
        for r in range(rows):
            if r == pivot:
                continue
            factor = mat[r][col]
            if not factor:
                continue
            mat[r] = [x - factor * y for x, y in zip(mat[r], mat[pivot])]
            rhs[r] = rhs[r] - factor * rhs[pivot]

    for r in range(rows):
        if r in used:
            continue
        if any(mat[r][c] for c in range(cols)):
            raise SingularMatrixError("elimination left a nonzero held-out row")
        residual = rhs[r]
        bad = not residual.is_zero() if isinstance(residual, Poly) else bool(residual)
        if bad:
            raise InconsistentSystemError(r)

    return [rhs[pivot_of_col[c]] for c in range(cols)]
