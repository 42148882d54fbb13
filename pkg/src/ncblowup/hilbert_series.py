"""Exact rational generating functions and the cubic-surface dimension audit."""

from dataclasses import dataclass


class NegativeDimension(ValueError):
    pass


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _trim(out)


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def one_minus_s_pow(d):
    return _trim([1] + [0] * (d - 1) + [-1])


@dataclass(frozen=True)
class RationalSeries:
    """``numerator(s) / prod_d (1 - s^d)`` with integer numerator coefficients."""

    numerator: tuple
    denominator: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        den = tuple(sorted(self.denominator))
        if any(d < 1 for d in den):
            raise ValueError("denominator exponents must be positive")
        object.__setattr__(self, "denominator", den)

    @classmethod
    def polynomial(cls, coeffs):
        return cls(tuple(coeffs))

    def denominator_poly(self):
        out = (1,)
        for d in self.denominator:
            out = poly_mul(out, one_minus_s_pow(d))
        return out

    def coefficients(self, N):
        """First ``N + 1`` coefficients of the power series."""
        if N < 0:
            raise ValueError("N must be a natural number")
        c = [self.numerator[i] if i < len(self.numerator) else 0 for i in range(N + 1)]
        for d in self.denominator:
            # multiply by 1/(1 - s^d)
            for k in range(d, N + 1):
                c[k] += c[k - d]
        return c

    def __add__(self, other):
        den = _merge(self.denominator, other.denominator)
        return RationalSeries(
            poly_add(
                poly_mul(self.numerator, _cofactor(den, self.denominator)),
                poly_mul(other.numerator, _cofactor(den, other.denominator)),
            ),
            den,
        )

    def __neg__(self):
        return RationalSeries(tuple(-x for x in self.numerator), self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalSeries(tuple(other * x for x in self.numerator), self.denominator)
        return RationalSeries(
            poly_mul(self.numerator, other.numerator), self.denominator + other.denominator
        )

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``s^k``."""
        return RationalSeries((0,) * k + self.numerator, self.denominator)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return poly_mul(self.numerator, other.denominator_poly()) == poly_mul(
            other.numerator, self.denominator_poly()
        )

    def __hash__(self):
        raise TypeError("RationalSeries equality is not structural; not hashable")

    def to_json(self):
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["numerator"]), tuple(obj.get("denominator", ())))


def _merge(a, b):
    """Smallest multiset containing both."""
    out = list(a)
    rest = list(a)
    for d in b:
        if d in rest:
            rest.remove(d)
        else:
            out.append(d)
    return tuple(sorted(out))


def _cofactor(full, part):
    rest = list(full)
    for d in part:
        rest.remove(d)
    out = (1,)
    for d in rest:
        out = poly_mul(out, one_minus_s_pow(d))
    return out


def coefficients(h, N):
    return h.coefficients(N)


def polynomial_ring(k):
    """Hilbert series ``1/(1-s)^k``."""
    return RationalSeries((1,), (1,) * k)


def hypersurface(k, degree):
    """``(1 - s^degree) / (1 - s)^k``."""
    return RationalSeries(one_minus_s_pow(degree), (1,) * k)


def overlap_breakdown(dim_w, f2, f3, dim_s3):
    """``dim(W (x) S2  cap  S2 (x) W)`` from degree-2/3 dimensions.

    ``dim S2 = dim_w^2 - f2`` and ``dim(S3 + W S2 + S2 W) = dim_w^3 - f3``;
    assuming ``S3`` meets ``W S2 + S2 W`` trivially, inclusion-exclusion
    gives the overlap.  Returns a dict of all intermediate dimensions.
    """
    s2 = dim_w ** 2 - f2
    total = dim_w ** 3 - f3
    sum_dim = total - dim_s3
    overlap = 2 * dim_w * s2 - sum_dim
    out = {"dim_S2": s2, "dim_sum_with_S3": total, "dim_sum": sum_dim, "overlap": overlap}
    for name, v in out.items():
        if v < 0:
            raise NegativeDimension(f"{name} = {v}")
    if overlap > dim_w * s2:
        raise NegativeDimension("overlap exceeds the dimension of either summand")
    return out


def overlap_dimension(dim_w, f2, f3, dim_s3):
    return overlap_breakdown(dim_w, f2, f3, dim_s3)["overlap"]


def alternating_sum(terms, N):
    """Coefficientwise ``sum sign * h`` through degree ``N``."""
    out = [0] * (N + 1)
    for h, sign in terms:
        for i, c in enumerate(h.coefficients(N)):
            out[i] += sign * c
    return out


def koszul_terms(algebra, gens, relations, overlap):
    """Terms of ``0 -> I (x) A -> Rel (x) A -> Gen (x) A -> A -> k -> 0``.

    ``relations`` maps degree to dimension.  Signs alternate starting with
    ``+`` on ``k``; each tensor factor contributes its degree as a shift.
    """
    terms = [(RationalSeries((1,)), 1), (algebra, -1), (algebra.shift(1) * gens, 1)]
    rel = RationalSeries.polynomial(
        [relations.get(d, 0) for d in range(max(relations) + 1)]
    )
    terms.append((algebra * rel, -1))
    terms.append((algebra.shift(3) * overlap, 1))
    return terms


def curve_length(n, mu=1):
    """Length of ``O_Y / m^n`` at a point of multiplicity ``mu`` on ``Y``.

    ``gr`` of the local ring of ``Y`` is ``gr R / (U)`` with ``U`` of order
    ``mu``, so degree ``k`` contributes ``min(k + 1, mu)``; ``n`` when smooth.
    """
    return sum(min(k + 1, mu) for k in range(n))


def rees_length_identity(n, mu=1):
    """Both sides of ``len S_n = len S_(n-mu) + len S_(Y,n)``."""
    if mu < 1 or n < mu:
        raise ValueError("need n >= mu >= 1")
    lhs = n * (n + 1) // 2
    rhs = (n - mu) * (n - mu + 1) // 2 + curve_length(n, mu)
    return lhs, rhs


def cubic_surface_audit(N=3):
    """All dimension checks for ``F = P/(C)`` with ``P`` of series ``1/(1-s)^4``."""
    F = hypersurface(4, 3)
    P = polynomial_ring(4)
    Fbar = F * RationalSeries((1, -1))
    fc = F.coefficients(max(N, 3))
    fbc = Fbar.coefficients(max(N, 3))
    w = overlap_breakdown(4, fc[2], fc[3], 1)
    v = overlap_breakdown(3, fbc[2], fbc[3], 1)
    koszul_v = 1
    c12 = alternating_sum(koszul_terms(Fbar, 3, {2: v["dim_S2"], 3: 1}, koszul_v), N)
    c22 = alternating_sum(koszul_terms(F, 4, {2: w["dim_S2"], 3: 1}, w["overlap"]), N)
    checks = {
        "F_series": fc[: N + 1],
        "F_is_P_times_cubic": F == P * RationalSeries(one_minus_s_pow(3)),
        "overlap_W": w,
        "overlap_V_inclusion_exclusion": v,
        "overlap_V_koszul": koszul_v,
        "complex_quotient": c12,
        "complex_full": c22,
    }
    checks["ok"] = (
        fc[:4] == [1, 4, 10, 19]
        and checks["F_is_P_times_cubic"]
        and w["overlap"] == 4
        and not any(c12[:4])
        and not any(c22[:4])
    )
    return checks
