"""Rank-1 constraint systems with witness-generation hints.

A constraint is (A.z)(B.z) = (C.z) over the SNARK scalar field.  Variable 0
is pinned to 1; public inputs occupy indices 1..num_public.  The builder
records enough hint metadata alongside the constraints to recompute every
auxiliary variable deterministically from the primary witness, so circuits
are built once and witnesses generated per statement.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

Row = Tuple[Tuple[int, int], ...]  # ((var, coeff), ...)


class Lin:
    """Sparse linear combination of variables; var 0 carries the constant."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        self.terms = terms or {}

    @classmethod
    def var(cls, index: int, coeff: int = 1) -> "Lin":
        return cls({index: coeff})

    @classmethod
    def const(cls, value: int) -> "Lin":
        return cls({0: value} if value else {})

    def __add__(self, other: "Lin") -> "Lin":
        out = dict(self.terms)
        for v, k in other.terms.items():
            out[v] = out.get(v, 0) + k
        return Lin({v: k for v, k in out.items() if k})

    def __sub__(self, other: "Lin") -> "Lin":
        out = dict(self.terms)
        for v, k in other.terms.items():
            out[v] = out.get(v, 0) - k
        return Lin({v: k for v, k in out.items() if k})

    def scaled(self, k: int) -> "Lin":
        if k == 0:
            return Lin()
        return Lin({v: c * k for v, c in self.terms.items()})

    def plus_const(self, value: int) -> "Lin":
        return self + Lin.const(value)

    def eval_mod(self, assignment: Sequence[int], prime: int) -> int:
        total = 0
        for v, k in self.terms.items():
            total += k * assignment[v]
        return total % prime

    def row(self, prime: int) -> Row:
        return tuple(sorted((v, k % prime) for v, k in self.terms.items() if k % prime))


ONE = Lin.var(0)


def lift_signed(value: int, prime: int) -> int:
    """Map a field element to its signed representative in (-p/2, p/2]."""
    return value - prime if value > prime // 2 else value


class ConstraintSystem:
    """Frozen constraint set plus the hint program that fills assignments."""

    def __init__(
        self,
        prime: int,
        num_vars: int,
        num_public: int,
        constraints: List[Tuple[Row, Row, Row]],
        hints: List[tuple],
    ):
        self.prime = prime
        self.num_vars = num_vars
        self.num_public = num_public
        self.constraints = constraints
        self._hints = hints

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    def first_unsatisfied(self, assignment: Sequence[int]) -> Optional[int]:
        """Index of the first violated constraint, or None if all hold."""
        prime = self.prime
        for idx, (ra, rb, rc) in enumerate(self.constraints):
            va = 0
            for v, k in ra:
                va += k * assignment[v]
            vb = 0
            for v, k in rb:
                vb += k * assignment[v]
            vc = 0
            for v, k in rc:
                vc += k * assignment[v]
            if (va % prime) * (vb % prime) % prime != vc % prime:
                return idx
        return None

    def satisfied(self, assignment: Sequence[int]) -> bool:
        if len(assignment) != self.num_vars:
            return False
        return self.first_unsatisfied(assignment) is None

    def complete_assignment(self, partial: Dict[int, int]) -> List[int]:
        """Fill all auxiliary variables from the primary ones via hints.

        `partial` must assign every public input and primary witness var;
        hint evaluation is deterministic, so identical inputs always yield
        identical assignments.
        """
        z = [0] * self.num_vars
        z[0] = 1
        for var, value in partial.items():
            z[var] = value % self.prime
        prime = self.prime
        for hint in self._hints:
            kind = hint[0]
            if kind == "lin":
                _, out, lin = hint
                z[out] = lin.eval_mod(z, prime)
            elif kind == "mul":
                _, out, lin_a, lin_b = hint
                z[out] = lin_a.eval_mod(z, prime) * lin_b.eval_mod(z, prime) % prime
            elif kind == "bits":
                _, src, bit_vars = hint
                value = z[src]
                for i, bv in enumerate(bit_vars):
                    z[bv] = (value >> i) & 1
            elif kind == "fn":
                _, out_vars, fn = hint
                values = fn(z)
                for var, value in zip(out_vars, values):
                    z[var] = value % prime
            else:  # pragma: no cover - builder never emits other kinds
                raise AssertionError(f"unknown hint kind {kind}")
        return z


class CircuitBuilder:
    def __init__(self, prime: int):
        self.prime = prime
        self.num_vars = 1  # var 0 == 1
        self.num_public = 0
        self._constraints: List[Tuple[Row, Row, Row]] = []
        self._hints: List[tuple] = []

    def new_var(self) -> int:
        idx = self.num_vars
        self.num_vars += 1
        return idx

    def public_var(self) -> int:
        # public inputs must be allocated first, contiguously
        assert self.num_vars == self.num_public + 1
        self.num_public += 1
        return self.new_var()

    def enforce(self, a: Lin, b: Lin, c: Lin) -> None:
        self._constraints.append((a.row(self.prime), b.row(self.prime), c.row(self.prime)))

    def enforce_zero(self, lin: Lin) -> None:
        self.enforce(lin, ONE, Lin())

    def materialize(self, lin: Lin) -> int:
        """New variable constrained (and hinted) to equal a linear combination."""
        out = self.new_var()
        self.enforce(lin, ONE, Lin.var(out))
        self._hints.append(("lin", out, lin))
        return out

    def mul(self, a: Lin, b: Lin) -> int:
        out = self.new_var()
        self.enforce(a, b, Lin.var(out))
        self._hints.append(("mul", out, a, b))
        return out

    def witness_vars(self, count: int, fn: Callable) -> List[int]:
        """Variables whose values a custom hint computes from the assignment."""
        outs = [self.new_var() for _ in range(count)]
        self._hints.append(("fn", tuple(outs), fn))
        return outs

    def boolean(self, var: int) -> None:
        v = Lin.var(var)
        self.enforce(v, v.plus_const(-1), Lin())

    def range_check(self, var: int, bits: int) -> List[int]:
        """Constrain 0 <= var < 2**bits via bit decomposition; returns bit vars."""
        bit_vars = [self.new_var() for _ in range(bits)]
        self._hints.append(("bits", var, tuple(bit_vars)))
        recombine = Lin()
        for i, bv in enumerate(bit_vars):
            self.boolean(bv)
            recombine += Lin.var(bv, 1 << i)
        self.enforce(recombine, ONE, Lin.var(var))
        return bit_vars

    def finalize(self) -> ConstraintSystem:
        return ConstraintSystem(
            self.prime, self.num_vars, self.num_public, self._constraints, self._hints
        )
