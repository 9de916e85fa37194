"""R1CS encoding of the swap statement: X = x*G and poseidon(x_limbs) = h.

The secret x enters as four 64-bit limbs (the private witness).  Public
inputs are nine field elements: the affine coordinates of X as eight
64-bit limbs (x coordinate first, least-significant limb first) followed
by the Poseidon commitment h.  That 8+1 split is an interpretation fixed
here, not something the wire format forces; see README.

The elliptic-curve conjunct emulates secp256k1 base-field arithmetic in
64-bit limbs over the BN254 scalar field ("non-native" arithmetic): every
multiplication mod the secp256k1 prime is verified through an explicit
quotient witness and a carry chain whose carries are range-checked.  The
fixed-base multiplication walks 32 windows of 8 bits; each window one-hot
selects a precomputed table point (j * 2^(8i) + mu_i) * G, the 32 selected
points are folded with incomplete affine additions, and the accumulated
random offset sum(mu_i) * G is subtracted at the end.  Incomplete addition
assumes unequal x coordinates; the random offsets make a degenerate case
unreachable without breaking discrete log, and a degenerate honest input
surfaces as witness-generation failure, never as a wrong accepted proof.

Constraint-count economy is explicitly not a goal; the count is reported,
not contracted.
"""

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .. import poseidon_params as pp
from ..curve import G, P as SEC_P, Q as SEC_Q, generator_mul, point_add, point_negate
from ..hashing import SNARK_PRIME, poseidon_hash
from .r1cs import ONE, CircuitBuilder, ConstraintSystem, Lin, lift_signed

LIMB_BITS = 64
N_LIMBS = 4
LIMB_MASK = (1 << LIMB_BITS) - 1
WINDOW_BITS = 8
N_WINDOWS = 256 // WINDOW_BITS
WINDOW_SIZE = 1 << WINDOW_BITS

N_PUBLIC = 9  # 8 coordinate limbs + commitment

_OFFSET_DOMAIN = b"tapswap/zk/fixed-base-offset/v1"


def scalar_to_limbs(value: int) -> Tuple[int, ...]:
    return tuple((value >> (LIMB_BITS * i)) & LIMB_MASK for i in range(N_LIMBS))


def limbs_to_int(limbs: Sequence[int]) -> int:
    total = 0
    for i, limb in enumerate(limbs):
        total += limb << (LIMB_BITS * i)
    return total


@dataclass(frozen=True)
class StatementInstance:
    """Public side: X as 8 coordinate limbs plus the Poseidon commitment."""

    point_limbs: Tuple[int, ...]  # x coord limbs 0..3, y coord limbs 0..3
    commitment: int

    def validate(self) -> None:
        if len(self.point_limbs) != 2 * N_LIMBS:
            raise ValueError("instance needs 8 coordinate limbs")
        if any(not 0 <= v <= LIMB_MASK for v in self.point_limbs):
            raise ValueError("coordinate limb out of 64-bit range")
        x = limbs_to_int(self.point_limbs[:N_LIMBS])
        y = limbs_to_int(self.point_limbs[N_LIMBS:])
        if x >= SEC_P or y >= SEC_P:
            raise ValueError("coordinate not reduced mod the curve field")
        if (y * y - x * x * x - 7) % SEC_P != 0:
            raise ValueError("instance point not on secp256k1")
        if not 0 <= self.commitment < SNARK_PRIME:
            raise ValueError("commitment not reduced mod the SNARK field")

    def point(self):
        return (
            limbs_to_int(self.point_limbs[:N_LIMBS]),
            limbs_to_int(self.point_limbs[N_LIMBS:]),
        )

    def to_bytes(self) -> bytes:
        out = b"".join(v.to_bytes(32, "big") for v in self.point_limbs)
        return out + self.commitment.to_bytes(32, "big")

    @classmethod
    def from_bytes(cls, data: bytes) -> "StatementInstance":
        if len(data) != 32 * N_PUBLIC:
            raise ValueError(f"instance must be {32 * N_PUBLIC} bytes")
        values = [int.from_bytes(data[32 * i : 32 * (i + 1)], "big") for i in range(N_PUBLIC)]
        inst = cls(tuple(values[:8]), values[8])
        inst.validate()
        return inst


@dataclass(frozen=True)
class StatementWitness:
    secret_limbs: Tuple[int, ...]

    def validate(self) -> None:
        if len(self.secret_limbs) != N_LIMBS:
            raise ValueError("witness needs 4 limbs")
        if any(not 0 <= v <= LIMB_MASK for v in self.secret_limbs):
            raise ValueError("witness limb out of 64-bit range")
        if not 0 < limbs_to_int(self.secret_limbs) < SEC_Q:
            raise ValueError("recombined secret outside Z_q^*")

    def to_bytes(self) -> bytes:
        return b"".join(v.to_bytes(32, "big") for v in self.secret_limbs)

    @classmethod
    def from_bytes(cls, data: bytes) -> "StatementWitness":
        if len(data) != 32 * N_LIMBS:
            raise ValueError(f"witness must be {32 * N_LIMBS} bytes")
        limbs = tuple(int.from_bytes(data[32 * i : 32 * (i + 1)], "big") for i in range(N_LIMBS))
        wit = cls(limbs)
        wit.validate()
        return wit


# --- window tables --------------------------------------------------------


def _window_offset(index: int) -> int:
    counter = 0
    while True:
        digest = hashlib.sha256(
            _OFFSET_DOMAIN + index.to_bytes(4, "big") + counter.to_bytes(4, "big")
        ).digest()
        value = int.from_bytes(digest, "big") % SEC_Q
        if value:
            return value
        counter += 1


@lru_cache(maxsize=1)
def _window_tables():
    """tables[i][j] = (j * 2^(8i) + mu_i) * G, plus -(sum mu_i) * G."""
    tables = []
    offset_sum = 0
    base = G
    for i in range(N_WINDOWS):
        mu = _window_offset(i)
        offset_sum = (offset_sum + mu) % SEC_Q
        row = [generator_mul(mu)]
        for _ in range(WINDOW_SIZE - 1):
            row.append(point_add(row[-1], base))
        assert all(pt is not None for pt in row), "degenerate window table"
        tables.append(row)
        for _ in range(WINDOW_BITS):
            base = point_add(base, base)
    neg_offset = point_negate(generator_mul(offset_sum))
    return tables, neg_offset


# --- foreign-field machinery ----------------------------------------------


class Foreign:
    """A secp256k1 field element as 4 limb expressions with signed bounds."""

    __slots__ = ("limbs", "lo", "hi")

    def __init__(self, limbs: List[Lin], lo: int, hi: int):
        self.limbs = limbs
        self.lo = lo
        self.hi = hi

    @classmethod
    def from_vars(cls, variables: Sequence[int]) -> "Foreign":
        return cls([Lin.var(v) for v in variables], 0, LIMB_MASK)

    @classmethod
    def from_const(cls, value: int) -> "Foreign":
        limbs = [Lin.const(l) for l in scalar_to_limbs(value)]
        return cls(limbs, 0, LIMB_MASK)

    def magnitude(self) -> int:
        return max(abs(self.lo), abs(self.hi))


def _foreign_value(fv: Foreign, assignment: Sequence[int]) -> int:
    total = 0
    for i, limb in enumerate(fv.limbs):
        total += lift_signed(limb.eval_mod(assignment, SNARK_PRIME), SNARK_PRIME) << (
            LIMB_BITS * i
        )
    return total % SEC_P


def _alloc_foreign(builder: CircuitBuilder, variables: Sequence[int]) -> Foreign:
    for v in variables:
        builder.range_check(v, LIMB_BITS)
    return Foreign.from_vars(variables)


def _enforce_foreign_eq(
    builder: CircuitBuilder,
    prod_pairs: List[Tuple[Foreign, Foreign]],
    lin_terms: List[Tuple[Foreign, int]],
) -> None:
    """Enforce sum(a*b) + sum(sign*f) == 0 (mod secp256k1 prime).

    Products are materialized limb-by-limb; the whole relation is then
    checked as an exact integer identity against a quotient witness and a
    range-checked carry chain.  Every intermediate magnitude is asserted
    far below the SNARK prime so field wraparound cannot fake a zero.
    """
    positions: List[Lin] = [Lin() for _ in range(2 * N_LIMBS - 1)]
    lo = [0] * len(positions)
    hi = [0] * len(positions)

    for fa, fb in prod_pairs:
        bounds = [fa.lo * fb.lo, fa.lo * fb.hi, fa.hi * fb.lo, fa.hi * fb.hi]
        for i in range(N_LIMBS):
            for j in range(N_LIMBS):
                prod = builder.mul(fa.limbs[i], fb.limbs[j])
                positions[i + j] += Lin.var(prod)
                lo[i + j] += min(bounds)
                hi[i + j] += max(bounds)
    for fv, sign in lin_terms:
        for i in range(N_LIMBS):
            positions[i] += fv.limbs[i].scaled(sign)
            if sign > 0:
                lo[i] += sign * fv.lo
                hi[i] += sign * fv.hi
            else:
                lo[i] += sign * fv.hi
                hi[i] += sign * fv.lo

    # Constant K*p makes the identity value nonnegative for every witness
    # in bounds, so the quotient can be range-checked as unsigned.
    value_lo = sum(lo[k] << (LIMB_BITS * k) for k in range(len(positions)))
    value_hi = sum(hi[k] << (LIMB_BITS * k) for k in range(len(positions)))
    shift_k = (-value_lo + SEC_P - 1) // SEC_P if value_lo < 0 else 0
    shift_const = shift_k * SEC_P
    n_positions = max(
        len(positions),
        (shift_const.bit_length() + LIMB_BITS - 1) // LIMB_BITS if shift_const else 0,
    )
    while len(positions) < n_positions:
        positions.append(Lin())
        lo.append(0)
        hi.append(0)
    for k in range(len(positions)):
        limb = (shift_const >> (LIMB_BITS * k)) & LIMB_MASK
        if limb:
            positions[k] = positions[k].plus_const(limb)
            lo[k] += limb
            hi[k] += limb

    q_max = (value_hi + shift_const) // SEC_P
    q_bits = max(1, q_max.bit_length())
    widths = [LIMB_BITS] * (q_bits // LIMB_BITS)
    if q_bits % LIMB_BITS:
        widths.append(q_bits % LIMB_BITS)
    n_q = len(widths)

    n_positions = max(len(positions), n_q + N_LIMBS - 1)
    while len(positions) < n_positions:
        positions.append(Lin())
        lo.append(0)
        hi.append(0)

    sec_p_limbs = scalar_to_limbs(SEC_P)
    pre_lins = [lin for lin in positions]  # snapshot before quotient terms

    carry_bounds = []
    carry_prev = 0
    for k in range(n_positions - 1):
        # quotient contribution bounds at position k
        q_lo, q_hi = 0, 0
        for i in range(n_q):
            j = k - i
            if 0 <= j < N_LIMBS and sec_p_limbs[j]:
                q_hi += ((1 << widths[i]) - 1) * sec_p_limbs[j]
        mag = max(abs(lo[k] - q_hi), abs(hi[k] - q_lo)) + carry_prev
        bound = -(-mag // (1 << LIMB_BITS))
        carry_bounds.append(bound)
        carry_prev = bound
    assert all(
        (b << LIMB_BITS) < SNARK_PRIME // 4 for b in carry_bounds
    ), "carry magnitudes must stay far below the SNARK prime"

    def quotient_and_carries(assignment, _pre=tuple(pre_lins), _widths=tuple(widths)):
        values = [
            lift_signed(lin.eval_mod(assignment, SNARK_PRIME), SNARK_PRIME) for lin in _pre
        ]
        total = sum(v << (LIMB_BITS * k) for k, v in enumerate(values))
        if total < 0 or total % SEC_P:
            raise ValueError("unsatisfiable foreign-field relation")
        q = total // SEC_P
        outs = []
        taken = 0
        for w in _widths:
            outs.append((q >> taken) & ((1 << w) - 1))
            taken += w
        if q >> taken:
            raise ValueError("quotient out of range")
        q_limbs = outs[:]
        carry = 0
        for k in range(len(values) - 1):
            d = values[k] + carry
            for i in range(len(q_limbs)):
                j = k - i
                if 0 <= j < N_LIMBS:
                    d -= q_limbs[i] * sec_p_limbs[j]
            if d & LIMB_MASK:
                raise ValueError("unsatisfiable carry chain")
            carry = d >> LIMB_BITS
            outs.append(carry)
        return outs

    hint_vars = builder.witness_vars(n_q + n_positions - 1, quotient_and_carries)
    q_vars = hint_vars[:n_q]
    carry_vars = hint_vars[n_q:]
    for var, width in zip(q_vars, widths):
        builder.range_check(var, width)
    for var, bound in zip(carry_vars, carry_bounds):
        shift_bits = max(1, bound.bit_length())
        shifted = builder.materialize(Lin.var(var).plus_const(1 << shift_bits))
        builder.range_check(shifted, shift_bits + 1)

    for i in range(n_q):
        for j in range(N_LIMBS):
            if sec_p_limbs[j]:
                positions[i + j] -= Lin.var(q_vars[i], sec_p_limbs[j])

    prev_carry = Lin()
    for k in range(n_positions - 1):
        builder.enforce_zero(
            positions[k] + prev_carry - Lin.var(carry_vars[k], 1 << LIMB_BITS)
        )
        prev_carry = Lin.var(carry_vars[k])
    builder.enforce_zero(positions[n_positions - 1] + prev_carry)


def _ec_add(
    builder: CircuitBuilder, ax: Foreign, ay: Foreign, bx: Foreign, by: Foreign
) -> Tuple[Foreign, Foreign]:
    """Incomplete affine addition; assumes the operands differ in x."""

    def addition_values(assignment, _ops=(ax, ay, bx, by)):
        x1 = _foreign_value(_ops[0], assignment)
        y1 = _foreign_value(_ops[1], assignment)
        x2 = _foreign_value(_ops[2], assignment)
        y2 = _foreign_value(_ops[3], assignment)
        if x1 == x2:
            raise ValueError("degenerate incomplete addition")
        lam = (y2 - y1) * pow(x2 - x1, -1, SEC_P) % SEC_P
        x3 = (lam * lam - x1 - x2) % SEC_P
        y3 = (lam * (x1 - x3) - y1) % SEC_P
        return scalar_to_limbs(lam) + scalar_to_limbs(x3) + scalar_to_limbs(y3)

    hint_vars = builder.witness_vars(3 * N_LIMBS, addition_values)
    lam = _alloc_foreign(builder, hint_vars[:N_LIMBS])
    cx = _alloc_foreign(builder, hint_vars[N_LIMBS : 2 * N_LIMBS])
    cy = _alloc_foreign(builder, hint_vars[2 * N_LIMBS :])

    dx = Foreign(
        [bx.limbs[i] - ax.limbs[i] for i in range(N_LIMBS)],
        bx.lo - ax.hi,
        bx.hi - ax.lo,
    )
    # lam * (x2 - x1) - y2 + y1 == 0
    _enforce_foreign_eq(builder, [(lam, dx)], [(by, -1), (ay, 1)])
    # lam^2 - x1 - x2 - x3 == 0
    _enforce_foreign_eq(builder, [(lam, lam)], [(ax, -1), (bx, -1), (cx, -1)])
    # lam * (x1 - x3) - y1 - y3 == 0
    dxc = Foreign(
        [ax.limbs[i] - cx.limbs[i] for i in range(N_LIMBS)],
        ax.lo - cx.hi,
        ax.hi - cx.lo,
    )
    _enforce_foreign_eq(builder, [(lam, dxc)], [(ay, -1), (cy, -1)])
    return cx, cy


# --- statement sub-circuits -------------------------------------------------


def _enforce_scalar_below_group_order(builder: CircuitBuilder, limb_vars) -> None:
    """Borrow-chain comparison: recombined secret <= q - 1."""
    q1_limbs = scalar_to_limbs(SEC_Q - 1)

    def borrows(assignment):
        out = []
        borrow = 0
        for i in range(N_LIMBS):
            raw = q1_limbs[i] - assignment[limb_vars[i]] - borrow
            borrow = 1 if raw < 0 else 0
            out.append(borrow)
        if borrow:
            raise ValueError("secret exceeds the group order")
        return out[:-1]

    borrow_vars = builder.witness_vars(N_LIMBS - 1, borrows)
    for bv in borrow_vars:
        builder.boolean(bv)
    prev = Lin()
    for i in range(N_LIMBS):
        carry_out = Lin.var(borrow_vars[i], 1 << LIMB_BITS) if i < N_LIMBS - 1 else Lin()
        diff = builder.materialize(
            Lin.const(q1_limbs[i]) - Lin.var(limb_vars[i]) - prev + carry_out
        )
        builder.range_check(diff, LIMB_BITS)
        prev = Lin.var(borrow_vars[i]) if i < N_LIMBS - 1 else Lin()


def _poseidon_lin(builder: CircuitBuilder, state: List[Lin]) -> List[Lin]:
    half_full = pp.FULL_ROUNDS // 2
    for rnd in range(pp.FULL_ROUNDS + pp.PARTIAL_ROUNDS):
        state = [
            state[lane].plus_const(pp.ROUND_CONSTANTS[3 * rnd + lane]) for lane in range(3)
        ]
        full = rnd < half_full or rnd >= half_full + pp.PARTIAL_ROUNDS
        for lane in range(3 if full else 1):
            v = state[lane]
            v2 = Lin.var(builder.mul(v, v))
            v4 = Lin.var(builder.mul(v2, v2))
            state[lane] = Lin.var(builder.mul(v4, v))
        state = [
            state[0].scaled(pp.MDS[row][0])
            + state[1].scaled(pp.MDS[row][1])
            + state[2].scaled(pp.MDS[row][2])
            for row in range(3)
        ]
    return state


def _poseidon_commitment(builder: CircuitBuilder, limb_vars) -> Lin:
    state = [
        Lin.var(limb_vars[0]),
        Lin.var(limb_vars[1]),
        Lin.const(N_LIMBS),  # sponge arity tag, matches hashing.poseidon_hash
    ]
    state = _poseidon_lin(builder, state)
    state[0] += Lin.var(limb_vars[2])
    state[1] += Lin.var(limb_vars[3])
    return _poseidon_lin(builder, state)[0]


@lru_cache(maxsize=1)
def build_circuit() -> ConstraintSystem:
    """The full statement system; built once per process and reused."""
    builder = CircuitBuilder(SNARK_PRIME)
    public_vars = [builder.public_var() for _ in range(N_PUBLIC)]
    point_vars, commitment_var = public_vars[:8], public_vars[8]

    secret_vars = [builder.new_var() for _ in range(N_LIMBS)]
    bit_vars: List[int] = []
    for var in secret_vars:
        bit_vars.extend(builder.range_check(var, LIMB_BITS))
    _enforce_scalar_below_group_order(builder, secret_vars)

    tables, neg_offset = _window_tables()
    acc_x: Foreign = None
    acc_y: Foreign = None
    for w in range(N_WINDOWS):
        window_bits = bit_vars[WINDOW_BITS * w : WINDOW_BITS * (w + 1)]

        def one_hot(assignment, _bits=tuple(window_bits)):
            j = 0
            for t, bv in enumerate(_bits):
                j |= assignment[bv] << t
            out = [0] * WINDOW_SIZE
            out[j] = 1
            return out

        selectors = builder.witness_vars(WINDOW_SIZE, one_hot)
        sel_sum = Lin()
        sel_value = Lin()
        for j, sv in enumerate(selectors):
            builder.boolean(sv)
            sel_sum += Lin.var(sv)
            if j:
                sel_value += Lin.var(sv, j)
        builder.enforce_zero(sel_sum - ONE)
        window_value = Lin()
        for t, bv in enumerate(window_bits):
            window_value += Lin.var(bv, 1 << t)
        builder.enforce_zero(sel_value - window_value)

        limb_lins = []
        for coord in range(2):
            for limb_index in range(N_LIMBS):
                combo = Lin()
                for j, sv in enumerate(selectors):
                    coeff = scalar_to_limbs(tables[w][j][coord])[limb_index]
                    if coeff:
                        combo += Lin.var(sv, coeff)
                limb_lins.append(Lin.var(builder.materialize(combo)))
        sel_x = Foreign(limb_lins[:N_LIMBS], 0, LIMB_MASK)
        sel_y = Foreign(limb_lins[N_LIMBS:], 0, LIMB_MASK)

        if acc_x is None:
            acc_x, acc_y = sel_x, sel_y
        else:
            acc_x, acc_y = _ec_add(builder, acc_x, acc_y, sel_x, sel_y)

    final_x, final_y = _ec_add(
        builder,
        acc_x,
        acc_y,
        Foreign.from_const(neg_offset[0]),
        Foreign.from_const(neg_offset[1]),
    )
    for i in range(N_LIMBS):
        builder.enforce_zero(final_x.limbs[i] - Lin.var(point_vars[i]))
        builder.enforce_zero(final_y.limbs[i] - Lin.var(point_vars[N_LIMBS + i]))

    commitment = _poseidon_commitment(builder, secret_vars)
    builder.enforce_zero(commitment - Lin.var(commitment_var))
    return builder.finalize()


def circuit_report() -> dict:
    cs = build_circuit()
    return {
        "constraints": cs.num_constraints,
        "variables": cs.num_vars,
        "public_inputs": cs.num_public,
    }


def instance_for_secret(x: int) -> StatementInstance:
    x %= SEC_Q
    if x == 0:
        raise ValueError("secret must be nonzero")
    point = generator_mul(x)
    limbs = scalar_to_limbs(point[0]) + scalar_to_limbs(point[1])
    return StatementInstance(limbs, poseidon_hash(list(scalar_to_limbs(x))))


def generate_witness(x: int) -> Tuple[StatementInstance, StatementWitness, List[int]]:
    """Instance, witness and full satisfying assignment for a secret x.

    X is computed through the group-math path, independent from the limb
    arithmetic the circuit itself verifies, so the two act as mutual
    oracles.  x is canonically reduced first: x and x + q yield identical
    output.
    """
    x %= SEC_Q
    if x == 0:
        raise ValueError("secret must be nonzero")
    instance = instance_for_secret(x)
    witness = StatementWitness(scalar_to_limbs(x))
    assignment = assignment_for(instance, witness)
    return instance, witness, assignment


def assignment_for(instance: StatementInstance, witness: StatementWitness) -> List[int]:
    instance.validate()
    witness.validate()
    cs = build_circuit()
    primary = {}
    for i, value in enumerate(instance.point_limbs):
        primary[1 + i] = value
    primary[9] = instance.commitment
    for i, value in enumerate(witness.secret_limbs):
        primary[10 + i] = value
    return cs.complete_assignment(primary)
